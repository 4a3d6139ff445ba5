#include "halflap/field_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace halflap {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write_text(const std::filesystem::path& path, const std::string& text) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ConfigError("cannot open for writing: " + tmp.string());
        os << text;
        if (!os) throw ConfigError("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

void write_field_csv(const SampledField& f, const std::filesystem::path& path) {
    std::ostringstream os;
    const Grid& g = f.grid();
    os << (g.dim() == 1 ? "x,value\n" : "x1,x2,value\n");
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto c = g.coords(i);
        os << fmt_double(c[0]);
        if (g.dim() == 2) os << ',' << fmt_double(c[1]);
        os << ',' << fmt_double(f[i]) << '\n';
    }
    atomic_write_text(path, os.str());
}

SampledField read_field_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open field csv: " + path.string());
    std::string header;
    std::getline(is, header);
    const int n = header == "x,value" ? 1 : header == "x1,x2,value" ? 2 : 0;
    if (n == 0) throw ConfigError("unrecognised field csv header: " + header);

    std::vector<double> first_coord, values;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        std::vector<double> cols;
        while (std::getline(ls, tok, ',')) cols.push_back(std::stod(tok));
        if (cols.size() != static_cast<std::size_t>(n + 1))
            throw ConfigError("malformed field csv row: " + line);
        first_coord.push_back(cols[0]);
        values.push_back(cols.back());
    }
    if (values.empty()) throw ConfigError("empty field csv: " + path.string());

    const std::size_t total = values.size();
    std::size_t N = total;
    if (n == 2) {
        N = 1;
        while (N * N < total) ++N;
        if (N * N != total) throw ConfigError("field csv row count is not a square");
    }
    // Recover L from the first node (-L) assuming the documented layout.
    const double L = -first_coord.front();
    Grid g(n, static_cast<int>(N), L);
    return SampledField(g, std::move(values));
}

void write_field_binary(const SampledField& f, const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ConfigError("cannot open for writing: " + tmp.string());
        const std::int64_t n = f.grid().dim();
        const std::int64_t N = f.grid().points_per_axis();
        const double L = f.grid().half_extent();
        os.write(reinterpret_cast<const char*>(&n), 8);
        os.write(reinterpret_cast<const char*>(&N), 8);
        os.write(reinterpret_cast<const char*>(&L), 8);
        os.write(reinterpret_cast<const char*>(f.values().data()),
                 static_cast<std::streamsize>(f.size() * sizeof(double)));
        if (!os) throw ConfigError("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

SampledField read_field_binary(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("cannot open field binary: " + path.string());
    std::int64_t n = 0, N = 0;
    double L = 0.0;
    is.read(reinterpret_cast<char*>(&n), 8);
    is.read(reinterpret_cast<char*>(&N), 8);
    is.read(reinterpret_cast<char*>(&L), 8);
    if (!is) throw ConfigError("truncated field binary header: " + path.string());
    Grid g(static_cast<int>(n), static_cast<int>(N), L);
    std::vector<double> v(g.size());
    is.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(double)));
    if (!is) throw ConfigError("truncated field binary payload: " + path.string());
    return SampledField(g, std::move(v));
}

} // namespace halflap
