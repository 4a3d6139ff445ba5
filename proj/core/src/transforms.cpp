#include "halflap/transforms.hpp"

#include <fftw3.h>

#include <mutex>

namespace halflap {

namespace {

// FFTW's planner is not thread-safe; execution on distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// Unnormalized c2c DFT in place of buf (row-major for n = 2).
void run_fft(int n, int N, std::vector<std::complex<double>>& buf, int sign) {
    auto* ptr = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = (n == 1)
                   ? fftw_plan_dft_1d(N, ptr, ptr, sign, FFTW_ESTIMATE)
                   : fftw_plan_dft_2d(N, N, ptr, ptr, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

// (-1)^(k1+..+kn) for the flat slot; k and the slot index have equal parity.
double node_phase(int n, int N, std::size_t flat) {
    int parity;
    if (n == 1) {
        parity = static_cast<int>(flat) & 1;
    } else {
        const auto Nz = static_cast<std::size_t>(N);
        parity = static_cast<int>((flat / Nz + flat % Nz) & 1);
    }
    return parity ? -1.0 : 1.0;
}

} // namespace

SpectralField forward_transform(const SampledField& f) {
    const Grid& g = f.grid();
    const int n = g.dim(), N = g.points_per_axis();
    std::vector<std::complex<double>> buf(f.size());
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = f[i];
    run_fft(n, N, buf, FFTW_FORWARD);
    const double scale = 1.0 / static_cast<double>(g.size());
    for (std::size_t i = 0; i < buf.size(); ++i)
        buf[i] *= scale * node_phase(n, N, i);
    return SpectralField(g, std::move(buf));
}

SampledField inverse_transform(const SpectralField& F) {
    const Grid& g = F.grid();
    const int n = g.dim(), N = g.points_per_axis();
    std::vector<std::complex<double>> buf(F.size());
    for (std::size_t i = 0; i < buf.size(); ++i)
        buf[i] = F.coefficients()[i] * node_phase(n, N, i);
    run_fft(n, N, buf, FFTW_BACKWARD);
    std::vector<double> out(buf.size());
    for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
    return SampledField(g, std::move(out));
}

SampledField apply_multiplier(
    const SampledField& f,
    const std::function<std::complex<double>(const SpectralField&, std::size_t)>& m) {
    SpectralField F = forward_transform(f);
    auto& c = F.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= m(F, i);
    return inverse_transform(F);
}

double spectral_tail_ratio(const SampledField& f) {
    SpectralField F = forward_transform(f);
    const int N = f.grid().points_per_axis();
    const int n = f.grid().dim();
    const int cut = (3 * N) / 8;
    double peak = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) {
        const double a = std::abs(F.coefficients()[i]);
        peak = std::max(peak, a);
        bool high = false;
        if (n == 1) {
            high = std::abs(F.wavevector(static_cast<int>(i))) >= cut;
        } else {
            const auto Nz = static_cast<std::size_t>(N);
            high = std::abs(F.wavevector(static_cast<int>(i / Nz))) >= cut ||
                   std::abs(F.wavevector(static_cast<int>(i % Nz))) >= cut;
        }
        if (high) tail = std::max(tail, a);
    }
    return peak > 0.0 ? tail / peak : 0.0;
}

SampledField sample(const std::function<double(double)>& f, const Grid& grid) {
    if (grid.dim() != 1) throw ConfigError("sample: 1-argument function on a 2-d grid");
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.node(static_cast<int>(i)));
    return SampledField(grid, std::move(v));
}

SampledField sample2(const std::function<double(double, double)>& f, const Grid& grid) {
    if (grid.dim() != 2) throw ConfigError("sample2: 2-argument function on a 1-d grid");
    std::vector<double> v(grid.size());
    const int N = grid.points_per_axis();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            v[static_cast<std::size_t>(i) * N + j] = f(grid.node(i), grid.node(j));
    return SampledField(grid, std::move(v));
}

} // namespace halflap
