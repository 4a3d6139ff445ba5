#ifndef HALFLAP_FIELD_IO_HPP
#define HALFLAP_FIELD_IO_HPP

#include <filesystem>
#include <string>

#include "halflap/field.hpp"

namespace halflap {

/// CSV layout: header "x,value" (n = 1) or "x1,x2,value" (n = 2), one node
/// per row, row-major, %.17g floats.
void write_field_csv(const SampledField& f, const std::filesystem::path& path);
SampledField read_field_csv(const std::filesystem::path& path);

/// Flat binary layout: little-endian int64 n, int64 N, float64 L header,
/// then N^n float64 values row-major.
void write_field_binary(const SampledField& f, const std::filesystem::path& path);
SampledField read_field_binary(const std::filesystem::path& path);

/// Write text atomically: temp file in the target directory, then rename.
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

/// %.17g rendering used for all numeric text output.
std::string fmt_double(double v);

} // namespace halflap

#endif
