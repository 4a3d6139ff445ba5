#ifndef HALFLAP_FAMILIES_HPP
#define HALFLAP_FAMILIES_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "halflap/field.hpp"

namespace halflap {

/// Named boundary-data families. The generator view lets experiments
/// re-sample the same function on enlarged boxes.
struct FieldSpec {
    std::string family = "zero"; // zero|lorentzian|exp_smooth|cos|gaussian|sharpness|file
    double lambda = 1.0;         // exp_smooth rate
    double k = 1.0;              // cos mode (physical frequency)
    double sigma = 1.0;          // gaussian width
    double alpha = 0.5;          // sharpness exponent
    std::string path;            // file source (csv or binary by extension)
};

/// Pointwise generator for analytic families; throws ConfigError for
/// "file" (no pointwise form) and unknown names.
std::function<double(double)> family_function(const FieldSpec& spec);

/// Sample the family on a grid (or load it, for "file").
SampledField make_field(const FieldSpec& spec, const Grid& grid);

/// Zero-mean random trigonometric polynomial with axis modes in
/// [k_lo, k_hi] (integer wavevectors), deterministic in the seed.
SampledField random_band_limited(const Grid& grid, int k_lo, int k_hi,
                                 std::uint64_t seed);

/// Band-limited sample shaped by a Gaussian envelope exp(-(x/width)^2);
/// decaying boundary data for the extension experiments.
SampledField random_band_limited_decaying(const Grid& grid, int k_lo, int k_hi,
                                          double width, std::uint64_t seed);

} // namespace halflap

#endif
