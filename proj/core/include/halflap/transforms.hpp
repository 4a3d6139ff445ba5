#ifndef HALFLAP_TRANSFORMS_HPP
#define HALFLAP_TRANSFORMS_HPP

#include "halflap/field.hpp"

namespace halflap {

/// DFT pair with frequency convention xi = pi*k/L on the box [-L, L)^n:
///   f(x) = sum_k c_k exp(i xi_k . x),  c_k = N^-n sum_j f(x_j) exp(-i xi_k . x_j).
/// The -L node offset shows up as a (-1)^(k1+..+kn) phase on top of the
/// plain DFT; both directions apply it so the pair is exactly inverse.
SpectralField forward_transform(const SampledField& f);
SampledField inverse_transform(const SpectralField& F);

/// Apply a spectral multiplier m(flat slot) and return the transformed
/// real field: inverse(m .* forward(f)).
SampledField apply_multiplier(const SampledField& f,
                              const std::function<std::complex<double>(const SpectralField&, std::size_t)>& m);

/// max |c_k| over the top frequency band (any axis slot with |k| >= 3N/8)
/// divided by max |c_k| overall; ~0 for well-resolved smooth fields.
double spectral_tail_ratio(const SampledField& f);

} // namespace halflap

#endif
