#ifndef HALFLAP_NORMS_HPP
#define HALFLAP_NORMS_HPP

#include <limits>

#include "halflap/field.hpp"

namespace halflap {

constexpr double kPInf = std::numeric_limits<double>::infinity();

/// (sum |f|^p h^n)^(1/p) by the rectangle rule; max |f| for p = inf.
double lp_norm(const SampledField& f, double p);

/// (sum exp(mu*|x|) |f|^p h^n)^(1/p). Overflowing sums come back as +inf.
double weighted_norm(const SampledField& f, double mu, double p);

/// Rectangle-rule inner product <f, g> h^n.
double inner_product(const SampledField& f, const SampledField& g);

/// max |f - g| over nodes (grids must match).
double linf_diff(const SampledField& f, const SampledField& g);

} // namespace halflap

#endif
