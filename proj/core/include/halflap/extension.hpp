#ifndef HALFLAP_EXTENSION_HPP
#define HALFLAP_EXTENSION_HPP

#include <optional>
#include <vector>

#include "halflap/decay_fit.hpp"
#include "halflap/fractional.hpp"

namespace halflap {

/// Values of the harmonic extension on grid x {y_1 < ... < y_M}, y_m > 0,
/// together with the boundary trace that generated (or accompanies) it.
class HalfSpaceField {
public:
    HalfSpaceField(SampledField boundary, std::vector<double> heights,
                   std::vector<double> values);

    const Grid& grid() const { return boundary_.grid(); }
    const SampledField& boundary() const { return boundary_; }
    const std::vector<double>& heights() const { return heights_; }
    std::size_t slice_count() const { return heights_.size(); }

    /// Row-major slice m: values over the boundary grid at height y_m.
    const double* slice(std::size_t m) const {
        return values_.data() + m * boundary_.size();
    }
    SampledField slice_field(std::size_t m) const;

    double max_abs() const;

private:
    SampledField boundary_;
    std::vector<double> heights_;
    std::vector<double> values_; // M x N^n
};

/// Ball data for the interpolation estimates: center x0 on the boundary
/// hyperplane and radius R >= 1; B_{16R} must fit inside the box.
struct BallSpec {
    double x0 = 0.0;  // first boundary coordinate of the center
    double x0_2 = 0.0; // second coordinate, n = 2 only
    double radius = 1.0;
};

/// Geometric default heights y_m = y1 * rho^(m-1).
std::vector<double> geometric_heights(double y1, double rho, int count);
std::vector<double> uniform_heights(double y_max, int count);

/// Harmonic extension to the given heights: slice coefficients
/// exp(-|xi| y) * u_hat.
HalfSpaceField extend(const SampledField& u, const std::vector<double>& heights);

/// Dirichlet-to-Neumann map -lim_{y->0} d_y of the extension, computed
/// directly from the closed-form y-derivative of the extension kernel
/// (an independent code path from half_laplacian).
SampledField dtn_map(const SampledField& u);

/// One-sided difference -(u(., y1) - u)/y1 from the first slice. O(y1)
/// accurate; warns when y1 exceeds the grid spacing.
SampledField finite_difference_dtn(const HalfSpaceField& hf, OpDiagnostics* diag = nullptr);

struct ContractionCheck {
    std::vector<double> ratios; // ||u~(., y_m)||_2 / ||u||_2
    bool trivial = false;       // ||u||_2 = 0
};
ContractionCheck check_l2_contraction(const SampledField& u, const HalfSpaceField& hf);

/// Max interior residual of the (n+1)-dimensional 5/7-point discrete
/// Laplacian, scaled by ||u~||_inf. Heights must be uniform (resampled by
/// cubic interpolation in y when they are not). Requires >= 3 heights.
double harmonic_residual(const HalfSpaceField& hf);

/// Quantities of the interpolation inequality on balls at x0:
///   lhs      = ||u~||_{L2(B+_{cR})}
///   bracketA = ||u~||_{L2(B+_{16R})} + R^{1/2} ||u||_{L2(B'_{16R})}
///   bracketB = R^{3/2} ||dtn||_{L2(B'_{16R})} + R^{1/2} ||u||_{L2(B'_{16R})}
/// alpha_star solves lhs = A^a B^(1-a); undefined when the brackets are
/// degenerate (equal or zero).
struct ThreeBallResult {
    double lhs = 0.0;
    double bracketA = 0.0;
    double bracketB = 0.0;
    double alpha_star = 0.0;
    bool degenerate = false;
    double c = 0.25;
};
ThreeBallResult three_ball_check(const HalfSpaceField& hf, const BallSpec& ball,
                                 const SampledField& dtn, double c = 0.25);

/// Sup-norm counterpart: lhs_sup = ||u~||_{Linf(B+_{cR})}, rhs_core =
/// A^alpha B^(1-alpha) + R^{3/2} ||dtn||_{Lp(B'_R)}, and the observed
/// constant C_emp = lhs_sup / rhs_core.
struct SupBoundResult {
    double lhs_sup = 0.0;
    double rhs_core = 0.0;
    double c_emp = 0.0;
    double alpha_used = 0.0;
};
SupBoundResult sup_bound_check(const HalfSpaceField& hf, const BallSpec& ball,
                               const SampledField& dtn, double p, double alpha,
                               double c = 0.25);

/// Shell sups S(R) = sup { |u~(x,y)| : |(x,y)| in [R, R+h), y >= 0 } of a
/// half-space field, R up to 0.8 * min(L, y_M), shell width one grid step.
std::vector<DecayShell> bulk_decay_shells(const HalfSpaceField& hf);

/// |u~(0, y)| against y (the column above the origin).
std::vector<DecayShell> axis_decay_shells(const HalfSpaceField& hf);

/// Extend u and fit the shell decay; requires at least 6 shells in the
/// fit window. The profile records both the stretched-exponential fit and
/// the power-law fallback.
DecayProfile boundary_to_bulk(const SampledField& u, double lambda,
                              const std::vector<double>& heights);

} // namespace halflap

#endif
