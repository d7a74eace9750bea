#pragma once

#include <vector>

#include "esymm/lambda_map.hpp"
#include "esymm/poly.hpp"
#include "esymm/surface.hpp"

namespace esymm {

/// exp(A) = sum_k A^k / k! as a finite exact sum; A must be nilpotent.
Mat nilpotent_exp(const Mat& a);

/// Least k >= 1 with Lambda(x)^k = 0; the zero map reports 1.  Throws when
/// Lambda(x) is not nilpotent.
int nilpotency_degree(const LambdaMap& lm, const Vec& x);

/// Point of the one-parameter orbit through the origin, in block
/// coordinates: x_tilde on the tangent block, u_tilde in frame coordinates
/// of the normal block.
struct OrbitPoint {
    Rational t;
    Vec x_tilde;
    Vec u_tilde;
};

/// Computed two ways: the explicit shape-operator expansion in t and the
/// generic nilpotent exponential (exp(t Lambda) - 1)/Lambda applied to x.
/// Disagreement throws InternalCheckError; the result is checked exactly
/// against the defining surface equations.
OrbitPoint orbit_point(const LambdaMap& lm, const Vec& x, const Rational& t);

/// The transvection exp(t (Lambda(x), x)) as an exact affine map.
AffineMap transvection(const LambdaMap& lm, const Vec& x, const Rational& t);

/// Verifies the factorization of the transvection through two symmetries,
/// psi^x_t = S_{orbit(t/2)} after S_0, and the one-parameter group law
/// psi^x_t after psi^x_s = psi^x_{t+s}.
bool geodesic_symmetry_check(const LambdaMap& lm, const SurfaceSpec& surf, const Vec& x,
                             const Rational& t);

/// Agreement of "span of the second fundamental form is isotropic" with
/// "curvature at the base vanishes"; false signals an implementation bug.
bool check_flat_iff_isotropic(const LambdaMap& lm);

/// True when the curvature at the base point vanishes.
bool is_flat(const LambdaMap& lm);

/// For a flat family, the 2p quadratic polynomials u^k(x) (frame
/// coordinates, in the 2n tangent variables) whose graph is the surface.
std::vector<MultiPoly> flat_graph_form(const LambdaMap& lm);

/// Residuals of the defining quadratic surface equations at a point given in
/// block coordinates, using the family structure constants (zero B when the
/// family has none and products vanish or the family is flat).
std::vector<Rational> surface_equation_residuals(const LambdaMap& lm, const Vec& x_tilde,
                                                 const Vec& u_tilde);

} // namespace esymm
