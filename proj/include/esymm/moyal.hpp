#pragma once

#include <vector>

#include "esymm/lambda_map.hpp"
#include "esymm/poly.hpp"
#include "esymm/surface.hpp"
#include "esymm/symp_space.hpp"

namespace esymm {

/// A finite nu-graded star-product result.  For polynomial inputs the
/// series terminates; the nu-degree never exceeds min(deg u, deg v).
struct StarSeries {
    MultiPoly series;
    std::uint32_t max_nu = 0;
};

/// The Moyal product on the ambient space:
///   u * v = sum_r (nu/2)^r / r! sum Omega^{i1 j1} ... Omega^{ir jr}
///           d_{i1..ir} u d_{j1..jr} v
/// with Omega^{ij} the plain inverse of the ambient form (the single sign
/// convention everything else follows).  Exact; nu-graded inputs allowed.
StarSeries moyal_star(const SympSpace& space, const MultiPoly& u, const MultiPoly& v);

/// {u, v} = sum_{ij} Omega^{ij} d_i u d_j v, same inverse convention.
MultiPoly poisson_bracket(const SympSpace& space, const MultiPoly& u, const MultiPoly& v);

/// Hamiltonian vector-field components of the i-th defining function:
/// X_{F_i}(z) = -(A_i z + a_i), one linear polynomial per coordinate.
std::vector<MultiPoly> hamiltonian_field(const SurfaceSpec& surf, std::size_t i);

/// Projection onto the surface along the integral leaves of the hamiltonian
/// fields, available for the product-free class (C_i C_j = 0, normal
/// operators zero).  Components are ambient polynomials; idempotence and
/// F_i after pi = 0 are verified as exact polynomial identities at build.
class FoliationProjection {
public:
    static FoliationProjection build(SurfaceSpec surf);

    const SurfaceSpec& surface() const { return surf_; }
    const std::vector<MultiPoly>& components() const { return comps_; }
    /// Graph polynomials u^j(x) in the 2n tangent variables.
    const std::vector<MultiPoly>& graph() const { return graph_; }

    /// Pullback of a function of the tangent coordinates: f o pi, an
    /// ambient polynomial annihilated by every hamiltonian field.
    MultiPoly pullback(const MultiPoly& f) const;
    /// Restriction of an ambient polynomial to the surface, expressed in
    /// tangent (graph) coordinates.
    MultiPoly restrict_to_surface(const MultiPoly& g) const;

private:
    explicit FoliationProjection(SurfaceSpec surf) : surf_(std::move(surf)) {}
    SurfaceSpec surf_;
    std::vector<MultiPoly> comps_;
    std::vector<MultiPoly> graph_;
};

/// Induced star product on the surface: restrict the ambient Moyal product
/// of the two pullbacks, in graph coordinates.
StarSeries induced_star(const FoliationProjection& proj, const MultiPoly& f, const MultiPoly& g);

/// X_{F_i}(u * v) = (X_{F_i} u) * v + u * (X_{F_i} v) for every i, exactly.
bool derivation_property_check(const SurfaceSpec& surf, const MultiPoly& u, const MultiPoly& v);

/// Invariance of the induced product under the transvection determined by
/// (x, t): (f o psi) *_S (g o psi) = (f *_S g) o psi in graph coordinates.
bool transvection_invariance_check(const FoliationProjection& proj, const LambdaMap& lm,
                                   const MultiPoly& f, const MultiPoly& g, const Vec& x,
                                   const Rational& t);

/// The polynomial substitution implementing a transvection on graph
/// coordinates: x -> tangent part of psi(x, graph(x)).
std::vector<MultiPoly> transvection_on_graph(const FoliationProjection& proj, const LambdaMap& lm,
                                             const Vec& x, const Rational& t);

} // namespace esymm
