#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esymm/lambda_map.hpp"
#include "esymm/poly.hpp"
#include "esymm/rng.hpp"
#include "esymm/symp_space.hpp"

namespace esymm {

/// The associative product u * v = B(u) v on the normal block, induced by
/// the normal operators of a stabilized family.
struct BulletAlgebra {
    Mat gram;             // form on the normal block in the a-basis
    std::vector<Mat> ops; // B(a_i) in a-basis coordinates

    Mat of(const Vec& u) const; // B(u) = sum u^i ops[i]
    Vec product(const Vec& u, const Vec& v) const;
    /// Checks associativity B(B(u)v) = B(u)B(v) and skewness of the form
    /// pairing on all basis pairs; throws ValidationError on failure.
    void validate() const;
};

/// A quadratic surface cut out by the hamiltonians of 2p affine symplectic
/// generators (A_i, a_i):  F_i(z) = 1/2 Omega(z, A_i z) - Omega(a_i, z).
class SurfaceSpec {
public:
    /// Validates all invariants: each A_i in sp(ambient), the a_i span a
    /// symplectic 2p-space, and the family is stabilized (exact structure
    /// constants exist).  Throws ValidationError with residuals otherwise.
    static SurfaceSpec build(SympSpace space, std::vector<AffineSympElement> generators);

    const SympSpace& space() const { return space_; }
    const std::vector<AffineSympElement>& generators() const { return gens_; }
    const std::vector<MultiPoly>& hamiltonians() const { return f_; }
    const MultiPoly& F(std::size_t i) const { return f_[i]; }
    const Mat& gram() const { return gram_; }
    const Mat& gram_inv() const { return gram_inv_; }
    const BStruct& b_struct() const { return b_; }

    bool membership(const Vec& z) const;

    /// Normal basis {A_i z + a_i} at a surface point and a basis of its
    /// Omega-perp (the tangent space).
    struct Split {
        std::vector<Vec> normal;
        std::vector<Vec> tangent;
    };
    Split tangent_normal_split(const Vec& z) const;

    /// The symmetry at x relative to the tangent space of the surface.
    AffineMap symmetry_at(const Vec& x) const;
    /// F_i(S_x y) = 0 for all i, for surface points x, y.
    bool verify_extrinsic_symmetry(const Vec& x, const Vec& y) const;

    struct ProductReport {
        bool anticommute = true;
        bool triples_zero = true;
        bool pairs_zero = true; // all A_i A_j = 0
        std::string detail;
        bool pass() const { return anticommute && triples_zero; }
    };
    /// A_i A_j + A_j A_i = 0 and A_i A_j A_k = 0, reported per identity.
    ProductReport verify_product_identities() const;

    BulletAlgebra bullet_product() const;

    /// True when the a_i all lie in the normal coordinate block; required
    /// for the shape-family reduction.
    bool frame_in_normal_block() const;
    /// Shape family (C_i = tangent restriction of A_i, frame = a-basis).
    /// Only available when frame_in_normal_block().
    ShapeFamily reduce_to_shape_family() const;

    /// Exact surface points: tangent coordinates are drawn from a small
    /// grid or the rng, the normal coordinates are solved for.  Every
    /// returned point satisfies membership exactly.
    std::vector<Vec> sample_points(std::size_t count, Rng& rng) const;
    /// Solves the normal coordinates over span(a_i) for a given tangent
    /// piece x in T_0 coordinates; returns the ambient point, or nullopt if
    /// the fixed-point iteration does not stabilize.
    std::optional<Vec> point_from_tangent(const Vec& t0_coords) const;

    /// Basis of T_0 = Omega-perp of span(a_i).
    const std::vector<Vec>& base_tangent_basis() const { return t0_basis_; }

private:
    explicit SurfaceSpec(SympSpace space) : space_(std::move(space)) {}
    SympSpace space_;
    std::vector<AffineSympElement> gens_;
    std::vector<MultiPoly> f_;
    Mat gram_, gram_inv_;
    BStruct b_;
    std::vector<Vec> t0_basis_;
};

/// The two quadratic level sets of the reduction lemma, as membership
/// predicates over (x, u) with x in tangent-block and u in normal-block
/// coordinates.  The maps are given by their values on the normal basis.
struct ReducedSets {
    SympSpace space;
    std::vector<Mat> b_ops; // B(f_i), normal block
    std::vector<Mat> c_ops; // C(f_i), tangent block

    /// 1/2 w0(x, C(f_i) x) + 1/2 wN(u, B(f_i) u) - wN(f_i, u) = 0 for all i.
    bool in_M(const Vec& x, const Vec& u) const;
    /// Same without the B term.
    bool in_N(const Vec& x, const Vec& u) const;
    Vec graph_normal(const Vec& x) const; // the unique u solving the N equations
    bool b_annihilates(const Vec& u) const; // B(f_i) u = 0 for all i
};

/// Checks the reduction lemma's hypotheses (B(B(u)v) = B(u)B(v),
/// C(B(u)v) = C(u)C(v) = 0), then verifies M = N on a rational grid of
/// tangent pieces plus seeded random points, including the consequence
/// B(.) u = 0 at every sampled point of M.  Throws ValidationError when the
/// hypotheses fail; returns true when no counterexample was found.
bool verify_lemma_MN(const ReducedSets& sets, std::size_t random_count, Rng& rng);

} // namespace esymm
