#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "esymm/matrix.hpp"

namespace esymm {

enum class Block { tangent, normal, ambient };

/// The ambient model: R^{2(n+p)} split into a tangent block R^{2n} and a
/// normal block R^{2p}, with block-diagonal symplectic form
/// omega0 (+) omegaN0.  Both blocks accept any invertible skew form; the
/// standard one is [[0, I], [-I, 0]].
class SympSpace {
public:
    SympSpace(std::size_t n, std::size_t p);
    SympSpace(std::size_t n, std::size_t p, Mat omega0, Mat omegaN0);

    std::size_t n() const { return n_; }
    std::size_t p() const { return p_; }
    std::size_t tangent_dim() const { return 2 * n_; }
    std::size_t normal_dim() const { return 2 * p_; }
    std::size_t dim() const { return 2 * (n_ + p_); }

    const Mat& omega0() const { return omega0_; }
    const Mat& omegaN0() const { return omegaN0_; }
    const Mat& omega() const { return omega_; }
    const Mat& omega_inv() const { return omega_inv_; }
    const Mat& omega0_inv() const { return omega0_inv_; }
    const Mat& omegaN0_inv() const { return omegaN0_inv_; }

    /// Ambient pairing Omega(u, v).
    Rational form(const Vec& u, const Vec& v) const;
    /// omega0 on tangent-block coordinates (length 2n).
    Rational form_tangent(const Vec& u, const Vec& v) const;
    /// omegaN0 on normal-block coordinates (length 2p).
    Rational form_normal(const Vec& u, const Vec& v) const;

    Vec embed_tangent(const Vec& x) const;
    Vec embed_normal(const Vec& u) const;
    Vec tangent_part(const Vec& z) const;
    Vec normal_part(const Vec& z) const;
    /// Ambient basis vector e_alpha of the tangent block.
    Vec tangent_basis_vector(std::size_t alpha) const;
    /// Ambient basis vector f_i of the normal block.
    Vec normal_basis_vector(std::size_t i) const;
    /// Dual normal vector f^i with Omega(f^i, f_j) = delta^i_j, ambient.
    Vec dual_normal(std::size_t i) const;

    /// The base symmetry S_0 = diag(-Id_{2n}, Id_{2p}).
    Mat s0() const;

    /// Infinitesimal form preservation: Omega_block * A symmetric.
    bool is_in_sp(const Mat& a, Block block) const;
    /// The residual Omega A + A^T Omega (zero exactly when a is in sp).
    Mat sp_residual(const Mat& a, Block block) const;

private:
    const Mat& block_form(Block block) const;
    std::size_t n_, p_;
    Mat omega0_, omegaN0_, omega_;
    Mat omega0_inv_, omegaN0_inv_, omega_inv_;
    Mat dual_normal_; // columns f^i in normal-block coordinates
};

/// Standard skew block [[0, I_m], [-I_m, 0]] of size 2m.
Mat standard_skew(std::size_t m);

/// Element (A, a) of the affine symplectic algebra: A in sp, a a vector.
struct AffineSympElement {
    Mat A;
    Vec a;

    /// [(Y, y), (Y', y')] = ([Y, Y'], Y y' - Y' y)
    AffineSympElement bracket(const AffineSympElement& o) const;
    Vec flatten() const;
};

/// Affine transformation z -> linear z + translation.
struct AffineMap {
    Mat linear;
    Vec translation;

    Vec apply(const Vec& z) const;
    /// this after other: z -> this(other(z)).
    AffineMap after(const AffineMap& other) const;
    static AffineMap identity(std::size_t dim);
    friend bool operator==(const AffineMap& a, const AffineMap& b) {
        return a.linear == b.linear && a.translation == b.translation;
    }
};

/// Omega-orthogonal projection onto span(W) along its Omega-perp.  Requires
/// the Gram matrix Omega(w_i, w_j) to be invertible ("W symplectic").
Mat symp_projection(const SympSpace& space, const std::vector<Vec>& w_basis);

/// The symmetry at x relative to W: the affine involution
/// y -> y - 2 p^W(y - x).
AffineMap symmetry_S(const SympSpace& space, const Vec& x, const std::vector<Vec>& w_basis);

/// Basis of the Omega-perp of span(W).
std::vector<Vec> omega_perp(const SympSpace& space, const std::vector<Vec>& w_basis);

} // namespace esymm
