#include "esymm/symp_space.hpp"

#include "esymm/errors.hpp"

namespace esymm {

Mat standard_skew(std::size_t m) {
    Mat j(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        j.at(i, m + i) = Rational(1);
        j.at(m + i, i) = Rational(-1);
    }
    return j;
}

namespace {

void check_skew_invertible(const Mat& f, const char* name) {
    if (!f.is_square()) throw ValidationError(std::string(name) + " must be square");
    if (!(f.transpose() == -f)) throw ValidationError(std::string(name) + " must be skew-symmetric");
    if (f.rank() != f.rows())
        throw ValidationError(std::string(name) + " must be nondegenerate");
}

} // namespace

SympSpace::SympSpace(std::size_t n, std::size_t p)
    : SympSpace(n, p, standard_skew(n), standard_skew(p)) {}

SympSpace::SympSpace(std::size_t n, std::size_t p, Mat omega0, Mat omegaN0)
    : n_(n), p_(p), omega0_(std::move(omega0)), omegaN0_(std::move(omegaN0)) {
    if (n_ == 0) throw ValidationError("tangent block must be nontrivial (n >= 1)");
    if (omega0_.rows() != 2 * n_) throw ValidationError("omega0 has wrong size");
    if (omegaN0_.rows() != 2 * p_) throw ValidationError("omegaN0 has wrong size");
    check_skew_invertible(omega0_, "omega0");
    if (p_ > 0) check_skew_invertible(omegaN0_, "omegaN0");
    omega_ = Mat::zero(dim(), dim());
    omega_.set_block(0, 0, omega0_);
    if (p_ > 0) omega_.set_block(2 * n_, 2 * n_, omegaN0_);
    omega0_inv_ = omega0_.inverse();
    omegaN0_inv_ = p_ > 0 ? omegaN0_.inverse() : Mat();
    omega_inv_ = Mat::zero(dim(), dim());
    omega_inv_.set_block(0, 0, omega0_inv_);
    if (p_ > 0) omega_inv_.set_block(2 * n_, 2 * n_, omegaN0_inv_);
    // f^i = sum_k (omegaN0^{-1})_{ik} f_k
    dual_normal_ = p_ > 0 ? omegaN0_inv_.transpose() : Mat();
}

Rational SympSpace::form(const Vec& u, const Vec& v) const {
    if (u.size() != dim() || v.size() != dim())
        throw DimensionError("ambient pairing expects ambient vectors");
    Rational s;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (omega_.at(i, j).is_zero() || v[j].is_zero()) continue;
            s += u[i] * omega_.at(i, j) * v[j];
        }
    }
    return s;
}

Rational SympSpace::form_tangent(const Vec& u, const Vec& v) const {
    if (u.size() != tangent_dim() || v.size() != tangent_dim())
        throw DimensionError("tangent pairing expects tangent-block vectors");
    Rational s;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (omega0_.at(i, j).is_zero()) continue;
            s += u[i] * omega0_.at(i, j) * v[j];
        }
    return s;
}

Rational SympSpace::form_normal(const Vec& u, const Vec& v) const {
    if (u.size() != normal_dim() || v.size() != normal_dim())
        throw DimensionError("normal pairing expects normal-block vectors");
    Rational s;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (omegaN0_.at(i, j).is_zero()) continue;
            s += u[i] * omegaN0_.at(i, j) * v[j];
        }
    return s;
}

Vec SympSpace::embed_tangent(const Vec& x) const {
    if (x.size() != tangent_dim()) throw DimensionError("embed_tangent length mismatch");
    Vec z(dim());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i];
    return z;
}

Vec SympSpace::embed_normal(const Vec& u) const {
    if (u.size() != normal_dim()) throw DimensionError("embed_normal length mismatch");
    Vec z(dim());
    for (std::size_t i = 0; i < u.size(); ++i) z[2 * n_ + i] = u[i];
    return z;
}

Vec SympSpace::tangent_part(const Vec& z) const {
    if (z.size() != dim()) throw DimensionError("tangent_part expects ambient vector");
    return Vec(z.begin(), z.begin() + 2 * n_);
}

Vec SympSpace::normal_part(const Vec& z) const {
    if (z.size() != dim()) throw DimensionError("normal_part expects ambient vector");
    return Vec(z.begin() + 2 * n_, z.end());
}

Vec SympSpace::tangent_basis_vector(std::size_t alpha) const {
    if (alpha >= tangent_dim()) throw DimensionError("tangent basis index out of range");
    return unit_vec(dim(), alpha);
}

Vec SympSpace::normal_basis_vector(std::size_t i) const {
    if (i >= normal_dim()) throw DimensionError("normal basis index out of range");
    return unit_vec(dim(), 2 * n_ + i);
}

Vec SympSpace::dual_normal(std::size_t i) const {
    if (i >= normal_dim()) throw DimensionError("dual normal index out of range");
    return embed_normal(dual_normal_.col(i));
}

Mat SympSpace::s0() const {
    Mat s = Mat::identity(dim());
    for (std::size_t i = 0; i < tangent_dim(); ++i) s.at(i, i) = Rational(-1);
    return s;
}

const Mat& SympSpace::block_form(Block block) const {
    switch (block) {
        case Block::tangent: return omega0_;
        case Block::normal: return omegaN0_;
        case Block::ambient: return omega_;
    }
    throw DimensionError("unknown block");
}

Mat SympSpace::sp_residual(const Mat& a, Block block) const {
    const Mat& f = block_form(block);
    if (!a.is_square() || a.rows() != f.rows())
        throw DimensionError("sp membership: matrix size does not match block");
    return f * a + a.transpose() * f;
}

bool SympSpace::is_in_sp(const Mat& a, Block block) const {
    return sp_residual(a, block).is_zero();
}

AffineSympElement AffineSympElement::bracket(const AffineSympElement& o) const {
    return AffineSympElement{A * o.A - o.A * A, vec_sub(A.apply(o.a), o.A.apply(a))};
}

Vec AffineSympElement::flatten() const {
    Vec v;
    v.reserve(A.rows() * A.cols() + a.size());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) v.push_back(A.at(i, j));
    for (const auto& x : a) v.push_back(x);
    return v;
}

Vec AffineMap::apply(const Vec& z) const { return vec_add(linear.apply(z), translation); }

AffineMap AffineMap::after(const AffineMap& other) const {
    return AffineMap{linear * other.linear,
                     vec_add(linear.apply(other.translation), translation)};
}

AffineMap AffineMap::identity(std::size_t dim) {
    return AffineMap{Mat::identity(dim), zero_vec(dim)};
}

Mat symp_projection(const SympSpace& space, const std::vector<Vec>& w_basis) {
    if (w_basis.empty()) return Mat::zero(space.dim(), space.dim());
    Mat w = Mat::from_cols(w_basis);
    if (w.rows() != space.dim()) throw DimensionError("W basis must be ambient vectors");
    Mat wt_omega = w.transpose() * space.omega();
    Mat gram = wt_omega * w; // gram_{ij} = Omega(w_i, w_j)
    Mat coeffs;
    try {
        coeffs = gram.solve(wt_omega);
    } catch (const SingularMatrixError& e) {
        throw ValidationError("degenerate W: Omega-Gram matrix has rank " +
                              std::to_string(e.rank) + " of " + std::to_string(w_basis.size()));
    }
    return w * coeffs;
}

AffineMap symmetry_S(const SympSpace& space, const Vec& x, const std::vector<Vec>& w_basis) {
    if (x.size() != space.dim()) throw DimensionError("symmetry base point must be ambient");
    Mat p = symp_projection(space, w_basis);
    // y - 2 P (y - x) = (I - 2P) y + 2 P x
    Mat two_p = Rational(2) * p;
    Mat linear = Mat::identity(space.dim()) - two_p;
    return AffineMap{linear, two_p.apply(x)};
}

std::vector<Vec> omega_perp(const SympSpace& space, const std::vector<Vec>& w_basis) {
    if (w_basis.empty()) {
        std::vector<Vec> all;
        for (std::size_t i = 0; i < space.dim(); ++i) all.push_back(unit_vec(space.dim(), i));
        return all;
    }
    Mat w = Mat::from_cols(w_basis);
    return (w.transpose() * space.omega()).nullspace();
}

} // namespace esymm
