#include "esymm/curvature.hpp"

#include "esymm/errors.hpp"

namespace esymm {

bool CurvatureTensor::is_zero() const {
    for (const auto& x : r_)
        if (!x.is_zero()) return false;
    return true;
}

CurvatureTensor CurvatureTensor::operator-(const CurvatureTensor& o) const {
    if (dim_ != o.dim_) throw DimensionError("curvature tensor dimension mismatch");
    CurvatureTensor t(dim_);
    for (std::size_t k = 0; k < r_.size(); ++k) t.r_[k] = r_[k] - o.r_[k];
    return t;
}

CurvatureTensor CurvatureTensor::operator+(const CurvatureTensor& o) const {
    if (dim_ != o.dim_) throw DimensionError("curvature tensor dimension mismatch");
    CurvatureTensor t(dim_);
    for (std::size_t k = 0; k < r_.size(); ++k) t.r_[k] = r_[k] + o.r_[k];
    return t;
}

CurvatureTensor CurvatureTensor::scaled(const Rational& c) const {
    CurvatureTensor t(dim_);
    for (std::size_t k = 0; k < r_.size(); ++k) t.r_[k] = c * r_[k];
    return t;
}

void CurvatureTensor::validate() const {
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t c = 0; c < dim_; ++c)
                for (std::size_t d = 0; d < dim_; ++d) {
                    if (at(a, b, c, d) != -at(b, a, c, d))
                        throw ValidationError("curvature tensor not antisymmetric in (x, y)");
                    if (at(a, b, c, d) != at(a, b, d, c))
                        throw ValidationError("curvature tensor not symmetric in (z, t)");
                    Rational cyc = at(a, b, c, d) + at(b, c, a, d) + at(c, a, b, d);
                    if (!cyc.is_zero())
                        throw ValidationError("curvature tensor violates the first Bianchi identity");
                }
}

CurvatureTensor CurvatureTensor::transformed(const Mat& s_inv) const {
    if (s_inv.rows() != dim_) throw DimensionError("curvature transform size mismatch");
    CurvatureTensor t(dim_);
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t c = 0; c < dim_; ++c)
                for (std::size_t d = 0; d < dim_; ++d) {
                    Rational s;
                    for (std::size_t a2 = 0; a2 < dim_; ++a2) {
                        if (s_inv.at(a2, a).is_zero()) continue;
                        for (std::size_t b2 = 0; b2 < dim_; ++b2) {
                            if (s_inv.at(b2, b).is_zero()) continue;
                            for (std::size_t c2 = 0; c2 < dim_; ++c2) {
                                if (s_inv.at(c2, c).is_zero()) continue;
                                for (std::size_t d2 = 0; d2 < dim_; ++d2) {
                                    if (s_inv.at(d2, d).is_zero()) continue;
                                    s += s_inv.at(a2, a) * s_inv.at(b2, b) * s_inv.at(c2, c) *
                                         s_inv.at(d2, d) * at(a2, b2, c2, d2);
                                }
                            }
                        }
                    }
                    t.at(a, b, c, d) = s;
                }
    return t;
}

CurvatureTensor phi_map(const SympSpace& space, const Mat& a, const Mat& b) {
    if (!space.is_in_sp(a, Block::tangent) || !space.is_in_sp(b, Block::tangent))
        throw ValidationError("phi_map arguments must lie in sp of the tangent block");
    std::size_t d = space.tangent_dim();
    Mat wa(d, d), wb(d, d); // wa_{ij} = w(A e_i, e_j)
    for (std::size_t i = 0; i < d; ++i) {
        Vec ai = a.col(i), bi = b.col(i);
        for (std::size_t j = 0; j < d; ++j) {
            Rational sa, sb;
            for (std::size_t k = 0; k < d; ++k) {
                if (space.omega0().at(k, j).is_zero()) continue;
                sa += ai[k] * space.omega0().at(k, j);
                sb += bi[k] * space.omega0().at(k, j);
            }
            wa.at(i, j) = sa;
            wb.at(i, j) = sb;
        }
    }
    CurvatureTensor t(d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z)
                for (std::size_t s = 0; s < d; ++s)
                    t.at(x, y, z, s) = wb.at(y, z) * wa.at(x, s) - wa.at(y, z) * wb.at(x, s) -
                                       wb.at(x, z) * wa.at(y, s) + wa.at(x, z) * wb.at(y, s);
    t.validate();
    return t;
}

Mat ricci(const SympSpace& space, const CurvatureTensor& r) {
    std::size_t d = r.dim();
    if (d != space.tangent_dim()) throw DimensionError("ricci tensor dimension mismatch");
    // R(x, e_b) y as a vector v with sum_d v_d w(e_d, e_t) = R(x, b, y, t):
    // v = -omega0^{-1} R(x, b, y, .), and the trace picks component b.
    Mat ric(d, d);
    const Mat& w_inv = space.omega0_inv();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Rational s;
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t t = 0; t < d; ++t) {
                    if (w_inv.at(b, t).is_zero()) continue;
                    s += w_inv.at(b, t) * r.at(x, b, y, t);
                }
            ric.at(x, y) = -s;
        }
    return ric;
}

} // namespace esymm
