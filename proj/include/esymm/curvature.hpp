#pragma once

#include <vector>

#include "esymm/matrix.hpp"
#include "esymm/symp_space.hpp"

namespace esymm {

/// Algebraic symplectic curvature tensor on the tangent block: a 4-index
/// array R(x, y, z, t), antisymmetric in (x, y), symmetric in (z, t), with
/// vanishing cyclic sum over (x, y, z).
class CurvatureTensor {
public:
    explicit CurvatureTensor(std::size_t dim)
        : dim_(dim), r_(dim * dim * dim * dim) {}

    std::size_t dim() const { return dim_; }
    const Rational& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        return r_[((a * dim_ + b) * dim_ + c) * dim_ + d];
    }
    Rational& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        return r_[((a * dim_ + b) * dim_ + c) * dim_ + d];
    }

    bool is_zero() const;
    friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) {
        return a.dim_ == b.dim_ && a.r_ == b.r_;
    }
    CurvatureTensor operator-(const CurvatureTensor& o) const;
    CurvatureTensor scaled(const Rational& c) const;
    CurvatureTensor operator+(const CurvatureTensor& o) const;

    /// Throws ValidationError unless all three defining symmetries hold.
    void validate() const;

    /// Pushforward by the linear map s: (s.R)(X,...) = R(s^{-1}X, ...).
    CurvatureTensor transformed(const Mat& s_inv) const;

private:
    std::size_t dim_;
    std::vector<Rational> r_;
};

/// phi(A ^ B)(X,Y,Z,T) = w(BY,Z)w(AX,T) - w(AY,Z)w(BX,T)
///                     - w(BX,Z)w(AY,T) + w(AX,Z)w(BY,T),
/// the equivariant identification of Lambda^2 sp with curvature tensors.
/// Inputs must lie in sp of the tangent block.
CurvatureTensor phi_map(const SympSpace& space, const Mat& a, const Mat& b);

/// ric(X, Y) = Tr[Z -> R(X, Z)Y], returned as a bilinear-form matrix on the
/// tangent block.  For R = phi(A ^ B) this equals -w([A,B] X, Y).
Mat ricci(const SympSpace& space, const CurvatureTensor& r);

} // namespace esymm
