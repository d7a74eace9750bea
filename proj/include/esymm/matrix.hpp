#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "esymm/rational.hpp"

namespace esymm {

using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

/// Dense matrix of exact rationals, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rational>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat from_cols(const std::vector<Vec>& cols);
    /// Rank-one map v -> u * form(w, v), the building block u (x) w-underline.
    static Mat outer_form(const Vec& u, const Vec& w, const Mat& form);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }
    Rational& operator()(std::size_t i, std::size_t j) { return at(i, j); }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_col(std::size_t j, const Vec& v);

    Mat transpose() const;
    Mat operator-() const;
    bool is_zero() const;
    Rational trace() const;

    Mat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
    void set_block(std::size_t i0, std::size_t j0, const Mat& m);

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { a += b; return a; }
    friend Mat operator-(Mat a, const Mat& b) { a -= b; return a; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Rational& c, const Mat& m);
    friend bool operator==(const Mat& a, const Mat& b);

    Vec apply(const Vec& v) const;
    Mat pow(std::size_t k) const;

    /// Exact solve m x = rhs for square invertible m; throws
    /// SingularMatrixError carrying the rank otherwise.
    Mat solve(const Mat& rhs) const;
    Vec solve_vec(const Vec& rhs) const;
    Mat inverse() const;

    std::size_t rank() const;
    /// Basis of the right kernel {v : m v = 0}.
    std::vector<Vec> nullspace() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Coefficients (c_1, ..., c_n) of det(lambda I - A) = lambda^n + c_1
/// lambda^{n-1} + ... + c_n, by the Faddeev-LeVerrier recursion.  A is
/// nilpotent exactly when every coefficient vanishes.
std::vector<Rational> char_poly(const Mat& a);

bool is_nilpotent(const Mat& a);

/// Rank of the span of a list of vectors.
std::size_t span_rank(const std::vector<Vec>& vectors);

/// True when v lies in the exact span of the given vectors.
bool in_span(const std::vector<Vec>& vectors, const Vec& v);

} // namespace esymm
