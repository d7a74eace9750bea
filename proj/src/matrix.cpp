#include "esymm/matrix.hpp"

#include <sstream>

#include "esymm/errors.hpp"

namespace esymm {

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch in add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector size mismatch in sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = Rational(1);
    return v;
}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DimensionError("ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat();
    Mat m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) throw DimensionError("ragged column list");
        for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::outer_form(const Vec& u, const Vec& w, const Mat& form) {
    if (w.size() != form.rows()) throw DimensionError("outer_form size mismatch");
    // row covector (form^T w)_b = sum_c w_c form_{cb}
    Vec cov(form.cols());
    for (std::size_t b = 0; b < form.cols(); ++b) {
        Rational s;
        for (std::size_t c = 0; c < form.rows(); ++c) s += w[c] * form.at(c, b);
        cov[b] = s;
    }
    Mat m(u.size(), cov.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < cov.size(); ++j) m.at(i, j) = u[i] * cov[j];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_col(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw DimensionError("set_col size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::operator-() const {
    Mat m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Rational Mat::trace() const {
    if (!is_square()) throw DimensionError("trace of non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Mat Mat::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw DimensionError("block out of range");
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
    return m;
}

void Mat::set_block(std::size_t i0, std::size_t j0, const Mat& m) {
    if (i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_)
        throw DimensionError("set_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) at(i0 + i, j0 + j) = m.at(i, j);
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix size mismatch in add");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix size mismatch in sub");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product shape mismatch: " + std::to_string(a.cols_) +
                             " vs " + std::to_string(b.rows_));
    Mat m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                m.at(i, j) += aik * b.at(k, j);
            }
        }
    return m;
}

Mat operator*(const Rational& c, const Mat& m) {
    Mat r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = c * m.a_[k];
    return r;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            s += at(i, j) * v[j];
        }
        r[i] = s;
    }
    return r;
}

Mat Mat::pow(std::size_t k) const {
    if (!is_square()) throw DimensionError("power of non-square matrix");
    Mat r = identity(rows_);
    for (std::size_t i = 0; i < k; ++i) r = r * *this;
    return r;
}

namespace {

// Row-reduce [m | rhs] in place; returns pivot columns of m.
std::vector<std::size_t> eliminate(Mat& m, Mat* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
            if (rhs)
                for (std::size_t j = 0; j < rhs->cols(); ++j) std::swap(rhs->at(p, j), rhs->at(r, j));
        }
        Rational inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        if (rhs)
            for (std::size_t j = 0; j < rhs->cols(); ++j) rhs->at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
            if (rhs)
                for (std::size_t j = 0; j < rhs->cols(); ++j) rhs->at(i, j) -= f * rhs->at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Mat Mat::solve(const Mat& rhs) const {
    if (!is_square()) throw DimensionError("solve requires a square matrix");
    if (rhs.rows_ != rows_) throw DimensionError("solve rhs shape mismatch");
    Mat m = *this;
    Mat x = rhs;
    auto pivots = eliminate(m, &x);
    if (pivots.size() != rows_)
        throw SingularMatrixError(pivots.size(),
                                  "singular system: rank " + std::to_string(pivots.size()) +
                                      " of " + std::to_string(rows_));
    return x;
}

Vec Mat::solve_vec(const Vec& rhs) const {
    Mat r(rhs.size(), 1);
    for (std::size_t i = 0; i < rhs.size(); ++i) r.at(i, 0) = rhs[i];
    return solve(r).col(0);
}

Mat Mat::inverse() const { return solve(identity(rows_)); }

std::size_t Mat::rank() const {
    Mat m = *this;
    return eliminate(m, nullptr).size();
}

std::vector<Vec> Mat::nullspace() const {
    Mat m = *this;
    auto pivots = eliminate(m, nullptr);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_);
        v[f] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Rational> char_poly(const Mat& a) {
    if (!a.is_square()) throw DimensionError("char_poly of non-square matrix");
    std::size_t n = a.rows();
    std::vector<Rational> c(n);
    Mat m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        c[k - 1] = -(m.trace() / Rational(static_cast<long>(k)));
        if (k == n) break;
        Mat shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[k - 1];
        m = a * shifted;
    }
    return c;
}

bool is_nilpotent(const Mat& a) {
    for (const auto& c : char_poly(a))
        if (!c.is_zero()) return false;
    return true;
}

std::size_t span_rank(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return 0;
    return Mat::from_rows(vectors).rank();
}

bool in_span(const std::vector<Vec>& vectors, const Vec& v) {
    if (vec_is_zero(v)) return true;
    auto rows = vectors;
    std::size_t base = span_rank(rows);
    rows.push_back(v);
    return span_rank(rows) == base;
}

} // namespace esymm
