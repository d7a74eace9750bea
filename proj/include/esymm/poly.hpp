#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "esymm/matrix.hpp"
#include "esymm/rational.hpp"

namespace esymm {

/// Exponent vector plus the degree in the formal parameter nu.  nu is a
/// dedicated grading slot, not an ordinary variable, so truncating or
/// slicing a series by nu-degree is a linear scan.
struct Monomial {
    std::vector<std::uint32_t> exps;
    std::uint32_t nu = 0;

    std::uint32_t total_degree() const;
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.exps != b.exps) return a.exps < b.exps;
        return a.nu < b.nu;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps == b.exps && a.nu == b.nu;
    }
};

/// Sparse multivariate polynomial over Rational in a fixed number of
/// coordinates, with an extra nu-grading.  Zero coefficients are never
/// stored.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static MultiPoly constant(std::size_t num_vars, const Rational& c);
    static MultiPoly variable(std::size_t num_vars, std::size_t i);
    /// c * z^exps * nu^k
    static MultiPoly monomial(std::size_t num_vars, const std::vector<std::uint32_t>& exps,
                              const Rational& c, std::uint32_t nu = 0);
    /// The linear form sum_i coeffs[i] z_i + c0.
    static MultiPoly linear(const Vec& coeffs, const Rational& c0 = Rational());

    std::size_t num_vars() const { return num_vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Largest total degree in the z-variables (0 for the zero polynomial).
    std::uint32_t degree() const;
    std::uint32_t max_nu_degree() const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rational& c) const;
    /// Multiplies by nu^k.
    MultiPoly nu_shifted(std::uint32_t k) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    MultiPoly diff(std::size_t var) const;
    Rational eval(const Vec& point, const Rational& nu = Rational()) const;

    /// Substitutes z_i -> comps[i]; every component must share a variable
    /// count and be nu-free.  nu-powers of this polynomial pass through.
    MultiPoly compose(const std::vector<MultiPoly>& comps) const;

    /// Coefficient of nu^k as a nu-free polynomial.
    MultiPoly nu_coefficient(std::uint32_t k) const;
    MultiPoly nu_truncated(std::uint32_t max_nu) const;

    std::string str() const;

private:
    std::size_t num_vars_;
    std::map<Monomial, Rational> terms_;
};

/// Applies the vector field sum_a comps[a] d/dz_a as a derivation.
MultiPoly apply_vector_field(const std::vector<MultiPoly>& comps, const MultiPoly& f);

} // namespace esymm
