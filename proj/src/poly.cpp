#include "esymm/poly.hpp"

#include <algorithm>
#include <sstream>

#include "esymm/errors.hpp"

namespace esymm {

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto e : exps) d += e;
    return d;
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(Monomial{std::vector<std::uint32_t>(num_vars, 0), 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t i) {
    if (i >= num_vars) throw DimensionError("variable index out of range");
    MultiPoly p(num_vars);
    Monomial m{std::vector<std::uint32_t>(num_vars, 0), 0};
    m.exps[i] = 1;
    p.add_term(m, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::size_t num_vars, const std::vector<std::uint32_t>& exps,
                              const Rational& c, std::uint32_t nu) {
    if (exps.size() != num_vars) throw DimensionError("monomial exponent length mismatch");
    MultiPoly p(num_vars);
    p.add_term(Monomial{exps, nu}, c);
    return p;
}

MultiPoly MultiPoly::linear(const Vec& coeffs, const Rational& c0) {
    MultiPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Monomial m{std::vector<std::uint32_t>(coeffs.size(), 0), 0};
        m.exps[i] = 1;
        p.add_term(m, coeffs[i]);
    }
    p.add_term(Monomial{std::vector<std::uint32_t>(coeffs.size(), 0), 0}, c0);
    return p;
}

std::uint32_t MultiPoly::degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::uint32_t MultiPoly::max_nu_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.nu);
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.exps.size() != num_vars_) throw DimensionError("term exponent length mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (num_vars_ != o.num_vars_) throw DimensionError("polynomial variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (num_vars_ != o.num_vars_) throw DimensionError("polynomial variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars_ != b.num_vars_) throw DimensionError("polynomial variable count mismatch");
    MultiPoly r(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.exps, ma.nu + mb.nu};
            for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += mb.exps[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(num_vars_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, c * x);
    return r;
}

MultiPoly MultiPoly::nu_shifted(std::uint32_t k) const {
    MultiPoly r(num_vars_);
    for (const auto& [m, c] : terms_) {
        Monomial shifted{m.exps, m.nu + k};
        r.terms_.emplace(shifted, c);
    }
    return r;
}

MultiPoly MultiPoly::diff(std::size_t var) const {
    if (var >= num_vars_) throw DimensionError("diff variable index out of range");
    MultiPoly r(num_vars_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[var] == 0) continue;
        Monomial d = m;
        Rational factor(static_cast<long>(d.exps[var]));
        d.exps[var] -= 1;
        r.add_term(d, factor * c);
    }
    return r;
}

Rational MultiPoly::eval(const Vec& point, const Rational& nu) const {
    if (point.size() != num_vars_)
        throw DimensionError("evaluation point length mismatch");
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < num_vars_; ++i)
            for (std::uint32_t e = 0; e < m.exps[i]; ++e) t *= point[i];
        for (std::uint32_t e = 0; e < m.nu; ++e) t *= nu;
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& comps) const {
    if (comps.size() != num_vars_) throw DimensionError("compose needs one polynomial per variable");
    std::size_t out_vars = comps.empty() ? 0 : comps.front().num_vars();
    for (const auto& c : comps) {
        if (c.num_vars() != out_vars) throw DimensionError("compose component variable mismatch");
        if (c.max_nu_degree() != 0) throw DimensionError("compose components must be nu-free");
    }
    // power cache per variable
    std::vector<std::vector<MultiPoly>> powers(num_vars_);
    auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(out_vars, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * comps[i]);
        return cache[e];
    };
    MultiPoly r(out_vars);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = MultiPoly::constant(out_vars, c);
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (m.exps[i] > 0) t = t * power(i, m.exps[i]);
        r += t.nu_shifted(m.nu);
    }
    return r;
}

MultiPoly MultiPoly::nu_coefficient(std::uint32_t k) const {
    MultiPoly r(num_vars_);
    for (const auto& [m, c] : terms_)
        if (m.nu == k) r.terms_.emplace(Monomial{m.exps, 0}, c);
    return r;
}

MultiPoly MultiPoly::nu_truncated(std::uint32_t max_nu) const {
    MultiPoly r(num_vars_);
    for (const auto& [m, c] : terms_)
        if (m.nu <= max_nu) r.terms_.emplace(m, c);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (std::size_t i = 0; i < num_vars_; ++i) {
            if (m.exps[i] == 0) continue;
            os << "*z" << (i + 1);
            if (m.exps[i] > 1) os << "^" << m.exps[i];
        }
        if (m.nu > 0) {
            os << "*v";
            if (m.nu > 1) os << "^" << m.nu;
        }
    }
    return os.str();
}

MultiPoly apply_vector_field(const std::vector<MultiPoly>& comps, const MultiPoly& f) {
    if (comps.size() != f.num_vars())
        throw DimensionError("vector field needs one component per variable");
    MultiPoly r(f.num_vars());
    for (std::size_t a = 0; a < comps.size(); ++a) {
        if (comps[a].is_zero()) continue;
        MultiPoly d = f.diff(a);
        if (d.is_zero()) continue;
        r += comps[a] * d;
    }
    return r;
}

} // namespace esymm
