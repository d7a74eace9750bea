#include "esymm/codim2.hpp"

#include <cmath>
#include <sstream>

#include "esymm/errors.hpp"

namespace esymm {

namespace {

Mat rond(const Mat& omega0, const Vec& u, const Vec& v) {
    return Mat::outer_form(u, v, omega0) + Mat::outer_form(v, u, omega0);
}

Rational pair_w(const Mat& omega0, const Vec& u, const Vec& v) {
    Rational s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (omega0.at(i, j).is_zero() || v[j].is_zero()) continue;
            s += u[i] * omega0.at(i, j) * v[j];
        }
    }
    return s;
}

/// The two endomorphism-valued identities for a basis pair (x, y).
std::pair<Mat, Mat> p1_residual_pair(const Codim2Instance& inst, const Vec& x, const Vec& y) {
    Mat omega0 = standard_skew(inst.n);
    const Mat& c1 = inst.c1;
    const Mat& c2 = inst.c2;
    Mat c1c1 = c1 * c1, c1c2 = c1 * c2, c2c1 = c2 * c1, c2c2 = c2 * c2;

    Vec c1sq_x = c1c1.apply(x), c1sq_y = c1c1.apply(y);
    Vec c1c2_x = c1c2.apply(x), c1c2_y = c1c2.apply(y);
    Vec c2c1_x = c2c1.apply(x), c2c1_y = c2c1.apply(y);
    Vec c2sq_x = c2c2.apply(x), c2sq_y = c2c2.apply(y);
    Vec c1x = c1.apply(x), c1y = c1.apply(y), c2x = c2.apply(x), c2y = c2.apply(y);

    Mat ra = rond(omega0, c1sq_x, c2y) - rond(omega0, c1c2_x, c1y) - rond(omega0, c1sq_y, c2x) +
             rond(omega0, c1c2_y, c1x) +
             pair_w(omega0, vec_add(c1c2_y, c2c1_y), x) * c1 -
             (Rational(2) * pair_w(omega0, c1sq_y, x)) * c2;

    Mat rb = rond(omega0, c2c1_x, c2y) - rond(omega0, c2sq_x, c1y) - rond(omega0, c2c1_y, c2x) +
             rond(omega0, c2sq_y, c1x) +
             (Rational(2) * pair_w(omega0, c2sq_y, x)) * c1 -
             pair_w(omega0, vec_add(c2c1_y, c1c2_y), x) * c2;
    return {std::move(ra), std::move(rb)};
}

} // namespace

bool check_p1_equations(const Codim2Instance& inst) {
    std::size_t d = 2 * inst.n;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            auto [ra, rb] = p1_residual_pair(inst, unit_vec(d, a), unit_vec(d, b));
            if (!ra.is_zero() || !rb.is_zero()) return false;
        }
    return true;
}

double p1_residual_float(const Codim2Instance& inst) {
    std::size_t d = 2 * inst.n;
    double total = 0.0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            auto [ra, rb] = p1_residual_pair(inst, unit_vec(d, a), unit_vec(d, b));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    double va = ra.at(i, j).to_double();
                    double vb = rb.at(i, j).to_double();
                    total += va * va + vb * vb;
                }
        }
    return std::sqrt(total);
}

ShapeFamily family_from_instance(const Codim2Instance& inst) {
    return ShapeFamily(SympSpace(inst.n, 1), {inst.c1, inst.c2});
}

std::string verdict_name(Codim2Verdict v) {
    switch (v) {
        case Codim2Verdict::flat: return "flat";
        case Codim2Verdict::products_zero: return "products_zero";
        case Codim2Verdict::violation: return "violation";
    }
    return "?";
}

Codim2Verdict classify(const Codim2Instance& inst) {
    if (!check_p1_equations(inst))
        throw ValidationError("classify expects a solution of the p = 1 equations");
    LambdaMap lm = LambdaMap::build(family_from_instance(inst));
    if (curvature_at_base(lm).is_zero()) return Codim2Verdict::flat;
    bool products = (inst.c1 * inst.c1).is_zero() && (inst.c1 * inst.c2).is_zero() &&
                    (inst.c2 * inst.c1).is_zero() && (inst.c2 * inst.c2).is_zero();
    if (products) return Codim2Verdict::products_zero;
    return Codim2Verdict::violation;
}

namespace {

Mat random_sp_matrix(Rng& rng, std::size_t n, long mag) {
    Mat a(n, n), b(n, n), c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a.at(i, j) = Rational(rng.int_in(-mag, mag));
            b.at(i, j) = Rational(rng.int_in(-mag, mag));
            c.at(i, j) = Rational(rng.int_in(-mag, mag));
        }
    Mat out(2 * n, 2 * n);
    out.set_block(0, 0, a);
    out.set_block(0, n, b + b.transpose());
    out.set_block(n, 0, c + c.transpose());
    out.set_block(n, n, -a.transpose());
    return out;
}

Mat random_symplectic_matrix(Rng& rng, std::size_t n) {
    Mat s = Mat::identity(2 * n);
    for (int f = 0; f < 2; ++f) {
        Mat b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b.at(i, j) = Rational(rng.int_in(-1, 1));
        Mat sym = b + b.transpose();
        Mat nil(2 * n, 2 * n);
        if (rng.coin())
            nil.set_block(0, n, sym);
        else
            nil.set_block(n, 0, sym);
        s = s * (Mat::identity(2 * n) + nil);
    }
    return s;
}

Vec random_nonzero_vec(Rng& rng, std::size_t d, long mag) {
    while (true) {
        Vec v(d);
        for (auto& x : v) x = Rational(rng.int_in(-mag, mag));
        if (!vec_is_zero(v)) return v;
    }
}

Mat rank_one_sp(const Mat& omega0, const Vec& u) { return rond(omega0, u, u); }

} // namespace

std::vector<Codim2Instance> sample_solutions(std::size_t n, std::size_t count, std::uint64_t seed,
                                             ScalarMode mode) {
    if (n < 1) throw ValidationError("sampler needs n >= 1");
    Rng rng(seed);
    Mat omega0 = standard_skew(n);
    std::size_t d = 2 * n;
    std::vector<Codim2Instance> out;
    std::size_t attempts = 0;
    while (out.size() < count && attempts < 200 * (count + 1)) {
        ++attempts;
        Codim2Instance inst;
        inst.n = n;
        inst.mode = mode;
        switch (rng.below(5)) {
            case 0: {
                // rank-one pair with pairing-orthogonal directions
                Vec x1 = random_nonzero_vec(rng, d, 2);
                Mat row(1, d);
                for (std::size_t j = 0; j < d; ++j) row.at(0, j) = pair_w(omega0, x1, unit_vec(d, j));
                auto perp = row.nullspace();
                Vec x2 = zero_vec(d);
                for (const auto& b : perp) x2 = vec_add(x2, vec_scale(Rational(rng.int_in(-2, 2)), b));
                inst.c1 = rank_one_sp(omega0, x1);
                inst.c2 = rank_one_sp(omega0, x2);
                break;
            }
            case 1: {
                // strictly triangular block forms: all products vanish
                Mat s1(n, n), s2(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        s1.at(i, j) = Rational(rng.int_in(-2, 2));
                        s2.at(i, j) = Rational(rng.int_in(-2, 2));
                    }
                inst.c1 = Mat(d, d);
                inst.c2 = Mat(d, d);
                inst.c1.set_block(0, n, s1 + s1.transpose());
                inst.c2.set_block(0, n, s2 + s2.transpose());
                break;
            }
            case 2: {
                // proportional pencil: flat for any sp element
                inst.c1 = random_sp_matrix(rng, n, 2);
                inst.c2 = Rational(rng.int_in(-2, 2), rng.int_in(1, 2)) * inst.c1;
                break;
            }
            case 3: {
                inst.c1 = random_sp_matrix(rng, n, 2);
                inst.c2 = Mat(d, d);
                break;
            }
            default: {
                // symplectic conjugate of a rank-one orthogonal pair
                Vec x1 = random_nonzero_vec(rng, d, 1);
                Mat row(1, d);
                for (std::size_t j = 0; j < d; ++j) row.at(0, j) = pair_w(omega0, x1, unit_vec(d, j));
                auto perp = row.nullspace();
                Vec x2 = zero_vec(d);
                for (const auto& b : perp) x2 = vec_add(x2, vec_scale(Rational(rng.int_in(-1, 1)), b));
                Mat s = random_symplectic_matrix(rng, n);
                Mat sinv = s.inverse();
                inst.c1 = s * rank_one_sp(omega0, x1) * sinv;
                inst.c2 = s * rank_one_sp(omega0, x2) * sinv;
                break;
            }
        }
        if (mode == ScalarMode::float64) {
            double norm = 0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    double a = inst.c1.at(i, j).to_double(), b = inst.c2.at(i, j).to_double();
                    norm += a * a + b * b;
                }
            if (p1_residual_float(inst) > 1e-9 * (1.0 + std::sqrt(norm))) continue;
        }
        if (!check_p1_equations(inst)) continue;
        out.push_back(std::move(inst));
    }
    if (out.size() < count)
        throw ValidationError("sampler could not reach the requested count");
    return out;
}

ProofLemmaReport verify_proof_lemmas(const Codim2Instance& inst, std::uint64_t seed) {
    ProofLemmaReport rep;
    std::ostringstream detail;
    auto flatten = [](const Mat& m) {
        Vec v;
        v.reserve(m.rows() * m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
        return v;
    };
    std::size_t span_dim = span_rank({flatten(inst.c1), flatten(inst.c2)});
    detail << "span_dim=" << span_dim << "; ";

    std::vector<std::pair<Rational, Rational>> pencil;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            if (a == 0 && b == 0) continue;
            pencil.emplace_back(Rational(a), Rational(b));
        }
    Rng rng(seed);
    for (int k = 0; k < 20; ++k) pencil.emplace_back(rng.rational(3, 2), rng.rational(3, 2));

    auto element = [&](const Rational& a, const Rational& b) { return a * inst.c1 + b * inst.c2; };

    if (span_dim == 2) {
        for (const auto& [a, b] : pencil) {
            Mat c = element(a, b);
            if (!is_nilpotent(c)) {
                rep.pencil_nilpotent = false;
                detail << "non-nilpotent pencil element at (" << a << "," << b << "); ";
                break;
            }
            if (!(c * c).is_zero()) {
                rep.squares_zero = false;
                detail << "nonzero square at (" << a << "," << b << "); ";
            }
        }
    } else {
        detail << "pencil checks vacuous (span dim < 2); ";
        // squares need not vanish for a one-dimensional span (flat case)
    }

    // kernel inclusion applies to elements with nonzero square
    std::vector<Mat> generators{inst.c1, inst.c2};
    for (const auto& [a, b] : pencil) {
        Mat c = element(a, b);
        if ((c * c).is_zero()) continue;
        auto kernel = c.nullspace();
        for (const auto& k : kernel)
            for (const auto& g : generators)
                if (!vec_is_zero(g.apply(k))) {
                    rep.kernel_inclusion = false;
                    detail << "kernel inclusion fails at (" << a << "," << b << "); ";
                    break;
                }
        if (!rep.kernel_inclusion) break;
    }
    rep.detail = detail.str();
    return rep;
}

} // namespace esymm
