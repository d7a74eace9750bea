#include "esymm/orbit.hpp"

#include "esymm/errors.hpp"

namespace esymm {

Mat nilpotent_exp(const Mat& a) {
    if (!a.is_square()) throw DimensionError("exponential of non-square matrix");
    std::size_t d = a.rows();
    Mat term = Mat::identity(d);
    Mat sum = term;
    Rational factorial(1);
    for (std::size_t k = 1; k <= d; ++k) {
        term = term * a;
        if (term.is_zero()) return sum + Mat::zero(d, d);
        factorial *= Rational(static_cast<long>(k));
        sum += factorial.inverse() * term;
    }
    throw ValidationError("matrix is not nilpotent; this engine never approximates");
}

int nilpotency_degree(const LambdaMap& lm, const Vec& x) {
    Mat m = lm.of(x);
    if (m.is_zero()) return 1;
    Mat power = m;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        if (power.is_zero()) return static_cast<int>(k);
        power = power * m;
    }
    if (power.is_zero()) return static_cast<int>(m.rows()) + 1;
    throw ValidationError("Lambda(x) is not nilpotent; the theorem hypotheses fail");
}

namespace {

/// sum_{k >= 1} t^k Lambda^{k-1} x / k!, the translation part of the affine
/// exponential; exact because Lambda(x) is nilpotent.
Vec orbit_translation(const SympSpace& sp, const Mat& lam, const Vec& x_amb, const Rational& t) {
    Vec current = x_amb;
    Vec total = zero_vec(sp.dim());
    Rational tk = t;
    Rational factorial(1);
    for (std::size_t k = 1; k <= sp.dim() + 1; ++k) {
        total = vec_add(total, vec_scale(tk / factorial, current));
        current = lam.apply(current);
        if (vec_is_zero(current)) break;
        tk *= t;
        factorial *= Rational(static_cast<long>(k + 1));
    }
    if (!vec_is_zero(current))
        throw ValidationError("Lambda(x) is not nilpotent; the theorem hypotheses fail");
    return total;
}

/// B operators to use in the surface equations: the family's structure
/// constants when present, otherwise zero (valid for vanishing products and
/// for flat families, where the orbit lies on the zero-B graph).
std::vector<Mat> effective_b_ops(const LambdaMap& lm) {
    const ShapeFamily& fam = lm.family();
    std::size_t m = lm.space().normal_dim();
    if (fam.has_b_struct()) return fam.b_struct()->ops;
    if (fam.products_zero() || curvature_at_base(lm).is_zero())
        return std::vector<Mat>(m, Mat(m, m));
    throw ValidationError(
        "family has no structure constants and is neither flat nor product-free; "
        "the closed-form surface equations do not apply");
}

} // namespace

std::vector<Rational> surface_equation_residuals(const LambdaMap& lm, const Vec& x_tilde,
                                                 const Vec& u_tilde) {
    const ShapeFamily& fam = lm.family();
    const SympSpace& sp = lm.space();
    std::size_t m = sp.normal_dim();
    std::vector<Mat> b_ops = effective_b_ops(lm);
    const Mat& g = fam.gram();
    Rational half(1, 2);
    std::vector<Rational> residuals(m);
    for (std::size_t i = 0; i < m; ++i) {
        // 1/2 w0(x, C_i x) + 1/2 G(u, B_i u) - G(f_i, u) = 0 in frame coords
        Rational quad_t = half * sp.form_tangent(x_tilde, fam.C()[i].apply(x_tilde));
        Vec biu = b_ops[i].apply(u_tilde);
        Rational quad_n;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                if (g.at(a, b).is_zero()) continue;
                quad_n += u_tilde[a] * g.at(a, b) * biu[b];
            }
        Rational lin;
        for (std::size_t b = 0; b < m; ++b) {
            if (g.at(i, b).is_zero()) continue;
            lin += g.at(i, b) * u_tilde[b];
        }
        residuals[i] = quad_t + half * quad_n - lin;
    }
    return residuals;
}

OrbitPoint orbit_point(const LambdaMap& lm, const Vec& x, const Rational& t) {
    const SympSpace& sp = lm.space();
    const ShapeFamily& fam = lm.family();
    std::size_t m = sp.normal_dim();
    if (x.size() != sp.tangent_dim()) throw DimensionError("orbit expects a tangent-block vector");

    // generic route
    Mat lam = lm.of(x);
    Vec generic = orbit_translation(sp, lam, sp.embed_tangent(x), t);
    Vec xt_generic = sp.tangent_part(generic);
    Vec ut_generic = fam.ambient_to_frame(generic);

    // shape-operator expansion
    const Mat& ginv = fam.gram_inv();
    const auto& c = fam.C();
    std::vector<Vec> cxs(m);
    for (std::size_t i = 0; i < m; ++i) cxs[i] = c[i].apply(x);
    auto w0 = [&](const Vec& u, const Vec& v) { return sp.form_tangent(u, v); };

    Rational t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    // x(t) = t x - t^3/6 sum_{ij} g^{ij} C_i x w(C_j x, x)
    //        + t^5/120 sum_{ijkr} w(C_j x, C_k x) g^{ij} g^{kr} C_i x w(C_r x, x)
    Vec xt = vec_scale(t, x);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (ginv.at(i, j).is_zero()) continue;
            Rational wjx = w0(cxs[j], x);
            if (wjx.is_zero()) continue;
            xt = vec_sub(xt, vec_scale(t3 / Rational(6) * ginv.at(i, j) * wjx, cxs[i]));
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (ginv.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k) {
                Rational wjk = w0(cxs[j], cxs[k]);
                if (wjk.is_zero()) continue;
                for (std::size_t r = 0; r < m; ++r) {
                    if (ginv.at(k, r).is_zero()) continue;
                    Rational wrx = w0(cxs[r], x);
                    if (wrx.is_zero()) continue;
                    xt = vec_add(xt, vec_scale(t5 / Rational(120) * wjk * ginv.at(i, j) *
                                                   ginv.at(k, r) * wrx,
                                               cxs[i]));
                }
            }
        }
    // u(t) = sum_i f^i [ t^2/2 w(C_i x, x) - t^4/24 sum_{jk} w(C_i x, C_j x) g^{jk} w(C_k x, x) ]
    Vec dual_coeff(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational ci = t2 / Rational(2) * w0(cxs[i], x);
        for (std::size_t j = 0; j < m; ++j) {
            Rational wij = w0(cxs[i], cxs[j]);
            if (wij.is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k) {
                if (ginv.at(j, k).is_zero()) continue;
                Rational wkx = w0(cxs[k], x);
                if (wkx.is_zero()) continue;
                ci -= t4 / Rational(24) * wij * ginv.at(j, k) * wkx;
            }
        }
        dual_coeff[i] = ci;
    }
    // convert dual-basis coefficients to frame coordinates: f^i = sum_k g^{ik} f_k
    Vec ut = zero_vec(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (dual_coeff[i].is_zero()) continue;
        for (std::size_t k = 0; k < m; ++k) {
            if (ginv.at(i, k).is_zero()) continue;
            ut[k] += dual_coeff[i] * ginv.at(i, k);
        }
    }

    if (xt != xt_generic || ut != ut_generic)
        throw InternalCheckError("orbit routes disagree: closed form vs nilpotent exponential");

    for (const auto& r : surface_equation_residuals(lm, xt, ut))
        if (!r.is_zero())
            throw InternalCheckError("orbit point does not satisfy the surface equations");

    return OrbitPoint{t, std::move(xt), std::move(ut)};
}

AffineMap transvection(const LambdaMap& lm, const Vec& x, const Rational& t) {
    const SympSpace& sp = lm.space();
    Mat lam = lm.of(x);
    Mat tl = t * lam;
    Mat linear = nilpotent_exp(tl);
    Vec translation = orbit_translation(sp, lam, sp.embed_tangent(x), t);
    return AffineMap{std::move(linear), std::move(translation)};
}

bool geodesic_symmetry_check(const LambdaMap& lm, const SurfaceSpec& surf, const Vec& x,
                             const Rational& t) {
    const SympSpace& sp = lm.space();
    AffineMap psi = transvection(lm, x, t);

    Rational half(1, 2);
    OrbitPoint mid = orbit_point(lm, x, half * t);
    Vec mid_amb = vec_add(sp.embed_tangent(mid.x_tilde), lm.family().frame_to_ambient(mid.u_tilde));
    if (!surf.membership(mid_amb)) return false;
    AffineMap s_mid = surf.symmetry_at(mid_amb);
    std::vector<Vec> tangent_block;
    for (std::size_t a = 0; a < sp.tangent_dim(); ++a)
        tangent_block.push_back(sp.tangent_basis_vector(a));
    AffineMap s0 = symmetry_S(sp, zero_vec(sp.dim()), tangent_block);
    if (!(s_mid.after(s0) == psi)) return false;

    // one-parameter group law on a few exact samples
    for (const auto& [s_num, s_den] : {std::pair<long, long>{1, 1}, {1, 2}, {-2, 3}}) {
        Rational s(s_num, s_den);
        AffineMap lhs = transvection(lm, x, t).after(transvection(lm, x, s));
        AffineMap rhs = transvection(lm, x, t + s);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool is_flat(const LambdaMap& lm) { return curvature_at_base(lm).is_zero(); }

bool check_flat_iff_isotropic(const LambdaMap& lm) {
    const SympSpace& sp = lm.space();
    const ShapeFamily& fam = lm.family();
    std::size_t d = sp.tangent_dim();
    std::vector<Vec> alpha_span;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a; b < d; ++b) {
            Vec v = second_fundamental_form(lm, sp.tangent_part(sp.tangent_basis_vector(a)),
                                            sp.tangent_part(sp.tangent_basis_vector(b)));
            if (!vec_is_zero(v)) alpha_span.push_back(std::move(v));
        }
    bool isotropic = true;
    const Mat& g = fam.gram();
    for (const auto& u : alpha_span) {
        for (const auto& v : alpha_span) {
            Rational pairing;
            for (std::size_t a = 0; a < u.size(); ++a)
                for (std::size_t b = 0; b < v.size(); ++b) {
                    if (g.at(a, b).is_zero()) continue;
                    pairing += u[a] * g.at(a, b) * v[b];
                }
            if (!pairing.is_zero()) {
                isotropic = false;
                break;
            }
        }
        if (!isotropic) break;
    }
    return isotropic == is_flat(lm);
}

std::vector<MultiPoly> flat_graph_form(const LambdaMap& lm) {
    if (!is_flat(lm)) throw ValidationError("graph form is only available for flat families");
    const SympSpace& sp = lm.space();
    const ShapeFamily& fam = lm.family();
    std::size_t d = sp.tangent_dim();
    std::size_t m = sp.normal_dim();
    const Mat& ginv = fam.gram_inv();
    // u^k(x) = 1/2 sum_i g^{ki} w0(x, C_i x); w0(x, C_i x) has symmetric
    // coefficient matrix (omega0 C_i)
    std::vector<MultiPoly> graph;
    Rational half(1, 2);
    for (std::size_t k = 0; k < m; ++k) {
        MultiPoly uk(d);
        for (std::size_t i = 0; i < m; ++i) {
            if (ginv.at(k, i).is_zero()) continue;
            Mat q = sp.omega0() * fam.C()[i];
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    if (q.at(a, b).is_zero()) continue;
                    std::vector<std::uint32_t> exps(d, 0);
                    exps[a] += 1;
                    exps[b] += 1;
                    uk += MultiPoly::monomial(d, exps, half * ginv.at(k, i) * q.at(a, b));
                }
        }
        graph.push_back(std::move(uk));
    }
    return graph;
}

} // namespace esymm
