#include "esymm/moyal.hpp"

#include "esymm/errors.hpp"
#include "esymm/orbit.hpp"

namespace esymm {

namespace {

struct InvEntry {
    std::size_t i, j;
    Rational w;
};

std::vector<InvEntry> inverse_entries(const Mat& omega_inv) {
    std::vector<InvEntry> entries;
    for (std::size_t i = 0; i < omega_inv.rows(); ++i)
        for (std::size_t j = 0; j < omega_inv.cols(); ++j)
            if (!omega_inv.at(i, j).is_zero()) entries.push_back({i, j, omega_inv.at(i, j)});
    return entries;
}

// Accumulates sum over contraction multiplicity matrices K supported on the
// nonzero entries of the inverse form:
//   (nu/2)^{|K|} prod_e w_e^{K_e} / K_e!  d^{row K} u  d^{col K} v.
// The r! of the series cancels against the tuple-to-multiset count.
void star_recurse(const std::vector<InvEntry>& entries, std::size_t e, const MultiPoly& du,
                  const MultiPoly& dv, const Rational& coeff, std::uint32_t r, MultiPoly& out) {
    if (e == entries.size()) {
        Rational scale = coeff;
        for (std::uint32_t k = 0; k < r; ++k) scale *= Rational(1, 2);
        out += (du * dv).scaled(scale).nu_shifted(r);
        return;
    }
    star_recurse(entries, e + 1, du, dv, coeff, r, out);
    MultiPoly cu = du, cv = dv;
    Rational c = coeff;
    for (std::uint32_t k = 1;; ++k) {
        cu = cu.diff(entries[e].i);
        if (cu.is_zero()) break;
        cv = cv.diff(entries[e].j);
        if (cv.is_zero()) break;
        c *= entries[e].w / Rational(static_cast<long>(k));
        star_recurse(entries, e + 1, cu, cv, c, r + k, out);
    }
}

} // namespace

StarSeries moyal_star(const SympSpace& space, const MultiPoly& u, const MultiPoly& v) {
    if (u.num_vars() != space.dim() || v.num_vars() != space.dim())
        throw DimensionError("star product expects ambient polynomials");
    auto entries = inverse_entries(space.omega_inv());
    MultiPoly out(space.dim());
    star_recurse(entries, 0, u, v, Rational(1), 0, out);
    return StarSeries{out, out.max_nu_degree()};
}

MultiPoly poisson_bracket(const SympSpace& space, const MultiPoly& u, const MultiPoly& v) {
    if (u.num_vars() != space.dim() || v.num_vars() != space.dim())
        throw DimensionError("poisson bracket expects ambient polynomials");
    MultiPoly out(space.dim());
    for (const auto& e : inverse_entries(space.omega_inv())) {
        MultiPoly du = u.diff(e.i);
        if (du.is_zero()) continue;
        MultiPoly dv = v.diff(e.j);
        if (dv.is_zero()) continue;
        out += (du * dv).scaled(e.w);
    }
    return out;
}

std::vector<MultiPoly> hamiltonian_field(const SurfaceSpec& surf, std::size_t i) {
    const SympSpace& sp = surf.space();
    const auto& gen = surf.generators().at(i);
    std::vector<MultiPoly> comps;
    comps.reserve(sp.dim());
    for (std::size_t a = 0; a < sp.dim(); ++a) {
        Vec row(sp.dim());
        for (std::size_t b = 0; b < sp.dim(); ++b) row[b] = -gen.A.at(a, b);
        comps.push_back(MultiPoly::linear(row, -gen.a[a]));
    }
    return comps;
}

FoliationProjection FoliationProjection::build(SurfaceSpec surf) {
    FoliationProjection proj(std::move(surf));
    const SurfaceSpec& s = proj.surf_;
    const SympSpace& sp = s.space();
    ShapeFamily fam = s.reduce_to_shape_family(); // validates the block split
    if (!fam.products_zero())
        throw ValidationError("projection needs a product-free family (C_i C_j = 0 for all i, j)");
    for (const auto& op : s.b_struct().ops)
        if (!op.is_zero())
            throw ValidationError("projection needs vanishing normal operators");

    std::size_t tn = sp.tangent_dim(), nn = sp.normal_dim(), d = sp.dim();
    const Mat& ginv = fam.gram_inv();
    const Mat& frame = fam.frame();

    // tangent-variable quadratics Q_i(x) = omega0(x, C_i x), as 2n-variable polys
    std::vector<MultiPoly> q;
    for (std::size_t i = 0; i < nn; ++i) {
        Mat coeffs = sp.omega0() * fam.C()[i];
        MultiPoly qi(tn);
        for (std::size_t a = 0; a < tn; ++a)
            for (std::size_t b = 0; b < tn; ++b) {
                if (coeffs.at(a, b).is_zero()) continue;
                std::vector<std::uint32_t> exps(tn, 0);
                exps[a] += 1;
                exps[b] += 1;
                qi += MultiPoly::monomial(tn, exps, coeffs.at(a, b));
            }
        q.push_back(std::move(qi));
    }
    // graph polynomials u^j(x) = 1/2 sum_i g^{ji} Q_i(x)
    for (std::size_t j = 0; j < nn; ++j) {
        MultiPoly uj(tn);
        for (std::size_t i = 0; i < nn; ++i) {
            if (ginv.at(j, i).is_zero()) continue;
            uj += q[i].scaled(Rational(1, 2) * ginv.at(j, i));
        }
        proj.graph_.push_back(std::move(uj));
    }

    // lift a 2n-variable polynomial to the ambient coordinates
    auto lift = [&](const MultiPoly& f) {
        std::vector<MultiPoly> sub;
        for (std::size_t a = 0; a < tn; ++a) sub.push_back(MultiPoly::variable(d, a));
        return f.compose(sub);
    };

    // frame coordinates of the normal part: u^i(z) = (frame^{-1} z_N)_i
    Mat frame_inv = frame.inverse();
    std::vector<MultiPoly> ucoord;
    for (std::size_t i = 0; i < nn; ++i) {
        Vec row(d);
        for (std::size_t m = 0; m < nn; ++m) row[tn + m] = frame_inv.at(i, m);
        ucoord.push_back(MultiPoly::linear(row));
    }

    // pi tangent components: x - sum_i (u^i - 1/2 sum_j g^{ij} Q_j) C_i x
    std::vector<MultiPoly> leaf_param; // coefficient of C_i x per i, ambient
    for (std::size_t i = 0; i < nn; ++i) {
        MultiPoly coeff = ucoord[i];
        for (std::size_t j = 0; j < nn; ++j) {
            if (ginv.at(i, j).is_zero()) continue;
            coeff -= lift(q[j]).scaled(Rational(1, 2) * ginv.at(i, j));
        }
        leaf_param.push_back(std::move(coeff));
    }
    for (std::size_t alpha = 0; alpha < tn; ++alpha) {
        MultiPoly comp = MultiPoly::variable(d, alpha);
        for (std::size_t i = 0; i < nn; ++i) {
            // (C_i x)_alpha as an ambient linear polynomial
            Vec row(d);
            for (std::size_t b = 0; b < tn; ++b) row[b] = fam.C()[i].at(alpha, b);
            MultiPoly cix = MultiPoly::linear(row);
            if (cix.is_zero()) continue;
            comp -= leaf_param[i] * cix;
        }
        proj.comps_.push_back(std::move(comp));
    }
    // pi normal components: frame * graph(x)
    for (std::size_t m = 0; m < nn; ++m) {
        MultiPoly comp(d);
        for (std::size_t k = 0; k < nn; ++k) {
            if (frame.at(m, k).is_zero()) continue;
            comp += lift(proj.graph_[k]).scaled(frame.at(m, k));
        }
        proj.comps_.push_back(std::move(comp));
    }

    // exact polynomial invariants: F_i o pi = 0 and pi o pi = pi
    for (std::size_t i = 0; i < nn; ++i)
        if (!s.F(i).compose(proj.comps_).is_zero())
            throw InternalCheckError("projection image does not satisfy the surface equations");
    for (std::size_t a = 0; a < d; ++a)
        if (!(proj.comps_[a].compose(proj.comps_) == proj.comps_[a]))
            throw InternalCheckError("projection is not idempotent");
    return proj;
}

MultiPoly FoliationProjection::pullback(const MultiPoly& f) const {
    std::size_t tn = surf_.space().tangent_dim();
    if (f.num_vars() != tn) throw DimensionError("pullback expects a tangent-coordinate polynomial");
    std::vector<MultiPoly> tangent_comps(comps_.begin(), comps_.begin() + tn);
    return f.compose(tangent_comps);
}

MultiPoly FoliationProjection::restrict_to_surface(const MultiPoly& g) const {
    const SympSpace& sp = surf_.space();
    std::size_t tn = sp.tangent_dim(), nn = sp.normal_dim();
    if (g.num_vars() != sp.dim()) throw DimensionError("restriction expects an ambient polynomial");
    ShapeFamily fam = surf_.reduce_to_shape_family();
    const Mat& frame = fam.frame();
    std::vector<MultiPoly> sub;
    for (std::size_t a = 0; a < tn; ++a) sub.push_back(MultiPoly::variable(tn, a));
    for (std::size_t m = 0; m < nn; ++m) {
        MultiPoly comp(tn);
        for (std::size_t k = 0; k < nn; ++k) {
            if (frame.at(m, k).is_zero()) continue;
            comp += graph_[k].scaled(frame.at(m, k));
        }
        sub.push_back(std::move(comp));
    }
    return g.compose(sub);
}

StarSeries induced_star(const FoliationProjection& proj, const MultiPoly& f, const MultiPoly& g) {
    MultiPoly pf = proj.pullback(f);
    MultiPoly pg = proj.pullback(g);
    StarSeries ambient = moyal_star(proj.surface().space(), pf, pg);
    MultiPoly restricted = proj.restrict_to_surface(ambient.series);
    return StarSeries{restricted, restricted.max_nu_degree()};
}

bool derivation_property_check(const SurfaceSpec& surf, const MultiPoly& u, const MultiPoly& v) {
    const SympSpace& sp = surf.space();
    StarSeries uv = moyal_star(sp, u, v);
    for (std::size_t i = 0; i < surf.generators().size(); ++i) {
        auto field = hamiltonian_field(surf, i);
        MultiPoly lhs = apply_vector_field(field, uv.series);
        MultiPoly rhs = moyal_star(sp, apply_vector_field(field, u), v).series +
                        moyal_star(sp, u, apply_vector_field(field, v)).series;
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::vector<MultiPoly> transvection_on_graph(const FoliationProjection& proj, const LambdaMap& lm,
                                             const Vec& x, const Rational& t) {
    const SympSpace& sp = proj.surface().space();
    std::size_t tn = sp.tangent_dim(), nn = sp.normal_dim();
    AffineMap psi = transvection(lm, x, t);
    ShapeFamily fam = proj.surface().reduce_to_shape_family();
    const Mat& frame = fam.frame();
    // ambient coordinates of the surface point over graph coordinates
    std::vector<MultiPoly> z;
    for (std::size_t a = 0; a < tn; ++a) z.push_back(MultiPoly::variable(tn, a));
    for (std::size_t m = 0; m < nn; ++m) {
        MultiPoly comp(tn);
        for (std::size_t k = 0; k < nn; ++k) {
            if (frame.at(m, k).is_zero()) continue;
            comp += proj.graph()[k].scaled(frame.at(m, k));
        }
        z.push_back(std::move(comp));
    }
    std::vector<MultiPoly> out;
    for (std::size_t alpha = 0; alpha < tn; ++alpha) {
        MultiPoly comp = MultiPoly::constant(tn, psi.translation[alpha]);
        for (std::size_t b = 0; b < sp.dim(); ++b) {
            if (psi.linear.at(alpha, b).is_zero()) continue;
            comp += z[b].scaled(psi.linear.at(alpha, b));
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool transvection_invariance_check(const FoliationProjection& proj, const LambdaMap& lm,
                                   const MultiPoly& f, const MultiPoly& g, const Vec& x,
                                   const Rational& t) {
    auto psi_graph = transvection_on_graph(proj, lm, x, t);
    MultiPoly f_psi = f.compose(psi_graph);
    MultiPoly g_psi = g.compose(psi_graph);
    MultiPoly lhs = induced_star(proj, f_psi, g_psi).series;
    MultiPoly rhs = induced_star(proj, f, g).series.compose(psi_graph);
    return lhs == rhs;
}

} // namespace esymm
