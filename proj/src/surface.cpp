#include "esymm/surface.hpp"

#include <sstream>

#include "esymm/errors.hpp"

namespace esymm {

Mat BulletAlgebra::of(const Vec& u) const {
    Mat b(gram.rows(), gram.cols());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (u[i].is_zero()) continue;
        b += u[i] * ops[i];
    }
    return b;
}

Vec BulletAlgebra::product(const Vec& u, const Vec& v) const { return of(u).apply(v); }

void BulletAlgebra::validate() const {
    std::size_t m = ops.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (!(gram * ops[i] + ops[i].transpose() * gram).is_zero())
            throw ValidationError("bullet operator " + std::to_string(i + 1) +
                                  " does not preserve the normal form");
        for (std::size_t j = 0; j < m; ++j) {
            // B(B(e_i) e_j) = B(e_i) B(e_j)
            Vec w = ops[i].col(j);
            if (!(of(w) == ops[i] * ops[j]))
                throw ValidationError("bullet product is not associative at basis pair (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
}

namespace {

MultiPoly hamiltonian_poly(const SympSpace& space, const AffineSympElement& gen) {
    std::size_t d = space.dim();
    // 1/2 z^T (Omega A) z - (a^T Omega) z ; Omega A is symmetric for A in sp
    Mat qa = space.omega() * gen.A;
    MultiPoly f(d);
    Rational half(1, 2);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (qa.at(a, b).is_zero()) continue;
            std::vector<std::uint32_t> exps(d, 0);
            exps[a] += 1;
            exps[b] += 1;
            f += MultiPoly::monomial(d, exps, half * qa.at(a, b));
        }
    for (std::size_t b = 0; b < d; ++b) {
        Rational c;
        for (std::size_t a = 0; a < d; ++a) {
            if (gen.a[a].is_zero() || space.omega().at(a, b).is_zero()) continue;
            c += gen.a[a] * space.omega().at(a, b);
        }
        if (!c.is_zero()) {
            std::vector<std::uint32_t> exps(d, 0);
            exps[b] = 1;
            f += MultiPoly::monomial(d, exps, -c);
        }
    }
    return f;
}

} // namespace

SurfaceSpec SurfaceSpec::build(SympSpace space, std::vector<AffineSympElement> generators) {
    SurfaceSpec s(std::move(space));
    s.gens_ = std::move(generators);
    std::size_t m = s.space_.normal_dim();
    if (s.space_.p() == 0) throw ValidationError("codimension zero surface rejected");
    if (s.gens_.size() != m)
        throw ValidationError("expected " + std::to_string(m) + " generators, got " +
                              std::to_string(s.gens_.size()));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& g = s.gens_[i];
        if (g.A.rows() != s.space_.dim() || g.A.cols() != s.space_.dim() ||
            g.a.size() != s.space_.dim())
            throw ValidationError("generator " + std::to_string(i + 1) + " has wrong dimensions");
        if (!s.space_.is_in_sp(g.A, Block::ambient))
            throw ValidationError("generator " + std::to_string(i + 1) +
                                  " is not in sp of the ambient space");
    }

    s.gram_ = Mat(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s.gram_.at(i, j) = s.space_.form(s.gens_[i].a, s.gens_[j].a);
    if (std::size_t r = s.gram_.rank(); r != m)
        throw ValidationError("normal space degenerate: Gram rank " + std::to_string(r) + " of " +
                              std::to_string(m));
    s.gram_inv_ = s.gram_.inverse();

    // structure constants from the vector relations A_i a_j = sum_k B^k_ij a_k,
    // cross-checked against the matrix relations A_i A_j = sum_k B^k_ij A_k
    s.b_.ops.assign(m, Mat(m, m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec rhs = s.gens_[i].A.apply(s.gens_[j].a);
            Vec pair(m);
            for (std::size_t l = 0; l < m; ++l) pair[l] = s.space_.form(s.gens_[l].a, rhs);
            Vec coeff = s.gram_.solve_vec(pair);
            Vec recon = zero_vec(s.space_.dim());
            for (std::size_t k = 0; k < m; ++k)
                recon = vec_add(recon, vec_scale(coeff[k], s.gens_[k].a));
            if (recon != rhs) {
                std::ostringstream os;
                os << "family not closed: A_" << (i + 1) << " a_" << (j + 1)
                   << " does not lie in span(a); residual "
                   << Mat::from_cols({vec_sub(rhs, recon)}).str();
                throw ValidationError(os.str());
            }
            for (std::size_t k = 0; k < m; ++k) s.b_.ops[i].at(k, j) = coeff[k];
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Mat sum(s.space_.dim(), s.space_.dim());
            for (std::size_t k = 0; k < m; ++k) {
                if (s.b_.ops[i].at(k, j).is_zero()) continue;
                sum += s.b_.ops[i].at(k, j) * s.gens_[k].A;
            }
            if (!(s.gens_[i].A * s.gens_[j].A == sum)) {
                Mat residual = s.gens_[i].A * s.gens_[j].A - sum;
                throw ValidationError("family not closed: A_" + std::to_string(i + 1) + " A_" +
                                      std::to_string(j + 1) +
                                      " is not the structure-constant combination; residual " +
                                      residual.str());
            }
        }

    for (std::size_t i = 0; i < m; ++i) s.f_.push_back(hamiltonian_poly(s.space_, s.gens_[i]));

    std::vector<Vec> a_vectors;
    for (const auto& g : s.gens_) a_vectors.push_back(g.a);
    s.t0_basis_ = omega_perp(s.space_, a_vectors);
    if (s.t0_basis_.size() != s.space_.tangent_dim())
        throw InternalCheckError("tangent space at the origin has unexpected dimension");
    return s;
}

bool SurfaceSpec::membership(const Vec& z) const {
    for (const auto& f : f_)
        if (!f.eval(z).is_zero()) return false;
    return true;
}

SurfaceSpec::Split SurfaceSpec::tangent_normal_split(const Vec& z) const {
    if (!membership(z)) throw ValidationError("tangent_normal_split expects a surface point");
    Split out;
    for (const auto& g : gens_) out.normal.push_back(vec_add(g.A.apply(z), g.a));
    // Gram constancy along the surface
    for (std::size_t i = 0; i < out.normal.size(); ++i)
        for (std::size_t j = 0; j < out.normal.size(); ++j)
            if (space_.form(out.normal[i], out.normal[j]) != gram_.at(i, j))
                throw InternalCheckError("normal Gram matrix is not constant on the surface");
    out.tangent = omega_perp(space_, out.normal);
    return out;
}

AffineMap SurfaceSpec::symmetry_at(const Vec& x) const {
    Split split = tangent_normal_split(x);
    return symmetry_S(space_, x, split.tangent);
}

bool SurfaceSpec::verify_extrinsic_symmetry(const Vec& x, const Vec& y) const {
    if (!membership(x) || !membership(y))
        throw ValidationError("extrinsic symmetry check expects surface points");
    AffineMap s = symmetry_at(x);
    return membership(s.apply(y));
}

SurfaceSpec::ProductReport SurfaceSpec::verify_product_identities() const {
    ProductReport rep;
    std::size_t m = gens_.size();
    std::ostringstream os;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Mat ij = gens_[i].A * gens_[j].A;
            if (!ij.is_zero()) rep.pairs_zero = false;
            if (!(ij + gens_[j].A * gens_[i].A).is_zero()) {
                rep.anticommute = false;
                os << "A_" << (i + 1) << " and A_" << (j + 1) << " do not anticommute; ";
            }
            for (std::size_t k = 0; k < m; ++k)
                if (!(ij * gens_[k].A).is_zero()) {
                    rep.triples_zero = false;
                    os << "A_" << (i + 1) << " A_" << (j + 1) << " A_" << (k + 1) << " != 0; ";
                }
        }
    rep.detail = os.str();
    return rep;
}

BulletAlgebra SurfaceSpec::bullet_product() const {
    BulletAlgebra alg{gram_, b_.ops};
    alg.validate();
    return alg;
}

bool SurfaceSpec::frame_in_normal_block() const {
    for (const auto& g : gens_)
        if (!vec_is_zero(space_.tangent_part(g.a))) return false;
    return true;
}

ShapeFamily SurfaceSpec::reduce_to_shape_family() const {
    if (!frame_in_normal_block())
        throw ValidationError("shape-family reduction needs the a-basis inside the normal block");
    std::size_t tn = space_.tangent_dim(), nn = space_.normal_dim();
    std::vector<Mat> c_ops;
    for (const auto& g : gens_) {
        if (!g.A.block(0, tn, tn, nn).is_zero() || !g.A.block(tn, 0, nn, tn).is_zero())
            throw InternalCheckError("generator does not preserve the block split");
        c_ops.push_back(g.A.block(0, 0, tn, tn));
    }
    Mat frame(nn, nn);
    for (std::size_t i = 0; i < nn; ++i) frame.set_col(i, space_.normal_part(gens_[i].a));
    return ShapeFamily(space_, std::move(c_ops), b_, std::move(frame));
}

std::optional<Vec> SurfaceSpec::point_from_tangent(const Vec& t0_coords) const {
    if (t0_coords.size() != t0_basis_.size())
        throw DimensionError("tangent coordinate length mismatch");
    std::size_t m = gens_.size();
    Vec x = zero_vec(space_.dim());
    for (std::size_t k = 0; k < t0_basis_.size(); ++k)
        x = vec_add(x, vec_scale(t0_coords[k], t0_basis_[k]));
    Vec q(m);
    for (std::size_t i = 0; i < m; ++i)
        q[i] = Rational(1, 2) * space_.form(x, gens_[i].A.apply(x));
    auto assemble = [&](const Vec& u) {
        Vec z = x;
        for (std::size_t j = 0; j < m; ++j) z = vec_add(z, vec_scale(u[j], gens_[j].a));
        return z;
    };
    // normal equations are triangular in the nilpotent sense; a short
    // fixed-point iteration reaches the exact solution when one exists
    Vec u = zero_vec(m);
    for (int iter = 0; iter < 8; ++iter) {
        Vec rhs = q;
        Vec uamb = zero_vec(space_.dim());
        for (std::size_t j = 0; j < m; ++j) uamb = vec_add(uamb, vec_scale(u[j], gens_[j].a));
        for (std::size_t i = 0; i < m; ++i)
            rhs[i] += Rational(1, 2) * space_.form(uamb, gens_[i].A.apply(uamb));
        Vec next = gram_.solve_vec(rhs);
        if (next == u) break;
        u = std::move(next);
    }
    Vec z = assemble(u);
    if (!membership(z)) return std::nullopt;
    return z;
}

std::vector<Vec> SurfaceSpec::sample_points(std::size_t count, Rng& rng) const {
    std::vector<Vec> points;
    std::size_t guard = 0;
    while (points.size() < count && guard < 40 * (count + 1)) {
        ++guard;
        Vec coords(t0_basis_.size());
        for (auto& c : coords) c = rng.rational(2, 2);
        if (auto z = point_from_tangent(coords)) points.push_back(std::move(*z));
    }
    if (points.size() < count)
        throw ValidationError("could not sample enough exact surface points");
    return points;
}

bool ReducedSets::in_M(const Vec& x, const Vec& u) const {
    Rational half(1, 2);
    for (std::size_t i = 0; i < b_ops.size(); ++i) {
        Rational v = half * space.form_tangent(x, c_ops[i].apply(x)) +
                     half * space.form_normal(u, b_ops[i].apply(u)) -
                     space.form_normal(unit_vec(u.size(), i), u);
        if (!v.is_zero()) return false;
    }
    return true;
}

bool ReducedSets::in_N(const Vec& x, const Vec& u) const {
    Rational half(1, 2);
    for (std::size_t i = 0; i < c_ops.size(); ++i) {
        Rational v = half * space.form_tangent(x, c_ops[i].apply(x)) -
                     space.form_normal(unit_vec(u.size(), i), u);
        if (!v.is_zero()) return false;
    }
    return true;
}

Vec ReducedSets::graph_normal(const Vec& x) const {
    std::size_t m = b_ops.size();
    Vec q(m);
    for (std::size_t i = 0; i < m; ++i)
        q[i] = Rational(1, 2) * space.form_tangent(x, c_ops[i].apply(x));
    return space.omegaN0().solve_vec(q);
}

bool ReducedSets::b_annihilates(const Vec& u) const {
    for (const auto& b : b_ops)
        if (!vec_is_zero(b.apply(u))) return false;
    return true;
}

bool verify_lemma_MN(const ReducedSets& sets, std::size_t random_count, Rng& rng) {
    std::size_t m = sets.b_ops.size();
    std::size_t tn = sets.space.tangent_dim();
    // hypotheses
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (!(sets.c_ops[i] * sets.c_ops[j]).is_zero())
                throw ValidationError("lemma hypotheses fail: C(u) C(v) != 0");
            Vec w = sets.b_ops[i].col(j); // B(f_i) f_j in normal coordinates
            Mat bw(m, m), cw(tn, tn);
            for (std::size_t k = 0; k < m; ++k) {
                if (w[k].is_zero()) continue;
                bw += w[k] * sets.b_ops[k];
                cw += w[k] * sets.c_ops[k];
            }
            if (!cw.is_zero()) throw ValidationError("lemma hypotheses fail: C(B(u)v) != 0");
            if (!(bw == sets.b_ops[i] * sets.b_ops[j]))
                throw ValidationError("lemma hypotheses fail: B(B(u)v) != B(u)B(v)");
        }

    // graph route: every solution of the N equations solves the M equations
    std::vector<Vec> xs;
    std::vector<long> levels{-2, -1, 0, 1, 2};
    std::vector<std::size_t> idx(tn, 0);
    while (xs.size() < 10000) {
        Vec x(tn);
        for (std::size_t i = 0; i < tn; ++i) x[i] = Rational(levels[idx[i]]);
        xs.push_back(std::move(x));
        std::size_t c = 0;
        while (c < tn && ++idx[c] == levels.size()) idx[c++] = 0;
        if (c == tn) break;
    }
    for (std::size_t k = 0; k < random_count; ++k) {
        Vec x(tn);
        for (auto& v : x) v = rng.rational(3, 2);
        xs.push_back(std::move(x));
    }
    for (const auto& x : xs) {
        Vec u = sets.graph_normal(x);
        if (!sets.in_N(x, u)) throw InternalCheckError("graph point fails its own equations");
        if (!sets.in_M(x, u)) return false;
        if (!sets.b_annihilates(u)) return false;
    }

    // joint sweep: membership in M and in N agree pointwise
    std::size_t joint = 0;
    for (const auto& x : xs) {
        if (joint >= 2000) break;
        Vec u(m);
        for (auto& v : u) v = rng.rational(2, 2);
        ++joint;
        bool in_m = sets.in_M(x, u);
        bool in_n = sets.in_N(x, u);
        if (in_m != in_n) return false;
        if (in_m && !sets.b_annihilates(u)) return false;
    }
    // targeted points: u solving N for x, perturbed off the graph, must be
    // outside both sets or inside both
    for (std::size_t k = 0; k < random_count; ++k) {
        Vec x(tn);
        for (auto& v : x) v = rng.rational(2, 2);
        Vec u = sets.graph_normal(x);
        u[rng.below(m)] += rng.rational(2, 1);
        if (sets.in_M(x, u) != sets.in_N(x, u)) return false;
    }
    return true;
}

} // namespace esymm
