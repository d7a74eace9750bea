#include "esymm/lambda_map.hpp"

#include <sstream>

#include "esymm/errors.hpp"

namespace esymm {

namespace {

std::string tuple_str(const std::vector<std::size_t>& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

} // namespace

ShapeFamily::ShapeFamily(SympSpace space, std::vector<Mat> c_ops,
                         std::optional<BStruct> b_struct, Mat frame)
    : space_(std::move(space)), c_(std::move(c_ops)), b_struct_(std::move(b_struct)) {
    if (space_.p() == 0)
        throw ValidationError("codimension zero family rejected: the extrinsic structure is vacuous");
    std::size_t m = space_.normal_dim();
    if (c_.size() != m)
        throw ValidationError("expected " + std::to_string(m) + " shape operators, got " +
                              std::to_string(c_.size()));
    for (std::size_t i = 0; i < m; ++i) {
        if (c_[i].rows() != space_.tangent_dim() || c_[i].cols() != space_.tangent_dim())
            throw ValidationError("shape operator " + std::to_string(i + 1) + " has wrong size");
        if (!space_.is_in_sp(c_[i], Block::tangent))
            throw ValidationError("shape operator " + std::to_string(i + 1) +
                                  " is not in sp of the tangent block");
    }
    frame_ = frame.rows() == 0 ? Mat::identity(m) : std::move(frame);
    if (frame_.rows() != m || frame_.cols() != m)
        throw ValidationError("normal frame must be a square matrix of the normal dimension");
    if (frame_.rank() != m) throw ValidationError("normal frame is degenerate");
    gram_ = frame_.transpose() * space_.omegaN0() * frame_;
    gram_inv_ = gram_.inverse();

    if (b_struct_) {
        if (b_struct_->ops.size() != m)
            throw ValidationError("structure constants need one normal operator per frame vector");
        for (std::size_t i = 0; i < m; ++i) {
            const Mat& bi = b_struct_->ops[i];
            if (bi.rows() != m || bi.cols() != m)
                throw ValidationError("normal operator " + std::to_string(i + 1) + " has wrong size");
            // compatibility with the normal form: B_i in sp(gram)
            if (!(gram_ * bi + bi.transpose() * gram_).is_zero())
                throw ValidationError("normal operator " + std::to_string(i + 1) +
                                      " is not symplectic for the normal form");
            for (std::size_t j = 0; j < m; ++j) {
                Mat sum(space_.tangent_dim(), space_.tangent_dim());
                for (std::size_t k = 0; k < m; ++k) {
                    if (bi.at(k, j).is_zero()) continue;
                    sum += bi.at(k, j) * c_[k];
                }
                if (!(c_[i] * c_[j] == sum))
                    throw ValidationError("structure constants do not reproduce C_" +
                                          std::to_string(i + 1) + " C_" + std::to_string(j + 1));
            }
        }
    }
}

Vec ShapeFamily::frame_vector(std::size_t i) const {
    return space_.embed_normal(frame_.col(i));
}

Vec ShapeFamily::frame_to_ambient(const Vec& u) const {
    return space_.embed_normal(frame_.apply(u));
}

Vec ShapeFamily::ambient_to_frame(const Vec& z) const {
    return frame_.solve_vec(space_.normal_part(z));
}

bool ShapeFamily::products_zero() const {
    for (const auto& ci : c_)
        for (const auto& cj : c_)
            if (!(ci * cj).is_zero()) return false;
    return true;
}

LambdaMap LambdaMap::build(ShapeFamily family) {
    const SympSpace& sp = family.space();
    std::size_t m = sp.normal_dim();
    const Mat& ginv = family.gram_inv();
    std::vector<Mat> images;
    images.reserve(sp.tangent_dim());
    for (std::size_t alpha = 0; alpha < sp.tangent_dim(); ++alpha) {
        Mat img(sp.dim(), sp.dim());
        for (std::size_t i = 0; i < m; ++i) {
            Vec cix = sp.embed_tangent(family.C()[i].col(alpha));
            if (vec_is_zero(cix)) continue;
            for (std::size_t k = 0; k < m; ++k) {
                if (ginv.at(i, k).is_zero()) continue;
                Vec fk = family.frame_vector(k);
                img += ginv.at(i, k) *
                       (Mat::outer_form(cix, fk, sp.omega()) + Mat::outer_form(fk, cix, sp.omega()));
            }
        }
        if (!sp.is_in_sp(img, Block::ambient))
            throw InternalCheckError("assembled Lambda image is not in sp of the ambient space");
        images.push_back(std::move(img));
    }
    // defining relation Lambda(e_alpha) f_i = C_i e_alpha
    for (std::size_t alpha = 0; alpha < sp.tangent_dim(); ++alpha)
        for (std::size_t i = 0; i < m; ++i) {
            Vec lhs = images[alpha].apply(family.frame_vector(i));
            Vec rhs = sp.embed_tangent(family.C()[i].col(alpha));
            if (lhs != rhs)
                throw InternalCheckError("Lambda defining relation failed at basis " +
                                         std::to_string(alpha) + ", frame " + std::to_string(i));
        }
    return LambdaMap(std::move(family), std::move(images));
}

Mat LambdaMap::of(const Vec& x) const {
    if (x.size() != space().tangent_dim())
        throw DimensionError("Lambda expects a tangent-block vector");
    Mat m(space().dim(), space().dim());
    for (std::size_t alpha = 0; alpha < x.size(); ++alpha) {
        if (x[alpha].is_zero()) continue;
        m += x[alpha] * images_[alpha];
    }
    return m;
}

ConditionReport check_condition_1_images(const SympSpace& space, const std::vector<Mat>& images) {
    Mat s0 = space.s0();
    for (std::size_t alpha = 0; alpha < images.size(); ++alpha) {
        Mat residual = s0 * images[alpha] * s0 + images[alpha];
        if (!residual.is_zero())
            return ConditionReport{false, {alpha}, residual.str(),
                                   "S0 Lambda S0 + Lambda nonzero at basis " + tuple_str({alpha})};
    }
    return ConditionReport{};
}

ConditionReport check_condition_2_images(const SympSpace& space, const std::vector<Mat>& images) {
    for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b) {
            Vec lhs = images[a].apply(space.tangent_basis_vector(b));
            Vec rhs = images[b].apply(space.tangent_basis_vector(a));
            if (lhs != rhs)
                return ConditionReport{false, {a, b}, "",
                                       "Lambda(x) y != Lambda(y) x at basis " + tuple_str({a, b})};
        }
    return ConditionReport{};
}

ConditionReport check_condition_1(const LambdaMap& lm) {
    std::vector<Mat> imgs;
    for (std::size_t a = 0; a < lm.space().tangent_dim(); ++a) imgs.push_back(lm.of_basis(a));
    return check_condition_1_images(lm.space(), imgs);
}

ConditionReport check_condition_2(const LambdaMap& lm) {
    std::vector<Mat> imgs;
    for (std::size_t a = 0; a < lm.space().tangent_dim(); ++a) imgs.push_back(lm.of_basis(a));
    return check_condition_2_images(lm.space(), imgs);
}

ConditionReport check_condition_3_lambda_form(const SympSpace& space,
                                              const std::vector<Mat>& images) {
    auto lam_of = [&](const Vec& x) {
        Mat m(space.dim(), space.dim());
        for (std::size_t a = 0; a < x.size(); ++a) {
            if (x[a].is_zero()) continue;
            m += x[a] * images[a];
        }
        return m;
    };
    std::size_t d = space.tangent_dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            Mat k = images[a] * images[b] - images[b] * images[a];
            for (std::size_t c = 0; c < d; ++c) {
                Vec w = k.apply(space.tangent_basis_vector(c));
                Vec wn = space.normal_part(w);
                if (!vec_is_zero(wn))
                    return ConditionReport{false, {a, b, c}, "",
                                           "[Lambda, Lambda] does not preserve the tangent block at " +
                                               tuple_str({a, b, c})};
                Mat lhs = lam_of(space.tangent_part(w));
                Mat rhs = k * images[c] - images[c] * k;
                if (!(lhs == rhs))
                    return ConditionReport{false, {a, b, c}, (lhs - rhs).str(),
                                           "third condition fails at basis " + tuple_str({a, b, c})};
            }
        }
    return ConditionReport{};
}

ConditionReport check_condition_3_c_form(const ShapeFamily& family) {
    const SympSpace& sp = family.space();
    std::size_t d = sp.tangent_dim();
    std::size_t m = sp.normal_dim();
    const Mat& g = family.gram_inv();
    const auto& c = family.C();
    // pairing tables: w1[i](a, b) = omega0(C_i e_a, e_b); w2[i][l](a, b) = omega0(C_i e_a, C_l e_b)
    std::vector<Mat> w1(m);
    std::vector<std::vector<Mat>> w2(m, std::vector<Mat>(m));
    for (std::size_t i = 0; i < m; ++i) {
        w1[i] = c[i].transpose() * sp.omega0();
        for (std::size_t l = 0; l < m; ++l) w2[i][l] = c[i].transpose() * sp.omega0() * c[l];
    }
    std::vector<std::vector<Mat>> prod(m, std::vector<Mat>(m));
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t i = 0; i < m; ++i) prod[l][i] = c[l] * c[i];

    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t zc = 0; zc < d; ++zc) {
                    Vec lhs = zero_vec(d), rhs = zero_vec(d);
                    for (std::size_t i = 0; i < m; ++i)
                        for (std::size_t j = 0; j < m; ++j) {
                            const Rational& gji = g.at(j, i);
                            if (gji.is_zero()) continue;
                            // left side: w(C_j y, z) C_l C_i x - w(C_j x, z) C_l C_i y
                            if (!w1[j].at(b, zc).is_zero())
                                lhs = vec_add(lhs, vec_scale(gji * w1[j].at(b, zc), prod[l][i].col(a)));
                            if (!w1[j].at(a, zc).is_zero())
                                lhs = vec_sub(lhs, vec_scale(gji * w1[j].at(a, zc), prod[l][i].col(b)));
                            // right side
                            if (!w2[j][l].at(b, zc).is_zero())
                                rhs = vec_add(rhs, vec_scale(gji * w2[j][l].at(b, zc), c[i].col(a)));
                            if (!w2[j][l].at(a, zc).is_zero())
                                rhs = vec_sub(rhs, vec_scale(gji * w2[j][l].at(a, zc), c[i].col(b)));
                            if (!w2[j][l].at(b, a).is_zero())
                                rhs = vec_add(rhs, vec_scale(gji * w2[j][l].at(b, a), c[i].col(zc)));
                            if (!w2[j][l].at(a, b).is_zero())
                                rhs = vec_sub(rhs, vec_scale(gji * w2[j][l].at(a, b), c[i].col(zc)));
                        }
                    if (lhs != rhs)
                        return ConditionReport{false, {l, a, b, zc}, "",
                                               "shape-operator form of the third condition fails at " +
                                                   tuple_str({l, a, b, zc})};
                }
    return ConditionReport{};
}

ConditionReport check_condition_3(const LambdaMap& lm) {
    std::vector<Mat> imgs;
    for (std::size_t a = 0; a < lm.space().tangent_dim(); ++a) imgs.push_back(lm.of_basis(a));
    ConditionReport via_lambda = check_condition_3_lambda_form(lm.space(), imgs);
    ConditionReport via_c = check_condition_3_c_form(lm.family());
    if (via_lambda.pass != via_c.pass)
        throw InternalCheckError("the two formulations of the third condition disagree");
    return via_lambda;
}

Vec second_fundamental_form(const LambdaMap& lm, const Vec& x, const Vec& y) {
    const SympSpace& sp = lm.space();
    Vec img = lm.of(y).apply(sp.embed_tangent(x));
    Vec tangent = sp.tangent_part(img);
    if (!vec_is_zero(tangent))
        throw InternalCheckError("second fundamental form has a tangent component");
    return lm.family().ambient_to_frame(img);
}

CurvatureTensor curvature_at_base(const LambdaMap& lm) {
    const SympSpace& sp = lm.space();
    const ShapeFamily& fam = lm.family();
    if (!check_condition_2(lm).pass)
        throw ValidationError("curvature at base requires conditions 1-2");
    std::size_t d = sp.tangent_dim();
    std::size_t m = sp.normal_dim();

    // commutator route
    CurvatureTensor r1(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Mat k = lm.of_basis(a) * lm.of_basis(b) - lm.of_basis(b) * lm.of_basis(a);
            for (std::size_t c = 0; c < d; ++c) {
                Vec kz = k.apply(sp.tangent_basis_vector(c));
                for (std::size_t t = 0; t < d; ++t)
                    r1.at(a, b, c, t) = -sp.form(kz, sp.tangent_basis_vector(t));
            }
        }

    // shape-operator route
    const Mat& g = fam.gram_inv();
    const auto& cs = fam.C();
    std::vector<Mat> w1(m);
    for (std::size_t i = 0; i < m; ++i) w1[i] = cs[i].transpose() * sp.omega0();
    CurvatureTensor r2(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t t = 0; t < d; ++t) {
                    Rational s;
                    for (std::size_t i = 0; i < m; ++i)
                        for (std::size_t j = 0; j < m; ++j) {
                            const Rational& gji = g.at(j, i);
                            if (gji.is_zero()) continue;
                            s += gji * (w1[i].at(b, c) * w1[j].at(a, t) -
                                        w1[i].at(a, c) * w1[j].at(b, t));
                        }
                    r2.at(a, b, c, t) = s;
                }

    if (!(r1 == r2))
        throw InternalCheckError("curvature formulas disagree: commutator vs shape-operator sum");
    r1.validate();
    return r1;
}

CurvatureTensor curvature_via_phi(const LambdaMap& lm) {
    const SympSpace& sp = lm.space();
    const ShapeFamily& fam = lm.family();
    std::size_t m = sp.normal_dim();
    const Mat& g = fam.gram_inv();
    CurvatureTensor total(sp.tangent_dim());
    Rational half(1, 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (g.at(i, j).is_zero()) continue;
            total = total + phi_map(sp, fam.C()[i], fam.C()[j]).scaled(half * g.at(i, j));
        }
    return total;
}

Mat psi_of_curvature_element(const LambdaMap& lm) {
    const SympSpace& sp = lm.space();
    const ShapeFamily& fam = lm.family();
    std::size_t m = sp.normal_dim();
    const Mat& g = fam.gram_inv();
    Mat total(sp.tangent_dim(), sp.tangent_dim());
    Rational half(1, 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (g.at(i, j).is_zero()) continue;
            const Mat& ci = fam.C()[i];
            const Mat& cj = fam.C()[j];
            total += (half * g.at(i, j)) * (ci * cj - cj * ci);
        }
    return total;
}

GroupAlgebra lambda_group_algebra(const LambdaMap& lm) {
    const SympSpace& sp = lm.space();
    std::size_t d = sp.tangent_dim();
    GroupAlgebra out;
    for (std::size_t a = 0; a < d; ++a)
        out.spanning.push_back(AffineSympElement{lm.of_basis(a), sp.tangent_basis_vector(a)});
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            Mat k = lm.of_basis(a) * lm.of_basis(b) - lm.of_basis(b) * lm.of_basis(a);
            if (k.is_zero()) continue;
            out.spanning.push_back(AffineSympElement{std::move(k), zero_vec(sp.dim())});
        }

    std::vector<Vec> span_vectors;
    for (const auto& e : out.spanning) span_vectors.push_back(e.flatten());
    for (std::size_t i = 0; i < out.spanning.size() && out.closed; ++i)
        for (std::size_t j = i + 1; j < out.spanning.size(); ++j) {
            Vec br = out.spanning[i].bracket(out.spanning[j]).flatten();
            if (!in_span(span_vectors, br)) {
                out.closed = false;
                out.failed_pair = {i, j};
                break;
            }
        }

    // lower central series by exact rank
    std::vector<AffineSympElement> layer = out.spanning;
    int cls = 0;
    std::size_t cap = out.spanning.size() + 2;
    while (true) {
        ++cls;
        std::vector<AffineSympElement> next;
        std::vector<Vec> next_vectors;
        for (const auto& g : out.spanning)
            for (const auto& h : layer) {
                AffineSympElement br = g.bracket(h);
                Vec flat = br.flatten();
                if (vec_is_zero(flat)) continue;
                if (!next_vectors.empty() && in_span(next_vectors, flat)) continue;
                next_vectors.push_back(std::move(flat));
                next.push_back(std::move(br));
            }
        if (next.empty()) {
            out.nilpotency_class = cls;
            break;
        }
        if (static_cast<std::size_t>(cls) > cap) {
            out.nilpotency_class = -1;
            break;
        }
        layer = std::move(next);
    }
    return out;
}

} // namespace esymm
