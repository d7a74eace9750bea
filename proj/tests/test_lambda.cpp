#include <doctest.h>

#include "esymm/errors.hpp"
#include "esymm/lambda_map.hpp"
#include "test_helpers.hpp"

using namespace esymm;
using namespace esymm::testing;

namespace {

ShapeFamily random_family(Rng& rng, std::size_t n, std::size_t p) {
    std::vector<Mat> c_ops;
    for (std::size_t i = 0; i < 2 * p; ++i) c_ops.push_back(random_sp(rng, n, 1));
    return ShapeFamily(SympSpace(n, p), std::move(c_ops));
}

std::vector<Mat> basis_images(const LambdaMap& lm) {
    std::vector<Mat> imgs;
    for (std::size_t a = 0; a < lm.space().tangent_dim(); ++a) imgs.push_back(lm.of_basis(a));
    return imgs;
}

} // namespace

TEST_SUITE("lambda") {

TEST_CASE("codimension zero is rejected at construction") {
    CHECK_THROWS_AS(ShapeFamily(SympSpace(1, 0), {}), ValidationError);
}

TEST_CASE("non-sp shape operators are rejected") {
    CHECK_THROWS_AS(ShapeFamily(SympSpace(1, 1), {Mat::identity(2), Mat(2, 2)}), ValidationError);
}

TEST_CASE("zero family gives the zero map") {
    ShapeFamily fam(SympSpace(1, 1), {Mat(2, 2), Mat(2, 2)});
    LambdaMap lm = LambdaMap::build(fam);
    for (std::size_t a = 0; a < 2; ++a) CHECK(lm.of_basis(a).is_zero());
    CHECK(check_condition_1(lm).pass);
    CHECK(check_condition_2(lm).pass);
    CHECK(check_condition_3(lm).pass);
    CHECK(curvature_at_base(lm).is_zero());
}

TEST_CASE("hand-worked images for the parabola family") {
    LambdaMap lm = LambdaMap::build(make_parabola_family());
    const SympSpace& sp = lm.space();
    // Lambda(e1) f1 = C1 e1 = 0, Lambda(e2) f1 = C1 e2 = e1, Lambda(x) f2 = 0
    CHECK(vec_is_zero(lm.of_basis(0).apply(sp.normal_basis_vector(0))));
    CHECK(lm.of_basis(1).apply(sp.normal_basis_vector(0)) == sp.tangent_basis_vector(0));
    CHECK(vec_is_zero(lm.of_basis(0).apply(sp.normal_basis_vector(1))));
    CHECK(vec_is_zero(lm.of_basis(1).apply(sp.normal_basis_vector(1))));
}

TEST_CASE("defining relation on random families") {
    Rng rng(41);
    for (auto [n, p] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}}) {
        ShapeFamily fam = random_family(rng, n, p);
        LambdaMap lm = LambdaMap::build(fam);
        for (std::size_t alpha = 0; alpha < 2 * n; ++alpha)
            for (std::size_t i = 0; i < 2 * p; ++i)
                CHECK(lm.of_basis(alpha).apply(lm.family().frame_vector(i)) ==
                      lm.space().embed_tangent(fam.C()[i].col(alpha)));
        // conditions 1 and 2 hold for any sp-valued family
        CHECK(check_condition_1(lm).pass);
        CHECK(check_condition_2(lm).pass);
    }
}

TEST_CASE("condition 1 detects a corrupted tangent-tangent block") {
    LambdaMap lm = LambdaMap::build(make_parabola_family());
    auto imgs = basis_images(lm);
    imgs[0].at(0, 1) += Rational(1); // nonzero tangent-tangent block
    ConditionReport rep = check_condition_1_images(lm.space(), imgs);
    CHECK_FALSE(rep.pass);
    CHECK(rep.failed_tuple == std::vector<std::size_t>{0});
}

TEST_CASE("condition 2 fails for a non-sp operator slipped past the constructor") {
    // assemble images directly from a non-sp C1
    SympSpace sp(1, 1);
    Mat bad = Mat::identity(2); // not in sp
    std::vector<Mat> imgs;
    for (std::size_t alpha = 0; alpha < 2; ++alpha) {
        Mat img(4, 4);
        Vec cx = sp.embed_tangent(bad.col(alpha));
        for (std::size_t k = 0; k < 2; ++k) {
            const Rational& g = sp.omegaN0_inv().at(0, k);
            if (g.is_zero()) continue;
            Vec fk = sp.normal_basis_vector(k);
            img += g * (Mat::outer_form(cx, fk, sp.omega()) + Mat::outer_form(fk, cx, sp.omega()));
        }
        imgs.push_back(img);
    }
    CHECK_FALSE(check_condition_2_images(sp, imgs).pass);
}

TEST_CASE("condition 3 on the bundled families") {
    CHECK(check_condition_3(LambdaMap::build(make_parabola_family())).pass);
    CHECK(check_condition_3(LambdaMap::build(make_theorem33_family())).pass);
    Rng rng(42);
    CHECK(check_condition_3(LambdaMap::build(make_triangular_family(rng, 2, 1))).pass);
}

TEST_CASE("condition 3 fails for a generic pair") {
    // two generic commuting non-nilpotent elements violate the equations
    Mat c1(4, 4), c2(4, 4);
    c1.at(0, 0) = Rational(1);
    c1.at(1, 1) = Rational(1);
    c1.at(2, 2) = Rational(-1);
    c1.at(3, 3) = Rational(-1);
    c2.at(0, 0) = Rational(2);
    c2.at(1, 1) = Rational(-1);
    c2.at(2, 2) = Rational(-2);
    c2.at(3, 3) = Rational(1);
    ShapeFamily fam(SympSpace(2, 1), {c1, c2});
    CHECK_FALSE(check_condition_3(LambdaMap::build(fam)).pass);
}

TEST_CASE("second fundamental form: zero argument, symmetry, hand-worked value") {
    LambdaMap lm = LambdaMap::build(make_parabola_family());
    Vec zero2 = zero_vec(2);
    CHECK(vec_is_zero(second_fundamental_form(lm, zero2, unit_vec(2, 1))));
    // alpha(e2, e2) = Lambda(e2) e2; for the parabola this is -f2
    Vec a22 = second_fundamental_form(lm, unit_vec(2, 1), unit_vec(2, 1));
    CHECK(a22 == Vec{Rational(0), Rational(-1)});
    Rng rng(43);
    ShapeFamily fam = random_family(rng, 2, 2);
    LambdaMap lm2 = LambdaMap::build(fam);
    for (int k = 0; k < 20; ++k) {
        Vec x = random_vec(rng, 4, 2, 2), y = random_vec(rng, 4, 2, 2);
        CHECK(second_fundamental_form(lm2, x, y) == second_fundamental_form(lm2, y, x));
    }
}

TEST_CASE("curvature: dual formula, phi consistency, isotropic flatness") {
    Rng rng(44);
    // isotropic second-fundamental-form span: curvature vanishes
    CHECK(curvature_at_base(LambdaMap::build(make_isotropic_family(rng, 2, 2))).is_zero());
    CHECK(curvature_at_base(LambdaMap::build(make_flat_family(rng, 2, 1))).is_zero());
    // product-free but non-proportional operators: curved in general
    LambdaMap lmt = LambdaMap::build(make_triangular_family(rng, 2, 1));
    CHECK_FALSE(curvature_at_base(lmt).is_zero());

    LambdaMap lm33 = LambdaMap::build(make_theorem33_family());
    CurvatureTensor r = curvature_at_base(lm33);
    CHECK_FALSE(r.is_zero());
    CHECK(curvature_via_phi(lm33) == r);
    // the form -w0(psi(phi^{-1} R) ., .) has matrix w0 psi for sp-valued psi
    Mat ric = ricci(lm33.space(), r);
    CHECK(ric == lm33.space().omega0() * psi_of_curvature_element(lm33));
    // random families too
    for (int k = 0; k < 5; ++k) {
        LambdaMap lmr = LambdaMap::build(random_family(rng, 2, 1));
        CurvatureTensor rr = curvature_at_base(lmr);
        CHECK(curvature_via_phi(lmr) == rr);
        CHECK(ricci(lmr.space(), rr) == lmr.space().omega0() * psi_of_curvature_element(lmr));
    }
}

TEST_CASE("condition 3 verdict depends only on the curvature element") {
    Rng rng(45);
    auto conjugate_family = [&](const ShapeFamily& fam) {
        // symplectic change of normal frame: C'_j = sum_i S_ij C_i
        std::size_t m = fam.space().normal_dim();
        Mat s = random_symplectic(rng, fam.space().p());
        CHECK(s.transpose() * fam.space().omegaN0() * s == fam.space().omegaN0());
        std::vector<Mat> c2(m, Mat(fam.space().tangent_dim(), fam.space().tangent_dim()));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < m; ++i) {
                if (s.at(i, j).is_zero()) continue;
                c2[j] += s.at(i, j) * fam.C()[i];
            }
        return ShapeFamily(fam.space(), std::move(c2));
    };
    // true verdict preserved
    ShapeFamily good = make_theorem33_family();
    ShapeFamily good2 = conjugate_family(good);
    LambdaMap lm_good = LambdaMap::build(ShapeFamily(good.space(), good.C()));
    LambdaMap lm_good2 = LambdaMap::build(good2);
    CHECK(curvature_via_phi(lm_good) == curvature_via_phi(lm_good2));
    CHECK(check_condition_3(lm_good).pass == check_condition_3(lm_good2).pass);
    // false verdict preserved
    Mat c1(4, 4), c2m(4, 4);
    c1.at(0, 0) = Rational(1);
    c1.at(2, 2) = Rational(-1);
    c2m.at(1, 1) = Rational(1);
    c2m.at(3, 3) = Rational(-1);
    ShapeFamily bad(SympSpace(2, 1), {c1, c2m});
    ShapeFamily bad2 = conjugate_family(bad);
    LambdaMap lm_bad = LambdaMap::build(ShapeFamily(bad.space(), bad.C()));
    LambdaMap lm_bad2 = LambdaMap::build(bad2);
    CHECK(curvature_via_phi(lm_bad) == curvature_via_phi(lm_bad2));
    CHECK(check_condition_3(lm_bad).pass == check_condition_3(lm_bad2).pass);
    CHECK_FALSE(check_condition_3(lm_bad).pass);
}

TEST_CASE("group algebra: abelian, small, and nilpotent cases") {
    ShapeFamily zero(SympSpace(1, 1), {Mat(2, 2), Mat(2, 2)});
    GroupAlgebra ga0 = lambda_group_algebra(LambdaMap::build(zero));
    CHECK(ga0.closed);
    CHECK(ga0.spanning.size() == 2); // no commutator part
    CHECK(ga0.nilpotency_class == 1);

    LambdaMap lp = LambdaMap::build(make_parabola_family());
    GroupAlgebra gap = lambda_group_algebra(lp);
    CHECK(gap.closed);

    LambdaMap l33 = LambdaMap::build(make_theorem33_family());
    GroupAlgebra ga33 = lambda_group_algebra(l33);
    CHECK(ga33.closed);
    CHECK(ga33.nilpotency_class >= 1); // lower central series reaches zero
}

TEST_CASE("structure constants validated at construction") {
    // theorem family carries consistent constants; corrupt one and construction fails
    ShapeFamily fam = make_theorem33_family();
    REQUIRE(fam.has_b_struct());
    BStruct bad = *fam.b_struct();
    bad.ops[2].at(1, 3) += Rational(1);
    CHECK_THROWS_AS(ShapeFamily(fam.space(), fam.C(), bad, fam.frame()), ValidationError);
}

} // TEST_SUITE
