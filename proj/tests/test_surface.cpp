#include <doctest.h>

#include "esymm/errors.hpp"
#include "esymm/surface.hpp"
#include "test_helpers.hpp"

using namespace esymm;
using namespace esymm::testing;

namespace {

Vec pt4(long a, long b, long c, long d) {
    return Vec{Rational(a), Rational(b), Rational(c), Rational(d)};
}

} // namespace

TEST_SUITE("surface") {

TEST_CASE("zero generators cut out the tangent plane") {
    SympSpace sp(1, 1);
    std::vector<AffineSympElement> gens{{Mat(4, 4), unit_vec(4, 2)}, {Mat(4, 4), unit_vec(4, 3)}};
    SurfaceSpec surf = SurfaceSpec::build(sp, gens);
    CHECK(surf.membership(pt4(5, -3, 0, 0)));
    CHECK_FALSE(surf.membership(pt4(0, 0, 1, 0)));
    auto rep = surf.verify_product_identities();
    CHECK(rep.pass());
    CHECK(rep.pairs_zero);
}

TEST_CASE("parabola: hand-solved surface") {
    SurfaceSpec surf = make_parabola_surface();
    // F1 = -z2^2/2 - z4, F2 = z3  =>  Sigma = {(x1, x2, 0, -x2^2/2)}
    CHECK(surf.membership(pt4(0, 0, 0, 0)));
    CHECK(surf.membership(pt4(0, 2, 0, -2)));
    CHECK(surf.membership(pt4(7, 2, 0, -2)));
    CHECK_FALSE(surf.membership(pt4(0, 2, 0, 0)));
    CHECK_FALSE(surf.membership(pt4(0, 2, 1, -2)));
}

TEST_CASE("parabola: tangent-normal split at a point") {
    SurfaceSpec surf = make_parabola_surface();
    Vec z0 = zero_vec(4);
    auto split0 = surf.tangent_normal_split(z0);
    CHECK(split0.normal[0] == unit_vec(4, 2));
    CHECK(split0.normal[1] == unit_vec(4, 3));
    Vec z = pt4(0, 2, 0, -2);
    auto split = surf.tangent_normal_split(z);
    CHECK(split.normal[0] == pt4(2, 0, 1, 0)); // A1 z + a1
    CHECK(split.normal[1] == unit_vec(4, 3));
    CHECK(split.tangent.size() == 2);
}

TEST_CASE("parabola: extrinsic symmetry at the origin") {
    SurfaceSpec surf = make_parabola_surface();
    Vec x = zero_vec(4);
    Vec y = pt4(0, 2, 0, -2);
    AffineMap s = surf.symmetry_at(x);
    CHECK(s.apply(y) == pt4(0, -2, 0, -2));
    CHECK(surf.verify_extrinsic_symmetry(x, y));
}

TEST_CASE("r8 family: structure constants recover the nonzero product") {
    SurfaceSpec surf = make_r8_surface();
    // A3 A4 = A2: B^2_{34} = 1 (zero-indexed coeff(1, 2, 3))
    CHECK(surf.b_struct().coeff(1, 2, 3) == Rational(1));
    CHECK(surf.b_struct().coeff(1, 3, 2) == Rational(-1));
    CHECK(surf.b_struct().coeff(0, 3, 3) == Rational(-1));
    auto rep = surf.verify_product_identities();
    CHECK(rep.anticommute);
    CHECK(rep.triples_zero);
    CHECK_FALSE(rep.pairs_zero); // A3 A4 = A2 != 0
}

TEST_CASE("r8 family: sampled points, gram constancy, symmetry pairs") {
    SurfaceSpec surf = make_r8_surface();
    Rng rng(51);
    auto points = surf.sample_points(20, rng);
    for (const auto& z : points) {
        CHECK(surf.membership(z));
        auto split = surf.tangent_normal_split(z); // asserts gram constancy internally
        CHECK(split.normal.size() == 4);
    }
    for (int k = 0; k < 25; ++k) {
        const Vec& x = points[rng.below(points.size())];
        const Vec& y = points[rng.below(points.size())];
        CHECK(surf.verify_extrinsic_symmetry(x, y));
    }
}

TEST_CASE("degenerate normal directions are rejected with a rank report") {
    SympSpace sp(1, 1);
    // both translations along the same direction: gram rank 0
    std::vector<AffineSympElement> gens{{Mat(4, 4), unit_vec(4, 2)}, {Mat(4, 4), unit_vec(4, 2)}};
    CHECK_THROWS_WITH_AS(SurfaceSpec::build(sp, gens),
                         doctest::Contains("normal space degenerate"), ValidationError);
}

TEST_CASE("unstabilized families are rejected with residuals") {
    SympSpace sp(1, 1);
    // A1 maps a1 outside span(a1, a2): A1 a1 = e1-ish
    Mat a1(4, 4);
    a1.at(0, 2) = Rational(1); // column 3 (= a1 direction) hits e1
    a1.at(1, 3) = Rational(1);
    // symmetrize into sp: build from omega-symmetric quadratic instead
    // (take A with Omega A symmetric): use A = Omega^{-1} Q with Q symmetric
    Mat q(4, 4);
    q.at(0, 2) = Rational(1);
    q.at(2, 0) = Rational(1);
    Mat a = sp.omega_inv() * q;
    REQUIRE(sp.is_in_sp(a, Block::ambient));
    std::vector<AffineSympElement> gens{{a, unit_vec(4, 2)}, {Mat(4, 4), unit_vec(4, 3)}};
    CHECK_THROWS_WITH_AS(SurfaceSpec::build(sp, gens), doctest::Contains("family not closed"),
                         ValidationError);
}

TEST_CASE("linearly independent generators have all pairwise products zero") {
    Rng rng(52);
    // strictly triangular tangent blocks, zero normal action
    SympSpace sp(2, 1);
    std::vector<AffineSympElement> gens;
    for (int i = 0; i < 2; ++i) {
        Mat s = random_mat(rng, 2, 2, 2, 1);
        Mat c(4, 4);
        c.set_block(0, 2, s + s.transpose());
        Mat a(6, 6);
        a.set_block(0, 0, c);
        gens.push_back(AffineSympElement{a, unit_vec(6, 4 + i)});
    }
    SurfaceSpec surf = SurfaceSpec::build(sp, gens);
    auto rep = surf.verify_product_identities();
    CHECK(rep.pass());
    CHECK(rep.pairs_zero);
}

TEST_CASE("bullet algebra from the block construction") {
    // B(g_k) = 0, B(g_{p+k}) = [[0, D_k], [0, 0]] with D_k symmetric
    Rng rng(53);
    std::size_t p = 2;
    SympSpace sp(1, p);
    std::vector<Mat> b_ops(2 * p, Mat(2 * p, 2 * p));
    for (std::size_t k = 0; k < p; ++k) {
        Mat d = random_mat(rng, p, p, 2, 1);
        b_ops[p + k].set_block(0, p, d + d.transpose());
    }
    std::vector<AffineSympElement> gens;
    for (std::size_t i = 0; i < 2 * p; ++i) {
        Mat a(sp.dim(), sp.dim());
        a.set_block(2, 2, b_ops[i]); // normal block only
        REQUIRE(sp.is_in_sp(a, Block::ambient));
        gens.push_back(AffineSympElement{a, unit_vec(sp.dim(), 2 + i)});
    }
    SurfaceSpec surf = SurfaceSpec::build(sp, gens);
    BulletAlgebra alg = surf.bullet_product(); // validate() inside
    // associativity again through the structure-constant contraction oracle
    for (std::size_t i = 0; i < 2 * p; ++i)
        for (std::size_t j = 0; j < 2 * p; ++j) {
            Vec uv = alg.product(unit_vec(2 * p, i), unit_vec(2 * p, j));
            for (std::size_t k = 0; k < 2 * p; ++k) {
                Vec lhs = alg.product(uv, unit_vec(2 * p, k));
                Vec rhs = alg.of(unit_vec(2 * p, i)).apply(alg.product(unit_vec(2 * p, j), unit_vec(2 * p, k)));
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("zero bullet algebra is trivially associative") {
    SurfaceSpec surf = make_parabola_surface();
    BulletAlgebra alg = surf.bullet_product();
    for (const auto& op : alg.ops) CHECK(op.is_zero());
}

TEST_CASE("reduction lemma: B zero makes the sets syntactically equal") {
    SympSpace sp(1, 1);
    Mat c1(2, 2);
    c1.at(0, 1) = Rational(1);
    ReducedSets sets{sp, {Mat(2, 2), Mat(2, 2)}, {c1, Mat(2, 2)}};
    Rng rng(54);
    CHECK(verify_lemma_MN(sets, 30, rng));
}

TEST_CASE("reduction lemma: nonzero B instance") {
    SympSpace sp(1, 1);
    Mat b2(2, 2);
    b2.at(0, 1) = Rational(1); // B(g_2) = [[0,1],[0,0]]
    ReducedSets sets{sp, {Mat(2, 2), b2}, {Mat(2, 2), Mat(2, 2)}};
    Rng rng(55);
    CHECK(verify_lemma_MN(sets, 30, rng));
}

TEST_CASE("reduction lemma hypotheses are enforced") {
    SympSpace sp(1, 1);
    Mat c1(2, 2);
    c1.at(0, 0) = Rational(1);
    c1.at(1, 1) = Rational(-1); // C1^2 != 0
    ReducedSets sets{sp, {Mat(2, 2), Mat(2, 2)}, {c1, Mat(2, 2)}};
    Rng rng(56);
    CHECK_THROWS_AS(verify_lemma_MN(sets, 5, rng), ValidationError);
}

TEST_CASE("parabola graph description matches the built surface") {
    SurfaceSpec surf = make_parabola_surface();
    SympSpace sp(1, 1);
    Mat c1(2, 2);
    c1.at(0, 1) = Rational(1);
    ReducedSets sets{sp, {Mat(2, 2), Mat(2, 2)}, {c1, Mat(2, 2)}};
    Rng rng(57);
    CHECK(verify_lemma_MN(sets, 20, rng));
    // graph formula u^j = 1/2 sum_i g^{ji} w(x, C_i x) against membership
    for (long x1 = -2; x1 <= 2; ++x1)
        for (long x2 = -2; x2 <= 2; ++x2) {
            Vec x{Rational(x1), Rational(x2)};
            Vec u = sets.graph_normal(x);
            Vec z{x[0], x[1], u[0], u[1]};
            CHECK(surf.membership(z));
            CHECK(sets.in_N(x, u));
            CHECK(sets.in_M(x, u));
        }
}

TEST_CASE("the defining functions are invariant under every surface symmetry") {
    // F_i(S_x y) = F_i(y) for arbitrary ambient y, not only members
    Rng rng(58);
    for (const SurfaceSpec& surf : {make_parabola_surface(), make_r8_surface()}) {
        auto points = surf.sample_points(6, rng);
        for (const auto& x : points) {
            AffineMap s = surf.symmetry_at(x);
            for (int k = 0; k < 10; ++k) {
                Vec y = random_vec(rng, surf.space().dim(), 2, 2);
                Vec sy = s.apply(y);
                for (std::size_t i = 0; i < surf.hamiltonians().size(); ++i)
                    CHECK(surf.F(i).eval(sy) == surf.F(i).eval(y));
            }
        }
    }
}

TEST_CASE("product-free surfaces equal their graph: double inclusion on a grid") {
    SurfaceSpec surf = make_parabola_surface();
    SympSpace sp(1, 1);
    Mat c1(2, 2);
    c1.at(0, 1) = Rational(1);
    ReducedSets sets{sp, {Mat(2, 2), Mat(2, 2)}, {c1, Mat(2, 2)}};
    for (long x1 = -2; x1 <= 2; ++x1)
        for (long x2 = -2; x2 <= 2; ++x2) {
            Vec x{Rational(x1), Rational(x2)};
            // graph point lies on the surface
            Vec u = sets.graph_normal(x);
            CHECK(surf.membership(Vec{x[0], x[1], u[0], u[1]}));
            // and every grid point on the surface lies on the graph
            for (long u1 = -2; u1 <= 2; ++u1)
                for (long u2 = -2; u2 <= 2; ++u2) {
                    Vec z{x[0], x[1], Rational(u1), Rational(u2)};
                    if (surf.membership(z)) {
                        CHECK(Rational(u1) == u[0]);
                        CHECK(Rational(u2) == u[1]);
                    }
                }
        }
}

TEST_CASE("shape family reduction of the r8 surface") {
    SurfaceSpec surf = make_r8_surface();
    REQUIRE(surf.frame_in_normal_block());
    ShapeFamily fam = surf.reduce_to_shape_family();
    CHECK(fam.has_b_struct());
    CHECK_FALSE(fam.products_zero()); // C3 C4 = C2 != 0
    // C2 is the tangent block of A2
    CHECK(fam.C()[1].at(1, 3) == Rational(1));
}

} // TEST_SUITE
