#include <doctest.h>

#include "esymm/errors.hpp"
#include "esymm/matrix.hpp"
#include "esymm/rng.hpp"
#include "esymm/symp_space.hpp"
#include "test_helpers.hpp"

using namespace esymm;
using namespace esymm::testing;

namespace {

// independent schoolbook oracle: plain triple loop, no skipping
Mat schoolbook_mul(const Mat& a, const Mat& b) {
    Mat m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational s;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
            m.at(i, j) = s;
        }
    return m;
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("identity times M is M") {
    Rng rng(7);
    Mat m = random_mat(rng, 2, 3);
    CHECK(Mat::identity(2) * m == m);
    CHECK(m * Mat::identity(3) == m);
}

TEST_CASE("random product matches schoolbook oracle") {
    Rng rng(11);
    for (int k = 0; k < 20; ++k) {
        Mat a = random_mat(rng, 3, 3), b = random_mat(rng, 3, 3);
        CHECK(a * b == schoolbook_mul(a, b));
    }
}

TEST_CASE("product associativity on random triples") {
    Rng rng(12);
    for (int k = 0; k < 20; ++k) {
        Mat a = random_mat(rng, 2, 3), b = random_mat(rng, 3, 4), c = random_mat(rng, 4, 2);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("dimension mismatch raises") {
    Mat a(2, 3), b(2, 3);
    CHECK_THROWS_AS(a * b, DimensionError);
}

TEST_CASE("solve with identity returns rhs") {
    Rng rng(13);
    Mat rhs = random_mat(rng, 4, 2);
    CHECK(Mat::identity(4).solve(rhs) == rhs);
}

TEST_CASE("standard symplectic block inverts to its negated transpose") {
    Mat j = standard_skew(2);
    Mat inv = j.solve(Mat::identity(4));
    CHECK(inv == -j);
    CHECK(inv == j.transpose());
    CHECK(j * inv == Mat::identity(4));
}

TEST_CASE("random invertible solve verified by substitute-back") {
    Rng rng(14);
    int solved = 0;
    while (solved < 15) {
        Mat m = random_mat(rng, 4, 4);
        Mat rhs = random_mat(rng, 4, 3);
        try {
            Mat x = m.solve(rhs);
            CHECK(m * x == rhs);
            ++solved;
        } catch (const SingularMatrixError&) {
            // random matrix happened to be singular; draw again
        }
    }
}

TEST_CASE("singular solve reports the exact rank") {
    Mat m{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    try {
        m.solve(Mat::identity(2));
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.rank == 1);
    }
}

TEST_CASE("rank and nullspace") {
    Mat m{{Rational(1), Rational(2), Rational(3)},
          {Rational(2), Rational(4), Rational(6)},
          {Rational(1), Rational(0), Rational(1)}};
    CHECK(m.rank() == 2);
    auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(vec_is_zero(m.apply(ns[0])) == true);
    CHECK_FALSE(vec_is_zero(ns[0]));
}

TEST_CASE("char_poly: companion checks") {
    // diag(1,2): lambda^2 - 3 lambda + 2
    Mat d{{Rational(1), Rational(0)}, {Rational(0), Rational(2)}};
    auto c = char_poly(d);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Rational(-3));
    CHECK(c[1] == Rational(2));
    // nilpotent Jordan block
    Mat jv(3, 3);
    jv.at(0, 1) = Rational(1);
    jv.at(1, 2) = Rational(1);
    CHECK(is_nilpotent(jv));
    CHECK_FALSE(is_nilpotent(d));
}

TEST_CASE("span rank and membership") {
    Vec a{Rational(1), Rational(0), Rational(1)};
    Vec b{Rational(0), Rational(1), Rational(1)};
    Vec c{Rational(1), Rational(1), Rational(2)};
    Vec d{Rational(0), Rational(0), Rational(1)};
    CHECK(span_rank({a, b, c}) == 2);
    CHECK(in_span({a, b}, c));
    CHECK_FALSE(in_span({a, b}, d));
}

} // TEST_SUITE
