#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "sympquot/exact.hpp"
#include "sympquot/matrix.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>

using namespace sq;

namespace {

// Torus weight matrix of the coordinate ring: ten pair coordinates of
// weight e_i + e_j followed by five coordinates of weight -2e_k.
IntMatrix weight_matrix() {
    IntMatrix u(5, 15);
    std::size_t col = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            u.at(i, col) = 1;
            u.at(j, col) = 1;
            ++col;
        }
    for (int k = 0; k < 5; ++k) {
        u.at(k, col) = -2;
        ++col;
    }
    return u;
}

IntMatrix diagonal_reconstruction(const SmithResult &s, std::size_t rows,
                                  std::size_t cols) {
    IntMatrix d(rows, cols);
    for (std::size_t k = 0; k < s.diag.size(); ++k)
        d.at(k, k) = s.diag[k];
    return d;
}

Rational random_rational(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    return Rational(Int(num(rng)), Int(den(rng)));
}

GaussRational random_gauss_rational(std::mt19937_64 &rng) {
    return GaussRational(random_rational(rng), random_rational(rng));
}

} // namespace

TEST_CASE("rationals stay reduced with positive denominator") {
    Rational a(Int(6), Int(-4));
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(Int(0), Int(-7)) == Rational(0));
    CHECK(Rational(Int(10), Int(5)).str() == "2");
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(Int(2), Int(3)) + Rational(Int(1), Int(6)) == Rational(Int(5), Int(6)));
    CHECK(Rational(Int(-1), Int(3)) < Rational(Int(1), Int(4)));
    CHECK(Rational(Int(-5), Int(10)).abs() == Rational(Int(1), Int(2)));
}

TEST_CASE("gaussian rational field axioms on random triples") {
    std::mt19937_64 rng(20260822u);
    for (int trial = 0; trial < 200; ++trial) {
        GaussRational a = random_gauss_rational(rng);
        GaussRational b = random_gauss_rational(rng);
        GaussRational c = random_gauss_rational(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + GaussRational(0) == a);
        CHECK(a * GaussRational(1) == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) {
            CHECK(a * a.inv() == GaussRational(1));
            CHECK(a.conj().conj() == a);
        }
    }
}

TEST_CASE("gaussian integer norm is multiplicative") {
    std::mt19937_64 rng(777u);
    std::uniform_int_distribution<int> coef(-30, 30);
    for (int trial = 0; trial < 200; ++trial) {
        GaussInt a(Int(coef(rng)), Int(coef(rng)));
        GaussInt b(Int(coef(rng)), Int(coef(rng)));
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK(a.norm() >= 0);
        CHECK((a * a.conj()) == GaussInt(a.norm(), Int(0)));
    }
}

TEST_CASE("the four-element ring Z[i]/2") {
    Z2iElem zero(0, 0), one(1, 0), imag(0, 1), mixed(1, 1);
    Z2iElem all[4] = {zero, one, imag, mixed};

    CHECK((mixed * mixed).is_zero()); // (1+i)^2 = 2i = 0
    CHECK(imag * imag == one);        // i^2 = -1 = 1

    int annihilated = 0;
    for (const Z2iElem &v : all) {
        CHECK(v + v == zero); // addition has exponent 2
        if ((mixed * v).is_zero()) {
            ++annihilated;
            CHECK(v.annihilated_by_one_plus_i());
        } else {
            CHECK(!v.annihilated_by_one_plus_i());
        }
    }
    CHECK(annihilated == 2); // exactly {0, 1+i}
}

TEST_CASE("smith normal form on pinned examples") {
    SUBCASE("identity") {
        auto s = smith_normal_form(IntMatrix::identity(2));
        REQUIRE(s.diag.size() == 2);
        CHECK(s.diag[0] == 1);
        CHECK(s.diag[1] == 1);
    }
    SUBCASE("divisibility reordering") {
        IntMatrix m(2, 2);
        m.at(0, 0) = 4;
        m.at(1, 1) = 2;
        auto s = smith_normal_form(m);
        REQUIRE(s.diag.size() == 2);
        CHECK(s.diag[0] == 2);
        CHECK(s.diag[1] == 4);
    }
    SUBCASE("sign-free diagonal on -2 times identity") {
        IntMatrix u = weight_matrix();
        std::vector<std::size_t> ucols = {10, 11, 12, 13, 14};
        auto s = smith_normal_form(u.select_columns(ucols));
        REQUIRE(s.diag.size() == 5);
        for (const Int &d : s.diag)
            CHECK(d == 2);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(424242u);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t r = static_cast<std::size_t>(dim(rng));
        std::size_t c = static_cast<std::size_t>(dim(rng));
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = entry(rng);

        SmithResult s = smith_normal_form(m);

        CHECK(s.left.mul(m).mul(s.right) == diagonal_reconstruction(s, r, c));

        Int dl = determinant(s.left);
        Int dr = determinant(s.right);
        CHECK((dl == 1 || dl == -1));
        CHECK((dr == 1 || dr == -1));

        for (std::size_t k = 0; k < s.diag.size(); ++k) {
            CHECK(s.diag[k] > 0);
            if (k + 1 < s.diag.size())
                CHECK(s.diag[k + 1] % s.diag[k] == 0);
        }
    }
}

TEST_CASE("isotropy order from weight columns") {
    IntMatrix u = weight_matrix();

    SUBCASE("all fifteen coordinates give order 2") {
        std::vector<std::size_t> all_cols;
        for (std::size_t j = 0; j < 15; ++j)
            all_cols.push_back(j);
        auto order = isotropy_order(u.select_columns(all_cols));
        REQUIRE(order.has_value());
        CHECK(*order == 2);
    }
    SUBCASE("empty column set is the whole torus") {
        CHECK(!isotropy_order(u.select_columns({})).has_value());
    }
    SUBCASE("the five square-inverse coordinates give order 32") {
        auto order = isotropy_order(u.select_columns({10, 11, 12, 13, 14}));
        REQUIRE(order.has_value());
        CHECK(*order == 32);
    }
}

TEST_CASE("kernels over Z[i]/2 by enumeration") {
    SUBCASE("zero matrix has full kernel") {
        Z2iMatrix z(2, 2);
        CHECK(kernel_over_Z2i(z).size() == 16);
    }
    SUBCASE("identity has trivial kernel") {
        auto k = kernel_over_Z2i(Z2iMatrix::identity(2));
        REQUIRE(k.size() == 1);
        CHECK(k[0][0].is_zero());
        CHECK(k[0][1].is_zero());
    }
    SUBCASE("a nilpotent example has a 4-element kernel annihilated by 1+i") {
        // The matrix with entries 1+i, 0 / 1+i, 1+i: the reduction mod 2 of
        // a unit-translation generator minus the identity.
        Z2iMatrix m(2, 2);
        m.at(0, 0) = Z2iElem(1, 1);
        m.at(1, 0) = Z2iElem(1, 1);
        m.at(1, 1) = Z2iElem(1, 1);
        auto k = kernel_over_Z2i(m);
        REQUIRE(k.size() == 4);
        for (const auto &v : k)
            for (const auto &e : v)
                CHECK(e.annihilated_by_one_plus_i());
    }
    SUBCASE("enumeration bound") {
        Z2iMatrix wide(1, 9);
        CHECK_THROWS_AS(kernel_over_Z2i(wide), std::invalid_argument);
    }
}
