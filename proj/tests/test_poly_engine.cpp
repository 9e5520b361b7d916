#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "sympquot/poly.hpp"
#include "sympquot/presentation.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace sq;

namespace {

RingPtr small_ring(std::vector<std::string> vars) { return make_ring(std::move(vars)); }

MultiPoly var(const RingPtr &r, std::size_t i) { return MultiPoly::variable(r, i); }

// Jacobian of the twenty relations: rows are the fifteen coordinates,
// columns the relations, entry (v, g) the partial derivative dg/dv.
std::vector<std::vector<MultiPoly>> relation_jacobian() {
    const auto &gens = ring_relations();
    std::vector<std::vector<MultiPoly>> jac;
    for (std::size_t v = 0; v < 15; ++v) {
        std::vector<MultiPoly> row;
        for (const MultiPoly &g : gens)
            row.push_back(g.differentiate(v));
        jac.push_back(std::move(row));
    }
    return jac;
}

std::set<std::size_t> all_indices(std::size_t n) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
        s.insert(i);
    return s;
}

} // namespace

TEST_CASE("buchberger on pinned small ideals") {
    SUBCASE("single variable generator is its own basis") {
        RingPtr r = small_ring({"x"});
        Ideal basis = buchberger({r, {var(r, 0)}}, MonomialOrder::grevlex());
        REQUIRE(basis.generators.size() == 1);
        CHECK(basis.generators[0] == var(r, 0));
    }
    SUBCASE("inconsistent system collapses to one") {
        RingPtr r = small_ring({"x", "y"});
        MultiPoly xy1 = var(r, 0) * var(r, 1) - MultiPoly::constant(r, GaussRational(1));
        Ideal basis = buchberger({r, {xy1, var(r, 0)}}, MonomialOrder::grevlex());
        REQUIRE(basis.generators.size() == 1);
        CHECK(basis.generators[0] == MultiPoly::constant(r, GaussRational(1)));
    }
}

TEST_CASE("buchberger is idempotent and contains its input ideal") {
    // The five trinomial relations in the pair coordinates alone.
    RingPtr r = coordinate_ring();
    std::vector<MultiPoly> trinomials(ring_relations().begin(),
                                      ring_relations().begin() + 5);
    MonomialOrder ord = MonomialOrder::grevlex();

    Ideal basis = buchberger({r, trinomials}, ord);
    CHECK(basis.generators.size() >= 5);

    Ideal again = buchberger(basis, ord);
    REQUIRE(again.generators.size() == basis.generators.size());
    for (std::size_t i = 0; i < basis.generators.size(); ++i)
        CHECK(again.generators[i] == basis.generators[i]);

    for (const MultiPoly &g : trinomials)
        CHECK(reduces_to_zero(g, basis.generators, ord));
}

TEST_CASE("face torus membership") {
    SUBCASE("zero ideal always meets the torus") {
        RingPtr r = small_ring({"x", "y"});
        CHECK(nonempty_in_face_torus({r, {}}, {0, 1}));
        CHECK(nonempty_in_face_torus({r, {}}, {}));
    }
    SUBCASE("a vanishing coordinate excludes its torus") {
        RingPtr r = small_ring({"x"});
        CHECK(!nonempty_in_face_torus({r, {var(r, 0)}}, {0}));
    }
    SUBCASE("the full coordinate face is relevant") {
        Ideal full{coordinate_ring(), ring_relations()};
        CHECK(nonempty_in_face_torus(full, all_indices(15)));
    }
}

TEST_CASE("localized dimensions of pinned faces") {
    Ideal full{coordinate_ring(), ring_relations()};

    SUBCASE("all coordinates") {
        CHECK(krull_dimension_in_face_torus(full, all_indices(15)) == 9);
    }
    SUBCASE("one square-inverse coordinate removed") {
        std::set<std::size_t> face = all_indices(15);
        face.erase(inverse_coordinate_index(4));
        CHECK(krull_dimension_in_face_torus(full, face) == 8);
    }
    SUBCASE("all square-inverses and two disjoint pairs removed") {
        std::set<std::size_t> face;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                face.insert(pair_coordinate_index(i, j));
        face.erase(pair_coordinate_index(0, 1));
        face.erase(pair_coordinate_index(2, 3));
        CHECK(krull_dimension_in_face_torus(full, face) == 5);
    }
    SUBCASE("empty face errors") {
        RingPtr r = small_ring({"x"});
        Ideal ix{r, {var(r, 0)}};
        CHECK_THROWS_WITH_AS(krull_dimension_in_face_torus(ix, {0}),
                             doctest::Contains("FACE_EMPTY"), SqError);
    }
}

TEST_CASE("formal derivatives") {
    RingPtr r = coordinate_ring();
    SUBCASE("power rule with a spectator variable") {
        MultiPoly p(r);
        p.add_term(Monomial(15)
                       .with_exponent(pair_coordinate_index(0, 1), 2)
                       .with_exponent(inverse_coordinate_index(1), 1),
                   GaussRational(1));
        MultiPoly d = p.differentiate(pair_coordinate_index(0, 1));
        MultiPoly expect(r);
        expect.add_term(Monomial(15)
                            .with_exponent(pair_coordinate_index(0, 1), 1)
                            .with_exponent(inverse_coordinate_index(1), 1),
                        GaussRational(2));
        CHECK(d == expect);
    }
    SUBCASE("constants die") {
        CHECK(MultiPoly::constant(r, GaussRational(7)).differentiate(3).is_zero());
    }
    SUBCASE("first trinomial relation") {
        MultiPoly d = ring_relations()[0].differentiate(pair_coordinate_index(1, 4));
        CHECK(d == MultiPoly::variable(r, pair_coordinate_index(2, 3)));
    }
}

TEST_CASE("substitution") {
    RingPtr r = coordinate_ring();
    const auto &gens = ring_relations();

    SUBCASE("zeroing every square-inverse kills the quadric relations") {
        std::map<std::size_t, GaussRational> zeros;
        for (int k = 0; k < 5; ++k)
            zeros[inverse_coordinate_index(k)] = GaussRational(0);
        // The last five relations have a square-inverse factor in every term.
        for (std::size_t g = 15; g < 20; ++g)
            CHECK(gens[g].substitute(zeros).is_zero());
    }
    SUBCASE("empty substitution is the identity") {
        for (const MultiPoly &g : gens)
            CHECK(g.substitute({}) == g);
    }
}

TEST_CASE("memoized minors") {
    RingPtr r = coordinate_ring();
    SUBCASE("singleton minor returns the entry") {
        std::vector<std::vector<MultiPoly>> m = {{ring_relations()[0]}};
        CHECK(minor_determinant(m, {0}, {0}) == ring_relations()[0]);
    }
    SUBCASE("zero row annihilates") {
        std::vector<std::vector<MultiPoly>> m(2, std::vector<MultiPoly>(2, MultiPoly(r)));
        m[1][0] = var(r, 0);
        m[1][1] = var(r, 1);
        CHECK(minor_determinant(m, {0, 1}, {0, 1}).is_zero());
    }
    SUBCASE("the all-inverse-zero case minor is a fixed monomial") {
        auto jac = relation_jacobian();
        std::map<std::size_t, GaussRational> zeros;
        for (int k = 0; k < 5; ++k)
            zeros[inverse_coordinate_index(k)] = GaussRational(0);
        for (auto &row : jac)
            for (auto &e : row)
                e = e.substitute(zeros);

        MultiPoly det = minor_determinant(jac, {7, 8, 9, 10, 11, 12}, {2, 3, 4, 5, 8, 15});
        REQUIRE(det.terms().size() == 1);
        // Frozen value: -w01^4 * w02^3 * w12^2.
        MultiPoly expect(r);
        expect.add_term(Monomial(15)
                            .with_exponent(pair_coordinate_index(0, 1), 4)
                            .with_exponent(pair_coordinate_index(0, 2), 3)
                            .with_exponent(pair_coordinate_index(1, 2), 2),
                        GaussRational(-1));
        CHECK(det == expect);
    }
}

TEST_CASE("minor determinant agrees with single-row laplace expansion") {
    RingPtr r = small_ring({"a", "b", "c", "d"});
    std::mt19937_64 rng(555u);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> pick(0, 3);

    auto random_poly = [&]() {
        MultiPoly p(r);
        for (int t = 0; t < 2; ++t) {
            Monomial m(4);
            m = m.with_exponent(std::size_t(pick(rng)), unsigned(pick(rng) % 2 + 1));
            p.add_term(m, GaussRational(Rational(coef(rng))));
        }
        return p;
    };

    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<MultiPoly>> m(4, std::vector<MultiPoly>(4, MultiPoly(r)));
        for (auto &row : m)
            for (auto &e : row)
                e = random_poly();

        std::vector<std::size_t> idx = {0, 1, 2, 3};
        MultiPoly det = minor_determinant(m, idx, idx);

        // Expand by hand along row 0.
        MultiPoly manual(r);
        int sign = 1;
        for (std::size_t j = 0; j < 4; ++j) {
            std::vector<std::size_t> rest_rows = {1, 2, 3};
            std::vector<std::size_t> rest_cols;
            for (std::size_t c = 0; c < 4; ++c)
                if (c != j)
                    rest_cols.push_back(c);
            MultiPoly cof = minor_determinant(m, rest_rows, rest_cols);
            MultiPoly contrib = m[0][j] * cof;
            manual = (sign > 0) ? manual + contrib : manual - contrib;
            sign = -sign;
        }
        CHECK(det == manual);
    }
}

TEST_CASE("membership is monotone under ideal growth") {
    RingPtr r = small_ring({"x", "y", "z"});
    std::mt19937_64 rng(99u);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> expn(0, 2);
    std::uniform_int_distribution<int> nface(0, 2);

    auto random_poly = [&]() {
        MultiPoly p(r);
        for (int t = 0; t < 2; ++t) {
            Monomial m(3);
            for (std::size_t v = 0; v < 3; ++v)
                m = m.with_exponent(v, unsigned(expn(rng)));
            p.add_term(m, GaussRational(Rational(coef(rng))));
        }
        return p;
    };

    for (int trial = 0; trial < 40; ++trial) {
        Ideal small_ideal{r, {random_poly()}};
        Ideal grown = small_ideal;
        grown.generators.push_back(random_poly());

        std::set<std::size_t> face;
        for (std::size_t v = 0; v < 3; ++v)
            if (nface(rng) > 0)
                face.insert(v);

        bool before = nonempty_in_face_torus(small_ideal, face);
        bool after = nonempty_in_face_torus(grown, face);
        if (!before)
            CHECK(!after);
    }
}

TEST_CASE("face membership respects the cyclic shift") {
    Ideal full{coordinate_ring(), ring_relations()};
    const auto &shift = cyclic_variable_shift();

    std::vector<std::set<std::size_t>> faces;
    faces.push_back(all_indices(15));
    // Ten pair coordinates only.
    faces.push_back({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    // A face with one pair and one square-inverse removed.
    {
        std::set<std::size_t> f = all_indices(15);
        f.erase(pair_coordinate_index(0, 1));
        f.erase(inverse_coordinate_index(2));
        faces.push_back(f);
    }

    for (const auto &face : faces) {
        bool base = nonempty_in_face_torus(full, face);
        std::set<std::size_t> shifted;
        for (std::size_t v : face)
            shifted.insert(shift[v]);
        CHECK(nonempty_in_face_torus(full, shifted) == base);
    }
}

TEST_CASE("cyclic shift permutes the relations up to sign") {
    // Frozen signed permutation, verified against an independent
    // symbolic computation.
    const std::vector<ShiftImage> expected = {
        {1, -1},  {2, -1},  {3, -1},  {4, -1},  {0, 1},
        {14, 1},  {5, 1},   {11, 1},  {13, 1},  {6, 1},
        {7, 1},   {8, 1},   {9, -1},  {10, 1},  {12, -1},
        {16, 1},  {18, 1},  {19, 1},  {17, 1},  {15, 1},
    };
    const auto &got = cyclic_relation_shift();
    REQUIRE(got.size() == 20);
    for (std::size_t i = 0; i < 20; ++i) {
        CHECK(got[i].index == expected[i].index);
        CHECK(got[i].sign == expected[i].sign);
    }
}

TEST_CASE("canonical polynomial text form") {
    RingPtr r = small_ring({"x", "y"});
    MultiPoly p(r);
    p.add_term(Monomial(2).with_exponent(0, 2), GaussRational(1));
    p.add_term(Monomial(2).with_exponent(1, 1), GaussRational(Rational(-3)));
    p.add_term(Monomial(2), GaussRational(Rational(Int(1), Int(2)), Rational(Int(1), Int(2))));
    CHECK(p.str() == "x^2 - 3*y + (1/2+1/2*i)");
    CHECK(MultiPoly(r).str() == "0");
}
