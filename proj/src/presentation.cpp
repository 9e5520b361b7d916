#include "sympquot/presentation.hpp"

#include <mutex>

namespace sq {

namespace {
#include "presentation_table.inc"
} // namespace

const std::vector<std::string> &coordinate_names() {
    static const std::vector<std::string> names = {
        "w01", "w02", "w03", "w04", "w12", "w13", "w14", "w23", "w24", "w34",
        "u0",  "u1",  "u2",  "u3",  "u4"};
    return names;
}

RingPtr coordinate_ring() {
    static const RingPtr ring = make_ring(coordinate_names());
    return ring;
}

std::size_t pair_coordinate_index(int i, int j) {
    if (i == j || i < 0 || j < 0 || i > 4 || j > 4)
        throw std::invalid_argument("pair_coordinate_index: need distinct indices in 0..4");
    if (i > j)
        std::swap(i, j);
    // Pairs enumerated lexicographically: (0,1), (0,2), ..., (3,4).
    std::size_t idx = 0;
    for (int a = 0; a < i; ++a)
        idx += std::size_t(4 - a);
    return idx + std::size_t(j - i - 1);
}

std::size_t inverse_coordinate_index(int k) {
    if (k < 0 || k > 4)
        throw std::invalid_argument("inverse_coordinate_index: index in 0..4");
    return 10 + std::size_t(k);
}

const std::vector<MultiPoly> &ring_relations() {
    static const std::vector<MultiPoly> relations = [] {
        RingPtr ring = coordinate_ring();
        std::vector<MultiPoly> gens(20, MultiPoly(ring));
        for (int t = 0; t < kRelationTermCount; ++t) {
            const RelationTerm &row = kRelationTerms[t];
            Monomial m(15);
            for (std::size_t v = 0; v < 15; ++v)
                if (row.exps[v] > 0)
                    m = m.with_exponent(v, row.exps[v]);
            gens[row.generator].add_term(m, GaussRational(Rational(row.coefficient)));
        }
        return gens;
    }();
    return relations;
}

IntMatrix torus_weights() {
    IntMatrix u(5, 15);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            std::size_t col = pair_coordinate_index(i, j);
            u.at(std::size_t(i), col) = 1;
            u.at(std::size_t(j), col) = 1;
        }
    for (int k = 0; k < 5; ++k)
        u.at(std::size_t(k), inverse_coordinate_index(k)) = -2;
    return u;
}

const std::array<std::size_t, 15> &cyclic_variable_shift() {
    static const std::array<std::size_t, 15> shift = [] {
        std::array<std::size_t, 15> s{};
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                s[pair_coordinate_index(i, j)] =
                    pair_coordinate_index((i + 1) % 5, (j + 1) % 5);
        for (int k = 0; k < 5; ++k)
            s[inverse_coordinate_index(k)] = inverse_coordinate_index((k + 1) % 5);
        return s;
    }();
    return shift;
}

MultiPoly apply_cyclic_shift(const MultiPoly &p, unsigned times) {
    if (!(*p.ring() == *coordinate_ring()))
        throw std::invalid_argument("apply_cyclic_shift: polynomial outside the coordinate ring");
    const auto &shift = cyclic_variable_shift();
    MultiPoly out(p.ring());
    for (const auto &[m, c] : p.terms()) {
        Monomial moved(15);
        for (std::size_t v = 0; v < 15; ++v) {
            if (m.exponent(v) == 0)
                continue;
            std::size_t target = v;
            for (unsigned t = 0; t < times % 5; ++t)
                target = shift[target];
            moved = moved.with_exponent(target, m.exponent(v));
        }
        out.add_term(moved, c);
    }
    return out;
}

const std::vector<ShiftImage> &cyclic_relation_shift() {
    static std::once_flag flag;
    static std::vector<ShiftImage> images;
    std::call_once(flag, [] {
        const std::vector<MultiPoly> &gens = ring_relations();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            MultiPoly shifted = apply_cyclic_shift(gens[i]);
            bool found = false;
            for (std::size_t j = 0; j < gens.size() && !found; ++j) {
                if (shifted == gens[j]) {
                    images.push_back({j, 1});
                    found = true;
                } else if (shifted == -gens[j]) {
                    images.push_back({j, -1});
                    found = true;
                }
            }
            if (!found)
                throw SqError("SHIFT_MISMATCH",
                              "shifted relation is not plus or minus another relation");
        }
    });
    return images;
}

} // namespace sq
