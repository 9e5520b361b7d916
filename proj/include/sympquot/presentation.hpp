#pragma once
// The presentation of the invariant coordinate ring: fifteen named
// coordinates (ten pair coordinates w_ij and five square-inverse
// coordinates u_k), the twenty defining relations, the torus weight
// matrix, and the cyclic index shift the whole system respects.
#include "sympquot/matrix.hpp"
#include "sympquot/poly.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace sq {

// Variable order: w01 w02 w03 w04 w12 w13 w14 w23 w24 w34 u0 u1 u2 u3 u4.
const std::vector<std::string> &coordinate_names();
RingPtr coordinate_ring();

// Index of w_{min(i,j),max(i,j)} (i != j), and of u_k.
std::size_t pair_coordinate_index(int i, int j);
std::size_t inverse_coordinate_index(int k);

// The twenty defining relations; the first five are the trinomials in the
// pair coordinates alone.
const std::vector<MultiPoly> &ring_relations();

// 5 x 15 weight matrix: pair coordinates have weight e_i + e_j, the
// square-inverse coordinates have weight -2 e_k.
IntMatrix torus_weights();

// Index permutation induced on the coordinates by i -> i+1 mod 5.
const std::array<std::size_t, 15> &cyclic_variable_shift();

// Apply the cyclic shift to a polynomial in the coordinate ring.
MultiPoly apply_cyclic_shift(const MultiPoly &p, unsigned times = 1);

// Image of each relation under the cyclic shift, as a signed index into
// the relation list. Computed and verified at call time; throws SqError
// SHIFT_MISMATCH if some shifted relation is not plus or minus another.
struct ShiftImage {
    std::size_t index;
    int sign;
};
const std::vector<ShiftImage> &cyclic_relation_shift();

} // namespace sq
