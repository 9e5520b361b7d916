#pragma once
// Finite matrix groups over the Gaussian rationals: breadth-first closure,
// conjugacy classes, commutators and abelianization, a quaternion-group
// fingerprint test, the sign table of the quadratic eigenforms, monomial
// valuations at order-two elements, and the parity criterion for invariant
// monomials in the eigenforms.
#include "sympquot/poly.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sq {

// Square matrix over the Gaussian rationals; the element of a matrix group.
class GroupElement {
  public:
    explicit GroupElement(std::size_t n)
        : n_(n), a_(n * n, GaussRational(0)) {}

    static GroupElement identity(std::size_t n) {
        GroupElement g(n);
        for (std::size_t i = 0; i < n; ++i)
            g.at(i, i) = GaussRational(1);
        return g;
    }

    std::size_t dim() const { return n_; }
    GaussRational &at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const GaussRational &at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    GroupElement mul(const GroupElement &o) const;
    GroupElement inverse() const; // exact Gauss-Jordan; throws on singular
    GroupElement transpose() const;
    GroupElement negated() const;
    bool is_identity() const;

    bool operator==(const GroupElement &o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const GroupElement &o) const { return !(*this == o); }

    // Canonical text key; doubles as the exact hash for group bookkeeping.
    std::string key() const;

    // Dimension of the fixed space ker(g - id).
    std::size_t fixed_space_dimension() const;

  private:
    std::size_t n_;
    std::vector<GaussRational> a_;
};

struct SymplecticForm {
    GroupElement matrix; // antisymmetric, nondegenerate
};

// Standard form dx1^dx3 + dx2^dx4 on 4 coordinates.
SymplecticForm standard_symplectic_form();

bool preserves_form(const GroupElement &g, const SymplecticForm &form);

// Finite group stored as a breadth-first element list with an index-based
// multiplication table; element 0 is the identity.
class FiniteMatrixGroup {
  public:
    const std::vector<GroupElement> &elements() const { return elements_; }
    const std::vector<std::size_t> &generator_indices() const { return generators_; }
    std::size_t order() const { return elements_.size(); }

    std::size_t product(std::size_t i, std::size_t j) const { return table_[i * elements_.size() + j]; }
    std::size_t inverse(std::size_t i) const { return inverses_[i]; }
    std::size_t element_order(std::size_t i) const;
    std::optional<std::size_t> index_of(const GroupElement &g) const;

    friend FiniteMatrixGroup generate_group(const std::vector<GroupElement> &gens,
                                            std::size_t bound);

  private:
    std::vector<GroupElement> elements_;
    std::vector<std::size_t> generators_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverses_;
};

// Breadth-first closure of the generators (the identity is element 0).
// Throws SqError GROUP_TOO_LARGE when the closure exceeds the bound.
FiniteMatrixGroup generate_group(const std::vector<GroupElement> &gens,
                                 std::size_t bound = 100000);

// Partition into conjugacy classes of element indices; members ascend, and
// classes sort by size then by first member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteMatrixGroup &g);

// Subgroup generated by all commutators, rebuilt as its own group.
FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup &g);

// Elementary divisors of the abelian quotient by the commutator subgroup,
// sorted ascending (prime powers, one entry per cyclic factor).
std::vector<std::size_t> abelianization_invariants(const FiniteMatrixGroup &g);

// True when the normalizer of the order-two subgroup generated by t, taken
// modulo that subgroup, has the quaternion fingerprint: order 8 with a
// unique element of order 2 and six of order 4. Throws SqError NOT_MEMBER
// when t is outside the group.
bool normalizer_quotient_is_Q8(const FiniteMatrixGroup &g, const GroupElement &t);

// Degree-2 form in the four ambient coordinates.
struct QuadraticForm {
    MultiPoly poly;
};

// The polynomial ring in x1..x4.
RingPtr quadratic_ring();

// The ten standard eigenforms, indexed like the pair coordinates:
// (0,1), (0,2), (0,3), (0,4), (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
const std::vector<QuadraticForm> &standard_quadratic_forms();

// The five order-two generator matrices.
const std::vector<GroupElement> &standard_generators();

// Pull a polynomial in x back along g: substitute x -> g^{-1} x. This
// right action on functions is the convention used project-wide.
MultiPoly act_on_polynomial(const GroupElement &g, const MultiPoly &f);

// Entry (form, generator) = the scalar by which the generator acts; the
// forms must be simultaneous eigenvectors with scalar +1 or -1, otherwise
// SqError NOT_EIGENVECTOR.
std::vector<std::vector<int>> sign_table(const FiniteMatrixGroup &g,
                                         const std::vector<QuadraticForm> &forms);

// Valuation of f at the order-two element t: diagonalize t by the exact
// projectors (id +- t)/2, rewrite f in that eigenbasis, weight the
// -1-eigencoordinates 1 and the +1-eigencoordinates 0, and take the
// minimum weighted degree. Throws SqError VALUATION_INFINITE on f = 0.
unsigned monomial_valuation(const GroupElement &t, const MultiPoly &f);

// Parity criterion: exponents over the ten index pairs give an invariant
// monomial in the eigenforms exactly when every index 0..4 has even total.
bool invariant_monomial_check(const std::map<std::pair<int, int>, unsigned> &exponents);

// Cross-check: direct invariance of the eigenform monomial under every
// element of the given group.
bool monomial_invariant_by_direct_action(
    const FiniteMatrixGroup &g,
    const std::map<std::pair<int, int>, unsigned> &exponents);

} // namespace sq
