#pragma once
// Exact multivariate polynomials over the Gaussian rationals with
// Groebner-basis machinery: Buchberger's algorithm, localized triviality
// and Krull dimension via the Rabinowitsch trick, formal derivatives,
// substitution, ring maps, and memoized determinant minors.
#include "sympquot/exact.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sq {

// Error with a stable machine-readable code, surfaced in CLI reports.
struct SqError : std::runtime_error {
    std::string code;
    SqError(std::string c, const std::string &msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// Ordered list of variable names; fixed per ring, at most 16 variables.
struct RingContext {
    std::vector<std::string> vars;
    bool operator==(const RingContext &o) const { return vars == o.vars; }
};
using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::vector<std::string> vars);

inline constexpr std::size_t kMaxRingVars = 16;

// Exponent vector with a cached total degree.
class Monomial {
  public:
    explicit Monomial(std::size_t nvars) : n_(nvars), deg_(0) {
        if (nvars > kMaxRingVars)
            throw std::invalid_argument("Monomial: too many variables");
        exps_.fill(0);
    }
    static Monomial variable(std::size_t nvars, std::size_t idx, unsigned exp = 1) {
        Monomial m(nvars);
        return m.with_exponent(idx, exp);
    }

    std::size_t nvars() const { return n_; }
    unsigned exponent(std::size_t i) const { return exps_[i]; }
    unsigned total_degree() const { return deg_; }
    bool is_constant() const { return deg_ == 0; }

    Monomial with_exponent(std::size_t i, unsigned exp) const {
        if (i >= n_)
            throw std::out_of_range("Monomial: variable index out of range");
        if (exp > 0xffffu)
            throw std::overflow_error("Monomial: exponent too large");
        Monomial m = *this;
        m.deg_ += exp - m.exps_[i];
        m.exps_[i] = static_cast<std::uint16_t>(exp);
        return m;
    }

    Monomial times(const Monomial &o) const {
        Monomial m(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            unsigned s = unsigned(exps_[i]) + unsigned(o.exps_[i]);
            if (s > 0xffffu)
                throw std::overflow_error("Monomial: exponent overflow");
            m.exps_[i] = static_cast<std::uint16_t>(s);
        }
        m.deg_ = deg_ + o.deg_;
        return m;
    }
    // True when this divides other.
    bool divides(const Monomial &o) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (exps_[i] > o.exps_[i])
                return false;
        return true;
    }
    // other / this; requires divisibility.
    Monomial quotient_of(const Monomial &o) const {
        Monomial m(n_);
        for (std::size_t i = 0; i < n_; ++i)
            m.exps_[i] = static_cast<std::uint16_t>(o.exps_[i] - exps_[i]);
        m.deg_ = o.deg_ - deg_;
        return m;
    }
    Monomial lcm_with(const Monomial &o) const {
        Monomial m(n_);
        unsigned deg = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            m.exps_[i] = std::max(exps_[i], o.exps_[i]);
            deg += m.exps_[i];
        }
        m.deg_ = deg;
        return m;
    }

    bool operator==(const Monomial &o) const {
        return n_ == o.n_ && exps_ == o.exps_;
    }
    bool operator!=(const Monomial &o) const { return !(*this == o); }

    // Plain lexicographic compare used for canonical storage only; the
    // algebraic term orders live in MonomialOrder.
    bool canonical_less(const Monomial &o) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (exps_[i] != o.exps_[i])
                return exps_[i] < o.exps_[i];
        return false;
    }

  private:
    std::array<std::uint16_t, kMaxRingVars> exps_;
    std::size_t n_;
    unsigned deg_;
};

struct MonomialCanonicalLess {
    bool operator()(const Monomial &a, const Monomial &b) const {
        return a.canonical_less(b);
    }
};

// Total multiplicative term order: graded reverse lexicographic,
// lexicographic, or a block order (lex on a leading prefix, grevlex on
// the remaining variables).
class MonomialOrder {
  public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder block_lex_then_grevlex(std::size_t lex_prefix) {
        return MonomialOrder(Kind::Block, lex_prefix);
    }

    Kind kind() const { return kind_; }
    bool less(const Monomial &a, const Monomial &b) const;

  private:
    MonomialOrder(Kind k, std::size_t p) : kind_(k), lex_prefix_(p) {}
    Kind kind_;
    std::size_t lex_prefix_;
};

// Sparse polynomial: canonical map from monomials to nonzero coefficients.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, GaussRational, MonomialCanonicalLess>;

    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_)
            throw std::invalid_argument("MultiPoly: null ring");
    }
    static MultiPoly constant(RingPtr ring, const GaussRational &c);
    static MultiPoly variable(RingPtr ring, std::size_t idx);

    const RingPtr &ring() const { return ring_; }
    std::size_t nvars() const { return ring_->vars.size(); }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Zero or a single degree-0 term.
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    GaussRational constant_value() const {
        if (terms_.empty())
            return GaussRational(0);
        return terms_.begin()->second;
    }

    void add_term(const Monomial &m, const GaussRational &c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly &o) const;
    MultiPoly operator-(const MultiPoly &o) const;
    MultiPoly operator*(const MultiPoly &o) const;
    MultiPoly scaled(const GaussRational &c) const;

    bool operator==(const MultiPoly &o) const {
        return *ring_ == *o.ring_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly &o) const { return !(*this == o); }

    MultiPoly differentiate(std::size_t var) const;
    MultiPoly substitute(const std::map<std::size_t, GaussRational> &assignment) const;
    // Ring homomorphism: variable i goes to images[i] in the target ring.
    MultiPoly map_into(const RingPtr &target, const std::vector<MultiPoly> &images) const;

    std::pair<Monomial, GaussRational> leading_term(const MonomialOrder &order) const;

    // Canonical text form: terms sorted descending in the storage order,
    // used by reports and golden files.
    std::string str() const;

  private:
    RingPtr ring_;
    TermMap terms_;
};

struct Ideal {
    RingPtr ring;
    std::vector<MultiPoly> generators;
};

// Reduced Groebner basis by Buchberger's algorithm with the normal
// selection strategy and the product and chain criteria; leading
// coefficients are normalized to 1 and the basis is sorted by leading
// monomial for determinism.
Ideal buchberger(const Ideal &ideal, const MonomialOrder &order);

// Full normal-form reduction; true when p reduces to zero against basis.
bool reduces_to_zero(const MultiPoly &p, const std::vector<MultiPoly> &basis,
                     const MonomialOrder &order);

// True when the vanishing locus of the ideal, with off-face variables set
// to zero, meets the torus where every face variable is nonzero. Uses the
// Rabinowitsch trick with an auxiliary variable placed last in the order.
bool nonempty_in_face_torus(const Ideal &ideal, const std::set<std::size_t> &face);

// Krull dimension of the localized quotient ring, by exhaustive search for
// a maximum variable subset independent modulo the leading ideal. The
// auxiliary localization variable is checked to be algebraic and excluded.
// Throws SqError FACE_EMPTY when the face is not relevant.
std::size_t krull_dimension_in_face_torus(const Ideal &ideal,
                                          const std::set<std::size_t> &face);

// Exact determinant of the square submatrix on the given rows and columns,
// by cofactor expansion with memoized sub-minors.
MultiPoly minor_determinant(const std::vector<std::vector<MultiPoly>> &matrix,
                            const std::vector<std::size_t> &rows,
                            const std::vector<std::size_t> &cols);

} // namespace sq
