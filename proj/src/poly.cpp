#include "sympquot/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace sq {

RingPtr make_ring(std::vector<std::string> vars) {
    if (vars.size() > kMaxRingVars)
        throw std::invalid_argument("make_ring: too many variables");
    return std::make_shared<const RingContext>(RingContext{std::move(vars)});
}

bool MonomialOrder::less(const Monomial &a, const Monomial &b) const {
    switch (kind_) {
    case Kind::Lex:
        for (std::size_t i = 0; i < a.nvars(); ++i)
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) < b.exponent(i);
        return false;
    case Kind::Grevlex: {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        for (std::size_t i = a.nvars(); i-- > 0;)
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) > b.exponent(i);
        return false;
    }
    case Kind::Block: {
        for (std::size_t i = 0; i < lex_prefix_ && i < a.nvars(); ++i)
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) < b.exponent(i);
        unsigned da = 0, db = 0;
        for (std::size_t i = lex_prefix_; i < a.nvars(); ++i) {
            da += a.exponent(i);
            db += b.exponent(i);
        }
        if (da != db)
            return da < db;
        for (std::size_t i = a.nvars(); i-- > lex_prefix_;)
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) > b.exponent(i);
        return false;
    }
    }
    return false;
}

MultiPoly MultiPoly::constant(RingPtr ring, const GaussRational &c) {
    MultiPoly p(std::move(ring));
    if (!c.is_zero())
        p.terms_.emplace(Monomial(p.nvars()), c);
    return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t idx) {
    MultiPoly p(std::move(ring));
    p.terms_.emplace(Monomial::variable(p.nvars(), idx), GaussRational(1));
    return p;
}

void MultiPoly::add_term(const Monomial &m, const GaussRational &c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(ring_);
    for (const auto &[m, c] : terms_)
        p.terms_.emplace(m, -c);
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly &o) const {
    MultiPoly p = *this;
    for (const auto &[m, c] : o.terms_)
        p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly &o) const {
    MultiPoly p = *this;
    for (const auto &[m, c] : o.terms_)
        p.add_term(m, -c);
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly &o) const {
    MultiPoly p(ring_);
    for (const auto &[ma, ca] : terms_)
        for (const auto &[mb, cb] : o.terms_)
            p.add_term(ma.times(mb), ca * cb);
    return p;
}

MultiPoly MultiPoly::scaled(const GaussRational &c) const {
    MultiPoly p(ring_);
    if (c.is_zero())
        return p;
    for (const auto &[m, coef] : terms_)
        p.terms_.emplace(m, coef * c);
    return p;
}

MultiPoly MultiPoly::differentiate(std::size_t var) const {
    if (var >= nvars())
        throw std::out_of_range("differentiate: variable index out of range");
    MultiPoly p(ring_);
    for (const auto &[m, c] : terms_) {
        unsigned e = m.exponent(var);
        if (e == 0)
            continue;
        p.add_term(m.with_exponent(var, e - 1), c * GaussRational(Rational(int(e))));
    }
    return p;
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, GaussRational> &assignment) const {
    MultiPoly p(ring_);
    for (const auto &[m, c] : terms_) {
        GaussRational coef = c;
        Monomial reduced = m;
        for (const auto &[var, value] : assignment) {
            unsigned e = m.exponent(var);
            if (e == 0)
                continue;
            reduced = reduced.with_exponent(var, 0);
            GaussRational pw(1);
            for (unsigned k = 0; k < e; ++k)
                pw *= value;
            coef *= pw;
        }
        p.add_term(reduced, coef);
    }
    return p;
}

MultiPoly MultiPoly::map_into(const RingPtr &target,
                              const std::vector<MultiPoly> &images) const {
    if (images.size() != nvars())
        throw std::invalid_argument("map_into: one image per source variable required");
    for (const MultiPoly &im : images)
        if (!(*im.ring() == *target))
            throw std::invalid_argument("map_into: image outside target ring");

    // Cache successive powers of each image as they are needed.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    auto power = [&](std::size_t v, unsigned e) -> const MultiPoly & {
        auto &cache = powers[v];
        if (cache.empty())
            cache.push_back(MultiPoly::constant(target, GaussRational(1)));
        while (cache.size() <= e)
            cache.push_back(cache.back() * images[v]);
        return cache[e];
    };

    MultiPoly out(target);
    for (const auto &[m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (std::size_t v = 0; v < nvars(); ++v)
            if (m.exponent(v) > 0)
                term = term * power(v, m.exponent(v));
        out = out + term;
    }
    return out;
}

std::pair<Monomial, GaussRational> MultiPoly::leading_term(const MonomialOrder &order) const {
    if (terms_.empty())
        throw std::logic_error("leading_term: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.less(best->first, it->first))
            best = it;
    return {best->first, best->second};
}

namespace {

std::string monomial_str(const Monomial &m, const RingContext &ring) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        unsigned e = m.exponent(i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += ring.vars[i];
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string coefficient_str(const GaussRational &c) {
    std::string s = c.str();
    // Parenthesize mixed re/im coefficients so terms stay unambiguous.
    if (s.find_first_of("+-", 1) != std::string::npos)
        return "(" + s + ")";
    return s;
}

} // namespace

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial &m = it->first;
        const GaussRational &c = it->second;
        std::string mono = monomial_str(m, *ring_);
        std::string term;
        if (mono.empty())
            term = coefficient_str(c);
        else if (c == GaussRational(1))
            term = mono;
        else if (c == GaussRational(-1))
            term = "-" + mono;
        else
            term = coefficient_str(c) + "*" + mono;
        if (out.empty())
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

namespace {

using Term = std::pair<Monomial, GaussRational>;

// Working representation inside Buchberger: terms sorted descending in
// the run's order.
struct OrdPoly {
    std::vector<Term> t;
    bool is_zero() const { return t.empty(); }
    const Monomial &lm() const { return t.front().first; }
    const GaussRational &lc() const { return t.front().second; }
};

OrdPoly to_ord(const MultiPoly &p, const MonomialOrder &order) {
    OrdPoly out;
    out.t.assign(p.terms().begin(), p.terms().end());
    std::sort(out.t.begin(), out.t.end(), [&](const Term &a, const Term &b) {
        return order.less(b.first, a.first);
    });
    return out;
}

MultiPoly from_ord(const OrdPoly &p, const RingPtr &ring) {
    MultiPoly out(ring);
    for (const Term &t : p.t)
        out.add_term(t.first, t.second);
    return out;
}

// f - scale * shift * g, both inputs sorted descending; merge in one pass.
OrdPoly sub_scaled(const OrdPoly &f, const OrdPoly &g, const Monomial &shift,
                   const GaussRational &scale, const MonomialOrder &order) {
    OrdPoly out;
    out.t.reserve(f.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < f.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            out.t.push_back(f.t[i++]);
            continue;
        }
        Monomial gm = g.t[j].first.times(shift);
        if (i == f.t.size()) {
            GaussRational c = -(scale * g.t[j].second);
            if (!c.is_zero())
                out.t.emplace_back(gm, c);
            ++j;
            continue;
        }
        const Monomial &fm = f.t[i].first;
        if (fm == gm) {
            GaussRational c = f.t[i].second - scale * g.t[j].second;
            if (!c.is_zero())
                out.t.emplace_back(fm, c);
            ++i;
            ++j;
        } else if (order.less(gm, fm)) {
            out.t.push_back(f.t[i++]);
        } else {
            GaussRational c = -(scale * g.t[j].second);
            if (!c.is_zero())
                out.t.emplace_back(gm, c);
            ++j;
        }
    }
    return out;
}

// Full normal form of f against the basis: cancels every reducible term,
// not only the leading one.
OrdPoly normal_form(OrdPoly f, const std::vector<OrdPoly> &basis,
                    const MonomialOrder &order) {
    OrdPoly result;
    while (!f.is_zero()) {
        bool reduced = false;
        for (const OrdPoly &g : basis) {
            if (g.is_zero())
                continue;
            if (g.lm().divides(f.lm())) {
                Monomial shift = g.lm().quotient_of(f.lm());
                GaussRational scale = f.lc() / g.lc();
                f = sub_scaled(f, g, shift, scale, order);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result.t.push_back(f.t.front());
            f.t.erase(f.t.begin());
        }
    }
    return result;
}

OrdPoly s_polynomial(const OrdPoly &f, const OrdPoly &g, const MonomialOrder &order) {
    Monomial l = f.lm().lcm_with(g.lm());
    Monomial sf = f.lm().quotient_of(l);
    // spoly = (l/lm f)(1/lc f) f - (l/lm g)(1/lc g) g; build the first half
    // then subtract the second through the merge primitive.
    OrdPoly lhs;
    lhs.t.reserve(f.t.size());
    GaussRational inv_cf = f.lc().inv();
    for (const Term &t : f.t)
        lhs.t.emplace_back(t.first.times(sf), t.second * inv_cf);
    Monomial sg = g.lm().quotient_of(l);
    return sub_scaled(lhs, g, sg, g.lc().inv(), order);
}

struct PairKey {
    std::size_t i, j;
    bool operator==(const PairKey &o) const { return i == o.i && j == o.j; }
    bool operator<(const PairKey &o) const {
        return i != o.i ? i < o.i : j < o.j;
    }
};

} // namespace

Ideal buchberger(const Ideal &ideal, const MonomialOrder &order) {
    if (!ideal.ring || ideal.ring->vars.empty())
        throw std::invalid_argument("buchberger: empty ring context");

    std::vector<OrdPoly> basis;
    for (const MultiPoly &g : ideal.generators) {
        if (!(*g.ring() == *ideal.ring))
            throw std::invalid_argument("buchberger: generator outside ring");
        if (!g.is_zero())
            basis.push_back(to_ord(g, order));
    }

    // Pending S-pairs with their lcm; normal selection picks the smallest
    // lcm in the run order.
    std::vector<std::pair<PairKey, Monomial>> pending;
    std::set<PairKey> done;
    auto push_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i)
            pending.emplace_back(PairKey{i, upto},
                                 basis[i].lm().lcm_with(basis[upto].lm()));
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        push_pairs(j);

    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k)
            if (order.less(pending[k].second, pending[best].second))
                best = k;
        auto [key, l] = pending[best];
        pending.erase(pending.begin() + best);
        done.insert(key);

        const OrdPoly &f = basis[key.i];
        const OrdPoly &g = basis[key.j];
        // Product criterion: coprime leading monomials reduce to zero.
        if (f.lm().times(g.lm()) == l)
            continue;
        // Chain criterion: a third element divides the lcm and both of its
        // pairs with the current pair are already settled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == key.i || k == key.j || basis[k].is_zero())
                continue;
            if (!basis[k].lm().divides(l))
                continue;
            PairKey a{std::min(k, key.i), std::max(k, key.i)};
            PairKey b{std::min(k, key.j), std::max(k, key.j)};
            if (done.count(a) && done.count(b))
                skip = true;
        }
        if (skip)
            continue;

        OrdPoly s = normal_form(s_polynomial(f, g, order), basis, order);
        if (!s.is_zero()) {
            basis.push_back(std::move(s));
            push_pairs(basis.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<OrdPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j)
                continue;
            if (basis[j].lm().divides(basis[i].lm()) &&
                !(basis[i].lm() == basis[j].lm() && i < j))
                keep = false;
        }
        if (keep)
            minimal.push_back(basis[i]);
    }

    // Reduce tails against the other elements and normalize to monic.
    std::vector<OrdPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OrdPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        OrdPoly r = normal_form(minimal[i], others, order);
        if (r.is_zero())
            continue;
        GaussRational inv = r.lc().inv();
        for (Term &t : r.t)
            t.second *= inv;
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const OrdPoly &a, const OrdPoly &b) {
        return order.less(a.lm(), b.lm());
    });

    Ideal out{ideal.ring, {}};
    for (const OrdPoly &p : reduced)
        out.generators.push_back(from_ord(p, ideal.ring));
    return out;
}

bool reduces_to_zero(const MultiPoly &p, const std::vector<MultiPoly> &basis,
                     const MonomialOrder &order) {
    std::vector<OrdPoly> b;
    for (const MultiPoly &g : basis)
        if (!g.is_zero())
            b.push_back(to_ord(g, order));
    return normal_form(to_ord(p, order), b, order).is_zero();
}

namespace {

// Shared construction for the face-torus questions: zero the off-face
// variables, adjoin a localization variable y (last in the order) with
// y * (product of face variables) = 1, and return the reduced basis.
Ideal localized_basis(const Ideal &ideal, const std::set<std::size_t> &face) {
    const std::size_t n = ideal.ring->vars.size();
    for (std::size_t v : face)
        if (v >= n)
            throw std::out_of_range("face variable index out of range");

    std::vector<std::string> ext_vars = ideal.ring->vars;
    ext_vars.push_back("y");
    RingPtr ext = make_ring(std::move(ext_vars));

    std::map<std::size_t, GaussRational> off_face;
    for (std::size_t v = 0; v < n; ++v)
        if (!face.count(v))
            off_face[v] = GaussRational(0);

    std::vector<MultiPoly> identity_images;
    for (std::size_t v = 0; v < n; ++v)
        identity_images.push_back(MultiPoly::variable(ext, v));

    Ideal sys{ext, {}};
    for (const MultiPoly &g : ideal.generators) {
        MultiPoly s = g.substitute(off_face);
        if (!s.is_zero())
            sys.generators.push_back(s.map_into(ext, identity_images));
    }
    Monomial prod(n + 1);
    for (std::size_t v : face)
        prod = prod.with_exponent(v, 1);
    prod = prod.with_exponent(n, 1); // times y
    MultiPoly rab(ext);
    rab.add_term(prod, GaussRational(1));
    rab.add_term(Monomial(n + 1), GaussRational(-1));
    sys.generators.push_back(rab);

    return buchberger(sys, MonomialOrder::grevlex());
}

bool basis_is_trivial(const Ideal &basis) {
    for (const MultiPoly &g : basis.generators)
        if (g.is_constant() && !g.is_zero())
            return true;
    return false;
}

} // namespace

bool nonempty_in_face_torus(const Ideal &ideal, const std::set<std::size_t> &face) {
    return !basis_is_trivial(localized_basis(ideal, face));
}

std::size_t krull_dimension_in_face_torus(const Ideal &ideal,
                                          const std::set<std::size_t> &face) {
    Ideal basis = localized_basis(ideal, face);
    if (basis_is_trivial(basis))
        throw SqError("FACE_EMPTY", "face does not meet the variety's torus");

    const std::size_t n = ideal.ring->vars.size(); // y is index n
    MonomialOrder order = MonomialOrder::grevlex();

    // Support bitmasks of the leading monomials.
    std::vector<std::uint32_t> lead_masks;
    for (const MultiPoly &g : basis.generators) {
        Monomial lm = g.leading_term(order).first;
        std::uint32_t mask = 0;
        for (std::size_t v = 0; v <= n; ++v)
            if (lm.exponent(v) > 0)
                mask |= std::uint32_t(1) << v;
        lead_masks.push_back(mask);
    }
    auto independent = [&](std::uint32_t set_mask) {
        for (std::uint32_t m : lead_masks)
            if ((m & ~set_mask) == 0)
                return false;
        return true;
    };

    std::vector<std::size_t> face_vars(face.begin(), face.end());
    std::size_t best = 0;
    std::uint32_t best_mask = 0;
    // Depth-first search over subsets of the face variables, pruned by the
    // best size still reachable.
    auto dfs = [&](auto &&self, std::size_t pos, std::uint32_t mask,
                   std::size_t size) -> void {
        if (size > best) {
            best = size;
            best_mask = mask;
        }
        if (pos == face_vars.size() || size + (face_vars.size() - pos) <= best)
            return;
        std::uint32_t with = mask | (std::uint32_t(1) << face_vars[pos]);
        if (independent(with))
            self(self, pos + 1, with, size + 1);
        self(self, pos + 1, mask, size);
    };
    dfs(dfs, 0, 0, 0);

    // The localization variable must be algebraic over the face variables;
    // otherwise excluding it from the search would undercount.
    if (independent(best_mask | (std::uint32_t(1) << n)))
        throw std::logic_error("localization variable unexpectedly independent");

    return best;
}

MultiPoly minor_determinant(const std::vector<std::vector<MultiPoly>> &matrix,
                            const std::vector<std::size_t> &rows,
                            const std::vector<std::size_t> &cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor_determinant: row/column count mismatch");
    if (cols.size() > 31)
        throw std::invalid_argument("minor_determinant: minor too large");
    if (matrix.empty() || matrix[0].empty())
        throw std::invalid_argument("minor_determinant: empty matrix");
    for (std::size_t r : rows)
        if (r >= matrix.size())
            throw std::out_of_range("minor_determinant: row index out of range");
    for (std::size_t c : cols)
        if (c >= matrix[0].size())
            throw std::out_of_range("minor_determinant: column index out of range");

    RingPtr ring = matrix[0][0].ring();
    std::unordered_map<std::uint64_t, MultiPoly> memo;

    // Expand along rows[k] over the columns still present in mask.
    auto det = [&](auto &&self, std::size_t k, std::uint32_t mask) -> MultiPoly {
        if (k == rows.size())
            return MultiPoly::constant(ring, GaussRational(1));
        std::uint64_t key = (std::uint64_t(k) << 32) | mask;
        auto hit = memo.find(key);
        if (hit != memo.end())
            return hit->second;

        MultiPoly acc(ring);
        int sign = 1;
        for (std::size_t pos = 0; pos < cols.size(); ++pos) {
            if (!(mask & (std::uint32_t(1) << pos)))
                continue;
            const MultiPoly &entry = matrix[rows[k]][cols[pos]];
            if (!entry.is_zero()) {
                MultiPoly sub = self(self, k + 1, mask & ~(std::uint32_t(1) << pos));
                MultiPoly contrib = entry * sub;
                acc = (sign > 0) ? acc + contrib : acc - contrib;
            }
            sign = -sign;
        }
        memo.emplace(key, acc);
        return acc;
    };

    std::uint32_t full = cols.empty() ? 0 : ((std::uint32_t(1) << cols.size()) - 1);
    return det(det, 0, full);
}

} // namespace sq
