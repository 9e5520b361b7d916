#include "sympquot/group.hpp"

#include "sympquot/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sq {

GroupElement GroupElement::mul(const GroupElement &o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("GroupElement::mul: dimension mismatch");
    GroupElement r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const GaussRational &a = at(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < n_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

GroupElement GroupElement::inverse() const {
    GroupElement work = *this;
    GroupElement inv = GroupElement::identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = n_;
        for (std::size_t r = col; r < n_; ++r)
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == n_)
            throw std::domain_error("GroupElement::inverse: singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        GaussRational scale = work.at(col, col).inv();
        for (std::size_t j = 0; j < n_; ++j) {
            work.at(col, j) *= scale;
            inv.at(col, j) *= scale;
        }
        for (std::size_t r = 0; r < n_; ++r) {
            if (r == col || work.at(r, col).is_zero())
                continue;
            GaussRational f = work.at(r, col);
            for (std::size_t j = 0; j < n_; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

GroupElement GroupElement::transpose() const {
    GroupElement r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

GroupElement GroupElement::negated() const {
    GroupElement r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            r.at(i, j) = -at(i, j);
    return r;
}

bool GroupElement::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (i == j && at(i, j) != GaussRational(1))
                return false;
            if (i != j && !at(i, j).is_zero())
                return false;
        }
    return true;
}

std::string GroupElement::key() const {
    std::string k;
    for (const GaussRational &e : a_) {
        k += e.str();
        k += ';';
    }
    return k;
}

std::size_t GroupElement::fixed_space_dimension() const {
    // Rank of (this - id) by exact elimination; the fixed space is its kernel.
    GroupElement work = *this;
    for (std::size_t i = 0; i < n_; ++i)
        work.at(i, i) -= GaussRational(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
        std::size_t pivot = n_;
        for (std::size_t r = rank; r < n_; ++r)
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == n_)
            continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < n_; ++j)
                std::swap(work.at(pivot, j), work.at(rank, j));
        for (std::size_t r = rank + 1; r < n_; ++r) {
            if (work.at(r, col).is_zero())
                continue;
            GaussRational f = work.at(r, col) / work.at(rank, col);
            for (std::size_t j = col; j < n_; ++j)
                work.at(r, j) -= f * work.at(rank, j);
        }
        ++rank;
    }
    return n_ - rank;
}

SymplecticForm standard_symplectic_form() {
    GroupElement omega(4);
    omega.at(0, 2) = GaussRational(1);
    omega.at(2, 0) = GaussRational(-1);
    omega.at(1, 3) = GaussRational(1);
    omega.at(3, 1) = GaussRational(-1);
    return SymplecticForm{omega};
}

bool preserves_form(const GroupElement &g, const SymplecticForm &form) {
    return g.transpose().mul(form.matrix).mul(g) == form.matrix;
}

FiniteMatrixGroup generate_group(const std::vector<GroupElement> &gens,
                                 std::size_t bound) {
    if (gens.empty())
        throw std::invalid_argument("generate_group: no generators");
    std::size_t n = gens[0].dim();
    for (const GroupElement &g : gens) {
        if (g.dim() != n)
            throw std::invalid_argument("generate_group: mixed dimensions");
        g.inverse(); // throws on a singular generator
    }

    FiniteMatrixGroup group;
    std::map<std::string, std::size_t> index;
    auto add = [&](const GroupElement &g) -> std::size_t {
        std::string k = g.key();
        auto it = index.find(k);
        if (it != index.end())
            return it->second;
        if (group.elements_.size() >= bound)
            throw SqError("GROUP_TOO_LARGE", "closure exceeded the element bound");
        group.elements_.push_back(g);
        index.emplace(std::move(k), group.elements_.size() - 1);
        return group.elements_.size() - 1;
    };

    add(GroupElement::identity(n));
    for (std::size_t cursor = 0; cursor < group.elements_.size(); ++cursor)
        for (const GroupElement &g : gens)
            add(group.elements_[cursor].mul(g));

    for (const GroupElement &g : gens)
        group.generators_.push_back(index.at(g.key()));

    std::size_t order = group.elements_.size();
    group.table_.assign(order * order, 0);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            auto it = index.find(group.elements_[i].mul(group.elements_[j]).key());
            if (it == index.end())
                throw std::logic_error("generate_group: closure is not closed");
            group.table_[i * order + j] = it->second;
        }
    group.inverses_.assign(order, 0);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j)
            if (group.product(i, j) == 0) {
                group.inverses_[i] = j;
                break;
            }
    return group;
}

std::size_t FiniteMatrixGroup::element_order(std::size_t i) const {
    std::size_t cur = i;
    std::size_t order = 1;
    while (cur != 0) {
        cur = product(cur, i);
        ++order;
    }
    return order;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const GroupElement &g) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == g)
            return i;
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteMatrixGroup &g) {
    std::size_t order = g.order();
    std::vector<bool> seen(order, false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < order; ++i) {
        if (seen[i])
            continue;
        std::set<std::size_t> cls;
        for (std::size_t h = 0; h < order; ++h)
            cls.insert(g.product(g.product(g.inverse(h), i), h));
        std::vector<std::size_t> members(cls.begin(), cls.end());
        for (std::size_t m : members)
            seen[m] = true;
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(),
              [](const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a.front() < b.front();
              });
    return classes;
}

namespace {

// Indices of the subgroup generated by the given indices, closed under the
// group's multiplication table; always contains the identity.
std::set<std::size_t> index_closure(const FiniteMatrixGroup &g,
                                    const std::set<std::size_t> &seeds) {
    std::set<std::size_t> closure = {0};
    std::vector<std::size_t> queue = {0};
    while (!queue.empty()) {
        std::size_t x = queue.back();
        queue.pop_back();
        for (std::size_t s : seeds) {
            std::size_t y = g.product(x, s);
            if (closure.insert(y).second)
                queue.push_back(y);
        }
    }
    return closure;
}

std::set<std::size_t> commutator_indices(const FiniteMatrixGroup &g) {
    std::set<std::size_t> seeds;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j)
            seeds.insert(g.product(g.product(g.inverse(i), g.inverse(j)),
                                   g.product(i, j)));
    return index_closure(g, seeds);
}

// Quotient of the subgroup on `ambient` by the normal subgroup `kernel`,
// as coset representatives plus an index map.
struct Quotient {
    const FiniteMatrixGroup *g;
    std::vector<std::size_t> reps;
    std::map<std::size_t, std::size_t> coset_of;

    std::size_t order() const { return reps.size(); }
    std::size_t product(std::size_t a, std::size_t b) const {
        return coset_of.at(g->product(reps[a], reps[b]));
    }
    std::size_t identity_coset() const { return coset_of.at(0); }
    std::size_t element_order(std::size_t a) const {
        std::size_t e = identity_coset();
        std::size_t cur = a;
        std::size_t order = 1;
        while (cur != e) {
            cur = product(cur, a);
            ++order;
        }
        return order;
    }
};

Quotient build_quotient(const FiniteMatrixGroup &g, const std::set<std::size_t> &ambient,
                        const std::set<std::size_t> &kernel) {
    Quotient q;
    q.g = &g;
    for (std::size_t x : ambient) {
        if (q.coset_of.count(x))
            continue;
        std::size_t id = q.reps.size();
        q.reps.push_back(x);
        for (std::size_t k : kernel)
            q.coset_of[g.product(x, k)] = id;
    }
    return q;
}

} // namespace

FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup &g) {
    std::set<std::size_t> indices = commutator_indices(g);
    std::vector<GroupElement> gens;
    for (std::size_t i : indices)
        gens.push_back(g.elements()[i]);
    return generate_group(gens, g.order());
}

std::vector<std::size_t> abelianization_invariants(const FiniteMatrixGroup &g) {
    std::set<std::size_t> kernel = commutator_indices(g);
    std::set<std::size_t> ambient;
    for (std::size_t i = 0; i < g.order(); ++i)
        ambient.insert(i);
    Quotient q = build_quotient(g, ambient, kernel);

    std::vector<std::size_t> orders;
    for (std::size_t a = 0; a < q.order(); ++a)
        orders.push_back(q.element_order(a));

    // Elementary divisors per prime from the counts of elements of order
    // dividing successive prime powers: in an abelian p-group with parts
    // p^l(1), p^l(2), ..., the count for p^j is p^(sum of min(l(i), j)), so
    // the number of parts of size at least j is the log-count difference.
    std::vector<std::size_t> divisors;
    std::set<std::size_t> primes;
    for (std::size_t o : orders)
        for (std::size_t p = 2; p <= o; ++p)
            if (o % p == 0) {
                primes.insert(p);
                while (o % p == 0)
                    o /= p;
            }
    for (std::size_t p : primes) {
        std::vector<std::size_t> logs = {0};
        for (std::size_t j = 1;; ++j) {
            std::size_t pj = 1;
            for (std::size_t t = 0; t < j; ++t)
                pj *= p;
            std::size_t count = 0;
            for (std::size_t o : orders)
                if (pj % o == 0)
                    ++count;
            std::size_t lg = 0;
            for (std::size_t c = count; c > 1; c /= p)
                ++lg;
            logs.push_back(lg);
            if (j > 1 && logs[j] == logs[j - 1])
                break;
        }
        for (std::size_t j = 1; j + 1 < logs.size() || (j < logs.size() && logs[j] > logs[j - 1]); ++j) {
            if (j >= logs.size())
                break;
            std::size_t parts_at_least_j = logs[j] - logs[j - 1];
            std::size_t parts_at_least_next =
                (j + 1 < logs.size()) ? logs[j + 1] - logs[j] : 0;
            std::size_t exactly_j = parts_at_least_j - parts_at_least_next;
            std::size_t pj = 1;
            for (std::size_t t = 0; t < j; ++t)
                pj *= p;
            for (std::size_t c = 0; c < exactly_j; ++c)
                divisors.push_back(pj);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

bool normalizer_quotient_is_Q8(const FiniteMatrixGroup &g, const GroupElement &t) {
    std::optional<std::size_t> idx = g.index_of(t);
    if (!idx)
        throw SqError("NOT_MEMBER", "element is not in the group");
    if (g.element_order(*idx) != 2)
        throw std::invalid_argument("normalizer_quotient_is_Q8: element must have order 2");

    std::set<std::size_t> kernel = {0, *idx};
    std::set<std::size_t> normalizer;
    for (std::size_t h = 0; h < g.order(); ++h) {
        std::size_t conj = g.product(g.product(g.inverse(h), *idx), h);
        if (kernel.count(conj))
            normalizer.insert(h);
    }
    Quotient q = build_quotient(g, normalizer, kernel);
    if (q.order() != 8)
        return false;
    std::size_t order2 = 0, order4 = 0;
    for (std::size_t a = 0; a < q.order(); ++a) {
        std::size_t o = q.element_order(a);
        if (o == 2)
            ++order2;
        else if (o == 4)
            ++order4;
    }
    return order2 == 1 && order4 == 6;
}

RingPtr quadratic_ring() {
    static const RingPtr ring = make_ring({"x1", "x2", "x3", "x4"});
    return ring;
}

namespace {

MultiPoly quad(int c_re, int c_im, int a, int b) {
    RingPtr r = quadratic_ring();
    MultiPoly p(r);
    Monomial m(4);
    if (a == b)
        m = m.with_exponent(std::size_t(a), 2);
    else
        m = m.with_exponent(std::size_t(a), 1).with_exponent(std::size_t(b), 1);
    p.add_term(m, GaussRational(Rational(c_re), Rational(c_im)));
    return p;
}

GaussRational gr(int re, int im) { return GaussRational(Rational(re), Rational(im)); }

} // namespace

const std::vector<QuadraticForm> &standard_quadratic_forms() {
    static const std::vector<QuadraticForm> forms = [] {
        std::vector<QuadraticForm> f;
        // Pair (0,1): -2(x1 x4 + x2 x3)
        f.push_back({quad(-2, 0, 0, 3) + quad(-2, 0, 1, 2)});
        // Pair (0,2): 2i(-x1 x4 + x2 x3)
        f.push_back({quad(0, -2, 0, 3) + quad(0, 2, 1, 2)});
        // Pair (0,3): 2i(x1 x2 + x3 x4)
        f.push_back({quad(0, 2, 0, 1) + quad(0, 2, 2, 3)});
        // Pair (0,4): 2(-x1 x2 + x3 x4)
        f.push_back({quad(-2, 0, 0, 1) + quad(2, 0, 2, 3)});
        // Pair (1,2): 2(x1 x3 - x2 x4)
        f.push_back({quad(2, 0, 0, 2) + quad(-2, 0, 1, 3)});
        // Pair (1,3): -x1^2 - x2^2 + x3^2 + x4^2
        f.push_back({quad(-1, 0, 0, 0) + quad(-1, 0, 1, 1) + quad(1, 0, 2, 2) +
                     quad(1, 0, 3, 3)});
        // Pair (1,4): i(x1^2 + x2^2 + x3^2 + x4^2)
        f.push_back({quad(0, 1, 0, 0) + quad(0, 1, 1, 1) + quad(0, 1, 2, 2) +
                     quad(0, 1, 3, 3)});
        // Pair (2,3): i(-x1^2 + x2^2 - x3^2 + x4^2)
        f.push_back({quad(0, -1, 0, 0) + quad(0, 1, 1, 1) + quad(0, -1, 2, 2) +
                     quad(0, 1, 3, 3)});
        // Pair (2,4): x1^2 - x2^2 - x3^2 + x4^2
        f.push_back({quad(1, 0, 0, 0) + quad(-1, 0, 1, 1) + quad(-1, 0, 2, 2) +
                     quad(1, 0, 3, 3)});
        // Pair (3,4): 2(x1 x3 + x2 x4)
        f.push_back({quad(2, 0, 0, 2) + quad(2, 0, 1, 3)});
        return f;
    }();
    return forms;
}

const std::vector<GroupElement> &standard_generators() {
    static const std::vector<GroupElement> gens = [] {
        std::vector<GroupElement> t(5, GroupElement(4));
        // Diagonal involution.
        t[0].at(0, 0) = gr(1, 0);
        t[0].at(1, 1) = gr(-1, 0);
        t[0].at(2, 2) = gr(1, 0);
        t[0].at(3, 3) = gr(-1, 0);
        // Antidiagonal blocks with imaginary units.
        t[1].at(0, 1) = gr(0, 1);
        t[1].at(1, 0) = gr(0, -1);
        t[1].at(2, 3) = gr(0, -1);
        t[1].at(3, 2) = gr(0, 1);
        // Plain swaps.
        t[2].at(0, 1) = gr(1, 0);
        t[2].at(1, 0) = gr(1, 0);
        t[2].at(2, 3) = gr(1, 0);
        t[2].at(3, 2) = gr(1, 0);
        // Signed reversal.
        t[3].at(0, 3) = gr(1, 0);
        t[3].at(1, 2) = gr(-1, 0);
        t[3].at(2, 1) = gr(-1, 0);
        t[3].at(3, 0) = gr(1, 0);
        // Imaginary reversal.
        t[4].at(0, 3) = gr(0, 1);
        t[4].at(1, 2) = gr(0, -1);
        t[4].at(2, 1) = gr(0, 1);
        t[4].at(3, 0) = gr(0, -1);
        return t;
    }();
    return gens;
}

MultiPoly act_on_polynomial(const GroupElement &g, const MultiPoly &f) {
    if (g.dim() != f.nvars())
        throw std::invalid_argument("act_on_polynomial: dimension mismatch");
    GroupElement inv = g.inverse();
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        MultiPoly img(f.ring());
        for (std::size_t j = 0; j < g.dim(); ++j) {
            if (inv.at(i, j).is_zero())
                continue;
            img.add_term(Monomial::variable(f.nvars(), j), inv.at(i, j));
        }
        images.push_back(std::move(img));
    }
    return f.map_into(f.ring(), images);
}

std::vector<std::vector<int>> sign_table(const FiniteMatrixGroup &g,
                                         const std::vector<QuadraticForm> &forms) {
    std::vector<std::vector<int>> table;
    for (const QuadraticForm &form : forms) {
        std::vector<int> row;
        for (std::size_t gi : g.generator_indices()) {
            MultiPoly moved = act_on_polynomial(g.elements()[gi], form.poly);
            if (moved == form.poly)
                row.push_back(1);
            else if (moved == -form.poly)
                row.push_back(-1);
            else
                throw SqError("NOT_EIGENVECTOR",
                              "form is not an eigenvector of a generator");
        }
        table.push_back(std::move(row));
    }
    return table;
}

namespace {

// Greedy extraction of independent columns by incremental elimination.
struct ColumnBasis {
    std::vector<std::vector<GaussRational>> echelon; // reduced rows kept
    std::vector<std::size_t> pivots;

    bool try_add(std::vector<GaussRational> v) {
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            if (v[pivots[k]].is_zero())
                continue;
            GaussRational f = v[pivots[k]];
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] -= f * echelon[k][j];
        }
        std::size_t pivot = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot == v.size())
            return false;
        GaussRational scale = v[pivot].inv();
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] *= scale;
        echelon.push_back(std::move(v));
        pivots.push_back(pivot);
        return true;
    }
};

} // namespace

unsigned monomial_valuation(const GroupElement &t, const MultiPoly &f) {
    if (t.dim() != f.nvars())
        throw std::invalid_argument("monomial_valuation: dimension mismatch");
    if (!t.mul(t).is_identity())
        throw std::invalid_argument("monomial_valuation: element must square to the identity");
    if (f.is_zero())
        throw SqError("VALUATION_INFINITE", "the zero polynomial has no finite valuation");

    std::size_t n = t.dim();
    GaussRational half(Rational(Int(1), Int(2)));

    // Columns of (id + t)/2 span the +1 eigenspace, columns of (id - t)/2
    // the -1 eigenspace; together they give an exact eigenbasis.
    std::vector<std::vector<GaussRational>> basis_cols;
    std::size_t plus_count = 0;
    ColumnBasis indep;
    for (int sign = 1; sign >= -1; sign -= 2) {
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<GaussRational> col(n);
            for (std::size_t r = 0; r < n; ++r) {
                GaussRational e = (r == c) ? GaussRational(1) : GaussRational(0);
                GaussRational te = t.at(r, c);
                col[r] = (sign > 0) ? (e + te) * half : (e - te) * half;
            }
            std::vector<GaussRational> copy = col;
            if (indep.try_add(std::move(copy))) {
                basis_cols.push_back(std::move(col));
                if (sign > 0)
                    ++plus_count;
            }
        }
    }
    if (basis_cols.size() != n)
        throw std::logic_error("monomial_valuation: projectors did not span");

    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly img(f.ring());
        for (std::size_t j = 0; j < n; ++j)
            if (!basis_cols[j][i].is_zero())
                img.add_term(Monomial::variable(n, j), basis_cols[j][i]);
        images.push_back(std::move(img));
    }
    MultiPoly rewritten = f.map_into(f.ring(), images);
    if (rewritten.is_zero())
        throw std::logic_error("monomial_valuation: basis change killed the polynomial");

    unsigned best = 0;
    bool first = true;
    for (const auto &[m, c] : rewritten.terms()) {
        (void)c;
        unsigned w = 0;
        for (std::size_t j = plus_count; j < n; ++j)
            w += m.exponent(j);
        if (first || w < best) {
            best = w;
            first = false;
        }
    }
    return best;
}

bool invariant_monomial_check(const std::map<std::pair<int, int>, unsigned> &exponents) {
    for (const auto &[pair, e] : exponents) {
        (void)e;
        if (pair.first < 0 || pair.second > 4 || pair.first >= pair.second)
            throw std::invalid_argument("invariant_monomial_check: bad index pair");
    }
    for (int k = 0; k < 5; ++k) {
        unsigned s = 0;
        for (const auto &[pair, e] : exponents)
            if (pair.first == k || pair.second == k)
                s += e;
        if (s % 2 != 0)
            return false;
    }
    return true;
}

bool monomial_invariant_by_direct_action(
    const FiniteMatrixGroup &g,
    const std::map<std::pair<int, int>, unsigned> &exponents) {
    RingPtr ring = quadratic_ring();
    MultiPoly mono = MultiPoly::constant(ring, GaussRational(1));
    for (const auto &[pair, e] : exponents) {
        const MultiPoly &form =
            standard_quadratic_forms()[pair_coordinate_index(pair.first, pair.second)].poly;
        for (unsigned k = 0; k < e; ++k)
            mono = mono * form;
    }
    for (const GroupElement &e : g.elements())
        if (act_on_polynomial(e, mono) != mono)
            return false;
    return true;
}

} // namespace sq
