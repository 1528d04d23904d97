#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "twistlab/linalg.hpp"
#include "twistlab/zigzag_algebra.hpp"

namespace twistlab {

/// Indecomposable projective P_vertex with internal grading shift <shift>.
/// A degree-zero map P_i<s> -> P_j<s'> is a path i -> j of degree s - s'.
struct Summand {
    int vertex = 1;
    int shift = 0;
    auto operator<=>(const Summand&) const = default;
};

inline std::string to_string(const Summand& s) {
    return "P" + std::to_string(s.vertex) + "<" + std::to_string(s.shift) + ">";
}

/// Sparse matrix of algebra elements. Rows index source summands, columns
/// index target summands, and A*B is "first A, then B".
template <class K>
struct AlgMatrix {
    std::map<std::pair<int, int>, Element<K>> entries;

    const Element<K>* at(int r, int c) const {
        auto it = entries.find({r, c});
        return it == entries.end() ? nullptr : &it->second;
    }
    void add(int r, int c, const Element<K>& e) {
        if (e.is_zero())
            return;
        auto [it, fresh] = entries.try_emplace({r, c}, e);
        if (!fresh) {
            it->second += e;
            if (it->second.is_zero())
                entries.erase(it);
        }
    }
    void set(int r, int c, Element<K> e) {
        if (e.is_zero())
            entries.erase({r, c});
        else
            entries[{r, c}] = std::move(e);
    }
    bool empty() const { return entries.empty(); }
    bool operator==(const AlgMatrix&) const = default;

    /// Entries of one row, as a range over the ordered map.
    auto row_begin(int r) const { return entries.lower_bound({r, std::numeric_limits<int>::min()}); }
    auto row_end(int r) const { return entries.lower_bound({r + 1, std::numeric_limits<int>::min()}); }
};

template <class K>
AlgMatrix<K> multiply(const ZigzagAlgebra& alg, const AlgMatrix<K>& a, const AlgMatrix<K>& b) {
    AlgMatrix<K> r;
    for (const auto& [rc, x] : a.entries) {
        auto [row, mid] = rc;
        for (auto it = b.row_begin(mid); it != b.row_end(mid); ++it)
            r.add(row, it->first.second, multiply(alg, x, it->second));
    }
    return r;
}

/// Bounded complex of graded projectives over the zigzag algebra. The
/// differential d^t maps term t to term t+1.
template <class K>
class ProjComplex {
public:
    explicit ProjComplex(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static ProjComplex projective(AlgebraPtr alg, int vertex, int shift = 0, int degree = 0) {
        alg->check_vertex(vertex);
        ProjComplex m(std::move(alg));
        m.set_term(degree, {{vertex, shift}});
        return m;
    }

    const AlgebraPtr& algebra_ptr() const { return alg_; }
    const ZigzagAlgebra& algebra() const { return *alg_; }

    const std::vector<Summand>& term(int t) const {
        static const std::vector<Summand> none;
        auto it = terms_.find(t);
        return it == terms_.end() ? none : it->second;
    }
    const AlgMatrix<K>& differential(int t) const {
        static const AlgMatrix<K> none;
        auto it = diff_.find(t);
        return it == diff_.end() ? none : it->second;
    }
    const std::map<int, std::vector<Summand>>& terms() const { return terms_; }
    const std::map<int, AlgMatrix<K>>& differentials() const { return diff_; }

    std::vector<int> degrees() const {
        std::vector<int> out;
        for (const auto& [t, s] : terms_)
            out.push_back(t);
        return out;
    }
    int size() const {
        int n = 0;
        for (const auto& [t, s] : terms_)
            n += static_cast<int>(s.size());
        return n;
    }
    bool is_zero() const { return terms_.empty(); }

    /// Replaces a term; differentials touching it are cleared.
    void set_term(int t, std::vector<Summand> summands) {
        for (const auto& s : summands)
            alg_->check_vertex(s.vertex);
        diff_.erase(t);
        diff_.erase(t - 1);
        if (summands.empty())
            terms_.erase(t);
        else
            terms_[t] = std::move(summands);
    }

    void set_entry(int t, int row, int col, Element<K> e) {
        if (row < 0 || row >= static_cast<int>(term(t).size()) || col < 0 ||
            col >= static_cast<int>(term(t + 1).size()))
            throw std::out_of_range("differential entry (" + std::to_string(row) + "," + std::to_string(col) +
                                    ") outside d^" + std::to_string(t));
        auto& d = diff_[t];
        d.set(row, col, std::move(e));
        if (d.empty())
            diff_.erase(t);
    }

    /// Entry homogeneity and d^2 = 0; throws std::logic_error on failure.
    void validate() const;
    bool d_squared_is_zero() const {
        for (const auto& [t, d] : diff_) {
            auto it = diff_.find(t + 1);
            if (it != diff_.end() && !multiply(*alg_, d, it->second).empty())
                return false;
        }
        return true;
    }

    bool operator==(const ProjComplex& o) const {
        return alg_->params() == o.alg_->params() && terms_ == o.terms_ && diff_ == o.diff_;
    }

private:
    AlgebraPtr alg_;
    std::map<int, std::vector<Summand>> terms_;
    std::map<int, AlgMatrix<K>> diff_;
};

/// True if e is a homogeneous map between the two summands.
template <class K>
bool is_homogeneous_map(const ZigzagAlgebra& alg, const Summand& from, const Summand& to, const Element<K>& e) {
    for (const auto& [b, c] : e.terms()) {
        const auto& be = alg.basis(b);
        if (be.source != from.vertex || be.target != to.vertex || be.degree != from.shift - to.shift)
            return false;
    }
    return true;
}

template <class K>
void ProjComplex<K>::validate() const {
    for (const auto& [t, d] : diff_) {
        const auto& src = term(t);
        const auto& dst = term(t + 1);
        for (const auto& [rc, e] : d.entries) {
            auto [r, c] = rc;
            if (r >= static_cast<int>(src.size()) || c >= static_cast<int>(dst.size()))
                throw std::logic_error("differential entry out of range in d^" + std::to_string(t));
            if (!is_homogeneous_map(*alg_, src[r], dst[c], e))
                throw std::logic_error("inhomogeneous differential entry in d^" + std::to_string(t));
        }
    }
    if (!d_squared_is_zero())
        throw std::logic_error("d^2 != 0");
}

/// Degree-(0,0) map of complexes; component t maps source term t to target term t.
template <class K>
struct ChainMap {
    ProjComplex<K> source;
    ProjComplex<K> target;
    std::map<int, AlgMatrix<K>> components;

    const AlgMatrix<K>& component(int t) const {
        static const AlgMatrix<K> none;
        auto it = components.find(t);
        return it == components.end() ? none : it->second;
    }
};

template <class K>
bool is_chain_map(const ChainMap<K>& f) {
    const auto& alg = f.source.algebra();
    for (const auto& [t, m] : f.components)
        for (const auto& [rc, e] : m.entries) {
            auto [r, c] = rc;
            if (r >= static_cast<int>(f.source.term(t).size()) || c >= static_cast<int>(f.target.term(t).size()))
                return false;
            if (!is_homogeneous_map(alg, f.source.term(t)[r], f.target.term(t)[c], e))
                return false;
        }
    std::set<int> ts;
    for (const auto& [t, m] : f.components) {
        ts.insert(t);
        ts.insert(t - 1);
    }
    for (int t : ts) {
        // d_M F = F d_K, composing left to right
        auto lhs = multiply(alg, f.source.differential(t), f.component(t + 1));
        auto rhs = multiply(alg, f.component(t), f.target.differential(t));
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

template <class K>
ChainMap<K> identity_map(const ProjComplex<K>& m) {
    ChainMap<K> f{m, m, {}};
    const auto& alg = m.algebra();
    for (const auto& [t, s] : m.terms())
        for (int i = 0; i < static_cast<int>(s.size()); ++i)
            f.components[t].add(i, i, Element<K>::basis(alg.idempotent(s[i].vertex)));
    return f;
}

/// M[t]<s>: term u of the result is term u+t of M with internal shifts raised
/// by s; the differential picks up (-1)^t.
template <class K>
ProjComplex<K> shift(const ProjComplex<K>& m, int t, int s) {
    ProjComplex<K> r(m.algebra_ptr());
    for (const auto& [u, sum] : m.terms()) {
        auto moved = sum;
        for (auto& x : moved)
            x.shift += s;
        r.set_term(u - t, std::move(moved));
    }
    const bool odd = (t % 2) != 0;
    for (const auto& [u, d] : m.differentials())
        for (const auto& [rc, e] : d.entries)
            r.set_entry(u - t, rc.first, rc.second, odd ? -e : e);
    return r;
}

template <class K>
ProjComplex<K> direct_sum(const ProjComplex<K>& a, const ProjComplex<K>& b) {
    ProjComplex<K> r(a.algebra_ptr());
    std::set<int> ts;
    for (const auto& [t, s] : a.terms())
        ts.insert(t);
    for (const auto& [t, s] : b.terms())
        ts.insert(t);
    for (int t : ts) {
        auto s = a.term(t);
        s.insert(s.end(), b.term(t).begin(), b.term(t).end());
        r.set_term(t, std::move(s));
    }
    for (const auto& [t, d] : a.differentials())
        for (const auto& [rc, e] : d.entries)
            r.set_entry(t, rc.first, rc.second, e);
    for (const auto& [t, d] : b.differentials()) {
        int ro = static_cast<int>(a.term(t).size()), co = static_cast<int>(a.term(t + 1).size());
        for (const auto& [rc, e] : d.entries)
            r.set_entry(t, rc.first + ro, rc.second + co, e);
    }
    return r;
}

namespace detail {

/// Cone with terms M[1] + K: term t lists M^{t+1} first, then K^t.
/// d(m, k) = (-d_M m, f(m) + d_K k).
template <class K>
ProjComplex<K> cone_unchecked(const ChainMap<K>& f) {
    const auto& m = f.source;
    const auto& k = f.target;
    ProjComplex<K> c(m.algebra_ptr());
    std::set<int> ts;
    for (const auto& [t, s] : m.terms())
        ts.insert(t - 1);
    for (const auto& [t, s] : k.terms())
        ts.insert(t);
    for (int t : ts) {
        auto s = m.term(t + 1);
        s.insert(s.end(), k.term(t).begin(), k.term(t).end());
        c.set_term(t, std::move(s));
    }
    for (int t : ts) {
        int m_here = static_cast<int>(m.term(t + 1).size());
        int m_next = static_cast<int>(m.term(t + 2).size());
        for (const auto& [rc, e] : m.differential(t + 1).entries)
            c.set_entry(t, rc.first, rc.second, -e);
        for (const auto& [rc, e] : f.component(t + 1).entries)
            c.set_entry(t, rc.first, m_next + rc.second, e);
        for (const auto& [rc, e] : k.differential(t).entries)
            c.set_entry(t, m_here + rc.first, m_next + rc.second, e);
    }
    return c;
}

} // namespace detail

/// Mapping cone of a chain map. Throws std::invalid_argument if f is not a
/// homogeneous chain map.
template <class K>
ProjComplex<K> cone(const ChainMap<K>& f) {
    if (!(f.source.algebra().params() == f.target.algebra().params()))
        throw std::invalid_argument("cone: source and target live over different algebras");
    if (!is_chain_map(f))
        throw std::invalid_argument("cone: not a chain map (f d != d f or inhomogeneous entry)");
    return detail::cone_unchecked(f);
}

/// Bigraded complex of vector spaces with a chosen basis. Each generator
/// records the summand and basis path it came from; `internal` is its
/// internal degree. The differential preserves internal degree.
template <class K>
struct VectorComplex {
    struct Generator {
        int summand;
        int path;
        int internal;
    };
    std::map<int, std::vector<Generator>> generators;
    std::map<int, std::map<std::pair<int, int>, K>> differential;

    const std::vector<Generator>& gens(int t) const {
        static const std::vector<Generator> none;
        auto it = generators.find(t);
        return it == generators.end() ? none : it->second;
    }

    std::map<std::pair<int, int>, int> dimensions() const {
        std::map<std::pair<int, int>, int> out;
        for (const auto& [t, g] : generators)
            for (const auto& x : g)
                ++out[{t, x.internal}];
        return out;
    }

    int total_dimension() const {
        int n = 0;
        for (const auto& [t, g] : generators)
            n += static_cast<int>(g.size());
        return n;
    }

    bool d_squared_is_zero() const {
        for (const auto& [t, d] : differential) {
            auto it = differential.find(t + 1);
            if (it == differential.end())
                continue;
            std::map<std::pair<int, int>, K> sq;
            for (const auto& [rc, v] : d)
                for (const auto& [rc2, w] : it->second)
                    if (rc2.first == rc.second)
                        sq[{rc.first, rc2.second}] += v * w;
            for (const auto& [k, v] : sq)
                if (!is_zero(v))
                    return false;
        }
        return true;
    }

    /// Rank of d^t restricted to generators of internal degree s.
    std::map<int, int> ranks(int t) const {
        std::map<int, std::vector<SparseRow<K>>> rows;
        auto it = differential.find(t);
        if (it != differential.end()) {
            std::map<int, SparseRow<K>> by_row;
            for (const auto& [rc, v] : it->second)
                by_row[rc.first].emplace(rc.second, v);
            for (auto& [r, row] : by_row)
                rows[gens(t)[r].internal].push_back(std::move(row));
        }
        std::map<int, int> out;
        for (const auto& [s, rs] : rows)
            out[s] = rank(rs);
        return out;
    }

    /// Bigraded homology dimensions (t, s) -> dim, zero entries omitted.
    std::map<std::pair<int, int>, int> homology() const {
        std::map<std::pair<int, int>, int> out;
        std::map<int, std::map<int, int>> rk;
        for (const auto& [t, g] : generators) {
            rk[t] = ranks(t);
            rk[t - 1] = ranks(t - 1);
        }
        for (const auto& [ts, dim] : dimensions()) {
            auto [t, s] = ts;
            int h = dim - rk[t][s] - rk[t - 1][s];
            if (h != 0)
                out[{t, s}] = h;
        }
        return out;
    }
};

/// RHom(P_i, M): degree-t generators are basis paths phi from i to the vertex
/// of a summand P_j<s_j> of M^t, in internal degree s_j + deg(phi). The
/// generator is the map P_i<s_j + deg phi> -> P_j<s_j> given by phi, and d is
/// post-composition with d_M.
template <class K>
VectorComplex<K> hom_from_projective(int i, const ProjComplex<K>& m) {
    const auto& alg = m.algebra();
    alg.check_vertex(i);
    VectorComplex<K> v;
    std::map<int, std::map<std::pair<int, int>, int>> index;
    for (const auto& [t, sum] : m.terms()) {
        auto& g = v.generators[t];
        for (int u = 0; u < static_cast<int>(sum.size()); ++u)
            for (int b : alg.paths(i, sum[u].vertex)) {
                index[t][{u, b}] = static_cast<int>(g.size());
                g.push_back({u, b, sum[u].shift + alg.basis(b).degree});
            }
        if (g.empty())
            v.generators.erase(t);
    }
    for (const auto& [t, d] : m.differentials()) {
        auto git = v.generators.find(t);
        if (git == v.generators.end())
            continue;
        auto& out = v.differential[t];
        for (int a = 0; a < static_cast<int>(git->second.size()); ++a) {
            const auto& gen = git->second[a];
            for (auto it = d.row_begin(gen.summand); it != d.row_end(gen.summand); ++it)
                for (const auto& [beta, c] : it->second.terms())
                    if (auto p = alg.product(gen.path, beta)) {
                        int target = index[t + 1].at({it->first.second, *p});
                        out[{a, target}] += c;
                    }
        }
        for (auto e = out.begin(); e != out.end();)
            e = is_zero(e->second) ? out.erase(e) : std::next(e);
        if (out.empty())
            v.differential.erase(t);
    }
    return v;
}

/// RHom(M, P_i): a summand P_j<s_j> of M^t contributes, in homological degree
/// -t, one generator per path psi from j to i, in internal degree
/// deg(psi) - s_j. d g = -(-1)^{deg g} g . d_M.
template <class K>
VectorComplex<K> hom_to_projective(const ProjComplex<K>& m, int i) {
    const auto& alg = m.algebra();
    alg.check_vertex(i);
    VectorComplex<K> w;
    std::map<int, std::map<std::pair<int, int>, int>> index;  // keyed by M-degree t
    for (const auto& [t, sum] : m.terms()) {
        auto& g = w.generators[-t];
        for (int u = 0; u < static_cast<int>(sum.size()); ++u)
            for (int b : alg.paths(sum[u].vertex, i)) {
                index[t][{u, b}] = static_cast<int>(g.size());
                g.push_back({u, b, alg.basis(b).degree - sum[u].shift});
            }
        if (g.empty())
            w.generators.erase(-t);
    }
    for (const auto& [t, d] : m.differentials()) {
        // d^t_M : M^t -> M^{t+1}; generators from M^{t+1} (degree -t-1) map to
        // generators from M^t (degree -t).
        auto git = w.generators.find(-(t + 1));
        if (git == w.generators.end())
            continue;
        const K sign = ((t + 1) % 2 == 0) ? K(-1) : K(1);
        std::map<std::pair<int, int>, K> out;
        for (const auto& [rc, e] : d.entries) {
            auto [u, col] = rc;
            for (int a = 0; a < static_cast<int>(git->second.size()); ++a) {
                const auto& gen = git->second[a];
                if (gen.summand != col)
                    continue;
                for (const auto& [beta, c] : e.terms())
                    if (auto p = alg.product(beta, gen.path)) {
                        int target = index[t].at({u, *p});
                        out[{a, target}] += sign * c;
                    }
            }
        }
        for (auto e = out.begin(); e != out.end();)
            e = is_zero(e->second) ? out.erase(e) : std::next(e);
        if (!out.empty())
            w.differential[-(t + 1)] = std::move(out);
    }
    return w;
}

/// Order in which invertible entries are cancelled during minimize.
enum class PivotOrder { Forward, Reverse, Shuffled };

template <class K>
bool is_invertible_entry(const ZigzagAlgebra& alg, const Summand& from, const Summand& to, const Element<K>& e) {
    return from == to && !is_zero(e.coefficient(alg.idempotent(from.vertex)));
}

/// True if no differential entry has an invertible (idempotent) component.
template <class K>
bool is_minimal(const ProjComplex<K>& m) {
    for (const auto& [t, d] : m.differentials())
        for (const auto& [rc, e] : d.entries)
            if (is_invertible_entry(m.algebra(), m.term(t)[rc.first], m.term(t + 1)[rc.second], e))
                return false;
    return true;
}

namespace detail {

template <class K>
class Minimizer {
public:
    Minimizer(const ProjComplex<K>& m, PivotOrder order, unsigned seed) : alg_(m.algebra_ptr()) {
        std::mt19937 rng(seed);
        for (const auto& [t, s] : m.terms()) {
            auto& deg = degs_[t];
            deg.summands = s;
            deg.alive.assign(s.size(), true);
            deg.rows.assign(s.size(), {});
            deg.cols.assign(s.size(), {});
            deg.rank.resize(s.size());
            std::iota(deg.rank.begin(), deg.rank.end(), 0);
            if (order == PivotOrder::Reverse)
                std::reverse(deg.rank.begin(), deg.rank.end());
            else if (order == PivotOrder::Shuffled)
                std::shuffle(deg.rank.begin(), deg.rank.end(), rng);
        }
        for (const auto& [t, d] : m.differentials())
            for (const auto& [rc, e] : d.entries) {
                degs_[t].rows[rc.first][rc.second] = e;
                degs_[t + 1].cols[rc.second].insert(rc.first);
            }
        for (const auto& [t, s] : degs_)
            order_.push_back(t);
        if (order == PivotOrder::Reverse)
            std::reverse(order_.begin(), order_.end());
        else if (order == PivotOrder::Shuffled)
            std::shuffle(order_.begin(), order_.end(), rng);
    }

    ProjComplex<K> run() {
        for (int t : order_) {
            if (!degs_.count(t + 1))
                continue;
            while (auto p = find_pivot(t))
                cancel(t, p->first, p->second);
        }
        return collect();
    }

private:
    struct Degree {
        std::vector<Summand> summands;
        std::vector<bool> alive;
        std::vector<std::map<int, Element<K>>> rows;  // d^t out of this term
        std::vector<std::set<int>> cols;              // rows of d^{t-1} hitting each summand
        std::vector<int> rank;
    };

    std::optional<std::pair<int, int>> find_pivot(int t) {
        auto& src = degs_.at(t);
        auto& dst = degs_.at(t + 1);
        std::optional<std::pair<int, int>> best;
        std::pair<int, int> best_rank{};
        for (int a = 0; a < static_cast<int>(src.rows.size()); ++a) {
            if (!src.alive[a])
                continue;
            for (const auto& [b, e] : src.rows[a]) {
                if (!is_invertible_entry(*alg_, src.summands[a], dst.summands[b], e))
                    continue;
                std::pair<int, int> r{src.rank[a], dst.rank[b]};
                if (!best || r < best_rank) {
                    best = {a, b};
                    best_rank = r;
                }
            }
        }
        return best;
    }

    // Gaussian elimination: drop the pivot pair and replace each entry r -> c
    // by d(r,c) - d(r,b) p^{-1} d(a,c).
    void cancel(int t, int a, int b) {
        auto& src = degs_.at(t);
        auto& dst = degs_.at(t + 1);
        const int e_idx = alg_->idempotent(src.summands[a].vertex);
        K pinv = inverse(src.rows[a].at(b).coefficient(e_idx));

        std::vector<int> rs;
        for (int r : dst.cols[b])
            if (r != a)
                rs.push_back(r);
        std::vector<std::pair<int, Element<K>>> cs;
        for (const auto& [c, e] : src.rows[a])
            if (c != b)
                cs.emplace_back(c, e);

        for (int r : rs) {
            Element<K> x = src.rows[r].at(b);
            for (const auto& [c, y] : cs) {
                Element<K> delta = multiply(*alg_, x, y).scaled(pinv);
                if (delta.is_zero())
                    continue;
                auto& slot = src.rows[r][c];
                slot -= delta;
                if (slot.is_zero()) {
                    src.rows[r].erase(c);
                    dst.cols[c].erase(r);
                } else {
                    dst.cols[c].insert(r);
                }
            }
        }

        for (const auto& [c, e] : src.rows[a])
            dst.cols[c].erase(a);
        src.rows[a].clear();
        for (int r : dst.cols[b])
            src.rows[r].erase(b);
        dst.cols[b].clear();

        if (auto prev = degs_.find(t - 1); prev != degs_.end()) {
            for (int r : src.cols[a])
                prev->second.rows[r].erase(a);
            src.cols[a].clear();
        }
        if (auto next = degs_.find(t + 2); next != degs_.end()) {
            for (const auto& [c, e] : dst.rows[b])
                next->second.cols[c].erase(b);
            dst.rows[b].clear();
        }
        src.alive[a] = false;
        dst.alive[b] = false;
    }

    ProjComplex<K> collect() const {
        ProjComplex<K> out(alg_);
        std::map<int, std::vector<int>> renumber;
        for (const auto& [t, deg] : degs_) {
            std::vector<Summand> s;
            auto& ren = renumber[t];
            ren.assign(deg.summands.size(), -1);
            for (int i = 0; i < static_cast<int>(deg.summands.size()); ++i)
                if (deg.alive[i]) {
                    ren[i] = static_cast<int>(s.size());
                    s.push_back(deg.summands[i]);
                }
            out.set_term(t, std::move(s));
        }
        for (const auto& [t, deg] : degs_) {
            auto next = renumber.find(t + 1);
            if (next == renumber.end())
                continue;
            for (int a = 0; a < static_cast<int>(deg.rows.size()); ++a) {
                if (!deg.alive[a])
                    continue;
                for (const auto& [b, e] : deg.rows[a])
                    out.set_entry(t, renumber.at(t)[a], next->second[b], e);
            }
        }
        return out;
    }

    AlgebraPtr alg_;
    std::map<int, Degree> degs_;
    std::vector<int> order_;
};

} // namespace detail

/// Homotopy-equivalent minimal complex obtained by cancelling invertible
/// differential entries. With PivotOrder::Forward, pivots are taken in order
/// of (homological degree, row, column).
template <class K>
ProjComplex<K> minimize(const ProjComplex<K>& m, PivotOrder order = PivotOrder::Forward, unsigned seed = 0) {
    return detail::Minimizer<K>(m, order, seed).run();
}

/// Per-vertex bigraded homology of RHom(P_i, M); index 0 is vertex 1.
using BigradedTable = std::map<std::pair<int, int>, int>;

template <class K>
std::vector<BigradedTable> homology_table(const ProjComplex<K>& m) {
    std::vector<BigradedTable> out;
    for (int i = 1; i <= m.algebra().n(); ++i)
        out.push_back(hom_from_projective(i, m).homology());
    return out;
}

inline int total(const BigradedTable& t) {
    int n = 0;
    for (const auto& [k, v] : t)
        n += v;
    return n;
}

template <class K>
struct IsoResult {
    bool isomorphic = false;
    std::string reason;
    std::optional<ChainMap<K>> certificate;
};

namespace detail {

template <class K>
K trial_coefficient(std::mt19937_64& rng);

template <>
inline Rational trial_coefficient<Rational>(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    return Rational(dist(rng));
}

template <>
inline ModP trial_coefficient<ModP>(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, ModP::modulus() - 1);
    return ModP(static_cast<long long>(dist(rng)));
}

} // namespace detail

/// Decides whether two complexes are isomorphic via a degree-(0,0) chain map.
/// Both are minimized first; for minimal complexes a chain map is an
/// isomorphism iff its idempotent component is invertible on every block of
/// equal summands. The chain-map space is computed exactly; invertibility of a
/// generic member is tested on a fixed sequence of combinations. A returned
/// certificate is always an exactly verified invertible chain map.
template <class K>
IsoResult<K> is_isomorphic(const ProjComplex<K>& m_in, const ProjComplex<K>& k_in, int attempts = 24) {
    if (!(m_in.algebra().params() == k_in.algebra().params()))
        return {false, "complexes live over different algebras", std::nullopt};
    const ProjComplex<K> a = is_minimal(m_in) ? m_in : minimize(m_in);
    const ProjComplex<K> b = is_minimal(k_in) ? k_in : minimize(k_in);
    const auto& alg = a.algebra();

    if (a == b)
        return {true, "identical minimal complexes", identity_map(a)};

    std::set<int> ts;
    for (const auto& [t, s] : a.terms())
        ts.insert(t);
    for (const auto& [t, s] : b.terms())
        ts.insert(t);
    for (int t : ts) {
        auto x = a.term(t), y = b.term(t);
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y)
            return {false, "summands differ in homological degree " + std::to_string(t), std::nullopt};
    }

    struct Var {
        int t, u, v, path;
    };
    std::vector<Var> vars;
    std::map<std::pair<int, int>, std::vector<int>> by_source;  // (t,u) -> vars
    for (int t : ts) {
        const auto& sa = a.term(t);
        const auto& sb = b.term(t);
        for (int u = 0; u < static_cast<int>(sa.size()); ++u)
            for (int v = 0; v < static_cast<int>(sb.size()); ++v)
                if (auto p = alg.path(sa[u].vertex, sb[v].vertex, sa[u].shift - sb[v].shift)) {
                    by_source[{t, u}].push_back(static_cast<int>(vars.size()));
                    vars.push_back({t, u, v, *p});
                }
    }

    // d_A F - F d_B = 0, one scalar equation per (t, u in A^t, w in B^{t+1}).
    std::map<std::tuple<int, int, int>, SparseRow<K>> eqs;
    auto bump = [&](std::tuple<int, int, int> key, int var, const K& c) {
        auto& row = eqs[key];
        auto [it, fresh] = row.try_emplace(var, c);
        if (!fresh) {
            it->second += c;
            if (is_zero(it->second))
                row.erase(it);
        }
    };
    for (int x = 0; x < static_cast<int>(vars.size()); ++x) {
        const auto& var = vars[x];
        const auto& db = b.differential(var.t);
        for (auto it = db.row_begin(var.v); it != db.row_end(var.v); ++it)
            for (const auto& [beta, c] : it->second.terms())
                if (alg.product(var.path, beta))
                    bump({var.t, var.u, it->first.second}, x, c);
    }
    for (const auto& [t, d] : a.differentials())
        for (const auto& [rc, e] : d.entries) {
            auto [u, u2] = rc;
            auto it = by_source.find({t + 1, u2});
            if (it == by_source.end())
                continue;
            for (int x : it->second)
                for (const auto& [beta, c] : e.terms())
                    if (alg.product(beta, vars[x].path))
                        bump({t, u, vars[x].v}, x, K(-c));
        }
    std::vector<SparseRow<K>> rows;
    for (auto& [key, row] : eqs)
        if (!row.empty())
            rows.push_back(std::move(row));
    auto basis = nullspace(rows, static_cast<int>(vars.size()));
    if (basis.empty())
        return {false, "no nonzero chain maps", std::nullopt};

    // Blocks of equal summands and the idempotent variables inside them.
    struct Block {
        std::vector<int> rows_u, cols_v;
        std::vector<std::tuple<int, int, int>> cells;  // (row pos, col pos, var)
    };
    std::map<std::tuple<int, int, int>, Block> blocks;  // (t, vertex, shift)
    for (int t : ts) {
        const auto& sa = a.term(t);
        const auto& sb = b.term(t);
        for (int u = 0; u < static_cast<int>(sa.size()); ++u)
            blocks[{t, sa[u].vertex, sa[u].shift}].rows_u.push_back(u);
        for (int v = 0; v < static_cast<int>(sb.size()); ++v)
            blocks[{t, sb[v].vertex, sb[v].shift}].cols_v.push_back(v);
    }
    for (int x = 0; x < static_cast<int>(vars.size()); ++x) {
        const auto& var = vars[x];
        if (alg.basis(var.path).kind != BasisKind::Idempotent)
            continue;
        const auto& su = a.term(var.t)[var.u];
        auto& blk = blocks.at({var.t, su.vertex, su.shift});
        int rp = static_cast<int>(std::find(blk.rows_u.begin(), blk.rows_u.end(), var.u) - blk.rows_u.begin());
        int cp = static_cast<int>(std::find(blk.cols_v.begin(), blk.cols_v.end(), var.v) - blk.cols_v.begin());
        blk.cells.emplace_back(rp, cp, x);
    }

    std::mt19937_64 rng(0x5eed);
    const int nb = static_cast<int>(basis.size());
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<K> alpha(nb);
        for (int k = 0; k < nb; ++k) {
            if (attempt == 0)
                alpha[k] = K(1);
            else if (attempt == 1)
                alpha[k] = K(k + 1);
            else
                alpha[k] = detail::trial_coefficient<K>(rng);
        }
        auto value = [&](int x) {
            K s(0);
            for (int k = 0; k < nb; ++k) {
                auto it = basis[k].find(x);
                if (it != basis[k].end())
                    s += alpha[k] * it->second;
            }
            return s;
        };
        bool ok = true;
        for (const auto& [key, blk] : blocks) {
            int sz = static_cast<int>(blk.rows_u.size());
            std::vector<std::vector<K>> mat(sz, std::vector<K>(sz, K(0)));
            for (const auto& [rp, cp, x] : blk.cells)
                mat[rp][cp] = value(x);
            if (!is_invertible(mat)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        ChainMap<K> f{a, b, {}};
        for (int x = 0; x < static_cast<int>(vars.size()); ++x) {
            K c = value(x);
            if (!is_zero(c))
                f.components[vars[x].t].add(vars[x].u, vars[x].v, Element<K>::basis(vars[x].path, c));
        }
        if (!is_chain_map(f))
            throw std::logic_error("is_isomorphic: kernel vector is not a chain map");
        return {true, "invertible chain map found", std::move(f)};
    }
    return {false, "no invertible chain map among " + std::to_string(nb) + "-dimensional chain-map space",
            std::nullopt};
}

} // namespace twistlab
