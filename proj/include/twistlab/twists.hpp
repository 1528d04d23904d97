#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/complex.hpp"

namespace twistlab {

/// Word in the braid generators: g > 0 is the twist T_g, g < 0 the inverse
/// twist T'_{-g}. Letters act left to right: the first letter is applied first.
struct BraidWord {
    std::vector<int> letters;
    bool operator==(const BraidWord&) const = default;
};

/// Parses whitespace-separated nonzero integers with |g| <= n.
/// Throws std::invalid_argument on 0, out-of-range or non-integer tokens.
BraidWord parse_braid_word(std::string_view text, int n);

std::string to_string(const BraidWord& w);

void check_word(const BraidWord& w, int n);

inline void check_generator(const ZigzagAlgebra& alg, int i) {
    if (i < 1 || i > alg.n())
        throw std::invalid_argument("generator " + std::to_string(i) + " outside [1, " + std::to_string(alg.n()) +
                                    "]");
}

/// The evaluation P_i (x) RHom(P_i, M) -> M. Each generator of RHom(P_i, M) in
/// bidegree (t, s) contributes a summand P_i<s> in homological degree t, mapped
/// to M^t by the path it stands for.
template <class K>
ChainMap<K> evaluation_map(int i, const ProjComplex<K>& m) {
    const auto& alg = m.algebra();
    auto v = hom_from_projective(i, m);
    ProjComplex<K> x(m.algebra_ptr());
    for (const auto& [t, gens] : v.generators) {
        std::vector<Summand> s;
        for (const auto& g : gens)
            s.push_back({i, g.internal});
        x.set_term(t, std::move(s));
    }
    const int e = alg.idempotent(i);
    for (const auto& [t, d] : v.differential)
        for (const auto& [rc, c] : d)
            x.set_entry(t, rc.first, rc.second, Element<K>::basis(e, c));
    ChainMap<K> ev{std::move(x), m, {}};
    for (const auto& [t, gens] : v.generators)
        for (int a = 0; a < static_cast<int>(gens.size()); ++a)
            ev.components[t].add(a, gens[a].summand, Element<K>::basis(gens[a].path));
    return ev;
}

/// The co-evaluation M -> P_i (x) RHom(M, P_i)^*, with the dual of
/// RHom(M, P_i) identified with RHom(P_i, M)<-N> through the trace pairing:
/// the generator phi of RHom(P_i, M) in bidegree (t, s) gives a summand
/// P_i<s - N> in degree t, reached from M^t by the trace-dual of phi.
template <class K>
ChainMap<K> coevaluation_map(int i, const ProjComplex<K>& m) {
    const auto& alg = m.algebra();
    auto v = hom_from_projective(i, m);
    ProjComplex<K> q(m.algebra_ptr());
    for (const auto& [t, gens] : v.generators) {
        std::vector<Summand> s;
        for (const auto& g : gens)
            s.push_back({i, g.internal - alg.N()});
        q.set_term(t, std::move(s));
    }
    const int e = alg.idempotent(i);
    for (const auto& [t, d] : v.differential)
        for (const auto& [rc, c] : d)
            q.set_entry(t, rc.first, rc.second, Element<K>::basis(e, c));

    std::map<int, std::vector<Element<K>>> duals;  // by target vertex j
    ChainMap<K> coev{m, std::move(q), {}};
    for (const auto& [t, gens] : v.generators) {
        for (int a = 0; a < static_cast<int>(gens.size()); ++a) {
            const auto& g = gens[a];
            int j = m.term(t)[g.summand].vertex;
            auto it = duals.find(j);
            if (it == duals.end())
                it = duals.emplace(j, frobenius_dual_basis<K>(alg, i, j)).first;
            const auto& ps = alg.paths(i, j);
            int pos = static_cast<int>(std::find(ps.begin(), ps.end(), g.path) - ps.begin());
            coev.components[t].add(g.summand, a, it->second[pos]);
        }
    }
    return coev;
}

/// Spherical twist T_i M = Cone(P_i (x) RHom(P_i, M) -> M), minimized.
template <class K>
ProjComplex<K> twist(int i, const ProjComplex<K>& m) {
    check_generator(m.algebra(), i);
    if (m.is_zero())
        return m;
    return minimize(detail::cone_unchecked(evaluation_map(i, m)));
}

/// Inverse twist T'_i M = Cone(M -> P_i (x) RHom(M, P_i)^*)[-1], minimized.
template <class K>
ProjComplex<K> untwist(int i, const ProjComplex<K>& m) {
    check_generator(m.algebra(), i);
    if (m.is_zero())
        return m;
    return minimize(shift(detail::cone_unchecked(coevaluation_map(i, m)), -1, 0));
}

template <class K>
ProjComplex<K> apply_letter(int g, const ProjComplex<K>& m) {
    return g > 0 ? twist(g, m) : untwist(-g, m);
}

template <class K>
ProjComplex<K> apply_word(const BraidWord& w, const ProjComplex<K>& m) {
    check_word(w, m.algebra().n());
    ProjComplex<K> cur = m;
    for (int g : w.letters)
        cur = apply_letter(g, cur);
    return cur;
}

/// Object-level check of one relation instance: lhs . P_k ~= rhs . P_k.
struct RelationCheck {
    std::string relation;  // "inverse", "braid" or "commute"
    BraidWord lhs;
    BraidWord rhs;
    int object = 0;
    bool passed = false;
    std::string detail;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

template <class K>
RelationCheck check_relation(const AlgebraPtr& alg, std::string relation, BraidWord lhs, BraidWord rhs,
                             int object) {
    auto p = ProjComplex<K>::projective(alg, object);
    auto r = is_isomorphic(apply_word(lhs, p), apply_word(rhs, p));
    return {std::move(relation), std::move(lhs), std::move(rhs), object, r.isomorphic, r.reason};
}

/// Inverse relations in both orders, braid relations for adjacent generators
/// and commutation for distant ones, each on every P_k.
template <class K>
RelationReport verify_relations(const AlgebraPtr& alg) {
    RelationReport rep;
    const int n = alg->n();
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= n; ++i) {
            rep.checks.push_back(check_relation<K>(alg, "inverse", {{i, -i}}, {}, k));
            rep.checks.push_back(check_relation<K>(alg, "inverse", {{-i, i}}, {}, k));
        }
        for (int i = 1; i < n; ++i)
            rep.checks.push_back(check_relation<K>(alg, "braid", {{i, i + 1, i}}, {{i + 1, i, i + 1}}, k));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 2; j <= n; ++j)
                rep.checks.push_back(check_relation<K>(alg, "commute", {{i, j}}, {{j, i}}, k));
    }
    return rep;
}

/// Entry (i, j) is the total dimension of H^*(RHom(P_i, w . P_j)).
template <class K>
std::vector<std::vector<int>> hom_matrix(const AlgebraPtr& alg, const BraidWord& w) {
    const int n = alg->n();
    std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
    for (int j = 1; j <= n; ++j) {
        auto x = apply_word(w, ProjComplex<K>::projective(alg, j));
        for (int i = 1; i <= n; ++i)
            out[i - 1][j - 1] = total(hom_from_projective(i, x).homology());
    }
    return out;
}

/// Bigraded refinement of hom_matrix: entry (i, j) is the table (t, s) -> dim.
template <class K>
std::vector<std::vector<BigradedTable>> hom_matrix_bigraded(const AlgebraPtr& alg, const BraidWord& w) {
    const int n = alg->n();
    std::vector<std::vector<BigradedTable>> out(n, std::vector<BigradedTable>(n));
    for (int j = 1; j <= n; ++j) {
        auto x = apply_word(w, ProjComplex<K>::projective(alg, j));
        for (int i = 1; i <= n; ++i)
            out[i - 1][j - 1] = hom_from_projective(i, x).homology();
    }
    return out;
}

inline int matrix_total(const std::vector<std::vector<int>>& m) {
    int s = 0;
    for (const auto& r : m)
        for (int v : r)
            s += v;
    return s;
}

enum class Verdict { Distinct, IndistinguishableOnObjects };

struct Witness {
    int vertex = 0;         // the object P_k on which the words differ
    std::string invariant;  // first invariant that tells the images apart
};

struct ComparisonReport {
    Verdict verdict = Verdict::IndistinguishableOnObjects;
    std::optional<Witness> witness;
    std::vector<bool> isomorphic_on_vertex;
    std::vector<std::vector<int>> hom_matrix_w1;
    std::vector<std::vector<int>> hom_matrix_w2;
};

namespace detail {

template <class K>
std::string distinguishing_invariant(const ProjComplex<K>& a, const ProjComplex<K>& b, const std::string& fallback) {
    auto ha = homology_table(a);
    auto hb = homology_table(b);
    for (int i = 0; i < static_cast<int>(ha.size()); ++i) {
        if (ha[i] == hb[i])
            continue;
        std::set<std::pair<int, int>> keys;
        for (const auto& [k, v] : ha[i])
            keys.insert(k);
        for (const auto& [k, v] : hb[i])
            keys.insert(k);
        for (const auto& k : keys) {
            int x = ha[i].count(k) ? ha[i].at(k) : 0;
            int y = hb[i].count(k) ? hb[i].at(k) : 0;
            if (x != y)
                return "dim H^(" + std::to_string(k.first) + "," + std::to_string(k.second) + ") RHom(P_" +
                       std::to_string(i + 1) + ", -): " + std::to_string(x) + " vs " + std::to_string(y);
        }
    }
    return fallback;
}

} // namespace detail

/// Applies both words to every P_k. Distinct as soon as one pair of images is
/// non-isomorphic; otherwise the words are only known to agree on objects.
template <class K>
ComparisonReport compare_words(const AlgebraPtr& alg, const BraidWord& w1, const BraidWord& w2) {
    ComparisonReport rep;
    const int n = alg->n();
    rep.hom_matrix_w1.assign(n, std::vector<int>(n, 0));
    rep.hom_matrix_w2.assign(n, std::vector<int>(n, 0));
    for (int k = 1; k <= n; ++k) {
        auto p = ProjComplex<K>::projective(alg, k);
        auto a = apply_word(w1, p);
        auto b = apply_word(w2, p);
        for (int i = 1; i <= n; ++i) {
            rep.hom_matrix_w1[i - 1][k - 1] = total(hom_from_projective(i, a).homology());
            rep.hom_matrix_w2[i - 1][k - 1] = total(hom_from_projective(i, b).homology());
        }
        auto r = is_isomorphic(a, b);
        rep.isomorphic_on_vertex.push_back(r.isomorphic);
        if (!r.isomorphic && !rep.witness)
            rep.witness = Witness{k, detail::distinguishing_invariant(a, b, r.reason)};
    }
    rep.verdict = rep.witness ? Verdict::Distinct : Verdict::IndistinguishableOnObjects;
    return rep;
}

} // namespace twistlab
