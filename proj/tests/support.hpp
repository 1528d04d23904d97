#pragma once

// Random inputs shared by the unit and acceptance tests.

#include <random>

#include "twistlab/twists.hpp"

namespace twistlab::testing {

/// Two-term complex A -> B in degrees t0, t0+1 with 1..max_summands summands per
/// term. Every target summand is reached from some source summand by a path
/// (idempotents included, so some entries are invertible), and other
/// compatible entries get random coefficients, zero allowed.
template <class K>
ProjComplex<K> random_two_term(const AlgebraPtr& alg, std::mt19937_64& rng, int max_summands = 3, int t0 = 0) {
    const int n = alg->n();
    std::uniform_int_distribution<int> vert(1, n), shift(-3, 3), count(1, max_summands), coef(-3, 3);
    std::vector<Summand> src, dst;
    int a = count(rng), b = count(rng);
    for (int k = 0; k < a; ++k)
        src.push_back({vert(rng), shift(rng)});
    for (int k = 0; k < b; ++k) {
        const auto& from = src[std::uniform_int_distribution<int>(0, a - 1)(rng)];
        int to_vertex = vert(rng);
        const auto& ps = alg->paths(from.vertex, to_vertex);
        if (ps.empty()) {
            dst.push_back({from.vertex, from.shift});
            continue;
        }
        int p = ps[std::uniform_int_distribution<int>(0, static_cast<int>(ps.size()) - 1)(rng)];
        dst.push_back({to_vertex, from.shift - alg->basis(p).degree});
    }
    ProjComplex<K> m(alg);
    m.set_term(t0, src);
    m.set_term(t0 + 1, dst);
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c)
            if (auto p = alg->path(src[r].vertex, dst[c].vertex, src[r].shift - dst[c].shift)) {
                int x = coef(rng);
                if (x != 0)
                    m.set_entry(t0, r, c, Element<K>::basis(*p, K(x)));
            }
    return m;
}

inline BraidWord random_word(std::mt19937_64& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(1, n), sign(0, 1);
    BraidWord w;
    int l = len(rng);
    for (int k = 0; k < l; ++k)
        w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return w;
}

inline ChainParams random_params(std::mt19937_64& rng, int max_n, int max_N) {
    ChainParams p;
    p.n = std::uniform_int_distribution<int>(1, max_n)(rng);
    p.N = std::uniform_int_distribution<int>(2, max_N)(rng);
    p.edge_degrees.clear();
    for (int k = 1; k < p.n; ++k)
        p.edge_degrees.push_back(std::uniform_int_distribution<int>(1, p.N - 1)(rng));
    return p;
}

} // namespace twistlab::testing
