// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "twistlab/elliptic.hpp"
#include "twistlab/ktheory.hpp"
#include "twistlab/lattice.hpp"
#include "twistlab/serialize.hpp"

using namespace twistlab;
using Q = Rational;
using C = ProjComplex<Q>;
namespace tt = twistlab::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string first_failure;

    void require(bool ok, const std::string& what) {
        if (!ok && pass)
            first_failure = what;
        pass = pass && ok;
    }
};

ChainParams with_degrees(int n, int N, std::mt19937_64& rng) {
    ChainParams p = ChainParams::uniform(n, N);
    for (auto& d : p.edge_degrees)
        d = std::uniform_int_distribution<int>(1, N - 1)(rng);
    return p;
}

void algebra_profile(Outcome& o) {
    for (int n = 1; n <= 4; ++n)
        for (int N : {2, 3}) {
            ZigzagAlgebra a(ChainParams::uniform(n, N));
            std::string tag = "n=" + std::to_string(n) + " N=" + std::to_string(N);
            o.require(a.dimension() == (n >= 2 ? 4 * n - 2 : 2), tag + " dimension");
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    auto h = a.hom_space(i, j);
                    if (i == j) {
                        o.require(h == std::map<int, int>{{0, 1}, {N, 1}}, tag + " spherical profile");
                    } else {
                        int tot = 0;
                        for (auto [d, k] : h)
                            tot += k;
                        o.require(tot == (std::abs(i - j) == 1 ? 1 : 0), tag + " chain profile");
                    }
                }
            const int D = a.dimension();
            std::vector<std::vector<Q>> gram(D, std::vector<Q>(D));
            for (int x = 0; x < D; ++x)
                for (int y = 0; y < D; ++y)
                    if (auto p = a.product(x, y))
                        gram[x][y] = a.trace_of(*p);
            o.require(is_invertible(gram), tag + " Gram matrix");
        }
    o.detail << "n in 1..4, N in {2,3}";
}

void inverse_theorem(Outcome& o) {
    std::mt19937_64 rng(0xacce55);
    int checks = 0;
    for (int n = 1; n <= 4; ++n)
        for (int N : {2, 3}) {
            auto alg = make_algebra(with_degrees(n, N, rng));
            std::vector<C> objects;
            for (int k = 1; k <= n; ++k)
                objects.push_back(C::projective(alg, k));
            for (int r = 0; r < 20; ++r)
                objects.push_back(tt::random_two_term<Q>(alg, rng));
            for (const auto& m : objects)
                for (int i = 1; i <= n; ++i) {
                    o.require(is_isomorphic(apply_word({{i, -i}}, m), m).isomorphic, "[i,-i] M ~ M");
                    o.require(is_isomorphic(apply_word({{-i, i}}, m), m).isomorphic, "[-i,i] M ~ M");
                    checks += 2;
                }
        }
    o.detail << checks << " isomorphisms checked";
}

void braid_relations(Outcome& o) {
    int checks = 0;
    for (int n = 1; n <= 4; ++n)
        for (int N : {2, 3}) {
            auto rep = verify_relations<Q>(make_algebra(ChainParams::uniform(n, N)));
            for (const auto& c : rep.checks)
                if (c.relation != "inverse") {
                    o.require(c.passed, c.relation + " [" + to_string(c.lhs) + "] on P" + std::to_string(c.object));
                    ++checks;
                }
        }
    auto mixed = verify_relations<Q>(make_algebra(ChainParams{4, 3, {1, 2, 1}}));
    o.require(mixed.all_passed(), "mixed degrees n=4 N=3");
    o.detail << checks << " braid/commutation instances plus a mixed-degree chain";
}

void faithfulness(Outcome& o) {
    auto alg = make_algebra(ChainParams{2, 2, {1}});
    std::vector<BraidWord> words = {{{}}, {{1}}, {{2}}, {{1, 1}}, {{1, 2}}, {{2, 1}}, {{1, 2, 1}}};
    int distinct = 0, pairs = 0;
    for (std::size_t a = 0; a < words.size(); ++a)
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            // no two words of the list are related by the braid relation
            auto r = compare_words<Q>(alg, words[a], words[b]);
            ++pairs;
            distinct += r.verdict == Verdict::Distinct;
            o.require(r.verdict == Verdict::Distinct && r.witness.has_value(),
                      "[" + to_string(words[a]) + "] vs [" + to_string(words[b]) + "]");
        }
    auto rel = compare_words<Q>(alg, {{1, 2, 1}}, {{2, 1, 2}});
    o.require(rel.verdict == Verdict::IndistinguishableOnObjects, "[1 2 1] vs [2 1 2]");
    o.detail << distinct << "/" << pairs << " pairs distinct, braid pair indistinguishable; ";

    std::vector<int> totals;
    for (int m = 1; m <= 3; ++m) {
        BraidWord w;
        for (int k = 0; k < 3 * m; ++k)
            w.letters.insert(w.letters.end(), {1, 2});
        totals.push_back(matrix_total(hom_matrix<Q>(alg, w)));
    }
    o.detail << "hom_matrix totals of (s1 s2)^{3m}, m=1,2,3: " << totals[0] << "," << totals[1] << ","
             << totals[2];
    o.require(totals[0] < totals[1] && totals[1] < totals[2], "totals strictly increase");
    // the full twist acts on each P_k as a pure shift, so the totals cannot grow
    auto full = apply_word(BraidWord{{1, 2, 1, 2, 1, 2}}, C::projective(alg, 1));
    if (full.size() == 1)
        o.detail << " ((s1 s2)^3 P1 = " << to_string(full.terms().begin()->second[0]) << " in degree "
                 << full.terms().begin()->first << ")";
    o.detail << "; for comparison (s1 s2^-1)^m, m=1,2,3:";
    for (int m = 1; m <= 3; ++m) {
        BraidWord w;
        for (int k = 0; k < m; ++k)
            w.letters.insert(w.letters.end(), {1, -2});
        o.detail << ' ' << matrix_total(hom_matrix<Q>(alg, w));
    }
}

void decategorification(Outcome& o) {
    std::mt19937_64 rng(0xb0a);
    for (int r = 0; r < 50; ++r) {
        int n = 1 + r % 3;
        auto alg = make_algebra(with_degrees(n, 2 + (r / 3) % 2, rng));
        auto m = tt::random_two_term<Q>(alg, rng);
        auto w = tt::random_word(rng, n, 6);
        o.require(euler_class(apply_word(w, m)) == burau_matrix(*alg, w) * euler_class(m),
                  "functoriality for [" + to_string(w) + "]");
    }
    for (int n = 1; n <= 4; ++n) {
        auto alg = make_algebra(ChainParams::uniform(n, 2));
        auto lat = an_lattice(n);
        for (int r = 0; r < 20; ++r) {
            auto w = tt::random_word(rng, n, 6);
            IntMatrix pl = identity_int(n);
            for (int g : w.letters)
                pl = pl_reflection(std::abs(g) - 1, lat) * pl;
            o.require(alternating_conjugate(evaluate(burau_matrix(*alg, w), 1)) == pl,
                      "Burau at q=1 vs reflections for [" + to_string(w) + "]");
        }
    }
    o.detail << "50 random (w, M); 80 words against reflection products";
}

void elliptic_shadow(Outcome& o) {
    auto a = elliptic_generator("O"), b = elliptic_generator("Op");
    o.require(a * b * a == b * a * b, "ABA = BAB");
    o.require(is_identity((a * b).power(6)), "(AB)^6 = I");
    o.require(is_identity(elliptic_generator("L").inverse() * a), "T_L^-1 T_O = I");
    o.require(is_identity(elliptic_word("(O Op)^6")) && is_identity(elliptic_word("L^-1 O")), "word parser");
    o.detail << "(AB)^3 = " << to_string((a * b).power(3));
}

void lattice_claims(Outcome& o) {
    auto e8 = definiteness(build_tdiagram(2, 3, 5));
    auto e6 = definiteness(build_tdiagram(3, 3, 3));
    auto t237 = definiteness(build_tdiagram(2, 3, 7));
    o.require(e8.kind == Definiteness::Kind::NegativeDefinite, "T(2,3,5) negative definite");
    o.require(e6.kind == Definiteness::Kind::NegativeSemidefinite && e6.kernel == 1, "T(3,3,3) kernel 1");
    o.require(t237.kind == Definiteness::Kind::Indefinite, "T(2,3,7) indefinite");
    int checked = 0;
    for (int b1 = 2; b1 <= 10; ++b1)
        for (int b2 = b1; b2 <= 10; ++b2)
            for (int b3 = b2; b3 <= 12; ++b3)
                for (int c1 = 2; c1 <= 4; ++c1)
                    for (int c2 = c1; c2 <= 5; ++c2)
                        for (int c3 = c2; c3 <= 12; ++c3) {
                            bool expect = b1 + b2 + b3 + c1 + c2 + c3 == 24;
                            o.require(strange_duality_rank_check({b1, b2, b3}, {c1, c2, c3}) == expect,
                                      "rank check");
                            ++checked;
                        }
    o.detail << "T(2,3,7) signature (" << t237.positive << "," << t237.negative << "); " << checked
             << " rank checks";
}

template <class K>
bool hygiene_round(const AlgebraPtr& alg, std::mt19937_64& rng, Outcome& o) {
    auto m = tt::random_two_term<K>(alg, rng, 3, std::uniform_int_distribution<int>(-2, 2)(rng));
    auto x = tt::random_two_term<K>(alg, rng, 2);
    int i = std::uniform_int_distribution<int>(1, alg->n())(rng);
    std::vector<ProjComplex<K>> results = {
        m,
        shift(m, std::uniform_int_distribution<int>(-3, 3)(rng), std::uniform_int_distribution<int>(-3, 3)(rng)),
        direct_sum(m, x),
        cone(identity_map(m)),
        detail::cone_unchecked(evaluation_map(i, m)),
        detail::cone_unchecked(coevaluation_map(i, m)),
        minimize(m),
        twist(i, m),
        untwist(i, m),
        apply_word(tt::random_word(rng, alg->n(), 4), direct_sum(m, x)),
    };
    bool ok = true;
    for (const auto& r : results) {
        bool sq = r.d_squared_is_zero();
        o.require(sq, "d^2 = 0");
        ok = ok && sq;
        auto a = minimize(r);
        o.require(minimize(a) == a, "minimize idempotent");
        auto b = minimize(r, PivotOrder::Reverse);
        auto c = minimize(r, PivotOrder::Shuffled, static_cast<unsigned>(rng()));
        o.require(is_isomorphic(a, b).isomorphic && is_isomorphic(a, c).isomorphic, "minimize order-independent");
        auto text = complex_to_json(r).dump();
        auto back = complex_from_json<K>(Json::parse(text));
        o.require(back == r && complex_to_json(back).dump() == text, "JSON round trip");
    }
    return ok;
}

void engine_hygiene(Outcome& o) {
    std::mt19937_64 rng(0x5a1e);
    for (int r = 0; r < 200; ++r) {
        auto alg = make_algebra(tt::random_params(rng, 4, 4));
        if (r % 4 == 3)
            hygiene_round<ModP>(alg, rng, o);
        else
            hygiene_round<Q>(alg, rng, o);
    }
    o.detail << "200 cases x 10 constructions, over Q and F_32003";
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "algebra profile", 1, algebra_profile},
        {2, "inverse theorem", 10, inverse_theorem},
        {3, "braid relations", 30, braid_relations},
        {4, "faithfulness shadow", 60, faithfulness},
        {5, "decategorification consistency", 30, decategorification},
        {6, "elliptic shadow", 1, elliptic_shadow},
        {7, "lattice claims", 1, lattice_claims},
        {8, "engine hygiene", 60, engine_hygiene},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s)
            o.require(false, "time limit " + std::to_string(c.limit_s) + " s exceeded");
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ", "
                  << std::to_string(secs).substr(0, 5) << " s): " << o.detail.str();
        if (!o.pass)
            std::cout << " -- failed: " << o.first_failure;
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
