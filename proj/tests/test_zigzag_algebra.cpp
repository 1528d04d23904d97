#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistlab/zigzag_algebra.hpp"

using namespace twistlab;

namespace {

ChainParams chain(int n, int N, std::vector<int> d) { return ChainParams{n, N, std::move(d)}; }

// Words in the quiver arrows, reduced by the zigzag relations. A loop at i is
// written as the round trip to a neighbour (or the symbol {i, i} when n = 1).
using Word = std::vector<std::pair<int, int>>;

struct Reduced {
    bool zero = false;
    int source = 0;
    Word word;
};

Reduced reduce(int source, const Word& w) {
    if (w.size() > 2)
        return {true, source, {}};
    if (w.size() == 2 && w[1].second != w[0].first)  // same direction twice
        return {true, source, {}};
    return {false, source, w};
}

Word canonical(const ZigzagAlgebra& alg, int b) {
    const auto& e = alg.basis(b);
    switch (e.kind) {
    case BasisKind::Idempotent: return {};
    case BasisKind::Forward:
    case BasisKind::Backward: return {{e.source, e.target}};
    case BasisKind::Loop:
        if (alg.n() == 1)
            return {{e.source, e.source}};
        if (e.source < alg.n())
            return {{e.source, e.source + 1}, {e.source + 1, e.source}};
        return {{e.source, e.source - 1}, {e.source - 1, e.source}};
    }
    return {};
}

// Oracle product: concatenate canonical words and reduce.
std::optional<std::pair<int, Word>> oracle_product(const ZigzagAlgebra& alg, int x, int y) {
    const auto& bx = alg.basis(x);
    const auto& by = alg.basis(y);
    if (bx.target != by.source)
        return std::nullopt;
    Word w = canonical(alg, x);
    auto wy = canonical(alg, y);
    if (alg.n() == 1 && !w.empty() && !wy.empty())
        return std::nullopt;
    w.insert(w.end(), wy.begin(), wy.end());
    auto r = reduce(bx.source, w);
    if (r.zero)
        return std::nullopt;
    return std::make_pair(bx.source, r.word);
}

bool same_class(const ZigzagAlgebra& alg, int b, int source, const Word& w) {
    const auto& e = alg.basis(b);
    if (e.source != source)
        return false;
    if (w.size() == 2 || (w.size() == 1 && w[0].first == w[0].second))
        return e.kind == BasisKind::Loop;
    return canonical(alg, b) == w;
}

} // namespace

TEST_CASE("basis of the default chain") {
    ZigzagAlgebra a(chain(2, 2, {1}));
    REQUIRE(a.dimension() == 6);
    std::vector<std::string> names;
    for (const auto& b : a.basis())
        names.push_back(b.name);
    CHECK(names == std::vector<std::string>{"e1", "e2", "a1_2", "a2_1", "l1", "l2"});
}

TEST_CASE("single vertex is the dual numbers in degree N") {
    ZigzagAlgebra a(chain(1, 2, {}));
    CHECK(a.dimension() == 2);
    CHECK(a.basis(a.loop(1)).degree == 2);
    CHECK(!a.product(a.loop(1), a.loop(1)));
    CHECK(a.hom_space(1, 1) == std::map<int, int>{{0, 1}, {2, 1}});
}

TEST_CASE("mixed edge degrees") {
    ZigzagAlgebra a(chain(3, 3, {1, 2}));
    CHECK(a.dimension() == 10);
    CHECK(a.basis(a.forward(1)).degree == 1);
    CHECK(a.basis(a.backward(1)).degree == 2);
    CHECK(a.basis(a.forward(2)).degree == 2);
    CHECK(a.basis(a.backward(2)).degree == 1);
    CHECK(a.basis(*a.find("a3_2")).degree == 1);
}

TEST_CASE("products from the relation table") {
    ZigzagAlgebra a(chain(3, 2, {1, 1}));
    CHECK(a.product(a.forward(1), a.backward(1)) == a.loop(1));
    CHECK(!a.product(a.forward(1), a.forward(2)));
    CHECK(a.product(a.idempotent(1), a.forward(1)) == a.forward(1));
    CHECK(a.product(a.forward(2), a.backward(2)) == a.loop(2));
    CHECK(a.product(a.backward(1), a.forward(1)) == a.loop(2));
    CHECK(!a.product(a.loop(2), a.backward(1)));
    CHECK(!a.product(a.loop(1), a.loop(1)));
    CHECK(!a.product(a.forward(1), a.forward(1)));  // targets do not match
}

TEST_CASE("hom spaces") {
    ZigzagAlgebra a(chain(2, 2, {1}));
    CHECK(a.hom_space(1, 1) == std::map<int, int>{{0, 1}, {2, 1}});
    CHECK(a.hom_space(1, 2) == std::map<int, int>{{1, 1}});
    ZigzagAlgebra b(chain(3, 2, {1, 1}));
    CHECK(b.hom_space(1, 3).empty());
    CHECK_THROWS_AS(b.hom_space(0, 1), std::out_of_range);
    CHECK_THROWS_AS(b.hom_space(1, 4), std::out_of_range);
}

TEST_CASE("trace picks out loops") {
    ZigzagAlgebra a(chain(2, 2, {1}));
    CHECK(trace(a, Element<Rational>::basis(a.loop(1))) == 1);
    CHECK(trace(a, Element<Rational>::basis(a.idempotent(1))) == 0);
    auto x = Element<Rational>::basis(a.loop(1), 3) + Element<Rational>::basis(a.loop(2), -5) +
             Element<Rational>::basis(a.forward(1), 7);
    CHECK(trace(a, x) == -2);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(ZigzagAlgebra(chain(0, 2, {})), std::invalid_argument);
    CHECK_THROWS_AS(ZigzagAlgebra(chain(2, 1, {1})), std::invalid_argument);
    CHECK_THROWS_AS(ZigzagAlgebra(chain(2, 2, {2})), std::invalid_argument);
    CHECK_THROWS_AS(ZigzagAlgebra(chain(2, 3, {0})), std::invalid_argument);
    CHECK_THROWS_AS(ZigzagAlgebra(chain(3, 2, {1})), std::invalid_argument);
}

TEST_CASE("structure properties over a grid of chains") {
    for (int n = 1; n <= 4; ++n)
        for (int N = 2; N <= 4; ++N)
            for (int d = 1; d < N; ++d) {
                std::vector<int> degs;
                for (int k = 1; k < n; ++k)
                    degs.push_back(k % 2 ? d : N - d);
                ZigzagAlgebra a(chain(n, N, degs));
                CAPTURE(n);
                CAPTURE(N);
                CAPTURE(d);
                const int D = a.dimension();
                CHECK(D == (n == 1 ? 2 : 4 * n - 2));

                for (int x = 0; x < D; ++x)
                    for (int y = 0; y < D; ++y) {
                        auto p = a.product(x, y);
                        auto o = oracle_product(a, x, y);
                        REQUIRE(p.has_value() == o.has_value());
                        if (p) {
                            CHECK(same_class(a, *p, o->first, o->second));
                            CHECK(a.basis(*p).degree == a.basis(x).degree + a.basis(y).degree);
                        }
                        // Frobenius symmetry on basis pairs
                        int txy = p ? a.trace_of(*p) : 0;
                        auto q = a.product(y, x);
                        int tyx = q ? a.trace_of(*q) : 0;
                        CHECK(txy == tyx);
                        for (int z = 0; z < D; ++z) {
                            std::optional<int> l, r;
                            if (p)
                                l = a.product(*p, z);
                            if (auto yz = a.product(y, z))
                                r = a.product(x, *yz);
                            CHECK(l == r);
                        }
                    }

                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        auto h = a.hom_space(i, j);
                        int tot = 0;
                        for (auto [deg, dim] : h)
                            tot += dim;
                        if (i == j)
                            CHECK(h == std::map<int, int>{{0, 1}, {N, 1}});
                        else
                            CHECK(tot == (std::abs(i - j) == 1 ? 1 : 0));
                    }

                std::vector<std::vector<Rational>> gram(D, std::vector<Rational>(D));
                for (int x = 0; x < D; ++x)
                    for (int y = 0; y < D; ++y)
                        if (auto p = a.product(x, y))
                            gram[x][y] = a.trace_of(*p);
                CHECK(is_invertible(gram));
            }
}

TEST_CASE("Frobenius dual bases") {
    ZigzagAlgebra a(chain(3, 3, {1, 2}));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            auto dual = frobenius_dual_basis<Rational>(a, i, j);
            const auto& ps = a.paths(i, j);
            REQUIRE(dual.size() == ps.size());
            for (std::size_t x = 0; x < ps.size(); ++x)
                for (std::size_t y = 0; y < ps.size(); ++y)
                    CHECK(trace(a, multiply(a, Element<Rational>::basis(ps[x]), dual[y])) == (x == y ? 1 : 0));
        }
    CHECK(frobenius_dual_basis<Rational>(a, 1, 1)[0] == Element<Rational>::basis(a.loop(1)));
    CHECK(frobenius_dual_basis<Rational>(a, 1, 2)[0] == Element<Rational>::basis(a.backward(1)));
}

TEST_CASE("element arithmetic") {
    ZigzagAlgebra a(chain(2, 2, {1}));
    using E = Element<Rational>;
    auto x = E::basis(a.forward(1), 2) + E::basis(a.idempotent(1));
    auto y = E::basis(a.backward(1), Rational(1, 2));
    auto xy = multiply(a, x, y);
    CHECK(xy == E::basis(a.loop(1)) + E::basis(a.backward(1), Rational(0)));
    CHECK((x - x).is_zero());
    CHECK(E::basis(a.loop(1), 0).is_zero());
    CHECK(homogeneous_degree(a, x) == std::nullopt);
    CHECK(homogeneous_degree(a, y) == 2 - 1);
}
