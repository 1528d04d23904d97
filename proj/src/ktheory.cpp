#include "twistlab/ktheory.hpp"

namespace twistlab {

LaurentMatrix euler_form(const ZigzagAlgebra& alg) {
    const int n = alg.n();
    LaurentMatrix c(n, LaurentVector(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (const auto& [deg, dim] : alg.hom_space(i, j))
                c[i - 1][j - 1].add(deg, dim);
    return c;
}

LaurentMatrix burau_generator(const ZigzagAlgebra& alg, int g) {
    const int n = alg.n();
    const int i = g > 0 ? g : -g;
    if (g == 0 || i > n)
        throw std::invalid_argument("burau_generator: letter " + std::to_string(g) + " outside generator range");
    auto c = euler_form(alg);
    LaurentPoly scale = g > 0 ? LaurentPoly(1) : LaurentPoly::monomial(1, -alg.N());
    auto b = identity_laurent(n);
    for (int j = 0; j < n; ++j)
        b[i - 1][j] -= scale * c[i - 1][j];
    return b;
}

LaurentMatrix burau_matrix(const ZigzagAlgebra& alg, const BraidWord& w) {
    check_word(w, alg.n());
    auto b = identity_laurent(alg.n());
    for (int g : w.letters)
        b = burau_generator(alg, g) * b;
    return b;
}

IntMatrix alternating_conjugate(const IntMatrix& x) {
    IntMatrix r = x;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j)
            if ((i + j) % 2 != 0)
                r[i][j] = -r[i][j];
    return r;
}

} // namespace twistlab
