#include "twistlab/lattice.hpp"

#include <stdexcept>

#include "twistlab/scalar.hpp"

namespace twistlab {

long long IntersectionLattice::pair(const std::vector<long long>& x, const std::vector<long long>& y) const {
    long long s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            s += x[i] * form[i][j] * y[j];
    return s;
}

void IntersectionLattice::validate() const {
    for (const auto& row : form)
        if (static_cast<int>(row.size()) != rank())
            throw std::invalid_argument("lattice form is not square");
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < i; ++j)
            if (form[i][j] != form[j][i])
                throw std::invalid_argument("lattice form is not symmetric");
}

IntersectionLattice an_lattice(int n) {
    if (n < 1)
        throw std::invalid_argument("an_lattice: n must be positive");
    IntersectionLattice l{IntMatrix(n, std::vector<long long>(n, 0))};
    for (int i = 0; i < n; ++i) {
        l.form[i][i] = -2;
        if (i + 1 < n)
            l.form[i][i + 1] = l.form[i + 1][i] = 1;
    }
    return l;
}

IntersectionLattice build_tdiagram(int b1, int b2, int b3) {
    for (int b : {b1, b2, b3})
        if (b < 2)
            throw std::invalid_argument("T(b1,b2,b3) needs every b_i >= 2, got " + std::to_string(b));
    const int r = b1 + b2 + b3 - 2;
    IntersectionLattice l{IntMatrix(r, std::vector<long long>(r, 0))};
    for (int i = 0; i < r; ++i)
        l.form[i][i] = -2;
    int next = 1;
    for (int b : {b1, b2, b3}) {
        int prev = 0;
        for (int k = 1; k < b; ++k) {
            l.form[prev][next] = l.form[next][prev] = 1;
            prev = next++;
        }
    }
    return l;
}

IntMatrix pl_reflection(const std::vector<long long>& v, const IntersectionLattice& lattice) {
    lattice.validate();
    const int r = lattice.rank();
    if (static_cast<int>(v.size()) != r)
        throw std::invalid_argument("pl_reflection: vector has wrong length");
    if (lattice.pair(v, v) != -2)
        throw std::invalid_argument("pl_reflection: <v,v> = " + std::to_string(lattice.pair(v, v)) + ", need -2");
    IntMatrix m(r, std::vector<long long>(r, 0));
    for (int j = 0; j < r; ++j) {
        std::vector<long long> e(r, 0);
        e[j] = 1;
        long long c = lattice.pair(e, v);
        for (int i = 0; i < r; ++i)
            m[i][j] = e[i] + c * v[i];
    }
    return m;
}

IntMatrix pl_reflection(int i, const IntersectionLattice& lattice) {
    if (i < 0 || i >= lattice.rank())
        throw std::out_of_range("pl_reflection: basis index out of range");
    std::vector<long long> v(lattice.rank(), 0);
    v[i] = 1;
    return pl_reflection(v, lattice);
}

std::string to_string(Definiteness::Kind k) {
    switch (k) {
    case Definiteness::Kind::NegativeDefinite: return "negative_definite";
    case Definiteness::Kind::NegativeSemidefinite: return "negative_semidefinite";
    case Definiteness::Kind::PositiveDefinite: return "positive_definite";
    case Definiteness::Kind::PositiveSemidefinite: return "positive_semidefinite";
    case Definiteness::Kind::Indefinite: return "indefinite";
    case Definiteness::Kind::Zero: return "zero";
    }
    return "?";
}

Definiteness definiteness(const IntersectionLattice& lattice) {
    lattice.validate();
    const int r = lattice.rank();
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            a[i][j] = Rational(static_cast<long>(lattice.form[i][j]));

    // Congruence a -> P^T a P, one pivot at a time on the trailing block.
    Definiteness d{Definiteness::Kind::Zero};
    for (int k = 0; k < r; ++k) {
        int piv = -1;
        for (int i = k; i < r && piv < 0; ++i)
            if (!is_zero(a[i][i]))
                piv = i;
        if (piv < 0) {
            // zero diagonal: use an off-diagonal entry to make one, row_i += row_j
            int pi = -1, pj = -1;
            for (int i = k; i < r && pi < 0; ++i)
                for (int j = k; j < r; ++j)
                    if (i != j && !is_zero(a[i][j])) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) {
                d.kernel += r - k;
                break;
            }
            for (int c = 0; c < r; ++c)
                a[pi][c] += a[pj][c];
            for (int c = 0; c < r; ++c)
                a[c][pi] += a[c][pj];
            piv = pi;
        }
        std::swap(a[k], a[piv]);
        for (auto& row : a)
            std::swap(row[k], row[piv]);
        for (int i = k + 1; i < r; ++i) {
            if (is_zero(a[i][k]))
                continue;
            Rational f = a[i][k] / a[k][k];
            for (int c = k; c < r; ++c)
                a[i][c] -= f * a[k][c];
            for (int c = k; c < r; ++c)
                a[c][i] = a[i][c];
        }
        if (sgn(a[k][k]) > 0)
            ++d.positive;
        else
            ++d.negative;
    }

    using Kind = Definiteness::Kind;
    if (d.positive == 0 && d.negative == 0)
        d.kind = Kind::Zero;
    else if (d.positive > 0 && d.negative > 0)
        d.kind = Kind::Indefinite;
    else if (d.positive == 0)
        d.kind = d.kernel == 0 ? Kind::NegativeDefinite : Kind::NegativeSemidefinite;
    else
        d.kind = d.kernel == 0 ? Kind::PositiveDefinite : Kind::PositiveSemidefinite;
    return d;
}

bool strange_duality_rank_check(const std::array<int, 3>& b, const std::array<int, 3>& c) {
    for (int x : b)
        if (x < 2)
            throw std::invalid_argument("strange duality: every b_i must be >= 2");
    for (int x : c)
        if (x < 2)
            throw std::invalid_argument("strange duality: every c_i must be >= 2");
    return tdiagram_rank(b) + tdiagram_rank(c) + 2 == 22;
}

} // namespace twistlab
