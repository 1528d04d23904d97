#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/linalg.hpp"
#include "twistlab/scalar.hpp"

namespace twistlab {

/// Shape of an A_n-chain of N-spherical objects. Vertices are 1-based.
/// edge_degrees[i-1] is the internal degree of the arrow i -> i+1; the
/// arrow back has degree N - edge_degrees[i-1].
struct ChainParams {
    int n = 2;
    int N = 2;
    std::vector<int> edge_degrees{1};

    /// Throws std::invalid_argument when an invariant fails.
    void validate() const;

    /// Chain with every forward arrow in degree 1.
    static ChainParams uniform(int n, int N);

    bool operator==(const ChainParams&) const = default;
};

enum class BasisKind { Idempotent, Forward, Backward, Loop };

struct BasisElement {
    BasisKind kind;
    int source;
    int target;
    int degree;
    std::string name;
};

/// The graded zigzag algebra of the chain, with paths composed left to right:
/// x*y means "first x, then y", so x*y != 0 needs target(x) == source(y).
/// Immutable after construction.
class ZigzagAlgebra {
public:
    explicit ZigzagAlgebra(ChainParams params);

    const ChainParams& params() const { return params_; }
    int n() const { return params_.n; }
    int N() const { return params_.N; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const BasisElement& basis(int b) const { return basis_.at(b); }
    const std::vector<BasisElement>& basis() const { return basis_; }

    int idempotent(int vertex) const;
    int loop(int vertex) const;
    /// Arrow vertex -> vertex+1.
    int forward(int vertex) const;
    /// Arrow vertex+1 -> vertex.
    int backward(int vertex) const;

    /// Product of two basis paths; each nonzero product is a basis path with
    /// coefficient one.
    std::optional<int> product(int x, int y) const { return table_[x * dimension() + y]; }

    /// The unique basis path from source to target in the given degree, if any.
    /// Every graded piece of e_i A e_j is at most one-dimensional.
    std::optional<int> path(int source, int target, int degree) const;

    /// Basis paths from source to target, in basis order.
    const std::vector<int>& paths(int source, int target) const;

    /// Graded dimension table of e_i A e_j: degree -> dimension.
    std::map<int, int> hom_space(int i, int j) const;

    /// Coefficient of the Frobenius trace on a basis path (1 on loops).
    int trace_of(int b) const { return basis_[b].kind == BasisKind::Loop ? 1 : 0; }

    std::optional<int> find(const std::string& name) const;

    void check_vertex(int v) const;

private:
    ChainParams params_;
    std::vector<BasisElement> basis_;
    std::vector<std::optional<int>> table_;
    std::vector<std::vector<int>> paths_;  // (source-1)*n + (target-1)
    std::map<std::string, int> by_name_;
};

using AlgebraPtr = std::shared_ptr<const ZigzagAlgebra>;

inline AlgebraPtr make_algebra(ChainParams params) {
    return std::make_shared<const ZigzagAlgebra>(std::move(params));
}

/// A linear combination of basis paths with exact coefficients.
/// Terms are kept sorted by basis index with no zero coefficients.
template <class K>
class Element {
public:
    Element() = default;
    static Element basis(int b, K c = K(1)) {
        Element e;
        if (!twistlab::is_zero(c))
            e.terms_.emplace_back(b, std::move(c));
        return e;
    }

    const std::vector<std::pair<int, K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coefficient(int b) const {
        for (const auto& [idx, c] : terms_)
            if (idx == b)
                return c;
        return K(0);
    }

    void add(int b, const K& c) {
        auto it = terms_.begin();
        while (it != terms_.end() && it->first < b)
            ++it;
        if (it != terms_.end() && it->first == b) {
            it->second += c;
            if (twistlab::is_zero(it->second))
                terms_.erase(it);
        } else if (!twistlab::is_zero(c)) {
            terms_.insert(it, {b, c});
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [b, c] : o.terms_)
            add(b, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [b, c] : o.terms_)
            add(b, K(-c));
        return *this;
    }
    Element operator+(const Element& o) const { return Element(*this) += o; }
    Element operator-(const Element& o) const { return Element(*this) -= o; }
    Element scaled(const K& s) const {
        Element r;
        if (twistlab::is_zero(s))
            return r;
        for (const auto& [b, c] : terms_)
            r.terms_.emplace_back(b, K(c * s));
        return r;
    }
    Element operator-() const { return scaled(K(-1)); }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

private:
    std::vector<std::pair<int, K>> terms_;
};

template <class K>
Element<K> multiply(const ZigzagAlgebra& alg, const Element<K>& x, const Element<K>& y) {
    Element<K> r;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms())
            if (auto p = alg.product(bx, by))
                r.add(*p, K(cx * cy));
    return r;
}

template <class K>
K trace(const ZigzagAlgebra& alg, const Element<K>& x) {
    K t(0);
    for (const auto& [b, c] : x.terms())
        if (alg.trace_of(b))
            t += c;
    return t;
}

/// Internal degree of a homogeneous element; nullopt for zero or mixed degrees.
template <class K>
std::optional<int> homogeneous_degree(const ZigzagAlgebra& alg, const Element<K>& x) {
    if (x.is_zero())
        return std::nullopt;
    int d = alg.basis(x.terms().front().first).degree;
    for (const auto& [b, c] : x.terms())
        if (alg.basis(b).degree != d)
            return std::nullopt;
    return d;
}

/// For each basis path phi from i to j (in the order of paths(i, j)), the
/// element phi' of e_j A e_i with trace(phi_a * phi'_b) = [a == b]. This is
/// the dual basis under the Frobenius pairing (x, y) -> trace(x y).
template <class K>
std::vector<Element<K>> frobenius_dual_basis(const ZigzagAlgebra& alg, int i, int j) {
    const auto& left = alg.paths(i, j);
    const auto& right = alg.paths(j, i);
    if (left.size() != right.size())
        throw std::logic_error("Frobenius pairing is not perfect on e_i A e_j");
    const int m = static_cast<int>(left.size());
    std::vector<std::vector<K>> gram(m, std::vector<K>(m, K(0)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (auto p = alg.product(left[a], right[b]))
                gram[a][b] = K(alg.trace_of(*p));
    auto inv = dense_inverse(std::move(gram));
    std::vector<Element<K>> dual(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            dual[a].add(right[b], inv[b][a]);
    return dual;
}

} // namespace twistlab
