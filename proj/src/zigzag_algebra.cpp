#include "twistlab/zigzag_algebra.hpp"

#include <stdexcept>

namespace twistlab {

void ChainParams::validate() const {
    if (n < 1)
        throw std::invalid_argument("chain length n must be at least 1, got " + std::to_string(n));
    if (N < 2)
        throw std::invalid_argument("spherical dimension N must be at least 2, got " + std::to_string(N));
    if (static_cast<int>(edge_degrees.size()) != n - 1)
        throw std::invalid_argument("expected " + std::to_string(n - 1) + " edge degrees, got " +
                                    std::to_string(edge_degrees.size()));
    for (int d : edge_degrees)
        if (d < 1 || d > N - 1)
            throw std::invalid_argument("edge degree " + std::to_string(d) + " outside [1, " +
                                        std::to_string(N - 1) + "]");
}

ChainParams ChainParams::uniform(int n, int N) {
    ChainParams p;
    p.n = n;
    p.N = N;
    p.edge_degrees.assign(n > 1 ? n - 1 : 0, 1);
    return p;
}

ZigzagAlgebra::ZigzagAlgebra(ChainParams params) : params_(std::move(params)) {
    params_.validate();
    const int n = params_.n, N = params_.N;

    for (int i = 1; i <= n; ++i)
        basis_.push_back({BasisKind::Idempotent, i, i, 0, "e" + std::to_string(i)});
    for (int i = 1; i < n; ++i) {
        int d = params_.edge_degrees[i - 1];
        std::string a = std::to_string(i), b = std::to_string(i + 1);
        basis_.push_back({BasisKind::Forward, i, i + 1, d, "a" + a + "_" + b});
        basis_.push_back({BasisKind::Backward, i + 1, i, N - d, "a" + b + "_" + a});
    }
    for (int i = 1; i <= n; ++i)
        basis_.push_back({BasisKind::Loop, i, i, N, "l" + std::to_string(i)});

    const int dim = dimension();
    table_.assign(static_cast<std::size_t>(dim) * dim, std::nullopt);
    for (int x = 0; x < dim; ++x) {
        for (int y = 0; y < dim; ++y) {
            const auto& bx = basis_[x];
            const auto& by = basis_[y];
            std::optional<int> r;
            if (bx.target != by.source) {
                r = std::nullopt;
            } else if (bx.kind == BasisKind::Idempotent) {
                r = y;
            } else if (by.kind == BasisKind::Idempotent) {
                r = x;
            } else if (bx.kind == BasisKind::Loop || by.kind == BasisKind::Loop) {
                r = std::nullopt;
            } else if (by.target == bx.source) {
                // out and back along one edge
                r = loop(bx.source);
            }
            // two steps in the same direction vanish
            table_[x * dim + y] = r;
        }
    }

    paths_.assign(static_cast<std::size_t>(n) * n, {});
    for (int b = 0; b < dim; ++b)
        paths_[(basis_[b].source - 1) * n + (basis_[b].target - 1)].push_back(b);
    for (int b = 0; b < dim; ++b)
        by_name_[basis_[b].name] = b;
}

void ZigzagAlgebra::check_vertex(int v) const {
    if (v < 1 || v > params_.n)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " + std::to_string(params_.n) +
                                "]");
}

int ZigzagAlgebra::idempotent(int vertex) const {
    check_vertex(vertex);
    return vertex - 1;
}

int ZigzagAlgebra::loop(int vertex) const {
    check_vertex(vertex);
    return params_.n + 2 * (params_.n - 1) + vertex - 1;
}

int ZigzagAlgebra::forward(int vertex) const {
    if (vertex < 1 || vertex >= params_.n)
        throw std::out_of_range("no arrow " + std::to_string(vertex) + " -> " + std::to_string(vertex + 1));
    return params_.n + 2 * (vertex - 1);
}

int ZigzagAlgebra::backward(int vertex) const { return forward(vertex) + 1; }

std::optional<int> ZigzagAlgebra::path(int source, int target, int degree) const {
    for (int b : paths(source, target))
        if (basis_[b].degree == degree)
            return b;
    return std::nullopt;
}

const std::vector<int>& ZigzagAlgebra::paths(int source, int target) const {
    check_vertex(source);
    check_vertex(target);
    return paths_[(source - 1) * params_.n + (target - 1)];
}

std::map<int, int> ZigzagAlgebra::hom_space(int i, int j) const {
    std::map<int, int> dims;
    for (int b : paths(i, j))
        ++dims[basis_[b].degree];
    return dims;
}

std::optional<int> ZigzagAlgebra::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

} // namespace twistlab
