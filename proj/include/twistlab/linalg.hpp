#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twistlab/scalar.hpp"

namespace twistlab {

/// Sparse vector: column index -> nonzero coefficient.
template <class K>
using SparseRow = std::map<int, K>;

namespace detail {

template <class K>
void axpy(SparseRow<K>& row, const K& factor, const SparseRow<K>& pivot) {
    // row -= factor * pivot
    for (const auto& [c, v] : pivot) {
        auto it = row.find(c);
        if (it == row.end()) {
            row.emplace(c, K(-(factor * v)));
        } else {
            it->second -= factor * v;
            if (is_zero(it->second))
                row.erase(it);
        }
    }
}

} // namespace detail

/// Incremental row echelon form over an exact field. Rows are reduced as
/// they are inserted; pivots are normalized to one.
template <class K>
class Echelon {
public:
    /// Returns true if the row was independent of those already inserted.
    bool insert(SparseRow<K> row) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto p = pivots_.find(lead->first);
            if (p == pivots_.end()) {
                K inv = inverse(lead->second);
                for (auto& [c, v] : row)
                    v *= inv;
                pivots_.emplace(lead->first, std::move(row));
                return true;
            }
            K factor = lead->second;
            detail::axpy(row, factor, p->second);
        }
        return false;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

    /// Basis of {x : row . x = 0 for every inserted row}, over ncols columns.
    std::vector<SparseRow<K>> kernel(int ncols) const {
        // back substitution to reduced form
        std::map<int, SparseRow<K>> reduced;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            SparseRow<K> row = it->second;
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto e = std::next(row.begin()); e != row.end(); ++e) {
                    auto q = reduced.find(e->first);
                    if (q != reduced.end()) {
                        K factor = e->second;
                        detail::axpy(row, factor, q->second);
                        changed = true;
                        break;
                    }
                }
            }
            reduced.emplace(it->first, std::move(row));
        }
        std::vector<SparseRow<K>> basis;
        for (int f = 0; f < ncols; ++f) {
            if (reduced.count(f))
                continue;
            SparseRow<K> x;
            x.emplace(f, K(1));
            for (const auto& [c, row] : reduced) {
                auto it = row.find(f);
                if (it != row.end())
                    x.emplace(c, K(-it->second));
            }
            basis.push_back(std::move(x));
        }
        return basis;
    }

private:
    std::map<int, SparseRow<K>> pivots_;
};

template <class K>
int rank(const std::vector<SparseRow<K>>& rows) {
    Echelon<K> e;
    for (const auto& r : rows)
        e.insert(r);
    return e.rank();
}

template <class K>
std::vector<SparseRow<K>> nullspace(const std::vector<SparseRow<K>>& rows, int ncols) {
    Echelon<K> e;
    for (const auto& r : rows)
        e.insert(r);
    return e.kernel(ncols);
}

/// Dense square matrix invertibility.
template <class K>
bool is_invertible(const std::vector<std::vector<K>>& m) {
    std::vector<SparseRow<K>> rows;
    for (const auto& r : m) {
        SparseRow<K> s;
        for (int c = 0; c < static_cast<int>(r.size()); ++c)
            if (!is_zero(r[c]))
                s.emplace(c, r[c]);
        rows.push_back(std::move(s));
    }
    return rank(rows) == static_cast<int>(m.size());
}

/// Gauss-Jordan inverse of a dense square matrix; throws std::domain_error
/// when singular.
template <class K>
std::vector<std::vector<K>> dense_inverse(std::vector<std::vector<K>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<K>> inv(n, std::vector<K>(n, K(0)));
    for (int i = 0; i < n; ++i)
        inv[i][i] = K(1);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && is_zero(m[piv][col]))
            ++piv;
        if (piv == n)
            throw std::domain_error("dense_inverse: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        K s = inverse(m[col][col]);
        for (int j = 0; j < n; ++j) {
            m[col][j] *= s;
            inv[col][j] *= s;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || is_zero(m[r][col]))
                continue;
            K f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace twistlab
