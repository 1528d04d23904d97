#pragma once

#include "twistlab/complex.hpp"
#include "twistlab/laurent.hpp"
#include "twistlab/twists.hpp"

namespace twistlab {

/// Graded Euler class: component i-1 is sum over summands P_i<s> in degree t
/// of (-1)^t q^s.
template <class K>
LaurentVector euler_class(const ProjComplex<K>& m) {
    LaurentVector v(m.algebra().n());
    for (const auto& [t, sum] : m.terms())
        for (const auto& s : sum)
            v[s.vertex - 1].add(s.shift, (t % 2 == 0) ? 1 : -1);
    return v;
}

/// chi_q(P_i, P_j) = sum_s dim (e_i A e_j)_s q^s, indexed from zero.
LaurentMatrix euler_form(const ZigzagAlgebra& alg);

/// Matrix of [M] -> [M] - chi_q(P_i, M) [P_i] for g = i > 0, and of
/// [M] -> [M] - q^{-N} chi_q(P_i, M) [P_i] for g = -i. Acts on column vectors.
LaurentMatrix burau_generator(const ZigzagAlgebra& alg, int g);

/// B(w) with euler_class(apply_word(w, M)) = B(w) euler_class(M); the first
/// letter is the rightmost factor.
LaurentMatrix burau_matrix(const ZigzagAlgebra& alg, const BraidWord& w);

/// D X D with D = diag(-1, +1, -1, ...). At q = 1 this carries the Euler-
/// class basis [P_i] to the root basis (-1)^i [P_i], where reflections take
/// the Picard-Lefschetz form with +1 edges.
IntMatrix alternating_conjugate(const IntMatrix& x);

} // namespace twistlab
