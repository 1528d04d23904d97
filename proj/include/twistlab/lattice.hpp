#pragma once

#include <array>
#include <string>
#include <vector>

#include "twistlab/laurent.hpp"

namespace twistlab {

/// Free abelian group of finite rank with a symmetric integer form.
struct IntersectionLattice {
    IntMatrix form;

    int rank() const { return static_cast<int>(form.size()); }
    long long pair(const std::vector<long long>& x, const std::vector<long long>& y) const;

    /// Throws std::invalid_argument unless the form is square and symmetric.
    void validate() const;
};

/// The A_n chain of (-2)-spheres: -2 on the diagonal, +1 between neighbours.
IntersectionLattice an_lattice(int n);

/// Star-shaped tree T(b1,b2,b3) with the centre counted in each arm:
/// node 0 is the centre, then the arms in order, each running outward.
/// Rank is b1 + b2 + b3 - 2. Throws std::invalid_argument if some b_i < 2.
IntersectionLattice build_tdiagram(int b1, int b2, int b3);

inline int tdiagram_rank(const std::array<int, 3>& b) { return b[0] + b[1] + b[2] - 2; }

/// Matrix of x -> x + <x, v> v (columns are images of basis vectors).
/// Throws std::invalid_argument unless <v, v> = -2.
IntMatrix pl_reflection(const std::vector<long long>& v, const IntersectionLattice& lattice);

/// Reflection in the i-th basis vector (0-based).
IntMatrix pl_reflection(int i, const IntersectionLattice& lattice);

struct Definiteness {
    enum class Kind { NegativeDefinite, NegativeSemidefinite, PositiveDefinite, PositiveSemidefinite, Indefinite, Zero };
    Kind kind;
    int positive = 0;
    int negative = 0;
    int kernel = 0;
};

std::string to_string(Definiteness::Kind k);

/// Exact inertia by rational congruence diagonalization.
Definiteness definiteness(const IntersectionLattice& lattice);

/// rank T(b) + rank T(c) + rank H == 22, H the hyperbolic plane.
bool strange_duality_rank_check(const std::array<int, 3>& b, const std::array<int, 3>& c);

} // namespace twistlab
