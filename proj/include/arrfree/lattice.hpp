#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <vector>

#include "arrfree/arrangement.hpp"

namespace arrfree {

/// A rank-2 flat: a line through the origin lying in >= 2 hyperplanes.
struct Flat2 {
    Covector direction;          // canonical
    std::vector<int> incident;   // sorted hyperplane indices
};

struct IntersectionLattice {
    int n = 0;
    std::vector<Flat2> flats;
    std::vector<std::vector<int>> per_hyperplane;  // flats containing each H
};

/// chi(t) = c[3] t^3 + c[2] t^2 + c[1] t + c[0], monic with chi(1) = 0.
struct CharPoly {
    std::array<mpz_class, 4> c;
};

IntersectionLattice build_lattice(const Arrangement& a);

CharPoly char_poly(const IntersectionLattice& L);

/// Divides out (t-1) and factors the quadratic over the nonnegative integers.
/// Returns {1, d1, d2} sorted ascending, or nullopt if it does not split.
std::optional<std::array<long, 3>> factor_exponents(const CharPoly& c);

struct InvariantMultisets {
    std::vector<int> restriction_sizes;  // {{|A^H|}}, sorted
    std::vector<int> point_sizes;        // {{|A_p|}}, sorted
};

InvariantMultisets invariants(const Arrangement& a);

/// Bijection sigma on hyperplane indices with S a flat of L1 iff sigma(S) a
/// flat of L2; lexicographically least valid sigma, or nullopt.
std::optional<std::vector<int>> lattice_isomorphic(const IntersectionLattice& L1,
                                                   const IntersectionLattice& L2);

/// Independent post-hoc check that sigma maps the flat family of L1 onto L2.
bool verify_lattice_bijection(const IntersectionLattice& L1, const IntersectionLattice& L2,
                              const std::vector<int>& sigma);

}  // namespace arrfree
