#pragma once

#include <optional>

#include "arrfree/lattice.hpp"
#include "arrfree/poly3.hpp"

namespace arrfree {

/// Exponents of a rank-2 multiarrangement, d1 <= d2, d1 + d2 = |m|.
struct ExponentPair {
    long d1 = 0;
    long d2 = 0;
    bool operator==(const ExponentPair&) const = default;
};

enum class FreeReason { ChiDoesNotSplit, ProductMismatch, Free };

struct FreenessReport {
    bool free = false;
    std::optional<std::array<long, 3>> exponents;       // {1, d1, d2} when free
    int witness_hyperplane = 0;
    std::optional<std::array<long, 3>> chi_exponents;   // integer split of chi, if any
    ExponentPair ziegler_exponents;
    FreeReason reason = FreeReason::ChiDoesNotSplit;
    /// Set for finite ground fields: the Ziegler/Yoshinaga criterion is applied
    /// uniformly there; saito_verify is the independent confirmation route.
    bool finite_field_criterion = false;
};

/// Dimension of homogeneous derivations of degree d on a rank-2
/// multiarrangement (solutions of the exact divisibility system).
long multi_solution_dim(const MultiArrangement2D& m, long d);

/// d1 = least degree of a nonzero derivation, d2 = |m| - d1.
ExponentPair multi_exponents(const MultiArrangement2D& m);

/// Freeness of a rank-3 arrangement by the Ziegler-restriction criterion:
/// free iff chi = (t-1)(t-d1)(t-d2) with (d1,d2) the multirestriction
/// exponents of the witness hyperplane.
FreenessReport is_free_rank3(const Arrangement& a, int witness = 0);

/// Exponent multiset padded to rank 3 for possibly non-essential arrangements:
/// rank 3 -> {1,e,f} via is_free_rank3 (nullopt when not free); rank 2 ->
/// {0,1,n-1}; rank 1 -> {0,0,1}; empty -> {0,0,0}.
std::optional<std::array<long, 3>> exponents3(const Arrangement& a);

/// Sub-multiset test of the restriction exponents {1, k-1} against the
/// positive entries of a rank-3 exponent multiset (the Addition-Deletion
/// containment condition; zero padding ignored).
bool restriction_contained(long k, const std::array<long, 3>& exp);

/// Saito's criterion for a user-supplied homogeneous basis: every theta maps
/// each alpha_H into (alpha_H), and det of the coefficient matrix is a nonzero
/// scalar multiple of Q(A).
bool saito_verify(const Arrangement& a, const std::array<Derivation3, 3>& basis);

}  // namespace arrfree
