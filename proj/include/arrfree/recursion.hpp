#pragma once

#include "arrfree/induction.hpp"

namespace arrfree {

/// A hyperplane not in A containing at least two rank-2 flats of L(A), with
/// one witnessing flat pair.
struct Candidate {
    Hyperplane h;
    std::array<int, 2> witness_flats;
};

struct CandidateSet {
    std::vector<Candidate> candidates;
};

/// Enumerates the spans of all flat pairs, deduplicated, excluding members
/// of A. Complete: a hyperplane through two distinct flats is their span.
CandidateSet candidate_hyperplanes(const Arrangement& a);

/// Every hyperplane of P^2(F_p) as a canonical covector (p^2 + p + 1 points).
std::vector<Covector> all_projective_covectors(const FieldPtr& f);

struct DeletionCheck {
    int index = 0;
    bool free = false;
    std::optional<std::array<long, 3>> exp;
    long restriction_size = 0;  // |A^H|
    bool containment = false;   // {1,|A^H|-1} subset exp(A \ H)
    bool admissible = false;
};

struct AdditionCheck {
    Hyperplane h;
    bool free = false;
    std::optional<std::array<long, 3>> exp;  // exp(A u H)
    long restriction_size = 0;               // |(A u H)^H|
    bool containment = false;
    bool admissible = false;
    std::string decided_by;  // "chi" or "ziegler"
};

struct LowIncidenceBound {
    long zero_point_size = 0;            // |A~^H| when H meets no flat
    long one_point_min_size = 0;         // lower bound when H meets one flat
    std::vector<long> admissible_sizes;  // restricted sizes an Add-Del step allows
    bool certified = false;
    bool by_enumeration = false;  // small finite field: additions were exhaustive
};

struct StepReport {
    std::vector<DeletionCheck> deletions;
    std::vector<AdditionCheck> additions;
    bool exhaustive_additions = false;  // true when additions cover all of P^2(F_p)
};

struct ObstructionReport {
    std::array<long, 3> exponents;
    StepReport steps;
    LowIncidenceBound bound;
};

/// Restricted sizes |A~^H| an admissible Add-Del step could produce, derived
/// from exp A = {1,e,f} (exp A~ = exp A with one entry incremented).
std::vector<long> admissible_restriction_sizes(const std::array<long, 3>& exp);

/// Counting bound covering hyperplanes through at most one flat. Throws
/// NotFree when a is not free.
LowIncidenceBound low_incidence_bound(const Arrangement& a);

/// All Addition-Deletion steps at a: every deletion, every candidate addition
/// (all of P^2(F_p) when p <= 31). Throws NotFree / RankDeficient.
StepReport local_steps(const Arrangement& a, int threads = 1);

/// The local obstruction: no admissible step exists and non-candidates are
/// excluded (by the counting bound or exhaustive enumeration). Absence is NOT
/// a proof of recursive freeness.
std::optional<ObstructionReport> refute_recursive_freeness(const Arrangement& a,
                                                           int threads = 1);

/// Independent replay of an obstruction report; true iff identical outcomes.
bool replay_obstruction(const Arrangement& a, const ObstructionReport& r, int threads = 1);

struct RFStep {
    bool addition = false;  // +H (rule 2) or -H (rule 3)
    Hyperplane h;
};

struct RFCertificate {
    Arrangement base;  // must be inductively free
    std::vector<RFStep> steps;
};

/// True iff the base is inductively free and every step's rule conditions
/// hold, recomputed from scratch, ending at `target` (projective set
/// equality).
bool verify_rf_certificate(const RFCertificate& c, const Arrangement& target,
                           std::string* why = nullptr, std::uint64_t if_budget = 1'000'000);

struct RFSearchResult {
    std::optional<RFCertificate> certificate;
    bool budget_exhausted = false;
    std::uint64_t nodes_expanded = 0;
};

/// Bounded backward search over admissible steps for an inductively free
/// ancestor; hints are additions tried first.
RFSearchResult search_rf_certificate(const Arrangement& a, int max_additions = 8,
                                     std::uint64_t budget = 10'000,
                                     const std::vector<Covector>& hints = {});

}  // namespace arrfree
