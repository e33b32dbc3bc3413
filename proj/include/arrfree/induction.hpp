#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "arrfree/freeness.hpp"

namespace arrfree {

/// One deletion step of an inductive-freeness chain, with the exponent data
/// the verifier re-derives.
struct IFStep {
    Hyperplane deleted;
    std::array<long, 3> exp_deleted;      // exp A' (zero-padded for rank < 3)
    std::array<long, 2> exp_restriction;  // {1, |A^H| - 1}
};

/// Deletion chain from the full arrangement down to rank <= 2.
struct IFCertificate {
    std::vector<IFStep> steps;
};

struct Lemma31Proof {
    long e = 0, f = 0;
    std::vector<int> restriction_sizes;  // the offending multiset {{|A^H|}}
};

enum class IFStatus { Yes, No, Unknown };
enum class IFNoReason { Lemma31, Exhausted, NotFreeRoot };

struct IFVerdict {
    IFStatus status = IFStatus::Unknown;
    std::optional<IFCertificate> certificate;  // YES
    std::optional<IFNoReason> no_reason;       // NO
    std::optional<Lemma31Proof> lemma;         // NO via Lemma31
    std::uint64_t nodes_expanded = 0;
};

/// Fast non-inductive-freeness refutation: a free rank-3 arrangement with
/// exponents {1,e,f} where no restriction has size e+1 or f+1 cannot be
/// inductively free. Throws NotFree if the arrangement is not free.
std::optional<Lemma31Proof> refute_if_lemma(const Arrangement& a);

/// Replays the chain with all exponents recomputed independently; reasons for
/// rejection land in *why if provided.
bool verify_if_certificate(const Arrangement& a, const IFCertificate& c,
                           std::string* why = nullptr);

/// Memoized depth-first search over deletion orders, pruned by freeness,
/// exponent containment, and refute_if_lemma.
IFVerdict find_if_certificate(const Arrangement& a, std::uint64_t budget = 1'000'000);

}  // namespace arrfree
