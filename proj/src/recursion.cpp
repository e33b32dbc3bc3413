#include "arrfree/recursion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "arrfree/parallel.hpp"

namespace arrfree {

namespace {

constexpr unsigned long kEnumerationThreshold = 31;  // brute-force P^2(F_p) below this

// Restriction size that tolerates rank-2 intermediates (restrict_count
// insists on rank 3).
long restriction_size_any(const Arrangement& a, int index) {
    std::unordered_set<std::string> dirs;
    for (int j = 0; j < a.size(); ++j) {
        if (j == index) continue;
        dirs.insert(covector_key(canonicalize_covector(cross(a[index].normal, a[j].normal))));
    }
    return static_cast<long>(dirs.size());
}

std::string arrangement_key(const Arrangement& a) {
    std::vector<std::string> keys;
    keys.reserve(static_cast<std::size_t>(a.size()));
    for (const auto& h : a.hyperplanes()) keys.push_back(h.key());
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (auto& k : keys) {
        out += k;
        out += ';';
    }
    return out;
}

}  // namespace

CandidateSet candidate_hyperplanes(const Arrangement& a) {
    IntersectionLattice L = build_lattice(a);
    std::unordered_set<std::string> existing;
    for (const auto& h : a.hyperplanes()) existing.insert(h.key());
    std::unordered_set<std::string> seen;
    CandidateSet out;
    const int nf = static_cast<int>(L.flats.size());
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            Covector n = canonicalize_covector(
                cross(L.flats[static_cast<std::size_t>(i)].direction,
                      L.flats[static_cast<std::size_t>(j)].direction));
            std::string key = covector_key(n);
            if (existing.count(key) || !seen.insert(key).second) continue;
            out.candidates.push_back(Candidate{Hyperplane{n}, {i, j}});
        }
    return out;
}

std::vector<Covector> all_projective_covectors(const FieldPtr& f) {
    if (f->kind() != FieldKind::Prime) throw Error("projective enumeration needs a prime field");
    long p = static_cast<long>(f->p());
    std::vector<Covector> out;
    FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
    for (long b = 0; b < p; ++b)
        for (long c = 0; c < p; ++c)
            out.push_back(Covector{one, FieldElement::from_int(f, b), FieldElement::from_int(f, c)});
    for (long c = 0; c < p; ++c)
        out.push_back(Covector{zero, one, FieldElement::from_int(f, c)});
    out.push_back(Covector{zero, zero, one});
    return out;
}

std::vector<long> admissible_restriction_sizes(const std::array<long, 3>& exp) {
    std::set<long> sizes;
    for (int inc = 0; inc < 3; ++inc) {
        std::array<long, 3> option = exp;
        ++option[static_cast<std::size_t>(inc)];
        for (long x : option)
            if (restriction_contained(x + 1, option)) sizes.insert(x + 1);
    }
    return {sizes.begin(), sizes.end()};
}

LowIncidenceBound low_incidence_bound(const Arrangement& a) {
    FreenessReport rep = is_free_rank3(a);
    if (!rep.free) throw NotFree();
    InvariantMultisets inv = invariants(a);
    LowIncidenceBound b;
    b.zero_point_size = a.size();
    long max_loc = *std::max_element(inv.point_sizes.begin(), inv.point_sizes.end());
    b.one_point_min_size = 1 + (a.size() - max_loc);
    b.admissible_sizes = admissible_restriction_sizes(*rep.exponents);
    long max_adm =
        b.admissible_sizes.empty() ? -1 : b.admissible_sizes.back();
    b.certified = std::min(b.zero_point_size, b.one_point_min_size) > max_adm;
    return b;
}

namespace {

DeletionCheck check_deletion(const Arrangement& a, int index) {
    DeletionCheck c;
    c.index = index;
    c.restriction_size = restriction_size_any(a, index);
    Arrangement del = delete_hyperplane(a, index);
    c.exp = exponents3(del);
    c.free = c.exp.has_value();
    c.containment = c.free && restriction_contained(c.restriction_size, *c.exp);
    c.admissible = c.free && c.containment;
    return c;
}

AdditionCheck check_addition(const Arrangement& a, const Hyperplane& h) {
    AdditionCheck c;
    c.h = Hyperplane{canonicalize_covector(h.normal)};
    Arrangement ext = add_hyperplane(a, c.h);
    int idx = ext.size() - 1;
    c.restriction_size = restriction_size_any(ext, idx);
    auto chi = factor_exponents(char_poly(build_lattice(ext)));
    if (!chi) {
        c.free = false;
        c.decided_by = "chi";
    } else {
        FreenessReport rep = is_free_rank3(ext);
        c.free = rep.free;
        c.decided_by = "ziegler";
        if (rep.free) c.exp = rep.exponents;
    }
    c.containment = c.free && restriction_contained(c.restriction_size, *c.exp);
    c.admissible = c.free && c.containment;
    return c;
}

}  // namespace

StepReport local_steps(const Arrangement& a, int threads) {
    FreenessReport rep = is_free_rank3(a);
    if (!rep.free) throw NotFree();
    StepReport report;

    report.deletions.resize(static_cast<std::size_t>(a.size()));
    parallel_for(static_cast<std::size_t>(a.size()), threads,
                 [&](std::size_t i) { report.deletions[i] = check_deletion(a, static_cast<int>(i)); });

    std::vector<Hyperplane> adds;
    if (a.field()->kind() == FieldKind::Prime && a.field()->p() <= kEnumerationThreshold) {
        // The counting bound cannot exclude low-incidence hyperplanes over a
        // small finite field, so check every point of P^2(F_p).
        for (const auto& v : all_projective_covectors(a.field()))
            if (a.index_of(v) < 0) adds.push_back(Hyperplane{v});
        report.exhaustive_additions = true;
    } else {
        for (const auto& cand : candidate_hyperplanes(a).candidates) adds.push_back(cand.h);
    }
    report.additions.resize(adds.size());
    parallel_for(adds.size(), threads,
                 [&](std::size_t i) { report.additions[i] = check_addition(a, adds[i]); });
    return report;
}

std::optional<ObstructionReport> refute_recursive_freeness(const Arrangement& a, int threads) {
    FreenessReport rep = is_free_rank3(a);
    if (!rep.free) throw NotFree();
    StepReport steps = local_steps(a, threads);
    for (const auto& d : steps.deletions)
        if (d.admissible) return std::nullopt;
    for (const auto& add : steps.additions)
        if (add.admissible) return std::nullopt;
    LowIncidenceBound bound;
    if (steps.exhaustive_additions) {
        bound = low_incidence_bound(a);
        bound.certified = true;
        bound.by_enumeration = true;
    } else {
        bound = low_incidence_bound(a);
        if (!bound.certified) return std::nullopt;  // non-candidates not excluded
    }
    return ObstructionReport{*rep.exponents, std::move(steps), std::move(bound)};
}

bool replay_obstruction(const Arrangement& a, const ObstructionReport& r, int threads) {
    auto fresh = refute_recursive_freeness(a, threads);
    if (!fresh) return false;
    if (fresh->exponents != r.exponents) return false;
    if (fresh->steps.deletions.size() != r.steps.deletions.size() ||
        fresh->steps.additions.size() != r.steps.additions.size())
        return false;
    for (std::size_t i = 0; i < r.steps.deletions.size(); ++i) {
        const auto& x = fresh->steps.deletions[i];
        const auto& y = r.steps.deletions[i];
        if (x.free != y.free || x.containment != y.containment ||
            x.restriction_size != y.restriction_size || x.admissible != y.admissible)
            return false;
    }
    for (std::size_t i = 0; i < r.steps.additions.size(); ++i) {
        const auto& x = fresh->steps.additions[i];
        const auto& y = r.steps.additions[i];
        if (!(x.h == y.h) || x.free != y.free || x.containment != y.containment ||
            x.restriction_size != y.restriction_size || x.admissible != y.admissible)
            return false;
    }
    return fresh->bound.certified == r.bound.certified &&
           fresh->bound.admissible_sizes == r.bound.admissible_sizes;
}

bool verify_rf_certificate(const RFCertificate& c, const Arrangement& target, std::string* why,
                           std::uint64_t if_budget) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!same_field(c.base.field(), target.field()))
        return fail("base and target live over different fields");
    IFVerdict base = find_if_certificate(c.base, if_budget);
    if (base.status == IFStatus::Unknown) return fail("base inductive freeness undecided (budget)");
    if (base.status == IFStatus::No) return fail("base is not inductively free");

    Arrangement current = c.base;
    for (std::size_t s = 0; s < c.steps.size(); ++s) {
        const RFStep& step = c.steps[s];
        std::string tag = "step " + std::to_string(s);
        auto exp = exponents3(current);
        if (!exp) return fail(tag + ": arrangement is not free");
        if (step.addition) {
            if (current.index_of(step.h.normal) >= 0)
                return fail(tag + ": added hyperplane already present");
            Arrangement next = add_hyperplane(current, step.h);
            long k = restriction_size_any(next, next.size() - 1);
            // Rule (2): exp (A u H)^H subset exp A.
            if (!restriction_contained(k, *exp))
                return fail(tag + ": addition exponent containment fails");
            current = std::move(next);
        } else {
            int idx = current.index_of(step.h.normal);
            if (idx < 0) return fail(tag + ": deleted hyperplane not present");
            long k = restriction_size_any(current, idx);
            // Rule (3): exp A^H subset exp A.
            if (!restriction_contained(k, *exp))
                return fail(tag + ": deletion exponent containment fails");
            current = delete_hyperplane(current, idx);
        }
    }
    if (current.size() != target.size()) return fail("chain does not end at the target");
    for (const auto& h : target.hyperplanes())
        if (current.index_of(h.normal) < 0) return fail("chain does not end at the target");
    return true;
}

RFSearchResult search_rf_certificate(const Arrangement& a, int max_additions,
                                     std::uint64_t budget, const std::vector<Covector>& hints) {
    {
        FreenessReport rep = is_free_rank3(a);
        if (!rep.free) throw NotFree();
    }
    RFSearchResult result;
    std::unordered_set<std::string> visited;
    constexpr std::uint64_t kGoalBudget = 200'000;

    struct BackStep {
        bool was_addition;  // backward move added a hyperplane
        Hyperplane h;
    };
    std::vector<BackStep> path;

    // Depth-first backward search; returns the inductively free base if found.
    std::function<std::optional<Arrangement>(const Arrangement&, int)> dfs =
        [&](const Arrangement& node, int additions_used) -> std::optional<Arrangement> {
        if (result.nodes_expanded >= budget) {
            result.budget_exhausted = true;
            return std::nullopt;
        }
        ++result.nodes_expanded;
        if (!visited.insert(arrangement_key(node)).second) return std::nullopt;

        // Goal test: inductively free node. Lemma 3.1 screens out hopeless
        // nodes before the expensive search.
        if (node.rank() <= 2) return node;
        auto exp = exponents3(node);
        if (!exp) return std::nullopt;  // not free: no RF chain passes through
        bool lemma_blocks = false;
        if (node.rank() == 3) {
            auto lemma = refute_if_lemma(node);
            lemma_blocks = lemma.has_value();
        }
        if (!lemma_blocks) {
            IFVerdict v = find_if_certificate(node, kGoalBudget);
            if (v.status == IFStatus::Yes) return node;
        }

        // Hinted additions first (forward deletions), then admissible
        // deletions, then remaining candidate additions.
        if (additions_used < max_additions) {
            for (const auto& hint : hints) {
                Covector hn = canonicalize_covector(hint);
                if (node.index_of(hn) >= 0) continue;
                Arrangement ext = add_hyperplane(node, Hyperplane{hn});
                auto eexp = exponents3(ext);
                if (!eexp) continue;
                long k = restriction_size_any(ext, ext.size() - 1);
                if (!restriction_contained(k, *eexp)) continue;
                path.push_back(BackStep{true, Hyperplane{hn}});
                auto base = dfs(ext, additions_used + 1);
                if (base) return base;
                path.pop_back();
            }
        }
        std::vector<int> order(static_cast<std::size_t>(node.size()));
        std::iota(order.begin(), order.end(), 0);
        std::vector<long> rs(order.size());
        for (int i = 0; i < node.size(); ++i)
            rs[static_cast<std::size_t>(i)] = restriction_size_any(node, i);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return rs[static_cast<std::size_t>(x)] > rs[static_cast<std::size_t>(y)];
        });
        for (int i : order) {
            Arrangement del = delete_hyperplane(node, i);
            auto dexp = exponents3(del);
            if (!dexp) continue;
            if (!restriction_contained(rs[static_cast<std::size_t>(i)], *dexp)) continue;
            path.push_back(BackStep{false, node[i]});
            auto base = dfs(del, additions_used);
            if (base) return base;
            path.pop_back();
        }
        if (additions_used < max_additions && node.rank() == 3) {
            for (const auto& cand : candidate_hyperplanes(node).candidates) {
                if (std::find_if(hints.begin(), hints.end(), [&](const Covector& h) {
                        return canonicalize_covector(h) == cand.h.normal;
                    }) != hints.end())
                    continue;
                Arrangement ext = add_hyperplane(node, cand.h);
                auto eexp = exponents3(ext);
                if (!eexp) continue;
                long k = restriction_size_any(ext, ext.size() - 1);
                if (!restriction_contained(k, *eexp)) continue;
                path.push_back(BackStep{true, cand.h});
                auto base = dfs(ext, additions_used + 1);
                if (base) return base;
                path.pop_back();
            }
        }
        return std::nullopt;
    };

    auto base = dfs(a, 0);
    if (!base) return result;
    RFCertificate cert{*base, {}};
    // Backward path target -> base; forward steps run base -> target with
    // flipped signs.
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        cert.steps.push_back(RFStep{!it->was_addition, it->h});
    result.certificate = std::move(cert);
    return result;
}

}  // namespace arrfree
