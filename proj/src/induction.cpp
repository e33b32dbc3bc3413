#include "arrfree/induction.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace arrfree {

namespace {

std::string subset_key(const std::vector<int>& subset) {
    std::string s;
    s.reserve(subset.size() * 2);
    for (int i : subset) {
        s.push_back(static_cast<char>(i & 0xff));
        s.push_back(static_cast<char>((i >> 8) & 0xff));
    }
    return s;
}

struct Searcher {
    const Arrangement& full;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::unordered_map<std::string, char> memo;  // 'y' / 'n'
    std::unordered_map<std::string, std::vector<IFStep>> certs;
    std::unordered_map<std::string, std::optional<std::array<long, 3>>> expcache;

    Arrangement sub(const std::vector<int>& subset) const {
        std::vector<Hyperplane> planes;
        planes.reserve(subset.size());
        for (int i : subset) planes.push_back(full[i]);
        return Arrangement(full.field(), std::move(planes));
    }

    const std::optional<std::array<long, 3>>& exp_of(const std::vector<int>& subset,
                                                     const std::string& key) {
        auto it = expcache.find(key);
        if (it == expcache.end()) it = expcache.emplace(key, exponents3(sub(subset))).first;
        return it->second;
    }

    // Tri-state: 'y', 'n', 'u'
    char dfs(const std::vector<int>& subset) {
        if (nodes >= budget) {
            budget_hit = true;
            return 'u';
        }
        ++nodes;
        std::string key = subset_key(subset);
        auto mit = memo.find(key);
        if (mit != memo.end()) return mit->second;

        Arrangement a = sub(subset);
        if (a.rank() <= 2) {
            memo[key] = 'y';
            certs[key] = {};
            return 'y';
        }
        const auto& exp = exp_of(subset, key);
        if (!exp) {
            memo[key] = 'n';
            return 'n';
        }
        std::vector<int> rs = restriction_sizes(a);
        long e = (*exp)[1], f = (*exp)[2];
        bool lemma_applies = true;
        for (int k : rs)
            if (k == e + 1 || k == f + 1) {
                lemma_applies = false;
                break;
            }
        if (lemma_applies) {
            memo[key] = 'n';
            return 'n';
        }

        // Try deletions with larger restrictions first.
        std::vector<int> order(subset.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return rs[x] > rs[y]; });
        bool unknown_seen = false;
        for (int local : order) {
            long k = rs[local];
            std::vector<int> child = subset;
            child.erase(child.begin() + local);
            std::string ckey = subset_key(child);
            const auto& cexp = exp_of(child, ckey);
            if (!cexp || !restriction_contained(k, *cexp)) continue;
            char r = dfs(child);
            if (r == 'y') {
                std::vector<IFStep> steps;
                steps.push_back(IFStep{full[subset[local]], *cexp, {1, k - 1}});
                const auto& tail = certs[ckey];
                steps.insert(steps.end(), tail.begin(), tail.end());
                memo[key] = 'y';
                certs[key] = std::move(steps);
                return 'y';
            }
            if (r == 'u') unknown_seen = true;
        }
        if (unknown_seen) return 'u';
        memo[key] = 'n';
        return 'n';
    }
};

}  // namespace

std::optional<Lemma31Proof> refute_if_lemma(const Arrangement& a) {
    FreenessReport rep = is_free_rank3(a);
    if (!rep.free) throw NotFree();
    long e = (*rep.exponents)[1], f = (*rep.exponents)[2];
    InvariantMultisets inv = invariants(a);
    for (int k : inv.restriction_sizes)
        if (k == e + 1 || k == f + 1) return std::nullopt;
    return Lemma31Proof{e, f, inv.restriction_sizes};
}

bool verify_if_certificate(const Arrangement& a, const IFCertificate& c, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    Arrangement current = a;
    for (std::size_t s = 0; s < c.steps.size(); ++s) {
        if (current.rank() <= 2) break;  // base reached early; trailing steps ignored
        const IFStep& step = c.steps[s];
        int idx = current.index_of(step.deleted.normal);
        if (idx < 0) return fail("step " + std::to_string(s) + ": hyperplane not in arrangement");
        long k = restrict_count(current, idx);
        Arrangement child = delete_hyperplane(current, idx);
        auto cexp = exponents3(child);
        if (!cexp) return fail("step " + std::to_string(s) + ": deletion is not free");
        if (!restriction_contained(k, *cexp))
            return fail("step " + std::to_string(s) + ": exponent containment fails");
        if (step.exp_deleted != *cexp || step.exp_restriction != std::array<long, 2>{1, k - 1})
            return fail("step " + std::to_string(s) + ": recorded exponents disagree");
        current = std::move(child);
    }
    if (current.rank() > 2) return fail("chain does not reach rank <= 2");
    return true;
}

IFVerdict find_if_certificate(const Arrangement& a, std::uint64_t budget) {
    if (a.rank() <= 2) {
        // Rank <= 2 arrangements are inductively free by definition.
        IFVerdict v;
        v.status = IFStatus::Yes;
        v.certificate = IFCertificate{};
        v.nodes_expanded = 1;
        return v;
    }
    Searcher s{a, budget};
    std::vector<int> all(static_cast<std::size_t>(a.size()));
    std::iota(all.begin(), all.end(), 0);
    char r = s.dfs(all);
    IFVerdict v;
    v.nodes_expanded = s.nodes;
    if (r == 'y') {
        v.status = IFStatus::Yes;
        v.certificate = IFCertificate{s.certs[subset_key(all)]};
        return v;
    }
    if (r == 'u') {
        v.status = IFStatus::Unknown;
        return v;
    }
    v.status = IFStatus::No;
    // Classify the refutation for the report.
    FreenessReport rep = is_free_rank3(a);
    if (!rep.free) {
        v.no_reason = IFNoReason::NotFreeRoot;
        return v;
    }
    auto lemma = refute_if_lemma(a);
    if (lemma) {
        v.no_reason = IFNoReason::Lemma31;
        v.lemma = lemma;
    } else {
        v.no_reason = IFNoReason::Exhausted;
    }
    return v;
}

}  // namespace arrfree
