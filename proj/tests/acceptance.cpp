// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria mirror the published figures for the 27-hyperplane
// arrangement over Q(zeta_5) and its F_11 sibling.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>

#include "arrfree/io.hpp"
#include "arrfree/recursion.hpp"
#include "helpers.hpp"

using namespace arrfree;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int num, bool ok, const std::string& what, double secs) {
    std::printf("criterion %d: %s — %s (%.1f s)\n", num, ok ? "PASS" : "FAIL", what.c_str(),
                secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::map<int, int> histogram(const std::vector<int>& v) {
    std::map<int, int> h;
    for (int x : v) ++h[x];
    return h;
}

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    CharPoly chi = char_poly(build_lattice(builtin("A_H3_27")));
    bool ok = chi.c == std::array<mpz_class, 4>{-165, 191, -27, 1} &&
              factor_exponents(chi) == std::array<long, 3>{1, 11, 15};
    double s = seconds_since(t0);
    report(1, ok && s < 5.0, "chi = t^3 - 27t^2 + 191t - 165 with split {1,11,15}", s);
}

void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    InvariantMultisets inv = invariants(builtin("A_H3_27"));
    bool ok = histogram(inv.restriction_sizes) == std::map<int, int>{{10, 15}, {11, 12}} &&
              histogram(inv.point_sizes) == std::map<int, int>{{2, 15}, {3, 70}, {7, 6}};
    report(2, ok, "restriction multiset {{10^15,11^12}}, point multiset {{2^15,3^70,7^6}}",
           seconds_since(t0));
}

void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    Arrangement a = builtin("A_H3_27");
    bool ok = true;
    for (int w = 0; w < a.size() && ok; ++w) {
        ExponentPair e = multi_exponents(ziegler_restrict(a, w));
        FreenessReport r = is_free_rank3(a, w);
        ok = e == ExponentPair{11, 15} && e.d1 * e.d2 == 165 && r.free;
    }
    double s = seconds_since(t0);
    report(3, ok && s < 60.0, "all 27 witnesses give Ziegler pair (11,15), product 165, free",
           s);
}

void criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    IFVerdict v = find_if_certificate(builtin("A_H3_27"));
    bool ok = v.status == IFStatus::No && v.no_reason == IFNoReason::Lemma31 && v.lemma &&
              v.lemma->e == 11 && v.lemma->f == 15 &&
              histogram(v.lemma->restriction_sizes) == std::map<int, int>{{10, 15}, {11, 12}};
    report(4, ok, "not inductively free: required sizes {12,16}, observed only {10,11}",
           seconds_since(t0));
}

void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = candidate_hyperplanes(builtin("A_H3_27")).candidates.size() == 1186;
    report(5, ok, "exactly 1186 candidate hyperplanes", seconds_since(t0));
}

void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    Arrangement a = builtin("A_H3_27");
    auto r = refute_recursive_freeness(a, 8);
    bool ok = r.has_value();
    if (ok) {
        ok = r->steps.deletions.size() == 27 && r->steps.additions.size() == 1186;
        for (const auto& d : r->steps.deletions) ok = ok && !d.admissible;
        for (const auto& add : r->steps.additions)
            ok = ok && !add.admissible && (!add.free || !add.containment);
        ok = ok && r->bound.zero_point_size == 27 && r->bound.one_point_min_size == 21 &&
             r->bound.admissible_sizes == std::vector<long>{12, 13, 16, 17} &&
             r->bound.certified;
    }
    double s = seconds_since(t0);
    report(6, ok && s < 300.0,
           "local obstruction: 27 deletions and 1186 additions refuted, bound 27/21 vs "
           "{12,13,16,17} certified",
           s);
}

void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = is_free_rank3(builtin("B_F11_27")).free;
    for (int i = 1; i <= 7; ++i)
        ok = ok && is_free_rank3(builtin("B_F11_plus_" + std::to_string(i))).free;

    Arrangement b7 = builtin("B_F11_plus_7");
    IFVerdict v = find_if_certificate(b7);
    ok = ok && v.status == IFStatus::Yes && verify_if_certificate(b7, *v.certificate);

    Arrangement b = builtin("B_F11_27");
    std::vector<std::array<long, 3>> chain{{0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0},
                                           {1, 4, 0}, {1, 5, 0}, {1, 7, 0}};
    RFCertificate cert{b7, {}};
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        cert.steps.push_back(RFStep{false, Hyperplane{canonicalize_covector(testutil::cov(
                                               b.field(), (*it)[0], (*it)[1], (*it)[2]))}});
    std::string why;
    ok = ok && verify_rf_certificate(cert, b, &why);
    double s = seconds_since(t0);
    report(7, ok && s < 600.0,
           "B and B_1..B_7 free; B_7 inductively free; deletion chain H_7..H_1 verifies", s);
}

void criterion8() {
    auto t0 = std::chrono::steady_clock::now();
    IntersectionLattice la = build_lattice(builtin("A_H3_27"));
    IntersectionLattice lb = build_lattice(builtin("B_F11_27"));
    auto sigma = lattice_isomorphic(la, lb);
    bool ok = sigma && verify_lattice_bijection(la, lb, *sigma);
    double s = seconds_since(t0);
    report(8, ok && s < 60.0, "lattice bijection A -> B found and verified", s);
}

bool prop_field_axioms() {
    std::mt19937_64 rng(11881);
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::cyclotomic(5),
                          FieldDescriptor::prime(11)}) {
        for (int i = 0; i < 1000; ++i) {
            FieldElement a = testutil::random_element(rng, f);
            FieldElement b = testutil::random_element(rng, f);
            FieldElement c = testutil::random_element(rng, f);
            if ((a + b) + c != a + (b + c)) return false;
            if ((a * b) * c != a * (b * c)) return false;
            if (a * (b + c) != a * b + a * c) return false;
            if (!a.is_zero() && a * a.inv() != FieldElement::one(f)) return false;
        }
    }
    return true;
}

bool prop_pair_counting() {
    std::mt19937_64 rng(11882);
    std::vector<unsigned long> primes{5, 7, 11};
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> nd(3, 12);
        Arrangement a =
            testutil::random_arrangement(rng, primes[static_cast<std::size_t>(trial) % 3],
                                         nd(rng));
        mpz_class pairs = 0;
        for (const auto& fl : build_lattice(a).flats) {
            long k = static_cast<long>(fl.incident.size());
            pairs += mpz_class(k) * (k - 1) / 2;
        }
        if (pairs != mpz_class(a.size()) * (a.size() - 1) / 2) return false;
    }
    return true;
}

bool prop_ziegler_sum() {
    std::mt19937_64 rng(11883);
    for (int trial = 0; trial < 10; ++trial) {
        Arrangement a = testutil::random_arrangement(rng, 7, 7);
        for (int h = 0; h < a.size(); ++h) {
            MultiArrangement2D m = ziegler_restrict(a, h);
            if (m.total_multiplicity() != a.size() - 1) return false;
            ExponentPair e = multi_exponents(m);
            if (e.d1 + e.d2 != m.total_multiplicity()) return false;
        }
    }
    return true;
}

bool prop_add_del() {
    std::mt19937_64 rng(11884);
    int checks = 0;
    while (checks < 100) {
        std::uniform_int_distribution<int> nd(4, 8);
        Arrangement a = testutil::random_arrangement(rng, 7, nd(rng));
        auto exp = exponents3(a);
        if (!exp) continue;
        for (int h = 0; h < a.size() && checks < 100; ++h) {
            long k = restrict_count(a, h);
            if (!restriction_contained(k, *exp)) continue;
            Arrangement del = delete_hyperplane(a, h);
            if (del.rank() < 3) continue;
            std::vector<long> pool(exp->begin(), exp->end());
            pool.erase(std::find(pool.begin(), pool.end(), 1));
            pool.erase(std::find(pool.begin(), pool.end(), k - 1));
            std::array<long, 3> want{1, k - 1, pool[0] - 1};
            std::sort(want.begin(), want.end());
            if (exponents3(del) != want) return false;
            ++checks;
        }
    }
    return true;
}

bool prop_candidate_completeness() {
    std::mt19937_64 rng(11885);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> nd(3, 8);
        Arrangement a = testutil::random_arrangement(rng, 5, nd(rng));
        IntersectionLattice L = build_lattice(a);
        std::set<std::string> found;
        for (const auto& c : candidate_hyperplanes(a).candidates) found.insert(c.h.key());
        for (const Covector& v : all_projective_covectors(a.field())) {
            if (a.index_of(v) >= 0) continue;
            int incident = 0;
            for (const auto& fl : L.flats)
                if (dot(v, fl.direction).is_zero()) ++incident;
            if ((incident >= 2) != (found.count(covector_key(v)) == 1)) return false;
        }
    }
    return true;
}

void criterion9() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = prop_field_axioms() && prop_pair_counting() && prop_ziegler_sum() &&
              prop_add_del() && prop_candidate_completeness();
    report(9, ok,
           "property suites: field axioms, pair counting, Ziegler sums, Addition-Deletion, "
           "candidate completeness",
           seconds_since(t0));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("criterion 10: SKIP — needs a user-supplied 45-hyperplane reflection "
                "arrangement file; see README for the reproduction recipe\n");
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
