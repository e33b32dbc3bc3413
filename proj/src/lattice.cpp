#include "arrfree/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace arrfree {

IntersectionLattice build_lattice(const Arrangement& a) {
    if (a.rank() < 3) throw RankDeficient();
    std::unordered_map<std::string, std::size_t> index;
    std::vector<Flat2> flats;
    std::vector<std::set<int>> members;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) {
            Covector d = canonicalize_covector(cross(a[i].normal, a[j].normal));
            std::string key = covector_key(d);
            auto it = index.find(key);
            std::size_t fi;
            if (it == index.end()) {
                fi = flats.size();
                index.emplace(std::move(key), fi);
                flats.push_back(Flat2{d, {}});
                members.emplace_back();
            } else {
                fi = it->second;
            }
            members[fi].insert(i);
            members[fi].insert(j);
        }
    for (std::size_t fi = 0; fi < flats.size(); ++fi)
        flats[fi].incident.assign(members[fi].begin(), members[fi].end());
    // Deterministic flat order regardless of hashing: by incident index list.
    std::sort(flats.begin(), flats.end(),
              [](const Flat2& x, const Flat2& y) { return x.incident < y.incident; });

    IntersectionLattice L;
    L.n = a.size();
    L.flats = std::move(flats);
    L.per_hyperplane.assign(static_cast<std::size_t>(L.n), {});
    for (std::size_t fi = 0; fi < L.flats.size(); ++fi)
        for (int h : L.flats[fi].incident)
            L.per_hyperplane[static_cast<std::size_t>(h)].push_back(static_cast<int>(fi));
    return L;
}

CharPoly char_poly(const IntersectionLattice& L) {
    // Moebius values on a central essential rank-3 lattice:
    // mu(V)=1, mu(H)=-1, mu(flat)=|incident|-1, mu(origin) forced by chi(1)=0.
    mpz_class b2 = 0;
    for (const auto& f : L.flats) b2 += static_cast<long>(f.incident.size()) - 1;
    CharPoly c;
    c.c[3] = 1;
    c.c[2] = -L.n;
    c.c[1] = b2;
    c.c[0] = -(1 - L.n + b2);
    return c;
}

std::optional<std::array<long, 3>> factor_exponents(const CharPoly& c) {
    // chi(t) = (t-1)(t^2 + q1 t + q0) exactly.
    mpz_class q2 = c.c[3];
    mpz_class q1 = c.c[2] + q2;
    mpz_class q0 = c.c[1] + q1;
    if (c.c[0] + q0 != 0) throw NotDivisibleByTMinus1();
    // Integer roots of t^2 + q1 t + q0 via exact discriminant test.
    mpz_class disc = q1 * q1 - 4 * q0;
    if (disc < 0) return std::nullopt;
    mpz_class s = sqrt(disc);
    if (s * s != disc) return std::nullopt;
    mpz_class two_d1 = -q1 - s, two_d2 = -q1 + s;
    if (two_d1 % 2 != 0 || two_d2 % 2 != 0) return std::nullopt;
    mpz_class d1 = two_d1 / 2, d2 = two_d2 / 2;
    if (d1 < 0 || d2 < 0) return std::nullopt;
    std::array<long, 3> e{1, d1.get_si(), d2.get_si()};
    std::sort(e.begin(), e.end());
    return e;
}

InvariantMultisets invariants(const Arrangement& a) {
    IntersectionLattice L = build_lattice(a);
    InvariantMultisets inv;
    for (const auto& per : L.per_hyperplane)
        inv.restriction_sizes.push_back(static_cast<int>(per.size()));
    std::sort(inv.restriction_sizes.begin(), inv.restriction_sizes.end());
    for (const auto& f : L.flats) inv.point_sizes.push_back(static_cast<int>(f.incident.size()));
    std::sort(inv.point_sizes.begin(), inv.point_sizes.end());
    return inv;
}

bool verify_lattice_bijection(const IntersectionLattice& L1, const IntersectionLattice& L2,
                              const std::vector<int>& sigma) {
    if (L1.n != L2.n || static_cast<int>(sigma.size()) != L1.n) return false;
    std::vector<bool> hit(sigma.size(), false);
    for (int v : sigma) {
        if (v < 0 || v >= L1.n || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    auto family = [](const IntersectionLattice& L) {
        std::set<std::vector<int>> fam;
        for (const auto& f : L.flats) fam.insert(f.incident);
        return fam;
    };
    std::set<std::vector<int>> f2 = family(L2), mapped;
    for (const auto& f : L1.flats) {
        std::vector<int> img;
        for (int h : f.incident) img.push_back(sigma[static_cast<std::size_t>(h)]);
        std::sort(img.begin(), img.end());
        mapped.insert(std::move(img));
    }
    return mapped == f2;
}

namespace {

// Joint color refinement on the bipartite hyperplane/flat incidence graphs of
// both lattices; colors drawn from a shared dictionary so they are comparable.
struct Refinement {
    std::vector<int> hcolor1, fcolor1, hcolor2, fcolor2;
    bool compatible = true;
};

Refinement refine(const IntersectionLattice& L1, const IntersectionLattice& L2) {
    Refinement R;
    R.hcolor1.assign(static_cast<std::size_t>(L1.n), 0);
    R.hcolor2.assign(static_cast<std::size_t>(L2.n), 0);
    auto init_f = [](const IntersectionLattice& L, std::vector<int>& fc) {
        fc.resize(L.flats.size());
        for (std::size_t i = 0; i < L.flats.size(); ++i)
            fc[i] = static_cast<int>(L.flats[i].incident.size());
    };
    init_f(L1, R.fcolor1);
    init_f(L2, R.fcolor2);

    for (int round = 0; round < L1.n + static_cast<int>(L1.flats.size()); ++round) {
        std::map<std::pair<int, std::vector<int>>, int> dict;
        auto recolor_h = [&](const IntersectionLattice& L, const std::vector<int>& fc,
                             const std::vector<int>& hc) {
            std::vector<int> out(hc.size());
            for (std::size_t i = 0; i < hc.size(); ++i) {
                std::vector<int> sig;
                for (int f : L.per_hyperplane[i]) sig.push_back(fc[static_cast<std::size_t>(f)]);
                std::sort(sig.begin(), sig.end());
                auto key = std::make_pair(hc[i], std::move(sig));
                auto [it, ins] = dict.emplace(std::move(key), static_cast<int>(dict.size()));
                out[i] = it->second;
            }
            return out;
        };
        auto h1 = recolor_h(L1, R.fcolor1, R.hcolor1);
        auto h2 = recolor_h(L2, R.fcolor2, R.hcolor2);
        dict.clear();
        auto recolor_f = [&](const IntersectionLattice& L, const std::vector<int>& hc,
                             const std::vector<int>& fc) {
            std::vector<int> out(fc.size());
            for (std::size_t i = 0; i < fc.size(); ++i) {
                std::vector<int> sig;
                for (int h : L.flats[i].incident) sig.push_back(hc[static_cast<std::size_t>(h)]);
                std::sort(sig.begin(), sig.end());
                auto key = std::make_pair(fc[i], std::move(sig));
                auto [it, ins] = dict.emplace(std::move(key), static_cast<int>(dict.size()));
                out[i] = it->second;
            }
            return out;
        };
        auto f1 = recolor_f(L1, h1, R.fcolor1);
        auto f2 = recolor_f(L2, h2, R.fcolor2);
        bool stable = true;
        auto classes = [](const std::vector<int>& c) {
            return std::set<int>(c.begin(), c.end()).size();
        };
        if (classes(h1) != classes(R.hcolor1) || classes(f1) != classes(R.fcolor1)) stable = false;
        R.hcolor1 = std::move(h1);
        R.hcolor2 = std::move(h2);
        R.fcolor1 = std::move(f1);
        R.fcolor2 = std::move(f2);
        if (stable) break;
    }
    // Histograms must agree or no isomorphism exists.
    auto hist = [](const std::vector<int>& c) {
        std::map<int, int> h;
        for (int v : c) ++h[v];
        return h;
    };
    R.compatible = hist(R.hcolor1) == hist(R.hcolor2) && hist(R.fcolor1) == hist(R.fcolor2);
    return R;
}

struct IsoSearch {
    const IntersectionLattice& L1;
    const IntersectionLattice& L2;
    const Refinement& R;
    std::vector<std::vector<int>> pairflat1, pairflat2;  // flat containing {i,j}
    std::vector<int> sigma;        // partial map, -1 unassigned
    std::vector<bool> used;        // L2 hyperplanes
    std::vector<int> flatmap;      // L1 flat -> L2 flat, -1
    std::vector<bool> flatused;    // L2 flats
    std::vector<int> result;
    bool found = false;

    IsoSearch(const IntersectionLattice& l1, const IntersectionLattice& l2, const Refinement& r)
        : L1(l1), L2(l2), R(r) {
        auto build_pairs = [](const IntersectionLattice& L) {
            std::vector<std::vector<int>> pf(static_cast<std::size_t>(L.n),
                                             std::vector<int>(static_cast<std::size_t>(L.n), -1));
            for (std::size_t fi = 0; fi < L.flats.size(); ++fi)
                for (std::size_t x = 0; x < L.flats[fi].incident.size(); ++x)
                    for (std::size_t y = x + 1; y < L.flats[fi].incident.size(); ++y) {
                        int i = L.flats[fi].incident[x], j = L.flats[fi].incident[y];
                        pf[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                            pf[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                                static_cast<int>(fi);
                    }
            return pf;
        };
        pairflat1 = build_pairs(L1);
        pairflat2 = build_pairs(L2);
        sigma.assign(static_cast<std::size_t>(L1.n), -1);
        used.assign(static_cast<std::size_t>(L2.n), false);
        flatmap.assign(L1.flats.size(), -1);
        flatused.assign(L2.flats.size(), false);
    }

    bool dfs(int i) {
        if (i == L1.n) {
            if (verify_lattice_bijection(L1, L2, sigma)) {
                result = sigma;
                return true;
            }
            return false;
        }
        for (int j = 0; j < L2.n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            if (R.hcolor1[static_cast<std::size_t>(i)] != R.hcolor2[static_cast<std::size_t>(j)])
                continue;
            std::vector<int> added;  // L1 flats mapped at this level
            bool ok = true;
            for (int i2 = 0; i2 < i && ok; ++i2) {
                int f1 = pairflat1[static_cast<std::size_t>(i)][static_cast<std::size_t>(i2)];
                int f2 = pairflat2[static_cast<std::size_t>(j)]
                                  [static_cast<std::size_t>(sigma[static_cast<std::size_t>(i2)])];
                if ((f1 < 0) != (f2 < 0)) {
                    ok = false;
                    break;
                }
                if (f1 < 0) continue;
                int cur = flatmap[static_cast<std::size_t>(f1)];
                if (cur == f2) continue;
                if (cur != -1 || flatused[static_cast<std::size_t>(f2)] ||
                    L1.flats[static_cast<std::size_t>(f1)].incident.size() !=
                        L2.flats[static_cast<std::size_t>(f2)].incident.size() ||
                    R.fcolor1[static_cast<std::size_t>(f1)] !=
                        R.fcolor2[static_cast<std::size_t>(f2)]) {
                    ok = false;
                    break;
                }
                flatmap[static_cast<std::size_t>(f1)] = f2;
                flatused[static_cast<std::size_t>(f2)] = true;
                added.push_back(f1);
            }
            if (ok) {
                sigma[static_cast<std::size_t>(i)] = j;
                used[static_cast<std::size_t>(j)] = true;
                if (dfs(i + 1)) return true;
                sigma[static_cast<std::size_t>(i)] = -1;
                used[static_cast<std::size_t>(j)] = false;
            }
            for (int f1 : added) {
                flatused[static_cast<std::size_t>(flatmap[static_cast<std::size_t>(f1)])] = false;
                flatmap[static_cast<std::size_t>(f1)] = -1;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> lattice_isomorphic(const IntersectionLattice& L1,
                                                   const IntersectionLattice& L2) {
    if (L1.n != L2.n || L1.flats.size() != L2.flats.size()) return std::nullopt;
    Refinement R = refine(L1, L2);
    if (!R.compatible) return std::nullopt;
    IsoSearch search(L1, L2, R);
    if (!search.dfs(0)) return std::nullopt;
    return search.result;
}

}  // namespace arrfree
