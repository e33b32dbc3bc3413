#include "arrfree/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace arrfree {

bool covector_is_zero(const Covector& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

Covector canonicalize_covector(const Covector& v) {
    for (int i = 0; i < 3; ++i) {
        if (!v[i].is_zero()) {
            if (v[i].is_one()) return v;
            FieldElement s = v[i].inv();
            return {v[0] * s, v[1] * s, v[2] * s};
        }
    }
    throw ZeroNormal();
}

std::string covector_key(const Covector& v) {
    return v[0].str() + "|" + v[1].str() + "|" + v[2].str();
}

int covector_cmp(const Covector& a, const Covector& b) {
    for (int i = 0; i < 3; ++i) {
        int c = FieldElement::cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

Covector cross(const Covector& a, const Covector& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

FieldElement dot(const Covector& a, const Covector& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

int Arrangement::rank() const {
    Matrix m(field_, static_cast<int>(planes_.size()), 3);
    for (std::size_t i = 0; i < planes_.size(); ++i)
        for (int j = 0; j < 3; ++j) m.at(static_cast<int>(i), j) = planes_[i].normal[j];
    return m.rank();
}

int Arrangement::index_of(const Covector& normal) const {
    Covector c = canonicalize_covector(normal);
    for (std::size_t i = 0; i < planes_.size(); ++i)
        if (planes_[i].normal == c) return static_cast<int>(i);
    return -1;
}

Arrangement make_arrangement(const FieldPtr& f, const std::vector<Covector>& normals) {
    std::vector<Hyperplane> planes;
    std::unordered_set<std::string> seen;
    for (const auto& n : normals) {
        if (covector_is_zero(n)) throw ZeroNormal();
        Covector c = canonicalize_covector(n);
        std::string key = covector_key(c);
        if (seen.insert(key).second) planes.push_back(Hyperplane{c});
    }
    return Arrangement(f, std::move(planes));
}

Arrangement delete_hyperplane(const Arrangement& a, int index) {
    if (index < 0 || index >= a.size())
        throw IndexOutOfRange("hyperplane index " + std::to_string(index) + " out of range");
    std::vector<Hyperplane> planes = a.hyperplanes();
    planes.erase(planes.begin() + index);
    return Arrangement(a.field(), std::move(planes));
}

Arrangement add_hyperplane(const Arrangement& a, const Hyperplane& h) {
    Covector c = canonicalize_covector(h.normal);
    if (a.index_of(c) >= 0) throw Error("hyperplane already present");
    std::vector<Hyperplane> planes = a.hyperplanes();
    planes.push_back(Hyperplane{c});
    return Arrangement(a.field(), std::move(planes));
}

static void require_rank3(const Arrangement& a) {
    if (a.rank() < 3) throw RankDeficient();
}

int restrict_count(const Arrangement& a, int index) {
    if (index < 0 || index >= a.size())
        throw IndexOutOfRange("hyperplane index " + std::to_string(index) + " out of range");
    require_rank3(a);
    std::unordered_set<std::string> dirs;
    for (int j = 0; j < a.size(); ++j) {
        if (j == index) continue;
        Covector d = cross(a[index].normal, a[j].normal);
        dirs.insert(covector_key(canonicalize_covector(d)));
    }
    return static_cast<int>(dirs.size());
}

std::vector<int> restriction_sizes(const Arrangement& a) {
    require_rank3(a);
    std::vector<std::unordered_set<std::string>> dirs(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) {
            Covector d = cross(a[i].normal, a[j].normal);
            std::string key = covector_key(canonicalize_covector(d));
            dirs[i].insert(key);
            dirs[j].insert(std::move(key));
        }
    std::vector<int> out(a.size());
    for (int i = 0; i < a.size(); ++i) out[i] = static_cast<int>(dirs[i].size());
    return out;
}

std::vector<int> localization_sizes(const Arrangement& a) {
    require_rank3(a);
    // |A_p| over flats p: group hyperplane pairs by intersection direction.
    std::unordered_map<std::string, std::unordered_set<int>> flats;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) {
            Covector d = cross(a[i].normal, a[j].normal);
            auto& s = flats[covector_key(canonicalize_covector(d))];
            s.insert(i);
            s.insert(j);
        }
    std::vector<int> sizes;
    sizes.reserve(flats.size());
    for (const auto& [key, s] : flats) sizes.push_back(static_cast<int>(s.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

MultiArrangement2D ziegler_restrict(const Arrangement& a, int index) {
    if (index < 0 || index >= a.size())
        throw IndexOutOfRange("hyperplane index " + std::to_string(index) + " out of range");
    require_rank3(a);
    const Covector& alpha = a[index].normal;
    // Deterministic plane basis: pivot coordinate i has alpha_i = 1; u and v
    // set the two non-pivot coordinates to (1,0) and (0,1).
    int piv = 0;
    while (alpha[piv].is_zero()) ++piv;
    int j = -1, k = -1;
    for (int t = 0; t < 3; ++t)
        if (t != piv) (j < 0 ? j : k) = t;
    const FieldPtr& f = a.field();
    Covector u{FieldElement::zero(f), FieldElement::zero(f), FieldElement::zero(f)};
    Covector v = u;
    u[j] = FieldElement::one(f);
    u[piv] = -alpha[j];
    v[k] = FieldElement::one(f);
    v[piv] = -alpha[k];

    MultiArrangement2D m;
    m.field = f;
    std::unordered_map<std::string, std::size_t> pos;
    for (int h = 0; h < a.size(); ++h) {
        if (h == index) continue;
        std::array<FieldElement, 2> form{dot(a[h].normal, u), dot(a[h].normal, v)};
        // canonicalize: first nonzero coefficient 1
        if (!form[0].is_zero()) {
            FieldElement s = form[0].inv();
            form[1] = form[1] * s;
            form[0] = FieldElement::one(f);
        } else if (!form[1].is_zero()) {
            form[1] = FieldElement::one(f);
        } else {
            throw Error("hyperplane coincides with restriction plane");
        }
        std::string key = form[0].str() + "|" + form[1].str();
        auto it = pos.find(key);
        if (it == pos.end()) {
            pos.emplace(std::move(key), m.forms.size());
            m.forms.emplace_back(form, 1);
        } else {
            ++m.forms[it->second].second;
        }
    }
    return m;
}

Arrangement orbit_arrangement(const FieldPtr& f, const std::vector<Matrix>& generators,
                              const std::vector<Covector>& seeds, std::size_t cap) {
    std::vector<Matrix> action;
    for (const auto& g : generators) {
        auto ginv = g.inverse();
        if (!ginv) throw Error("orbit generator is singular");
        action.push_back(g);
        action.push_back(*ginv);
    }
    std::unordered_map<std::string, Covector> seen;
    std::deque<Covector> queue;
    for (const auto& s : seeds) {
        if (covector_is_zero(s)) throw ZeroNormal();
        Covector c = canonicalize_covector(s);
        if (seen.emplace(covector_key(c), c).second) queue.push_back(c);
    }
    while (!queue.empty()) {
        Covector cur = queue.front();
        queue.pop_front();
        for (const auto& g : action) {
            std::vector<FieldElement> img =
                g.row_times(std::vector<FieldElement>(cur.begin(), cur.end()));
            Covector c = canonicalize_covector({img[0], img[1], img[2]});
            if (seen.emplace(covector_key(c), c).second) {
                if (seen.size() > cap) throw OrbitCapExceeded(cap);
                queue.push_back(c);
            }
        }
    }
    std::vector<Covector> out;
    out.reserve(seen.size());
    for (const auto& [key, c] : seen) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const Covector& x, const Covector& y) {
        return covector_cmp(x, y) < 0;
    });
    return make_arrangement(f, out);
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

Matrix matrix_from(const FieldPtr& f, const std::array<std::array<FieldElement, 3>, 3>& rows) {
    Matrix m(f, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = rows[i][j];
    return m;
}

Arrangement build_A_H3_27() {
    FieldPtr f = FieldDescriptor::cyclotomic(5);
    FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
    FieldElement z2 = FieldElement::zeta_power(f, 2), z3 = FieldElement::zeta_power(f, 3);
    FieldElement omega = -z2 - z3;  // the golden ratio in Q(zeta_5)
    Matrix g1 = matrix_from(f, {{{one, zero, zero}, {zero, one, one}, {zero, zero, -one}}});
    Matrix g2 = matrix_from(f, {{{-one, zero, zero}, {omega, one, zero}, {zero, zero, one}}});
    Matrix g3 = matrix_from(f, {{{one, omega, zero}, {zero, -one, zero}, {zero, one, one}}});
    std::vector<Matrix> gens{g1, g2, g3};

    Arrangement roots = orbit_arrangement(
        f, gens, {Covector{one, zero, zero}, Covector{zero, one, zero}, Covector{zero, zero, one}});
    if (roots.size() != 15)
        throw Error("H3 root orbit has unexpected size " + std::to_string(roots.size()));
    Arrangement second = orbit_arrangement(f, gens, {Covector{one, -z2, zero}});
    if (second.size() != 12)
        throw Error("second orbit has unexpected size " + std::to_string(second.size()));

    std::vector<Covector> all;
    for (const auto& h : roots.hyperplanes()) all.push_back(h.normal);
    for (const auto& h : second.hyperplanes()) {
        if (roots.index_of(h.normal) >= 0) throw DuplicateSeed();
        all.push_back(h.normal);
    }
    Arrangement a = make_arrangement(f, all);
    if (a.size() != 27) throw Error("expected 27 hyperplanes");
    return a;
}

const std::vector<std::array<long, 3>> kB_normals = {
    {0, 0, 1},  {0, 1, 1},  {0, 1, 2},  {0, 1, 3},  {0, 1, 4},  {0, 1, 5},  {0, 1, 6},
    {1, 0, 0},  {1, 0, 1},  {1, 2, 2},  {1, 3, 1},  {1, 3, 10}, {1, 4, 3},  {1, 4, 4},
    {1, 5, 7},  {1, 6, 4},  {1, 6, 6},  {1, 8, 5},  {1, 8, 8},  {1, 9, 0},  {1, 9, 1},
    {1, 9, 4},  {1, 9, 5},  {1, 9, 8},  {1, 9, 9},  {1, 10, 0}, {1, 10, 5}};

const std::vector<std::array<long, 3>> kB_chain = {
    {0, 1, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}, {1, 5, 0}, {1, 7, 0}};

Arrangement build_B(int extra) {
    FieldPtr f = FieldDescriptor::prime(11);
    std::vector<Covector> normals;
    auto push = [&](const std::array<long, 3>& n) {
        normals.push_back(Covector{FieldElement::from_int(f, n[0]), FieldElement::from_int(f, n[1]),
                                   FieldElement::from_int(f, n[2])});
    };
    for (const auto& n : kB_normals) push(n);
    for (int i = 0; i < extra; ++i) push(kB_chain[static_cast<std::size_t>(i)]);
    Arrangement a = make_arrangement(f, normals);
    if (a.size() != 27 + extra) throw Error("builtin B has duplicate normals");
    return a;
}

Arrangement from_int_normals(const FieldPtr& f, const std::vector<std::array<long, 3>>& ns) {
    std::vector<Covector> normals;
    for (const auto& n : ns)
        normals.push_back(Covector{FieldElement::from_int(f, n[0]),
                                   FieldElement::from_int(f, n[1]),
                                   FieldElement::from_int(f, n[2])});
    return make_arrangement(f, normals);
}

}  // namespace

std::vector<std::string> builtin_names() {
    std::vector<std::string> names{"A_H3_27", "B_F11_27"};
    for (int i = 1; i <= 7; ++i) names.push_back("B_F11_plus_" + std::to_string(i));
    names.insert(names.end(), {"boolean3", "generic4", "near_pencil4", "pencil3"});
    return names;
}

Arrangement builtin(const std::string& name) {
    if (name == "A_H3_27") {
        static const Arrangement a = build_A_H3_27();
        return a;
    }
    if (name == "B_F11_27") return build_B(0);
    for (int i = 1; i <= 7; ++i)
        if (name == "B_F11_plus_" + std::to_string(i)) return build_B(i);
    FieldPtr q = FieldDescriptor::rational();
    if (name == "boolean3") return from_int_normals(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    if (name == "generic4")
        return from_int_normals(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    if (name == "near_pencil4")
        return from_int_normals(q, {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}});
    if (name == "pencil3") return from_int_normals(q, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    throw UnknownName(name);
}

}  // namespace arrfree
