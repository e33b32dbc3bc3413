#include "arrfree/freeness.hpp"

#include <algorithm>

namespace arrfree {

namespace {

FieldElement binom(const FieldPtr& f, unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return FieldElement::from_mpq(f, mpq_class(b));
}

// Constraint matrix at degree d: unknowns f_0..f_d, g_0..g_d, one row per
// vanishing coordinate of a_i*f + b_i*g in the basis (alpha_i, beta_i).
Matrix constraint_matrix(const MultiArrangement2D& m, long d) {
    const FieldPtr& f = m.field;
    long rows = 0;
    for (const auto& [form, mult] : m.forms) rows += std::min<long>(mult, d + 1);
    Matrix M(f, static_cast<int>(rows), static_cast<int>(2 * (d + 1)));
    int r = 0;
    for (const auto& [form, mult] : m.forms) {
        const FieldElement& a = form[0];
        const FieldElement& b = form[1];
        long kmax = std::min<long>(mult, d + 1);
        if (a.is_zero()) {
            // alpha = t: coefficient of t^k is c_{d-k} = g_{d-k}.
            for (long k = 0; k < kmax; ++k) {
                M.at(r++, static_cast<int>((d + 1) + (d - k))) = FieldElement::one(f);
            }
            continue;
        }
        // alpha ~ s + (b/a) t; e_k = sum_{j>=k} C(j,k)(-b/a)^(j-k) (a f_j + b g_j).
        FieldElement bn = b / a;
        for (long k = 0; k < kmax; ++k) {
            FieldElement pw = FieldElement::one(f);  // (-b/a)^(j-k)
            for (long j = k; j <= d; ++j) {
                FieldElement coef = binom(f, static_cast<unsigned long>(j),
                                          static_cast<unsigned long>(k)) *
                                    pw;
                M.at(r, static_cast<int>(j)) = coef * a;
                M.at(r, static_cast<int>((d + 1) + j)) = coef * b;
                pw = pw * (-bn);
            }
            ++r;
        }
    }
    return M;
}

}  // namespace

long multi_solution_dim(const MultiArrangement2D& m, long d) {
    if (m.forms.empty()) throw EmptyMultiarrangement();
    if (d < 0) return 0;
    Matrix M = constraint_matrix(m, d);
    return 2 * (d + 1) - M.rank();
}

ExponentPair multi_exponents(const MultiArrangement2D& m) {
    if (m.forms.empty()) throw EmptyMultiarrangement();
    const long total = m.total_multiplicity();
    // d1 <= floor(|m|/2) always, and solvability is monotone in d.
    long lo = 0, hi = total / 2;
    while (lo < hi) {
        long mid = lo + (hi - lo) / 2;
        if (multi_solution_dim(m, mid) > 0)
            hi = mid;
        else
            lo = mid + 1;
    }
    return ExponentPair{lo, total - lo};
}

FreenessReport is_free_rank3(const Arrangement& a, int witness) {
    if (a.rank() < 3) throw RankDeficient();
    if (witness < 0 || witness >= a.size())
        throw IndexOutOfRange("witness index " + std::to_string(witness) + " out of range");
    FreenessReport rep;
    rep.witness_hyperplane = witness;
    rep.finite_field_criterion = a.field()->kind() == FieldKind::Prime;
    IntersectionLattice L = build_lattice(a);
    rep.chi_exponents = factor_exponents(char_poly(L));
    rep.ziegler_exponents = multi_exponents(ziegler_restrict(a, witness));
    if (!rep.chi_exponents) {
        rep.reason = FreeReason::ChiDoesNotSplit;
        return rep;
    }
    std::array<long, 3> want{1, rep.ziegler_exponents.d1, rep.ziegler_exponents.d2};
    std::sort(want.begin(), want.end());
    if (want == *rep.chi_exponents) {
        rep.free = true;
        rep.reason = FreeReason::Free;
        rep.exponents = want;
    } else {
        rep.reason = FreeReason::ProductMismatch;
    }
    return rep;
}

std::optional<std::array<long, 3>> exponents3(const Arrangement& a) {
    int r = a.rank();
    if (r >= 3) {
        FreenessReport rep = is_free_rank3(a);
        if (!rep.free) return std::nullopt;
        return rep.exponents;
    }
    long n = a.size();
    if (r == 2) return std::array<long, 3>{0, 1, n - 1};
    if (r == 1) return std::array<long, 3>{0, 0, 1};
    return std::array<long, 3>{0, 0, 0};
}

bool restriction_contained(long k, const std::array<long, 3>& exp) {
    std::vector<long> pool;
    for (long e : exp)
        if (e > 0) pool.push_back(e);
    std::vector<long> need{1, k - 1};
    if (k - 1 <= 0) need = {1};
    for (long v : need) {
        auto it = std::find(pool.begin(), pool.end(), v);
        if (it == pool.end()) return false;
        pool.erase(it);
    }
    return true;
}

bool saito_verify(const Arrangement& a, const std::array<Derivation3, 3>& basis) {
    if (a.rank() < 3) throw RankDeficient();
    const FieldPtr& f = a.field();
    for (const auto& theta : basis) theta.pdeg();  // homogeneity gate

    // (i) theta(alpha_H) = sum_k f_k * alpha_k must lie in (alpha_H).
    for (const auto& theta : basis) {
        for (const auto& h : a.hyperplanes()) {
            Poly3 img(f);
            for (int k = 0; k < 3; ++k)
                img = img + theta.components[static_cast<std::size_t>(k)] *
                                Poly3::constant(f, h.normal[static_cast<std::size_t>(k)]);
            if (!img.is_zero() && !img.divisible_by_linear(h.normal)) return false;
        }
    }

    // (ii) Saito: det(coefficient matrix) = c * Q(A), c != 0.
    auto& t0 = basis[0].components;
    auto& t1 = basis[1].components;
    auto& t2 = basis[2].components;
    Poly3 det = t0[0] * (t1[1] * t2[2] - t1[2] * t2[1]) -
                t0[1] * (t1[0] * t2[2] - t1[2] * t2[0]) +
                t0[2] * (t1[0] * t2[1] - t1[1] * t2[0]);
    if (det.is_zero()) return false;
    Poly3 q = Poly3::constant(f, FieldElement::one(f));
    for (const auto& h : a.hyperplanes()) q = q * Poly3::linear(f, h.normal);
    const auto& [qe, qc] = *q.terms().begin();
    auto it = det.terms().find(qe);
    if (it == det.terms().end()) return false;
    FieldElement c = it->second / qc;
    Poly3 diff = det - q * Poly3::constant(f, c);
    return diff.is_zero();
}

}  // namespace arrfree
