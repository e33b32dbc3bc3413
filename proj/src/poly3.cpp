#include "arrfree/poly3.hpp"

namespace arrfree {

Poly3 Poly3::constant(const FieldPtr& f, const FieldElement& c) {
    Poly3 p(f);
    p.add_term({0, 0, 0}, c);
    return p;
}

Poly3 Poly3::linear(const FieldPtr& f, const Covector& alpha) {
    Poly3 p(f);
    p.add_term({1, 0, 0}, alpha[0]);
    p.add_term({0, 1, 0}, alpha[1]);
    p.add_term({0, 0, 1}, alpha[2]);
    return p;
}

void Poly3::add_term(const Exp& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly3 Poly3::operator+(const Poly3& o) const {
    Poly3 r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly3 Poly3::operator-(const Poly3& o) const {
    Poly3 r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly3 Poly3::operator*(const Poly3& o) const {
    Poly3 r(field_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

int Poly3::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

bool Poly3::is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
        int t = e[0] + e[1] + e[2];
        if (d == -2)
            d = t;
        else if (t != d)
            return false;
    }
    return true;
}

bool Poly3::divisible_by_linear(const Covector& alpha) const {
    // Substitute the pivot variable x_i = -(sum of the other alpha terms) and
    // test for the zero polynomial.
    Covector a = canonicalize_covector(alpha);
    int piv = 0;
    while (a[piv].is_zero()) ++piv;
    Poly3 sub(field_);  // -(alpha - x_piv) as a polynomial in the other vars
    for (int k = 0; k < 3; ++k) {
        if (k == piv || a[k].is_zero()) continue;
        Exp e{0, 0, 0};
        e[k] = 1;
        sub.add_term(e, -a[k]);
    }
    Poly3 acc(field_);
    for (const auto& [e, c] : terms_) {
        // x_piv^m -> sub^m
        Poly3 t = Poly3::constant(field_, c);
        Exp rest = e;
        int m = e[piv];
        rest[piv] = 0;
        Poly3 mono(field_);
        mono.add_term(rest, FieldElement::one(field_));
        t = t * mono;
        for (int k = 0; k < m; ++k) t = t * sub;
        acc = acc + t;
    }
    return acc.is_zero();
}

int Derivation3::pdeg() const {
    int d = -1;
    for (const auto& p : components) {
        if (!p.is_homogeneous()) throw DegreeMismatch("derivation component is not homogeneous");
        if (p.is_zero()) continue;
        if (d == -1)
            d = p.degree();
        else if (p.degree() != d)
            throw DegreeMismatch("derivation components have different degrees");
    }
    if (d == -1) throw DegreeMismatch("zero derivation");
    return d;
}

}  // namespace arrfree
