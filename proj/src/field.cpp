#include "arrfree/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace arrfree {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& num,
                                      const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    const std::size_t dd = den.size() - 1;
    if (rem.size() < den.size()) throw Error("polynomial division underflow");
    std::vector<mpz_class> quot(rem.size() - dd, 0);
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        std::size_t qi = i - dd;
        mpz_class c = rem[i] / den[dd];
        if (c * den[dd] != rem[i]) throw Error("inexact polynomial division");
        quot[qi] = c;
        for (std::size_t k = 0; k <= dd; ++k) rem[qi + k] -= c * den[k];
    }
    for (const auto& r : rem)
        if (r != 0) throw Error("inexact polynomial division (nonzero remainder)");
    return quot;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

std::vector<mpz_class> cyclotomic_poly(unsigned n) {
    if (n < 1) throw Error("cyclotomic_poly requires n >= 1");
    static std::map<unsigned, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    // Fill the cache for every divisor of n in increasing order.
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0 || cache.count(d)) continue;
        if (d == 1) {
            cache[1] = {-1, 1};  // t - 1
            continue;
        }
        std::vector<mpz_class> num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;  // t^d - 1
        std::vector<mpz_class> den = {1};
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) den = poly_mul(den, cache.at(e));
        cache[d] = poly_div_exact(num, den);
    }
    return cache.at(n);
}

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldPtr FieldDescriptor::rational() {
    static FieldPtr inst = [] {
        auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
        d->kind_ = FieldKind::Rational;
        return FieldPtr(d);
    }();
    return inst;
}

FieldPtr FieldDescriptor::cyclotomic(unsigned n) {
    if (n < 3) throw Error("cyclotomic order must be >= 3");
    auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = FieldKind::Cyclotomic;
    d->n_ = n;
    d->phi_ = euler_phi(n);
    auto phin = cyclotomic_poly(n);
    d->phin_.assign(phin.begin(), phin.end());
    // t^phi mod Phi = -(c_0 + ... + c_{phi-1} t^{phi-1}); then shift-and-reduce.
    const unsigned phi = d->phi_;
    std::vector<mpq_class> cur(phi);
    for (unsigned i = 0; i < phi; ++i) cur[i] = -d->phin_[i];
    d->pow_red_.push_back(cur);
    for (unsigned k = 1; k + 1 < phi; ++k) {
        std::vector<mpq_class> next(phi, 0);
        for (unsigned i = 0; i + 1 < phi; ++i) next[i + 1] = cur[i];
        if (cur[phi - 1] != 0)
            for (unsigned i = 0; i < phi; ++i) next[i] += cur[phi - 1] * d->pow_red_[0][i];
        d->pow_red_.push_back(next);
        cur = std::move(next);
    }
    return FieldPtr(d);
}

FieldPtr FieldDescriptor::prime(unsigned long p) {
    if (!is_prime(p)) throw Error("field characteristic must be prime: " + std::to_string(p));
    auto d = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    d->kind_ = FieldKind::Prime;
    d->p_ = p;
    return FieldPtr(d);
}

std::string FieldDescriptor::name() const {
    switch (kind_) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(n_) + ")";
        case FieldKind::Prime: return "F_" + std::to_string(p_);
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

std::vector<mpq_class> reduce_coords(const FieldDescriptor& f, std::vector<mpq_class> c) {
    const unsigned phi = f.phi();
    if (c.size() > 2 * phi - 1) throw Error("cyclotomic payload too long");
    for (std::size_t i = c.size(); i-- > phi;) {
        if (c[i] != 0) {
            const auto& red = f.pow_red()[i - phi];
            for (unsigned k = 0; k < phi; ++k) c[k] += c[i] * red[k];
        }
    }
    c.resize(phi);
    for (auto& q : c) q.canonicalize();
    return c;
}

unsigned long mod_inverse(unsigned long a, unsigned long p) {
    long t = 0, nt = 1;
    long r = static_cast<long>(p), nr = static_cast<long>(a % p);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw DivisionByZero();
    return static_cast<unsigned long>(t < 0 ? t + static_cast<long>(p) : t);
}

// Extended Euclid in Q[t]: returns u with u * a = gcd (mod m), gcd must be unit.
std::vector<mpq_class> poly_inverse_mod(const std::vector<mpq_class>& a,
                                        const std::vector<mpq_class>& m) {
    auto deg = [](const std::vector<mpq_class>& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1L;
    };
    std::vector<mpq_class> r0 = m, r1 = a, s0 = {mpq_class(0)}, s1 = {mpq_class(1)};
    while (deg(r1) >= 0) {
        long d0 = deg(r0), d1 = deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        // r0 -= (lead ratio) * t^(d0-d1) * r1, same on s
        mpq_class c = r0[d0] / r1[d1];
        long shift = d0 - d1;
        for (long i = 0; i <= d1; ++i) r0[i + shift] -= c * r1[i];
        if (s0.size() < s1.size() + shift) s0.resize(s1.size() + shift, 0);
        for (std::size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= c * s1[i];
    }
    long dg = deg(r0);
    if (dg != 0) throw DivisionByZero();  // not a unit mod m
    mpq_class lead = r0[dg];
    for (auto& q : s0) q /= lead;
    return s0;
}

}  // namespace

FieldElement FieldElement::zero(const FieldPtr& f) { return from_int(f, 0); }
FieldElement FieldElement::one(const FieldPtr& f) { return from_int(f, 1); }

FieldElement FieldElement::from_int(const FieldPtr& f, long v) {
    return from_mpq(f, mpq_class(v));
}

FieldElement FieldElement::from_mpq(const FieldPtr& f, const mpq_class& v) {
    FieldElement e;
    e.field_ = f;
    switch (f->kind()) {
        case FieldKind::Rational: {
            mpq_class q = v;
            q.canonicalize();
            e.payload_ = q;
            break;
        }
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> c(f->phi(), 0);
            c[0] = v;
            c[0].canonicalize();
            e.payload_ = std::move(c);
            break;
        }
        case FieldKind::Prime: {
            mpq_class q = v;
            q.canonicalize();
            if (q.get_den() != 1) {
                mpz_class num = q.get_num() % static_cast<long>(f->p());
                mpz_class den = q.get_den() % static_cast<long>(f->p());
                unsigned long dn = mpz_class((den + f->p()) % f->p()).get_ui();
                if (dn == 0) throw DivisionByZero();
                mpz_class nm = (num % static_cast<long>(f->p()) + f->p()) % f->p();
                e.payload_ =
                    static_cast<unsigned long>((nm.get_ui() * mod_inverse(dn, f->p())) % f->p());
            } else {
                mpz_class r = q.get_num() % static_cast<long>(f->p());
                if (r < 0) r += f->p();
                e.payload_ = static_cast<unsigned long>(r.get_ui());
            }
            break;
        }
    }
    return e;
}

FieldElement FieldElement::from_coords(const FieldPtr& f, std::vector<mpq_class> coords) {
    if (f->kind() != FieldKind::Cyclotomic) throw Error("from_coords requires a cyclotomic field");
    FieldElement e;
    e.field_ = f;
    coords.resize(std::max<std::size_t>(coords.size(), f->phi()), 0);
    e.payload_ = reduce_coords(*f, std::move(coords));
    return e;
}

FieldElement FieldElement::zeta_power(const FieldPtr& f, unsigned k) {
    if (f->kind() != FieldKind::Cyclotomic) throw Error("zeta_power requires a cyclotomic field");
    k %= f->n();
    std::vector<mpq_class> c(k + 1, 0);
    c[k] = 1;
    return from_coords(f, std::move(c));
}

bool FieldElement::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rational: return rat() == 0;
        case FieldKind::Cyclotomic:
            for (const auto& q : coords())
                if (q != 0) return false;
            return true;
        case FieldKind::Prime: return residue() == 0;
    }
    return false;
}

bool FieldElement::is_one() const {
    switch (field_->kind()) {
        case FieldKind::Rational: return rat() == 1;
        case FieldKind::Cyclotomic: {
            const auto& c = coords();
            if (c[0] != 1) return false;
            for (std::size_t i = 1; i < c.size(); ++i)
                if (c[i] != 0) return false;
            return true;
        }
        case FieldKind::Prime: return residue() == 1;
    }
    return false;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational: r.payload_ = mpq_class(rat() + o.rat()); break;
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> c = coords();
            const auto& oc = o.coords();
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += oc[i];
            r.payload_ = std::move(c);
            break;
        }
        case FieldKind::Prime: r.payload_ = (residue() + o.residue()) % field_->p(); break;
    }
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    FieldElement r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational: r.payload_ = mpq_class(rat() - o.rat()); break;
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> c = coords();
            const auto& oc = o.coords();
            for (std::size_t i = 0; i < c.size(); ++i) c[i] -= oc[i];
            r.payload_ = std::move(c);
            break;
        }
        case FieldKind::Prime:
            r.payload_ = (residue() + field_->p() - o.residue()) % field_->p();
            break;
    }
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational: r.payload_ = mpq_class(rat() * o.rat()); break;
        case FieldKind::Cyclotomic: {
            const auto& a = coords();
            const auto& b = o.coords();
            std::vector<mpq_class> prod(2 * a.size() - 1, 0);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] == 0) continue;
                for (std::size_t j = 0; j < b.size(); ++j) {
                    if (b[j] != 0) prod[i + j] += a[i] * b[j];
                }
            }
            r.payload_ = reduce_coords(*field_, std::move(prod));
            break;
        }
        case FieldKind::Prime: r.payload_ = (residue() * o.residue()) % field_->p(); break;
    }
    return r;
}

FieldElement FieldElement::operator-() const {
    FieldElement r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational: r.payload_ = mpq_class(-rat()); break;
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> c = coords();
            for (auto& q : c) q = -q;
            r.payload_ = std::move(c);
            break;
        }
        case FieldKind::Prime:
            r.payload_ = residue() == 0 ? 0ul : field_->p() - residue();
            break;
    }
    return r;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZero();
    FieldElement r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational: r.payload_ = mpq_class(1 / rat()); break;
        case FieldKind::Cyclotomic: {
            auto u = poly_inverse_mod(coords(), field_->modulus());
            u.resize(field_->phi(), 0);
            for (auto& q : u) q.canonicalize();
            r.payload_ = std::move(u);
            break;
        }
        case FieldKind::Prime: r.payload_ = mod_inverse(residue(), field_->p()); break;
    }
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

bool FieldElement::operator==(const FieldElement& o) const {
    check_same(o);
    return payload_ == o.payload_;
}

int FieldElement::cmp(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    switch (a.field_->kind()) {
        case FieldKind::Rational: return ::cmp(a.rat(), b.rat());
        case FieldKind::Cyclotomic: {
            const auto& x = a.coords();
            const auto& y = b.coords();
            for (std::size_t i = 0; i < x.size(); ++i) {
                int c = ::cmp(x[i], y[i]);
                if (c != 0) return c;
            }
            return 0;
        }
        case FieldKind::Prime:
            return a.residue() < b.residue() ? -1 : (a.residue() > b.residue() ? 1 : 0);
    }
    return 0;
}

std::string FieldElement::str() const {
    switch (field_->kind()) {
        case FieldKind::Rational: return rational_to_string(rat());
        case FieldKind::Cyclotomic: {
            std::string s = "[";
            const auto& c = coords();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ",";
                s += rational_to_string(c[i]);
            }
            s += "]";
            return s;
        }
        case FieldKind::Prime: return std::to_string(residue());
    }
    return "?";
}

std::string rational_to_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty scalar");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/' ||
              ch == '+'))
            throw ParseError("bad rational: " + s);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

FieldElement parse_scalar(const FieldPtr& f, const std::string& s) {
    switch (f->kind()) {
        case FieldKind::Rational: return FieldElement::from_mpq(f, parse_rational(s));
        case FieldKind::Prime: {
            mpq_class q = parse_rational(s);
            if (q.get_den() != 1 || q < 0 || q >= static_cast<long>(f->p()))
                throw ParseError("prime-field scalar out of range: " + s);
            return FieldElement::from_mpq(f, q);
        }
        case FieldKind::Cyclotomic:
            throw ParseError("cyclotomic scalars are arrays, not strings");
    }
    throw ParseError("bad scalar");
}

}  // namespace arrfree
