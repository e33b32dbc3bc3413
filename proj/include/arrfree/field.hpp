#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "arrfree/errors.hpp"

namespace arrfree {

enum class FieldKind { Rational, Cyclotomic, Prime };

/// Coefficients of the n-th cyclotomic polynomial, index i = coefficient of t^i.
/// Computed by exact division of t^n - 1 by the product of all proper Phi_d.
std::vector<mpz_class> cyclotomic_poly(unsigned n);

/// Euler totient by trial-division factorization (inputs are small).
unsigned euler_phi(unsigned n);

bool is_prime(unsigned long p);

class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// Immutable description of the ground field: Q, Q(zeta_n), or F_p.
/// Cyclotomic descriptors carry Phi_n and a power-reduction table so element
/// arithmetic never recomputes them.
class FieldDescriptor {
  public:
    static FieldPtr rational();
    static FieldPtr cyclotomic(unsigned n);  // n >= 3
    static FieldPtr prime(unsigned long p);  // p prime, checked

    FieldKind kind() const { return kind_; }
    unsigned n() const { return n_; }
    unsigned long p() const { return p_; }
    unsigned phi() const { return phi_; }

    /// Phi_n as rationals (monic, degree phi).
    const std::vector<mpq_class>& modulus() const { return phin_; }
    /// pow_red()[k] = coordinates of t^(phi+k) mod Phi_n, k = 0 .. phi-2.
    const std::vector<std::vector<mpq_class>>& pow_red() const { return pow_red_; }

    bool same(const FieldDescriptor& o) const {
        return kind_ == o.kind_ && n_ == o.n_ && p_ == o.p_;
    }
    std::string name() const;

  private:
    FieldDescriptor() = default;
    FieldKind kind_ = FieldKind::Rational;
    unsigned n_ = 0;
    unsigned long p_ = 0;
    unsigned phi_ = 1;
    std::vector<mpq_class> phin_;
    std::vector<std::vector<mpq_class>> pow_red_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && a->same(*b));
}

/// Exact scalar in Q, Q(zeta_n) (power-basis coordinates mod Phi_n), or F_p.
/// Always in canonical form, so payload equality is field equality.
class FieldElement {
  public:
    FieldElement() = default;

    static FieldElement zero(const FieldPtr& f);
    static FieldElement one(const FieldPtr& f);
    static FieldElement from_int(const FieldPtr& f, long v);
    static FieldElement from_mpq(const FieldPtr& f, const mpq_class& v);
    /// Cyclotomic element from power-basis coordinates (size <= 2*phi-1 accepted,
    /// reduced mod Phi_n).
    static FieldElement from_coords(const FieldPtr& f, std::vector<mpq_class> coords);
    /// zeta^k in Q(zeta_n).
    static FieldElement zeta_power(const FieldPtr& f, unsigned k);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Total order on canonical payloads (used for deterministic sorting/keys).
    static int cmp(const FieldElement& a, const FieldElement& b);

    /// Canonical textual form; doubles as a hash-map key.
    std::string str() const;

    const mpq_class& rat() const { return std::get<mpq_class>(payload_); }
    const std::vector<mpq_class>& coords() const {
        return std::get<std::vector<mpq_class>>(payload_);
    }
    unsigned long residue() const { return std::get<unsigned long>(payload_); }

  private:
    friend class Matrix;
    FieldPtr field_;
    std::variant<mpq_class, std::vector<mpq_class>, unsigned long> payload_;

    void check_same(const FieldElement& o) const {
        if (!same_field(field_, o.field_)) throw DescriptorMismatch();
    }
};

/// Scalar <-> text per the arrangement file encoding. Rational: "a" or "a/b";
/// prime: decimal residue. Cyclotomic scalars are arrays of rational strings,
/// handled by the io layer via coords().
std::string rational_to_string(const mpq_class& q);
mpq_class parse_rational(const std::string& s);
FieldElement parse_scalar(const FieldPtr& f, const std::string& s);

}  // namespace arrfree
