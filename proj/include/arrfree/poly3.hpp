#pragma once

#include <array>
#include <map>
#include <optional>

#include "arrfree/arrangement.hpp"

namespace arrfree {

/// Sparse polynomial in x, y, z over one exact field.
class Poly3 {
  public:
    using Exp = std::array<int, 3>;

    explicit Poly3(FieldPtr f) : field_(std::move(f)) {}
    static Poly3 constant(const FieldPtr& f, const FieldElement& c);
    /// The linear form a*x + b*y + c*z.
    static Poly3 linear(const FieldPtr& f, const Covector& alpha);

    const FieldPtr& field() const { return field_; }
    const std::map<Exp, FieldElement>& terms() const { return terms_; }

    void add_term(const Exp& e, const FieldElement& c);

    Poly3 operator+(const Poly3& o) const;
    Poly3 operator-(const Poly3& o) const;
    Poly3 operator*(const Poly3& o) const;
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// True iff all terms share one total degree (or zero polynomial).
    bool is_homogeneous() const;

    /// Remainder is zero after substituting the pivot variable of alpha by the
    /// linear combination alpha forces; i.e. alpha | *this.
    bool divisible_by_linear(const Covector& alpha) const;

  private:
    FieldPtr field_;
    std::map<Exp, FieldElement> terms_;  // nonzero coefficients only
};

/// theta = f0 d/dx + f1 d/dy + f2 d/dz, homogeneous components of equal degree.
struct Derivation3 {
    std::array<Poly3, 3> components;

    /// Common polynomial degree; throws DegreeMismatch if not homogeneous of
    /// one degree (the zero derivation is rejected too).
    int pdeg() const;
};

}  // namespace arrfree
