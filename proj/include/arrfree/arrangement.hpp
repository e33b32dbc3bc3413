#pragma once

#include <array>
#include <string>
#include <vector>

#include "arrfree/matrix.hpp"

namespace arrfree {

using Covector = std::array<FieldElement, 3>;

/// Canonical projective representative: first nonzero coordinate scaled to 1.
Covector canonicalize_covector(const Covector& v);
bool covector_is_zero(const Covector& v);
std::string covector_key(const Covector& v);
int covector_cmp(const Covector& a, const Covector& b);

/// A hyperplane through the origin of K^3, stored as its canonical normal.
struct Hyperplane {
    Covector normal;

    bool operator==(const Hyperplane& o) const { return normal == o.normal; }
    std::string key() const { return covector_key(normal); }
};

/// Direction of the intersection line of two independent normals.
Covector cross(const Covector& a, const Covector& b);
FieldElement dot(const Covector& a, const Covector& b);

/// Ordered duplicate-free set of hyperplanes in K^3.
class Arrangement {
  public:
    Arrangement(FieldPtr f, std::vector<Hyperplane> planes)
        : field_(std::move(f)), planes_(std::move(planes)) {}

    const FieldPtr& field() const { return field_; }
    const std::vector<Hyperplane>& hyperplanes() const { return planes_; }
    int size() const { return static_cast<int>(planes_.size()); }
    const Hyperplane& operator[](int i) const { return planes_[static_cast<std::size_t>(i)]; }

    int rank() const;
    /// Index of a projectively equal hyperplane, or -1.
    int index_of(const Covector& normal) const;

  private:
    FieldPtr field_;
    std::vector<Hyperplane> planes_;
};

/// Binary linear forms with multiplicities: the Ziegler restriction target.
struct MultiArrangement2D {
    FieldPtr field;
    std::vector<std::pair<std::array<FieldElement, 2>, long>> forms;

    long total_multiplicity() const {
        long s = 0;
        for (const auto& f : forms) s += f.second;
        return s;
    }
};

Arrangement make_arrangement(const FieldPtr& f, const std::vector<Covector>& normals);
Arrangement delete_hyperplane(const Arrangement& a, int index);
Arrangement add_hyperplane(const Arrangement& a, const Hyperplane& h);

/// |A^H|: number of distinct rank-2 flats of A lying inside hyperplane `index`.
int restrict_count(const Arrangement& a, int index);
/// restrict_count for every hyperplane at once.
std::vector<int> restriction_sizes(const Arrangement& a);
/// {{|A_p|}} over all rank-2 flats p, sorted ascending.
std::vector<int> localization_sizes(const Arrangement& a);

MultiArrangement2D ziegler_restrict(const Arrangement& a, int index);

/// Closes the seeds under the right action v -> v*g of the group generated by
/// `generators` (inverses included), projectively deduplicated, output sorted
/// lexicographically on payload.
Arrangement orbit_arrangement(const FieldPtr& f, const std::vector<Matrix>& generators,
                              const std::vector<Covector>& seeds, std::size_t cap = 10000);

Arrangement builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace arrfree
