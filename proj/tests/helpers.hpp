#pragma once

#include <random>

#include "arrfree/arrangement.hpp"

namespace testutil {

using namespace arrfree;

inline Covector cov(const FieldPtr& f, long a, long b, long c) {
    return {FieldElement::from_int(f, a), FieldElement::from_int(f, b),
            FieldElement::from_int(f, c)};
}

inline Arrangement arr(const FieldPtr& f, const std::vector<std::array<long, 3>>& rows) {
    std::vector<Covector> normals;
    for (const auto& r : rows) normals.push_back(cov(f, r[0], r[1], r[2]));
    return make_arrangement(f, normals);
}

/// Boolean arrangement {x, y, z} over Q.
inline Arrangement boolean3() {
    return arr(FieldDescriptor::rational(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

/// Random rank-3 arrangement of n distinct hyperplanes over F_p.
inline Arrangement random_arrangement(std::mt19937_64& rng, unsigned long p, int n) {
    FieldPtr f = FieldDescriptor::prime(p);
    std::uniform_int_distribution<long> d(0, static_cast<long>(p) - 1);
    for (;;) {
        std::vector<Covector> normals;
        while (static_cast<int>(normals.size()) < n) {
            Covector v = cov(f, d(rng), d(rng), d(rng));
            if (!covector_is_zero(v)) normals.push_back(v);
        }
        Arrangement a = make_arrangement(f, normals);
        if (a.size() == n && a.rank() == 3) return a;
    }
}

inline FieldElement random_element(std::mt19937_64& rng, const FieldPtr& f) {
    switch (f->kind()) {
        case FieldKind::Prime: {
            std::uniform_int_distribution<long> d(0, static_cast<long>(f->p()) - 1);
            return FieldElement::from_int(f, d(rng));
        }
        case FieldKind::Rational: {
            std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
            return FieldElement::from_mpq(f, mpq_class(num(rng), den(rng)));
        }
        case FieldKind::Cyclotomic: {
            std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
            std::vector<mpq_class> coords;
            for (unsigned i = 0; i < f->phi(); ++i) coords.emplace_back(num(rng), den(rng));
            return FieldElement::from_coords(f, std::move(coords));
        }
    }
    return FieldElement::zero(f);
}

}  // namespace testutil
