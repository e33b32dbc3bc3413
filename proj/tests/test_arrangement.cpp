#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace arrfree;
using testutil::arr;
using testutil::boolean3;
using testutil::cov;

TEST_CASE("make_arrangement canonicalizes and deduplicates") {
    FieldPtr q = FieldDescriptor::rational();
    Arrangement a = arr(q, {{0, 0, 2}});
    REQUIRE(a.size() == 1);
    CHECK(a[0].normal == cov(q, 0, 0, 1));

    Arrangement b = arr(q, {{1, 0, 0}, {2, 0, 0}});
    CHECK(b.size() == 1);

    CHECK_THROWS_AS(arr(q, {{0, 0, 0}}), ZeroNormal);
}

TEST_CASE("scaling a normal changes nothing") {
    FieldPtr f = FieldDescriptor::prime(11);
    Arrangement a = arr(f, {{1, 2, 3}});
    Arrangement b = arr(f, {{4, 8, 1}});  // 4 * (1,2,3) mod 11
    CHECK(a[0].normal == b[0].normal);
}

TEST_CASE("delete and re-add") {
    Arrangement a = boolean3();
    Arrangement d = delete_hyperplane(a, 2);
    REQUIRE(d.size() == 2);
    Arrangement r = add_hyperplane(d, a[2]);
    REQUIRE(r.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(r.index_of(a[i].normal) >= 0);
    CHECK_THROWS_AS(delete_hyperplane(a, 3), IndexOutOfRange);
}

TEST_CASE("restriction counts") {
    Arrangement b3 = boolean3();
    for (int i = 0; i < 3; ++i) CHECK(restrict_count(b3, i) == 2);

    FieldPtr q = FieldDescriptor::rational();
    Arrangement g4 = arr(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    for (int i = 0; i < 4; ++i) CHECK(restrict_count(g4, i) == 3);
}

TEST_CASE("localization sizes") {
    std::vector<int> b3 = localization_sizes(boolean3());
    CHECK(b3 == std::vector<int>{2, 2, 2});

    FieldPtr f = FieldDescriptor::prime(11);
    Arrangement a = arr(f, {{1, 0, 0}, {0, 1, 0}, {1, 10, 0}, {0, 0, 1}});
    std::vector<int> sizes = localization_sizes(a);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 2, 2, 3});
}

TEST_CASE("ziegler restriction") {
    Arrangement b3 = boolean3();
    MultiArrangement2D m = ziegler_restrict(b3, 2);
    REQUIRE(m.forms.size() == 2);
    CHECK(m.forms[0].second == 1);
    CHECK(m.forms[1].second == 1);

    FieldPtr q = FieldDescriptor::rational();
    Arrangement a4 = arr(q, {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}});
    MultiArrangement2D m4 = ziegler_restrict(a4, 3);
    REQUIRE(m4.forms.size() == 3);
    for (const auto& [form, mult] : m4.forms) CHECK(mult == 1);
}

TEST_CASE("ziegler multiplicities sum to n - 1 and match restrict_count") {
    Arrangement a = builtin("A_H3_27");
    for (int h = 0; h < a.size(); ++h) {
        MultiArrangement2D m = ziegler_restrict(a, h);
        CHECK(m.total_multiplicity() == a.size() - 1);
        CHECK(static_cast<int>(m.forms.size()) == restrict_count(a, h));
    }
}

TEST_CASE("orbit construction") {
    FieldPtr f = FieldDescriptor::cyclotomic(5);
    FieldElement one = FieldElement::one(f);
    FieldElement omega = -FieldElement::zeta_power(f, 2) - FieldElement::zeta_power(f, 3);

    auto mat = [&](std::initializer_list<FieldElement> vals) {
        Matrix m(f, 3, 3);
        int i = 0;
        for (const auto& v : vals) {
            m.at(i / 3, i % 3) = v;
            ++i;
        }
        return m;
    };
    FieldElement z = FieldElement::zero(f);
    Matrix g1 = mat({one, z, z, z, one, one, z, z, -one});
    Matrix g2 = mat({-one, z, z, omega, one, z, z, z, one});
    Matrix g3 = mat({one, omega, z, z, -one, z, z, one, one});

    std::vector<Covector> e{testutil::cov(f, 1, 0, 0), testutil::cov(f, 0, 1, 0),
                            testutil::cov(f, 0, 0, 1)};
    Arrangement orbit1 = orbit_arrangement(f, {g1, g2, g3}, e);
    CHECK(orbit1.size() == 15);

    Covector seed2{one, -FieldElement::zeta_power(f, 2), z};
    Arrangement orbit2 = orbit_arrangement(f, {g1, g2, g3}, {seed2});
    CHECK(orbit2.size() == 12);

    // The two orbits are disjoint.
    for (const auto& h : orbit2.hyperplanes()) CHECK(orbit1.index_of(h.normal) < 0);

    // Closure: applying any generator to any member stays inside.
    for (const auto& h : orbit1.hyperplanes()) {
        for (const auto& g : {g1, g2, g3}) {
            std::vector<FieldElement> row{h.normal[0], h.normal[1], h.normal[2]};
            auto img = g.row_times(row);
            CHECK(orbit1.index_of(Covector{img[0], img[1], img[2]}) >= 0);
        }
    }

    // Empty generator list keeps the seed alone.
    CHECK(orbit_arrangement(f, {}, {seed2}).size() == 1);
}

TEST_CASE("builtins") {
    Arrangement a = builtin("A_H3_27");
    CHECK(a.size() == 27);
    CHECK(a.field()->kind() == FieldKind::Cyclotomic);
    CHECK(a.field()->n() == 5);

    Arrangement b = builtin("B_F11_27");
    CHECK(b.size() == 27);
    CHECK(b.field()->kind() == FieldKind::Prime);
    CHECK(b[0].normal == cov(b.field(), 0, 0, 1));

    CHECK(builtin("B_F11_plus_7").size() == 34);
    CHECK_THROWS_AS(builtin("nonesuch"), UnknownName);

    auto names = builtin_names();
    CHECK(std::find(names.begin(), names.end(), "A_H3_27") != names.end());
}
