#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrfree/matrix.hpp"
#include "helpers.hpp"

using namespace arrfree;
using testutil::random_element;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_poly(5) == std::vector<mpz_class>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("field descriptors") {
    CHECK(FieldDescriptor::rational()->name() == "Q");
    CHECK(FieldDescriptor::prime(11)->name() == "F_11");
    CHECK(FieldDescriptor::cyclotomic(5)->phi() == 4);
    CHECK_THROWS_AS(FieldDescriptor::prime(12), Error);
}

TEST_CASE("zeta powers multiply by exponent addition") {
    FieldPtr f = FieldDescriptor::cyclotomic(5);
    FieldElement z2 = FieldElement::zeta_power(f, 2);
    FieldElement z3 = FieldElement::zeta_power(f, 3);
    CHECK((z3 * z2).is_one());
    FieldElement sum = FieldElement::zero(f);
    for (unsigned k = 0; k < 5; ++k) sum += FieldElement::zeta_power(f, k);
    CHECK(sum.is_zero());
}

TEST_CASE("golden ratio identity omega^2 = omega + 1") {
    FieldPtr f = FieldDescriptor::cyclotomic(5);
    FieldElement omega = -FieldElement::zeta_power(f, 2) - FieldElement::zeta_power(f, 3);
    CHECK(omega * omega == omega + FieldElement::one(f));
}

TEST_CASE("prime field inversion") {
    FieldPtr f = FieldDescriptor::prime(11);
    CHECK(FieldElement::from_int(f, 9).inv() == FieldElement::from_int(f, 5));
    CHECK_THROWS_AS(FieldElement::zero(f).inv(), DivisionByZero);
}

TEST_CASE("mismatched descriptors are rejected") {
    FieldElement a = FieldElement::one(FieldDescriptor::rational());
    FieldElement b = FieldElement::one(FieldDescriptor::prime(11));
    CHECK_THROWS_AS((void)(a + b), DescriptorMismatch);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240817);
    std::vector<FieldPtr> fields{FieldDescriptor::rational(), FieldDescriptor::cyclotomic(5),
                                 FieldDescriptor::prime(11)};
    for (const auto& f : fields) {
        for (int i = 0; i < 1000; ++i) {
            FieldElement a = random_element(rng, f);
            FieldElement b = random_element(rng, f);
            FieldElement c = random_element(rng, f);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + (-a) == FieldElement::zero(f));
            if (!a.is_zero()) REQUIRE(a * a.inv() == FieldElement::one(f));
        }
    }
}

TEST_CASE("cyclotomic canonical form is unique") {
    FieldPtr f = FieldDescriptor::cyclotomic(5);
    // zeta^4 = -1 - zeta - zeta^2 - zeta^3 after reduction mod Phi_5.
    FieldElement z4 = FieldElement::zeta_power(f, 4);
    FieldElement manual = FieldElement::from_coords(f, {-1, -1, -1, -1});
    CHECK(z4 == manual);
    CHECK(z4.str() == manual.str());
}

TEST_CASE("matrix rank") {
    FieldPtr q = FieldDescriptor::rational();
    CHECK(Matrix::identity(q, 3).rank() == 3);
    CHECK(Matrix(q, 3, 3).rank() == 0);

    // g1 of the H3 presentation is a reflection: g1 - I has rank 1.
    FieldPtr f = FieldDescriptor::cyclotomic(5);
    Matrix g1 = Matrix::identity(f, 3);
    g1.at(1, 2) = FieldElement::one(f);
    g1.at(2, 2) = -FieldElement::one(f);
    CHECK((g1 - Matrix::identity(f, 3)).rank() == 1);
}

TEST_CASE("matrix kernel") {
    FieldPtr q = FieldDescriptor::rational();
    CHECK(Matrix::identity(q, 2).kernel().empty());
    CHECK(Matrix(q, 2, 2).kernel().size() == 2);

    FieldPtr f11 = FieldDescriptor::prime(11);
    Matrix m(f11, 2, 2);
    m.at(0, 0) = FieldElement::from_int(f11, 1);
    m.at(0, 1) = FieldElement::from_int(f11, 1);
    m.at(1, 0) = FieldElement::from_int(f11, 2);
    m.at(1, 1) = FieldElement::from_int(f11, 2);
    auto ker = m.kernel();
    REQUIRE(ker.size() == 1);
    // Proportional to (1, 10): ratio second/first must be 10.
    REQUIRE(!ker[0][0].is_zero());
    CHECK(ker[0][1] / ker[0][0] == FieldElement::from_int(f11, 10));
}

TEST_CASE("kernel vectors annihilate and rank-nullity holds") {
    std::mt19937_64 rng(42);
    FieldPtr f = FieldDescriptor::prime(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> dim(1, 5);
        int rows = dim(rng), cols = dim(rng);
        Matrix m(f, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = random_element(rng, f);
        auto ker = m.kernel();
        REQUIRE(m.rank() + static_cast<int>(ker.size()) == cols);
        for (const auto& v : ker) {
            for (int i = 0; i < rows; ++i) {
                FieldElement s = FieldElement::zero(f);
                for (int j = 0; j < cols; ++j) s += m.at(i, j) * v[static_cast<std::size_t>(j)];
                REQUIRE(s.is_zero());
            }
        }
    }
}

TEST_CASE("scalar text round trips") {
    FieldPtr q = FieldDescriptor::rational();
    CHECK(rational_to_string(parse_rational("-3/4")) == "-3/4");
    CHECK(rational_to_string(parse_rational("6/4")) == "3/2");
    CHECK(parse_scalar(q, "0") == FieldElement::zero(q));
    CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
    CHECK_THROWS_AS(parse_scalar(FieldDescriptor::prime(11), "11"), ParseError);
}
