#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>

#include "arrfree/induction.hpp"
#include "arrfree/io.hpp"
#include "helpers.hpp"

using namespace arrfree;
using testutil::arr;
using testutil::boolean3;

namespace {

int run_cli(const std::string& args, std::string* output = nullptr) {
    std::string cmd = std::string(ARRFREE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) text.append(buf, got);
    int status = pclose(pipe);
    if (output) *output = text;
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("scalar serialization round trips") {
    FieldPtr q = FieldDescriptor::rational();
    FieldPtr z5 = FieldDescriptor::cyclotomic(5);
    FieldPtr f11 = FieldDescriptor::prime(11);

    FieldElement a = FieldElement::from_mpq(q, mpq_class(-7, 3));
    CHECK(scalar_from_json(q, scalar_to_json(a)) == a);

    FieldElement w = -FieldElement::zeta_power(z5, 2) - FieldElement::zeta_power(z5, 3);
    CHECK(scalar_from_json(z5, scalar_to_json(w)) == w);
    CHECK(scalar_to_json(w).size() == 4);

    FieldElement p = FieldElement::from_int(f11, 9);
    CHECK(scalar_from_json(f11, scalar_to_json(p)) == p);

    CHECK_THROWS_AS(scalar_from_json(z5, json::array({"1"})), ParseError);
}

TEST_CASE("field serialization") {
    for (const auto& f : {FieldDescriptor::rational(), FieldDescriptor::cyclotomic(5),
                          FieldDescriptor::prime(11)}) {
        FieldPtr back = field_from_json(field_to_json(f));
        CHECK(back->same(*f));
    }
    CHECK_THROWS_AS(field_from_json(json{{"kind", "complex"}}), ParseError);
}

TEST_CASE("arrangement emission is a bit-exact fixed point") {
    for (const auto& name : builtin_names()) {
        Arrangement a = builtin(name);
        std::string text = emit_arrangement(a);
        Arrangement back = load_arrangement(text);
        REQUIRE(emit_arrangement(back) == text);
        REQUIRE(back.size() == a.size());
        REQUIRE(canonical_hash(back) == canonical_hash(a));
    }
}

TEST_CASE("loader rejects malformed input") {
    CHECK_THROWS_AS(load_arrangement("{"), ParseError);
    CHECK_THROWS_AS(load_arrangement("{}"), ParseError);
    CHECK_THROWS_AS(load_arrangement(R"({"field":{"kind":"prime","p":11},"hyperplanes":[["1","2"]]})"),
                    ParseError);
}

TEST_CASE("certificate JSON round trips") {
    Arrangement b7 = builtin("B_F11_plus_7");
    IFVerdict v = find_if_certificate(b7);
    REQUIRE(v.status == IFStatus::Yes);
    json j = if_certificate_to_json(*v.certificate);
    IFCertificate back = if_certificate_from_json(b7.field(), j);
    CHECK(verify_if_certificate(b7, back));

    FieldPtr q = FieldDescriptor::rational();
    RFCertificate rf{arr(q, {{1, 0, 0}, {0, 1, 0}}),
                     {RFStep{true, Hyperplane{testutil::cov(q, 0, 0, 1)}}}};
    RFCertificate rf_back = rf_certificate_from_json(rf_certificate_to_json(rf));
    std::string why;
    CHECK(verify_rf_certificate(rf_back, boolean3(), &why));
}

TEST_CASE("derivation files parse") {
    FieldPtr q = FieldDescriptor::rational();
    json basis = json::parse(R"({
      "derivations": [
        [[{"coeff":"1","exp":[1,0,0]}], [], []],
        [[], [{"coeff":"1","exp":[0,1,0]}], []],
        [[], [], [{"coeff":"1","exp":[0,0,1]}]]
      ]})");
    auto ders = derivations_from_json(q, basis);
    CHECK(saito_verify(boolean3(), ders));
}

TEST_CASE("info report schema") {
    json r = info_report(builtin("A_H3_27"));
    CHECK(r["n"] == 27);
    CHECK(r["flat_count"] == 91);
    CHECK(r["chi"] == json::array({"1", "-27", "191", "-165"}));
    CHECK(r["exponents"] == json::array({1, 11, 15}));
}

TEST_CASE("cli verdict exit codes") {
    CHECK(run_cli("free builtin:A_H3_27") == 0);
    CHECK(run_cli("indfree builtin:A_H3_27") == 1);
    CHECK(run_cli("iso builtin:A_H3_27 builtin:B_F11_27") == 0);
    CHECK(run_cli("free builtin:nonesuch") == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("indfree builtin:B_F11_plus_7 --budget 3") == 3);
}

TEST_CASE("cli json and human outputs agree") {
    std::string human, js;
    int code_h = run_cli("free builtin:A_H3_27", &human);
    int code_j = run_cli("free builtin:A_H3_27 --json", &js);
    CHECK(code_h == code_j);
    json doc = json::parse(js);
    CHECK(doc["free"] == true);
    CHECK(doc["exponents"] == json::array({1, 11, 15}));
    CHECK(doc["version"] == kVersion);
    CHECK(human.find("free") != std::string::npos);
}

TEST_CASE("cli file input and --out") {
    Arrangement a = boolean3();
    std::string in_path = "/tmp/arrfree_test_b3.json";
    std::string out_path = "/tmp/arrfree_test_b3_report.json";
    write_file(in_path, emit_arrangement(a));
    CHECK(run_cli("chi " + in_path + " --json --out " + out_path) == 0);
    json doc = json::parse(read_file(out_path));
    CHECK(doc["exponents"] == json::array({1, 1, 1}));
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
}
