#include "arrfree/io.hpp"

#include <fstream>
#include <sstream>

namespace arrfree {

json scalar_to_json(const FieldElement& e) {
    switch (e.field()->kind()) {
        case FieldKind::Rational: return rational_to_string(e.rat());
        case FieldKind::Prime: return std::to_string(e.residue());
        case FieldKind::Cyclotomic: {
            json arr = json::array();
            for (const auto& q : e.coords()) arr.push_back(rational_to_string(q));
            return arr;
        }
    }
    throw ParseError("bad scalar");
}

FieldElement scalar_from_json(const FieldPtr& f, const json& j) {
    if (f->kind() == FieldKind::Cyclotomic) {
        if (!j.is_array() || j.size() != f->phi())
            throw ParseError("cyclotomic scalar must be an array of " + std::to_string(f->phi()) +
                             " rationals");
        std::vector<mpq_class> coords;
        for (const auto& s : j) coords.push_back(parse_rational(s.get<std::string>()));
        return FieldElement::from_coords(f, std::move(coords));
    }
    if (!j.is_string()) throw ParseError("scalar must be a string");
    return parse_scalar(f, j.get<std::string>());
}

json field_to_json(const FieldPtr& f) {
    switch (f->kind()) {
        case FieldKind::Rational: return json{{"kind", "rational"}};
        case FieldKind::Cyclotomic: return json{{"kind", "cyclotomic"}, {"n", f->n()}};
        case FieldKind::Prime: return json{{"kind", "prime"}, {"p", f->p()}};
    }
    throw ParseError("bad field");
}

FieldPtr field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("field: missing kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldDescriptor::rational();
    if (kind == "cyclotomic") {
        if (!j.contains("n")) throw ParseError("cyclotomic field: missing n");
        return FieldDescriptor::cyclotomic(j.at("n").get<unsigned>());
    }
    if (kind == "prime") {
        if (!j.contains("p")) throw ParseError("prime field: missing p");
        return FieldDescriptor::prime(j.at("p").get<unsigned long>());
    }
    throw ParseError("field: unknown kind '" + kind + "'");
}

static json covector_to_json(const Covector& v) {
    return json::array({scalar_to_json(v[0]), scalar_to_json(v[1]), scalar_to_json(v[2])});
}

static Covector covector_from_json(const FieldPtr& f, const json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("covector must have 3 entries");
    return Covector{scalar_from_json(f, j[0]), scalar_from_json(f, j[1]),
                    scalar_from_json(f, j[2])};
}

std::string emit_arrangement(const Arrangement& a) {
    json doc;
    doc["field"] = field_to_json(a.field());
    json planes = json::array();
    for (const auto& h : a.hyperplanes()) planes.push_back(covector_to_json(h.normal));
    doc["hyperplanes"] = planes;
    return doc.dump(2) + "\n";
}

Arrangement load_arrangement(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("arrangement file: ") + e.what());
    }
    if (!doc.contains("field") || !doc.contains("hyperplanes"))
        throw ParseError("arrangement file needs 'field' and 'hyperplanes'");
    FieldPtr f = field_from_json(doc.at("field"));
    std::vector<Covector> normals;
    for (const auto& j : doc.at("hyperplanes")) normals.push_back(covector_from_json(f, j));
    return make_arrangement(f, normals);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

Arrangement load_arrangement_file(const std::string& path) {
    return load_arrangement(read_file(path));
}

std::string canonical_hash(const Arrangement& a) {
    std::string text = emit_arrangement(a);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

json if_certificate_to_json(const IFCertificate& c) {
    json steps = json::array();
    for (const auto& s : c.steps) {
        steps.push_back(json{{"hyperplane", covector_to_json(s.deleted.normal)},
                             {"exp_deleted", s.exp_deleted},
                             {"exp_restriction", s.exp_restriction}});
    }
    return json{{"kind", "if-certificate"}, {"steps", steps}};
}

IFCertificate if_certificate_from_json(const FieldPtr& f, const json& j) {
    IFCertificate c;
    for (const auto& s : j.at("steps")) {
        IFStep step;
        step.deleted = Hyperplane{canonicalize_covector(covector_from_json(f, s.at("hyperplane")))};
        auto ed = s.at("exp_deleted");
        auto er = s.at("exp_restriction");
        if (ed.size() != 3 || er.size() != 2) throw ParseError("bad certificate step exponents");
        for (int i = 0; i < 3; ++i) step.exp_deleted[static_cast<std::size_t>(i)] = ed[i].get<long>();
        for (int i = 0; i < 2; ++i)
            step.exp_restriction[static_cast<std::size_t>(i)] = er[i].get<long>();
        c.steps.push_back(std::move(step));
    }
    return c;
}

json rf_certificate_to_json(const RFCertificate& c) {
    json steps = json::array();
    for (const auto& s : c.steps)
        steps.push_back(json{{"op", s.addition ? "add" : "del"},
                             {"hyperplane", covector_to_json(s.h.normal)}});
    return json{{"kind", "rf-certificate"},
                {"base", json::parse(emit_arrangement(c.base))},
                {"steps", steps}};
}

RFCertificate rf_certificate_from_json(const json& j) {
    Arrangement base = load_arrangement(j.at("base").dump());
    RFCertificate c{base, {}};
    for (const auto& s : j.at("steps")) {
        std::string op = s.at("op").get<std::string>();
        if (op != "add" && op != "del") throw ParseError("rf step op must be add or del");
        c.steps.push_back(RFStep{
            op == "add",
            Hyperplane{canonicalize_covector(covector_from_json(base.field(), s.at("hyperplane")))}});
    }
    return c;
}

std::array<Derivation3, 3> derivations_from_json(const FieldPtr& f, const json& j) {
    const auto& rows = j.at("derivations");
    if (!rows.is_array() || rows.size() != 3) throw ParseError("need exactly 3 derivations");
    auto parse_poly = [&](const json& terms) {
        Poly3 p(f);
        for (const auto& t : terms) {
            const auto& e = t.at("exp");
            if (e.size() != 3) throw ParseError("term exponent needs 3 entries");
            p.add_term({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()},
                       scalar_from_json(f, t.at("coeff")));
        }
        return p;
    };
    auto parse_derivation = [&](const json& row) {
        if (!row.is_array() || row.size() != 3) throw ParseError("derivation needs 3 components");
        return Derivation3{{parse_poly(row[0]), parse_poly(row[1]), parse_poly(row[2])}};
    };
    return {parse_derivation(rows[0]), parse_derivation(rows[1]), parse_derivation(rows[2])};
}

std::vector<Covector> covectors_from_json(const FieldPtr& f, const json& j) {
    std::vector<Covector> out;
    for (const auto& v : j.at("hyperplanes")) out.push_back(covector_from_json(f, v));
    return out;
}

json info_report(const Arrangement& a) {
    IntersectionLattice L = build_lattice(a);
    CharPoly chi = char_poly(L);
    auto exps = factor_exponents(chi);
    json rest = json::array(), pts = json::array();
    InvariantMultisets inv = invariants(a);
    for (int v : inv.restriction_sizes) rest.push_back(v);
    for (int v : inv.point_sizes) pts.push_back(v);
    json out{{"n", a.size()},
             {"flat_count", L.flats.size()},
             {"restriction_multiset", rest},
             {"point_multiset", pts},
             {"chi", json::array({chi.c[3].get_str(), chi.c[2].get_str(), chi.c[1].get_str(),
                                  chi.c[0].get_str()})},
             {"exponents", nullptr}};
    if (exps) out["exponents"] = *exps;
    return out;
}

json freeness_to_json(const FreenessReport& r) {
    json out{{"free", r.free},
             {"witness_hyperplane", r.witness_hyperplane},
             {"ziegler_exponents", json::array({r.ziegler_exponents.d1, r.ziegler_exponents.d2})},
             {"exponents", nullptr},
             {"chi_exponents", nullptr}};
    switch (r.reason) {
        case FreeReason::Free: out["reason"] = "FREE"; break;
        case FreeReason::ChiDoesNotSplit: out["reason"] = "CHI_DOES_NOT_SPLIT"; break;
        case FreeReason::ProductMismatch: out["reason"] = "PRODUCT_MISMATCH"; break;
    }
    if (r.exponents) out["exponents"] = *r.exponents;
    if (r.chi_exponents) out["chi_exponents"] = *r.chi_exponents;
    if (r.finite_field_criterion)
        out["note"] = "Ziegler/Yoshinaga criterion applied over a finite field; "
                      "saito-verify offers independent confirmation";
    return out;
}

json if_verdict_to_json(const IFVerdict& v) {
    json out{{"nodes_expanded", v.nodes_expanded}};
    switch (v.status) {
        case IFStatus::Yes:
            out["status"] = "YES";
            out["certificate"] = if_certificate_to_json(*v.certificate);
            break;
        case IFStatus::No: {
            out["status"] = "NO";
            const char* why = "EXHAUSTED";
            if (v.no_reason == IFNoReason::Lemma31) why = "LEMMA31";
            if (v.no_reason == IFNoReason::NotFreeRoot) why = "NOT_FREE";
            out["proof"] = why;
            if (v.lemma) {
                json sizes = json::array();
                for (int k : v.lemma->restriction_sizes) sizes.push_back(k);
                out["lemma"] = json{{"e", v.lemma->e},
                                    {"f", v.lemma->f},
                                    {"required_sizes", json::array({v.lemma->e + 1, v.lemma->f + 1})},
                                    {"observed_sizes", sizes}};
            }
            break;
        }
        case IFStatus::Unknown: out["status"] = "UNKNOWN"; break;
    }
    return out;
}

json step_report_to_json(const StepReport& r) {
    json dels = json::array();
    for (const auto& d : r.deletions)
        dels.push_back(json{{"index", d.index},
                            {"free", d.free},
                            {"restriction_size", d.restriction_size},
                            {"containment", d.containment},
                            {"admissible", d.admissible}});
    json adds = json::array();
    for (const auto& a : r.additions) {
        json e = json{{"hyperplane", covector_to_json(a.h.normal)},
                      {"free", a.free},
                      {"restriction_size", a.restriction_size},
                      {"containment", a.containment},
                      {"admissible", a.admissible},
                      {"decided_by", a.decided_by}};
        if (a.exp) e["exp"] = *a.exp;
        adds.push_back(std::move(e));
    }
    return json{{"deletions", dels},
                {"additions", adds},
                {"exhaustive_additions", r.exhaustive_additions}};
}

json obstruction_to_json(const ObstructionReport& r) {
    json adm = json::array();
    for (long v : r.bound.admissible_sizes) adm.push_back(v);
    return json{{"exponents", r.exponents},
                {"steps", step_report_to_json(r.steps)},
                {"low_incidence_bound",
                 json{{"zero_point_size", r.bound.zero_point_size},
                      {"one_point_min_size", r.bound.one_point_min_size},
                      {"admissible_sizes", adm},
                      {"certified", r.bound.certified},
                      {"by_enumeration", r.bound.by_enumeration}}}};
}

}  // namespace arrfree
