#include <CLI11.hpp>

#include <iostream>

#include "arrfree/io.hpp"
#include "arrfree/parallel.hpp"

using namespace arrfree;

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

Arrangement load_input(const std::string& source) {
    if (source.rfind("builtin:", 0) == 0) return builtin(source.substr(8));
    return load_arrangement_file(source);
}

struct Output {
    bool as_json = false;
    std::string out_path;

    void deliver(const json& doc, const std::string& human) const {
        std::string text = as_json ? doc.dump(2) + "\n" : human;
        if (out_path.empty())
            std::cout << text;
        else
            write_file(out_path, text);
    }
};

json report_header(const std::string& command, const Arrangement& a) {
    return json{{"version", kVersion}, {"command", command}, {"input_hash", canonical_hash(a)}};
}

std::string chi_string(const CharPoly& chi) {
    std::string s = "t^3";
    for (int d = 2; d >= 0; --d) {
        const mpz_class& c = chi.c[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        s += (c > 0 ? " + " : " - ");
        mpz_class ab = abs(c);
        s += ab.get_str();
        if (d == 2) s += " t^2";
        if (d == 1) s += " t";
    }
    return s;
}

std::string exp_string(const std::array<long, 3>& e) {
    return "{" + std::to_string(e[0]) + ", " + std::to_string(e[1]) + ", " +
           std::to_string(e[2]) + "}";
}

int cmd_info(const std::string& source, const Output& out) {
    Arrangement a = load_input(source);
    json doc = report_header("info", a);
    json body = info_report(a);
    doc.update(body);
    std::string human = "n = " + std::to_string(a.size()) + " over " + a.field()->name() +
                        "\nrank-2 flats: " + std::to_string(body["flat_count"].get<std::size_t>()) +
                        "\nrestriction multiset: " + body["restriction_multiset"].dump() +
                        "\npoint multiset: " + body["point_multiset"].dump() + "\nchi coefficients: " +
                        body["chi"].dump() + "\nexponents: " + body["exponents"].dump() + "\n";
    out.deliver(doc, human);
    return kExitPositive;
}

int cmd_chi(const std::string& source, const Output& out) {
    Arrangement a = load_input(source);
    CharPoly chi = char_poly(build_lattice(a));
    auto exps = factor_exponents(chi);
    json doc = report_header("chi", a);
    doc["chi"] = json::array({chi.c[3].get_str(), chi.c[2].get_str(), chi.c[1].get_str(),
                              chi.c[0].get_str()});
    doc["exponents"] = exps ? json(*exps) : json(nullptr);
    std::string human = "chi(t) = " + chi_string(chi) + "\n";
    human += exps ? "splits with exponents " + exp_string(*exps) + "\n"
                  : "does not split over the nonnegative integers\n";
    out.deliver(doc, human);
    return kExitPositive;
}

int cmd_free(const std::string& source, int witness, bool all_witnesses, const Output& out) {
    Arrangement a = load_input(source);
    json doc = report_header("free", a);
    bool free = true;
    if (all_witnesses) {
        json sweep = json::array();
        for (int w = 0; w < a.size(); ++w) {
            FreenessReport r = is_free_rank3(a, w);
            free = free && r.free;
            sweep.push_back(freeness_to_json(r));
        }
        doc["witness_sweep"] = sweep;
        doc["free"] = free;
        std::string human = std::string(free ? "free" : "NOT free") + " (all " +
                            std::to_string(a.size()) + " witnesses agree)\n";
        if (free) {
            auto e = sweep[0]["exponents"].get<std::array<long, 3>>();
            human += "exponents " + exp_string(e) + "\n";
        }
        out.deliver(doc, human);
    } else {
        FreenessReport r = is_free_rank3(a, witness);
        free = r.free;
        doc.update(freeness_to_json(r));
        std::string human;
        if (free) {
            human = "free, exponents " + exp_string(*r.exponents) + " (witness " +
                    std::to_string(witness) + ", Ziegler pair (" +
                    std::to_string(r.ziegler_exponents.d1) + "," +
                    std::to_string(r.ziegler_exponents.d2) + "))\n";
        } else {
            human = std::string("NOT free: ") +
                    (r.reason == FreeReason::ChiDoesNotSplit
                         ? "characteristic polynomial does not split"
                         : "chi split disagrees with the Ziegler pair") +
                    "\n";
        }
        out.deliver(doc, human);
    }
    return free ? kExitPositive : kExitNegative;
}

int cmd_indfree(const std::string& source, std::uint64_t budget, const Output& out) {
    Arrangement a = load_input(source);
    IFVerdict v = find_if_certificate(a, budget);
    json doc = report_header("indfree", a);
    doc.update(if_verdict_to_json(v));
    std::string human;
    switch (v.status) {
        case IFStatus::Yes:
            human = "inductively free (" + std::to_string(v.certificate->steps.size()) +
                    " deletions to rank 2)\n";
            break;
        case IFStatus::No:
            human = "NOT inductively free";
            if (v.no_reason == IFNoReason::Lemma31)
                human += " (no restriction has an admissible size)";
            if (v.no_reason == IFNoReason::NotFreeRoot) human += " (not even free)";
            if (v.no_reason == IFNoReason::Exhausted) human += " (all deletion chains fail)";
            human += "\n";
            break;
        case IFStatus::Unknown:
            human = "UNKNOWN: budget of " + std::to_string(budget) + " nodes exhausted\n";
            break;
    }
    out.deliver(doc, human);
    if (v.status == IFStatus::Yes) return kExitPositive;
    if (v.status == IFStatus::No) return kExitNegative;
    return kExitBudget;
}

int cmd_recfree_obstruct(const std::string& source, int threads, const Output& out) {
    Arrangement a = load_input(source);
    auto r = refute_recursive_freeness(a, threads);
    json doc = report_header("recfree-obstruct", a);
    doc["obstruction_found"] = static_cast<bool>(r);
    if (r) doc["obstruction"] = obstruction_to_json(*r);
    std::string human;
    if (r) {
        human = "local obstruction certified: NOT recursively free\n";
        human += "  deletions checked: " + std::to_string(r->steps.deletions.size()) + "\n";
        human += "  additions checked: " + std::to_string(r->steps.additions.size()) +
                 (r->steps.exhaustive_additions ? " (all of P^2)" : " (candidates)") + "\n";
        human += "  admissible restricted sizes: ";
        for (long s : r->bound.admissible_sizes) human += std::to_string(s) + " ";
        human += "\n  low-incidence sizes: " + std::to_string(r->bound.zero_point_size) +
                 " and >= " + std::to_string(r->bound.one_point_min_size) + "\n";
    } else {
        human = "no local obstruction (an admissible step exists or the bound fails); "
                "recursive freeness undecided\n";
    }
    out.deliver(doc, human);
    return r ? kExitPositive : kExitNegative;
}

int cmd_rf_verify(const std::string& cert_path, const std::string& target_source,
                  std::uint64_t budget, const Output& out) {
    RFCertificate cert = rf_certificate_from_json(json::parse(read_file(cert_path)));
    Arrangement target = load_input(target_source);
    std::string why;
    bool ok = verify_rf_certificate(cert, target, &why, budget);
    json doc = report_header("rf-verify", target);
    doc["verified"] = ok;
    if (!ok) doc["reason"] = why;
    out.deliver(doc, ok ? "certificate verified: recursively free\n"
                        : "certificate REJECTED: " + why + "\n");
    return ok ? kExitPositive : kExitNegative;
}

int cmd_rf_search(const std::string& source, std::uint64_t budget, int max_additions,
                  const std::string& hints_path, const std::string& cert_out, const Output& out) {
    Arrangement a = load_input(source);
    std::vector<Covector> hints;
    if (!hints_path.empty())
        hints = covectors_from_json(a.field(), json::parse(read_file(hints_path)));
    RFSearchResult r = search_rf_certificate(a, max_additions, budget, hints);
    json doc = report_header("rf-search", a);
    doc["nodes_expanded"] = r.nodes_expanded;
    doc["budget_exhausted"] = r.budget_exhausted;
    std::string human;
    if (r.certificate) {
        doc["certificate"] = rf_certificate_to_json(*r.certificate);
        std::string why;
        bool ok = verify_rf_certificate(*r.certificate, a, &why);
        doc["verified"] = ok;
        human = "certificate found (" + std::to_string(r.certificate->steps.size()) +
                " steps), verification " + (ok ? "passed" : "FAILED: " + why) + "\n";
        if (!cert_out.empty()) write_file(cert_out, rf_certificate_to_json(*r.certificate).dump(2) + "\n");
        out.deliver(doc, human);
        return ok ? kExitPositive : kExitNegative;
    }
    if (r.budget_exhausted) {
        out.deliver(doc, "UNKNOWN: search budget exhausted\n");
        return kExitBudget;
    }
    out.deliver(doc, "no certificate within " + std::to_string(max_additions) +
                         " additions; search space exhausted\n");
    return kExitNegative;
}

int cmd_iso(const std::string& s1, const std::string& s2, const Output& out) {
    Arrangement a = load_input(s1), b = load_input(s2);
    IntersectionLattice L1 = build_lattice(a), L2 = build_lattice(b);
    auto sigma = lattice_isomorphic(L1, L2);
    json doc{{"version", kVersion},
             {"command", "iso"},
             {"input_hashes", json::array({canonical_hash(a), canonical_hash(b)})}};
    doc["isomorphic"] = static_cast<bool>(sigma);
    std::string human;
    if (sigma) {
        bool checked = verify_lattice_bijection(L1, L2, *sigma);
        doc["bijection"] = *sigma;
        doc["verified"] = checked;
        human = "lattices isomorphic; bijection verified: " + std::string(checked ? "yes" : "NO") +
                "\nsigma =";
        for (int v : *sigma) human += " " + std::to_string(v);
        human += "\n";
        out.deliver(doc, human);
        return checked ? kExitPositive : kExitNegative;
    }
    out.deliver(doc, "lattices NOT isomorphic\n");
    return kExitNegative;
}

int cmd_candidates(const std::string& source, const Output& out) {
    Arrangement a = load_input(source);
    CandidateSet cs = candidate_hyperplanes(a);
    json doc = report_header("candidates", a);
    doc["count"] = cs.candidates.size();
    json list = json::array();
    for (const auto& c : cs.candidates)
        list.push_back(json{{"hyperplane", json::array({scalar_to_json(c.h.normal[0]),
                                                        scalar_to_json(c.h.normal[1]),
                                                        scalar_to_json(c.h.normal[2])})},
                            {"witness_flats", c.witness_flats}});
    doc["candidates"] = list;
    out.deliver(doc, std::to_string(cs.candidates.size()) + " candidate hyperplanes\n");
    return kExitPositive;
}

int cmd_builtins(const Output& out) {
    json doc{{"version", kVersion}, {"command", "builtins"}, {"names", builtin_names()}};
    std::string human;
    for (const auto& n : builtin_names()) human += n + "\n";
    out.deliver(doc, human);
    return kExitPositive;
}

int cmd_saito(const std::string& source, const std::string& basis_path, const Output& out) {
    Arrangement a = load_input(source);
    json jb = json::parse(read_file(basis_path));
    auto basis = derivations_from_json(a.field(), jb);
    bool ok = saito_verify(a, basis);
    json doc = report_header("saito", a);
    doc["basis_valid"] = ok;
    out.deliver(doc, ok ? "Saito criterion holds: the three derivations form a basis\n"
                        : "Saito criterion FAILS for the supplied derivations\n");
    return ok ? kExitPositive : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact freeness / inductive freeness / recursive freeness decisions "
                 "for central rank-3 hyperplane arrangements"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Output out;
    std::string in1, in2, hints_path, cert_out;
    int witness = 0;
    bool all_witnesses = false;
    std::uint64_t budget = 1'000'000;
    std::uint64_t rf_budget = 10'000;
    int max_additions = 8;
    int threads = default_threads();

    auto add_common = [&](CLI::App* c) {
        c->add_flag("--json", out.as_json, "emit a single JSON report");
        c->add_option("--out", out.out_path, "write the report to a file");
    };

    auto* c_info = app.add_subcommand("info", "lattice invariants and chi");
    c_info->add_option("arrangement", in1, "file path or builtin:NAME")->required();
    add_common(c_info);

    auto* c_chi = app.add_subcommand("chi", "characteristic polynomial and its split");
    c_chi->add_option("arrangement", in1)->required();
    add_common(c_chi);

    auto* c_free = app.add_subcommand("free", "freeness via the Ziegler pair criterion");
    c_free->add_option("arrangement", in1)->required();
    c_free->add_option("--witness", witness, "witness hyperplane index (default 0)");
    c_free->add_flag("--all-witnesses", all_witnesses, "sweep every witness as an audit");
    add_common(c_free);

    auto* c_if = app.add_subcommand("indfree", "inductive freeness search");
    c_if->add_option("arrangement", in1)->required();
    c_if->add_option("--budget", budget, "node budget (default 1000000)");
    add_common(c_if);

    auto* c_ro = app.add_subcommand("recfree-obstruct", "local obstruction to recursive freeness");
    c_ro->add_option("arrangement", in1)->required();
    c_ro->add_option("--threads", threads, "worker threads (default: all cores)");
    add_common(c_ro);

    auto* c_rv = app.add_subcommand("rf-verify", "verify a recursive-freeness certificate");
    c_rv->add_option("certificate", in2, "certificate JSON file")->required();
    c_rv->add_option("arrangement", in1, "target arrangement")->required();
    c_rv->add_option("--budget", budget, "inductive-freeness budget for the base");
    add_common(c_rv);

    auto* c_rs = app.add_subcommand("rf-search", "search for a recursive-freeness certificate");
    c_rs->add_option("arrangement", in1)->required();
    c_rs->add_option("--budget", rf_budget, "node budget (default 10000)");
    c_rs->add_option("--max-additions", max_additions, "backward addition limit (default 8)");
    c_rs->add_option("--hints", hints_path, "JSON file of hyperplanes to try first");
    c_rs->add_option("--cert-out", cert_out, "also write a found certificate here");
    add_common(c_rs);

    auto* c_iso = app.add_subcommand("iso", "intersection lattice isomorphism");
    c_iso->add_option("first", in1)->required();
    c_iso->add_option("second", in2)->required();
    add_common(c_iso);

    auto* c_cand = app.add_subcommand("candidates", "hyperplanes through two rank-2 flats");
    c_cand->add_option("arrangement", in1)->required();
    add_common(c_cand);

    auto* c_b = app.add_subcommand("builtins", "list built-in arrangements");
    add_common(c_b);

    auto* c_saito = app.add_subcommand("saito", "check a user-supplied derivation basis");
    c_saito->add_option("arrangement", in1)->required();
    c_saito->add_option("basis", in2, "derivations JSON file")->required();
    add_common(c_saito);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : kExitUsage;
    }

    try {
        if (c_info->parsed()) return cmd_info(in1, out);
        if (c_chi->parsed()) return cmd_chi(in1, out);
        if (c_free->parsed()) return cmd_free(in1, witness, all_witnesses, out);
        if (c_if->parsed()) return cmd_indfree(in1, budget, out);
        if (c_ro->parsed()) return cmd_recfree_obstruct(in1, threads, out);
        if (c_rv->parsed()) return cmd_rf_verify(in2, in1, budget, out);
        if (c_rs->parsed()) return cmd_rf_search(in1, rf_budget, max_additions, hints_path, cert_out, out);
        if (c_iso->parsed()) return cmd_iso(in1, in2, out);
        if (c_cand->parsed()) return cmd_candidates(in1, out);
        if (c_b->parsed()) return cmd_builtins(out);
        if (c_saito->parsed()) return cmd_saito(in1, in2, out);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
