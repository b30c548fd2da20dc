// gvk: exact transforms between GW / GV / QK invariant tables, with
// validation, integrality auditing, and characteristic-class cross-checks.
//
// Exit codes: 0 success, 1 validation failure, 2 math-contract failure,
// 3 I/O failure.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gvk/arith.hpp"
#include "gvk/char_ring.hpp"
#include "gvk/errors.hpp"
#include "gvk/transforms.hpp"
#include "gvk/workspace.hpp"

namespace {

using gvk::Int;
using gvk::Rat;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitContract = 2;
constexpr int kExitIo = 3;

struct Output {
    bool quiet = false;
    bool as_json = false;

    void human(const std::string& line) const {
        if (!quiet && !as_json) std::cout << line << "\n";
    }
    void machine(const json& doc) const {
        if (as_json) std::cout << doc.dump(2) << "\n";
    }
};

json issues_to_json(const std::vector<gvk::ValidationIssue>& issues) {
    json out = json::array();
    for (const auto& issue : issues)
        out.push_back(json{{"where", issue.where}, {"message", issue.message}});
    return out;
}

json coords_json(const gvk::CurveClass& beta) {
    json out = json::array();
    for (const Int& c : beta.coords()) {
        if (c.fits_slong_p())
            out.push_back(static_cast<long long>(c.get_si()));
        else
            out.push_back(c.get_str());
    }
    return out;
}

int run_validate(const std::string& path, const Output& out) {
    const auto issues = gvk::validate_workspace_file(path);
    json doc;
    doc["command"] = "validate";
    doc["file"] = path;
    doc["ok"] = issues.empty();
    doc["issues"] = issues_to_json(issues);
    if (issues.empty()) {
        out.human("ok: " + path);
    } else {
        for (const auto& issue : issues)
            out.human(issue.where + ": " + issue.message);
    }
    out.machine(doc);
    return issues.empty() ? kExitOk : kExitValidation;
}

int run_transform(const std::string& path, const std::string& from_name,
                  const std::string& to_name, int table_index,
                  const std::string& out_path, const std::string& report_path,
                  const Output& out) {
    const gvk::TableKind from = gvk::kind_from_name(from_name);
    const gvk::TableKind to = gvk::kind_from_name(to_name);
    gvk::Workspace ws = gvk::load_workspace(path);

    int index = table_index;
    if (index < 0) {
        for (std::size_t i = 0; i < ws.tables.size(); ++i)
            if (ws.tables[i].kind == from) {
                index = static_cast<int>(i);
                break;
            }
        if (index < 0) {
            std::cerr << "error: no " << from_name << " table in " << path << "\n";
            return kExitValidation;
        }
    }
    if (index >= static_cast<int>(ws.tables.size())) {
        std::cerr << "error: table index " << index << " out of range\n";
        return kExitValidation;
    }
    const gvk::InvariantTable& input = ws.tables[index];

    gvk::TransformReport report;
    gvk::InvariantTable result = input;
    try {
        if (from == gvk::TableKind::GV && to == gvk::TableKind::GW)
            result = gvk::gw_from_gv(input, &report);
        else if (from == gvk::TableKind::GW && to == gvk::TableKind::GV)
            result = gvk::gv_from_gw(input, &report);
        else if (from == gvk::TableKind::GV && to == gvk::TableKind::QK)
            result = gvk::qk_from_gv(input, &report);
        else if (from == gvk::TableKind::QK && to == gvk::TableKind::GV)
            result = gvk::gv_from_qk(input, &report);
        else {
            std::cerr << "error: unsupported transform " << from_name << " -> "
                      << to_name
                      << " (supported: GV->GW, GW->GV, GV->QK, QK->GV)\n";
            return kExitValidation;
        }
    } catch (const gvk::UnsupportedN& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const gvk::DegreeHypothesisViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    gvk::Workspace out_ws = ws;
    out_ws.tables.clear();
    out_ws.tables.push_back(result);
    if (!out_path.empty()) {
        gvk::save_workspace(out_ws, out_path);
        out.human("wrote " + out_path);
    } else {
        std::cout << gvk::workspace_to_json(out_ws).dump(2) << "\n";
    }
    if (!report_path.empty()) {
        std::ofstream rf(report_path);
        if (!rf) throw gvk::IoError("cannot open " + report_path + " for writing");
        rf << gvk::report_to_json(report).dump(2) << "\n";
        if (!rf) throw gvk::IoError("cannot write " + report_path);
        out.human("wrote report " + report_path);
    }
    if (!out.quiet && !out_path.empty())
        std::cout << gvk::report_to_text(report);
    return kExitOk;
}

int run_check_integrality(const gvk::Workspace& ws, json& doc, const Output& out) {
    json failures = json::array();
    for (std::size_t i = 0; i < ws.tables.size(); ++i) {
        for (const auto& offender : gvk::integrality_audit(ws.tables[i])) {
            failures.push_back(json{{"table", i},
                                    {"kind", gvk::kind_name(ws.tables[i].kind)},
                                    {"class", coords_json(offender.beta)},
                                    {"value", gvk::rat_to_string(offender.value)}});
            out.human("tables[" + std::to_string(i) + "] " +
                      offender.beta.to_string() + " = " +
                      gvk::rat_to_string(offender.value) + " is not an integer");
        }
    }
    doc["failures"] = failures;
    doc["ok"] = failures.empty();
    if (failures.empty()) out.human("all entries integral");
    return failures.empty() ? kExitOk : kExitValidation;
}

int run_check_roundtrip(const gvk::Workspace& ws, json& doc, const Output& out) {
    json failures = json::array();
    json skipped = json::array();
    auto compare = [&](const gvk::InvariantTable& a, const gvk::InvariantTable& b,
                       std::size_t index, const std::string& what) {
        if (a.entries == b.entries) return;
        for (const auto& [beta, value] : a.entries) {
            const auto it = b.entries.find(beta);
            if (it != b.entries.end() && it->second == value) continue;
            failures.push_back(
                json{{"table", index},
                     {"trip", what},
                     {"class", coords_json(beta)},
                     {"expected", gvk::rat_to_string(value)},
                     {"got", it == b.entries.end() ? std::string("missing")
                                                   : gvk::rat_to_string(it->second)}});
        }
    };
    for (std::size_t i = 0; i < ws.tables.size(); ++i) {
        const auto& t = ws.tables[i];
        try {
            switch (t.kind) {
                case gvk::TableKind::GV: {
                    compare(t, gvk::gv_from_gw(gvk::gw_from_gv(t)), i, "GV->GW->GV");
                    if (t.n >= 1)
                        compare(t, gvk::gv_from_qk(gvk::qk_from_gv(t)), i,
                                "GV->QK->GV");
                    break;
                }
                case gvk::TableKind::GW:
                    compare(t, gvk::gw_from_gv(gvk::gv_from_gw(t)), i, "GW->GV->GW");
                    break;
                case gvk::TableKind::QK:
                    compare(t, gvk::qk_from_gv(gvk::gv_from_qk(t)), i, "QK->GV->QK");
                    break;
            }
        } catch (const gvk::UnsupportedN& e) {
            skipped.push_back(json{{"table", i}, {"reason", e.what()}});
        } catch (const gvk::DegreeHypothesisViolated& e) {
            skipped.push_back(json{{"table", i}, {"reason", e.what()}});
        }
    }
    doc["failures"] = failures;
    doc["skipped"] = skipped;
    doc["ok"] = failures.empty();
    out.human(failures.empty() ? "all round trips exact"
                               : "round-trip mismatches found");
    return failures.empty() ? kExitOk : kExitContract;
}

int run_check_remark(const gvk::Workspace& ws, const Int& dmax, json& doc,
                     const Output& out) {
    const gvk::InvariantTable* gv = nullptr;
    for (const auto& t : ws.tables)
        if (t.kind == gvk::TableKind::GV && t.n == 0) {
            gv = &t;
            break;
        }
    if (!gv) {
        std::cerr << "error: the identity check needs a GV table with n = 0\n";
        return kExitValidation;
    }
    const gvk::InvariantTable gw = gvk::gw_from_gv(*gv);
    // The divisor used for the pairing is the truncation degree functional.
    const auto pairing = [&](const gvk::CurveClass& beta) {
        return ws.truncation.degree(beta);
    };
    const auto verdict = gvk::leg_coefficient_identity_check(*gv, gw, pairing, dmax);
    doc["ok"] = verdict.ok;
    doc["dmax"] = static_cast<long long>(dmax.get_si());
    if (!verdict.ok) doc["detail"] = verdict.detail;
    out.human(verdict.ok ? "leg-coefficient identity holds"
                         : "leg-coefficient identity FAILED: " + verdict.detail);
    return verdict.ok ? kExitOk : kExitContract;
}

int run_check_arith(const Int& exact_max, const Int& float_max, json& doc,
                    const Output& out) {
    json failures = json::array();
    for (Int r = 1; r <= exact_max; ++r) {
        Int phi_sum = 0;
        Int mu_sum = 0;
        for (const Int& k : gvk::divisors(r)) {
            phi_sum += gvk::euler_phi(k);
            mu_sum += gvk::mobius(k);
        }
        if (phi_sum != r)
            failures.push_back(json{{"identity", "sum_phi"}, {"r", r.get_str()}});
        if (mu_sum != (r == 1 ? 1 : 0))
            failures.push_back(json{{"identity", "sum_mu"}, {"r", r.get_str()}});
    }
    for (Int r = 1; r <= float_max; ++r) {
        const auto s1 = gvk::primitive_root_sum(r, 1);
        const auto s0 = gvk::primitive_root_sum(r, 0);
        if (std::abs(s1 - std::complex<double>(gvk::mobius(r), 0.0)) >= 1e-9)
            failures.push_back(json{{"identity", "root_sum_mu"}, {"r", r.get_str()}});
        if (std::abs(s0 - std::complex<double>(gvk::euler_phi(r).get_d(), 0.0)) >=
            1e-9)
            failures.push_back(json{{"identity", "root_sum_phi"}, {"r", r.get_str()}});
        if (r >= 2) {
            const auto prod = gvk::cyclotomic_norm_product(r);
            if (std::abs(prod - std::complex<double>(r.get_d(), 0.0)) / r.get_d() >=
                1e-9)
                failures.push_back(
                    json{{"identity", "cyclotomic_product"}, {"r", r.get_str()}});
        }
    }
    doc["failures"] = failures;
    doc["ok"] = failures.empty();
    doc["exact_max"] = exact_max.get_str();
    doc["float_max"] = float_max.get_str();
    out.human(failures.empty() ? "divisor-sum and root-of-unity identities hold"
                               : "arithmetic identity FAILED");
    return failures.empty() ? kExitOk : kExitContract;
}

int run_hrr(const std::string& path, long bundle, const Output& out) {
    gvk::Workspace ws = gvk::load_workspace(path);
    if (!ws.ring || !ws.ring_spec) {
        std::cerr << "error: hrr requires a ring block\n";
        return kExitValidation;
    }
    if (!std::holds_alternative<gvk::BuiltinPnRing>(*ws.ring_spec)) {
        std::cerr << "error: hrr requires a built-in projective-space ring\n";
        return kExitValidation;
    }
    const auto& ring = *ws.ring;
    const int n = ring.dimension();
    gvk::RingElem divisor = ring.zero();
    divisor[1] = bundle;  // k * H
    const Rat chi =
        gvk::k_pairing(ring, gvk::ch_exp(ring, divisor), ring.unit());
    const Int expected = gvk::binomial(Int(n + bundle), n);
    json doc;
    doc["command"] = "hrr";
    doc["ring"] = ring.label();
    doc["bundle"] = bundle;
    doc["euler_characteristic"] = gvk::rat_to_string(chi);
    doc["binomial_check"] = expected.get_str();
    doc["ok"] = (chi == Rat(expected));
    out.human("chi(" + ring.label() + ", O(" + std::to_string(bundle) +
              ")) = " + gvk::rat_to_string(chi) + ", binomial check " +
              expected.get_str());
    out.machine(doc);
    return chi == Rat(expected) ? kExitOk : kExitContract;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact GW / GV / QK invariant-table transforms"};
    app.require_subcommand(1);
    app.fallthrough();  // --json / --quiet may follow the subcommand

    Output out;
    app.add_flag("--json", out.as_json, "machine-readable JSON verdicts on stdout");
    app.add_flag("--quiet", out.quiet, "suppress human-readable text");

    auto* validate = app.add_subcommand("validate", "validate a workspace file");
    std::string validate_file;
    validate->add_option("file", validate_file, "workspace JSON file")->required();

    auto* transform =
        app.add_subcommand("transform", "transform a table between kinds");
    std::string tf_file, tf_from, tf_to, tf_out, tf_report;
    int tf_table = -1;
    transform->add_option("file", tf_file, "workspace JSON file")->required();
    transform->add_option("--from", tf_from, "input kind (GV, GW, QK)")->required();
    transform->add_option("--to", tf_to, "output kind (GV, GW, QK)")->required();
    transform->add_option("--table", tf_table,
                          "table index (default: first of the input kind)");
    transform->add_option("--out", tf_out, "output file (default: stdout)");
    transform->add_option("--report", tf_report, "write the contribution report (JSON)");

    auto* check = app.add_subcommand("check", "run consistency checks");
    std::string check_file;
    bool chk_integrality = false, chk_roundtrip = false, chk_remark = false,
         chk_arith = false;
    long chk_dmax = 6, chk_exact_max = 10000, chk_float_max = 200;
    check->add_option("file", check_file,
                      "workspace JSON file (not needed for --arith-identities)");
    check->add_flag("--integrality", chk_integrality,
                    "flag non-integer entries in every table");
    check->add_flag("--roundtrip", chk_roundtrip,
                    "verify the forward/inverse transform round trips");
    check->add_flag("--remark-identity", chk_remark,
                    "verify the power-sum leg-coefficient identity (n = 0 GV table)");
    check->add_flag("--arith-identities", chk_arith,
                    "verify the divisor-sum and root-of-unity identities");
    check->add_option("--dmax", chk_dmax, "multiple bound for --remark-identity");
    check->add_option("--exact-max", chk_exact_max,
                      "bound for the exact identities in --arith-identities");
    check->add_option("--float-max", chk_float_max,
                      "bound for the root-of-unity bridge in --arith-identities");

    auto* hrr = app.add_subcommand(
        "hrr", "Euler characteristic of O(k) via the K-pairing, with binomial check");
    std::string hrr_file;
    long hrr_bundle = 0;
    hrr->add_option("file", hrr_file, "workspace JSON file")->required();
    hrr->add_option("--bundle", hrr_bundle, "twist k of the line bundle O(k)")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(validate_file, out);
        if (transform->parsed())
            return run_transform(tf_file, tf_from, tf_to, tf_table, tf_out,
                                 tf_report, out);
        if (check->parsed()) {
            const int modes = int(chk_integrality) + int(chk_roundtrip) +
                              int(chk_remark) + int(chk_arith);
            if (modes != 1) {
                std::cerr << "error: pick exactly one of --integrality, --roundtrip, "
                             "--remark-identity, --arith-identities\n";
                return kExitValidation;
            }
            json doc;
            doc["command"] = "check";
            int code = kExitOk;
            if (chk_arith) {
                doc["mode"] = "arith-identities";
                code = run_check_arith(Int(chk_exact_max), Int(chk_float_max), doc, out);
            } else {
                if (check_file.empty()) {
                    std::cerr << "error: this check needs a workspace file\n";
                    return kExitValidation;
                }
                const gvk::Workspace ws = gvk::load_workspace(check_file);
                if (chk_integrality) {
                    doc["mode"] = "integrality";
                    code = run_check_integrality(ws, doc, out);
                } else if (chk_roundtrip) {
                    doc["mode"] = "roundtrip";
                    code = run_check_roundtrip(ws, doc, out);
                } else {
                    doc["mode"] = "remark-identity";
                    code = run_check_remark(ws, Int(chk_dmax), doc, out);
                }
            }
            out.machine(doc);
            return code;
        }
        if (hrr->parsed()) return run_hrr(hrr_file, hrr_bundle, out);
    } catch (const gvk::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const gvk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
