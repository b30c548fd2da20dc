#include "gvk/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gvk/errors.hpp"

namespace gvk {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key))
            throw ParseError(where + ": unknown field \"" + key + "\"");
    }
}

const json& require_field(const json& obj, const char* key,
                          const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

void require_object(const json& v, const std::string& where) {
    if (!v.is_object()) throw ParseError(where + ": expected an object");
}

void require_array(const json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array");
}

std::string parse_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where + ": expected a string");
    return v.get<std::string>();
}

Int parse_int(const json& v, const std::string& where) {
    if (v.is_number_float())
        throw ParseError(where + ": floats are not allowed in data files");
    if (v.is_number_unsigned()) return Int(std::to_string(v.get<unsigned long long>()));
    if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
    if (v.is_string()) return int_from_string(v.get<std::string>());
    throw ParseError(where + ": expected an integer (number or string)");
}

int parse_small_int(const json& v, const std::string& where) {
    const Int i = parse_int(v, where);
    if (!i.fits_sint_p()) throw ParseError(where + ": integer out of range");
    return static_cast<int>(i.get_si());
}

Rat parse_rat(const json& v, const std::string& where) {
    if (!v.is_string())
        throw ParseError(where +
                         ": rationals must be strings like \"3\" or \"-9/8\"");
    try {
        return rat_from_string(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

std::vector<Int> parse_int_vector(const json& v, const std::string& where) {
    require_array(v, where);
    std::vector<Int> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_int(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

GeometryModel parse_geometry(const json& v) {
    const std::string where = "geometry";
    require_object(v, where);
    reject_unknown_keys(v, {"label", "rank", "dim", "canonical_pairing"}, where);
    return GeometryModel(
        parse_string(require_field(v, "label", where), where + ".label"),
        parse_small_int(require_field(v, "rank", where), where + ".rank"),
        parse_small_int(require_field(v, "dim", where), where + ".dim"),
        parse_int_vector(require_field(v, "canonical_pairing", where),
                         where + ".canonical_pairing"));
}

Truncation parse_truncation(const json& v) {
    const std::string where = "truncation";
    require_object(v, where);
    reject_unknown_keys(v, {"weights", "cutoff"}, where);
    return Truncation(
        parse_int_vector(require_field(v, "weights", where), where + ".weights"),
        parse_int(require_field(v, "cutoff", where), where + ".cutoff"));
}

InvariantTable parse_table(const json& v, const GeometryModel& geom,
                           const Truncation& trunc, const std::string& where) {
    require_object(v, where);
    reject_unknown_keys(v, {"kind", "n", "insertion_degrees", "entries"}, where);
    InvariantTable table{
        kind_from_name(parse_string(require_field(v, "kind", where), where + ".kind")),
        parse_small_int(require_field(v, "n", where), where + ".n"),
        {},
        geom,
        trunc,
        {}};
    const json& degrees = require_field(v, "insertion_degrees", where);
    require_array(degrees, where + ".insertion_degrees");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const std::string dw = where + ".insertion_degrees[" + std::to_string(i) + "]";
        const int real_degree = parse_small_int(degrees[i], dw);
        if (real_degree < 0) throw ParseError(dw + ": negative insertion degree");
        // Cohomological degrees; only even-degree classes are admitted.
        if (real_degree % 2 != 0)
            throw ParseError(dw + ": odd insertion degree " +
                             std::to_string(real_degree));
        table.insertion_degrees.push_back(real_degree / 2);
    }
    const json& entries = require_field(v, "entries", where);
    require_array(entries, where + ".entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string ew = where + ".entries[" + std::to_string(i) + "]";
        const json& pair = entries[i];
        require_array(pair, ew);
        if (pair.size() != 2)
            throw ParseError(ew + ": expected [coordinates, rational]");
        CurveClass beta(parse_int_vector(pair[0], ew + ".class"));
        Rat value = parse_rat(pair[1], ew + ".value");
        if (table.entries.contains(beta))
            throw ParseError(ew + ": duplicate class " + beta.to_string());
        table.entries.emplace(std::move(beta), std::move(value));
    }
    table.validate();
    return table;
}

std::pair<RingSpec, GradedRingModel> parse_ring(const json& v) {
    const std::string where = "ring";
    require_object(v, where);
    if (v.contains("builtin")) {
        const std::string name =
            parse_string(require_field(v, "builtin", where), where + ".builtin");
        if (name == "P1" || name == "P2" || name == "P3" || name == "P4") {
            reject_unknown_keys(v, {"builtin"}, where);
            const int n = name[1] - '0';
            return {BuiltinPnRing{n}, projective_space_ring(n)};
        }
        if (name == "CY3") {
            reject_unknown_keys(v, {"builtin", "triple_degree", "c2", "c3"}, where);
            Int triple = 5, c2 = 10, c3 = -40;
            if (v.contains("triple_degree"))
                triple = parse_int(v["triple_degree"], where + ".triple_degree");
            if (v.contains("c2")) c2 = parse_int(v["c2"], where + ".c2");
            if (v.contains("c3")) c3 = parse_int(v["c3"], where + ".c3");
            return {BuiltinCy3Ring{triple, c2, c3}, cy3_ring(triple, c2, c3)};
        }
        throw ParseError(where + ": unknown builtin ring \"" + name + "\"");
    }
    reject_unknown_keys(v, {"label", "basis", "products", "top", "tangent_chern"},
                        where);
    std::vector<BasisClass> basis;
    const json& jbasis = require_field(v, "basis", where);
    require_array(jbasis, where + ".basis");
    for (std::size_t i = 0; i < jbasis.size(); ++i) {
        const std::string bw = where + ".basis[" + std::to_string(i) + "]";
        require_object(jbasis[i], bw);
        reject_unknown_keys(jbasis[i], {"name", "degree"}, bw);
        basis.push_back({parse_string(require_field(jbasis[i], "name", bw), bw),
                         parse_small_int(require_field(jbasis[i], "degree", bw), bw)});
    }
    const int s = static_cast<int>(basis.size());
    std::vector<std::vector<RingElem>> products(
        s, std::vector<RingElem>(s, RingElem(s, Rat(0))));
    const json& jprod = require_field(v, "products", where);
    require_array(jprod, where + ".products");
    for (std::size_t i = 0; i < jprod.size(); ++i) {
        const std::string pw = where + ".products[" + std::to_string(i) + "]";
        const json& row = jprod[i];
        require_array(row, pw);
        if (row.size() != 3) throw ParseError(pw + ": expected [i, j, terms]");
        const int a = parse_small_int(row[0], pw + "[0]");
        const int b = parse_small_int(row[1], pw + "[1]");
        if (a < 0 || a >= s || b < 0 || b >= s)
            throw ParseError(pw + ": basis index out of range");
        require_array(row[2], pw + "[2]");
        RingElem prod(s, Rat(0));
        for (const json& term : row[2]) {
            require_array(term, pw + " term");
            if (term.size() != 2)
                throw ParseError(pw + ": product term must be [index, coefficient]");
            const int k = parse_small_int(term[0], pw + " term index");
            if (k < 0 || k >= s) throw ParseError(pw + ": term index out of range");
            prod[k] = parse_rat(term[1], pw + " term coefficient");
        }
        products[a][b] = prod;
        products[b][a] = std::move(prod);
    }
    const int top = parse_small_int(require_field(v, "top", where), where + ".top");
    std::vector<RingElem> chern;
    const json& jchern = require_field(v, "tangent_chern", where);
    require_array(jchern, where + ".tangent_chern");
    for (std::size_t k = 0; k < jchern.size(); ++k) {
        const std::string cw = where + ".tangent_chern[" + std::to_string(k) + "]";
        require_array(jchern[k], cw);
        if (static_cast<int>(jchern[k].size()) != s)
            throw ParseError(cw + ": expected " + std::to_string(s) + " coordinates");
        RingElem c(s, Rat(0));
        for (int idx = 0; idx < s; ++idx)
            c[idx] = parse_rat(jchern[k][idx], cw + "[" + std::to_string(idx) + "]");
        chern.push_back(std::move(c));
    }
    std::string label = v.contains("label")
                            ? parse_string(v["label"], where + ".label")
                            : std::string("ring");
    try {
        return {ExplicitRing{}, GradedRingModel::make(std::move(label), std::move(basis),
                                                      std::move(products), top,
                                                      std::move(chern))};
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

std::pair<KClassSpec, KClassModel> parse_kclasses(const json& v,
                                                  const GradedRingModel& ring) {
    const std::string where = "kclasses";
    require_object(v, where);
    if (v.contains("builtin")) {
        reject_unknown_keys(v, {"builtin"}, where);
        const std::string name = parse_string(v["builtin"], where + ".builtin");
        if (name != "line-bundles")
            throw ParseError(where + ": unknown builtin K-basis \"" + name + "\"");
        return {BuiltinLineBundles{}, projective_space_line_bundles(ring)};
    }
    reject_unknown_keys(v, {"label", "classes"}, where);
    KClassModel model;
    model.label = v.contains("label") ? parse_string(v["label"], where + ".label")
                                      : std::string("K-classes");
    const json& jclasses = require_field(v, "classes", where);
    require_array(jclasses, where + ".classes");
    for (std::size_t i = 0; i < jclasses.size(); ++i) {
        const std::string cw = where + ".classes[" + std::to_string(i) + "]";
        require_object(jclasses[i], cw);
        reject_unknown_keys(jclasses[i], {"name", "ch"}, cw);
        KClass k;
        k.name = parse_string(require_field(jclasses[i], "name", cw), cw + ".name");
        const json& ch = require_field(jclasses[i], "ch", cw);
        require_array(ch, cw + ".ch");
        if (static_cast<int>(ch.size()) != ring.size())
            throw ParseError(cw + ".ch: expected " + std::to_string(ring.size()) +
                             " coordinates");
        for (int idx = 0; idx < ring.size(); ++idx)
            k.ch.push_back(parse_rat(ch[idx], cw + ".ch[" + std::to_string(idx) + "]"));
        model.classes.push_back(std::move(k));
    }
    if (model.classes.empty()) throw ParseError(where + ": empty K-basis");
    return {ExplicitKClasses{}, model};
}

struct ParseOutcome {
    std::optional<Workspace> workspace;
    std::vector<ValidationIssue> issues;
};

/// Shared driver: with collect = false the first failure propagates; with
/// collect = true failures become issues (one per block, first per table).
ParseOutcome parse_workspace(const json& doc, bool collect) {
    ParseOutcome out;
    auto run = [&](const std::string& where, auto&& fn) -> bool {
        if (!collect) {
            fn();
            return true;
        }
        try {
            fn();
            return true;
        } catch (const std::exception& e) {
            out.issues.push_back({where, e.what()});
            return false;
        }
    };

    std::optional<GeometryModel> geometry;
    std::optional<Truncation> truncation;
    bool header_ok = run("file", [&] {
        require_object(doc, "file");
        reject_unknown_keys(
            doc, {"format", "geometry", "truncation", "tables", "ring", "kclasses"},
            "file");
        const Int format = parse_int(require_field(doc, "format", "file"), "format");
        if (format != 1)
            throw ParseError("unsupported format " + format.get_str());
    });
    if (header_ok)
        header_ok = run("geometry", [&] {
            geometry = parse_geometry(require_field(doc, "geometry", "file"));
        });
    if (header_ok)
        header_ok = run("truncation", [&] {
            truncation = parse_truncation(require_field(doc, "truncation", "file"));
            if (truncation->rank() != geometry->rank())
                throw RankMismatch("truncation weights rank " +
                                   std::to_string(truncation->rank()) +
                                   " vs geometry rank " +
                                   std::to_string(geometry->rank()));
        });
    if (!header_ok) return out;

    std::vector<InvariantTable> tables;
    bool tables_ok = true;
    {
        const auto it = doc.find("tables");
        if (it == doc.end()) {
            run("tables", [] { throw ParseError("missing field \"tables\""); });
            tables_ok = false;
        } else if (!it->is_array()) {
            run("tables", [] { throw ParseError("expected an array"); });
            tables_ok = false;
        } else {
            for (std::size_t i = 0; i < it->size(); ++i) {
                const std::string where = "tables[" + std::to_string(i) + "]";
                tables_ok &= run(where, [&] {
                    tables.push_back(
                        parse_table((*it)[i], *geometry, *truncation, where));
                });
            }
        }
    }

    std::optional<RingSpec> ring_spec;
    std::optional<GradedRingModel> ring;
    std::optional<KClassSpec> kclass_spec;
    std::optional<KClassModel> kclasses;
    bool ring_ok = run("ring", [&] {
        const auto it = doc.find("ring");
        if (it == doc.end()) return;
        auto [spec, model] = parse_ring(*it);
        // Poincare pairing must be nondegenerate; checked here, at the
        // file boundary, so in-memory experiments can still build odd rings.
        const int s = model.size();
        std::vector<std::vector<Rat>> gram(s, std::vector<Rat>(s));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                gram[i][j] = model.integrate(
                    model.mul(model.basis_element(i), model.basis_element(j)));
        if (!invert_matrix(gram))
            throw ParseError("ring: Poincare pairing is degenerate on the basis");
        ring_spec = spec;
        ring = std::move(model);
    });
    run("kclasses", [&] {
        const auto it = doc.find("kclasses");
        if (it == doc.end()) return;
        if (!ring_ok || !ring)
            throw ParseError("kclasses require a valid ring block");
        auto [spec, model] = parse_kclasses(*it, *ring);
        kclass_spec = spec;
        kclasses = std::move(model);
    });

    if (!out.issues.empty() || !tables_ok) return out;
    out.workspace = Workspace{std::move(*geometry), std::move(*truncation),
                              std::move(tables),    std::move(ring_spec),
                              std::move(ring),      std::move(kclass_spec),
                              std::move(kclasses)};
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    try {
        return json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace

Workspace workspace_from_json(const json& doc) {
    auto outcome = parse_workspace(doc, /*collect=*/false);
    return std::move(*outcome.workspace);
}

Workspace load_workspace(const std::string& path) {
    return workspace_from_json(read_json_file(path));
}

std::vector<ValidationIssue> validate_workspace_json(
    const json& doc, std::optional<Workspace>* out) {
    auto outcome = parse_workspace(doc, /*collect=*/true);
    if (out) *out = std::move(outcome.workspace);
    return outcome.issues;
}

std::vector<ValidationIssue> validate_workspace_file(
    const std::string& path, std::optional<Workspace>* out) {
    json doc;
    try {
        doc = read_json_file(path);
    } catch (const IoError&) {
        throw;  // missing/unreadable file is an I/O failure, not validation
    } catch (const ParseError& e) {
        if (out) out->reset();
        return {{"file", e.what()}};
    }
    return validate_workspace_json(doc, out);
}

namespace {

json table_to_json(const InvariantTable& table) {
    json out;
    out["kind"] = kind_name(table.kind);
    out["n"] = table.n;
    json degrees = json::array();
    for (int d : table.insertion_degrees) degrees.push_back(2 * d);
    out["insertion_degrees"] = std::move(degrees);
    json entries = json::array();
    for (const auto& [beta, value] : table.entries) {
        json coords = json::array();
        for (const Int& c : beta.coords()) coords.push_back(int_to_json(c));
        entries.push_back(json::array({std::move(coords), rat_to_string(value)}));
    }
    out["entries"] = std::move(entries);
    return out;
}

json elem_to_json(const RingElem& e) {
    json out = json::array();
    for (const Rat& c : e) out.push_back(rat_to_string(c));
    return out;
}

json ring_to_json(const RingSpec& spec, const GradedRingModel& model) {
    json out;
    if (std::holds_alternative<BuiltinPnRing>(spec)) {
        out["builtin"] = "P" + std::to_string(std::get<BuiltinPnRing>(spec).n);
        return out;
    }
    if (std::holds_alternative<BuiltinCy3Ring>(spec)) {
        const auto& cy = std::get<BuiltinCy3Ring>(spec);
        out["builtin"] = "CY3";
        out["triple_degree"] = int_to_json(cy.triple_degree);
        out["c2"] = int_to_json(cy.c2_coeff);
        out["c3"] = int_to_json(cy.c3_coeff);
        return out;
    }
    out["label"] = model.label();
    json basis = json::array();
    for (const auto& b : model.basis())
        basis.push_back(json{{"name", b.name}, {"degree", b.degree}});
    out["basis"] = std::move(basis);
    json products = json::array();
    for (int i = 0; i < model.size(); ++i) {
        for (int j = i; j < model.size(); ++j) {
            const RingElem prod =
                model.mul(model.basis_element(i), model.basis_element(j));
            json terms = json::array();
            for (int k = 0; k < model.size(); ++k)
                if (prod[k] != 0)
                    terms.push_back(json::array({k, rat_to_string(prod[k])}));
            if (!terms.empty())
                products.push_back(json::array({i, j, std::move(terms)}));
        }
    }
    out["products"] = std::move(products);
    out["top"] = model.top_index();
    json chern = json::array();
    for (const RingElem& c : model.tangent_chern()) chern.push_back(elem_to_json(c));
    out["tangent_chern"] = std::move(chern);
    return out;
}

json kclasses_to_json(const KClassSpec& spec, const KClassModel& model) {
    json out;
    if (std::holds_alternative<BuiltinLineBundles>(spec)) {
        out["builtin"] = "line-bundles";
        return out;
    }
    out["label"] = model.label;
    json classes = json::array();
    for (const auto& k : model.classes)
        classes.push_back(json{{"name", k.name}, {"ch", elem_to_json(k.ch)}});
    out["classes"] = std::move(classes);
    return out;
}

}  // namespace

json workspace_to_json(const Workspace& ws) {
    json out;
    out["format"] = 1;
    json geometry;
    geometry["label"] = ws.geometry.label();
    geometry["rank"] = ws.geometry.rank();
    geometry["dim"] = ws.geometry.dim();
    json pairing = json::array();
    for (const Int& k : ws.geometry.canonical_pairing())
        pairing.push_back(int_to_json(k));
    geometry["canonical_pairing"] = std::move(pairing);
    out["geometry"] = std::move(geometry);
    json truncation;
    json weights = json::array();
    for (const Int& w : ws.truncation.weights()) weights.push_back(int_to_json(w));
    truncation["weights"] = std::move(weights);
    truncation["cutoff"] = int_to_json(ws.truncation.cutoff());
    out["truncation"] = std::move(truncation);
    json tables = json::array();
    for (const auto& t : ws.tables) tables.push_back(table_to_json(t));
    out["tables"] = std::move(tables);
    if (ws.ring_spec && ws.ring)
        out["ring"] = ring_to_json(*ws.ring_spec, *ws.ring);
    if (ws.kclass_spec && ws.kclasses)
        out["kclasses"] = kclasses_to_json(*ws.kclass_spec, *ws.kclasses);
    return out;
}

void save_workspace(const Workspace& ws, const std::string& path) {
    std::ofstream outf(path);
    if (!outf) throw IoError("cannot open " + path + " for writing");
    outf << workspace_to_json(ws).dump(2) << "\n";
    if (!outf) throw IoError("cannot write " + path);
}

json report_to_json(const TransformReport& report) {
    json out;
    out["from"] = kind_name(report.from);
    out["to"] = kind_name(report.to);
    out["n"] = report.n;
    out["rule"] = report.rule;
    json entries = json::array();
    for (const auto& entry : report.entries) {
        json e;
        json coords = json::array();
        for (const Int& c : entry.beta.coords()) coords.push_back(int_to_json(c));
        e["class"] = std::move(coords);
        e["branch"] = entry.divisor_sum_branch ? "divisor-sum" : "identity";
        json contribs = json::array();
        for (const auto& c : entry.contributions) {
            json jc;
            jc["r"] = int_to_json(c.r);
            jc["coefficient"] = rat_to_string(c.coefficient);
            json source = json::array();
            for (const Int& x : c.source.coords()) source.push_back(int_to_json(x));
            jc["source"] = std::move(source);
            jc["source_value"] = rat_to_string(c.source_value);
            jc["term"] = rat_to_string(c.term);
            contribs.push_back(std::move(jc));
        }
        e["contributions"] = std::move(contribs);
        e["output"] = rat_to_string(entry.output);
        e["integral"] = entry.integral;
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    return out;
}

std::string report_to_text(const TransformReport& report) {
    std::ostringstream os;
    os << "transform " << kind_name(report.from) << " -> " << kind_name(report.to)
       << ", n = " << report.n << "\n";
    os << "rule: " << report.rule << "\n";
    for (const auto& entry : report.entries) {
        os << entry.beta.to_string() << "  ["
           << (entry.divisor_sum_branch ? "divisor sum, K.beta = 0" : "identity")
           << "]  = " << rat_to_string(entry.output)
           << (entry.integral ? "" : "  (non-integral)") << "\n";
        if (entry.divisor_sum_branch)
            for (const auto& c : entry.contributions)
                os << "    r = " << c.r.get_str() << ": " << rat_to_string(c.coefficient)
                   << " * " << kind_name(report.from) << c.source.to_string() << " = "
                   << rat_to_string(c.term) << "\n";
    }
    return os.str();
}

NovikovSeries series_from_table(const InvariantTable& table) {
    NovikovSeries s(table.truncation);
    for (const auto& [beta, value] : table.entries) {
        if (value == 0) continue;
        s = s + NovikovSeries::monomial(value, beta, table.truncation);
    }
    return s;
}

}  // namespace gvk
