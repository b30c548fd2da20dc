#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gvk/char_ring.hpp"
#include "gvk/curve_lattice.hpp"
#include "gvk/novikov.hpp"
#include "gvk/transforms.hpp"

namespace gvk {

/// How the optional ring block was specified; kept so serialization
/// round-trips builtin references instead of expanding them.
struct BuiltinPnRing {
    int n;
};
struct BuiltinCy3Ring {
    Int triple_degree;
    Int c2_coeff;
    Int c3_coeff;
};
struct ExplicitRing {};
using RingSpec = std::variant<BuiltinPnRing, BuiltinCy3Ring, ExplicitRing>;

struct BuiltinLineBundles {};
struct ExplicitKClasses {};
using KClassSpec = std::variant<BuiltinLineBundles, ExplicitKClasses>;

/// An on-disk computation: geometry, truncation, invariant tables, and
/// optional ring / K-class blocks. Format 1, JSON, exact-string rationals,
/// no floats anywhere.
struct Workspace {
    GeometryModel geometry;
    Truncation truncation;
    std::vector<InvariantTable> tables;
    std::optional<RingSpec> ring_spec;
    std::optional<GradedRingModel> ring;
    std::optional<KClassSpec> kclass_spec;
    std::optional<KClassModel> kclasses;
};

struct ValidationIssue {
    std::string where;    // e.g. "geometry", "tables[2]"
    std::string message;
};

/// Parses and fully validates; throws ParseError / validation errors on
/// the first problem. IoError when the file cannot be read.
Workspace load_workspace(const std::string& path);
Workspace workspace_from_json(const nlohmann::ordered_json& doc);

/// Collects one issue per block (first failure per table) instead of
/// throwing. Returns the issues; *out receives the workspace when clean.
std::vector<ValidationIssue> validate_workspace_json(
    const nlohmann::ordered_json& doc, std::optional<Workspace>* out = nullptr);
std::vector<ValidationIssue> validate_workspace_file(
    const std::string& path, std::optional<Workspace>* out = nullptr);

/// Normalized serialization: keys sorted, rationals reduced, stable field
/// order. load -> serialize -> load is the identity.
nlohmann::ordered_json workspace_to_json(const Workspace& ws);
void save_workspace(const Workspace& ws, const std::string& path);

nlohmann::ordered_json report_to_json(const TransformReport& report);
std::string report_to_text(const TransformReport& report);

/// The table's entries as a Novikov series over the same truncation
/// (explicit zeros drop out; the series is normalized).
NovikovSeries series_from_table(const InvariantTable& table);

}  // namespace gvk
