#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gvk/curve_lattice.hpp"
#include "gvk/numeric.hpp"

namespace gvk {

enum class TableKind { GW, GV, QK };

const char* kind_name(TableKind kind);
TableKind kind_from_name(const std::string& name);  // ParseError

/// A table of invariants indexed by curve class. Entries store explicit
/// zeros: presence means "known", absence means "unknown"; the divisor
/// sums never impute missing values.
struct InvariantTable {
    TableKind kind;
    int n = 0;                         // number of insertions
    std::vector<int> insertion_degrees;  // complex degrees, size n
    GeometryModel geom;
    Truncation truncation;
    std::map<CurveClass, Rat> entries;

    /// Checks ranks, truncation bounds, divisor closure of every key with
    /// canonical degree zero, and agreement of the canonical-degree-zero
    /// branch along each divisor chain. Throws on the first failure.
    void validate() const;
};

struct Contribution {
    Int r;            // divisor of the index of beta
    Rat coefficient;  // transform coefficient at r
    CurveClass source;
    Rat source_value;
    Rat term;  // coefficient * source_value
};

struct EntryReport {
    CurveClass beta;
    bool divisor_sum_branch = false;  // canonical degree zero
    std::vector<Contribution> contributions;
    Rat output;
    bool integral = false;
};

/// Audit trail for one table transform; term values sum exactly to the
/// output entries, ordered by class then divisor.
struct TransformReport {
    TableKind from = TableKind::GV;
    TableKind to = TableKind::GW;
    int n = 0;
    std::string rule;  // human description of the coefficient rule
    std::vector<EntryReport> entries;
};

/// Multiple cover sum: on canonical-degree-zero classes
/// GW_beta = sum_{r | ind(beta)} r^{n-3} GV_{beta/r}; identity elsewhere.
InvariantTable gw_from_gv(const InvariantTable& gv,
                          TransformReport* report = nullptr);

/// Mobius inversion of gw_from_gv:
/// GV_beta = sum_{r | ind(beta)} mu(r) r^{n-3} GW_{beta/r}.
InvariantTable gv_from_gw(const InvariantTable& gw,
                          TransformReport* report = nullptr);

/// GV -> QK with coefficient r (n=1), 1 (n=2), r^{n-3} (n>=3) on the
/// canonical-degree-zero branch; refuses n=0 (UnsupportedN).
InvariantTable qk_from_gv(const InvariantTable& gv,
                          TransformReport* report = nullptr);

/// QK -> GV with coefficient mu(r) r (n=1), mu(r) (n=2), mu(r) r^{n-3}
/// (n>=3); exact inverse of qk_from_gv. All coefficients are integers.
InvariantTable gv_from_qk(const InvariantTable& qk,
                          TransformReport* report = nullptr);

struct DegreeVerdict {
    bool ok;
    std::string explanation;
};

/// Insertion-degree hypothesis for the one- and two-insertion QK rules:
/// n=1 requires deg = m - K.beta - 2; n=2 requires deg1 + deg2 =
/// m - K.beta - 1; n >= 3 carries no hypothesis; n = 0 never passes.
DegreeVerdict degree_check(int n, const std::vector<int>& insertion_degrees,
                           const GeometryModel& geom, const CurveClass& beta);

/// Dimension-forced vanishing: true iff deg_gamma1 >= m - k_beta - 1.
bool vanishing_by_dimension(int m, const Int& k_beta, int deg_gamma1);

/// Constant term of the twisting class on an order-r stratum:
/// r^{-(n - k_beta)} as an exact rational.
Rat kawasaki_constant(const Int& r, int n, const Int& k_beta);

/// Weighted divisor sum sum_{k | d} (d/k)^exponent GV_{d beta / k}
/// (equivalently sum_{j | d} j^exponent GV_{j beta}); beta must be
/// primitive and every d beta / k present.
Rat gv_power_sum(const InvariantTable& gv, int exponent, const Int& d,
                 const CurveClass& beta_primitive);

struct IdentityVerdict {
    bool ok;
    std::string detail;  // first failure, when not ok
};

/// Checks, for every primitive canonical-degree-zero key beta and each
/// d <= d_max with all multiples present, that the two closed forms of the
/// divisor-insertion coefficient agree exactly:
///   p * (S_1 - S_3 / d^2) = sum_{k|d} (d/k) p GV_{d beta/k} - d p GW_{d beta}
/// where S_e = gv_power_sum(gv, e, d, beta), p = divisor_pairing(beta),
/// and gw is the zero-insertion multiple-cover transform of gv.
IdentityVerdict leg_coefficient_identity_check(
    const InvariantTable& gv, const InvariantTable& gw,
    const std::function<Int(const CurveClass&)>& divisor_pairing,
    const Int& d_max);

struct AuditEntry {
    CurveClass beta;
    Rat value;
};

/// Every entry whose reduced denominator is not 1, in key order.
std::vector<AuditEntry> integrality_audit(const InvariantTable& table);

}  // namespace gvk
