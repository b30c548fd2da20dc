#include "gvk/transforms.hpp"

#include <stdexcept>

#include "gvk/arith.hpp"
#include "gvk/errors.hpp"

namespace gvk {

const char* kind_name(TableKind kind) {
    switch (kind) {
        case TableKind::GW: return "GW";
        case TableKind::GV: return "GV";
        case TableKind::QK: return "QK";
    }
    return "?";
}

TableKind kind_from_name(const std::string& name) {
    if (name == "GW") return TableKind::GW;
    if (name == "GV") return TableKind::GV;
    if (name == "QK") return TableKind::QK;
    throw ParseError("unknown table kind \"" + name + "\"");
}

void InvariantTable::validate() const {
    if (n < 0) throw std::invalid_argument("InvariantTable: negative n");
    if (static_cast<int>(insertion_degrees.size()) != n)
        throw std::invalid_argument("InvariantTable: insertion degree list length " +
                                    std::to_string(insertion_degrees.size()) +
                                    " does not match n = " + std::to_string(n));
    for (int d : insertion_degrees)
        if (d < 0)
            throw std::invalid_argument("InvariantTable: negative insertion degree");
    if (geom.rank() != truncation.rank())
        throw RankMismatch("InvariantTable: geometry rank " +
                           std::to_string(geom.rank()) + " vs truncation rank " +
                           std::to_string(truncation.rank()));
    for (const auto& [beta, value] : entries) {
        (void)value;
        if (beta.rank() != geom.rank())
            throw RankMismatch("InvariantTable: key " + beta.to_string() +
                               " has rank " + std::to_string(beta.rank()));
        if (!truncation.admits(beta))
            throw OutOfTruncation("InvariantTable: key " + beta.to_string() +
                                  " lies beyond the truncation cutoff");
        if (canonical_degree(geom, beta) != 0) continue;
        // Divisor closure and branch agreement along the chain.
        for (const Int& r : divisors(beta.index())) {
            if (r == 1) continue;
            const CurveClass part = divide(beta, r);
            if (!entries.contains(part))
                throw NotDivisorClosed("InvariantTable: key " + beta.to_string() +
                                       " requires entry " + part.to_string() +
                                       " (divisor " + r.get_str() + ")");
            if (canonical_degree(geom, part) != 0)
                throw BranchMismatch("InvariantTable: " + beta.to_string() +
                                     " has canonical degree 0 but " +
                                     part.to_string() + " does not");
        }
    }
}

namespace {

void require_kind(const InvariantTable& t, TableKind expected, const char* op) {
    if (t.kind != expected)
        throw KindMismatch(std::string(op) + ": expected a " + kind_name(expected) +
                           " table, got " + kind_name(t.kind));
}

void require_qk_degree_hypotheses(const InvariantTable& t, const char* op) {
    if (t.n == 0)
        throw UnsupportedN(std::string(op) +
                           ": the QK transforms are defined for n >= 1 insertions only");
    if (t.n >= 3) return;
    // The one- and two-insertion rules carry degree hypotheses; they bind
    // exactly where the divisor-sum corrections fire.
    for (const auto& [beta, value] : t.entries) {
        (void)value;
        if (canonical_degree(t.geom, beta) != 0) continue;
        const DegreeVerdict v =
            degree_check(t.n, t.insertion_degrees, t.geom, beta);
        if (!v.ok)
            throw DegreeHypothesisViolated(std::string(op) + ": at " +
                                           beta.to_string() + ": " + v.explanation);
    }
}

/// Shared divisor-sum skeleton: out[beta] = sum_{r | ind(beta)} c(r) in[beta/r]
/// on the canonical-degree-zero branch, identity on the rest.
InvariantTable divisor_sum_transform(const InvariantTable& in, TableKind to,
                                     const std::function<Rat(const Int&)>& coeff,
                                     const std::string& rule,
                                     TransformReport* report) {
    in.validate();
    InvariantTable out{to,         in.n,          in.insertion_degrees,
                       in.geom,    in.truncation, {}};
    if (report) {
        report->from = in.kind;
        report->to = to;
        report->n = in.n;
        report->rule = rule;
        report->entries.clear();
    }
    for (const auto& [beta, value] : in.entries) {
        EntryReport entry{beta, false, {}, Rat(0), false};
        if (canonical_degree(in.geom, beta) == 0) {
            entry.divisor_sum_branch = true;
            Rat acc = 0;
            for (const Int& r : divisors(beta.index())) {
                const CurveClass source = divide(beta, r);
                const Rat& source_value = in.entries.at(source);
                const Rat c = coeff(r);
                const Rat term = c * source_value;
                acc += term;
                if (report)
                    entry.contributions.push_back({r, c, source, source_value, term});
            }
            entry.output = acc;
        } else {
            entry.output = value;
            if (report)
                entry.contributions.push_back({Int(1), Rat(1), beta, value, value});
        }
        out.entries.emplace(beta, entry.output);
        if (report) {
            entry.integral = is_integer(entry.output);
            report->entries.push_back(std::move(entry));
        }
    }
    return out;
}

long cover_exponent(int n) { return static_cast<long>(n) - 3; }

}  // namespace

InvariantTable gw_from_gv(const InvariantTable& gv, TransformReport* report) {
    require_kind(gv, TableKind::GV, "gw_from_gv");
    const long e = cover_exponent(gv.n);
    return divisor_sum_transform(
        gv, TableKind::GW, [e](const Int& r) { return rat_pow(r, e); },
        "multiple cover sum, coefficient r^(n-3)", report);
}

InvariantTable gv_from_gw(const InvariantTable& gw, TransformReport* report) {
    require_kind(gw, TableKind::GW, "gv_from_gw");
    const long e = cover_exponent(gw.n);
    return divisor_sum_transform(
        gw, TableKind::GV,
        [e](const Int& r) -> Rat { return Rat(mobius(r)) * rat_pow(r, e); },
        "multiple cover inversion, coefficient mu(r) r^(n-3)", report);
}

InvariantTable qk_from_gv(const InvariantTable& gv, TransformReport* report) {
    require_kind(gv, TableKind::GV, "qk_from_gv");
    require_qk_degree_hypotheses(gv, "qk_from_gv");
    std::function<Rat(const Int&)> coeff;
    std::string rule;
    if (gv.n == 1) {
        coeff = [](const Int& r) { return Rat(r); };
        rule = "one-insertion divisor sum, coefficient r";
    } else if (gv.n == 2) {
        coeff = [](const Int&) { return Rat(1); };
        rule = "two-insertion divisor sum, coefficient 1";
    } else {
        const long e = cover_exponent(gv.n);
        coeff = [e](const Int& r) { return rat_pow(r, e); };
        rule = "multiple cover sum, coefficient r^(n-3)";
    }
    return divisor_sum_transform(gv, TableKind::QK, coeff, rule, report);
}

InvariantTable gv_from_qk(const InvariantTable& qk, TransformReport* report) {
    require_kind(qk, TableKind::QK, "gv_from_qk");
    require_qk_degree_hypotheses(qk, "gv_from_qk");
    std::function<Rat(const Int&)> coeff;
    std::string rule;
    if (qk.n == 1) {
        coeff = [](const Int& r) -> Rat { return Rat(mobius(r)) * Rat(r); };
        rule = "one-insertion inversion, coefficient mu(r) r";
    } else if (qk.n == 2) {
        coeff = [](const Int& r) { return Rat(mobius(r)); };
        rule = "two-insertion inversion, coefficient mu(r)";
    } else {
        const long e = cover_exponent(qk.n);
        coeff = [e](const Int& r) -> Rat { return Rat(mobius(r)) * rat_pow(r, e); };
        rule = "multiple cover inversion, coefficient mu(r) r^(n-3)";
    }
    return divisor_sum_transform(qk, TableKind::GV, coeff, rule, report);
}

DegreeVerdict degree_check(int n, const std::vector<int>& insertion_degrees,
                           const GeometryModel& geom, const CurveClass& beta) {
    if (static_cast<int>(insertion_degrees.size()) != n)
        throw std::invalid_argument("degree_check: degree list length does not match n");
    if (n >= 3) return {true, "no degree hypothesis for n >= 3"};
    const Int k_beta = canonical_degree(geom, beta);
    if (n == 1) {
        const Int want = Int(geom.dim()) - k_beta - 2;
        if (Int(insertion_degrees[0]) == want)
            return {true, "deg = m - K.beta - 2"};
        return {false, "one-insertion rule needs complex degree " + want.get_str() +
                           " (= m - K.beta - 2), got " +
                           std::to_string(insertion_degrees[0])};
    }
    if (n == 2) {
        const Int want = Int(geom.dim()) - k_beta - 1;
        const Int got = Int(insertion_degrees[0]) + Int(insertion_degrees[1]);
        if (got == want) return {true, "deg1 + deg2 = m - K.beta - 1"};
        return {false, "two-insertion rule needs total complex degree " +
                           want.get_str() + " (= m - K.beta - 1), got " +
                           got.get_str()};
    }
    return {false, "no one- or two-insertion rule applies to n = " +
                       std::to_string(n)};
}

bool vanishing_by_dimension(int m, const Int& k_beta, int deg_gamma1) {
    return Int(deg_gamma1) >= Int(m) - k_beta - 1;
}

Rat kawasaki_constant(const Int& r, int n, const Int& k_beta) {
    if (r < 1)
        throw std::invalid_argument("kawasaki_constant: order must be >= 1");
    const Int exponent = Int(n) - k_beta;
    if (!exponent.fits_slong_p())
        throw std::invalid_argument("kawasaki_constant: exponent out of range");
    return rat_pow(r, -exponent.get_si());
}

Rat gv_power_sum(const InvariantTable& gv, int exponent, const Int& d,
                 const CurveClass& beta_primitive) {
    require_kind(gv, TableKind::GV, "gv_power_sum");
    if (exponent < 0)
        throw std::invalid_argument("gv_power_sum: exponent must be >= 0");
    if (d < 1) throw std::invalid_argument("gv_power_sum: d must be >= 1");
    if (beta_primitive.index() != 1)
        throw std::invalid_argument("gv_power_sum: " + beta_primitive.to_string() +
                                    " is not primitive");
    Rat acc = 0;
    for (const Int& j : divisors(d)) {
        const CurveClass c = beta_primitive.scaled(j);
        const auto it = gv.entries.find(c);
        if (it == gv.entries.end())
            throw NotDivisorClosed("gv_power_sum: missing entry " + c.to_string());
        acc += Rat(int_pow(j, static_cast<unsigned long>(exponent))) * it->second;
    }
    return acc;
}

IdentityVerdict leg_coefficient_identity_check(
    const InvariantTable& gv, const InvariantTable& gw,
    const std::function<Int(const CurveClass&)>& divisor_pairing,
    const Int& d_max) {
    require_kind(gv, TableKind::GV, "leg_coefficient_identity_check");
    require_kind(gw, TableKind::GW, "leg_coefficient_identity_check");
    if (gv.n != 0 || gw.n != 0)
        throw UnsupportedN(
            "leg_coefficient_identity_check: both tables must have n = 0");
    gv.validate();
    for (const auto& [beta, value] : gv.entries) {
        (void)value;
        if (beta.index() != 1) continue;
        if (canonical_degree(gv.geom, beta) != 0) continue;
        const Rat p{divisor_pairing(beta)};
        for (Int d = 1; d <= d_max; ++d) {
            const CurveClass dbeta = beta.scaled(d);
            if (!gv.entries.contains(dbeta)) continue;
            const auto gw_it = gw.entries.find(dbeta);
            if (gw_it == gw.entries.end())
                return {false, "GW table is missing entry " + dbeta.to_string()};
            // p (S_1 - S_3 / d^2) vs divisor-equation expansion of
            // sum_{k|d} GV_{d beta/k}(phi) - GW_{d beta}(phi).
            const Rat s1 = gv_power_sum(gv, 1, d, beta);
            const Rat s3 = gv_power_sum(gv, 3, d, beta);
            const Rat lhs = p * (s1 - s3 / Rat(Int(d * d)));
            Rat rhs = -Rat(d) * p * gw_it->second;
            for (const Int& k : divisors(d)) {
                const Int j = d / k;
                rhs += Rat(j) * p * gv.entries.at(beta.scaled(j));
            }
            if (lhs != rhs)
                return {false, "mismatch at beta = " + beta.to_string() +
                                   ", d = " + d.get_str() + ": " +
                                   rat_to_string(lhs) + " vs " + rat_to_string(rhs)};
        }
    }
    return {true, ""};
}

std::vector<AuditEntry> integrality_audit(const InvariantTable& table) {
    std::vector<AuditEntry> out;
    for (const auto& [beta, value] : table.entries)
        if (!is_integer(value)) out.push_back({beta, value});
    return out;
}

}  // namespace gvk
