#pragma once

#include <toruskit/errors.hpp>
#include <toruskit/manifold.hpp>

#include <numeric>
#include <string>

namespace toruskit {

/**
 * A p/q surgery on a square-zero torus: the meridian disk boundary is glued
 * to q*(framing curve) + p*(meridian).  p/q must be reduced and (p, q)
 * nonzero; 0-surgery is the coefficient 0/1 and 1/n surgery is 1/n.
 */
struct TorusSurgerySpec {
    TorusStatus torus_status = TorusStatus::nullhomologous;
    bool meridian_generates_summand = false;
    FramingCurveStatus framing_curve_status = FramingCurveStatus::nullhomologous_in_complement;
    long long p = 1;
    long long q = 1;
    bool lagrangian_framing = false;

    void validate() const {
        if (p == 0 && q == 0) throw precondition_error("surgery coefficient 0/0");
        const long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
        if (g != 1)
            throw precondition_error("surgery coefficient " + std::to_string(p) + "/" +
                                     std::to_string(q) + " is not reduced");
    }
};

/// The rule-table branch a spec falls under.  The table is closed-world:
/// combinations it does not cover raise rule_not_covered_error.
enum class SurgeryRule {
    homology_preserving,   // (a) nullhomologous torus, coefficient +-1/q
    torsion_extension,     // (b) nullhomologous torus, |p| >= 2: H1 gains Z/|p|
    zero_surgery,          // (b) nullhomologous torus, p = 0: b1 and b+ gain 1
    first_betti_reduction  // (c) primitive torus, essential framing curve, +-1
};

inline SurgeryRule classify_rule(const TorusSurgerySpec& s) {
    s.validate();
    switch (s.torus_status) {
        case TorusStatus::nullhomologous: {
            if (!s.meridian_generates_summand)
                throw rule_not_covered_error(
                    "nullhomologous torus whose meridian does not generate a summand");
            if (s.framing_curve_status != FramingCurveStatus::nullhomologous_in_complement)
                throw rule_not_covered_error(
                    "nullhomologous torus with an essential framing curve");
            if (s.p == 1 || s.p == -1) return SurgeryRule::homology_preserving;
            if (s.p == 0) return SurgeryRule::zero_surgery;
            return SurgeryRule::torsion_extension;
        }
        case TorusStatus::primitive: {
            if (s.framing_curve_status != FramingCurveStatus::essential_in_complement)
                throw rule_not_covered_error(
                    "primitive torus with a nullhomologous framing curve");
            if ((s.p != 1 && s.p != -1) || (s.q != 1 && s.q != -1))
                throw rule_not_covered_error(
                    "primitive torus with coefficient other than +-1");
            return SurgeryRule::first_betti_reduction;
        }
        case TorusStatus::essential_nonprimitive:
            throw rule_not_covered_error("essential non-primitive torus");
    }
    throw rule_not_covered_error("unknown torus status");
}

inline std::string rule_name(SurgeryRule r) {
    switch (r) {
        case SurgeryRule::homology_preserving: return "a";
        case SurgeryRule::torsion_extension: return "b";
        case SurgeryRule::zero_surgery: return "b0";
        case SurgeryRule::first_betti_reduction: return "c";
    }
    return "?";
}

/// Only a Luttinger surgery (1/n with respect to the Lagrangian framing)
/// carries the symplectic record across.
inline bool preserves_symplectic(const TorusSurgerySpec& s) {
    return s.lagrangian_framing && (s.p == 1 || s.p == -1);
}

/// The distinguished core torus created by the two direction-changing rules:
/// a betti reduction leaves a nullhomologous torus with a nullhomologous
/// framing curve, and a 0-surgery leaves a primitive torus with an essential
/// framing curve.
inline TorusSite core_site_after(const TorusSurgerySpec& s, SurgeryRule rule) {
    TorusSite site;
    site.label = "core(" + std::to_string(s.p) + "/" + std::to_string(s.q) + ")";
    if (rule == SurgeryRule::first_betti_reduction) {
        site.torus_status = TorusStatus::nullhomologous;
        site.meridian_generates_summand = true;
        site.framing_curve_status = FramingCurveStatus::nullhomologous_in_complement;
    } else {
        site.torus_status = TorusStatus::primitive;
        site.meridian_generates_summand = false;
        site.framing_curve_status = FramingCurveStatus::essential_in_complement;
    }
    return site;
}

/**
 * Apply the p/q torus-surgery rule table.  Euler characteristic and
 * signature are unchanged in every branch; the homology transition depends
 * on the torus and framing-curve status:
 *
 *   (a) nullhomologous torus, meridian summand, nullhomologous framing,
 *       coefficient +-1/q: H1 and b1 unchanged.
 *   (b) same statuses, |p| >= 2: h1_torsion gains Z/|p|;
 *       p = 0: b1 gains 1 (so b+ gains 1 for the closed record).
 *   (c) primitive torus, essential framing curve, coefficient +-1:
 *       b1 and b+ drop by 1; the result is marked as containing a
 *       nullhomologous core torus with nullhomologous framing curve.
 *
 * simply_connected, sw and the diffeo tag are cleared (they are not
 * rule-table invariants); the symplectic record survives Luttinger
 * surgeries only.  The lattice is kept only when H2 is untouched.
 */
inline FourManifold torus_surgery(const FourManifold& m, const TorusSurgerySpec& s) {
    const SurgeryRule rule = classify_rule(s);
    if (!m.closed)
        throw precondition_error(m.name + ": the rule table covers closed manifolds only");

    FourManifold out = m;
    out.simply_connected = false;
    out.sw.reset();
    out.diffeo_type.reset();
    out.handles.reset();
    if (!preserves_symplectic(s)) out.symplectic.reset();

    switch (rule) {
        case SurgeryRule::homology_preserving:
            break;
        case SurgeryRule::torsion_extension:
            out.h1_torsion.push_back(s.p < 0 ? -s.p : s.p);
            break;
        case SurgeryRule::zero_surgery:
            out.b1 = checked_add(out.b1, 1);
            out.lattice.reset();
            out.sites.push_back(core_site_after(s, rule));
            break;
        case SurgeryRule::first_betti_reduction:
            if (m.b1 < 1)
                throw rule_not_covered_error(m.name + ": no first betti number to reduce");
            out.b1 = checked_sub(out.b1, 1);
            out.lattice.reset();
            out.sites.push_back(core_site_after(s, rule));
            break;
    }
    derive_betti(out);  // reject transitions that leave no valid closed record
    return out;
}

/**
 * 1/n surgery at a site whose framing curve has a 0-vanishing cycle returns
 * the same smooth manifold; the record, including the diffeomorphism-type
 * tag, is passed through unchanged.
 */
inline FourManifold trivializing_surgery(const FourManifold& m, const TorusSite& site,
                                         long long n) {
    if (n == 0) throw precondition_error("1/n trivializing surgery needs n != 0");
    if (!site.zero_vanishing_cycle)
        throw precondition_error("site " + site.label + " has no 0-vanishing cycle");
    return m;
}

enum class ConfigurationKind { single_essential, bing_pair, whitehead_double, lagrangian_pair };
enum class WhichTorus { first, second };

/// A tracked family of tori inside an ambient manifold.  Bing-pair tori are
/// nullhomologous in the ambient neighborhood.
struct TorusConfiguration {
    ConfigurationKind kind = ConfigurationKind::bing_pair;
    std::string ambient;  // name of the ambient record
    std::string label;

    bool operator==(const TorusConfiguration& o) const {
        return kind == o.kind && ambient == o.ambient && label == o.label;
    }
};

/// +-1 surgery on either torus of a Bing pair turns the other into the
/// Whitehead double of the original torus.
inline TorusConfiguration bing_surgery_step(const TorusConfiguration& c, WhichTorus) {
    if (c.kind != ConfigurationKind::bing_pair)
        throw state_error(c.label + ": bing_surgery_step needs a bing_pair configuration");
    TorusConfiguration out = c;
    out.kind = ConfigurationKind::whitehead_double;
    return out;
}

enum class StandardSurgerySite { a_in_t2xs2, lagrangian_pair_in_t4, a_standalone };

/// The dictionary of standard surgeries: on A inside T2xS2 they produce T4,
/// on the Lagrangian pair inside T4 they produce T2xS2, and on A by itself
/// they produce T0xT0.
inline FourManifold standard_surgeries(StandardSurgerySite site) {
    switch (site) {
        case StandardSurgerySite::a_in_t2xs2: return t4_record();
        case StandardSurgerySite::lagrangian_pair_in_t4: return t2xs2_record();
        case StandardSurgerySite::a_standalone: return t0xt0_record();
    }
    throw precondition_error("unrecognized standard-surgery site");
}

}  // namespace toruskit
