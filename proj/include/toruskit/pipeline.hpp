#pragma once

#include <toruskit/errors.hpp>
#include <toruskit/manifold.hpp>
#include <toruskit/pinwheel.hpp>
#include <toruskit/seiberg_witten.hpp>
#include <toruskit/surgery.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace toruskit {

/**
 * A reverse-engineering plan: a symplectic model M with the same euler
 * characteristic and signature as the simply connected target R, together
 * with b1(M) Lagrangian surgery sites whose framing curves are declared (not
 * computed) to span H1(M; R), plus the data the family stage needs.
 */
struct ReverseEngineeringPlan {
    FourManifold target;  // R
    FourManifold model;   // M
    std::vector<TorusSurgerySpec> lagrangian_tori;
    std::vector<long long> family_range;
    bool framing_curves_span_h1 = false;
    bool dual_torus_exists = false;
    // Nonempty: simple connectivity of the surgered manifolds is consumed as
    // a cited assertion, never derived.
    std::string simple_connectivity_citation;
    ClassKey t0 = ClassKey::symbol("T0");
    ClassCorrespondence correspondence;
    SWInvariant sw_x0;  // value of SW on the 0-surgery, symbolic by default
};

/// The canonical-class coordinatization used for the exotic candidates:
/// K = 3h - sum e_i, of square 9 - b_minus.
inline HomClass exotic_canonical_class(long long b_minus_count) {
    std::vector<long long> c(static_cast<std::size_t>(b_minus_count) + 1, 1);
    c[0] = 3;
    return HomClass{c};
}

/// The formal sum t - 1/t on the canonical class: {K: +1, -K: -1}.
inline SWInvariant canonical_sw_pm(const HomClass& K) {
    SWInvariant inv;
    inv.add_term(ClassKey::of(K), SWCoeff::integer(1));
    inv.add_term(ClassKey::of(-K), SWCoeff::integer(-1));
    return inv;
}

/// Surgery spec at the distinguished core site left by the last Luttinger
/// step: a nullhomologous torus whose meridian generates a summand, with the
/// nullhomologous framing of its curve.
inline TorusSurgerySpec core_spec(long long p, long long q) {
    TorusSurgerySpec s;
    s.torus_status = TorusStatus::nullhomologous;
    s.meridian_generates_summand = true;
    s.framing_curve_status = FramingCurveStatus::nullhomologous_in_complement;
    s.p = p;
    s.q = q;
    s.lagrangian_framing = false;
    return s;
}

/// The scripted plan for the target CP2 # 3 CP2bar with model Sym2(Sigma3).
inline ReverseEngineeringPlan cp2k3_plan(long long family_max = 10) {
    ReverseEngineeringPlan plan;
    plan.target = cp2_k_cp2bar(3);
    plan.model = sym2_sigma3();
    TorusSurgerySpec luttinger;
    luttinger.torus_status = TorusStatus::primitive;
    luttinger.meridian_generates_summand = false;
    luttinger.framing_curve_status = FramingCurveStatus::essential_in_complement;
    luttinger.p = 1;
    luttinger.q = 1;
    luttinger.lagrangian_framing = true;
    plan.lagrangian_tori.assign(6, luttinger);
    for (long long n = 1; n <= family_max; ++n) plan.family_range.push_back(n);
    plan.framing_curves_span_h1 = true;
    plan.dual_torus_exists = true;  // a transverse torus meets the core torus once
    plan.simple_connectivity_citation = "asserted per citation";
    plan.t0 = ClassKey::symbol("T0");
    const HomClass K = exotic_canonical_class(3);
    plan.correspondence.shared[ClassKey::symbol("K0")] = ClassKey::of(K);
    plan.correspondence.shared[ClassKey::symbol("-K0")] = ClassKey::of(-K);
    plan.correspondence.t0_pairing[ClassKey::symbol("K0")] = 0;
    plan.correspondence.t0_pairing[ClassKey::symbol("-K0")] = 0;
    plan.sw_x0.add_term(ClassKey::symbol("K0"), SWCoeff::symbolic_m(1));
    plan.sw_x0.add_term(ClassKey::symbol("-K0"), SWCoeff::symbolic_m(-1));
    return plan;
}

/// Model admissibility: matching euler characteristic and signature, and
/// exactly b1(model) Lagrangian sites declared to span H1(model; R).
inline bool check_model(const ReverseEngineeringPlan& plan) {
    if (plan.model.euler != plan.target.euler) return false;
    if (plan.model.signature != plan.target.signature) return false;
    if (static_cast<long long>(plan.lagrangian_tori.size()) != plan.model.b1) return false;
    if (!plan.framing_curves_span_h1) return false;
    for (const auto& s : plan.lagrangian_tori)
        if (!s.lagrangian_framing) return false;
    return true;
}

/**
 * Perform the +-1 Luttinger surgeries consecutively: M = M_0, ..., M_n = X
 * with b1(M_i) = b1(M) - i and b+(M_i) = b+(M) - i, euler characteristic and
 * signature unchanged, symplectic throughout.  Aborts with the step index if
 * a step's rule is not covered or the descent fails.
 */
inline std::vector<FourManifold> run_chain(const ReverseEngineeringPlan& plan) {
    if (!check_model(plan)) throw precondition_error("model check failed for the plan");
    if (!plan.target.simply_connected)
        throw precondition_error("plan target must be simply connected");
    std::vector<FourManifold> chain;
    chain.push_back(plan.model);
    const long long b1_0 = plan.model.b1;
    const long long bp_0 = b_plus(plan.model);
    const std::size_t n = plan.lagrangian_tori.size();
    for (std::size_t i = 0; i < n; ++i) {
        FourManifold next;
        try {
            next = torus_surgery(chain.back(), plan.lagrangian_tori[i]);
        } catch (const rule_not_covered_error& e) {
            throw rule_not_covered_error("chain step " + std::to_string(i + 1) + ": " + e.what());
        }
        next.name = (i + 1 == n) ? "X" : "M" + std::to_string(i + 1);
        const long long step = static_cast<long long>(i) + 1;
        if (next.b1 != b1_0 - step || b_plus(next) != bp_0 - step ||
            next.euler != plan.model.euler || next.signature != plan.model.signature)
            throw assembly_error("chain step " + std::to_string(i + 1) +
                                 ": invariant descent failed");
        chain.push_back(std::move(next));
    }
    const FourManifold& x = chain.back();
    if (x.b1 != 0 || b_plus(x) != b_plus(plan.target) || !x.symplectic)
        throw assembly_error("chain did not land on a symplectic b1 = 0 record");
    return chain;
}

/**
 * Attach the target-level data to the surgered manifold: the simple
 * connectivity assertion from the plan's citation, the diagonal lattice
 * (b+ = 1), the canonical-class coordinatization K = 3h - sum e_i when its
 * square matches, and the formal invariant t - 1/t on {K, -K}.
 */
inline FourManifold finalize_exotic(const ReverseEngineeringPlan& plan, FourManifold x) {
    x.name = "X";
    if (!plan.simple_connectivity_citation.empty()) x.simply_connected = true;
    if (x.b1 != 0 || !x.h1_torsion.empty())
        throw assembly_error("exotic candidate must have trivial H1");
    const BettiNumbers b = derive_betti(x);
    if (b.b_plus != 1) throw assembly_error("exotic candidate must have b+ = 1");
    x.lattice = IntersectionLattice{b.b_minus};
    if (x.symplectic && x.symplectic->canonical_square == 9 - b.b_minus) {
        const HomClass K = exotic_canonical_class(b.b_minus);
        x.symplectic->canonical_class = K;
        x.sw = canonical_sw_pm(K);
    }
    validate(x);
    return x;
}

struct FamilyRow {
    long long n = 0;
    FourManifold manifold;
    SWInvariant sw;
    bool distinct = true;  // unequal to every other row's SW, up to sign
};

struct FamilyTable {
    std::vector<FamilyRow> rows;
    bool pairwise = true;
};

/// The 0-surgery record X0, with the symplectic data of the pre-surgery
/// model re-attached: the 0-surgery at the distinguished core site inverts
/// the last Luttinger step, so X0 is the (symplectic) previous chain stage.
inline FourManifold zero_surgery_record(const FourManifold& x) {
    FourManifold x0 = torus_surgery(x, core_spec(0, 1));
    x0.name = "X0";
    if (x0.b1 != x.b1 + 1 || b_plus(x0) != b_plus(x) + 1)
        throw assembly_error("0-surgery did not raise b1 and b+ by one");
    if (x.symplectic)
        x0.symplectic = SymplecticData{x.symplectic->canonical_square,
                                       x.symplectic->k_dot_omega_sign, std::nullopt};
    return x0;
}

/**
 * The 1/n surgery family on the distinguished torus of X.  Requires the
 * Taubes certificate on X0; each member keeps the full invariant record of X
 * and receives its Seiberg-Witten invariant from the gluing formula.
 */
inline FamilyTable build_family(const ReverseEngineeringPlan& plan, const FourManifold& x,
                                const SWInvariant& sw_x, const SWInvariant& sw_x0) {
    const FourManifold x0 = zero_surgery_record(x);
    if (!taubes_nonvanishing(x0))
        throw certificate_error("no nonvanishing certificate for the 0-surgery record");

    const MmsEvaluation eval = single_term_reduction(sw_x0, plan.t0, plan.dual_torus_exists)
                                   ? MmsEvaluation::single_term
                                   : MmsEvaluation::coset_sum;
    FamilyTable table;
    for (long long n : plan.family_range) {
        FamilyRow row;
        row.n = n;
        row.manifold = torus_surgery(x, core_spec(1, n));
        row.manifold.name = "X_1/" + std::to_string(n);
        if (!plan.simple_connectivity_citation.empty()) row.manifold.simply_connected = true;
        if (row.manifold.euler != x.euler || row.manifold.signature != x.signature ||
            !same_h1(row.manifold, x))
            throw assembly_error("family member changed the homology record");
        row.sw = mms_combine(sw_x, sw_x0, plan.t0, n, plan.correspondence, eval);
        row.manifold.sw = row.sw;
        table.rows.push_back(std::move(row));
    }
    std::vector<SWInvariant> sws;
    for (const auto& r : table.rows) sws.push_back(r.sw);
    table.pairwise = pairwise_distinct(sws);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        bool distinct = true;
        for (std::size_t j = 0; j < table.rows.size(); ++j)
            if (i != j && equal_up_to_class_negation(sws[i], sws[j])) distinct = false;
        table.rows[i].distinct = distinct;
    }
    return table;
}

// ---- the six-torus construction --------------------------------------------

struct SixToriReport {
    FourManifold cp2_assembled;
    FourManifold cp2_3cp2bar;  // standard record carrying the six torus sites
    FourManifold q;
    std::vector<FourManifold> chain;  // Q = M_0, ..., M_6 = X (pre-finalize)
    FourManifold x;                   // finalized exotic record
    std::vector<TorusConfiguration> configurations;
    std::vector<std::size_t> schedule;  // indices into cp2_3cp2bar.sites, reduction order
    std::vector<std::string> ledger;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw assembly_error(what);
}

inline TorusSite bing_site(int component, int index, bool zero_vanishing) {
    TorusSite s;
    s.torus_status = TorusStatus::nullhomologous;
    s.meridian_generates_summand = false;
    s.framing_curve_status = FramingCurveStatus::nullhomologous_in_complement;
    s.lagrangian_framing = false;
    s.zero_vanishing_cycle = zero_vanishing;
    s.label = "B_T," + std::to_string(component) + "." + std::to_string(index);
    return s;
}

}  // namespace detail

/**
 * The scripted construction: CP2 as a pinwheel of three 4-balls, handle
 * trading around the cycle, one blow-up per component (so each contains a
 * copy of A and with it a Bing pair of nullhomologous tori), standard
 * surgeries turning each A into T0 x T0 (yielding the symplectic three-fold
 * sum Q), and the six Luttinger surgeries killing b1(Q).  Emits the
 * configuration ledger and the reduction schedule.
 */
inline SixToriReport six_tori_construction() {
    using detail::require;
    SixToriReport rep;

    // CP2 as three 4-ball components; each interface pair contributes
    // Euler numbers (-1) + 0 = -1.
    PinwheelComponent ball;
    ball.name = "B4";
    ball.euler = 1;
    ball.interface_out = InterfaceSurface{0, -1};
    ball.interface_in = InterfaceSurface{0, 0};
    ball.handles = HandleCounts{1, 0, 0, 0, 0};
    PinwheelDescription cp2_pin{{ball, ball, ball}, 0};
    for (int i = 0; i < 3; ++i) cp2_pin.components[static_cast<std::size_t>(i)].name = "C" + std::to_string(i);
    require(closing_condition(cp2_pin), "CP2 pinwheel does not close");
    AssemblyAnnotations cp2_ann;
    cp2_ann.name = "CP2";
    cp2_ann.signature = 1;
    cp2_ann.simply_connected = true;
    rep.cp2_assembled = assemble(cp2_pin, cp2_ann);
    require(rep.cp2_assembled.euler == cp2().euler &&
                rep.cp2_assembled.signature == cp2().signature,
            "assembled CP2 disagrees with the standard record");
    rep.ledger.push_back("CP2 = pinwheel(B4, B4, B4): e = 3, seam sums -1");

    // Handle trading: each component becomes (1,2,2,0,0) with chi = 1, the
    // handle pattern of A; interfaces become tori.
    PinwheelDescription traded = handle_trade_cycle(cp2_pin);
    for (const auto& c : traded.components) {
        require(c.handles == a_handle_counts(), "traded component is not an A-pattern");
        require(c.euler == 1 && euler_from_handles(*c.handles) == 1,
                "traded component chi != 1");
    }
    rep.ledger.push_back("handle trading: components (1,2,2,0,0), chi = 1 each, torus interfaces");

    // One blow-up per component; the blown-up components contain A.
    PinwheelDescription blown = traded;
    for (auto& c : blown.components) c = blow_up(c);
    for (const auto& c : blown.components) require(c.euler == 2, "blown-up component chi != 2");
    require(closing_condition(blown), "blown-up pinwheel does not close");
    AssemblyAnnotations k3_ann;
    k3_ann.name = "CP2#3CP2bar";
    k3_ann.signature = -2;
    k3_ann.simply_connected = true;
    const FourManifold k3_assembled = assemble(blown, k3_ann);
    const FourManifold standard = cp2_k_cp2bar(3);
    require(k3_assembled.euler == standard.euler && k3_assembled.signature == standard.signature,
            "assembled CP2#3CP2bar disagrees with the standard record");
    rep.ledger.push_back("blow up each component: e = 2+2+2 = 6 = e(CP2#3CP2bar), sign = -2");

    // The standard record now carries three Bing pairs: six nullhomologous
    // tori.  The 0-vanishing-cycle flags certify the reduction schedule
    // below, in schedule order: the framing curves of the pair in component
    // i bound disks in component i-1, and remain usable for exactly five
    // steps; the disks for the last torus are dragged across the whole cycle
    // and meet it, so the sixth flag is false.
    rep.cp2_3cp2bar = standard;
    rep.cp2_3cp2bar.sites = {
        detail::bing_site(0, 1, true), detail::bing_site(0, 2, false),
        detail::bing_site(1, 1, true), detail::bing_site(1, 2, true),
        detail::bing_site(2, 1, true), detail::bing_site(2, 2, true),
    };
    rep.schedule = {4, 5, 2, 3, 0};
    for (int i = 0; i < 3; ++i)
        rep.configurations.push_back(TorusConfiguration{
            ConfigurationKind::bing_pair, "CP2#3CP2bar", "B_T," + std::to_string(i)});
    rep.ledger.push_back("three copies of A inside CP2#3CP2bar: six nullhomologous tori");

    // Standard surgeries componentwise: A -> T0 x T0, so each component
    // becomes (T0 x T0) # CP2bar with chi = 2, and the three-fold sum is the
    // symplectic manifold Q.  Six surgeries preserve e and sign, so Q keeps
    // (6, -2); b1(Q) = 6 is the caller annotation the Luttinger chain needs.
    const FourManifold t0t0 = standard_surgeries(StandardSurgerySite::a_standalone);
    require(t0t0.euler == 1, "T0xT0 record chi != 1");
    PinwheelDescription q_pin = blown;
    for (auto& c : q_pin.components) {
        c.name = "(T0xT0)#CP2bar";
        c.handles.reset();
        require(c.euler == t0t0.euler + 1, "component chi != chi(T0xT0) + 1");
    }
    AssemblyAnnotations q_ann;
    q_ann.name = "Q";
    q_ann.signature = -2;
    q_ann.b1 = 6;
    q_ann.symplectic = SymplecticData{6, PairingSign::positive, std::nullopt};
    rep.q = assemble(q_pin, q_ann);
    require(rep.q.euler == 6 && b_plus(rep.q) == 7, "Q invariants (e, b+) != (6, 7)");
    rep.ledger.push_back("standard surgeries: Q = 3-fold sum of (T0xT0)#CP2bar, e = 6, b+ = 7");

    // Luttinger chain on the six Lagrangian tori of Q.
    ReverseEngineeringPlan qplan = cp2k3_plan();
    qplan.model = rep.q;
    rep.chain = run_chain(qplan);
    rep.x = finalize_exotic(qplan, rep.chain.back());
    require(rep.x.euler == 6 && rep.x.signature == -2 && rep.x.b1 == 0 && b_plus(rep.x) == 1,
            "X invariants != (6, -2, 0, b+ = 1)");
    require(rep.x.symplectic && rep.x.symplectic->k_dot_omega_sign == PairingSign::positive,
            "X must pair K with omega positively");
    const HomClass K = *rep.x.symplectic->canonical_class;
    require(essential_torus_obstruction(K), "X admits an essential square-zero torus class");
    require(symplectic_genus(K, K) == 7, "canonical genus of X != 7");
    rep.ledger.push_back("six Luttinger surgeries: X with (6, -2, b1 = 0, b+ = 1), K.omega > 0");
    rep.ledger.push_back("canonical genus 1 -> 7 across the six surgeries; K^2 = 6 > 0 obstructs "
                         "essential square-zero tori in X");
    return rep;
}

// ---- reduction to a single torus -------------------------------------------

struct ReductionStep {
    std::string label;
    FourManifold after;
};

struct ReductionReport {
    std::vector<ReductionStep> steps;
    TorusSite remaining_torus;
    TorusConfiguration remaining_configuration;
    std::vector<std::string> ledger;
};

/// A scheduled trivializing step: refuse sites the schedule cannot certify.
inline FourManifold trivialize_scheduled(const FourManifold& m, const TorusSite& site,
                                         long long n) {
    if (!site.zero_vanishing_cycle)
        throw schedule_error("schedule cannot certify a trivializing surgery at " + site.label);
    return trivializing_surgery(m, site, n);
}

/**
 * Surger five of the six tori by certified trivializing surgeries, in the
 * scheduled order; each intermediate record must equal the standard
 * CP2 # 3 CP2bar record.  The fifth surgery also turns the surviving Bing
 * partner into a Whitehead double: the single re-embedded torus T.
 */
inline ReductionReport reduce_to_one_torus(const SixToriReport& six) {
    ReductionReport rep;
    const FourManifold standard = cp2_k_cp2bar(3);
    FourManifold current = six.cp2_3cp2bar;
    for (std::size_t idx : six.schedule) {
        const TorusSite& site = six.cp2_3cp2bar.sites.at(idx);
        current = trivialize_scheduled(current, site, 1);
        if (current != standard)
            throw assembly_error("intermediate record after " + site.label +
                                 " is not CP2#3CP2bar");
        rep.steps.push_back(ReductionStep{site.label, current});
        rep.ledger.push_back("1/1 surgery on " + site.label + ": still CP2#3CP2bar");
    }
    // The torus surviving in component 0 is re-embedded as a Whitehead
    // double; it is the distinguished torus T, with the nullhomologous
    // framing the family surgeries use.
    TorusConfiguration b0{ConfigurationKind::bing_pair, "CP2#3CP2bar", "B_T,0"};
    rep.remaining_configuration = bing_surgery_step(b0, WhichTorus::first);
    rep.remaining_torus = TorusSite{TorusStatus::nullhomologous, true,
                                    FramingCurveStatus::nullhomologous_in_complement,
                                    false, false, "T"};
    rep.ledger.push_back("remaining torus T = Whitehead-doubled partner in C0");
    return rep;
}

/**
 * The family through the single torus T.  The five trivializing surgeries
 * identify the ambient with CP2 # 3 CP2bar and carry the six-torus family to
 * surgeries on T, so the table is produced by the same gluing-formula
 * anchoring and must match the directly built family byte for byte.
 */
inline FamilyTable family_via_remaining_torus(const SixToriReport& six,
                                              const ReductionReport& red,
                                              const ReverseEngineeringPlan& plan) {
    const TorusSite& t = red.remaining_torus;
    if (t.torus_status != TorusStatus::nullhomologous || !t.meridian_generates_summand ||
        t.framing_curve_status != FramingCurveStatus::nullhomologous_in_complement)
        throw precondition_error("remaining torus does not expose the core framing data");
    if (!six.x.sw) throw precondition_error("exotic record carries no SW invariant");
    return build_family(plan, six.x, *six.x.sw, plan.sw_x0);
}

}  // namespace toruskit
