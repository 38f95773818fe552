// Acceptance suite: runs every criterion at its stated tolerance (all exact)
// and prints one pass/fail line per criterion.

#include <toruskit/report.hpp>
#include <toruskit/toruskit.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace toruskit;

namespace {

int failures = 0;

void criterion(int index, const std::string& name, const std::function<std::string()>& body) {
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

// all k in the box [0,3]^rank with k^2 > 0, for every b- in 0..8
std::string lemma_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    long long cases = 0;
    for (long long bm = 0; bm <= 8; ++bm) {
        const std::size_t rank = static_cast<std::size_t>(bm) + 1;
        std::vector<long long> c(rank, 0);
        while (true) {
            const HomClass k{c};
            if (square(k) > 0) {
                ++cases;
                require(essential_torus_obstruction(k),
                        "analytic predicate false for " + k.str());
                require(!find_isotropic_orthogonal(k, 20).has_value(),
                        "witness found orthogonal to " + k.str());
            }
            std::size_t pos = rank;
            bool done = true;
            while (pos > 0) {
                --pos;
                if (++c[pos] <= 3) {
                    done = false;
                    break;
                }
                c[pos] = 0;
            }
            if (done) break;
        }
    }
    require(cases > 1000, "sample unexpectedly small");

    // outside the hypothesis a witness exists: k itself when k^2 = 0
    std::vector<long long> c(10, 1);
    c[0] = 3;
    const HomClass k9{c};
    bool hypothesis_rejected = false;
    try {
        essential_torus_obstruction(k9);
    } catch (const hypothesis_error&) {
        hypothesis_rejected = true;
    }
    require(hypothesis_rejected, "b- = 9 must be out of hypothesis");
    const auto witness = find_isotropic_orthogonal(k9, 20);
    require(witness.has_value() && *witness == k9, "b- = 9 witness must be k itself");

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    require(elapsed.count() < 120000, "runtime exceeded two minutes");
    std::ostringstream os;
    os << cases << " classes, bound 20, " << elapsed.count() << " ms";
    return os.str();
}

std::string surgery_conservation() {
    std::mt19937_64 rng(0xC0FFEE);
    int applied = 0;
    while (applied < 1000) {
        const long long b1 = static_cast<long long>(rng() % 5);
        const long long bp = static_cast<long long>(rng() % 5);
        const long long bm = static_cast<long long>(rng() % 8);
        FourManifold m;
        m.name = "R";
        m.b1 = b1;
        m.euler = 2 - 2 * b1 + bp + bm;
        m.signature = bp - bm;
        if (rng() % 3 == 0) m.h1_torsion.push_back(2 + static_cast<long long>(rng() % 5));

        TorusSurgerySpec s;
        const auto kind = rng() % 4;
        if (kind == 3 && (b1 == 0 || bp == 0)) continue;
        s.torus_status = kind == 3 ? TorusStatus::primitive : TorusStatus::nullhomologous;
        s.meridian_generates_summand = kind != 3;
        s.framing_curve_status = kind == 3 ? FramingCurveStatus::essential_in_complement
                                           : FramingCurveStatus::nullhomologous_in_complement;
        s.lagrangian_framing = (kind == 3) && (rng() % 2 == 0);
        switch (kind) {
            case 0:
                s.p = rng() % 2 ? 1 : -1;
                s.q = static_cast<long long>(rng() % 9) - 4;
                break;
            case 1:
                s.p = 2 + static_cast<long long>(rng() % 6);
                s.q = 1;
                break;
            case 2:
                s.p = 0;
                s.q = 1;
                break;
            default:
                s.p = rng() % 2 ? 1 : -1;
                s.q = rng() % 2 ? 1 : -1;
                break;
        }
        FourManifold out;
        try {
            out = torus_surgery(m, s);
        } catch (const error&) {
            continue;
        }
        require(out.euler == m.euler, "euler changed under surgery");
        require(out.signature == m.signature, "signature changed under surgery");
        ++applied;
    }

    // rule (c) then its 0-surgery inverse restores (b1, b+, H1)
    std::mt19937_64 rng2(0xBEEF);
    for (int trial = 0; trial < 200; ++trial) {
        const long long b1 = 1 + static_cast<long long>(rng2() % 4);
        const long long bp = 1 + static_cast<long long>(rng2() % 4);
        const long long bm = static_cast<long long>(rng2() % 8);
        FourManifold m;
        m.name = "R";
        m.b1 = b1;
        m.euler = 2 - 2 * b1 + bp + bm;
        m.signature = bp - bm;
        if (trial % 2) m.h1_torsion = {3, 7};
        TorusSurgerySpec down;
        down.torus_status = TorusStatus::primitive;
        down.framing_curve_status = FramingCurveStatus::essential_in_complement;
        down.p = trial % 2 ? 1 : -1;
        down.q = 1;
        TorusSurgerySpec up;
        up.torus_status = TorusStatus::nullhomologous;
        up.meridian_generates_summand = true;
        up.framing_curve_status = FramingCurveStatus::nullhomologous_in_complement;
        up.p = 0;
        up.q = 1;
        const FourManifold back = torus_surgery(torus_surgery(m, down), up);
        require(back.b1 == m.b1 && b_plus(back) == b_plus(m) && same_h1(back, m),
                "inverse pair did not restore the homology triple");
    }
    return "1000 applications, 200 inverse pairs";
}

std::string luttinger_chain_descent() {
    const auto chain = run_chain(cp2k3_plan());
    require(chain.size() == 7, "chain must have exactly 6 steps");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        require(chain[i].euler == 6 && chain[i].signature == -2, "(e, sign) drifted");
        require(chain[i].b1 == 6 - static_cast<long long>(i), "b1 descent broken");
        require(b_plus(chain[i]) == 7 - static_cast<long long>(i), "b+ descent broken");
    }
    return "(b1, b+): (6,7) -> (0,1) with (e, sign) = (6, -2)";
}

std::string mms_family() {
    const ReverseEngineeringPlan plan = cp2k3_plan();
    const FourManifold x = finalize_exotic(plan, run_chain(plan).back());
    const SWInvariant sw_x = *x.sw;
    const FamilyTable table = build_family(plan, x, sw_x, plan.sw_x0);
    require(table.rows.size() == 10, "expected 10 family members");
    const ClassKey K = ClassKey::of(exotic_canonical_class(3));
    for (const auto& row : table.rows) {
        const SWCoeff expected = SWCoeff::integer(1) + SWCoeff::symbolic_m(row.n);
        require(row.sw.coefficient(K) == expected, "coefficient at K is not 1 + n*m");
        require(row.sw.coefficient(K.negated()) == -expected, "coefficient at -K is not -(1+n*m)");
    }
    require(table.pairwise, "family members must be pairwise distinct");
    require(mms_combine(sw_x, plan.sw_x0, plan.t0, 0, plan.correspondence) == sw_x,
            "gluing formula at n = 0 must return SW_X exactly");
    return "coefficients 1 + n*m, n = 1..10, pairwise distinct";
}

std::string genus_table() {
    for (long long k = 2; k <= 7; ++k) {
        const HomClass K = exotic_canonical_class(k);
        require(square(K) == 9 - k, "K^2 != 9 - k");
        require(symplectic_genus(K, K) == 10 - k, "g != 10 - k");
        require(symplectic_genus(-K, K) == 1, "g(-K) != 1");
    }
    return "g = 10 - k for k = 2..7 and g(-K) = 1";
}

std::string pinwheel_assembly() {
    PinwheelComponent ball;
    ball.name = "B4";
    ball.euler = 1;
    ball.interface_out = InterfaceSurface{0, -1};
    ball.interface_in = InterfaceSurface{0, 0};
    ball.handles = HandleCounts{1, 0, 0, 0, 0};
    PinwheelDescription p{{ball, ball, ball}, 0};
    require(closing_condition(p), "interface sums must be -1");
    AssemblyAnnotations cp2_ann;
    cp2_ann.name = "CP2";
    cp2_ann.signature = 1;
    cp2_ann.simply_connected = true;
    require(assemble(p, cp2_ann).euler == 3, "three chi = 1 components must give e = 3");

    PinwheelDescription traded = handle_trade_cycle(p);
    for (const auto& c : traded.components) {
        require(c.handles == a_handle_counts(), "full cycle must yield (1,2,2,0,0)");
        require(euler_from_handles(*c.handles) == 1, "(1,2,2,0,0) must have chi = 1");
    }
    PinwheelDescription blown = traded;
    for (auto& c : blown.components) c = blow_up(c);
    AssemblyAnnotations k3_ann;
    k3_ann.name = "CP2#3CP2bar";
    k3_ann.signature = -2;
    k3_ann.simply_connected = true;
    require(assemble(blown, k3_ann).euler == 6, "blown-up traded components must give e = 6");

    PinwheelComponent qc;
    qc.name = "(T0xT0)#CP2bar";
    qc.euler = 2;
    qc.interface_out = InterfaceSurface{1, -1};
    qc.interface_in = InterfaceSurface{1, 0};
    PinwheelDescription qp{{qc, qc, qc}, 0};
    AssemblyAnnotations q_ann;
    q_ann.name = "Q";
    q_ann.signature = -2;
    q_ann.b1 = 6;
    require(assemble(qp, q_ann).euler == 6, "Q assembly must give e = 6");
    return "e = 3, 6, 6; chi(1,2,2,0,0) = 1";
}

std::string standard_surgery_dictionary() {
    const FourManifold t4 = standard_surgeries(StandardSurgerySite::a_in_t2xs2);
    require(t4.euler == 0 && t4.b1 == 4, "A in T2xS2 must yield T4");
    const FourManifold t2s2 = standard_surgeries(StandardSurgerySite::lagrangian_pair_in_t4);
    require(t2s2.euler == 0 && t2s2.b1 == 2, "pair in T4 must yield T2xS2");
    require(t2xs2_record().b1 == 2 && t4_record().b1 == 4, "b1 dictionary 2 <-> 4");
    const FourManifold t0t0 = standard_surgeries(StandardSurgerySite::a_standalone);
    require(t0t0.euler == 1 && a_record().euler == 1, "chi = 1 on both sides of A <-> T0xT0");
    return "A <-> T0xT0 (chi 1), T2xS2 <-> T4 (e 0, b1 2 <-> 4)";
}

std::string reduction_and_single_torus_family() {
    const SixToriReport six = six_tori_construction();
    const ReductionReport red = reduce_to_one_torus(six);
    require(red.steps.size() == 5, "exactly five trivializing surgeries");
    const FourManifold standard = cp2_k_cp2bar(3);
    for (const auto& step : red.steps)
        require(step.after == standard, "intermediate record must stay CP2#3CP2bar");
    const ReverseEngineeringPlan plan = cp2k3_plan();
    const FamilyTable direct = build_family(plan, six.x, *six.x.sw, plan.sw_x0);
    const FamilyTable via_t = family_via_remaining_torus(six, red, plan);
    require(render_tsv(direct) == render_tsv(via_t), "family tables must match byte for byte");
    return "5 invariant steps; tables byte-identical";
}

std::string exotic_certificate() {
    const SixToriReport six = six_tori_construction();
    require(six.x.symplectic && six.x.symplectic->k_dot_omega_sign == PairingSign::positive,
            "X must pair K with omega positively");
    require(li_liu_sign_check(six.x) == LiLiuVerdict::exotic_certificate,
            "X must earn the exotic certificate");
    require(li_liu_sign_check(cp2_k_cp2bar(3)) == LiLiuVerdict::consistent_with_rational,
            "the standard record must stay on the rational side");
    return "X exotic_certificate; CP2#3CP2bar consistent_with_rational";
}

}  // namespace

int main() {
    criterion(1, "square-zero torus obstruction: analytic predicate matches exhaustive search",
              lemma_oracle_equivalence);
    criterion(2, "surgery rule table conserves (e, sign) and inverts across the diagram",
              surgery_conservation);
    criterion(3, "Luttinger chain descends (6,7) -> (0,1) in six steps", luttinger_chain_descent);
    criterion(4, "gluing-formula family has coefficients 1 + n*m, pairwise distinct", mms_family);
    criterion(5, "canonical-class genus table g = 10 - k and g(-K) = 1", genus_table);
    criterion(6, "pinwheel assembly euler accounting", pinwheel_assembly);
    criterion(7, "standard-surgery dictionary", standard_surgery_dictionary);
    criterion(8, "five trivializing surgeries, then the single-torus family",
              reduction_and_single_torus_family);
    criterion(9, "K.omega sign certificates", exotic_certificate);

    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: ")
              << (failures == 0 ? "" : std::to_string(failures)) << "\n";
    return failures == 0 ? 0 : 1;
}
