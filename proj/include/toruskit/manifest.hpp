#pragma once

#include <toruskit/errors.hpp>
#include <toruskit/manifold.hpp>
#include <toruskit/pinwheel.hpp>
#include <toruskit/pipeline.hpp>
#include <toruskit/surgery.hpp>

#include <json.hpp>

#include <fstream>
#include <set>
#include <string>
#include <vector>

namespace toruskit {

using json = nlohmann::ordered_json;

namespace detail {

inline void require_keys(const json& j, const std::set<std::string>& required,
                         const std::set<std::string>& optional, const std::string& what) {
    if (!j.is_object()) throw manifest_error(what + ": expected a JSON object");
    for (const auto& k : required)
        if (!j.contains(k)) throw manifest_error(what + ": missing field '" + k + "'");
    for (const auto& [k, v] : j.items())
        if (!required.count(k) && !optional.count(k))
            throw manifest_error(what + ": unknown field '" + k + "'");
}

template <typename T>
inline T get_as(const json& j, const std::string& key, const std::string& what) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw manifest_error(what + ": field '" + key + "': " + e.what());
    }
}

}  // namespace detail

// ---- enums ------------------------------------------------------------------

inline std::string to_string(TorusStatus s) {
    switch (s) {
        case TorusStatus::nullhomologous: return "nullhomologous";
        case TorusStatus::primitive: return "primitive";
        case TorusStatus::essential_nonprimitive: return "essential_nonprimitive";
    }
    return "?";
}

inline TorusStatus torus_status_from_string(const std::string& s) {
    if (s == "nullhomologous") return TorusStatus::nullhomologous;
    if (s == "primitive") return TorusStatus::primitive;
    if (s == "essential_nonprimitive") return TorusStatus::essential_nonprimitive;
    throw manifest_error("unknown torus_status '" + s + "'");
}

inline std::string to_string(FramingCurveStatus s) {
    return s == FramingCurveStatus::nullhomologous_in_complement ? "nullhomologous_in_complement"
                                                                 : "essential_in_complement";
}

inline FramingCurveStatus framing_status_from_string(const std::string& s) {
    if (s == "nullhomologous_in_complement") return FramingCurveStatus::nullhomologous_in_complement;
    if (s == "essential_in_complement") return FramingCurveStatus::essential_in_complement;
    throw manifest_error("unknown framing_curve_status '" + s + "'");
}

inline std::string to_string(PairingSign s) {
    switch (s) {
        case PairingSign::negative: return "negative";
        case PairingSign::zero: return "zero";
        case PairingSign::positive: return "positive";
    }
    return "?";
}

inline PairingSign pairing_sign_from_string(const std::string& s) {
    if (s == "negative") return PairingSign::negative;
    if (s == "zero") return PairingSign::zero;
    if (s == "positive") return PairingSign::positive;
    throw manifest_error("unknown k_dot_omega_sign '" + s + "'");
}

// ---- SW invariants -----------------------------------------------------------

/// A class is serialized as an integer vector (lattice classes) or a symbol
/// string; translation shifts never appear in manifests.
inline json class_key_to_json(const ClassKey& key) {
    if (key.t0_shift != 0)
        throw manifest_error("class " + key.str() + ": shifted classes are not serializable");
    if (key.is_vector()) return json(key.vec().coeffs());
    return json(key.sym());
}

inline ClassKey class_key_from_json(const json& j) {
    if (j.is_string()) return ClassKey::symbol(j.get<std::string>());
    if (j.is_array()) return ClassKey::of(HomClass{j.get<std::vector<long long>>()});
    throw manifest_error("class must be an integer vector or a symbol string");
}

inline json sw_to_manifest(const SWInvariant& inv) {
    json out = json::array();
    for (const auto& [key, coeff] : inv.terms()) {
        if (coeff.m_units != 0)
            throw manifest_error("SW manifests carry integer coefficients; got " + coeff.str());
        out.push_back(json{{"class", class_key_to_json(key)}, {"coeff", coeff.units}});
    }
    return out;
}

inline SWInvariant sw_from_manifest(const json& j) {
    if (!j.is_array()) throw manifest_error("SW manifest: expected a list of terms");
    SWInvariant inv;
    for (const auto& term : j) {
        detail::require_keys(term, {"class", "coeff"}, {}, "SW term");
        inv.add_term(class_key_from_json(term.at("class")),
                     SWCoeff::integer(detail::get_as<long long>(term, "coeff", "SW term")));
    }
    return inv;
}

// ---- manifolds ----------------------------------------------------------------

inline json symplectic_to_manifest(const SymplecticData& s) {
    json j{{"canonical_square", s.canonical_square},
           {"k_dot_omega_sign", to_string(s.k_dot_omega_sign)}};
    if (s.canonical_class) j["canonical_class"] = s.canonical_class->coeffs();
    return j;
}

inline SymplecticData symplectic_from_manifest(const json& j) {
    detail::require_keys(j, {"canonical_square", "k_dot_omega_sign"}, {"canonical_class"},
                         "symplectic");
    SymplecticData s;
    s.canonical_square = detail::get_as<long long>(j, "canonical_square", "symplectic");
    s.k_dot_omega_sign =
        pairing_sign_from_string(detail::get_as<std::string>(j, "k_dot_omega_sign", "symplectic"));
    if (j.contains("canonical_class"))
        s.canonical_class = HomClass{j.at("canonical_class").get<std::vector<long long>>()};
    return s;
}

inline json manifold_to_manifest(const FourManifold& m) {
    json j{{"name", m.name},
           {"euler", m.euler},
           {"signature", m.signature},
           {"b1", m.b1},
           {"h1_torsion", m.h1_torsion},
           {"closed", m.closed},
           {"simply_connected", m.simply_connected}};
    if (m.symplectic) j["symplectic"] = symplectic_to_manifest(*m.symplectic);
    if (m.sw) j["sw"] = sw_to_manifest(*m.sw);
    if (m.lattice) j["lattice"] = json{{"b_minus", m.lattice->b_minus}};
    return j;
}

inline FourManifold manifold_from_manifest(const json& j) {
    detail::require_keys(j,
                         {"name", "euler", "signature", "b1", "h1_torsion", "closed",
                          "simply_connected"},
                         {"symplectic", "sw", "lattice"}, "manifold");
    FourManifold m;
    m.name = detail::get_as<std::string>(j, "name", "manifold");
    m.euler = detail::get_as<long long>(j, "euler", "manifold");
    m.signature = detail::get_as<long long>(j, "signature", "manifold");
    m.b1 = detail::get_as<long long>(j, "b1", "manifold");
    m.h1_torsion = detail::get_as<std::vector<long long>>(j, "h1_torsion", "manifold");
    m.closed = detail::get_as<bool>(j, "closed", "manifold");
    m.simply_connected = detail::get_as<bool>(j, "simply_connected", "manifold");
    if (j.contains("symplectic")) m.symplectic = symplectic_from_manifest(j.at("symplectic"));
    if (j.contains("sw")) m.sw = sw_from_manifest(j.at("sw"));
    if (j.contains("lattice")) {
        detail::require_keys(j.at("lattice"), {"b_minus"}, {}, "lattice");
        const long long bm = detail::get_as<long long>(j.at("lattice"), "b_minus", "lattice");
        if (bm < 0) throw manifest_error("lattice: b_minus must be >= 0");
        m.lattice = IntersectionLattice{bm};
    }
    validate(m);
    return m;
}

// ---- surgery recipes -----------------------------------------------------------

inline json spec_to_manifest(const TorusSurgerySpec& s) {
    return json{{"torus_status", to_string(s.torus_status)},
                {"meridian_generates_summand", s.meridian_generates_summand},
                {"framing_curve_status", to_string(s.framing_curve_status)},
                {"p", s.p},
                {"q", s.q},
                {"lagrangian_framing", s.lagrangian_framing}};
}

inline TorusSurgerySpec spec_from_manifest(const json& j) {
    detail::require_keys(j,
                         {"torus_status", "meridian_generates_summand", "framing_curve_status",
                          "p", "q", "lagrangian_framing"},
                         {}, "surgery spec");
    TorusSurgerySpec s;
    s.torus_status = torus_status_from_string(detail::get_as<std::string>(j, "torus_status", "spec"));
    s.meridian_generates_summand = detail::get_as<bool>(j, "meridian_generates_summand", "spec");
    s.framing_curve_status =
        framing_status_from_string(detail::get_as<std::string>(j, "framing_curve_status", "spec"));
    s.p = detail::get_as<long long>(j, "p", "spec");
    s.q = detail::get_as<long long>(j, "q", "spec");
    s.lagrangian_framing = detail::get_as<bool>(j, "lagrangian_framing", "spec");
    s.validate();
    return s;
}

inline json recipe_to_manifest(const std::vector<TorusSurgerySpec>& recipe) {
    json out = json::array();
    for (const auto& s : recipe) out.push_back(spec_to_manifest(s));
    return out;
}

inline std::vector<TorusSurgerySpec> recipe_from_manifest(const json& j) {
    if (!j.is_array()) throw manifest_error("surgery recipe: expected a JSON array");
    std::vector<TorusSurgerySpec> out;
    for (const auto& t : j) out.push_back(spec_from_manifest(t));
    return out;
}

// ---- pinwheels -------------------------------------------------------------------

inline json pinwheel_to_manifest(const PinwheelDescription& p) {
    json comps = json::array();
    for (const auto& c : p.components) {
        json jc{{"name", c.name},
                {"euler", c.euler},
                {"interface_out",
                 json{{"genus", c.interface_out.genus}, {"euler_number", c.interface_out.euler_number}}},
                {"interface_in",
                 json{{"genus", c.interface_in.genus}, {"euler_number", c.interface_in.euler_number}}}};
        if (c.handles)
            jc["handles"] = json::array(
                {c.handles->h0, c.handles->h1, c.handles->h2, c.handles->h3, c.handles->h4});
        comps.push_back(jc);
    }
    return json{{"components", comps}};
}

inline InterfaceSurface interface_from_manifest(const json& j) {
    detail::require_keys(j, {"genus", "euler_number"}, {}, "interface surface");
    return InterfaceSurface{detail::get_as<long long>(j, "genus", "interface"),
                            detail::get_as<long long>(j, "euler_number", "interface")};
}

inline PinwheelDescription pinwheel_from_manifest(const json& j) {
    detail::require_keys(j, {"components"}, {}, "pinwheel");
    PinwheelDescription p;
    for (const auto& jc : j.at("components")) {
        detail::require_keys(jc, {"name", "euler", "interface_out", "interface_in"}, {"handles"},
                             "pinwheel component");
        PinwheelComponent c;
        c.name = detail::get_as<std::string>(jc, "name", "component");
        c.euler = detail::get_as<long long>(jc, "euler", "component");
        c.interface_out = interface_from_manifest(jc.at("interface_out"));
        c.interface_in = interface_from_manifest(jc.at("interface_in"));
        if (jc.contains("handles")) {
            const auto h = jc.at("handles").get<std::vector<long long>>();
            if (h.size() != 5) throw manifest_error("handles: expected 5 counts");
            c.handles = HandleCounts{h[0], h[1], h[2], h[3], h[4]};
        }
        p.components.push_back(std::move(c));
    }
    return p;
}

// ---- plans and correspondences ------------------------------------------------------

inline json correspondence_to_manifest(const ClassKey& t0, const ClassCorrespondence& corr,
                                       bool dual_exists) {
    json classes = json::array();
    for (const auto& [x0, shared] : corr.shared) {
        json entry{{"x0", class_key_to_json(x0)}, {"x", class_key_to_json(shared)}};
        auto it = corr.t0_pairing.find(x0);
        entry["t0_pairing"] = it == corr.t0_pairing.end() ? 0 : it->second;
        classes.push_back(entry);
    }
    return json{{"t0", class_key_to_json(t0)},
                {"dual_torus_exists", dual_exists},
                {"classes", classes}};
}

struct CorrespondenceManifest {
    ClassKey t0 = ClassKey::symbol("T0");
    ClassCorrespondence corr;
    bool dual_exists = false;
};

inline CorrespondenceManifest correspondence_from_manifest(const json& j) {
    detail::require_keys(j, {"t0", "dual_torus_exists", "classes"}, {}, "correspondence");
    CorrespondenceManifest out;
    out.t0 = class_key_from_json(j.at("t0"));
    out.dual_exists = detail::get_as<bool>(j, "dual_torus_exists", "correspondence");
    for (const auto& e : j.at("classes")) {
        detail::require_keys(e, {"x0", "x", "t0_pairing"}, {}, "correspondence entry");
        const ClassKey x0 = class_key_from_json(e.at("x0"));
        out.corr.shared[x0] = class_key_from_json(e.at("x"));
        out.corr.t0_pairing[x0] = detail::get_as<long long>(e, "t0_pairing", "correspondence");
    }
    return out;
}

inline json plan_to_manifest(const ReverseEngineeringPlan& plan) {
    return json{{"target", manifold_to_manifest(plan.target)},
                {"model", manifold_to_manifest(plan.model)},
                {"lagrangian_tori", recipe_to_manifest(plan.lagrangian_tori)},
                {"family_range", plan.family_range},
                {"framing_curves_span_h1", plan.framing_curves_span_h1},
                {"simple_connectivity_citation", plan.simple_connectivity_citation},
                {"correspondence",
                 correspondence_to_manifest(plan.t0, plan.correspondence, plan.dual_torus_exists)},
                {"sw_x0", sw_to_manifest(plan.sw_x0)}};
}

inline ReverseEngineeringPlan plan_from_manifest(const json& j) {
    detail::require_keys(j,
                         {"target", "model", "lagrangian_tori", "family_range",
                          "framing_curves_span_h1"},
                         {"simple_connectivity_citation", "correspondence", "sw_x0"}, "plan");
    ReverseEngineeringPlan plan;
    plan.target = manifold_from_manifest(j.at("target"));
    plan.model = manifold_from_manifest(j.at("model"));
    plan.lagrangian_tori = recipe_from_manifest(j.at("lagrangian_tori"));
    plan.family_range = detail::get_as<std::vector<long long>>(j, "family_range", "plan");
    plan.framing_curves_span_h1 = detail::get_as<bool>(j, "framing_curves_span_h1", "plan");
    if (j.contains("simple_connectivity_citation"))
        plan.simple_connectivity_citation =
            detail::get_as<std::string>(j, "simple_connectivity_citation", "plan");
    if (j.contains("correspondence")) {
        const CorrespondenceManifest cm = correspondence_from_manifest(j.at("correspondence"));
        plan.t0 = cm.t0;
        plan.correspondence = cm.corr;
        plan.dual_torus_exists = cm.dual_exists;
    }
    if (j.contains("sw_x0")) plan.sw_x0 = sw_from_manifest(j.at("sw_x0"));
    return plan;
}

// ---- file IO ----------------------------------------------------------------------

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw manifest_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw manifest_error(path + ": " + e.what());
    }
}

inline void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw manifest_error("cannot write " + path);
    out << text;
}

}  // namespace toruskit
