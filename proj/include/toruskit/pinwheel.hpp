#pragma once

#include <toruskit/errors.hpp>
#include <toruskit/manifold.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toruskit {

/// An interface surface: genus and the Euler number of its removed normal
/// bundle.  Only the Euler numbers enter the arithmetic; genus is carried
/// (spheres before handle-trading, tori after).
struct InterfaceSurface {
    long long genus = 0;
    long long euler_number = 0;

    bool operator==(const InterfaceSurface& o) const {
        return genus == o.genus && euler_number == o.euler_number;
    }
};

/**
 * One component of a pinwheel: a manifold with two interface surfaces
 * removed, interface_out glued forward onto the next component's
 * interface_in.
 */
struct PinwheelComponent {
    std::string name;
    long long euler = 0;
    InterfaceSurface interface_out;  // negative-section role
    InterfaceSurface interface_in;   // fiber role
    std::optional<HandleCounts> handles;
};

/// A cyclically ordered list of components, closed off by a T2 x D2 filler
/// (whose euler characteristic is 0).
struct PinwheelDescription {
    std::vector<PinwheelComponent> components;
    long long closure_piece_euler = 0;
};

/**
 * The three-piece closing criterion: the boundary after gluing is T3 (so the
 * T2 x D2 filler closes the manifold) iff at every interface the two removed
 * normal Euler numbers sum to -1.  Stated for exactly three components; any
 * other arity is unsupported.
 */
inline bool closing_condition(const PinwheelDescription& p) {
    if (p.components.size() != 3)
        throw unsupported_arity_error("closing criterion implemented for 3 components, got " +
                                      std::to_string(p.components.size()));
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& out = p.components[i].interface_out;
        const auto& in = p.components[(i + 1) % 3].interface_in;
        if (checked_add(out.euler_number, in.euler_number) != -1) return false;
    }
    return true;
}

/// Caller-supplied annotations for the assembled manifold; the gluing
/// computes euler only.
struct AssemblyAnnotations {
    std::string name;
    long long signature = 0;
    long long b1 = 0;
    bool simply_connected = false;
    std::vector<long long> h1_torsion;
    std::optional<SymplecticData> symplectic;
};

/**
 * Glue the components and fill the T3 boundary.  All gluing regions have
 * euler characteristic 0, so e = sum of component eulers + the closure
 * piece.  Signature and fundamental-group data are annotations, never
 * computed here.
 */
inline FourManifold assemble(const PinwheelDescription& p, const AssemblyAnnotations& ann) {
    if (!closing_condition(p))
        throw not_closeable_error(ann.name + ": interface Euler numbers do not sum to -1");
    long long e = p.closure_piece_euler;
    for (const auto& c : p.components) e = checked_add(e, c.euler);

    FourManifold m;
    m.name = ann.name;
    m.euler = e;
    m.signature = ann.signature;
    m.b1 = ann.b1;
    m.h1_torsion = ann.h1_torsion;
    m.simply_connected = ann.simply_connected;
    m.closed = true;
    m.symplectic = ann.symplectic;
    const BettiNumbers b = derive_betti(m);
    if (m.simply_connected && b.b_plus == 1) m.lattice = IntersectionLattice{b.b_minus};
    validate(m);
    return m;
}

/**
 * Trade handles across one seam: the component at `receiver` gains the pair
 * of 2-handles attached along the Bing double of the fiber meridian, and the
 * cyclic successor at `donor` gives up the corresponding 2-handles, i.e.
 * gains a pair of 1-handles.  The seam's euler sum is unchanged (+2 - 2).
 */
inline PinwheelDescription handle_trade(const PinwheelDescription& p, std::size_t receiver,
                                        std::size_t donor) {
    const std::size_t n = p.components.size();
    if (receiver >= n || donor >= n)
        throw precondition_error("pinwheel component index out of range");
    if (donor != (receiver + 1) % n)
        throw adjacency_error("handle trade needs cyclically adjacent components");
    PinwheelDescription out = p;
    auto& c = out.components[receiver];
    auto& d = out.components[donor];
    if (!c.handles || !d.handles)
        throw precondition_error("handle trade needs handle counts on both components");
    c.handles->h2 = checked_add(c.handles->h2, 2);
    d.handles->h1 = checked_add(d.handles->h1, 2);
    c.euler = checked_add(c.euler, 2);
    d.euler = checked_sub(d.euler, 2);
    return out;
}

/// One trade per seam around the full cycle; every component ends up with
/// two extra 2-handles and two extra 1-handles, and the interface surfaces
/// become tori.
inline PinwheelDescription handle_trade_cycle(const PinwheelDescription& p) {
    PinwheelDescription out = p;
    const std::size_t n = p.components.size();
    for (std::size_t i = 0; i < n; ++i) out = handle_trade(out, i, (i + 1) % n);
    for (auto& c : out.components) {
        c.interface_out.genus = 1;
        c.interface_in.genus = 1;
    }
    return out;
}

/// Blow up a component in its interior: one more 2-handle, euler + 1.
inline PinwheelComponent blow_up(const PinwheelComponent& c) {
    PinwheelComponent out = c;
    out.name = c.name + "#CP2bar";
    out.euler = checked_add(out.euler, 1);
    if (out.handles) out.handles->h2 = checked_add(out.handles->h2, 1);
    return out;
}

}  // namespace toruskit
