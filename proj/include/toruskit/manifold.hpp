#pragma once

#include <toruskit/checked.hpp>
#include <toruskit/errors.hpp>
#include <toruskit/lattice.hpp>
#include <toruskit/sw_invariant.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace toruskit {

enum class TorusStatus { nullhomologous, primitive, essential_nonprimitive };
enum class FramingCurveStatus { nullhomologous_in_complement, essential_in_complement };
enum class PairingSign { negative, zero, positive };

/**
 * Symplectic bookkeeping: the square of the canonical class, the sign of
 * K.omega (the form itself is never represented), and an optional
 * coordinatization of K when the ambient lattice is available.
 */
struct SymplecticData {
    long long canonical_square = 0;
    PairingSign k_dot_omega_sign = PairingSign::zero;
    std::optional<HomClass> canonical_class;

    bool operator==(const SymplecticData& o) const {
        return canonical_square == o.canonical_square && k_dot_omega_sign == o.k_dot_omega_sign &&
               canonical_class == o.canonical_class;
    }
    bool operator!=(const SymplecticData& o) const { return !(*this == o); }
};

/// Handle counts by index.  Carved handles of index i are recorded as handles
/// of index i-1 on the other side before counting.
struct HandleCounts {
    long long h0 = 0, h1 = 0, h2 = 0, h3 = 0, h4 = 0;

    bool operator==(const HandleCounts& o) const {
        return h0 == o.h0 && h1 == o.h1 && h2 == o.h2 && h3 == o.h3 && h4 == o.h4;
    }
    bool operator!=(const HandleCounts& o) const { return !(*this == o); }
};

/// Euler characteristic as the alternating sum of handle counts.
inline long long euler_from_handles(const HandleCounts& h) {
    return h.h0 - h.h1 + h.h2 - h.h3 + h.h4;
}

/**
 * An embedded square-zero torus known to the record, with the framing data a
 * later surgery needs.  Sites are annotations of embedded submanifold data:
 * they do not enter record equality and are not serialized.
 */
struct TorusSite {
    TorusStatus torus_status = TorusStatus::nullhomologous;
    bool meridian_generates_summand = false;
    FramingCurveStatus framing_curve_status = FramingCurveStatus::nullhomologous_in_complement;
    bool lagrangian_framing = false;
    // The framing curve bounds a compatibly framed disk in the complement, so
    // 1/n surgery here returns the same smooth manifold.
    bool zero_vanishing_cycle = false;
    std::string label;
};

/**
 * The invariant record of a smooth 4-manifold.  For closed manifolds the
 * Betti data b2, b+, b- is always derived from (euler, signature, b1); for
 * manifolds with boundary only euler is automatic and b1 is a user-supplied
 * annotation.  simply_connected is an assertion, never derived.
 */
struct FourManifold {
    std::string name;
    long long euler = 0;
    long long signature = 0;
    long long b1 = 0;
    std::vector<long long> h1_torsion;  // unsorted multiset of cyclic orders >= 2
    bool simply_connected = false;
    bool closed = true;
    std::optional<SymplecticData> symplectic;
    std::optional<SWInvariant> sw;
    std::optional<IntersectionLattice> lattice;

    // In-memory annotations outside the manifest schema.
    std::optional<std::string> diffeo_type;  // opaque tag, moved only by trivializing surgery
    std::optional<HandleCounts> handles;
    std::vector<TorusSite> sites;

    bool operator==(const FourManifold& o) const {
        auto sorted = [](std::vector<long long> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        return name == o.name && euler == o.euler && signature == o.signature && b1 == o.b1 &&
               sorted(h1_torsion) == sorted(o.h1_torsion) &&
               simply_connected == o.simply_connected && closed == o.closed &&
               symplectic == o.symplectic && sw == o.sw && lattice == o.lattice &&
               diffeo_type == o.diffeo_type && handles == o.handles;
    }
    bool operator!=(const FourManifold& o) const { return !(*this == o); }
};

struct BettiNumbers {
    long long b_plus = 0;
    long long b_minus = 0;
    long long b2 = 0;
};

/// b2 = e - 2 + 2*b1, b+- = (b2 +- sign)/2 for a closed manifold.
inline BettiNumbers derive_betti(const FourManifold& m) {
    if (!m.closed) throw precondition_error(m.name + ": betti derivation needs a closed manifold");
    const long long b2 = checked_add(checked_sub(m.euler, 2), checked_mul(2, m.b1));
    if (b2 < 0)
        throw inconsistent_record_error(m.name + ": negative b2 = " + std::to_string(b2));
    const long long plus_twice = checked_add(b2, m.signature);
    const long long minus_twice = checked_sub(b2, m.signature);
    if (plus_twice % 2 != 0 || minus_twice % 2 != 0)
        throw inconsistent_record_error(m.name + ": b2 and signature have opposite parity");
    BettiNumbers b{plus_twice / 2, minus_twice / 2, b2};
    if (b.b_plus < 0 || b.b_minus < 0)
        throw inconsistent_record_error(m.name + ": negative b+ or b-");
    return b;
}

inline long long b_plus(const FourManifold& m) { return derive_betti(m).b_plus; }
inline long long b_minus(const FourManifold& m) { return derive_betti(m).b_minus; }

/// First homology rendered as e.g. "0", "Z^2", "Z/3", "Z^1+Z/2+Z/2".
inline std::string h1_string(const FourManifold& m) {
    std::string s;
    if (m.b1 > 0) s = "Z^" + std::to_string(m.b1);
    std::vector<long long> torsion = m.h1_torsion;
    std::sort(torsion.begin(), torsion.end());
    for (long long t : torsion) {
        if (!s.empty()) s += "+";
        s += "Z/" + std::to_string(t);
    }
    return s.empty() ? "0" : s;
}

inline bool same_h1(const FourManifold& a, const FourManifold& b) {
    auto sorted = [](std::vector<long long> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return a.b1 == b.b1 && sorted(a.h1_torsion) == sorted(b.h1_torsion);
}

/// Field-level consistency checks shared by manifest loading and pipelines.
inline void validate(const FourManifold& m) {
    for (long long t : m.h1_torsion)
        if (t < 2)
            throw inconsistent_record_error(m.name + ": torsion order " + std::to_string(t) +
                                            " < 2");
    if (m.simply_connected && (m.b1 != 0 || !m.h1_torsion.empty()))
        throw inconsistent_record_error(m.name + ": simply connected but H1 nontrivial");
    if (m.b1 < 0) throw inconsistent_record_error(m.name + ": negative b1");
    if (m.symplectic && m.symplectic->canonical_class &&
        square(*m.symplectic->canonical_class) != m.symplectic->canonical_square)
        throw inconsistent_record_error(m.name + ": canonical class square mismatch");
    if (m.closed) {
        const BettiNumbers b = derive_betti(m);
        if (m.simply_connected && b.b_plus == 1 && !m.lattice)
            throw inconsistent_record_error(m.name +
                                            ": simply connected closed b+=1 record needs a lattice");
        if (m.lattice && m.lattice->b_minus != b.b_minus)
            throw inconsistent_record_error(m.name + ": lattice b- disagrees with derived b-");
    }
}

/// Connected sum with the reversed projective plane: e+1, sign-1, b1 fixed,
/// one more <-1> summand when a lattice is present.  SW and symplectic data
/// are not transported; callers re-attach what they can certify.
inline FourManifold blow_up(const FourManifold& m) {
    FourManifold r = m;
    r.name = m.name + "#CP2bar";
    r.euler = checked_add(m.euler, 1);
    r.signature = checked_sub(m.signature, 1);
    if (r.lattice) r.lattice->b_minus = checked_add(r.lattice->b_minus, 1);
    r.sw.reset();
    r.symplectic.reset();
    r.diffeo_type.reset();
    r.handles.reset();
    return r;
}

// ---- standard records ------------------------------------------------------

inline FourManifold cp2() {
    FourManifold m;
    m.name = "CP2";
    m.euler = 3;
    m.signature = 1;
    m.simply_connected = true;
    m.lattice = IntersectionLattice{0};
    m.symplectic = SymplecticData{9, PairingSign::negative, HomClass{{-3}}};
    m.diffeo_type = m.name;
    return m;
}

/// The rational surface CP2 # k CP2bar with its standard Kahler-side data:
/// K = -3h + sum e_i, K^2 = 9 - k, K.omega < 0, vanishing SW.
inline FourManifold cp2_k_cp2bar(long long k) {
    if (k < 0) throw precondition_error("blow-up count must be >= 0");
    FourManifold m;
    m.name = "CP2#" + std::to_string(k) + "CP2bar";
    m.euler = 3 + k;
    m.signature = 1 - k;
    m.simply_connected = true;
    m.lattice = IntersectionLattice{k};
    std::vector<long long> kc(static_cast<std::size_t>(k) + 1, -1);
    kc[0] = -3;
    m.symplectic = SymplecticData{9 - k, PairingSign::negative, HomClass{kc}};
    m.sw = SWInvariant{};  // vanishes: the manifold admits positive scalar curvature
    m.diffeo_type = m.name;
    return m;
}

/// The symplectic square of a genus-3 surface: e = 6, sign = -2, b1 = 6,
/// general type, so K.omega > 0 and K^2 = 2e + 3*sign = 6.
inline FourManifold sym2_sigma3() {
    FourManifold m;
    m.name = "Sym2(Sigma3)";
    m.euler = 6;
    m.signature = -2;
    m.b1 = 6;
    m.symplectic = SymplecticData{6, PairingSign::positive, std::nullopt};
    m.diffeo_type = m.name;
    return m;
}

inline FourManifold t4_record() {
    FourManifold m;
    m.name = "T4";
    m.euler = 0;
    m.signature = 0;
    m.b1 = 4;
    m.diffeo_type = m.name;
    return m;
}

inline FourManifold t2xs2_record() {
    FourManifold m;
    m.name = "T2xS2";
    m.euler = 0;
    m.signature = 0;
    m.b1 = 2;
    m.diffeo_type = m.name;
    return m;
}

/// T0 x T0, the product of two punctured tori: a boundary manifold with
/// euler characteristic (-1)*(-1) = 1.
inline FourManifold t0xt0_record() {
    FourManifold m;
    m.name = "T0xT0";
    m.euler = 1;
    m.signature = 0;
    m.b1 = 2;
    m.closed = false;
    m.diffeo_type = m.name;
    return m;
}

inline HandleCounts a_handle_counts() { return HandleCounts{1, 2, 2, 0, 0}; }

/// The manifold A: a 4-ball with a pair of 2-handles attached and a pair of
/// 2-handles carved out, so handle counts (1,2,2,0,0), e = 1, b1 = 2 = b2
/// (the betti numbers are annotations validated against the handle counts).
inline FourManifold a_record() {
    FourManifold m;
    m.name = "A";
    m.euler = euler_from_handles(a_handle_counts());
    m.signature = 0;
    m.b1 = 2;
    m.closed = false;
    m.handles = a_handle_counts();
    m.diffeo_type = m.name;
    return m;
}

}  // namespace toruskit
