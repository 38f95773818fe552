#pragma once

#include <toruskit/checked.hpp>
#include <toruskit/errors.hpp>
#include <toruskit/lattice.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace toruskit {

namespace detail {

inline std::string negated_symbol(const std::string& s) {
    if (s.empty() || s == "-") throw manifest_error("empty class symbol");
    if (s.front() == '-') return s.substr(1);
    return "-" + s;
}

}  // namespace detail

/**
 * A basic-class identifier.  Manifolds whose second homology is coordinatized
 * (b+ = 1 with a diagonal lattice) use lattice vectors; others use named
 * symbols.  The t0_shift carries translation by multiples of the surgery core
 * torus class [T0]; bases within one [T0]-coset must share the same base key.
 */
struct ClassKey {
    std::variant<HomClass, std::string> base;
    long long t0_shift = 0;

    static ClassKey of(HomClass c) { return ClassKey{std::move(c), 0}; }
    static ClassKey symbol(std::string name, long long shift = 0) {
        if (name.empty() || name == "-") throw manifest_error("empty class symbol");
        return ClassKey{std::move(name), shift};
    }

    bool is_vector() const { return std::holds_alternative<HomClass>(base); }
    const HomClass& vec() const { return std::get<HomClass>(base); }
    const std::string& sym() const { return std::get<std::string>(base); }

    /// The key of the [T0]-coset this class belongs to.
    ClassKey coset() const { return ClassKey{base, 0}; }

    ClassKey negated() const {
        ClassKey r = *this;
        if (is_vector())
            r.base = -vec();
        else
            r.base = detail::negated_symbol(sym());
        r.t0_shift = checked_neg(t0_shift);
        return r;
    }

    std::string str() const {
        std::string s = is_vector() ? vec().str() : sym();
        if (t0_shift != 0) {
            s += (t0_shift > 0) ? "+" : "-";
            const long long a = t0_shift > 0 ? t0_shift : -t0_shift;
            if (a != 1) s += std::to_string(a);
            s += "T0";
        }
        return s;
    }

    bool operator==(const ClassKey& o) const { return base == o.base && t0_shift == o.t0_shift; }
    bool operator!=(const ClassKey& o) const { return !(*this == o); }
    bool operator<(const ClassKey& o) const {
        if (base.index() != o.base.index()) return base.index() < o.base.index();
        if (base != o.base) return base < o.base;
        return t0_shift < o.t0_shift;
    }
};

/**
 * An exact Seiberg-Witten coefficient: units + m_units * m, where m stands
 * for the symbolic nonzero value certified for the 0-surgery manifold.  The
 * gluing formula is affine, so degree one suffices.
 */
struct SWCoeff {
    long long units = 0;
    long long m_units = 0;

    static SWCoeff integer(long long v) { return SWCoeff{v, 0}; }
    static SWCoeff symbolic_m(long long mult = 1) { return SWCoeff{0, mult}; }

    bool is_zero() const { return units == 0 && m_units == 0; }

    SWCoeff operator+(const SWCoeff& o) const {
        return SWCoeff{checked_add(units, o.units), checked_add(m_units, o.m_units)};
    }
    SWCoeff operator-(const SWCoeff& o) const {
        return SWCoeff{checked_sub(units, o.units), checked_sub(m_units, o.m_units)};
    }
    SWCoeff operator-() const { return SWCoeff{checked_neg(units), checked_neg(m_units)}; }
    SWCoeff scaled(long long f) const {
        return SWCoeff{checked_mul(units, f), checked_mul(m_units, f)};
    }

    bool operator==(const SWCoeff& o) const { return units == o.units && m_units == o.m_units; }
    bool operator!=(const SWCoeff& o) const { return !(*this == o); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        if (units != 0) s = std::to_string(units);
        if (m_units != 0) {
            if (m_units > 0 && !s.empty()) s += "+";
            if (m_units == -1)
                s += "-";
            else if (m_units != 1)
                s += std::to_string(m_units);
            s += "m";
        }
        return s;
    }
};

/**
 * A Seiberg-Witten invariant as a finite formal sum of (basic class,
 * coefficient) pairs.  Zero coefficients are never stored; the empty sum is
 * the vanishing invariant.
 */
class SWInvariant {
public:
    SWInvariant() = default;

    static SWInvariant of(std::initializer_list<std::pair<ClassKey, SWCoeff>> terms) {
        SWInvariant inv;
        for (const auto& [k, c] : terms) inv.add_term(k, c);
        return inv;
    }

    void add_term(const ClassKey& key, const SWCoeff& coeff) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!coeff.is_zero()) terms_.emplace(key, coeff);
            return;
        }
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }

    SWCoeff coefficient(const ClassKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? SWCoeff{} : it->second;
    }

    const std::map<ClassKey, SWCoeff>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Simultaneous negation of all classes (coefficients untouched).
    SWInvariant negated_classes() const {
        SWInvariant r;
        for (const auto& [k, c] : terms_) r.add_term(k.negated(), c);
        return r;
    }

    SWInvariant operator+(const SWInvariant& o) const {
        SWInvariant r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }

    SWInvariant operator-(const SWInvariant& o) const {
        SWInvariant r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
        return r;
    }

    bool operator==(const SWInvariant& o) const { return terms_ == o.terms_; }
    bool operator!=(const SWInvariant& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s = "{";
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) s += ", ";
            first = false;
            s += k.str() + ": " + c.str();
        }
        return s + "}";
    }

private:
    std::map<ClassKey, SWCoeff> terms_;
};

/// Basic classes carry a global sign ambiguity, so invariants are compared
/// modulo simultaneous negation of all classes.
inline bool equal_up_to_class_negation(const SWInvariant& a, const SWInvariant& b) {
    return a == b || a == b.negated_classes();
}

/// True iff all members are pairwise unequal modulo the global sign ambiguity.
inline bool pairwise_distinct(const std::vector<SWInvariant>& family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (equal_up_to_class_negation(family[i], family[j])) return false;
    return true;
}

}  // namespace toruskit
