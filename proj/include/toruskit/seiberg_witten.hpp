#pragma once

#include <toruskit/errors.hpp>
#include <toruskit/manifold.hpp>
#include <toruskit/sw_invariant.hpp>

#include <map>
#include <string>

namespace toruskit {

/**
 * Identification of basic classes across the surgery triple X, X0, X_{1/n}.
 * X and X_{1/n} share one key space (the tori are nullhomologous, so the
 * correspondence is unique); each X0 coset base maps to at most one shared
 * key via `shared` (identity on the base when absent).  `t0_pairing` records
 * the declared intersection number of each X0 coset base with the core torus
 * class [T0]; the gluing formula requires it to be zero.
 */
struct ClassCorrespondence {
    std::map<ClassKey, ClassKey> shared;
    std::map<ClassKey, long long> t0_pairing;

    ClassKey shared_key_for(const ClassKey& coset_base) const {
        auto it = shared.find(coset_base);
        return it == shared.end() ? coset_base : it->second;
    }
};

enum class MmsEvaluation { coset_sum, single_term };

namespace detail {

/// Whether some X0 coset routes a (possibly cancelling) contribution to this
/// shared key.
inline bool coset_contributes(const std::map<ClassKey, SWCoeff>& coset_sum,
                              const ClassCorrespondence& corr, const ClassKey& key) {
    for (const auto& [base, total] : coset_sum)
        if (corr.shared_key_for(base) == key) return true;
    return false;
}

}  // namespace detail

/**
 * The Morgan-Mrowka-Szabo gluing formula
 *
 *   SW_{X_{1/n}}(k_{1/n}) = SW_X(k) + n * sum_i SW_{X0}(k0 + i*[T0])
 *
 * evaluated over the finite support of sw_x0.  Classes of either input with
 * no partner contribute 0 on the missing side; the output lists exactly the
 * nonzero terms, which are all the basic classes of X_{1/n}.  Under the
 * single_term path the translation sum is replaced by the shift-0 term,
 * which is only legitimate when a dual torus certificate collapses the sum.
 */
inline SWInvariant mms_combine(const SWInvariant& sw_x, const SWInvariant& sw_x0,
                               const ClassKey& t0, long long n, const ClassCorrespondence& corr,
                               MmsEvaluation eval = MmsEvaluation::coset_sum) {
    // group the X0 terms by [T0]-coset
    std::map<ClassKey, SWCoeff> coset_sum;
    std::map<ClassKey, SWCoeff> coset_at_zero;
    std::map<ClassKey, bool> coset_has_shifted;
    for (const auto& [key, coeff] : sw_x0.terms()) {
        if (key.coset() == t0.coset())
            throw adjunction_error("the core torus class itself cannot be a basic class");
        const ClassKey base = key.coset();
        auto pit = corr.t0_pairing.find(base);
        if (pit == corr.t0_pairing.end())
            throw adjunction_error("pairing with [T0] undeclared for basic class " + base.str());
        if (pit->second != 0)
            throw adjunction_error("basic class " + base.str() +
                                   " pairs nontrivially with [T0]");
        coset_sum[base] = coset_sum[base] + coeff;
        if (key.t0_shift == 0)
            coset_at_zero[base] = coset_at_zero[base] + coeff;
        else
            coset_has_shifted[base] = true;
    }

    SWInvariant out;
    for (const auto& [base, total] : coset_sum) {
        SWCoeff contribution = total;
        if (eval == MmsEvaluation::single_term) {
            if (coset_has_shifted.count(base))
                throw state_error("translation sum for " + base.str() +
                                  " does not collapse to the shift-0 term");
            contribution = coset_at_zero[base];
        }
        const ClassKey shared = corr.shared_key_for(base);
        out.add_term(shared, sw_x.coefficient(shared) + contribution.scaled(n));
    }
    // X classes with no X0 partner keep their coefficient unchanged
    for (const auto& [key, coeff] : sw_x.terms())
        if (!detail::coset_contributes(coset_sum, corr, key)) out.add_term(key, coeff);
    return out;
}

/**
 * A torus T_d with T_d.[T0] = 1 collapses the translation sum of the gluing
 * formula to its i = 0 term.  Returns whether the certificate applies; when
 * it does, mms_combine must produce identical output under either
 * evaluation path.
 */
inline bool single_term_reduction(const SWInvariant& /*sw_x0*/, const ClassKey& /*t0*/,
                                  bool dual_exists) {
    return dual_exists;
}

/// Least g with 2g - 2 >= s^2 + |k.s|: the adjunction lower bound for the
/// genus of an embedded surface in class s when SW is nonzero.
inline long long adjunction_min_genus(const HomClass& k, const HomClass& s) {
    const long long sq = square(s);
    if (sq < 0) throw precondition_error("adjunction bound stated for s^2 >= 0");
    long long pair = pairing(k, s);
    if (pair < 0) pair = checked_neg(pair);
    const long long x = checked_add(sq, pair);  // need 2g - 2 >= x
    return (x + 2 + (x % 2)) / 2;
}

/// Genus of a symplectic surface in class s: 2g - 2 = s^2 + K.s.
inline long long symplectic_genus(const HomClass& s, const HomClass& K) {
    const long long t = checked_add(square(s), pairing(K, s));
    if (t % 2 != 0)
        throw non_integral_genus_error("s^2 + K.s = " + std::to_string(t) + " is odd");
    return t / 2 + 1;
}

/// Nonvanishing certificate: a closed symplectic manifold with b+ >= 2 has
/// SW != 0.  This certifies existence only; the value, when needed, must be
/// supplied separately.
inline bool taubes_nonvanishing(const FourManifold& m) {
    if (!m.symplectic || !m.closed) return false;
    return b_plus(m) >= 2;
}

enum class LiLiuVerdict { consistent_with_rational, exotic_certificate, inapplicable };

/**
 * Every symplectic structure on a rational surface CP2 # k CP2bar pairs the
 * canonical class negatively with the form.  For a symplectic manifold
 * asserted homeomorphic to one: K.omega > 0 certifies it is not
 * diffeomorphic to the rational surface, K.omega < 0 is consistent with it,
 * and everything else is inapplicable.
 */
inline LiLiuVerdict li_liu_sign_check(const FourManifold& m) {
    if (!m.symplectic) return LiLiuVerdict::inapplicable;
    switch (m.symplectic->k_dot_omega_sign) {
        case PairingSign::positive: return LiLiuVerdict::exotic_certificate;
        case PairingSign::negative: return LiLiuVerdict::consistent_with_rational;
        case PairingSign::zero: return LiLiuVerdict::inapplicable;
    }
    return LiLiuVerdict::inapplicable;
}

inline std::string verdict_name(LiLiuVerdict v) {
    switch (v) {
        case LiLiuVerdict::consistent_with_rational: return "consistent_with_rational";
        case LiLiuVerdict::exotic_certificate: return "exotic_certificate";
        case LiLiuVerdict::inapplicable: return "inapplicable";
    }
    return "?";
}

}  // namespace toruskit
