#pragma once

#include <toruskit/checked.hpp>
#include <toruskit/errors.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace toruskit {

/**
 * The odd diagonal intersection lattice <1> + b<-1> of a simply connected
 * closed 4-manifold with b+ = 1, in the orthogonal basis {h, e_1, ..., e_b}
 * with h.h = 1, e_i.e_i = -1 and mixed products 0.
 */
struct IntersectionLattice {
    long long b_minus = 0;  // number of <-1> summands

    std::size_t rank() const { return static_cast<std::size_t>(b_minus) + 1; }
    long long signature() const { return 1 - b_minus; }

    bool operator==(const IntersectionLattice& o) const { return b_minus == o.b_minus; }
    bool operator!=(const IntersectionLattice& o) const { return !(*this == o); }
};

/**
 * An integral second-homology class alpha*h - sum beta_i*e_i, stored as the
 * coefficient vector (alpha, beta_1, ..., beta_b).  The minus sign in front
 * of the beta_i is a storage convention only; the pairing formula
 * alpha_u*alpha_v - sum beta_{u,i}*beta_{v,i} is the same either way.
 */
class HomClass {
public:
    HomClass() = default;

    explicit HomClass(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw dimension_error("a homology class needs rank >= 1");
    }

    static HomClass zero(std::size_t rank) {
        return HomClass(std::vector<long long>(rank, 0));
    }

    std::size_t rank() const { return c_.size(); }
    long long alpha() const { return c_[0]; }
    long long beta(std::size_t i) const { return c_.at(i); }  // i in [1, rank)
    const std::vector<long long>& coeffs() const { return c_; }

    bool is_zero() const {
        for (long long v : c_)
            if (v != 0) return false;
        return true;
    }

    HomClass operator-() const {
        std::vector<long long> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = checked_neg(c_[i]);
        return HomClass(std::move(r));
    }

    HomClass operator+(const HomClass& o) const {
        require_same_rank(o);
        std::vector<long long> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = checked_add(c_[i], o.c_[i]);
        return HomClass(std::move(r));
    }

    HomClass operator-(const HomClass& o) const {
        require_same_rank(o);
        std::vector<long long> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = checked_sub(c_[i], o.c_[i]);
        return HomClass(std::move(r));
    }

    bool operator==(const HomClass& o) const { return c_ == o.c_; }
    bool operator!=(const HomClass& o) const { return !(*this == o); }
    bool operator<(const HomClass& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        return c_ < o.c_;
    }

    /// Renders e.g. (3,1,1,1) as "3h-e1-e2-e3".
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        auto append = [&s](long long coeff, const std::string& sym) {
            if (coeff == 0) return;
            if (coeff > 0 && !s.empty()) s += "+";
            if (coeff == -1)
                s += "-";
            else if (coeff != 1)
                s += std::to_string(coeff);
            s += sym;
        };
        append(c_[0], "h");
        for (std::size_t i = 1; i < c_.size(); ++i)
            append(checked_neg(c_[i]), "e" + std::to_string(i));
        return s;
    }

    void require_same_rank(const HomClass& o) const {
        if (c_.size() != o.c_.size())
            throw dimension_error("rank mismatch: " + std::to_string(c_.size()) + " vs " +
                                  std::to_string(o.c_.size()));
    }

private:
    std::vector<long long> c_;
};

/// Intersection pairing u.v = alpha_u*alpha_v - sum beta_{u,i}*beta_{v,i}.
inline long long pairing(const HomClass& u, const HomClass& v) {
    u.require_same_rank(v);
    __int128 acc = static_cast<__int128>(u.alpha()) * v.alpha();
    for (std::size_t i = 1; i < u.rank(); ++i)
        acc -= static_cast<__int128>(u.beta(i)) * v.beta(i);
    if (acc > std::numeric_limits<long long>::max() || acc < std::numeric_limits<long long>::min())
        throw overflow_error("intersection pairing exceeds 64-bit range");
    return static_cast<long long>(acc);
}

/// Self-intersection k.k.
inline long long square(const HomClass& k) { return pairing(k, k); }

/// Nonnegativity of the Seiberg-Witten moduli-space dimension:
/// k^2 >= 3*sign + 2*e.
inline bool moduli_dimension_bound(const HomClass& k, long long e, long long sign) {
    return square(k) >= checked_add(checked_mul(3, sign), checked_mul(2, e));
}

namespace detail {

// Coefficient values in the order 0, 1, -1, 2, -2, ...  The search below and
// the naive test oracle both enumerate in this order, so "first witness"
// means the same vector for both.
inline long long spiral_value(long long step) {
    return (step % 2 != 0) ? (step + 1) / 2 : -(step / 2);
}

struct IsotropicSearch {
    const std::vector<long long>& k;
    long long bound;
    std::vector<long long> ksq_suffix;  // sum of k_i^2 over positions >= j
    std::vector<long long> t;

    explicit IsotropicSearch(const HomClass& kk, long long b) : k(kk.coeffs()), bound(b) {
        const std::size_t n = k.size();
        ksq_suffix.assign(n + 1, 0);
        for (std::size_t i = n; i-- > 0;)
            ksq_suffix[i] = checked_add(ksq_suffix[i + 1], checked_mul(k[i], k[i]));
        t.assign(n, 0);
    }

    // Positions j >= 1 all carry diagonal -1.  need_sq is the exact value the
    // remaining squares must sum to; need_dot the exact value the remaining
    // sum of k_i * t_i must reach.  Both prunes are valid for arbitrary
    // integers: the range bound on squares, and Cauchy-Schwarz
    // (sum k_i t_i)^2 <= (sum k_i^2)(sum t_i^2) on the suffix.
    bool descend(std::size_t j, long long need_sq, long long need_dot) {
        if (need_sq < 0) return false;
        const auto remaining = static_cast<__int128>(k.size() - j);
        if (need_sq > remaining * bound * bound) return false;
        if (static_cast<__int128>(need_dot) * need_dot >
            static_cast<__int128>(ksq_suffix[j]) * need_sq)
            return false;
        if (j == k.size()) return need_sq == 0 && need_dot == 0;
        for (long long step = 0; step <= 2 * bound; ++step) {
            const long long v = spiral_value(step);
            t[j] = v;
            if (descend(j + 1, checked_sub(need_sq, checked_mul(v, v)),
                        checked_sub(need_dot, checked_mul(k[j], v))))
                return true;
        }
        return false;
    }
};

}  // namespace detail

/**
 * Exhaustive search for a nonzero class T with T^2 = 0 and k.T = 0, over all
 * integer vectors with coefficients in [-bound, bound].  Returns the first
 * such T in product-lexicographic order with components ordered
 * 0, 1, -1, 2, -2, ..., or nothing if the box holds no witness.  A miss is
 * only "no witness within the box", never a proof of emptiness.
 */
inline std::optional<HomClass> find_isotropic_orthogonal(const HomClass& k, long long bound = 20) {
    if (bound < 1) throw precondition_error("search bound must be >= 1");
    detail::IsotropicSearch search(k, bound);
    // The leading coefficient sits on the +1 diagonal entry; splitting it off
    // keeps the suffix homogeneous (all -1 entries).
    for (long long step = 0; step <= 2 * bound; ++step) {
        const long long a = detail::spiral_value(step);
        search.t[0] = a;
        const long long need_sq = checked_mul(a, a);
        const long long need_dot = checked_mul(k.coeffs()[0], a);
        if (search.descend(1, need_sq, need_dot)) {
            HomClass witness{search.t};
            if (!witness.is_zero()) return witness;
            // a = 0 with an all-zero suffix is the excluded zero vector; any
            // genuine witness with a = 0 has a nonzero suffix and is found in
            // the recursion, so reaching here only happens for the zero leaf.
            continue;
        }
    }
    return std::nullopt;
}

/**
 * The analytic obstruction of the square-zero-torus lemma: for a basic class
 * k in a b+ = 1, b- <= 8 diagonal lattice, k^2 > 0 (equivalently
 * alpha^2 > sum beta_i^2) forces every class T with T^2 = 0 and k.T = 0 to
 * vanish, by Cauchy-Schwarz.  Returns true when the obstruction holds.
 */
inline bool essential_torus_obstruction(const HomClass& k) {
    const long long b_minus = static_cast<long long>(k.rank()) - 1;
    if (b_minus > 8)
        throw hypothesis_error("lemma requires b- <= 8, got b- = " + std::to_string(b_minus));
    return square(k) > 0;
}

}  // namespace toruskit
