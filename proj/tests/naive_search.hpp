#pragma once

// Test-only oracle: a plain full-box enumeration of isotropic classes
// orthogonal to k, with no pruning.  Enumerates coefficient vectors in the
// same product-lexicographic order as the library search (components ordered
// 0, 1, -1, 2, -2, ...), so a found witness must match exactly.  Only usable
// for small ranks and bounds.

#include <toruskit/lattice.hpp>

#include <optional>
#include <vector>

inline std::optional<toruskit::HomClass> naive_find_isotropic_orthogonal(
    const toruskit::HomClass& k, long long bound) {
    const std::size_t rank = k.rank();
    std::vector<long long> step(rank, 0);
    const long long steps_per_coord = 2 * bound + 1;
    auto value_of = [](long long s) { return (s % 2 != 0) ? (s + 1) / 2 : -(s / 2); };
    while (true) {
        std::vector<long long> coords(rank);
        for (std::size_t i = 0; i < rank; ++i) coords[i] = value_of(step[i]);
        toruskit::HomClass t{coords};
        if (!t.is_zero() && toruskit::square(t) == 0 && toruskit::pairing(k, t) == 0) return t;
        // odometer, rightmost coordinate fastest
        std::size_t pos = rank;
        while (pos > 0) {
            --pos;
            if (++step[pos] < steps_per_coord) break;
            step[pos] = 0;
            if (pos == 0) return std::nullopt;
        }
    }
}
