#pragma once

#include <cstddef>
#include <vector>

#include "modvar/grid.hpp"
#include "modvar/metric.hpp"

namespace modvar {

/// One two-point subset {s, t} of the grid, by index, s < t.
struct IndexPair {
    std::size_t s = 0, t = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Ordered pairs s_1 < t_1 <= s_2 < t_2 <= ... (shared endpoints allowed,
/// overlap forbidden).
using PairCollection = std::vector<IndexPair>;

/// Throws domain_error if `pairs` is not a valid collection on an m-point grid.
void require_valid_collection(const PairCollection& pairs, std::size_t m);

struct NuResult {
    double value = 0.0;
    PairCollection witness; // lexicographically smallest attaining collection
    bool exact = true;      // increments evaluated exactly (see increment_exact)
};

/// nu_k for k = 1..n_max plus a witness per k. Values are frozen at the
/// (m-1)-pair optimum for k > m-1 (finite-domain convention).
struct ModulusProfile {
    std::vector<double> values;              // values[k-1] = nu_k
    std::vector<PairCollection> witnesses;   // witnesses[k-1]
    IncrementKind mode = IncrementKind::GeneralSup;
    bool exact = true;
    std::size_t n_max() const { return values.size(); }
    double at(std::size_t n) const { return values.at(n - 1); }
};

/// Joint modulus of variation: max over collections of n non-overlapping
/// index pairs of the summed joint increments, by dynamic programming
/// D[k][j] = max(D[k][j-1], max_{i<j}(D[k-1][i] + w(i,j))). For n > m-1 the
/// m-1 value is returned. Ties in the witness break toward the
/// lexicographically smallest index sequence.
NuResult nu(const SampledFunction& f, const SampledFunction& g, std::size_t n,
            const IncrementMode& mode);

/// Value-only fast path of nu().
double nu_value(const SampledFunction& f, const SampledFunction& g, std::size_t n,
                const IncrementMode& mode);

/// Single-function (Chanturiya) modulus: the constant-companion reduction,
/// with pair weight d(f(s), f(t)) independent of mode.
NuResult nu(const SampledFunction& f, std::size_t n);
double nu_value(const SampledFunction& f, std::size_t n);

/// Exhaustive oracle over all valid pair collections. Guarded: m <= 14 and
/// n <= 5, otherwise refuses. Test use only.
double nu_bruteforce(const SampledFunction& f, const SampledFunction& g, std::size_t n,
                     const IncrementMode& mode);

ModulusProfile nu_profile(const SampledFunction& f, const SampledFunction& g,
                          std::size_t n_max, const IncrementMode& mode);
ModulusProfile nu_profile(const SampledFunction& f, std::size_t n_max);

/// nu_n restricted to grid points <= t_index (prefix domain).
double nu_prefix(const SampledFunction& f, const SampledFunction& g, std::size_t n,
                 std::size_t t_index, const IncrementMode& mode);

/// All prefix rows in one sweep: row k-1 holds t |-> nu_k(f,g; prefix t)
/// for k = 1..n_max. Row layout matches the DP table.
std::vector<std::vector<double>> nu_prefix_table(const SampledFunction& f,
                                                 const SampledFunction& g,
                                                 std::size_t n_max,
                                                 const IncrementMode& mode);

/// Jordan variation: sum of consecutive distances (the partition supremum
/// saturates on a finite grid).
double jordan_variation(const SampledFunction& f);

/// Joint variation V(f,g) = nu_{m-1}(f,g).
double joint_variation(const SampledFunction& f, const SampledFunction& g,
                       const IncrementMode& mode);

/// Max pairwise distance of values (diameter of the image).
double oscillation(const SampledFunction& f);

/// nu_1(f,g).
double joint_oscillation(const SampledFunction& f, const SampledFunction& g,
                         const IncrementMode& mode);

} // namespace modvar
