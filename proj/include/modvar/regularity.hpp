#pragma once

#include <cstddef>
#include <vector>

#include "modvar/grid.hpp"
#include "modvar/modulus.hpp"

namespace modvar {

/// Shape of a nondecreasing profile n |-> v_n up to n_max.
///   Sublinear    — terminal slope v_nmax/n_max fell below theta * v_1
///   Linear       — normalized profile stayed >= 1 - theta throughout
///   Inconclusive — neither
enum class GrowthVerdict { Sublinear, Linear, Inconclusive };

const char* to_string(GrowthVerdict v);

/// Growth heuristic shared by the regularity and selection reports.
/// v_1 == 0 classifies as Sublinear (the profile is identically zero).
GrowthVerdict classify_growth(const std::vector<double>& values, double theta);

struct RegularityReport {
    std::vector<double> nu_values;   // raw profile, nu_1..nu_nmax
    std::vector<double> normalized;  // nu_n/(n*nu_1), or nu_n/n when nu_1 == 0
    double nu1 = 0.0;
    double terminal_slope = 0.0;     // nu_nmax / n_max
    double theta = 1e-3;
    GrowthVerdict verdict = GrowthVerdict::Inconclusive;
    bool degenerate_nu1 = false;     // nu_1 == 0: f and g differ by an increment-null perturbation

    /// Verdict in regularity vocabulary: "equivalent" (f ~ g), "not-equivalent",
    /// "inconclusive".
    const char* verdict_label() const;
};

/// Desk-scale membership evidence for the regularity class R(g). The o(n)
/// criterion is asymptotic; on a finite grid the verdict encodes growth shape
/// up to n_max, with theta and n_max mandatory surfaced parameters.
RegularityReport regularity_profile(const SampledFunction& f, const SampledFunction& g,
                                    std::size_t n_max, const IncrementMode& mode,
                                    double theta = 1e-3);

enum class EpsVarSolver { TautString, ValueDp };

const char* to_string(EpsVarSolver s);

struct EpsVarResult {
    double eps = 0.0;
    double value = 0.0;              // minimal variation within the eps-tube
    SampledFunction witness;         // attains value, d_inf(f, witness) <= eps
    EpsVarSolver solver = EpsVarSolver::TautString;
};

/// Minimal Jordan variation among grid functions uniformly within eps of f,
/// space RealLine. Exact: taut-string walk through the tube
/// [f(t_i)-eps, f(t_i)+eps] (running flat interval; a forced exit adds the
/// gap and pins the string to the violated bound).
EpsVarResult epsilon_variation_real(const SampledFunction& f, double eps);

/// Same quantity on Finite spaces: shortest-path DP over states
/// (grid index, candidate point z with d(f(t_i), z) <= eps), edge cost d(z,z').
/// The tube is never empty since z = f(t_i) always qualifies.
EpsVarResult epsilon_variation_finite(const SampledFunction& f, double eps);

/// Dispatch by space kind; eps_list must be positive and ascending.
std::vector<EpsVarResult> evar_profile(const SampledFunction& f,
                                       const std::vector<double>& eps_list);

} // namespace modvar
