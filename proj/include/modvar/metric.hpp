#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modvar/defs.hpp"

namespace modvar {

enum class SpaceKind { Finite, Euclidean, RealLine };

/// A value in a metric space. For Finite spaces only `index` is meaningful;
/// for Euclidean/RealLine only `coords` (coords.size() == space dimension).
struct SpacePoint {
    std::int64_t index = -1;
    std::vector<double> coords;

    static SpacePoint finite(std::size_t i);
    static SpacePoint euclidean(std::vector<double> c);
    static SpacePoint real(double v) { return euclidean({v}); }

    bool is_finite_point() const { return index >= 0; }
    double scalar() const; // sole coordinate; throws unless 1-dimensional

    friend bool operator==(const SpacePoint& a, const SpacePoint& b) {
        return a.index == b.index && a.coords == b.coords;
    }
};

struct MetricViolation {
    std::string law;      // "symmetry" | "identity" | "positivity" | "triangle" | "nonnegative"
    std::size_t i = 0, j = 0, k = 0;
    std::string detail;
};

struct ValidationReport {
    std::vector<MetricViolation> violations;
    bool valid() const { return violations.empty(); }
};

/// Distance backend. Three variants:
///   Finite    — labelled point set with an explicit distance matrix and an
///               optional translation-invariant addition table;
///   Euclidean — R^N with the Euclidean norm;
///   RealLine  — R^1, additionally unlocking the taut-string solvers.
///
/// Immutable after construction. A Finite distance matrix is stored as given
/// and checked by validate(); the addition table, when present, is checked at
/// construction and rejected if it is not a commutative translation-invariant
/// operation on the point set.
class MetricSpace {
public:
    static MetricSpace finite(std::vector<std::string> labels,
                              std::vector<std::vector<double>> dist,
                              std::optional<std::vector<std::vector<std::size_t>>> add = std::nullopt);
    static MetricSpace euclidean(std::size_t dim);
    static MetricSpace real_line();

    SpaceKind kind() const { return kind_; }
    bool is_numeric() const { return kind_ != SpaceKind::Finite; }
    std::size_t dim() const { return dim_; }
    std::size_t point_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const;
    std::optional<std::size_t> label_index(std::string_view label) const;

    double matrix_at(std::size_t i, std::size_t j) const { return dist_[i * labels_.size() + j]; }

    bool has_addition() const { return !add_.empty(); }
    SpacePoint add(const SpacePoint& x, const SpacePoint& y) const;

    /// Checks that `p` denotes a point of this space; throws domain_error.
    void require_member(const SpacePoint& p) const;

    double distance(const SpacePoint& x, const SpacePoint& y) const;

    /// Metric-axiom check. Finite: every law over all pairs/triples, the
    /// violations returned as data. Euclidean/RealLine: always valid.
    ValidationReport validate() const;

    bool same_as(const MetricSpace& other) const;

    /// All points of a Finite space (empty for numeric backends).
    std::vector<SpacePoint> enumerate() const;

private:
    MetricSpace() = default;
    SpaceKind kind_ = SpaceKind::RealLine;
    std::size_t dim_ = 1;
    std::vector<std::string> labels_;
    std::vector<double> dist_; // row-major point_count^2
    std::vector<std::size_t> add_; // row-major, empty when absent
};

double distance(const MetricSpace& space, const SpacePoint& x, const SpacePoint& y);
ValidationReport validate_space(const MetricSpace& space);

enum class IncrementKind { GeneralSup, Semigroup, Norm };

/// Which joint-increment quantity to evaluate.
///   GeneralSup — sup_z |d(f(s),z)+d(g(t),z)-d(f(t),z)-d(g(s),z)|; exact on
///                Finite spaces, a certified lower bound over the four sample
///                values plus `extra_witnesses` on Euclidean ones.
///   Semigroup  — d(f(s)+g(t), f(t)+g(s)); Finite spaces with an addition table.
///   Norm       — |(f-g)(s) - (f-g)(t)| in the Euclidean norm; the documented
///                default on numeric backends.
struct IncrementMode {
    IncrementKind kind = IncrementKind::GeneralSup;
    std::vector<SpacePoint> extra_witnesses;

    static IncrementMode general_sup(std::vector<SpacePoint> extra = {});
    static IncrementMode semigroup();
    static IncrementMode norm();
    static IncrementMode default_for(const MetricSpace& space);
};

struct Increment {
    double value = 0.0;
    bool exact = true; // false only for GeneralSup on Euclidean backends
};

/// True iff the mode yields the mathematically exact increment on this space.
bool increment_exact(const IncrementMode& mode, const MetricSpace& space);

Increment joint_increment(const IncrementMode& mode, const MetricSpace& space,
                          const SpacePoint& fs, const SpacePoint& ft,
                          const SpacePoint& gs, const SpacePoint& gt);

/// A point z0 with max{d(x,z0), d(y,z0)} == d(x,y)/2, when one exists.
/// Finite: exhaustive search (smallest index wins). Euclidean: the coordinate
/// midpoint. Requires x != y.
std::optional<SpacePoint> midpoint_witness(const MetricSpace& space,
                                           const SpacePoint& x, const SpacePoint& y);

} // namespace modvar
