#pragma once

#include <memory>
#include <vector>

#include "modvar/metric.hpp"
#include "modvar/rational.hpp"

namespace modvar {

/// Arithmetic class of a sample abscissa. Deliberately metadata: generators
/// and classifications read the tag, never the numeric value, so an
/// "irrational" point may be stored as a rational approximation.
enum class PointClass { Rational, Irrational };

/// Strictly increasing sample abscissas with exact rational coordinates.
class Grid {
public:
    Grid(std::vector<Rational> points, std::vector<PointClass> tags);

    std::size_t size() const { return points_.size(); }
    const Rational& at(std::size_t i) const { return points_[i]; }
    PointClass tag(std::size_t i) const { return tags_[i]; }
    const Rational& a() const { return points_.front(); }
    const Rational& b() const { return points_.back(); }
    /// b - a as a double (exact rational subtraction, then one rounding).
    double span() const { return span_; }
    double abscissa(std::size_t i) const { return points_[i].to_double(); }

    bool same_as(const Grid& other) const;

    /// Uniform all-rational grid: k/(m-1), k = 0..m-1 over [0,1].
    static Grid uniform(std::size_t m);

private:
    std::vector<Rational> points_;
    std::vector<PointClass> tags_;
    double span_ = 0.0;
};

using GridPtr = std::shared_ptr<const Grid>;
using SpacePtr = std::shared_ptr<const MetricSpace>;

/// A map from grid indices into a metric space: one SpacePoint per abscissa.
class SampledFunction {
public:
    SampledFunction(GridPtr grid, SpacePtr space, std::vector<SpacePoint> values);

    const Grid& grid() const { return *grid_; }
    const MetricSpace& space() const { return *space_; }
    GridPtr grid_ptr() const { return grid_; }
    SpacePtr space_ptr() const { return space_; }
    std::size_t size() const { return values_.size(); }
    const SpacePoint& value(std::size_t i) const { return values_[i]; }
    const std::vector<SpacePoint>& values() const { return values_; }

    static SampledFunction constant(GridPtr grid, SpacePtr space, SpacePoint value);

    /// Throws domain_error unless `other` shares this function's grid and space.
    void require_same_domain(const SampledFunction& other) const;

private:
    GridPtr grid_;
    SpacePtr space_;
    std::vector<SpacePoint> values_;
};

/// Indexed family {f_j} sharing one grid and space; at least two members.
class FunctionSequence {
public:
    explicit FunctionSequence(std::vector<SampledFunction> members);

    std::size_t size() const { return members_.size(); }
    const SampledFunction& at(std::size_t j) const { return members_[j]; }
    const std::vector<SampledFunction>& members() const { return members_; }
    const Grid& grid() const { return members_.front().grid(); }
    const MetricSpace& space() const { return members_.front().space(); }

    void require_same_domain(const FunctionSequence& other) const;

private:
    std::vector<SampledFunction> members_;
};

/// Max over grid points of d(f(t), g(t)).
double uniform_distance(const SampledFunction& f, const SampledFunction& g);

} // namespace modvar
