#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ssoba/audio.hpp"

namespace ssoba {

enum class SplineOrder { Linear, Quadratic, Cubic };

std::string_view spline_order_name(SplineOrder order);

// The known (position, amplitude) points a spline is fitted through.
// Positions are sample indices, strictly increasing.
struct KnotSet {
  std::vector<double> xs;
  std::vector<double> ys;

  std::size_t size() const noexcept { return xs.size(); }
};

// One polynomial piece in local coordinates: on [x_left, x_right] the value
// is c[0] + c[1]*u + c[2]*u^2 + c[3]*u^3 with u = x - x_left.
struct SplineSegment {
  double x_left = 0.0;
  double x_right = 0.0;
  double c[4] = {0.0, 0.0, 0.0, 0.0};

  double value(double x) const noexcept;
  double derivative(double x) const noexcept;
  double second_derivative(double x) const noexcept;
};

// Piecewise polynomial interpolant. Evaluation outside the knot range is
// clamped to the end knots (no extrapolation).
class Spline {
 public:
  Spline(std::vector<SplineSegment> segments, SplineOrder effective_order);

  double evaluate(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  SplineOrder order() const noexcept { return effective_order_; }
  const std::vector<SplineSegment>& segments() const noexcept { return segments_; }

 private:
  std::size_t segment_index(double x) const;

  std::vector<SplineSegment> segments_;
  SplineOrder effective_order_;
};

// Piecewise lines joining consecutive knots. Needs >= 2 knots.
Spline fit_linear(const KnotSet& knots);

// Piecewise parabolas: interpolation at both interval ends plus first-
// derivative continuity, closed by a linear first segment. Needs >= 3
// knots; degrades to linear on exactly 2.
Spline fit_quadratic(const KnotSet& knots);

// Natural cubic spline: C1/C2 continuity at interior knots and zero second
// derivative at both ends, solved by the tridiagonal recurrence. Needs
// >= 4 knots; degrades to quadratic on 3 and linear on 2.
Spline fit_cubic(const KnotSet& knots);

// Fit at the requested order, degrading to the highest feasible one when
// the knots are too few. The returned spline reports the order actually
// used.
Spline fit(const KnotSet& knots, SplineOrder requested);

struct ReconstructionResult {
  AudioObject audio;
  SplineOrder requested_order = SplineOrder::Cubic;
  // Order actually used after any degrade; Linear also stands in for the
  // single-knot hold.
  SplineOrder effective_order = SplineOrder::Cubic;
};

// Fill the missing samples of a sparse object by spline evaluation at the
// dropped indices. Known samples are copied verbatim; missing samples
// before the first or after the last known one hold the nearest known
// value.
ReconstructionResult reconstruct(const SparseObject& sparse, SplineOrder order, std::uint32_t sample_rate);

}  // namespace ssoba
