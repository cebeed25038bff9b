#include "ssoba/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssoba/error.hpp"

namespace ssoba {

namespace {

void check_knots(const KnotSet& knots, std::size_t minimum) {
  if (knots.xs.size() != knots.ys.size())
    raise(Errc::NonMonotonicKnots, "knot positions and values differ in count");
  if (knots.size() < minimum)
    raise(Errc::TooFewKnots, "need at least " + std::to_string(minimum) + " knots, got " +
                                 std::to_string(knots.size()));
  for (std::size_t i = 1; i < knots.xs.size(); ++i) {
    if (!(knots.xs[i] > knots.xs[i - 1]))
      raise(Errc::NonMonotonicKnots, "knot positions must be strictly increasing at index " +
                                         std::to_string(i));
  }
}

std::vector<SplineSegment> make_segments(const KnotSet& knots) {
  std::vector<SplineSegment> segments(knots.size() - 1);
  for (std::size_t j = 0; j < segments.size(); ++j) {
    segments[j].x_left = knots.xs[j];
    segments[j].x_right = knots.xs[j + 1];
    segments[j].c[0] = knots.ys[j];
  }
  return segments;
}

}  // namespace

std::string_view spline_order_name(SplineOrder order) {
  switch (order) {
    case SplineOrder::Linear: return "linear";
    case SplineOrder::Quadratic: return "quadratic";
    case SplineOrder::Cubic: return "cubic";
  }
  return "unknown";
}

double SplineSegment::value(double x) const noexcept {
  const double u = x - x_left;
  return c[0] + u * (c[1] + u * (c[2] + u * c[3]));
}

double SplineSegment::derivative(double x) const noexcept {
  const double u = x - x_left;
  return c[1] + u * (2.0 * c[2] + u * 3.0 * c[3]);
}

double SplineSegment::second_derivative(double x) const noexcept {
  const double u = x - x_left;
  return 2.0 * c[2] + 6.0 * c[3] * u;
}

Spline::Spline(std::vector<SplineSegment> segments, SplineOrder effective_order)
    : segments_(std::move(segments)), effective_order_(effective_order) {}

std::size_t Spline::segment_index(double x) const {
  // Last segment whose left knot is <= x; clamps outside the knot range.
  auto it = std::upper_bound(segments_.begin(), segments_.end(), x,
                             [](double value, const SplineSegment& s) { return value < s.x_left; });
  if (it == segments_.begin()) return 0;
  return static_cast<std::size_t>(it - segments_.begin()) - 1;
}

double Spline::evaluate(double x) const {
  const SplineSegment& s = segments_[segment_index(x)];
  return s.value(std::clamp(x, segments_.front().x_left, segments_.back().x_right));
}

double Spline::derivative(double x) const {
  const SplineSegment& s = segments_[segment_index(x)];
  return s.derivative(std::clamp(x, segments_.front().x_left, segments_.back().x_right));
}

double Spline::second_derivative(double x) const {
  const SplineSegment& s = segments_[segment_index(x)];
  return s.second_derivative(std::clamp(x, segments_.front().x_left, segments_.back().x_right));
}

Spline fit_linear(const KnotSet& knots) {
  check_knots(knots, 2);
  std::vector<SplineSegment> segments = make_segments(knots);
  for (std::size_t j = 0; j < segments.size(); ++j) {
    const double h = knots.xs[j + 1] - knots.xs[j];
    segments[j].c[1] = (knots.ys[j + 1] - knots.ys[j]) / h;
  }
  return Spline(std::move(segments), SplineOrder::Linear);
}

Spline fit_quadratic(const KnotSet& knots) {
  check_knots(knots, 2);
  if (knots.size() == 2) return fit_linear(knots);

  // Slope chaining: with the first segment forced linear, first-derivative
  // continuity fixes every later segment from the previous one.
  std::vector<SplineSegment> segments = make_segments(knots);
  double slope = (knots.ys[1] - knots.ys[0]) / (knots.xs[1] - knots.xs[0]);
  segments[0].c[1] = slope;
  for (std::size_t j = 1; j < segments.size(); ++j) {
    const double h = knots.xs[j + 1] - knots.xs[j];
    const double d = (knots.ys[j + 1] - knots.ys[j]) / h;
    segments[j].c[1] = slope;
    segments[j].c[2] = (d - slope) / h;
    slope = 2.0 * d - slope;
  }
  return Spline(std::move(segments), SplineOrder::Quadratic);
}

Spline fit_cubic(const KnotSet& knots) {
  check_knots(knots, 2);
  if (knots.size() == 2) return fit_linear(knots);
  if (knots.size() == 3) return fit_quadratic(knots);

  const std::size_t n = knots.size();
  std::vector<double> h(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) h[j] = knots.xs[j + 1] - knots.xs[j];

  // Second derivatives M_j at the knots; natural boundary pins M_0 = M_{n-1} = 0.
  // Interior rows: h_{j-1} M_{j-1} + 2(h_{j-1}+h_j) M_j + h_j M_{j+1}
  //              = 6 ((y_{j+1}-y_j)/h_j - (y_j-y_{j-1})/h_{j-1}).
  std::vector<double> m(n, 0.0);
  const std::size_t interior = n - 2;
  std::vector<double> diag(interior), rhs(interior);
  for (std::size_t k = 0; k < interior; ++k) {
    const std::size_t j = k + 1;
    diag[k] = 2.0 * (h[j - 1] + h[j]);
    rhs[k] = 6.0 * ((knots.ys[j + 1] - knots.ys[j]) / h[j] - (knots.ys[j] - knots.ys[j - 1]) / h[j - 1]);
  }

  // Thomas algorithm. The system is strictly diagonally dominant, so no
  // pivoting is needed.
  for (std::size_t k = 1; k < interior; ++k) {
    const double w = h[k] / diag[k - 1];
    diag[k] -= w * h[k];
    rhs[k] -= w * rhs[k - 1];
  }
  m[interior] = rhs[interior - 1] / diag[interior - 1];
  for (std::size_t k = interior - 1; k-- > 0;) {
    m[k + 1] = (rhs[k] - h[k + 1] * m[k + 2]) / diag[k];
  }

  std::vector<SplineSegment> segments = make_segments(knots);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    segments[j].c[1] = (knots.ys[j + 1] - knots.ys[j]) / h[j] - h[j] * (2.0 * m[j] + m[j + 1]) / 6.0;
    segments[j].c[2] = m[j] / 2.0;
    segments[j].c[3] = (m[j + 1] - m[j]) / (6.0 * h[j]);
  }
  return Spline(std::move(segments), SplineOrder::Cubic);
}

Spline fit(const KnotSet& knots, SplineOrder requested) {
  switch (requested) {
    case SplineOrder::Linear: return fit_linear(knots);
    case SplineOrder::Quadratic: return fit_quadratic(knots);
    case SplineOrder::Cubic: return fit_cubic(knots);
  }
  return fit_cubic(knots);
}

ReconstructionResult reconstruct(const SparseObject& sparse, SplineOrder order, std::uint32_t sample_rate) {
  if (sparse.known_mask.size() != sparse.values.size())
    raise(Errc::LengthMismatch, "sparse object mask and values differ in length");
  const std::size_t len = sparse.length();
  KnotSet knots;
  knots.xs.reserve(len);
  knots.ys.reserve(len);
  for (std::size_t t = 0; t < len; ++t) {
    if (sparse.known_mask[t]) {
      knots.xs.push_back(static_cast<double>(t));
      knots.ys.push_back(sparse.values[t]);
    }
  }
  if (knots.size() == 0)
    raise(Errc::AllMissing, "object " + std::to_string(sparse.object_index) + " has no known samples");

  ReconstructionResult result;
  result.requested_order = order;
  result.audio.sample_rate = sample_rate;
  result.audio.label = "obj" + std::to_string(sparse.object_index);
  result.audio.samples.assign(len, 0.0);

  if (knots.size() == 1) {
    // Single known sample: hold it everywhere.
    result.effective_order = SplineOrder::Linear;
    std::fill(result.audio.samples.begin(), result.audio.samples.end(), knots.ys.front());
    return result;
  }

  const Spline spline = fit(knots, order);
  result.effective_order = spline.order();

  // Known samples are copied verbatim. Missing samples inside the knot
  // range are spline evaluations; runs before the first or after the last
  // knot hold the nearest known value instead of extrapolating.
  const double first_known = knots.xs.front();
  const double last_known = knots.xs.back();
  std::size_t cursor = 0;
  const auto& segments = spline.segments();
  for (std::size_t t = 0; t < len; ++t) {
    if (sparse.known_mask[t]) {
      result.audio.samples[t] = sparse.values[t];
      continue;
    }
    const double x = static_cast<double>(t);
    if (x < first_known) {
      result.audio.samples[t] = knots.ys.front();
    } else if (x > last_known) {
      result.audio.samples[t] = knots.ys.back();
    } else {
      while (cursor + 1 < segments.size() && segments[cursor].x_right < x) ++cursor;
      result.audio.samples[t] = segments[cursor].value(x);
    }
  }
  return result;
}

}  // namespace ssoba
