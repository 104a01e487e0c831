/// @file grid.hpp
/// @brief Uniform 1D grids and sampled scalar fields (1D or 2D).

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace eprgeo {

/// Which stencil produced a derivative value at a point.
enum class StencilKind : std::uint8_t { central, forward, backward };

/// Uniform grid on [start, stop] with n >= 5 points.
/// point(i) = start + i*spacing; point(n-1) reproduces stop to rounding.
class Grid1D {
 public:
  Grid1D(double start, double stop, int n);

  double start() const { return start_; }
  double stop() const { return stop_; }
  int n() const { return n_; }
  double spacing() const { return spacing_; }

  double point(int i) const { return start_ + spacing_ * static_cast<double>(i); }
  std::vector<double> points() const;

  bool operator==(const Grid1D&) const = default;

 private:
  double start_;
  double stop_;
  double spacing_;
  int n_;
};

/// Real scalar field sampled on one Grid1D (1D) or on a tensor grid
/// grid(0) x grid(1) (2D, stored row-major with axis 0 the slow index).
/// Construction rejects non-finite values and shape mismatches.
///
/// Derivative fields produced by central_diff carry per-point stencil
/// metadata; fields built directly from samples carry none.
class SampledField {
 public:
  SampledField(Grid1D grid, std::vector<double> values);
  SampledField(Grid1D grid_x1, Grid1D grid_x2, std::vector<double> values);

  int dim() const { return static_cast<int>(grids_.size()); }
  const Grid1D& grid(int axis = 0) const;
  std::size_t size() const { return values_.size(); }

  double value(int i) const;
  double value(int i, int j) const;
  const std::vector<double>& values() const { return values_; }

  bool has_stencils() const { return !stencils_.empty(); }
  StencilKind stencil_at(std::size_t flat_index) const;
  void set_stencils(std::vector<StencilKind> stencils);

 private:
  std::vector<Grid1D> grids_;
  std::vector<double> values_;
  std::vector<StencilKind> stencils_;
};

}  // namespace eprgeo
