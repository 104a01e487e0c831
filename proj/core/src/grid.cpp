#include "eprgeo/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eprgeo {

Grid1D::Grid1D(double start, double stop, int n)
    : start_(start), stop_(stop), n_(n) {
  if (!(std::isfinite(start) && std::isfinite(stop))) {
    throw std::invalid_argument("Grid1D: endpoints must be finite");
  }
  if (!(stop > start)) {
    throw std::invalid_argument("Grid1D: stop must exceed start");
  }
  if (n < 5) {
    throw std::invalid_argument("Grid1D: need n >= 5, got " + std::to_string(n));
  }
  spacing_ = (stop - start) / static_cast<double>(n - 1);
}

std::vector<double> Grid1D::points() const {
  std::vector<double> xs(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) xs[static_cast<std::size_t>(i)] = point(i);
  return xs;
}

namespace {

void check_values(const std::vector<double>& values, std::size_t expected) {
  if (values.size() != expected) {
    throw std::invalid_argument("SampledField: value count " +
                                std::to_string(values.size()) +
                                " does not match grid point count " +
                                std::to_string(expected));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw std::invalid_argument("SampledField: non-finite value at flat index " +
                                  std::to_string(i));
    }
  }
}

}  // namespace

SampledField::SampledField(Grid1D grid, std::vector<double> values)
    : grids_{grid}, values_(std::move(values)) {
  check_values(values_, static_cast<std::size_t>(grid.n()));
}

SampledField::SampledField(Grid1D grid_x1, Grid1D grid_x2, std::vector<double> values)
    : grids_{grid_x1, grid_x2}, values_(std::move(values)) {
  check_values(values_, static_cast<std::size_t>(grid_x1.n()) *
                            static_cast<std::size_t>(grid_x2.n()));
}

const Grid1D& SampledField::grid(int axis) const {
  if (axis < 0 || axis >= dim()) {
    throw std::invalid_argument("SampledField: axis out of range");
  }
  return grids_[static_cast<std::size_t>(axis)];
}

double SampledField::value(int i) const {
  if (dim() != 1) throw std::logic_error("SampledField: 1D accessor on 2D field");
  return values_.at(static_cast<std::size_t>(i));
}

double SampledField::value(int i, int j) const {
  if (dim() != 2) throw std::logic_error("SampledField: 2D accessor on 1D field");
  const auto n2 = static_cast<std::size_t>(grids_[1].n());
  return values_.at(static_cast<std::size_t>(i) * n2 + static_cast<std::size_t>(j));
}

StencilKind SampledField::stencil_at(std::size_t flat_index) const {
  return stencils_.at(flat_index);
}

void SampledField::set_stencils(std::vector<StencilKind> stencils) {
  if (stencils.size() != values_.size()) {
    throw std::invalid_argument("SampledField: stencil metadata size mismatch");
  }
  stencils_ = std::move(stencils);
}

}  // namespace eprgeo
