#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace central {

/// Ghost layers on every field. Interface values need one neighbor, the flux
/// difference one more, and the five-point diffusion stencils evaluated at
/// reconstructed point values need a third.
inline constexpr int kGhostWidth = 3;

enum class BoundaryKind { Periodic, OutflowExtrapolate };

enum class Axis { X, Y };

/// Uniform cell-centered grid on [x_min, x_max]. Cell j spans
/// [x_min + j dx, x_min + (j+1) dx].
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 1;
  int ghost_width = kGhostWidth;

  static Grid1D uniform(double x_min, double x_max, int n_cells, int ghost_width = kGhostWidth) {
    if (!(x_max > x_min)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
    if (n_cells < 1) throw std::invalid_argument("Grid1D: n_cells must be positive");
    if (ghost_width < 2) throw std::invalid_argument("Grid1D: ghost_width must be >= 2");
    return Grid1D{x_min, x_max, n_cells, ghost_width};
  }

  double dx() const noexcept { return (x_max - x_min) / n_cells; }
  double length() const noexcept { return x_max - x_min; }
  double center(int j) const noexcept { return x_min + (j + 0.5) * dx(); }
  double left_face(int j) const noexcept { return x_min + j * dx(); }
  int padded() const noexcept { return n_cells + 2 * ghost_width; }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;
};

struct Grid2D {
  Grid1D x;
  Grid1D y;

  static Grid2D uniform(double x_min, double x_max, int n_x, double y_min, double y_max, int n_y,
                        int ghost_width = kGhostWidth) {
    return Grid2D{Grid1D::uniform(x_min, x_max, n_x, ghost_width),
                  Grid1D::uniform(y_min, y_max, n_y, ghost_width)};
  }

  int nx() const noexcept { return x.n_cells; }
  int ny() const noexcept { return y.n_cells; }
  double dx() const noexcept { return x.dx(); }
  double dy() const noexcept { return y.dx(); }
  int ghost_width() const noexcept { return x.ghost_width; }

  friend bool operator==(const Grid2D&, const Grid2D&) = default;
};

/// Cell averages of an M-component system on a 1D grid, ghost layers included.
/// Cell indices run over [-ghost, n_cells + ghost); storage is component-major.
template <std::size_t M = 1>
class Field1D {
 public:
  using State = std::array<double, M>;
  static constexpr std::size_t components = M;

  Field1D() = default;
  explicit Field1D(const Grid1D& grid) : grid_(grid), data_(M * grid.padded(), 0.0) {}

  const Grid1D& grid() const noexcept { return grid_; }
  int n_cells() const noexcept { return grid_.n_cells; }
  int ghost_width() const noexcept { return grid_.ghost_width; }

  double& operator()(std::size_t c, int j) noexcept { return data_[index(c, j)]; }
  double operator()(std::size_t c, int j) const noexcept { return data_[index(c, j)]; }

  /// Scalar shorthand.
  double& operator[](int j) noexcept
    requires(M == 1)
  {
    return data_[index(0, j)];
  }
  double operator[](int j) const noexcept
    requires(M == 1)
  {
    return data_[index(0, j)];
  }

  State state(int j) const noexcept {
    State s;
    for (std::size_t c = 0; c < M; ++c) s[c] = (*this)(c, j);
    return s;
  }
  void set_state(int j, const State& s) noexcept {
    for (std::size_t c = 0; c < M; ++c) (*this)(c, j) = s[c];
  }

  /// Component c including ghosts; element 0 is cell -ghost.
  std::span<double> component(std::size_t c) noexcept {
    return {data_.data() + c * grid_.padded(), static_cast<std::size_t>(grid_.padded())};
  }
  std::span<const double> component(std::size_t c) const noexcept {
    return {data_.data() + c * grid_.padded(), static_cast<std::size_t>(grid_.padded())};
  }
  /// Interior cells [0, n) of component c.
  std::span<const double> interior(std::size_t c = 0) const noexcept {
    return component(c).subspan(grid_.ghost_width, grid_.n_cells);
  }

  std::vector<double>& raw() noexcept { return data_; }
  const std::vector<double>& raw() const noexcept { return data_; }

  /// Fill interior cells from a function of the cell index.
  template <class F>
  void fill(F&& f) {
    for (int j = 0; j < n_cells(); ++j) set_state(j, f(j));
  }

  Field1D& operator+=(const Field1D& o) {
    assert(grid_ == o.grid_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Field1D& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }
  friend Field1D operator+(Field1D a, const Field1D& b) { return a += b; }
  friend Field1D operator*(double s, Field1D a) { return a *= s; }

 private:
  std::size_t index(std::size_t c, int j) const noexcept {
    assert(c < M && j >= -grid_.ghost_width && j < grid_.n_cells + grid_.ghost_width);
    return c * grid_.padded() + static_cast<std::size_t>(j + grid_.ghost_width);
  }

  Grid1D grid_{};
  std::vector<double> data_;
};

/// Scalar cell averages (or point values) on a 2D grid with ghost layers.
/// (i, j) indexes (x, y); storage is y-major.
class Field2D {
 public:
  Field2D() = default;
  explicit Field2D(const Grid2D& grid)
      : grid_(grid), data_(static_cast<std::size_t>(grid.x.padded()) * grid.y.padded(), 0.0) {}

  const Grid2D& grid() const noexcept { return grid_; }
  int nx() const noexcept { return grid_.nx(); }
  int ny() const noexcept { return grid_.ny(); }
  int ghost_width() const noexcept { return grid_.ghost_width(); }

  double& operator()(int i, int j) noexcept { return data_[index(i, j)]; }
  double operator()(int i, int j) const noexcept { return data_[index(i, j)]; }

  std::vector<double>& raw() noexcept { return data_; }
  const std::vector<double>& raw() const noexcept { return data_; }

  template <class F>
  void fill(F&& f) {
    for (int j = 0; j < ny(); ++j)
      for (int i = 0; i < nx(); ++i) (*this)(i, j) = f(i, j);
  }

  double interior_sum() const noexcept {
    double s = 0.0;
    for (int j = 0; j < ny(); ++j)
      for (int i = 0; i < nx(); ++i) s += (*this)(i, j);
    return s;
  }

  Field2D& operator+=(const Field2D& o) {
    assert(grid_ == o.grid_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Field2D& operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
  }
  friend Field2D operator+(Field2D a, const Field2D& b) { return a += b; }
  friend Field2D operator*(double s, Field2D a) { return a *= s; }

 private:
  std::size_t index(int i, int j) const noexcept {
    const int g = grid_.ghost_width();
    assert(i >= -g && i < nx() + g && j >= -g && j < ny() + g);
    return static_cast<std::size_t>(j + g) * grid_.x.padded() + static_cast<std::size_t>(i + g);
  }

  Grid2D grid_{};
  std::vector<double> data_;
};

namespace detail {

/// Source interior index for ghost index j under the given boundary kind.
inline int boundary_source(int j, int n, BoundaryKind kind) noexcept {
  if (kind == BoundaryKind::Periodic) return ((j % n) + n) % n;
  return std::clamp(j, 0, n - 1);
}

}  // namespace detail

/// Fill the ghost layers of every component. Interior cells are untouched.
template <std::size_t M>
Field1D<M>& apply_boundary(Field1D<M>& field, BoundaryKind kind) {
  const int n = field.n_cells();
  const int g = field.ghost_width();
  for (std::size_t c = 0; c < M; ++c) {
    for (int k = 1; k <= g; ++k) {
      field(c, -k) = field(c, detail::boundary_source(-k, n, kind));
      field(c, n - 1 + k) = field(c, detail::boundary_source(n - 1 + k, n, kind));
    }
  }
  return field;
}

/// Fill the x ghosts of every interior row, then the y ghosts of every padded
/// column, so corner ghosts are consistent as well.
inline Field2D& apply_boundary(Field2D& field, BoundaryKind kind_x, BoundaryKind kind_y) {
  const int nx = field.nx();
  const int ny = field.ny();
  const int g = field.ghost_width();
  for (int j = 0; j < ny; ++j) {
    for (int k = 1; k <= g; ++k) {
      field(-k, j) = field(detail::boundary_source(-k, nx, kind_x), j);
      field(nx - 1 + k, j) = field(detail::boundary_source(nx - 1 + k, nx, kind_x), j);
    }
  }
  for (int i = -g; i < nx + g; ++i) {
    for (int k = 1; k <= g; ++k) {
      field(i, -k) = field(i, detail::boundary_source(-k, ny, kind_y));
      field(i, ny - 1 + k) = field(i, detail::boundary_source(ny - 1 + k, ny, kind_y));
    }
  }
  return field;
}

inline Field2D& apply_boundary(Field2D& field, BoundaryKind kind) {
  return apply_boundary(field, kind, kind);
}

struct ErrorNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// Pointwise errors of values sampled at cell centers against an exact profile.
/// L1 and L2 are dx-weighted; the sum runs left to right.
template <class Exact>
ErrorNorms error_norms(std::span<const double> approx, Exact&& exact, const Grid1D& grid) {
  assert(approx.size() == static_cast<std::size_t>(grid.n_cells));
  ErrorNorms e;
  double sum_sq = 0.0;
  for (int j = 0; j < grid.n_cells; ++j) {
    const double d = std::abs(approx[j] - exact(grid.center(j)));
    e.l1 += d;
    sum_sq += d * d;
    e.linf = std::max(e.linf, d);
  }
  e.l1 *= grid.dx();
  e.l2 = std::sqrt(grid.dx() * sum_sq);
  return e;
}

/// 2D analogue over interior cells, weighted by dx dy.
template <class Exact>
ErrorNorms error_norms(const Field2D& approx, Exact&& exact) {
  const Grid2D& g = approx.grid();
  ErrorNorms e;
  double sum_sq = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double d = std::abs(approx(i, j) - exact(g.x.center(i), g.y.center(j)));
      e.l1 += d;
      sum_sq += d * d;
      e.linf = std::max(e.linf, d);
    }
  }
  const double area = g.dx() * g.dy();
  e.l1 *= area;
  e.l2 = std::sqrt(area * sum_sq);
  return e;
}

/// Sum of absolute jumps between neighbors; adds the wrap-around jump when periodic.
inline double total_variation(std::span<const double> values, bool periodic) {
  double tv = 0.0;
  for (std::size_t j = 0; j + 1 < values.size(); ++j) tv += std::abs(values[j + 1] - values[j]);
  if (periodic && values.size() > 1) tv += std::abs(values.front() - values.back());
  return tv;
}

inline double total_variation(const Field1D<1>& field, BoundaryKind kind) {
  return total_variation(field.interior(), kind == BoundaryKind::Periodic);
}

}  // namespace central
