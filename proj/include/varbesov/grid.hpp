#pragma once

// Periodic sampling box [-L, L)^n standing in for R^n (n = 1 or 2), sampled
// fields on it, and the spectral operations the rest of the library builds on:
// quadrature, circular convolution and Fourier differentiation.

#include <array>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace varbesov {

class Grid {
 public:
  using Point = std::array<double, 2>;

  // dim in {1, 2}; points_per_axis a power of two (>= 4); half_width > 0.
  Grid(int dim, double half_width, std::size_t points_per_axis);

  // Desk-scale defaults: n=1 -> N=4096, L=16; n=2 -> N=256, L=8.
  static Grid default_for(int dim);

  int dim() const { return dim_; }
  double half_width() const { return half_width_; }
  std::size_t points_per_axis() const { return n_; }
  std::size_t size() const { return dim_ == 1 ? n_ : n_ * n_; }
  double spacing() const { return 2.0 * half_width_ / static_cast<double>(n_); }
  // h^n, the quadrature weight of one node.
  double cell_volume() const;
  // |box| = (2L)^n
  double volume() const;

  // Coordinate of index i along an axis: -L + i h. Node index layout is
  // row-major with axis 0 slowest.
  double coordinate(std::size_t i) const { return -half_width_ + static_cast<double>(i) * spacing(); }
  std::size_t axis_index(std::size_t node, int axis) const;
  Point point(std::size_t node) const;
  // Euclidean |x| of a node.
  double radius(std::size_t node) const;
  // Node closest to the origin (index N/2 on every axis).
  std::size_t origin_node() const;

  // Angular wavenumber of FFT-ordered index k along an axis: (k or k-N) * pi / L.
  double wavenumber(std::size_t k) const;
  // Wavevector of an FFT-ordered spectral node.
  Point wavevector(std::size_t spectral_node) const;
  double frequency_radius(std::size_t spectral_node) const;
  // Largest resolvable |xi| along an axis: pi N / (2L).
  double nyquist() const { return std::numbers::pi * static_cast<double>(n_) / (2.0 * half_width_); }

  // Shortest periodic distance between two nodes.
  double min_image_distance(std::size_t a, std::size_t b) const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.dim_ == b.dim_ && a.n_ == b.n_ && a.half_width_ == b.half_width_;
  }

 private:
  int dim_;
  double half_width_;
  std::size_t n_;
};

// A real sample per grid node; values are always finite.
class Field {
 public:
  explicit Field(Grid grid);  // zero field
  Field(Grid grid, std::vector<double> values);

  static Field constant(const Grid& grid, double value);
  static Field sample(const Grid& grid, const std::function<double(const Grid::Point&)>& fn);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  double max_abs() const;
  bool is_zero() const;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(double c);
  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(Field a, double c) { return a *= c; }
  friend Field operator*(double c, Field a) { return a *= c; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

// Pointwise product and modulus.
Field multiply(const Field& a, const Field& b);
Field abs(const Field& f);
// chi_mask * f
Field restrict_to(const Field& f, const std::vector<bool>& mask);

void require_same_grid(const Grid& a, const Grid& b, const char* where);

// h^n * sum of samples.
double integrate(const Field& f);

// h^n-scaled circular convolution, (f*g)(x_i) = h^n sum_k f(x_k) g(x_i - x_k),
// evaluated through the DFT. Throws std::invalid_argument on a grid mismatch.
Field convolve(const Field& f, const Field& g);

// Fourier multiplier i*xi_axis. The Nyquist mode is dropped.
Field spectral_derivative(const Field& f, int axis);

// eta_{j,m}(x) = 2^{jn} (1 + 2^j |x|)^{-m}, |x| the minimum-image distance
// to the origin node.
Field eta_kernel(int j, double m, const Grid& grid);
// Cell averages of the same kernel, h^{-n} times its integral over each
// node's cell: exact in n = 1, sub-cell midpoint quadrature in n = 2. Keeps
// the discrete mass right when 2^{-j} is below the grid spacing, which point
// samples do not. Requires m > 1.
Field eta_kernel_cell_average(int j, double m, const Grid& grid);

// Largest deviation from the corner sample over the outer tenth of the box,
// relative to max(1, max|f|). Zero for constants and for fields decaying
// towards the boundary.
double boundary_deviation(const Field& f);
inline constexpr double kBoundaryTolerance = 1e-10;
// Throws std::domain_error when boundary_deviation(f) exceeds the tolerance.
void require_boundary_decay(const Field& f, const char* what);

}  // namespace varbesov
