#include "varbesov/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "varbesov/fft.hpp"
#include "varbesov/kernels.hpp"

namespace varbesov {

Grid::Grid(int dim, double half_width, std::size_t points_per_axis)
    : dim_(dim), half_width_(half_width), n_(points_per_axis) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("Grid: dim must be 1 or 2");
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::invalid_argument("Grid: half_width must be positive");
  if (points_per_axis < 4 || !std::has_single_bit(points_per_axis))
    throw std::invalid_argument("Grid: points_per_axis must be a power of two >= 4");
}

Grid Grid::default_for(int dim) {
  return dim == 1 ? Grid(1, 16.0, 4096) : Grid(2, 8.0, 256);
}

double Grid::cell_volume() const {
  const double h = spacing();
  return dim_ == 1 ? h : h * h;
}

double Grid::volume() const {
  const double side = 2.0 * half_width_;
  return dim_ == 1 ? side : side * side;
}

std::size_t Grid::axis_index(std::size_t node, int axis) const {
  if (dim_ == 1) return node;
  return axis == 0 ? node / n_ : node % n_;
}

Grid::Point Grid::point(std::size_t node) const {
  if (dim_ == 1) return {coordinate(node), 0.0};
  return {coordinate(node / n_), coordinate(node % n_)};
}

double Grid::radius(std::size_t node) const {
  const Point x = point(node);
  return std::hypot(x[0], x[1]);
}

std::size_t Grid::origin_node() const {
  const std::size_t c = n_ / 2;
  return dim_ == 1 ? c : c * n_ + c;
}

double Grid::wavenumber(std::size_t k) const {
  const auto n = static_cast<std::ptrdiff_t>(n_);
  auto signed_k = static_cast<std::ptrdiff_t>(k);
  if (signed_k >= n / 2) signed_k -= n;
  return static_cast<double>(signed_k) * std::numbers::pi / half_width_;
}

Grid::Point Grid::wavevector(std::size_t spectral_node) const {
  if (dim_ == 1) return {wavenumber(spectral_node), 0.0};
  return {wavenumber(spectral_node / n_), wavenumber(spectral_node % n_)};
}

double Grid::frequency_radius(std::size_t spectral_node) const {
  const Point xi = wavevector(spectral_node);
  return std::hypot(xi[0], xi[1]);
}

double Grid::min_image_distance(std::size_t a, std::size_t b) const {
  const double period = 2.0 * half_width_;
  auto wrap = [&](double d) {
    d = std::abs(d);
    return std::min(d, period - d);
  };
  const Point pa = point(a);
  const Point pb = point(b);
  return std::hypot(wrap(pa[0] - pb[0]), dim_ == 1 ? 0.0 : wrap(pa[1] - pb[1]));
}

Field::Field(Grid grid) : grid_(grid), values_(grid.size(), 0.0) {}

Field::Field(Grid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw std::invalid_argument("Field: value count != grid size");
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("Field: values must be finite");
}

Field Field::constant(const Grid& grid, double value) {
  return Field(grid, std::vector<double>(grid.size(), value));
}

Field Field::sample(const Grid& grid, const std::function<double(const Grid::Point&)>& fn) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(grid.point(i));
  return Field(grid, std::move(v));
}

double Field::max_abs() const { return kernels::active().max_abs(values_.data(), values_.size()); }

bool Field::is_zero() const { return max_abs() == 0.0; }

Field& Field::operator+=(const Field& other) {
  require_same_grid(grid_, other.grid_, "Field::operator+=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_same_grid(grid_, other.grid_, "Field::operator-=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Field& Field::operator*=(double c) {
  for (double& v : values_) v *= c;
  return *this;
}

Field multiply(const Field& a, const Field& b) {
  require_same_grid(a.grid(), b.grid(), "multiply");
  Field out(a.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Field abs(const Field& f) {
  Field out(f.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(f[i]);
  return out;
}

Field restrict_to(const Field& f, const std::vector<bool>& mask) {
  if (mask.size() != f.size()) throw std::invalid_argument("restrict_to: mask size mismatch");
  Field out(f.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mask[i] ? f[i] : 0.0;
  return out;
}

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (!(a == b)) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

double integrate(const Field& f) {
  auto v = f.values();
  return f.grid().cell_volume() * kernels::active().sum(v.data(), v.size());
}

Field convolve(const Field& f, const Field& g) {
  require_same_grid(f.grid(), g.grid(), "convolve");
  const Grid& grid = f.grid();
  fft::Spectrum ff = fft::forward(f);
  fft::Spectrum fg = fft::forward(g);
  // Node N/2 sits at the origin, so the kernel index is offset by N/2 per
  // axis: a phase of (-1)^k on every axis.
  const std::size_t n = grid.points_per_axis();
  const double w = grid.cell_volume();
  for (std::size_t s = 0; s < ff.size(); ++s) {
    std::size_t parity = grid.dim() == 1 ? s : (s / n) + (s % n);
    const double phase = (parity & 1U) ? -w : w;
    ff[s] *= fg[s] * phase;
  }
  return fft::inverse(grid, std::move(ff));
}

Field spectral_derivative(const Field& f, int axis) {
  const Grid& grid = f.grid();
  if (axis < 0 || axis >= grid.dim()) throw std::invalid_argument("spectral_derivative: bad axis");
  fft::Spectrum s = fft::forward(f);
  const std::size_t n = grid.points_per_axis();
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::size_t idx = grid.dim() == 1 ? k : (axis == 0 ? k / n : k % n);
    if (idx == n / 2) {
      s[k] = 0.0;
      continue;
    }
    s[k] *= std::complex<double>(0.0, grid.wavenumber(idx));
  }
  return fft::inverse(grid, std::move(s));
}

Field eta_kernel(int j, double m, const Grid& grid) {
  if (j < 0) throw std::invalid_argument("eta_kernel: j must be >= 0");
  const double scale = std::ldexp(1.0, j);
  const double peak = std::ldexp(1.0, j * grid.dim());
  const std::size_t origin = grid.origin_node();
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = peak * std::pow(1.0 + scale * grid.min_image_distance(i, origin), -m);
  return Field(grid, std::move(v));
}

Field eta_kernel_cell_average(int j, double m, const Grid& grid) {
  if (j < 0) throw std::invalid_argument("eta_kernel_cell_average: j must be >= 0");
  if (!(m > 1.0)) throw std::invalid_argument("eta_kernel_cell_average: needs m > 1");
  const double scale = std::ldexp(1.0, j);
  const double h = grid.spacing();
  const std::size_t origin = grid.origin_node();
  std::vector<double> v(grid.size());
  if (grid.dim() == 1) {
    // integral_0^r 2^j (1 + 2^j t)^{-m} dt = (1 - (1 + 2^j r)^{1-m}) / (m - 1)
    auto tail = [&](double r) { return std::pow(1.0 + scale * r, 1.0 - m) / (m - 1.0); };
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double d = grid.min_image_distance(i, origin);
      const double lo = d - 0.5 * h;
      const double mass = lo <= 0.0 ? 2.0 * (1.0 / (m - 1.0) - tail(0.5 * h)) : tail(lo) - tail(d + 0.5 * h);
      v[i] = mass / h;
    }
    return Field(grid, std::move(v));
  }
  const double peak = scale * scale;
  const std::size_t n = grid.points_per_axis();
  const std::size_t ci = n / 2;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = grid.min_image_distance(i, origin);
    // Finer sub-cells where the kernel varies across the cell.
    const int sub = d < 2.5 * h ? 64 : d < 16.0 * h ? 8 : 1;
    const double dx0 = (static_cast<double>(i / n) - static_cast<double>(ci)) * h;
    const double dy0 = (static_cast<double>(i % n) - static_cast<double>(ci)) * h;
    const double period = 2.0 * grid.half_width();
    auto wrap = [&](double t) { return t - period * std::round(t / period); };
    const double cx = wrap(dx0), cy = wrap(dy0);
    double acc = 0.0;
    for (int a = 0; a < sub; ++a)
      for (int b = 0; b < sub; ++b) {
        const double x = cx + ((a + 0.5) / sub - 0.5) * h;
        const double y = cy + ((b + 0.5) / sub - 0.5) * h;
        acc += std::pow(1.0 + scale * std::hypot(x, y), -m);
      }
    v[i] = peak * acc / (sub * sub);
  }
  return Field(grid, std::move(v));
}

double boundary_deviation(const Field& f) {
  const Grid& grid = f.grid();
  const double edge = 0.9 * grid.half_width();
  const double ref = f[0];
  double dev = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Grid::Point x = grid.point(i);
    const bool in_layer =
        std::abs(x[0]) >= edge || (grid.dim() == 2 && std::abs(x[1]) >= edge);
    if (in_layer) dev = std::max(dev, std::abs(f[i] - ref));
  }
  return dev / std::max(1.0, f.max_abs());
}

void require_boundary_decay(const Field& f, const char* what) {
  const double dev = boundary_deviation(f);
  if (dev > kBoundaryTolerance)
    throw std::domain_error(std::string(what) + ": field does not settle at the box boundary (deviation " +
                            std::to_string(dev) + ")");
}

}  // namespace varbesov
