#include "varbesov/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "varbesov/fft.hpp"

namespace varbesov {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Field band_limit(const Field& f, double band) {
  const Grid& grid = f.grid();
  std::vector<double> m(grid.size());
  for (std::size_t s = 0; s < m.size(); ++s) m[s] = grid.frequency_radius(s) < band ? 1.0 : 0.0;
  return fft::apply_multiplier(f, m);
}

Field sample_packets(const Grid& grid, const std::vector<WavePacket>& packets) {
  std::vector<double> v(grid.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Grid::Point x = grid.point(i);
    double acc = 0.0;
    for (const WavePacket& w : packets) {
      const double d0 = x[0] - w.center[0];
      const double d1 = grid.dim() == 2 ? x[1] - w.center[1] : 0.0;
      const double r2 = d0 * d0 + d1 * d1;
      const double arg = w.frequency[0] * d0 + w.frequency[1] * d1 + w.phase;
      acc += w.amplitude * std::exp(-r2 / (2.0 * w.width * w.width)) * std::cos(arg);
    }
    v[i] = acc;
  }
  return Field(grid, std::move(v));
}

PacketRanges default_ranges(const Grid& grid, double band) {
  PacketRanges r;
  const double L = grid.half_width();
  // A Gaussian of width w has spectral width 1/w. Keeping 7.5 widths on both
  // sides (exp(-28) ~ 7e-13) makes the band cut and the box edge invisible.
  r.width_min = std::max(0.6, 7.5 / band);
  r.width_max = std::max(r.width_min, std::min(1.2, 0.12 * L));
  r.center_extent = std::max(0.0, std::min(5.0, 0.9 * L - 7.5 * r.width_max));
  r.frequency_max = std::max(0.0, std::min(0.5 * band, band - 7.5 / r.width_min));
  return r;
}

std::vector<WavePacket> random_packets(Rng& rng, int dim, const PacketRanges& ranges) {
  std::vector<WavePacket> out(static_cast<std::size_t>(ranges.count));
  for (WavePacket& w : out) {
    for (int a = 0; a < dim; ++a) {
      w.center[a] = rng.uniform(-ranges.center_extent, ranges.center_extent);
      w.frequency[a] = rng.uniform(-ranges.frequency_max, ranges.frequency_max) / std::sqrt(double(dim));
    }
    w.width = rng.uniform(ranges.width_min, ranges.width_max);
    w.phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    w.amplitude = rng.uniform(0.5, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
  }
  return out;
}

Field random_band_limited(const Grid& grid, double band, Rng& rng) {
  return random_band_limited(grid, band, rng, default_ranges(grid, band));
}

Field random_band_limited(const Grid& grid, double band, Rng& rng, const PacketRanges& ranges) {
  return band_limit(sample_packets(grid, random_packets(rng, grid.dim(), ranges)), band);
}

FieldSequence random_sequence(const Grid& grid, std::size_t levels, double band, Rng& rng) {
  std::vector<Field> out;
  out.reserve(levels);
  for (std::size_t j = 0; j < levels; ++j) out.push_back(random_band_limited(grid, band, rng));
  return FieldSequence(std::move(out));
}

}  // namespace varbesov
