#pragma once

// Random test data: a seedable generator with per-trial stream splitting and
// smooth, decaying, band-limited fields built from Gaussian wave packets.

#include <cstdint>
#include <random>
#include <vector>

#include "varbesov/grid.hpp"
#include "varbesov/mixed.hpp"

namespace varbesov {

class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  // Independent generator for trial `index` of a run seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) from the top 53 bits; identical on every platform.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

// Keep the Fourier modes with |xi| < band, drop the rest.
Field band_limit(const Field& f, double band);

// amplitude * exp(-|x - c|^2 / (2 width^2)) * cos(freq . (x - c) + phase)
struct WavePacket {
  Grid::Point center{};
  double width = 1.0;
  Grid::Point frequency{};
  double phase = 0.0;
  double amplitude = 1.0;
};

Field sample_packets(const Grid& grid, const std::vector<WavePacket>& packets);

struct PacketRanges {
  double center_extent = 5.0;  // |c_a| <= extent
  double width_min = 0.6;
  double width_max = 1.2;
  double frequency_max = 1.0;  // |freq_a| <= this
  int count = 3;
};

// Ranges that keep packets far from the box edge and their spectrum (up to
// exp(-18) tails) below `band`.
PacketRanges default_ranges(const Grid& grid, double band);
std::vector<WavePacket> random_packets(Rng& rng, int dim, const PacketRanges& ranges);

// Packets sampled on the grid, then projected onto |xi| < band.
Field random_band_limited(const Grid& grid, double band, Rng& rng);
Field random_band_limited(const Grid& grid, double band, Rng& rng, const PacketRanges& ranges);

// J + 1 independent random fields.
FieldSequence random_sequence(const Grid& grid, std::size_t levels, double band, Rng& rng);

}  // namespace varbesov
