#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbit/dynamics.hpp"
#include "pbit/network.hpp"

namespace pbit {

/// Row-major binary image; true marks a black pixel.
struct Bitmap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<bool> pixels;

  bool at(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }
  bool operator==(const Bitmap&) const = default;
};

/// Plain PGM (P2 or P5), thresholded at mid-gray: darker pixels are black.
Bitmap read_pgm(const std::string& path);
/// JSON matrix of 0/1 rows, 1 = black.
Bitmap bitmap_from_json(const std::string& text);
/// Renders upper-case text with a 5x7 block font centred in a rows x cols canvas.
Bitmap text_bitmap(const std::string& text, std::size_t rows, std::size_t cols);

/// Fully connected Sherrington-Kirkpatrick instance: W_ij and h_i uniform in
/// [-1, 1] from a stream seeded by `seed`.
CouplingNetwork sk_random(std::size_t n_spins, std::uint64_t seed, double beta = 1.0);

struct LatticeSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool wrap = false;
};

struct LatticeProblem {
  CouplingNetwork network;
  TwoColoring coloring;
  SpinState target;
  double ground_energy = 0.0;
};

/// Nearest-neighbour lattice encoding of a binary image: W = +1 between
/// same-colour pixels and -1 otherwise, no bias. The image (black -> +1) and
/// its global inversion are the two ground states, each with energy
/// -(number of bonds).
LatticeProblem lattice_from_image(const Bitmap& bitmap, const LatticeSpec& spec, double beta = 1.0);

/// Uniform ferromagnetic lattice (all bonds J) with its checkerboard coloring.
LatticeProblem ferromagnet_lattice(const LatticeSpec& spec, double j, double beta);

TwoColoring checkerboard_coloring(std::size_t rows, std::size_t cols);

/// Proper two-coloring of the interaction graph found by breadth-first search,
/// or nullopt when the graph has an odd cycle.
std::optional<TwoColoring> two_coloring(const CouplingNetwork& net);

/// Suzuki-Trotter replica lattice for the periodic 1D transverse-field chain.
struct TrotterMapping {
  std::size_t m_spins = 8;
  std::size_t n_replicas = 250;
  double j_coupling = 2.0;
  double gamma_x = 1.0;
  double gamma_z = 1.0;
  double beta = 20.0;

  double j_parallel() const;
  double gamma_z_eff() const;
  /// -1/(2 beta) ln tanh(beta Gamma_x / n); throws for Gamma_x <= 0 or tanh underflow.
  double j_perp() const;
  /// Advisory size of the replica discretization error, beta^3 / n^2.
  double trotter_error_scale() const;

  std::size_t spin_index(std::size_t site, std::size_t replica) const { return replica * m_spins + site; }

  void validate() const;
  bool operator==(const TrotterMapping&) const = default;
};

/// M*n spin network: J_par bonds along each replica chain, J_perp bonds
/// between neighbouring replicas, gamma_z bias everywhere, periodic in both
/// directions. Spin (i, k) has index k*M + i.
CouplingNetwork trotter_map(const TrotterMapping& map);

}  // namespace pbit
