#include "pbit/problems.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "pbit/prng.hpp"

namespace pbit {

namespace {

double uniform_pm1(PrngStream& stream) {
  const std::uint64_t a = stream.next_u32() >> 5;
  const std::uint64_t b = stream.next_u32() >> 6;
  const double u = static_cast<double>((a << 26) | b) * 0x1p-53;
  return 2.0 * u - 1.0;
}

using Glyph = std::array<const char*, 7>;

const std::map<char, Glyph>& font() {
  static const std::map<char, Glyph> glyphs = {
      {'A', {".###.", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"}},
      {'B', {"####.", "#...#", "#...#", "####.", "#...#", "#...#", "####."}},
      {'C', {".###.", "#...#", "#....", "#....", "#....", "#...#", ".###."}},
      {'E', {"#####", "#....", "#....", "####.", "#....", "#....", "#####"}},
      {'I', {"#####", "..#..", "..#..", "..#..", "..#..", "..#..", "#####"}},
      {'N', {"#...#", "##..#", "#.#.#", "#..##", "#...#", "#...#", "#...#"}},
      {'O', {".###.", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."}},
      {'P', {"####.", "#...#", "#...#", "####.", "#....", "#....", "#...."}},
      {'S', {".####", "#....", "#....", ".###.", "....#", "....#", "####."}},
      {'T', {"#####", "..#..", "..#..", "..#..", "..#..", "..#..", "..#.."}},
      {'U', {"#...#", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."}},
      {' ', {".....", ".....", ".....", ".....", ".....", ".....", "....."}},
  };
  return glyphs;
}

std::string next_token(std::istream& in) {
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return tok;
  }
  throw std::invalid_argument("truncated PGM header");
}

}  // namespace

Bitmap read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open image " + path);
  const std::string magic = next_token(in);
  if (magic != "P2" && magic != "P5") throw std::invalid_argument(path + ": not a P2/P5 PGM file");
  const auto cols = std::stoul(next_token(in));
  const auto rows = std::stoul(next_token(in));
  const auto maxval = std::stoul(next_token(in));
  if (cols == 0 || rows == 0 || maxval == 0 || maxval > 65535) throw std::invalid_argument(path + ": bad PGM header");
  Bitmap bm{rows, cols, std::vector<bool>(rows * cols)};
  const double mid = static_cast<double>(maxval) / 2.0;
  if (magic == "P2") {
    for (std::size_t k = 0; k < rows * cols; ++k) bm.pixels[k] = std::stod(next_token(in)) < mid;
  } else {
    in.get();  // single whitespace after maxval
    const bool wide = maxval > 255;
    for (std::size_t k = 0; k < rows * cols; ++k) {
      unsigned v = static_cast<unsigned char>(in.get());
      if (wide) v = (v << 8) | static_cast<unsigned char>(in.get());
      if (!in) throw std::invalid_argument(path + ": truncated PGM raster");
      bm.pixels[k] = static_cast<double>(v) < mid;
    }
  }
  return bm;
}

Bitmap bitmap_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array() || doc.empty()) throw std::invalid_argument("bitmap JSON must be a non-empty array of rows");
  Bitmap bm;
  bm.rows = doc.size();
  bm.cols = doc[0].size();
  for (const auto& row : doc) {
    if (!row.is_array() || row.size() != bm.cols) throw std::invalid_argument("bitmap rows must have equal length");
    for (const auto& v : row) {
      const int x = v.get<int>();
      if (x != 0 && x != 1) throw std::invalid_argument("bitmap entries must be 0 or 1");
      bm.pixels.push_back(x == 1);
    }
  }
  return bm;
}

Bitmap text_bitmap(const std::string& text, std::size_t rows, std::size_t cols) {
  if (text.empty()) throw std::invalid_argument("text must not be empty");
  const std::size_t width = 6 * text.size() - 1;
  const std::size_t scale = std::min((cols > 2 ? cols - 2 : 0) / width, (rows > 2 ? rows - 2 : 0) / 7);
  if (scale == 0) throw std::invalid_argument("canvas too small for text '" + text + "'");
  Bitmap bm{rows, cols, std::vector<bool>(rows * cols, false)};
  const std::size_t r0 = (rows - 7 * scale) / 2;
  const std::size_t c0 = (cols - width * scale) / 2;
  for (std::size_t g = 0; g < text.size(); ++g) {
    const char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(text[g])));
    const auto it = font().find(ch);
    if (it == font().end()) throw std::invalid_argument(std::string("no glyph for '") + text[g] + "'");
    for (std::size_t gr = 0; gr < 7; ++gr) {
      for (std::size_t gc = 0; gc < 5; ++gc) {
        if (it->second[gr][gc] != '#') continue;
        for (std::size_t dr = 0; dr < scale; ++dr) {
          for (std::size_t dc = 0; dc < scale; ++dc) {
            const std::size_t r = r0 + gr * scale + dr;
            const std::size_t c = c0 + (6 * g + gc) * scale + dc;
            bm.pixels[r * cols + c] = true;
          }
        }
      }
    }
  }
  return bm;
}

CouplingNetwork sk_random(std::size_t n_spins, std::uint64_t seed, double beta) {
  if (n_spins < 2) throw std::invalid_argument("SK instance needs at least 2 spins");
  auto stream = PrngStream::seeded(PrngKind::Xoshiro128Plus, stream_seed(seed, 0));
  std::vector<Bond> bonds;
  bonds.reserve(n_spins * (n_spins - 1) / 2);
  for (std::size_t i = 0; i < n_spins; ++i) {
    for (std::size_t j = i + 1; j < n_spins; ++j) bonds.push_back({i, j, uniform_pm1(stream)});
  }
  std::vector<double> bias(n_spins);
  for (auto& h : bias) h = uniform_pm1(stream);
  return CouplingNetwork(n_spins, bonds, std::move(bias), beta);
}

TwoColoring checkerboard_coloring(std::size_t rows, std::size_t cols) {
  TwoColoring tc;
  tc.color.resize(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) tc.color[r * cols + c] = static_cast<std::uint8_t>((r + c) % 2);
  }
  return tc;
}

std::optional<TwoColoring> two_coloring(const CouplingNetwork& net) {
  constexpr std::uint8_t unset = 2;
  TwoColoring tc;
  tc.color.assign(net.size(), unset);
  std::deque<std::size_t> queue;
  for (std::size_t root = 0; root < net.size(); ++root) {
    if (tc.color[root] != unset) continue;
    tc.color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (const auto& nb : net.neighbors(i)) {
        if (tc.color[nb.j] == unset) {
          tc.color[nb.j] = static_cast<std::uint8_t>(1 - tc.color[i]);
          queue.push_back(nb.j);
        } else if (tc.color[nb.j] == tc.color[i]) {
          return std::nullopt;
        }
      }
    }
  }
  return tc;
}

namespace {

template <typename WeightFn>
std::vector<Bond> lattice_bonds(const LatticeSpec& spec, WeightFn weight) {
  if (spec.rows == 0 || spec.cols == 0) throw std::invalid_argument("lattice needs positive dimensions");
  if (spec.wrap && (spec.rows % 2 != 0 || spec.cols % 2 != 0)) {
    throw std::invalid_argument("periodic lattice needs even dimensions to stay bipartite");
  }
  std::vector<Bond> bonds;
  const auto idx = [&](std::size_t r, std::size_t c) { return r * spec.cols + c; };
  for (std::size_t r = 0; r < spec.rows; ++r) {
    for (std::size_t c = 0; c < spec.cols; ++c) {
      const bool right = c + 1 < spec.cols || (spec.wrap && spec.cols > 2);
      const bool down = r + 1 < spec.rows || (spec.wrap && spec.rows > 2);
      if (right) {
        const std::size_t c2 = (c + 1) % spec.cols;
        bonds.push_back({idx(r, c), idx(r, c2), weight(r, c, r, c2)});
      }
      if (down) {
        const std::size_t r2 = (r + 1) % spec.rows;
        bonds.push_back({idx(r, c), idx(r2, c), weight(r, c, r2, c)});
      }
    }
  }
  return bonds;
}

}  // namespace

LatticeProblem lattice_from_image(const Bitmap& bitmap, const LatticeSpec& spec, double beta) {
  if (bitmap.rows != spec.rows || bitmap.cols != spec.cols || bitmap.pixels.size() != spec.rows * spec.cols) {
    throw std::invalid_argument("bitmap is " + std::to_string(bitmap.rows) + "x" + std::to_string(bitmap.cols) +
                                " but lattice spec is " + std::to_string(spec.rows) + "x" +
                                std::to_string(spec.cols));
  }
  const auto bonds = lattice_bonds(spec, [&](std::size_t r1, std::size_t c1, std::size_t r2, std::size_t c2) {
    return bitmap.at(r1, c1) == bitmap.at(r2, c2) ? 1.0 : -1.0;
  });
  std::vector<std::int8_t> target(spec.rows * spec.cols);
  for (std::size_t k = 0; k < target.size(); ++k) target[k] = bitmap.pixels[k] ? 1 : -1;
  CouplingNetwork net(spec.rows * spec.cols, bonds, {}, beta);
  const double ground = -static_cast<double>(net.bond_count());
  return {std::move(net), checkerboard_coloring(spec.rows, spec.cols), SpinState(std::move(target)), ground};
}

LatticeProblem ferromagnet_lattice(const LatticeSpec& spec, double j, double beta) {
  const auto bonds = lattice_bonds(spec, [&](std::size_t, std::size_t, std::size_t, std::size_t) { return j; });
  CouplingNetwork net(spec.rows * spec.cols, bonds, {}, beta);
  const double ground = -std::abs(j) * static_cast<double>(net.bond_count());
  SpinState up(spec.rows * spec.cols, 1);
  return {std::move(net), checkerboard_coloring(spec.rows, spec.cols), std::move(up), ground};
}

void TrotterMapping::validate() const {
  if (m_spins < 2) throw std::invalid_argument("Trotter mapping needs M >= 2");
  if (n_replicas < 2) throw std::invalid_argument("Trotter mapping needs n >= 2 replicas");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("Trotter mapping needs beta > 0");
  if (!(gamma_x > 0.0)) throw std::invalid_argument("Gamma_x must be > 0 (J_perp diverges at Gamma_x = 0)");
}

double TrotterMapping::j_parallel() const { return j_coupling / static_cast<double>(n_replicas); }

double TrotterMapping::gamma_z_eff() const { return gamma_z / static_cast<double>(n_replicas); }

double TrotterMapping::j_perp() const {
  if (!(gamma_x > 0.0)) throw std::invalid_argument("Gamma_x must be > 0 (J_perp diverges at Gamma_x = 0)");
  const double t = std::tanh(beta * gamma_x / static_cast<double>(n_replicas));
  if (!(t > 0.0)) throw std::range_error("tanh(beta * Gamma_x / n) underflows to 0; J_perp is not representable");
  return -std::log(t) / (2.0 * beta);
}

double TrotterMapping::trotter_error_scale() const {
  const double n = static_cast<double>(n_replicas);
  return beta * beta * beta / (n * n);
}

CouplingNetwork trotter_map(const TrotterMapping& map) {
  map.validate();
  const double jpar = map.j_parallel();
  const double jperp = map.j_perp();
  const std::size_t m = map.m_spins;
  const std::size_t n = map.n_replicas;
  std::vector<Bond> bonds;
  bonds.reserve(2 * m * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      bonds.push_back({map.spin_index(i, k), map.spin_index((i + 1) % m, k), jpar});
      bonds.push_back({map.spin_index(i, k), map.spin_index(i, (k + 1) % n), jperp});
    }
  }
  std::vector<double> bias(m * n, map.gamma_z_eff());
  return CouplingNetwork(m * n, bonds, std::move(bias), map.beta);
}

}  // namespace pbit
