#include "pbit/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "pbit/errors.hpp"

namespace pbit {

namespace {

void check_spin(std::int8_t v) {
  if (v != 1 && v != -1) throw std::invalid_argument("spin values must be -1 or +1");
}

}  // namespace

SpinState::SpinState(std::size_t n, std::int8_t value) : spins_(n, value) { check_spin(value); }

SpinState::SpinState(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
  for (auto v : spins_) check_spin(v);
}

SpinState SpinState::from_index(std::uint64_t config, std::size_t n) {
  if (n > 64) throw std::invalid_argument("configuration index supports at most 64 spins");
  std::vector<std::int8_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = ((config >> i) & 1u) ? 1 : -1;
  return SpinState(std::move(s));
}

std::uint64_t SpinState::index() const {
  if (spins_.size() > 64) throw std::invalid_argument("configuration index supports at most 64 spins");
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < spins_.size(); ++i) {
    if (spins_[i] > 0) k |= std::uint64_t{1} << i;
  }
  return k;
}

void SpinState::set(std::size_t i, std::int8_t value) {
  check_spin(value);
  spins_.at(i) = value;
}

double SpinState::magnetization() const {
  if (spins_.empty()) return 0.0;
  long sum = 0;
  for (auto v : spins_) sum += v;
  return static_cast<double>(sum) / static_cast<double>(spins_.size());
}

CouplingNetwork::CouplingNetwork(std::size_t n, std::span<const Bond> bonds, std::vector<double> bias,
                                 double beta)
    : n_(n), beta_(beta), bias_(std::move(bias)) {
  if (n == 0) throw std::invalid_argument("network needs at least one spin");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be positive and finite");
  if (bias_.empty()) bias_.assign(n, 0.0);
  require_same_size(bias_.size(), n, "bias vector");
  for (double h : bias_) {
    if (!std::isfinite(h)) throw std::invalid_argument("bias must be finite");
  }

  std::map<std::pair<std::size_t, std::size_t>, double> merged;
  for (const auto& b : bonds) {
    if (b.i >= n || b.j >= n) {
      throw std::out_of_range("bond (" + std::to_string(b.i) + ", " + std::to_string(b.j) + ") outside [0, " +
                              std::to_string(n) + ")");
    }
    if (b.i == b.j) throw std::invalid_argument("self coupling W_ii is not allowed");
    if (!std::isfinite(b.w)) throw std::invalid_argument("weights must be finite");
    merged[{std::min(b.i, b.j), std::max(b.i, b.j)}] += b.w;
  }

  std::vector<std::size_t> deg(n, 0);
  for (const auto& [key, w] : merged) {
    if (w == 0.0) continue;
    ++deg[key.first];
    ++deg[key.second];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  adj_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [key, w] : merged) {
    if (w == 0.0) continue;
    adj_[fill[key.first]++] = {static_cast<std::uint32_t>(key.second), w};
    adj_[fill[key.second]++] = {static_cast<std::uint32_t>(key.first), w};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adj_.begin() + offsets_[i], adj_.begin() + offsets_[i + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.j < b.j; });
  }
}

double CouplingNetwork::weight(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("weight index out of range");
  auto row = neighbors(i);
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Neighbor& nb, std::size_t key) { return nb.j < key; });
  return (it != row.end() && it->j == j) ? it->w : 0.0;
}

std::vector<Bond> CouplingNetwork::bonds() const {
  std::vector<Bond> out;
  out.reserve(bond_count());
  for (std::size_t i = 0; i < n_; ++i) {
    for (const auto& nb : neighbors(i)) {
      if (nb.j > i) out.push_back({i, nb.j, nb.w});
    }
  }
  return out;
}

CouplingNetwork CouplingNetwork::with_beta(double beta) const {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be positive and finite");
  CouplingNetwork copy = *this;
  copy.beta_ = beta;
  return copy;
}

bool CouplingNetwork::operator==(const CouplingNetwork& o) const {
  if (n_ != o.n_ || beta_ != o.beta_ || bias_ != o.bias_ || offsets_ != o.offsets_) return false;
  for (std::size_t k = 0; k < adj_.size(); ++k) {
    if (adj_[k].j != o.adj_[k].j || adj_[k].w != o.adj_[k].w) return false;
  }
  return true;
}

std::vector<double> compute_inputs(const CouplingNetwork& net, const SpinState& state) {
  require_same_size(state.size(), net.size(), "spin state vs network");
  std::vector<double> inputs(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) inputs[i] = net.beta() * net.local_field(state.view(), i);
  return inputs;
}

double energy(const CouplingNetwork& net, std::span<const std::int8_t> spins) {
  require_same_size(spins.size(), net.size(), "spin state vs network");
  double pair = 0.0;
  double field = 0.0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    double acc = 0.0;
    for (const auto& nb : net.neighbors(i)) acc += nb.w * spins[nb.j];
    pair += spins[i] * acc;
    field += net.bias(i) * spins[i];
  }
  return -0.5 * pair - field;
}

double energy(const CouplingNetwork& net, const SpinState& state) { return energy(net, state.view()); }

std::string network_to_json(const CouplingNetwork& net) {
  nlohmann::json doc;
  doc["n"] = net.size();
  doc["beta"] = net.beta();
  auto weights = nlohmann::json::array();
  for (const auto& b : net.bonds()) weights.push_back({b.i, b.j, b.w});
  doc["weights"] = std::move(weights);
  doc["bias"] = std::vector<double>(net.bias().begin(), net.bias().end());
  return doc.dump(1);
}

CouplingNetwork network_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("network JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<std::size_t>();
    const double beta = doc.value("beta", 1.0);
    std::vector<Bond> bonds;
    for (const auto& entry : doc.value("weights", nlohmann::json::array())) {
      if (!entry.is_array() || entry.size() != 3) throw std::invalid_argument("weight entries must be [i, j, w]");
      Bond b{entry[0].get<std::size_t>(), entry[1].get<std::size_t>(), entry[2].get<double>()};
      if (b.i >= b.j) throw std::invalid_argument("weight entries must satisfy i < j");
      bonds.push_back(b);
    }
    std::vector<double> bias = doc.value("bias", std::vector<double>{});
    if (bias.empty()) bias.assign(n, 0.0);
    return CouplingNetwork(n, bonds, std::move(bias), beta);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("network JSON: ") + e.what());
  }
}

CouplingNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open network file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return network_from_json(buf.str());
}

void save_network(const CouplingNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << network_to_json(net) << '\n';
}

}  // namespace pbit
