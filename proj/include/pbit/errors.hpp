#pragma once

#include <stdexcept>
#include <string>

namespace pbit {

// Sizes of two collaborating objects disagree (state vs network, streams vs spins).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A statistical estimate is undefined for the supplied samples.
class EstimateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or inconsistent experiment configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": size " + std::to_string(a) + " != " + std::to_string(b));
  }
}

}  // namespace pbit
