#pragma once

#include <stdexcept>
#include <string>

namespace fedcomp {

// Regularizer kinds without a finite subgradient bound (box indicators).
class UnsupportedRegularizerError : public std::domain_error {
 public:
  explicit UnsupportedRegularizerError(const std::string& what)
      : std::domain_error(what) {}
};

// A federated iterate went non-finite. Carries (client, round, step) context.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(int client, int round, int step, const std::string& what)
      : std::runtime_error(what), client_(client), round_(round), step_(step) {}

  int client() const { return client_; }
  int round() const { return round_; }
  int step() const { return step_; }

 private:
  int client_;
  int round_;
  int step_;
};

// Malformed input file; message names the byte offset or line number.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration failed schema validation; message names field, expected, got.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fedcomp
