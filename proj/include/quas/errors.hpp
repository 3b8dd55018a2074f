#pragma once

#include <stdexcept>
#include <string>

namespace quas {

// Bad user configuration (unknown tags, malformed ranges). CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or inconsistent data files. CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Instance needs more qubits than the simulator allows.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The heuristic reference value is zero, so relative accuracy is undefined.
class DegenerateBaselineError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class AggregationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OptimizerInitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quas
