#pragma once

#include <stdexcept>
#include <string>

namespace symzero {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is not a partition.
class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class NonPositivePart : public InvalidPartition {
 public:
  using InvalidPartition::InvalidPartition;
};

class NotWeaklyDecreasing : public InvalidPartition {
 public:
  using InvalidPartition::InvalidPartition;
};

/// lambda and mu are partitions of different integers.
class WeightMismatch : public Error {
 public:
  using Error::Error;
};

/// A request exceeds a configured size cap (p-table, scan, type-I count).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class InvalidMode : public Error {
 public:
  using Error::Error;
};

}  // namespace symzero
