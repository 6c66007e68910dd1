#pragma once

#include <stdexcept>
#include <string>

namespace rootspin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Family/rank pair outside the supported ranges.
class InvalidRank : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A configured size, time or memory limit would be exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// The 128-bit count accumulator would wrap.
class CountOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace rootspin
