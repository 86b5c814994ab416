#pragma once

#include <stdexcept>
#include <string>

namespace dedekind {

// Every library failure derives from Error so the CLI can map it to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Resource caps: group order, subgroup count, isomorphism search, prime budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class LatticeBudgetExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class IsoCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class BudgetExhausted : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class NotNormal : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class NotAnAutomorphism : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class NotAnAction : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class InvalidTable : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

// A structural statement about Schmidt groups failed on a concrete instance.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dedekind
