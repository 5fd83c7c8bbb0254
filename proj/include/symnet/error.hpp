#pragma once

#include <stdexcept>
#include <string>

namespace symnet {

// Error classes map one-to-one onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
  virtual int exit_code() const noexcept = 0;
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse_error"; }
  int exit_code() const noexcept override { return 2; }
};

class ContractError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "contract_violation"; }
  int exit_code() const noexcept override { return 3; }
};

class InternalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal_error"; }
  int exit_code() const noexcept override { return 4; }
};

}  // namespace symnet
