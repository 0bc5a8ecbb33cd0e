#pragma once

#include <stdexcept>
#include <string>

namespace gitfan {

enum class ErrorKind {
  Contract,     // caller broke a precondition (dimension mismatch, zero vector, ...)
  Parse,        // malformed polynomial or input document
  Invalid,      // presentation fails validation
  Dimension,    // computation refused for this ambient dimension
  Unbounded,    // fiber polytopes are not bounded
  SubsetCap,    // 2^r subsets above the configured cap
  Domain,       // weight outside the weight cone, or no orbit cone contains it
  Unsupported,  // operation outside its proven scope (e.g. oracle with relations)
  Internal,     // fan axiom violation and other should-not-happen states
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind) noexcept;

}  // namespace gitfan
