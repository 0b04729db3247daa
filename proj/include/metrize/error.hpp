#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metrize {

// Domain error with a stable machine-readable code and witness indices,
// e.g. Error("TriangleViolation", {0, 2, 1}, "...").
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::vector<int> witness, const std::string& message)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  Error(std::string code, const std::string& message)
      : Error(std::move(code), {}, message) {}

  const std::string& code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string code_;
  std::vector<int> witness_;
};

}  // namespace metrize
