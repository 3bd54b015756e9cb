#pragma once

#include <stdexcept>
#include <string>

namespace tvra {

// Contract violations raised by library operations (as opposed to input
// problems, which are reported as Diagnostic values).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace tvra
