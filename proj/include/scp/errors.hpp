#ifndef SCP_ERRORS_HPP
#define SCP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scp {

// Input text could not be parsed. Messages carry 1-based line numbers.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was called outside its contract (shape mismatch, bad range, ...).
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// An explicit resource cap was hit (node budget, group-size budget,
// exhaustive-subset cap). Never a silent wrong answer.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace scp

#endif
