#ifndef TOWERS_ERRORS_HPP
#define TOWERS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace towers {

/// Thrown when a search exceeds its configured node or size budget.
/// Distinct from invalid input: a budget failure never produces a wrong
/// answer, only a refusal.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace towers

#endif
