#include "xyqc/errors.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace xyqc {

UsageError::UsageError(std::vector<std::string> problems)
    : Error(fmt::format("{}", fmt::join(problems, "; "))), problems_(std::move(problems)) {}

} // namespace xyqc
