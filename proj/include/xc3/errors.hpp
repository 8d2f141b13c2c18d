#pragma once

#include <stdexcept>
#include <string>

namespace xc3 {

// Thrown when a computation would exceed a configured resource ceiling
// (catalog size, oracle instance size).  Callers that want the work done
// anyway raise the ceiling explicitly; nothing here retries or degrades.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace xc3
