#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Thrown when an enumeration would exceed its configured memory budget.
/// Callers get the error before any partial result escapes.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by test oracles when the input is too large for exhaustive search.
class OracleGuardError : public std::runtime_error {
 public:
  explicit OracleGuardError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
[[noreturn]] void invariant_failure(const char* expr, const char* file, int line,
                                    const std::string& msg);
}

// Always-on internal invariant check (independent of NDEBUG).
#define SCHUBERT_CHECK(expr, msg)                                              \
  do {                                                                         \
    if (!(expr)) ::schubert::detail::invariant_failure(#expr, __FILE__, __LINE__, (msg)); \
  } while (0)

}  // namespace schubert
