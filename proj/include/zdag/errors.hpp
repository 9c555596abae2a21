#pragma once

#include <stdexcept>
#include <string>

namespace zdag {

// Bad input from the caller: out-of-range ids, malformed expressions,
// parameters outside a family's stated class.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that exceeds a configured size limit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Labeling rejected with a diagnosis (wrong arity, duplicate or
// out-of-range entry).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal contract; surfaced loudly, never swallowed.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace zdag
