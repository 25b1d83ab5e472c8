#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chiral {

// Element / arrow / unit indices are dense ints; labels are display-only.
using Idx = int;

// Malformed input: wrong dimensions, out-of-range indices, unparsable files.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violation on well-formed data (e.g. a character outside D(s*s)).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance exceeds the exhaustive-search guardrail; rerun with force.
struct GuardrailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// States that are unreachable unless this library has a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Execution policy for the heavy kernels. Every parallel kernel has a serial
// twin with identical output; tests compare the two.
enum class Exec { serial, parallel };

// FNV-1a accumulation, used for reproducible search/prune logs.
inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;

inline std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

// Number of worker threads the parallel kernels will use.
int worker_threads();
// Cap worker threads process-wide (CLI --threads). n <= 0 resets to default.
void set_worker_threads(int n);

}  // namespace chiral
