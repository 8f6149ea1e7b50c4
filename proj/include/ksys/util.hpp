#pragma once

#include <stdexcept>
#include <string>

namespace ksys {

// Bad caller input: CLI maps this to a usage error (exit 2).
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A checked mathematical invariant failed: CLI maps this to exit 1.
struct invariant_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal defect (non-termination guard, failed perturbation retry, ...).
struct structure_defect : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic float formatting shared by CSV and JSON emitters.
std::string fmt_g(double x);

// --threads flag beats KSYS_THREADS beats 1. Values are clamped to [1, 64].
int resolve_threads(int cli_threads);

}  // namespace ksys
