#pragma once

namespace crofton {

// Kernels with an OpenMP path keep a plain loop beside it; both must agree bit for bit.
enum class Execution { serial, parallel };

// 0 means "all available".
int resolve_threads(int requested);

}  // namespace crofton
