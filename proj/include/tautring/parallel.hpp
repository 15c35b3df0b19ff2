#pragma once

namespace tautring {

/// Thread budget for parallel kernels. Defaults to TAUTRING_THREADS when set
/// (positive integer), otherwise the OpenMP default.
int thread_budget();
void set_thread_budget(int n);

}  // namespace tautring
