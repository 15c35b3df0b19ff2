#include "tautring/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tautring {
namespace {

int initial_budget() {
  if (const char* env = std::getenv("TAUTRING_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::atomic<int>& budget() {
  static std::atomic<int> b{initial_budget()};
  return b;
}

}  // namespace

int thread_budget() { return budget().load(); }

void set_thread_budget(int n) { budget().store(n > 0 ? n : 1); }

}  // namespace tautring
