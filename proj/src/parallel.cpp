#include "stk/parallel.hpp"

#include <cstdlib>
#include <string>

namespace stk {

unsigned worker_count() {
  if (const char* env = std::getenv("STORMER_THREADS"); env != nullptr) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace stk
