#include "qudit_magic/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qudit_magic {

int thread_count() {
  if (const char* env = std::getenv("QUDIT_MAGIC_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace qudit_magic
