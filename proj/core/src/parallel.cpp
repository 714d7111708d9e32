#include "fc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace fc {

unsigned thread_count() {
  if (const char* env = std::getenv("FC_THREADS"); env != nullptr) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace fc
