#include "fano/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace fano {

unsigned worker_count() {
  if (const char* env = std::getenv("FANO_THREADS")) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && *ptr == '\0' && value > 0) return value;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace fano
