#include "semion/parallel.hpp"

#include <cstdlib>
#include <string>

#include "semion/errors.hpp"

namespace semion {

std::size_t default_worker_count() {
  if (const char* env = std::getenv("SEMION_WORKERS"); env && *env) {
    std::size_t used = 0;
    long n = 0;
    try {
      n = std::stol(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string(env).size() || n <= 0)
      throw ParameterError(std::string("SEMION_WORKERS must be a positive integer, got '") + env + "'");
    return static_cast<std::size_t>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace semion
