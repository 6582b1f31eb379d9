#include "transit/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace transit {

int default_worker_count() {
  if (const char* env = std::getenv("TRANSIT_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int resolve_workers(const ExecutionPolicy& policy) {
  if (!policy.parallel) return 1;
  return policy.workers > 0 ? policy.workers : default_worker_count();
}

}  // namespace transit
