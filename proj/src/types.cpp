#include <algorithm>
#include <atomic>
#include <thread>

#include "detcount/parallel.hpp"
#include "detcount/types.hpp"

namespace detcount {

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string(Wide value) {
  if (value >= 0) return to_string(static_cast<Count>(value));
  return "-" + to_string(static_cast<Count>(0) - static_cast<Count>(value));
}

namespace {
std::atomic<unsigned> g_default_jobs{0};
}

unsigned default_jobs() {
  const unsigned j = g_default_jobs.load();
  if (j != 0) return j;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_default_jobs(unsigned jobs) { g_default_jobs.store(jobs); }

}  // namespace detcount
