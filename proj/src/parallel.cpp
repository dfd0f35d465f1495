#include "hopfind/parallel.hpp"

#include <cstdlib>
#include <string>

#include "hopfind/error.hpp"

namespace hopfind {

std::size_t threadBudget() {
  const char* env = std::getenv("HOPFIND_THREADS");
  if (env == nullptr || *env == '\0') {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
  std::string text(env);
  std::size_t value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9' || value > 4096) {
      throw InputError("HOPFIND_THREADS must be a positive integer, got '" + text + "'");
    }
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  if (value == 0) throw InputError("HOPFIND_THREADS must be a positive integer, got '" + text + "'");
  return value;
}

}  // namespace hopfind
