#include <cstdlib>
#include <string>

#include "tlq/report.hpp"

namespace tlq {

namespace {

int env_cap() {
  const char* s = std::getenv("TLQ_MAX_N");
  if (!s || !*s) return 0;
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    return used == std::string(s).size() && v > 0 ? v : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

int desk_cap(int default_cap) {
  const int v = env_cap();
  return v > 0 ? v : default_cap;
}

bool desk_cap_overridden() { return env_cap() > 0; }

}  // namespace tlq
