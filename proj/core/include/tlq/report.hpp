#pragma once

#include <string>
#include <vector>

namespace tlq {

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// Ordered list of named pass/fail results.
struct CheckList {
  std::vector<Check> items;

  void add(std::string name, bool ok, std::string detail = {}) {
    items.push_back(Check{std::move(name), ok, std::move(detail)});
  }
  bool ok() const {
    for (const auto& c : items)
      if (!c.ok) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : items)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// default_cap, or the value of TLQ_MAX_N when that variable holds a positive integer.
int desk_cap(int default_cap);

/// Whether TLQ_MAX_N is set to a positive integer.
bool desk_cap_overridden();

}  // namespace tlq
