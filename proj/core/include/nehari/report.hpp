#pragma once

#include <string>
#include <vector>

namespace nehari {

/// One named pass/fail check with the measured quantity that decided it.
struct ConditionItem {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // deviation, supremum, ratio... meaning depends on the check
  std::string detail;
};

struct ConditionReport {
  std::vector<ConditionItem> items;

  bool all_passed() const {
    for (const auto& it : items)
      if (!it.passed) return false;
    return true;
  }

  const ConditionItem* find(const std::string& name) const {
    for (const auto& it : items)
      if (it.name == name) return &it;
    return nullptr;
  }

  void add(std::string name, bool passed, double measured, std::string detail = {}) {
    items.push_back({std::move(name), passed, measured, std::move(detail)});
  }
};

}  // namespace nehari
