#pragma once

#include <string>
#include <vector>

namespace qg {

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string witness;  // failing normal form or mismatch description; empty on success
};

struct CheckReport {
  std::string suite;
  std::vector<CheckItem> items;

  void add(const std::string& name, bool passed, const std::string& witness = "") {
    items.push_back({name, passed, passed ? std::string() : witness});
  }
  void merge(const CheckReport& o, const std::string& prefix = "") {
    for (const auto& it : o.items) items.push_back({prefix + it.name, it.passed, it.witness});
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& it : items) n += it.passed ? 0 : 1;
    return n;
  }
  bool passed() const { return failures() == 0; }
};

}  // namespace qg
