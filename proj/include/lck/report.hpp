#pragma once

#include <string>
#include <vector>

namespace lck {

struct CheckItem {
  std::string id;
  std::string description;
  bool pass = false;
  std::string witness;  // set on failure: the pair/triple/value violating the identity
  bool informational = false;  // recorded but not gating (e.g. the J-algebra test)
};

struct StructureReport {
  std::vector<CheckItem> items;

  void add(std::string id, std::string description, bool pass, std::string witness = "") {
    items.push_back({std::move(id), std::move(description), pass, std::move(witness), false});
  }
  void add_info(std::string id, std::string description, bool pass, std::string witness = "") {
    items.push_back({std::move(id), std::move(description), pass, std::move(witness), true});
  }
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass && !it.informational) return false;
    return true;
  }
  const CheckItem* find(const std::string& id) const {
    for (const auto& it : items)
      if (it.id == id) return &it;
    return nullptr;
  }
  bool passed(const std::string& id) const {
    const CheckItem* it = find(id);
    return it && it->pass;
  }
};

}  // namespace lck
