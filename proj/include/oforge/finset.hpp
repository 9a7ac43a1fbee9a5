#pragma once

#include <optional>
#include <string>
#include <vector>

namespace oforge {

// Finite set; elements are canonically 0..size-1.
struct FinSetObj {
  int size = 0;
  std::optional<std::vector<std::string>> labels;

  bool operator==(const FinSetObj& o) const { return size == o.size; }
};

struct FinSetMor {
  FinSetObj dom, cod;
  std::vector<int> map;  // map[i] in 0..cod.size-1

  int operator()(int i) const { return map[i]; }
  bool operator==(const FinSetMor& o) const = default;
};

FinSetMor fs_identity(const FinSetObj& a);
FinSetMor fs_compose(const FinSetMor& g, const FinSetMor& f);  // g after f
bool fs_valid(const FinSetMor& f);
bool fs_bijective(const FinSetMor& f);
FinSetMor fs_inverse(const FinSetMor& f);

}  // namespace oforge
