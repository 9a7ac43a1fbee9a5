#include "oforge/finset.hpp"

#include <cassert>
#include <stdexcept>

namespace oforge {

FinSetMor fs_identity(const FinSetObj& a) {
  FinSetMor f{a, a, std::vector<int>(a.size)};
  for (int i = 0; i < a.size; ++i) f.map[i] = i;
  return f;
}

FinSetMor fs_compose(const FinSetMor& g, const FinSetMor& f) {
  assert(f.cod.size == g.dom.size);
  FinSetMor h{f.dom, g.cod, std::vector<int>(f.dom.size)};
  for (int i = 0; i < f.dom.size; ++i) h.map[i] = g.map[f.map[i]];
  return h;
}

bool fs_valid(const FinSetMor& f) {
  if (int(f.map.size()) != f.dom.size) return false;
  for (int v : f.map)
    if (v < 0 || v >= f.cod.size) return false;
  return true;
}

bool fs_bijective(const FinSetMor& f) {
  if (f.dom.size != f.cod.size) return false;
  std::vector<char> seen(f.cod.size, 0);
  for (int v : f.map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

FinSetMor fs_inverse(const FinSetMor& f) {
  if (!fs_bijective(f)) throw std::invalid_argument("fs_inverse: not a bijection");
  FinSetMor g{f.cod, f.dom, std::vector<int>(f.cod.size)};
  for (int i = 0; i < f.dom.size; ++i) g.map[f.map[i]] = i;
  return g;
}

}  // namespace oforge
