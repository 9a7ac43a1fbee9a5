#pragma once

#include "oforge/equivariant.hpp"

namespace oforge {

// f^{pp n} computed as the corner map out of the punctured-cube colimit,
// carrying the canonical Sigma_n-action (coordinate permutation).
struct PPowerResult {
  EqMor map;
  ColimitResult dom_colim;
  std::vector<unsigned> dom_subsets;  // proper subsets of [n], by (popcount, value)
};
PPowerResult pp_power(const Mor& f, int n);

// pushout product of equivariant morphisms over G and H, result over G x H
EqMor pp_of_eq(const EqMor& a, const EqMor& b);
// same-group version with the diagonal action
EqMor pp_diagonal_eq(const EqMor& a, const EqMor& b);

// family power: pp over i of s_i^{pp n_i}, over Sigma_{n_1} x ... x Sigma_{n_e}
EqMor pp_power_family(const std::vector<Mor>& s, const std::vector<int>& n);

// the m_k maps of the b^{(x)n} filtration:
//   m_k = Sigma_n ._{Sigma_{n-k} x Sigma_k} X^{(x)(n-k)} (x) b^{pp k}
// realized with carrier \coprod_{|S|=k} X^{([n]-S)} (x) Q(S); S runs over
// k-subsets, Q(S) the punctured cube in the S-coordinates.
struct PPFiltrationStage {
  int k = 0;
  EqMor m;
  Mor attach;     // dom(m_k) -> F_{k-1}
  Mor stage_map;  // F_{k-1} -> F_k
  bool square_cocartesian = false;
};
struct PPFiltration {
  std::vector<PPFiltrationStage> stages;  // k = 1..n
  std::vector<Obj> filtration_objects;    // F_0..F_n
  Mor composite;                          // F_0 -> Y^{(x)n}
  bool certificate = false;               // squares + composite agree with b^{(x)n}
};
PPFiltration pp_power_filtration(const Mor& b, int n);

}  // namespace oforge
