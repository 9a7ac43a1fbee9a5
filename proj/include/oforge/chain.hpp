#pragma once

#include <vector>

#include "oforge/matrix.hpp"

namespace oforge {

// Bounded chain complex of Q-vector spaces. dims = 0 outside [lo, hi];
// diff in degree k maps C_k -> C_{k-1}. trunc_lo / trunc_hi mark that this
// complex is a window of a larger one, so homology at that boundary degree
// is unreliable.
struct ChainComplex {
  int lo = 0, hi = -1;  // empty range = zero complex
  std::vector<int> dims;
  std::vector<Matrix> diffs;  // diffs[k-lo] : C_k -> C_{k-1}
  bool trunc_lo = false, trunc_hi = false;

  int dim(int k) const { return (k < lo || k > hi) ? 0 : dims[k - lo]; }
  Matrix d(int k) const {
    if (k < lo || k > hi) return Matrix(dim(k - 1), dim(k));
    return diffs[k - lo];
  }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

// validates shapes and d.d = 0; throws on violation
void cc_validate(const ChainComplex& c);
ChainComplex cc_zero();
ChainComplex cc_unit();  // Q in degree 0
ChainComplex cc_sphere(int degree, int dim = 1);
ChainComplex cc_direct_sum(const ChainComplex& a, const ChainComplex& b);

struct ChainMap {
  ChainComplex dom, cod;
  int lo = 0;                 // mats[k-lo] : dom_k -> cod_k
  std::vector<Matrix> mats;   // covers every degree where either side is nonzero

  Matrix mat(int k) const {
    if (k < lo || k - lo >= int(mats.size())) return Matrix(cod.dim(k), dom.dim(k));
    return mats[k - lo];
  }
};

void cm_validate(const ChainMap& f);  // commutes with differentials
ChainMap cm_from_mats(const ChainComplex& dom, const ChainComplex& cod, int lo,
                      std::vector<Matrix> mats);
ChainMap cm_identity(const ChainComplex& a);
ChainMap cm_zero_map(const ChainComplex& dom, const ChainComplex& cod);
ChainMap cm_compose(const ChainMap& g, const ChainMap& f);
ChainMap cm_direct_sum(const ChainMap& f, const ChainMap& g);
bool cm_equal(const ChainMap& f, const ChainMap& g);
bool cm_injective(const ChainMap& f);
bool cm_iso(const ChainMap& f);
ChainMap cm_inverse(const ChainMap& f);

// mapping cone: cone(f)_k = cod_k + dom_{k-1}
ChainComplex cc_cone(const ChainMap& f);

struct HomologyEntry {
  int degree = 0;
  int dim = 0;
  bool reliable = true;
};
std::vector<HomologyEntry> cc_homology(const ChainComplex& c, int win_lo, int win_hi);
std::vector<HomologyEntry> cc_homology(const ChainComplex& c);

}  // namespace oforge
