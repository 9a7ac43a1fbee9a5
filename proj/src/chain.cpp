#include "oforge/chain.hpp"

#include <cassert>
#include <stdexcept>

namespace oforge {

int ChainComplex::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

void cc_validate(const ChainComplex& c) {
  if (c.hi < c.lo) {
    if (!c.dims.empty() || !c.diffs.empty()) throw std::invalid_argument("zero complex with data");
    return;
  }
  if (int(c.dims.size()) != c.hi - c.lo + 1 || int(c.diffs.size()) != c.hi - c.lo + 1)
    throw std::invalid_argument("chain complex: dims/diffs length mismatch");
  for (int k = c.lo; k <= c.hi; ++k) {
    const Matrix& d = c.diffs[k - c.lo];
    if (d.rows() != c.dim(k - 1) || d.cols() != c.dim(k))
      throw std::invalid_argument("chain complex: differential shape mismatch");
    if (k > c.lo && !(c.diffs[k - 1 - c.lo] * d).is_zero())
      throw std::invalid_argument("chain complex: d.d != 0");
  }
}

ChainComplex cc_zero() { return ChainComplex{}; }

ChainComplex cc_unit() { return cc_sphere(0, 1); }

ChainComplex cc_sphere(int degree, int dim) {
  ChainComplex c;
  c.lo = c.hi = degree;
  c.dims = {dim};
  c.diffs = {Matrix(0, dim)};
  return c;
}

ChainComplex cc_direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (a.is_zero() && b.is_zero()) return cc_zero();
  ChainComplex c;
  c.lo = std::min(a.is_zero() ? b.lo : a.lo, b.is_zero() ? a.lo : b.lo);
  c.hi = std::max(a.is_zero() ? b.hi : a.hi, b.is_zero() ? a.hi : b.hi);
  c.trunc_lo = a.trunc_lo || b.trunc_lo;
  c.trunc_hi = a.trunc_hi || b.trunc_hi;
  for (int k = c.lo; k <= c.hi; ++k) {
    c.dims.push_back(a.dim(k) + b.dim(k));
    c.diffs.push_back(Matrix::diag_blocks({a.d(k), b.d(k)}));
  }
  return c;
}

void cm_validate(const ChainMap& f) {
  for (int k = std::min(f.dom.lo, f.cod.lo) - 1; k <= std::max(f.dom.hi, f.cod.hi) + 1; ++k) {
    Matrix lhs = f.cod.d(k) * f.mat(k);
    Matrix rhs = f.mat(k - 1) * f.dom.d(k);
    if (!(lhs == rhs)) throw std::invalid_argument("chain map does not commute with d");
  }
}

ChainMap cm_from_mats(const ChainComplex& dom, const ChainComplex& cod, int lo,
                      std::vector<Matrix> mats) {
  ChainMap f{dom, cod, lo, std::move(mats)};
  cm_validate(f);
  return f;
}

ChainMap cm_identity(const ChainComplex& a) {
  ChainMap f{a, a, a.lo, {}};
  for (int k = a.lo; k <= a.hi; ++k) f.mats.push_back(Matrix::identity(a.dim(k)));
  return f;
}

ChainMap cm_zero_map(const ChainComplex& dom, const ChainComplex& cod) {
  return ChainMap{dom, cod, 0, {}};
}

ChainMap cm_compose(const ChainMap& g, const ChainMap& f) {
  int lo = std::min(std::min(f.dom.lo, g.cod.lo), std::min(f.cod.lo, g.dom.lo));
  int hi = std::max(std::max(f.dom.hi, g.cod.hi), std::max(f.cod.hi, g.dom.hi));
  ChainMap h{f.dom, g.cod, lo, {}};
  for (int k = lo; k <= hi; ++k) h.mats.push_back(g.mat(k) * f.mat(k));
  return h;
}

ChainMap cm_direct_sum(const ChainMap& f, const ChainMap& g) {
  ChainComplex dom = cc_direct_sum(f.dom, g.dom);
  ChainComplex cod = cc_direct_sum(f.cod, g.cod);
  ChainMap h{dom, cod, std::min(dom.lo, cod.lo), {}};
  if (dom.is_zero() && cod.is_zero()) return h;
  int hi = std::max(dom.hi, cod.hi);
  for (int k = h.lo; k <= hi; ++k) h.mats.push_back(Matrix::diag_blocks({f.mat(k), g.mat(k)}));
  return h;
}

bool cm_equal(const ChainMap& f, const ChainMap& g) {
  int lo = std::min(f.dom.lo, g.dom.lo), hi = std::max(f.dom.hi, g.dom.hi);
  lo = std::min(lo, std::min(f.cod.lo, g.cod.lo));
  hi = std::max(hi, std::max(f.cod.hi, g.cod.hi));
  for (int k = lo; k <= hi; ++k) {
    if (f.dom.dim(k) != g.dom.dim(k) || f.cod.dim(k) != g.cod.dim(k)) return false;
    if (!(f.mat(k) == g.mat(k))) return false;
  }
  return true;
}

bool cm_injective(const ChainMap& f) {
  for (int k = f.dom.lo; k <= f.dom.hi; ++k)
    if (!f.mat(k).is_injective()) return false;
  return true;
}

bool cm_iso(const ChainMap& f) {
  int lo = std::min(f.dom.lo, f.cod.lo), hi = std::max(f.dom.hi, f.cod.hi);
  for (int k = lo; k <= hi; ++k) {
    if (f.dom.dim(k) != f.cod.dim(k)) return false;
    if (f.mat(k).rank() != f.dom.dim(k)) return false;
  }
  return true;
}

ChainMap cm_inverse(const ChainMap& f) {
  if (!cm_iso(f)) throw std::invalid_argument("cm_inverse: not an iso");
  int lo = std::min(f.dom.lo, f.cod.lo), hi = std::max(f.dom.hi, f.cod.hi);
  ChainMap g{f.cod, f.dom, lo, {}};
  for (int k = lo; k <= hi; ++k) g.mats.push_back(*f.mat(k).inverse());
  return g;
}

ChainComplex cc_cone(const ChainMap& f) {
  int lo = 0, hi = -1;
  bool any = false;
  if (!f.cod.is_zero()) lo = f.cod.lo, hi = f.cod.hi, any = true;
  if (!f.dom.is_zero()) {
    lo = any ? std::min(lo, f.dom.lo + 1) : f.dom.lo + 1;
    hi = any ? std::max(hi, f.dom.hi + 1) : f.dom.hi + 1;
    any = true;
  }
  if (!any) return cc_zero();
  ChainComplex c;
  c.lo = lo;
  c.hi = hi;
  c.trunc_lo = f.dom.trunc_lo || f.cod.trunc_lo;
  c.trunc_hi = f.dom.trunc_hi || f.cod.trunc_hi;
  for (int k = c.lo; k <= c.hi; ++k) {
    c.dims.push_back(f.cod.dim(k) + f.dom.dim(k - 1));
    // d(b, a) = (d_B b + f a, -d_A a)
    Matrix d(f.cod.dim(k - 1) + f.dom.dim(k - 2), f.cod.dim(k) + f.dom.dim(k - 1));
    Matrix dB = f.cod.d(k), fA = f.mat(k - 1), dA = f.dom.d(k - 1);
    for (int i = 0; i < dB.rows(); ++i)
      for (int j = 0; j < dB.cols(); ++j) d.at(i, j) = dB.at(i, j);
    for (int i = 0; i < fA.rows(); ++i)
      for (int j = 0; j < fA.cols(); ++j) d.at(i, f.cod.dim(k) + j) = fA.at(i, j);
    for (int i = 0; i < dA.rows(); ++i)
      for (int j = 0; j < dA.cols(); ++j) d.at(f.cod.dim(k - 1) + i, f.cod.dim(k) + j) = -dA.at(i, j);
    c.diffs.push_back(d);
  }
  return c;
}

std::vector<HomologyEntry> cc_homology(const ChainComplex& c, int win_lo, int win_hi) {
  std::vector<HomologyEntry> h;
  for (int k = win_lo; k <= win_hi; ++k) {
    HomologyEntry e;
    e.degree = k;
    int rk = c.d(k).rank();
    int rk1 = c.d(k + 1).rank();
    e.dim = c.dim(k) - rk - rk1;
    e.reliable = !((c.trunc_hi && k >= c.hi) || (c.trunc_lo && k <= c.lo));
    h.push_back(e);
  }
  return h;
}

std::vector<HomologyEntry> cc_homology(const ChainComplex& c) {
  if (c.is_zero()) return {};
  return cc_homology(c, c.lo, c.hi);
}

}  // namespace oforge
