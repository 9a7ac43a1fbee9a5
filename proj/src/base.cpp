#include "oforge/base.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace oforge {

Cat cat_of(const Obj& x) { return std::holds_alternative<FinSetObj>(x) ? Cat::FinSet : Cat::ChQ; }
Cat cat_of(const Mor& f) { return std::holds_alternative<FinSetMor>(f) ? Cat::FinSet : Cat::ChQ; }

void require_same_cat(Cat a, Cat b) {
  if (a != b) throw std::invalid_argument("mixed-category inputs");
}

Obj dom(const Mor& f) {
  if (auto* m = std::get_if<FinSetMor>(&f)) return m->dom;
  return std::get<ChainMap>(f).dom;
}

Obj cod(const Mor& f) {
  if (auto* m = std::get_if<FinSetMor>(&f)) return m->cod;
  return std::get<ChainMap>(f).cod;
}

Obj unit_obj(Cat c) {
  if (c == Cat::FinSet) return FinSetObj{1, {}};
  return cc_unit();
}

Obj initial_obj(Cat c) {
  if (c == Cat::FinSet) return FinSetObj{0, {}};
  return cc_zero();
}

bool obj_equal(const Obj& a, const Obj& b) {
  if (cat_of(a) != cat_of(b)) return false;
  if (auto* x = std::get_if<FinSetObj>(&a)) return x->size == std::get<FinSetObj>(b).size;
  const auto& x = std::get<ChainComplex>(a);
  const auto& y = std::get<ChainComplex>(b);
  int lo = std::min(x.lo, y.lo), hi = std::max(x.hi, y.hi);
  for (int k = lo; k <= hi; ++k) {
    if (x.dim(k) != y.dim(k)) return false;
    if (!(x.d(k) == y.d(k))) return false;
  }
  return true;
}

int obj_size(const Obj& a) {
  if (auto* x = std::get_if<FinSetObj>(&a)) return x->size;
  return std::get<ChainComplex>(a).total_dim();
}

Mor identity(const Obj& a) {
  if (auto* x = std::get_if<FinSetObj>(&a)) return fs_identity(*x);
  return cm_identity(std::get<ChainComplex>(a));
}

Mor compose(const Mor& g, const Mor& f) {
  require_same_cat(cat_of(g), cat_of(f));
  if (auto* x = std::get_if<FinSetMor>(&f)) return fs_compose(std::get<FinSetMor>(g), *x);
  return cm_compose(std::get<ChainMap>(g), std::get<ChainMap>(f));
}

Mor initial_map(const Obj& a) {
  if (auto* x = std::get_if<FinSetObj>(&a)) return FinSetMor{FinSetObj{0, {}}, *x, {}};
  return cm_zero_map(cc_zero(), std::get<ChainComplex>(a));
}

bool mor_equal(const Mor& f, const Mor& g) {
  if (cat_of(f) != cat_of(g)) return false;
  if (auto* x = std::get_if<FinSetMor>(&f)) {
    const auto& y = std::get<FinSetMor>(g);
    return x->dom == y.dom && x->cod == y.cod && x->map == y.map;
  }
  return cm_equal(std::get<ChainMap>(f), std::get<ChainMap>(g));
}

bool is_iso(const Mor& f) {
  if (auto* x = std::get_if<FinSetMor>(&f)) return fs_bijective(*x);
  return cm_iso(std::get<ChainMap>(f));
}

Mor inverse(const Mor& f) {
  if (auto* x = std::get_if<FinSetMor>(&f)) return fs_inverse(*x);
  return cm_inverse(std::get<ChainMap>(f));
}

// ---------------------------------------------------------------------------
// n-ary tensor

namespace {

// all degree vectors (k_1..k_m), k_t a nonzero degree of factor t, summing to n,
// lex ascending
void degree_vectors_rec(const std::vector<ChainComplex>& fs, size_t t, int n,
                        std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (t == fs.size()) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int k = fs[t].lo; k <= fs[t].hi; ++k) {
    if (fs[t].dim(k) == 0) continue;
    cur.push_back(k);
    degree_vectors_rec(fs, t + 1, n - k, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> degree_vectors(const std::vector<ChainComplex>& fs, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  degree_vectors_rec(fs, 0, n, cur, out);
  return out;
}

int tuple_block_dim(const std::vector<ChainComplex>& fs, const std::vector<int>& kv) {
  int d = 1;
  for (size_t t = 0; t < fs.size(); ++t) d *= fs[t].dim(kv[t]);
  return d;
}

// offset of a degree vector's block inside the canonical degree-n basis
int block_offset(const std::vector<ChainComplex>& fs, const std::vector<int>& kv) {
  int n = std::accumulate(kv.begin(), kv.end(), 0);
  int off = 0;
  for (const auto& v : degree_vectors(fs, n)) {
    if (v == kv) return off;
    off += tuple_block_dim(fs, v);
  }
  throw std::logic_error("block_offset: degree vector not found");
}

int rowmajor_index(const std::vector<ChainComplex>& fs, const std::vector<int>& kv,
                   const std::vector<int>& idx) {
  int r = 0;
  for (size_t t = 0; t < fs.size(); ++t) r = r * fs[t].dim(kv[t]) + idx[t];
  return r;
}

}  // namespace

Obj nary_tensor(Cat c, const std::vector<Obj>& factors) {
  if (c == Cat::FinSet) {
    long long size = 1;
    for (const auto& f : factors) {
      require_same_cat(c, cat_of(f));
      size *= std::get<FinSetObj>(f).size;
      if (size > INT_MAX) throw std::overflow_error("tensor too large");
    }
    return FinSetObj{int(size), {}};
  }
  std::vector<ChainComplex> fs;
  for (const auto& f : factors) {
    require_same_cat(c, cat_of(f));
    fs.push_back(std::get<ChainComplex>(f));
  }
  ChainComplex out;
  for (const auto& f : fs) {
    if (f.is_zero()) return cc_zero();
    out.trunc_lo |= f.trunc_lo;
    out.trunc_hi |= f.trunc_hi;
  }
  int lo = 0, hi = 0;
  for (const auto& f : fs) lo += f.lo, hi += f.hi;
  if (fs.empty()) return cc_unit();
  out.lo = lo;
  out.hi = hi;
  for (int n = lo; n <= hi; ++n) {
    int dn = 0;
    for (const auto& kv : degree_vectors(fs, n)) dn += tuple_block_dim(fs, kv);
    out.dims.push_back(dn);
  }
  // trim empty top/bottom degrees
  while (out.hi >= out.lo && out.dims.back() == 0) out.dims.pop_back(), --out.hi;
  while (out.hi >= out.lo && out.dims.front() == 0)
    out.dims.erase(out.dims.begin()), ++out.lo;
  if (out.hi < out.lo) return cc_zero();
  for (int n = out.lo; n <= out.hi; ++n) {
    Matrix d(out.dim(n - 1), out.dim(n));
    for (const auto& kv : degree_vectors(fs, n)) {
      int src_off = block_offset(fs, kv);
      // iterate all index tuples in the block
      std::vector<int> idx(fs.size(), 0);
      int bd = tuple_block_dim(fs, kv);
      for (int cnt = 0; cnt < bd; ++cnt) {
        int col = src_off + rowmajor_index(fs, kv, idx);
        int sign = 1;
        for (size_t t = 0; t < fs.size(); ++t) {
          const Matrix& dt = fs[t].d(kv[t]);
          if (dt.rows() > 0) {
            std::vector<int> kv2 = kv;
            kv2[t] -= 1;
            if (fs[t].dim(kv2[t]) > 0) {
              int tgt_off = block_offset(fs, kv2);
              std::vector<int> idx2 = idx;
              for (int r = 0; r < dt.rows(); ++r) {
                if (dt.at(r, idx[t]) == 0) continue;
                idx2[t] = r;
                int row = tgt_off + rowmajor_index(fs, kv2, idx2);
                d.at(row, col) += Rat(sign) * dt.at(r, idx[t]);
              }
            }
          }
          if (kv[t] % 2 != 0) sign = -sign;
        }
        // advance row-major tuple
        for (int t = int(fs.size()) - 1; t >= 0; --t) {
          if (++idx[t] < fs[t].dim(kv[t])) break;
          idx[t] = 0;
        }
      }
    }
    out.diffs.push_back(d);
  }
  cc_validate(out);
  return out;
}

Mor nary_tensor_mor(Cat c, const std::vector<Mor>& factors) {
  if (c == Cat::FinSet) {
    std::vector<int> ds, cs;
    for (const auto& f : factors) {
      require_same_cat(c, cat_of(f));
      ds.push_back(std::get<FinSetMor>(f).dom.size);
      cs.push_back(std::get<FinSetMor>(f).cod.size);
    }
    int dsize = 1, csize = 1;
    for (int v : ds) dsize *= v;
    for (int v : cs) csize *= v;
    FinSetMor out{FinSetObj{dsize, {}}, FinSetObj{csize, {}}, std::vector<int>(dsize)};
    for (int i = 0; i < dsize; ++i) {
      int rem = i, img = 0;
      std::vector<int> idx(factors.size());
      for (int t = int(factors.size()) - 1; t >= 0; --t) {
        idx[t] = rem % ds[t];
        rem /= ds[t];
      }
      for (size_t t = 0; t < factors.size(); ++t)
        img = img * cs[t] + std::get<FinSetMor>(factors[t]).map[idx[t]];
      out.map[i] = img;
    }
    return out;
  }
  std::vector<ChainComplex> df, cf;
  std::vector<ChainMap> ms;
  for (const auto& f : factors) {
    require_same_cat(c, cat_of(f));
    ms.push_back(std::get<ChainMap>(f));
    df.push_back(ms.back().dom);
    cf.push_back(ms.back().cod);
  }
  ChainComplex D = std::get<ChainComplex>(nary_tensor(c, [&] {
    std::vector<Obj> v;
    for (auto& x : df) v.push_back(x);
    return v;
  }()));
  ChainComplex C = std::get<ChainComplex>(nary_tensor(c, [&] {
    std::vector<Obj> v;
    for (auto& x : cf) v.push_back(x);
    return v;
  }()));
  ChainMap out{D, C, std::min(D.lo, C.lo), {}};
  int hi = std::max(D.hi, C.hi);
  for (int n = out.lo; n <= hi; ++n) {
    Matrix m(C.dim(n), D.dim(n));
    if (D.dim(n) > 0 && C.dim(n) > 0)
      for (const auto& kv : degree_vectors(df, n)) {
        int src_off = block_offset(df, kv);
        bool tgt_ok = true;
        for (size_t t = 0; t < cf.size(); ++t)
          if (cf[t].dim(kv[t]) == 0) tgt_ok = false;
        if (!tgt_ok) continue;
        int tgt_off = block_offset(cf, kv);
        std::vector<int> sidx(df.size(), 0);
        int bd = tuple_block_dim(df, kv);
        for (int cnt = 0; cnt < bd; ++cnt) {
          int col = src_off + rowmajor_index(df, kv, sidx);
          // expand the product of columns
          std::vector<std::pair<std::vector<int>, Rat>> terms = {{{}, Rat(1)}};
          for (size_t t = 0; t < ms.size(); ++t) {
            std::vector<std::pair<std::vector<int>, Rat>> nxt;
            const Matrix& mt = ms[t].mat(kv[t]);
            for (auto& [tle, coef] : terms)
              for (int r = 0; r < mt.rows(); ++r) {
                if (mt.at(r, sidx[t]) == 0) continue;
                auto tle2 = tle;
                tle2.push_back(r);
                nxt.push_back({tle2, coef * mt.at(r, sidx[t])});
              }
            terms = std::move(nxt);
          }
          for (auto& [tle, coef] : terms)
            m.at(tgt_off + rowmajor_index(cf, kv, tle), col) += coef;
          for (int t = int(df.size()) - 1; t >= 0; --t) {
            if (++sidx[t] < df[t].dim(kv[t])) break;
            sidx[t] = 0;
          }
        }
      }
    out.mats.push_back(m);
  }
  cm_validate(out);
  return out;
}

Obj tensor(const Obj& a, const Obj& b) {
  require_same_cat(cat_of(a), cat_of(b));
  return nary_tensor(cat_of(a), {a, b});
}

Mor tensor_mor(const Mor& f, const Mor& g) {
  require_same_cat(cat_of(f), cat_of(g));
  return nary_tensor_mor(cat_of(f), {f, g});
}

Mor permute_factors(Cat c, const std::vector<Obj>& factors, const std::vector<int>& to_slot) {
  size_t m = factors.size();
  assert(to_slot.size() == m);
  std::vector<Obj> tgt_factors(m, unit_obj(c));
  for (size_t i = 0; i < m; ++i) tgt_factors[to_slot[i]] = factors[i];
  if (c == Cat::FinSet) {
    FinSetObj D = std::get<FinSetObj>(nary_tensor(c, factors));
    FinSetObj C = std::get<FinSetObj>(nary_tensor(c, tgt_factors));
    std::vector<int> ds(m);
    for (size_t t = 0; t < m; ++t) ds[t] = std::get<FinSetObj>(factors[t]).size;
    FinSetMor out{D, C, std::vector<int>(D.size)};
    for (int i = 0; i < D.size; ++i) {
      int rem = i;
      std::vector<int> idx(m);
      for (int t = int(m) - 1; t >= 0; --t) {
        idx[t] = rem % ds[t];
        rem /= ds[t];
      }
      int img = 0;
      for (size_t j = 0; j < m; ++j) {
        // target slot j holds source factor with to_slot == j
        for (size_t t = 0; t < m; ++t)
          if (to_slot[t] == int(j)) img = img * ds[t] + idx[t];
      }
      out.map[i] = img;
    }
    return out;
  }
  std::vector<ChainComplex> df, cf;
  for (auto& f : factors) df.push_back(std::get<ChainComplex>(f));
  for (auto& f : tgt_factors) cf.push_back(std::get<ChainComplex>(f));
  ChainComplex D = std::get<ChainComplex>(nary_tensor(c, factors));
  ChainComplex C = std::get<ChainComplex>(nary_tensor(c, tgt_factors));
  ChainMap out{D, C, std::min(D.lo, C.lo), {}};
  int hi = std::max(D.hi, C.hi);
  std::vector<int> from_slot(m);
  for (size_t t = 0; t < m; ++t) from_slot[to_slot[t]] = int(t);
  for (int n = out.lo; n <= hi; ++n) {
    Matrix mm(C.dim(n), D.dim(n));
    if (D.dim(n) > 0)
      for (const auto& kv : degree_vectors(df, n)) {
        int src_off = block_offset(df, kv);
        std::vector<int> kv2(m), idx2(m);
        for (size_t j = 0; j < m; ++j) kv2[j] = kv[from_slot[j]];
        int tgt_off = block_offset(cf, kv2);
        // Koszul sign: product over inversions of (-1)^{k_i k_j}
        int sign = 1;
        for (size_t i = 0; i < m; ++i)
          for (size_t j = i + 1; j < m; ++j)
            if (to_slot[i] > to_slot[j] && (kv[i] % 2 != 0) && (kv[j] % 2 != 0)) sign = -sign;
        std::vector<int> idx(m, 0);
        int bd = tuple_block_dim(df, kv);
        for (int cnt = 0; cnt < bd; ++cnt) {
          for (size_t j = 0; j < m; ++j) idx2[j] = idx[from_slot[j]];
          mm.at(tgt_off + rowmajor_index(cf, kv2, idx2), src_off + rowmajor_index(df, kv, idx)) =
              sign;
          for (int t = int(m) - 1; t >= 0; --t) {
            if (++idx[t] < df[t].dim(kv[t])) break;
            idx[t] = 0;
          }
        }
      }
    out.mats.push_back(mm);
  }
  cm_validate(out);
  return out;
}

Mor braiding(const Obj& a, const Obj& b) {
  require_same_cat(cat_of(a), cat_of(b));
  return permute_factors(cat_of(a), {a, b}, {1, 0});
}

std::vector<int> tensor_decode(Cat c, const std::vector<Obj>& factors, int degree, int index,
                               std::vector<int>* degrees_out) {
  size_t m = factors.size();
  if (c == Cat::FinSet) {
    std::vector<int> idx(m);
    for (int t = int(m) - 1; t >= 0; --t) {
      int s = std::get<FinSetObj>(factors[t]).size;
      idx[t] = index % s;
      index /= s;
    }
    if (degrees_out) degrees_out->assign(m, 0);
    return idx;
  }
  std::vector<ChainComplex> fs;
  for (auto& f : factors) fs.push_back(std::get<ChainComplex>(f));
  for (const auto& kv : degree_vectors(fs, degree)) {
    int bd = tuple_block_dim(fs, kv);
    if (index < bd) {
      std::vector<int> idx(m);
      for (int t = int(m) - 1; t >= 0; --t) {
        int s = fs[t].dim(kv[t]);
        idx[t] = index % s;
        index /= s;
      }
      if (degrees_out) *degrees_out = kv;
      return idx;
    }
    index -= bd;
  }
  throw std::out_of_range("tensor_decode: index out of range");
}

int tensor_encode(Cat c, const std::vector<Obj>& factors, const std::vector<int>& degrees,
                  const std::vector<int>& indices) {
  if (c == Cat::FinSet) {
    int r = 0;
    for (size_t t = 0; t < factors.size(); ++t)
      r = r * std::get<FinSetObj>(factors[t]).size + indices[t];
    return r;
  }
  std::vector<ChainComplex> fs;
  for (auto& f : factors) fs.push_back(std::get<ChainComplex>(f));
  return block_offset(fs, degrees) + rowmajor_index(fs, degrees, indices);
}

// ---------------------------------------------------------------------------
// coproducts and colimits

std::pair<int, int> CoproductResult::locate(int global) const {
  for (size_t t = 0; t + 1 < offsets.size(); ++t)
    if (global < offsets[t + 1]) return {int(t), global - offsets[t]};
  throw std::out_of_range("locate");
}

CoproductResult coproduct(Cat c, const std::vector<Obj>& parts) {
  CoproductResult r;
  if (c == Cat::FinSet) {
    int total = 0;
    for (const auto& p : parts) {
      r.offsets.push_back(total);
      total += std::get<FinSetObj>(p).size;
    }
    r.offsets.push_back(total);
    r.apex = FinSetObj{total, {}};
    for (size_t t = 0; t < parts.size(); ++t) {
      const auto& p = std::get<FinSetObj>(parts[t]);
      FinSetMor inj{p, std::get<FinSetObj>(r.apex), std::vector<int>(p.size)};
      for (int i = 0; i < p.size; ++i) inj.map[i] = r.offsets[t] + i;
      r.inj.push_back(inj);
    }
    return r;
  }
  std::vector<ChainComplex> fs;
  for (auto& p : parts) fs.push_back(std::get<ChainComplex>(p));
  ChainComplex sum = cc_zero();
  for (auto& f : fs) sum = cc_direct_sum(sum, f);
  r.apex = sum;
  r.lo = sum.lo;
  r.deg_offsets.assign(parts.size(), {});
  if (!sum.is_zero())
    for (int k = sum.lo; k <= sum.hi; ++k) {
      int off = 0;
      for (size_t t = 0; t < fs.size(); ++t) {
        r.deg_offsets[t].push_back(off);
        off += fs[t].dim(k);
      }
    }
  for (size_t t = 0; t < fs.size(); ++t) {
    ChainMap inj{fs[t], sum, sum.lo, {}};
    if (!sum.is_zero())
      for (int k = sum.lo; k <= sum.hi; ++k) {
        Matrix m(sum.dim(k), fs[t].dim(k));
        for (int i = 0; i < fs[t].dim(k); ++i) m.at(r.deg_offsets[t][k - sum.lo] + i, i) = 1;
        inj.mats.push_back(m);
      }
    r.inj.push_back(inj);
  }
  return r;
}

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int i) {
    while (p[i] != i) i = p[i] = p[p[i]];
    return i;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ColimitResult colimit(Cat c, const std::vector<Obj>& objs, const std::vector<Arrow>& arrows) {
  ColimitResult r;
  r.cop = coproduct(c, objs);
  if (c == Cat::FinSet) {
    int total = std::get<FinSetObj>(r.cop.apex).size;
    UF uf(total);
    for (const auto& a : arrows) {
      const auto& f = std::get<FinSetMor>(a.f);
      for (int x = 0; x < f.dom.size; ++x)
        uf.unite(r.cop.offsets[a.src] + x, r.cop.offsets[a.dst] + f.map[x]);
    }
    std::vector<int> cls(total, -1);
    for (int i = 0; i < total; ++i)
      if (uf.find(i) == i) {
        cls[i] = int(r.reps.size());
        r.reps.push_back(i);
      }
    r.apex = FinSetObj{int(r.reps.size()), {}};
    FinSetMor q{std::get<FinSetObj>(r.cop.apex), std::get<FinSetObj>(r.apex),
                std::vector<int>(total)};
    for (int i = 0; i < total; ++i) q.map[i] = cls[uf.find(i)];
    r.proj_from_cop = q;
    for (size_t t = 0; t < objs.size(); ++t)
      r.legs.push_back(fs_compose(q, std::get<FinSetMor>(r.cop.inj[t])));
    return r;
  }
  const ChainComplex& sum = std::get<ChainComplex>(r.cop.apex);
  // relation columns per degree
  ChainComplex apex;
  std::vector<Matrix> projs, secs;
  if (sum.is_zero()) {
    r.apex = cc_zero();
  } else {
    apex.lo = sum.lo;
    apex.hi = sum.hi;
    apex.trunc_lo = sum.trunc_lo;
    apex.trunc_hi = sum.trunc_hi;
    for (int k = sum.lo; k <= sum.hi; ++k) {
      Matrix rels(sum.dim(k), 0);
      for (const auto& a : arrows) {
        const auto& f = std::get<ChainMap>(a.f);
        const auto& is = std::get<ChainMap>(r.cop.inj[a.src]);
        const auto& id = std::get<ChainMap>(r.cop.inj[a.dst]);
        if (f.dom.dim(k) == 0) continue;
        rels = Matrix::hstack(rels, is.mat(k) - id.mat(k) * f.mat(k));
      }
      auto q = quotient_by_columns(sum.dim(k), rels);
      projs.push_back(q.proj);
      secs.push_back(q.section);
      apex.dims.push_back(q.proj.rows());
    }
    for (int k = apex.lo; k <= apex.hi; ++k) {
      Matrix prev =
          (k - 1 >= apex.lo) ? projs[k - 1 - apex.lo] : Matrix(0, sum.dim(k - 1));
      apex.diffs.push_back(prev * sum.d(k) * secs[k - apex.lo]);
    }
    cc_validate(apex);
    r.apex = apex;
  }
  ChainMap proj{sum, std::get<ChainComplex>(r.apex), sum.lo, projs};
  ChainMap sec{std::get<ChainComplex>(r.apex), sum, sum.lo, secs};
  r.proj_from_cop = proj;
  r.section_to_cop = sec;
  for (size_t t = 0; t < objs.size(); ++t)
    r.legs.push_back(cm_compose(proj, std::get<ChainMap>(r.cop.inj[t])));
  return r;
}

Mor ColimitResult::mediate(const std::vector<Mor>& cocone) const {
  if (std::holds_alternative<FinSetObj>(apex)) {
    const auto& A = std::get<FinSetObj>(apex);
    if (cocone.empty()) throw std::invalid_argument("mediate: empty cocone");
    FinSetObj Z = std::get<FinSetMor>(cocone[0]).cod;
    FinSetMor m{A, Z, std::vector<int>(A.size)};
    for (int i = 0; i < A.size; ++i) {
      auto [t, local] = cop.locate(reps[i]);
      m.map[i] = std::get<FinSetMor>(cocone[t]).map[local];
    }
    for (size_t t = 0; t < legs.size(); ++t)
      if (!mor_equal(fs_compose(m, std::get<FinSetMor>(legs[t])), cocone[t]))
        throw std::invalid_argument("mediate: cocone does not commute");
    return m;
  }
  const auto& A = std::get<ChainComplex>(apex);
  ChainComplex Z = std::get<ChainMap>(cocone[0]).cod;
  const auto& sum = std::get<ChainComplex>(cop.apex);
  ChainMap m{A, Z, A.lo, {}};
  for (int k = A.lo; k <= A.hi; ++k) {
    Matrix u(Z.dim(k), sum.dim(k));
    for (size_t t = 0; t < cocone.size(); ++t) {
      const auto& ct = std::get<ChainMap>(cocone[t]);
      const Matrix& mt = ct.mat(k);
      for (int i = 0; i < mt.rows(); ++i)
        for (int j = 0; j < mt.cols(); ++j) u.at(i, cop.deg_offsets[t][k - sum.lo] + j) = mt.at(i, j);
    }
    m.mats.push_back(u * std::get<ChainMap>(section_to_cop).mat(k));
  }
  for (size_t t = 0; t < legs.size(); ++t)
    if (!cm_equal(cm_compose(m, std::get<ChainMap>(legs[t])), std::get<ChainMap>(cocone[t])))
      throw std::invalid_argument("mediate: cocone does not commute");
  cm_validate(m);
  return m;
}

PushoutResult pushout(const Mor& f, const Mor& g) {
  require_same_cat(cat_of(f), cat_of(g));
  if (!obj_equal(dom(f), dom(g))) throw std::invalid_argument("pushout: domains differ");
  PushoutResult r;
  r.f = f;
  r.g = g;
  r.colim = colimit(cat_of(f), {dom(f), cod(f), cod(g)}, {{0, 1, f}, {0, 2, g}});
  r.apex = r.colim.apex;
  r.from_b = r.colim.legs[1];
  r.from_c = r.colim.legs[2];
  return r;
}

Mor PushoutResult::mediate(const Mor& u, const Mor& v) const {
  return colim.mediate({compose(u, f), u, v});
}

CoeqResult coequalizer(const Mor& f, const Mor& g) {
  require_same_cat(cat_of(f), cat_of(g));
  if (!obj_equal(dom(f), dom(g)) || !obj_equal(cod(f), cod(g)))
    throw std::invalid_argument("coequalizer: not a parallel pair");
  CoeqResult r;
  r.f = f;
  r.g = g;
  r.colim = colimit(cat_of(f), {dom(f), cod(f)}, {{0, 1, f}, {0, 1, g}});
  r.apex = r.colim.apex;
  r.proj = r.colim.legs[1];
  return r;
}

Mor CoeqResult::mediate(const Mor& u) const { return colim.mediate({compose(u, f), u}); }

PushoutProduct pushout_product(const Mor& f, const Mor& g) {
  require_same_cat(cat_of(f), cat_of(g));
  Obj A = dom(f), B = cod(f), C = dom(g), D = cod(g);
  Mor Ag = tensor_mor(identity(A), g);   // A(x)C -> A(x)D
  Mor fC = tensor_mor(f, identity(C));   // A(x)C -> B(x)C
  PushoutProduct r{pushout(Ag, fC), Mor()};
  Mor fD = tensor_mor(f, identity(D));   // A(x)D -> B(x)D
  Mor Bg = tensor_mor(identity(B), g);   // B(x)C -> B(x)D
  r.corner = r.dom.mediate(fD, Bg);
  return r;
}

WeakEqVerdict is_weak_equivalence(const Mor& f) {
  if (auto* m = std::get_if<FinSetMor>(&f)) return {fs_bijective(*m), false};
  const auto& cm = std::get<ChainMap>(f);
  ChainComplex cone = cc_cone(cm);
  WeakEqVerdict v{true, false};
  for (const auto& h : cc_homology(cone)) {
    if (!h.reliable) {
      v.boundary_caveat = true;
      continue;
    }
    if (h.dim != 0) v.value = false;
  }
  return v;
}

bool is_cofibration(const Mor& f) {
  if (std::holds_alternative<FinSetMor>(f)) return true;
  return cm_injective(std::get<ChainMap>(f));
}

}  // namespace oforge
