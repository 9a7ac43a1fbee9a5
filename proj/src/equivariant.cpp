#include "oforge/equivariant.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace oforge {

EqObj EqObj::make(PermGroup g, Obj carrier, std::vector<Mor> gen_act) {
  EqObj x{std::move(g), std::move(carrier), std::move(gen_act), {}};
  auto gens = x.group.generators();
  if (gens.size() != x.gen_act.size())
    throw std::invalid_argument("EqObj: generator action count mismatch");
  for (const auto& m : x.gen_act) {
    if (!obj_equal(dom(m), x.carrier) || !obj_equal(cod(m), x.carrier) || !is_iso(m))
      throw std::invalid_argument("EqObj: generator action is not an automorphism");
  }
  x.table[x.group.id()] = identity(x.carrier);
  std::vector<PermGroup::Element> frontier = {x.group.id()};
  while (!frontier.empty()) {
    std::vector<PermGroup::Element> nxt;
    for (auto& e : frontier)
      for (size_t i = 0; i < gens.size(); ++i) {
        auto e2 = x.group.compose(gens[i], e);
        Mor m2 = compose(x.gen_act[i], x.table.at(e));
        auto it = x.table.find(e2);
        if (it == x.table.end()) {
          x.table[e2] = m2;
          nxt.push_back(e2);
        } else if (!mor_equal(it->second, m2)) {
          throw std::invalid_argument("EqObj: action violates group relations");
        }
      }
    frontier = std::move(nxt);
  }
  return x;
}

EqObj EqObj::trivial(Obj carrier) { return make(PermGroup::trivial(), std::move(carrier), {}); }

EqObj EqObj::with_trivial_action(PermGroup g, Obj carrier) {
  std::vector<Mor> gens(g.generators().size(), identity(carrier));
  return make(std::move(g), std::move(carrier), std::move(gens));
}

bool eq_mor_commutes(const EqObj& dom_, const EqObj& cod_, const Mor& f) {
  if (!(dom_.group == cod_.group)) return false;
  for (size_t i = 0; i < dom_.gen_act.size(); ++i)
    if (!mor_equal(compose(f, dom_.gen_act[i]), compose(cod_.gen_act[i], f))) return false;
  return true;
}

EqMor eq_mor(EqObj dom_, EqObj cod_, Mor f) {
  if (!obj_equal(dom(f), dom_.carrier) || !obj_equal(cod(f), cod_.carrier))
    throw std::invalid_argument("eq_mor: carrier mismatch");
  if (!eq_mor_commutes(dom_, cod_, f))
    throw std::invalid_argument("eq_mor: not equivariant");
  return EqMor{std::move(dom_), std::move(cod_), std::move(f)};
}

EqObj tensor_eq(const EqObj& a, const EqObj& b) {
  PermGroup g = PermGroup::product(a.group, b.group);
  Obj carrier = tensor(a.carrier, b.carrier);
  std::vector<Mor> gens;
  for (const auto& m : a.gen_act) gens.push_back(tensor_mor(m, identity(b.carrier)));
  for (const auto& m : b.gen_act) gens.push_back(tensor_mor(identity(a.carrier), m));
  return EqObj::make(std::move(g), std::move(carrier), std::move(gens));
}

EqMor tensor_eq_mor(const EqMor& a, const EqMor& b) {
  return eq_mor(tensor_eq(a.dom, b.dom), tensor_eq(a.cod, b.cod), tensor_mor(a.f, b.f));
}

EqObj restrict_action(const EqObj& x, const GroupEmbedding& emb) {
  if (!(emb.g == x.group)) throw std::invalid_argument("restrict_action: group mismatch");
  std::vector<Mor> gens;
  for (auto& gi : emb.gen_images) gens.push_back(x.act(gi));
  return EqObj::make(emb.h, x.carrier, std::move(gens));
}

namespace {

CoinvResult coinv_from_elements(const Obj& carrier, const std::vector<Mor>& elems) {
  CoinvResult r;
  if (std::holds_alternative<FinSetObj>(carrier)) {
    int n = std::get<FinSetObj>(carrier).size;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (const auto& m : elems) {
      const auto& f = std::get<FinSetMor>(m);
      for (int i = 0; i < n; ++i) {
        int a = find(i), b = find(f.map[i]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<int> reps, cls(n, -1);
    for (int i = 0; i < n; ++i)
      if (find(i) == i) {
        cls[i] = int(reps.size());
        reps.push_back(i);
      }
    FinSetObj q{int(reps.size()), {}};
    FinSetMor proj{std::get<FinSetObj>(carrier), q, std::vector<int>(n)};
    for (int i = 0; i < n; ++i) proj.map[i] = cls[find(i)];
    FinSetMor sec{q, std::get<FinSetObj>(carrier), reps};
    r.obj = q;
    r.proj = proj;
    r.section = sec;
    return r;
  }
  const auto& c = std::get<ChainComplex>(carrier);
  ChainComplex q;
  q.lo = c.lo;
  q.hi = c.hi;
  q.trunc_lo = c.trunc_lo;
  q.trunc_hi = c.trunc_hi;
  std::vector<Matrix> projs, secs;
  Rat inv_order(1, long(elems.size()));
  for (int k = c.lo; k <= c.hi; ++k) {
    Matrix avg(c.dim(k), c.dim(k));
    for (const auto& m : elems) avg = avg + std::get<ChainMap>(m).mat(k);
    avg = avg.scaled(inv_order);
    Matrix basis = avg.column_space_basis();
    auto coords = basis.solve(avg);
    if (!coords) throw std::logic_error("coinvariants: projection solve failed");
    projs.push_back(*coords);
    secs.push_back(basis);
    q.dims.push_back(basis.cols());
  }
  for (int k = q.lo; k <= q.hi; ++k) {
    Matrix prev = (k - 1 >= q.lo) ? projs[k - 1 - q.lo] : Matrix(0, c.dim(k - 1));
    q.diffs.push_back(prev * c.d(k) * secs[k - q.lo]);
  }
  if (q.hi >= q.lo) cc_validate(q);
  r.obj = q;
  r.proj = ChainMap{c, q, c.lo, projs};
  r.section = ChainMap{q, c, c.lo, secs};
  cm_validate(std::get<ChainMap>(r.proj));
  cm_validate(std::get<ChainMap>(r.section));
  return r;
}

}  // namespace

CoinvResult coinvariants(const EqObj& x) {
  std::vector<Mor> elems;
  for (const auto& [e, m] : x.table) elems.push_back(m);
  return coinv_from_elements(x.carrier, elems);
}

CoinvResult coinvariants_generated(const Obj& carrier, const std::vector<Mor>& gens) {
  // close the generated automorphism group
  std::vector<Mor> elems = {identity(carrier)};
  std::vector<Mor> frontier = elems;
  auto contains = [&](const Mor& m) {
    for (const auto& e : elems)
      if (mor_equal(e, m)) return true;
    return false;
  };
  while (!frontier.empty()) {
    std::vector<Mor> nxt;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Mor m = compose(g, e);
        if (!contains(m)) {
          elems.push_back(m);
          nxt.push_back(m);
        }
      }
    frontier = std::move(nxt);
  }
  return coinv_from_elements(carrier, elems);
}

Mor coinv_mor(const CoinvResult& domc, const CoinvResult& codc, const Mor& f) {
  return compose(codc.proj, compose(f, domc.section));
}

namespace {

InduceResult induce_impl(const PermGroup& g, const std::map<PermGroup::Element, Mor>& sub_table,
                         const Obj& carrier) {
  const std::map<PermGroup::Element, Mor>& img_act = sub_table;
  InduceResult r;
  auto all = g.elements();
  std::vector<int> coset_of(all.size(), -1);
  auto index_of = [&](const PermGroup::Element& e) {
    auto it = std::lower_bound(all.begin(), all.end(), e);
    return int(it - all.begin());
  };
  std::vector<PermGroup::Element> img_elems;
  for (auto& [k, v] : img_act) img_elems.push_back(k);
  for (size_t i = 0; i < all.size(); ++i) {
    if (coset_of[i] != -1) continue;
    int c = int(r.coset_reps.size());
    r.coset_reps.push_back(all[i]);
    for (auto& s : img_elems) coset_of[index_of(g.compose(all[i], s))] = c;
  }
  int ncs = int(r.coset_reps.size());
  r.cop = coproduct(cat_of(carrier), std::vector<Obj>(ncs, carrier));
  std::vector<Mor> gen_act;
  for (auto& gamma : g.generators()) {
    // gamma . rep_i = rep_j . s  with s in the subgroup
    std::vector<Mor> cocone(ncs, Mor{});
    std::vector<int> tgt(ncs);
    for (int i = 0; i < ncs; ++i) {
      auto moved = g.compose(gamma, r.coset_reps[i]);
      int j = coset_of[index_of(moved)];
      auto s = g.compose(g.invert(r.coset_reps[j]), moved);
      tgt[i] = j;
      cocone[i] = compose(r.cop.inj[j], img_act.at(s));
    }
    // block morphism on the coproduct
    if (std::holds_alternative<FinSetObj>(carrier)) {
      int total = std::get<FinSetObj>(r.cop.apex).size;
      FinSetMor m{std::get<FinSetObj>(r.cop.apex), std::get<FinSetObj>(r.cop.apex),
                  std::vector<int>(total)};
      for (int i = 0; i < ncs; ++i) {
        const auto& ci = std::get<FinSetMor>(cocone[i]);
        for (int x = 0; x < std::get<FinSetObj>(carrier).size; ++x)
          m.map[r.cop.offsets[i] + x] = ci.map[x];
      }
      gen_act.push_back(m);
    } else {
      const auto& sum = std::get<ChainComplex>(r.cop.apex);
      ChainMap m{sum, sum, sum.lo, {}};
      for (int k = sum.lo; k <= sum.hi; ++k) {
        Matrix mk(sum.dim(k), sum.dim(k));
        for (int i = 0; i < ncs; ++i) {
          const auto& ci = std::get<ChainMap>(cocone[i]);
          Matrix blk = ci.mat(k);
          int coff = r.cop.deg_offsets[i][k - sum.lo];
          for (int rr = 0; rr < blk.rows(); ++rr)
            for (int cc = 0; cc < blk.cols(); ++cc) mk.at(rr, coff + cc) = blk.at(rr, cc);
        }
        m.mats.push_back(mk);
      }
      gen_act.push_back(m);
    }
  }
  r.obj = EqObj::make(g, r.cop.apex, gen_act);
  return r;
}

}  // namespace

InduceResult induce(const GroupEmbedding& emb, const EqObj& x) {
  if (!(emb.h == x.group)) throw std::invalid_argument("induce: group mismatch");
  std::map<PermGroup::Element, Mor> sub;
  for (auto& [h, g] : emb.graph) sub[g] = x.act(h);
  return induce_impl(emb.g, sub, x.carrier);
}

InduceResult induce_generated(const PermGroup& g,
                              const std::map<PermGroup::Element, Mor>& sub_table,
                              const Obj& carrier) {
  return induce_impl(g, sub_table, carrier);
}

}  // namespace oforge
