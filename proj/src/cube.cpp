#include "oforge/cube.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace oforge {

namespace {

int popcount(unsigned x) { return __builtin_popcount(x); }

std::vector<unsigned> subsets_sorted(int n, bool proper_only) {
  std::vector<unsigned> out;
  for (unsigned s = 0; s < (1u << n); ++s)
    if (!proper_only || s != (1u << n) - 1) out.push_back(s);
  std::stable_sort(out.begin(), out.end(),
                   [](unsigned a, unsigned b) { return popcount(a) < popcount(b); });
  return out;
}

// tensor with cod-side factors at positions in S
std::vector<Obj> vertex_factors(const Obj& x, const Obj& y, int n, unsigned s) {
  std::vector<Obj> f;
  for (int i = 0; i < n; ++i) f.push_back((s >> i) & 1 ? y : x);
  return f;
}

Mor vertex_map(const Mor& f, int n, unsigned s, unsigned t) {
  // Z_s -> Z_t for s subset t: apply f on t - s
  std::vector<Mor> fs;
  for (int i = 0; i < n; ++i) {
    bool in_s = (s >> i) & 1, in_t = (t >> i) & 1;
    if (in_s)
      fs.push_back(identity(cod(f)));
    else if (in_t)
      fs.push_back(f);
    else
      fs.push_back(identity(dom(f)));
  }
  return nary_tensor_mor(cat_of(f), fs);
}

// coordinate permutation Z_s -> Z_{sigma(s)}
Mor vertex_perm(const Obj& x, const Obj& y, int n, unsigned s, const Perm& sigma) {
  std::vector<int> to_slot(sigma.begin(), sigma.end());
  return permute_factors(cat_of(x), vertex_factors(x, y, n, s), to_slot);
}

unsigned apply_perm_subset(unsigned s, const Perm& sigma) {
  unsigned t = 0;
  for (size_t i = 0; i < sigma.size(); ++i)
    if ((s >> i) & 1) t |= 1u << sigma[i];
  return t;
}

}  // namespace

PPowerResult pp_power(const Mor& f, int n) {
  if (n < 1) throw std::invalid_argument("pp_power: n must be >= 1");
  Cat c = cat_of(f);
  Obj X = dom(f), Y = cod(f);
  PPowerResult r;
  r.dom_subsets = subsets_sorted(n, true);
  std::vector<Obj> objs;
  for (unsigned s : r.dom_subsets) objs.push_back(nary_tensor(c, vertex_factors(X, Y, n, s)));
  auto index_of = [&](unsigned s) {
    return int(std::find(r.dom_subsets.begin(), r.dom_subsets.end(), s) - r.dom_subsets.begin());
  };
  std::vector<Arrow> arrows;
  for (unsigned s : r.dom_subsets)
    for (int i = 0; i < n; ++i) {
      unsigned t = s | (1u << i);
      if (t == s || t == (1u << n) - 1) continue;
      arrows.push_back({index_of(s), index_of(t), vertex_map(f, n, s, t)});
    }
  r.dom_colim = colimit(c, objs, arrows);

  Obj Yn = nary_tensor(c, std::vector<Obj>(n, Y));
  // corner map via the cocone Z_s -> Y^n
  std::vector<Mor> corner_legs;
  for (unsigned s : r.dom_subsets) corner_legs.push_back(vertex_map(f, n, s, (1u << n) - 1));
  Mor corner = r.dom_colim.mediate(corner_legs);

  PermGroup g = PermGroup::symmetric(n);
  std::vector<Mor> dom_gens, cod_gens;
  for (const auto& e : g.generators()) {
    Perm sigma = e[0];
    std::vector<Mor> legs;
    for (unsigned s : r.dom_subsets) {
      unsigned s2 = apply_perm_subset(s, sigma);
      legs.push_back(compose(r.dom_colim.legs[index_of(s2)], vertex_perm(X, Y, n, s, sigma)));
    }
    dom_gens.push_back(r.dom_colim.mediate(legs));
    cod_gens.push_back(
        permute_factors(c, std::vector<Obj>(n, Y), std::vector<int>(sigma.begin(), sigma.end())));
  }
  EqObj domE = EqObj::make(g, r.dom_colim.apex, dom_gens);
  EqObj codE = EqObj::make(g, Yn, cod_gens);
  r.map = eq_mor(domE, codE, corner);
  return r;
}

namespace {

EqMor pp_eq_impl(const EqMor& a, const EqMor& b, bool diagonal) {
  Cat c = cat_of(a.f);
  Obj A = a.dom.carrier, B = a.cod.carrier, C = b.dom.carrier, D = b.cod.carrier;
  Mor Ag = tensor_mor(identity(A), b.f);
  Mor fC = tensor_mor(a.f, identity(C));
  PushoutResult po = pushout(Ag, fC);
  Mor fD = tensor_mor(a.f, identity(D));
  Mor Bg = tensor_mor(identity(B), b.f);
  Mor corner = po.mediate(fD, Bg);

  PermGroup g =
      diagonal ? a.dom.group : PermGroup::product(a.dom.group, b.dom.group);
  auto act_pair = [&](size_t gen_index) -> std::pair<Mor, Mor> {
    // actions on the a-side and b-side for this generator
    if (diagonal) return {a.dom.gen_act[gen_index], b.dom.gen_act[gen_index]};
    if (gen_index < a.dom.gen_act.size()) return {a.dom.gen_act[gen_index], identity(C)};
    return {identity(A), b.dom.gen_act[gen_index - a.dom.gen_act.size()]};
  };
  auto act_pair_cod = [&](size_t gen_index) -> std::pair<Mor, Mor> {
    if (diagonal) return {a.cod.gen_act[gen_index], b.cod.gen_act[gen_index]};
    if (gen_index < a.cod.gen_act.size()) return {a.cod.gen_act[gen_index], identity(D)};
    return {identity(B), b.cod.gen_act[gen_index - a.cod.gen_act.size()]};
  };
  size_t ngen = g.generators().size();
  std::vector<Mor> dom_gens, cod_gens;
  for (size_t i = 0; i < ngen; ++i) {
    auto [da, db] = act_pair(i);
    auto [ca, cb] = act_pair_cod(i);
    Mor on_AD = tensor_mor(da, cb);
    Mor on_BC = tensor_mor(ca, db);
    dom_gens.push_back(po.mediate(compose(po.from_b, on_AD), compose(po.from_c, on_BC)));
    cod_gens.push_back(tensor_mor(ca, cb));
  }
  EqObj domE = EqObj::make(g, po.apex, dom_gens);
  EqObj codE = EqObj::make(g, tensor(B, D), cod_gens);
  return eq_mor(domE, codE, corner);
}

}  // namespace

EqMor pp_of_eq(const EqMor& a, const EqMor& b) { return pp_eq_impl(a, b, false); }

EqMor pp_diagonal_eq(const EqMor& a, const EqMor& b) {
  if (!(a.dom.group == b.dom.group)) throw std::invalid_argument("pp_diagonal_eq: group mismatch");
  return pp_eq_impl(a, b, true);
}

EqMor pp_power_family(const std::vector<Mor>& s, const std::vector<int>& n) {
  if (s.size() != n.size() || s.empty())
    throw std::invalid_argument("pp_power_family: bad family");
  EqMor acc = pp_power(s[0], n[0]).map;
  for (size_t i = 1; i < s.size(); ++i) acc = pp_of_eq(acc, pp_power(s[i], n[i]).map);
  return acc;
}

PPFiltration pp_power_filtration(const Mor& b, int n) {
  if (n < 1) throw std::invalid_argument("pp_power_filtration: n >= 1");
  Cat c = cat_of(b);
  Obj X = dom(b), Y = cod(b);
  PermGroup g = PermGroup::symmetric(n);
  PPFiltration out;

  // F_k = colim over subsets of size <= k (k = n uses every subset)
  std::vector<ColimitResult> F(n + 1);
  std::vector<std::vector<unsigned>> Fsubs(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<unsigned> subs;
    for (unsigned s : subsets_sorted(n, false))
      if (popcount(s) <= k) subs.push_back(s);
    Fsubs[k] = subs;
    auto idx = [&](unsigned s) {
      return int(std::find(subs.begin(), subs.end(), s) - subs.begin());
    };
    std::vector<Obj> objs;
    for (unsigned s : subs) objs.push_back(nary_tensor(c, vertex_factors(X, Y, n, s)));
    std::vector<Arrow> arrows;
    for (unsigned s : subs)
      for (int i = 0; i < n; ++i) {
        unsigned t = s | (1u << i);
        if (t == s || popcount(t) > k) continue;
        arrows.push_back({idx(s), idx(t), vertex_map(b, n, s, t)});
      }
    F[k] = colimit(c, objs, arrows);
    out.filtration_objects.push_back(F[k].apex);
  }

  bool cert = true;
  Mor composite = identity(F[0].apex);
  for (int k = 1; k <= n; ++k) {
    PPFiltrationStage st;
    st.k = k;
    // dom(m_k): one punctured-S-cube per k-subset S, assembled as one colimit
    std::vector<std::pair<unsigned, unsigned>> pairs;  // (S, T), T proper submask of S
    std::vector<unsigned> ks;
    for (unsigned s : subsets_sorted(n, false))
      if (popcount(s) == k) ks.push_back(s);
    for (unsigned S : ks) {
      unsigned T = S;
      while (true) {
        if (T != S) pairs.push_back({S, T});
        if (T == 0) break;
        T = (T - 1) & S;
      }
    }
    std::sort(pairs.begin(), pairs.end());
    auto pidx = [&](unsigned S, unsigned T) {
      return int(std::find(pairs.begin(), pairs.end(), std::make_pair(S, T)) - pairs.begin());
    };
    std::vector<Obj> dobjs;
    for (auto& [S, T] : pairs) dobjs.push_back(nary_tensor(c, vertex_factors(X, Y, n, T)));
    std::vector<Arrow> darrows;
    for (auto& [S, T] : pairs)
      for (int i = 0; i < n; ++i) {
        if (!((S >> i) & 1)) continue;
        unsigned T2 = T | (1u << i);
        if (T2 == T || T2 == S) continue;
        darrows.push_back({pidx(S, T), pidx(S, T2), vertex_map(b, n, T, T2)});
      }
    ColimitResult dm = colimit(c, dobjs, darrows);
    // cod(m_k) = coproduct of Z_S over k-subsets
    std::vector<Obj> cobjs;
    for (unsigned S : ks) cobjs.push_back(nary_tensor(c, vertex_factors(X, Y, n, S)));
    CoproductResult cm = coproduct(c, cobjs);
    auto kidx = [&](unsigned S) {
      return int(std::find(ks.begin(), ks.end(), S) - ks.begin());
    };
    // m_k: mediate legs (S,T): Z_T -> Z_S -> inj_S
    std::vector<Mor> mlegs;
    for (auto& [S, T] : pairs) mlegs.push_back(compose(cm.inj[kidx(S)], vertex_map(b, n, T, S)));
    Mor mk = dm.mediate(mlegs);
    // attach: (S,T) -> F_{k-1} via T
    auto fidx = [&](int kk, unsigned s) {
      return int(std::find(Fsubs[kk].begin(), Fsubs[kk].end(), s) - Fsubs[kk].begin());
    };
    std::vector<Mor> alegs;
    for (auto& [S, T] : pairs) alegs.push_back(F[k - 1].legs[fidx(k - 1, T)]);
    st.attach = dm.mediate(alegs);
    // F_{k-1} -> F_k
    std::vector<Mor> slegs;
    for (unsigned s : Fsubs[k - 1]) slegs.push_back(F[k].legs[fidx(k, s)]);
    st.stage_map = F[k - 1].mediate(slegs);
    // equivariant structure of m_k
    std::vector<Mor> dom_gens, cod_gens;
    for (const auto& e : g.generators()) {
      Perm sigma = e[0];
      std::vector<Mor> dlegs;
      for (auto& [S, T] : pairs)
        dlegs.push_back(compose(dm.legs[pidx(apply_perm_subset(S, sigma), apply_perm_subset(T, sigma))],
                                vertex_perm(X, Y, n, T, sigma)));
      dom_gens.push_back(dm.mediate(dlegs));
      // on cod: permute summands and coordinates
      std::vector<Mor> clegs;
      for (unsigned S : ks)
        clegs.push_back(
            compose(cm.inj[kidx(apply_perm_subset(S, sigma))], vertex_perm(X, Y, n, S, sigma)));
      if (std::holds_alternative<FinSetObj>(cm.apex)) {
        FinSetObj ap = std::get<FinSetObj>(cm.apex);
        FinSetMor m{ap, ap, std::vector<int>(ap.size)};
        for (size_t t = 0; t < ks.size(); ++t) {
          const auto& ct = std::get<FinSetMor>(clegs[t]);
          for (int i = 0; i < ct.dom.size; ++i) m.map[cm.offsets[t] + i] = ct.map[i];
        }
        cod_gens.push_back(m);
      } else {
        const auto& ap = std::get<ChainComplex>(cm.apex);
        ChainMap m{ap, ap, ap.lo, {}};
        for (int kk = ap.lo; kk <= ap.hi; ++kk) {
          Matrix mk2(ap.dim(kk), ap.dim(kk));
          for (size_t t = 0; t < ks.size(); ++t) {
            const auto& ct = std::get<ChainMap>(clegs[t]);
            Matrix blk = ct.mat(kk);
            int off = cm.deg_offsets[t][kk - ap.lo];
            for (int rr = 0; rr < blk.rows(); ++rr)
              for (int cc = 0; cc < blk.cols(); ++cc) mk2.at(rr, off + cc) = blk.at(rr, cc);
          }
          m.mats.push_back(mk2);
        }
        cod_gens.push_back(m);
      }
    }
    EqObj domE = EqObj::make(g, dm.apex, dom_gens);
    EqObj codE = EqObj::make(g, cm.apex, cod_gens);
    st.m = eq_mor(domE, codE, mk);

    // cocartesian certificate: pushout of (attach, m_k) compared with F_k
    PushoutResult po = pushout(mk, st.attach);
    // comparison P -> F_k
    std::vector<Mor> cone_cod;
    for (unsigned S : ks) cone_cod.push_back(F[k].legs[fidx(k, S)]);
    Mor cod_to_Fk;
    {
      // assemble cod(m_k) -> F_k from summand legs
      if (std::holds_alternative<FinSetObj>(cm.apex)) {
        FinSetObj ap = std::get<FinSetObj>(cm.apex);
        FinSetObj tgt = std::get<FinSetObj>(F[k].apex);
        FinSetMor m{ap, tgt, std::vector<int>(ap.size)};
        for (size_t t = 0; t < ks.size(); ++t) {
          const auto& ct = std::get<FinSetMor>(cone_cod[t]);
          for (int i = 0; i < ct.dom.size; ++i) m.map[cm.offsets[t] + i] = ct.map[i];
        }
        cod_to_Fk = m;
      } else {
        const auto& ap = std::get<ChainComplex>(cm.apex);
        const auto& tgt = std::get<ChainComplex>(F[k].apex);
        ChainMap m{ap, tgt, std::min(ap.lo, tgt.lo), {}};
        for (int kk = m.lo; kk <= std::max(ap.hi, tgt.hi); ++kk) {
          Matrix mk2(tgt.dim(kk), ap.dim(kk));
          for (size_t t = 0; t < ks.size(); ++t) {
            const auto& ct = std::get<ChainMap>(cone_cod[t]);
            Matrix blk = ct.mat(kk);
            if (ap.dim(kk) == 0) continue;
            int off = cm.deg_offsets[t][kk - ap.lo];
            for (int rr = 0; rr < blk.rows(); ++rr)
              for (int cc = 0; cc < blk.cols(); ++cc) mk2.at(rr, off + cc) = blk.at(rr, cc);
          }
          m.mats.push_back(mk2);
        }
        cod_to_Fk = m;
      }
    }
    bool sq = true;
    try {
      Mor cmp = po.mediate(cod_to_Fk, st.stage_map);
      // inverse comparison F_k -> P from the F_k colimit structure
      std::vector<Mor> invlegs;
      for (unsigned s : Fsubs[k]) {
        if (popcount(s) <= k - 1)
          invlegs.push_back(compose(po.from_c, F[k - 1].legs[fidx(k - 1, s)]));
        else
          invlegs.push_back(compose(po.from_b, cm.inj[kidx(s)]));
      }
      Mor inv = F[k].mediate(invlegs);
      sq = mor_equal(compose(cmp, inv), identity(F[k].apex)) &&
           mor_equal(compose(inv, cmp), identity(po.apex));
    } catch (const std::exception&) {
      sq = false;
    }
    st.square_cocartesian = sq;
    cert = cert && sq;
    composite = compose(st.stage_map, composite);
    out.stages.push_back(std::move(st));
  }

  // composite certificate: X^n -> F_{n-1} -> (corner of m_n) Y^n equals b^{(x)n}
  // dom(m_n) is the full punctured cube; identify it with F_{n-1} by mediating
  // both ways, then compare.
  try {
    PPowerResult full = pp_power(b, n);
    // F_{n-1} -> dom(full) : legs per subset
    auto& Fm = F[n - 1];
    std::vector<Mor> legs;
    for (unsigned s : Fsubs[n - 1]) {
      int i = int(std::find(full.dom_subsets.begin(), full.dom_subsets.end(), s) -
                  full.dom_subsets.begin());
      legs.push_back(full.dom_colim.legs[i]);
    }
    Mor to_cube = Fm.mediate(legs);
    Mor chain = identity(F[0].apex);
    for (int k = 1; k <= n - 1; ++k) chain = compose(out.stages[k - 1].stage_map, chain);
    Mor f0_to_yn = compose(full.map.f, compose(to_cube, chain));
    // X^n -> F_0 leg
    Mor xleg = F[0].legs[0];
    Mor got = compose(f0_to_yn, xleg);
    Mor want = nary_tensor_mor(c, std::vector<Mor>(n, b));
    out.composite = f0_to_yn;
    out.certificate = cert && mor_equal(got, want);
  } catch (const std::exception&) {
    out.certificate = false;
  }
  return out;
}

}  // namespace oforge
