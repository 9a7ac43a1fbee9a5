#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oforge/base.hpp"

using namespace oforge;

namespace {

ChainComplex interval() {
  // Q --id--> Q in degrees 1, 0
  ChainComplex c;
  c.lo = 0;
  c.hi = 1;
  c.dims = {1, 1};
  c.diffs = {Matrix(0, 1), Matrix::identity(1)};
  cc_validate(c);
  return c;
}

FinSetMor fsm(int d, int c, std::vector<int> m) {
  return FinSetMor{FinSetObj{d, {}}, FinSetObj{c, {}}, std::move(m)};
}

}  // namespace

TEST_CASE("finset tensor is the cartesian product") {
  Obj a = FinSetObj{2, {}}, b = FinSetObj{3, {}};
  CHECK(obj_size(tensor(a, b)) == 6);
}

TEST_CASE("chq tensor with the unit is the identity shape") {
  Obj u = cc_unit();
  Obj b = interval();
  Obj t = tensor(u, b);
  const auto& tc = std::get<ChainComplex>(t);
  CHECK(tc.dim(0) == 1);
  CHECK(tc.dim(1) == 1);
  CHECK(tc.d(1) == std::get<ChainComplex>(b).d(1));
}

TEST_CASE("koszul sign on two degree-1 lines") {
  Obj a = cc_sphere(1), b = cc_sphere(1);
  Obj tab = tensor(a, b);
  const auto& t = std::get<ChainComplex>(tab);
  CHECK(t.dim(2) == 1);
  CHECK(t.d(2).is_zero());
  Mor br = braiding(a, b);
  CHECK(std::get<ChainMap>(br).mat(2).at(0, 0) == Rat(-1));
  // braiding is an involution up to the symmetry iso back
  Mor br2 = braiding(b, a);
  CHECK(mor_equal(compose(br2, br), identity(tensor(a, b))));
}

TEST_CASE("braiding is involutive in finset") {
  Obj a = FinSetObj{2, {}}, b = FinSetObj{3, {}};
  Mor t1 = braiding(a, b), t2 = braiding(b, a);
  CHECK(mor_equal(compose(t2, t1), identity(tensor(a, b))));
}

TEST_CASE("hexagon instance") {
  // tau_{A,B(x)C} equals (id_B (x) tau_{A,C}) . (tau_{A,B} (x) id_C) on triples
  for (Cat c : {Cat::FinSet, Cat::ChQ}) {
    std::vector<Obj> f;
    if (c == Cat::FinSet)
      f = {Obj(FinSetObj{2, {}}), Obj(FinSetObj{3, {}}), Obj(FinSetObj{2, {}})};
    else
      f = {Obj(cc_sphere(1)), Obj(interval()), Obj(cc_sphere(2))};
    Mor lhs = permute_factors(c, f, {2, 0, 1});  // A to the back
    Mor s1 = permute_factors(c, f, {1, 0, 2});
    std::vector<Obj> f2 = {f[1], f[0], f[2]};
    Mor s2 = permute_factors(c, f2, {0, 2, 1});
    CHECK(mor_equal(compose(s2, s1), lhs));
  }
}

TEST_CASE("pushout in finset via union-find") {
  // A={*}, B={*,b}, C={*,c}, inclusions: |P| = 3
  Mor f = fsm(1, 2, {0});
  Mor g = fsm(1, 2, {0});
  auto p = pushout(f, g);
  CHECK(obj_size(p.apex) == 3);
  // pushout along identity: P = B
  auto p2 = pushout(fsm(2, 2, {0, 1}), fsm(2, 3, {0, 2}));
  CHECK(obj_size(p2.apex) == 3);
}

TEST_CASE("pushout universal property, exhaustive uniqueness in finset") {
  Mor f = fsm(2, 3, {0, 1});
  Mor g = fsm(2, 2, {0, 0});
  auto p = pushout(f, g);
  // candidate cocone: Z of size 2
  FinSetObj Z{2, {}};
  Mor u = fsm(3, 2, {0, 0, 1});
  Mor v = fsm(2, 2, {0, 1});
  bool commutes = mor_equal(compose(u, f), compose(v, g));
  if (commutes) {
    Mor m = p.mediate(u, v);
    // uniqueness by exhaustive search over all functions P -> Z
    int n = obj_size(p.apex);
    int count = 0;
    std::vector<int> cand(n, 0);
    for (int mask = 0; mask < 1 << n; ++mask) {
      for (int i = 0; i < n; ++i) cand[i] = (mask >> i) & 1;
      Mor cm = fsm(n, 2, cand);
      if (mor_equal(compose(cm, p.from_b), u) && mor_equal(compose(cm, p.from_c), v)) ++count;
    }
    CHECK(count == 1);
  }
}

TEST_CASE("chq pushout of zero maps is the direct sum") {
  ChainComplex b = interval(), c = interval();
  Mor f = cm_zero_map(cc_zero(), b);
  Mor g = cm_zero_map(cc_zero(), c);
  auto p = pushout(f, g);
  CHECK(obj_size(p.apex) == 4);
}

TEST_CASE("coequalizer merges orbits") {
  Mor f = fsm(1, 2, {0});
  Mor g = fsm(1, 2, {1});
  auto q = coequalizer(f, g);
  CHECK(obj_size(q.apex) == 1);
  // f = g gives B back
  auto q2 = coequalizer(f, f);
  CHECK(obj_size(q2.apex) == 2);
}

TEST_CASE("chq coequalizer rank") {
  // B = Q^2 degree 0, f-g of rank 1: dim Q = 1
  ChainComplex B = cc_sphere(0, 2);
  ChainMap f{cc_unit(), B, 0, {Matrix(2, 1)}};
  f.mats[0].at(0, 0) = 1;
  ChainMap g{cc_unit(), B, 0, {Matrix(2, 1)}};
  g.mats[0].at(1, 0) = 1;
  auto q = coequalizer(Mor(f), Mor(g));
  CHECK(obj_size(q.apex) == 1);
  // mediating morphism: u: B -> Q summing coordinates coequalizes
  ChainMap u{B, cc_unit(), 0, {Matrix(1, 2)}};
  u.mats[0].at(0, 0) = 1;
  u.mats[0].at(0, 1) = 1;
  Mor m = q.mediate(Mor(u));
  CHECK(mor_equal(compose(m, q.proj), Mor(u)));
}

TEST_CASE("pushout product on generating cofibration") {
  // b: {x} -> {x,y}; b pp b has domain 3, codomain 4
  Mor b = fsm(1, 2, {0});
  auto pp = pushout_product(b, b);
  CHECK(obj_size(pp.dom.apex) == 3);
  CHECK(obj_size(cod(pp.corner)) == 4);
  // empty -> 1 square
  Mor e = fsm(0, 1, {});
  auto pp2 = pushout_product(e, e);
  CHECK(obj_size(pp2.dom.apex) == 0);
  CHECK(obj_size(cod(pp2.corner)) == 1);
}

TEST_CASE("pushout product of an iso is an iso (chq)") {
  ChainComplex a = interval();
  Mor f = identity(Obj(a));
  ChainMap g{cc_unit(), cc_sphere(0, 2), 0, {Matrix(2, 1)}};
  g.mats[0].at(0, 0) = 1;
  auto pp = pushout_product(f, Mor(g));
  CHECK(is_iso(pp.corner));
}

TEST_CASE("weak equivalence and cofibration predicates") {
  CHECK(is_weak_equivalence(fsm(2, 2, {1, 0})).value);
  CHECK(!is_weak_equivalence(fsm(2, 1, {0, 0})).value);
  CHECK(is_cofibration(fsm(2, 1, {0, 0})));

  // inclusion Q -> Q^2 in degree 0: cofibration, not w.e.
  ChainMap inc{cc_unit(), cc_sphere(0, 2), 0, {Matrix(2, 1)}};
  inc.mats[0].at(0, 0) = 1;
  CHECK(is_cofibration(Mor(inc)));
  CHECK(!is_weak_equivalence(Mor(inc)).value);
  // acyclic interval: unit -> interval at degree 0 is a w.e.? cone of id is acyclic
  CHECK(is_weak_equivalence(identity(Obj(interval()))).value);
  ChainComplex I = interval();
  auto h = cc_homology(I);
  for (auto& e : h) CHECK(e.dim == 0);
}

TEST_CASE("homology of truncated complexes flags boundaries") {
  ChainComplex c = cc_sphere(0);
  c.trunc_hi = true;
  auto h = cc_homology(c);
  REQUIRE(h.size() == 1);
  CHECK(!h[0].reliable);
}

TEST_CASE("chq colimit mediators solve uniquely") {
  // pushout of interval <- unit -> unit over degree 0; probe mediator
  ChainComplex I = interval();
  ChainMap f{cc_unit(), I, 0, {Matrix(1, 1)}};
  f.mats[0].at(0, 0) = 1;
  auto p = pushout(Mor(f), Mor(identity(Obj(cc_unit()))));
  ChainMap u{I, I, 0, {Matrix::identity(1), Matrix::identity(1)}};
  Mor m = p.mediate(Mor(cm_from_mats(I, I, 0, {Matrix::identity(1), Matrix::identity(1)})),
                    Mor(f));
  CHECK(mor_equal(compose(m, p.from_b), Mor(u)));
}
