#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oforge/equivariant.hpp"

using namespace oforge;

namespace {

// regular Sigma_2 set: two points swapped
EqObj regular_sigma2_finset() {
  FinSetObj x{2, {}};
  FinSetMor swap{x, x, {1, 0}};
  return EqObj::make(PermGroup::symmetric(2), x, {Mor(swap)});
}

// regular representation Q[Sigma_2] in degree 0
EqObj regular_sigma2_chq() {
  ChainComplex c = cc_sphere(0, 2);
  Matrix m(2, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  ChainMap swap{c, c, 0, {m}};
  return EqObj::make(PermGroup::symmetric(2), c, {Mor(swap)});
}

}  // namespace

TEST_CASE("group elements and generators") {
  PermGroup s3 = PermGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.elements().size() == 6);
  CHECK(s3.generators().size() == 2);
  PermGroup s2x1{{2, 1}};
  CHECK(s2x1.order() == 2);
  CHECK(s2x1.generators().size() == 1);
  CHECK(PermGroup::trivial().order() == 1);
}

TEST_CASE("action table verifies relations") {
  // a non-involutive map as a Sigma_2 'action' must be rejected
  FinSetObj x{3, {}};
  FinSetMor rot{x, x, {1, 2, 0}};
  CHECK_THROWS(EqObj::make(PermGroup::symmetric(2), x, {Mor(rot)}));
  // the honest swap passes
  CHECK(regular_sigma2_finset().table.size() == 2);
}

TEST_CASE("coinvariants: trivial group is the identity") {
  EqObj x = EqObj::trivial(FinSetObj{3, {}});
  auto c = coinvariants(x);
  CHECK(obj_size(c.obj) == 3);
}

TEST_CASE("coinvariants of the swap on two points is one orbit") {
  auto c = coinvariants(regular_sigma2_finset());
  CHECK(obj_size(c.obj) == 1);
}

TEST_CASE("coinvariants of the regular representation has dim 1") {
  auto c = coinvariants(regular_sigma2_chq());
  CHECK(obj_size(c.obj) == 1);
  CHECK(mor_equal(compose(c.proj, c.section), identity(c.obj)));
}

TEST_CASE("coinvariant projection coequalizes generators and is universal") {
  EqObj x = regular_sigma2_finset();
  auto c = coinvariants(x);
  CHECK(mor_equal(compose(c.proj, x.gen_act[0]), c.proj));
  // any coequalizing morphism factors uniquely
  FinSetMor u{std::get<FinSetObj>(x.carrier), FinSetObj{2, {}}, {1, 1}};
  Mor through = compose(Mor(u), c.section);
  CHECK(mor_equal(compose(through, c.proj), Mor(u)));
}

TEST_CASE("induce along trivial subgroup of Sigma_2") {
  // H trivial, |X| = 1: carrier size 2 with the swap action
  PermGroup h = PermGroup::trivial();
  PermGroup g = PermGroup::symmetric(2);
  auto emb = GroupEmbedding::make(h, g, {});
  EqObj x = EqObj::trivial(FinSetObj{1, {}});
  auto ind = induce(emb, x);
  CHECK(obj_size(ind.obj.carrier) == 2);
  CHECK(!mor_equal(ind.obj.gen_act[0], identity(ind.obj.carrier)));
  // (Ind X)_G = X_H
  auto c1 = coinvariants(ind.obj);
  auto c2 = coinvariants(x);
  CHECK(obj_size(c1.obj) == obj_size(c2.obj));
}

TEST_CASE("induce in chq doubles dimensions over two cosets") {
  PermGroup h = PermGroup::trivial();
  PermGroup g = PermGroup::symmetric(2);
  auto emb = GroupEmbedding::make(h, g, {});
  EqObj x = EqObj::trivial(cc_sphere(0, 1));
  auto ind = induce(emb, x);
  CHECK(obj_size(ind.obj.carrier) == 2);
  auto c = coinvariants(ind.obj);
  CHECK(obj_size(c.obj) == 1);
}

TEST_CASE("induce H = G is the identity") {
  PermGroup g = PermGroup::symmetric(2);
  auto emb = GroupEmbedding::make(g, g, g.generators());
  EqObj x = regular_sigma2_finset();
  auto ind = induce(emb, x);
  CHECK(obj_size(ind.obj.carrier) == 2);
  auto ci = coinvariants(ind.obj);
  auto cx = coinvariants(x);
  CHECK(obj_size(ci.obj) == obj_size(cx.obj));
}

TEST_CASE("embedding rejects non-homomorphic or non-injective data") {
  PermGroup s2 = PermGroup::symmetric(2);
  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup::Element rot = {{1, 2, 0}};
  CHECK_THROWS(GroupEmbedding::make(s2, s3, {rot}));
  CHECK_THROWS(GroupEmbedding::make(s2, s3, {s3.id()}));
}

TEST_CASE("chq coinvariants preserve acyclicity (averaging over Q)") {
  ChainComplex c;
  c.lo = 0;
  c.hi = 1;
  c.dims = {2, 2};
  c.diffs = {Matrix(0, 2), Matrix::identity(2)};
  Matrix sw(2, 2);
  sw.at(0, 1) = 1;
  sw.at(1, 0) = 1;
  ChainMap act{c, c, 0, {sw, sw}};
  EqObj e = EqObj::make(PermGroup::symmetric(2), c, {Mor(act)});
  auto coin = coinvariants(e);
  for (auto& h : cc_homology(std::get<ChainComplex>(coin.obj))) CHECK(h.dim == 0);
}

TEST_CASE("tensor_eq builds the product group action") {
  EqObj a = regular_sigma2_finset();
  EqObj b = regular_sigma2_finset();
  EqObj t = tensor_eq(a, b);
  CHECK(t.group.factor_sizes == std::vector<int>{2, 2});
  CHECK(obj_size(t.carrier) == 4);
  auto c = coinvariants(t);
  CHECK(obj_size(c.obj) == 1);
}
