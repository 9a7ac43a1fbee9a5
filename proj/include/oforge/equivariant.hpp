#pragma once

#include <map>

#include "oforge/base.hpp"
#include "oforge/perm.hpp"

namespace oforge {

// An object of the base category with an action of a product of symmetric
// groups. The full element -> automorphism table is computed once at
// construction; building it verifies that the generator images satisfy the
// group relations (every element is reached along several words).
struct EqObj {
  PermGroup group;
  Obj carrier;
  std::vector<Mor> gen_act;  // indexed like group.generators()
  std::map<PermGroup::Element, Mor> table;

  static EqObj make(PermGroup g, Obj carrier, std::vector<Mor> gen_act);
  static EqObj trivial(Obj carrier);  // trivial group
  static EqObj with_trivial_action(PermGroup g, Obj carrier);
  const Mor& act(const PermGroup::Element& e) const { return table.at(e); }
};

struct EqMor {
  EqObj dom, cod;  // over the same group
  Mor f;
};

// throws unless f commutes with every generator action
EqMor eq_mor(EqObj dom, EqObj cod, Mor f);
bool eq_mor_commutes(const EqObj& dom, const EqObj& cod, const Mor& f);

EqObj tensor_eq(const EqObj& a, const EqObj& b);   // over the product group
EqMor tensor_eq_mor(const EqMor& a, const EqMor& b);
EqObj restrict_action(const EqObj& x, const GroupEmbedding& emb);  // along H -> G

struct CoinvResult {
  Obj obj;
  Mor proj;     // carrier -> obj
  Mor section;  // obj -> carrier with proj . section = id
};
CoinvResult coinvariants(const EqObj& x);
// same, for the group generated by an explicit list of automorphisms
CoinvResult coinvariants_generated(const Obj& carrier, const std::vector<Mor>& gens);
// induced morphism on coinvariants of an equivariant morphism
Mor coinv_mor(const CoinvResult& domc, const CoinvResult& codc, const Mor& f);

// G x_H X along an embedding; carrier is a coproduct over cosets
struct InduceResult {
  EqObj obj;
  std::vector<PermGroup::Element> coset_reps;
  CoproductResult cop;
};
InduceResult induce(const GroupEmbedding& emb, const EqObj& x);
// induction along an arbitrary subgroup given by its full element/action table
InduceResult induce_generated(const PermGroup& g,
                              const std::map<PermGroup::Element, Mor>& sub_table,
                              const Obj& carrier);

}  // namespace oforge
