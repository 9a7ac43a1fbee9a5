#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "oforge/chain.hpp"
#include "oforge/finset.hpp"

namespace oforge {

enum class Cat { FinSet, ChQ };

using Obj = std::variant<FinSetObj, ChainComplex>;
using Mor = std::variant<FinSetMor, ChainMap>;

Cat cat_of(const Obj& x);
Cat cat_of(const Mor& f);
void require_same_cat(Cat a, Cat b);

Obj dom(const Mor& f);
Obj cod(const Mor& f);
Obj unit_obj(Cat c);
Obj initial_obj(Cat c);
bool obj_equal(const Obj& a, const Obj& b);
int obj_size(const Obj& a);  // cardinality / total dimension

Mor identity(const Obj& a);
Mor compose(const Mor& g, const Mor& f);
Mor initial_map(const Obj& a);  // initial -> a
bool mor_equal(const Mor& f, const Mor& g);
bool is_iso(const Mor& f);
Mor inverse(const Mor& f);

// n-ary tensor with canonical basis order; binary tensor is the n=2 case.
// FinSet: row-major tuples. ChQ: degree n basis = tuples grouped by the
// lex-ascending degree vector, index tuples row-major inside a group.
Obj nary_tensor(Cat c, const std::vector<Obj>& factors);
Mor nary_tensor_mor(Cat c, const std::vector<Mor>& factors);
Obj tensor(const Obj& a, const Obj& b);
Mor tensor_mor(const Mor& f, const Mor& g);

// the symmetry iso  X_1 x ... x X_n  ->  X_{p^{-1}(1)} x ... (factor at slot j
// of the target is factor p^{-1}(j) of the source); Koszul signs in ChQ
Mor permute_factors(Cat c, const std::vector<Obj>& factors, const std::vector<int>& to_slot);
Mor braiding(const Obj& a, const Obj& b);

// index helpers for the canonical tensor bases
std::vector<int> tensor_decode(Cat c, const std::vector<Obj>& factors, int degree, int index,
                               std::vector<int>* degrees_out);
int tensor_encode(Cat c, const std::vector<Obj>& factors, const std::vector<int>& degrees,
                  const std::vector<int>& indices);

struct CoproductResult {
  Obj apex;
  std::vector<Mor> inj;
  // FinSet only: summand + local index of a global element
  std::pair<int, int> locate(int global) const;
  std::vector<int> offsets;                 // FinSet
  std::vector<std::vector<int>> deg_offsets;  // ChQ: per summand, per degree offset
  int lo = 0;
};
CoproductResult coproduct(Cat c, const std::vector<Obj>& parts);

// colimit of a finite diagram, with a mediating-morphism solver
struct Arrow {
  int src, dst;
  Mor f;
};
struct ColimitResult {
  Obj apex;
  std::vector<Mor> legs;
  // unique map apex -> Z with m . leg_i = cocone_i (throws if cocone invalid)
  Mor mediate(const std::vector<Mor>& cocone) const;

  CoproductResult cop;
  // FinSet: representative (global element of the coproduct) per apex element
  std::vector<int> reps;
  Mor proj_from_cop, section_to_cop;  // ChQ
};
ColimitResult colimit(Cat c, const std::vector<Obj>& objs, const std::vector<Arrow>& arrows);

struct PushoutResult {
  Obj apex;
  Mor from_b, from_c;  // legs B -> P, C -> P for f: A->B, g: A->C
  Mor f, g;
  ColimitResult colim;
  Mor mediate(const Mor& u, const Mor& v) const;  // u: B->Z, v: C->Z, u f = v g
};
PushoutResult pushout(const Mor& f, const Mor& g);

struct CoeqResult {
  Obj apex;
  Mor proj;  // B -> Q
  Mor f, g;
  ColimitResult colim;
  Mor mediate(const Mor& u) const;  // u: B->Z with u f = u g
};
CoeqResult coequalizer(const Mor& f, const Mor& g);

// corner map of the pushout square for f: A->B, g: C->D
struct PushoutProduct {
  PushoutResult dom;  // pushout of A(x)g and f(x)C
  Mor corner;         // dom.apex -> B(x)D
};
PushoutProduct pushout_product(const Mor& f, const Mor& g);

struct WeakEqVerdict {
  bool value = false;
  bool boundary_caveat = false;  // ChQ: verdict within a truncation window
};
WeakEqVerdict is_weak_equivalence(const Mor& f);
bool is_cofibration(const Mor& f);

}  // namespace oforge
