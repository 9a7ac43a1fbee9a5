#pragma once

#include <map>
#include <vector>

namespace oforge {

using Perm = std::vector<int>;  // one-line notation

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a.b)(i) = a(b(i))
Perm perm_inverse(const Perm& a);
int perm_sign(const Perm& a);

// product of symmetric groups  Sigma_{n_1} x ... x Sigma_{n_e}
struct PermGroup {
  std::vector<int> factor_sizes;

  using Element = std::vector<Perm>;

  static PermGroup trivial() { return PermGroup{{}}; }
  static PermGroup symmetric(int n) { return PermGroup{{n}}; }
  static PermGroup product(const PermGroup& a, const PermGroup& b);

  bool operator==(const PermGroup& o) const = default;

  long long order() const;
  int total_letters() const;
  Element id() const;
  Element compose(const Element& a, const Element& b) const;
  Element invert(const Element& a) const;
  // generators: adjacent transpositions in each factor
  std::vector<Element> generators() const;
  std::vector<Element> elements() const;  // all, sorted
  // the canonical action on 0..total_letters-1, factor i on its block
  Perm block_perm(const Element& e) const;
  Element from_block_perm(const Perm& p) const;
};

bool element_less(const PermGroup::Element& a, const PermGroup::Element& b);

// injective homomorphism H -> G given on generators, verified on construction
struct GroupEmbedding {
  PermGroup h, g;
  std::vector<PermGroup::Element> gen_images;
  // full graph of the homomorphism
  std::map<PermGroup::Element, PermGroup::Element> graph;

  static GroupEmbedding make(const PermGroup& h, const PermGroup& g,
                             std::vector<PermGroup::Element> gen_images);
};

}  // namespace oforge
