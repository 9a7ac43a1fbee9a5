#include "oforge/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace oforge {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  assert(a.size() == b.size());
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = int(i);
  return c;
}

int perm_sign(const Perm& a) {
  int s = 1;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) s = -s;
  return s;
}

PermGroup PermGroup::product(const PermGroup& a, const PermGroup& b) {
  PermGroup p = a;
  p.factor_sizes.insert(p.factor_sizes.end(), b.factor_sizes.begin(), b.factor_sizes.end());
  return p;
}

long long PermGroup::order() const {
  long long o = 1;
  for (int n : factor_sizes)
    for (int k = 2; k <= n; ++k) o *= k;
  return o;
}

int PermGroup::total_letters() const {
  return std::accumulate(factor_sizes.begin(), factor_sizes.end(), 0);
}

PermGroup::Element PermGroup::id() const {
  Element e;
  for (int n : factor_sizes) e.push_back(perm_identity(n));
  return e;
}

PermGroup::Element PermGroup::compose(const Element& a, const Element& b) const {
  Element c;
  for (size_t i = 0; i < factor_sizes.size(); ++i) c.push_back(perm_compose(a[i], b[i]));
  return c;
}

PermGroup::Element PermGroup::invert(const Element& a) const {
  Element c;
  for (auto& p : a) c.push_back(perm_inverse(p));
  return c;
}

std::vector<PermGroup::Element> PermGroup::generators() const {
  std::vector<Element> gens;
  for (size_t i = 0; i < factor_sizes.size(); ++i)
    for (int j = 0; j + 1 < factor_sizes[i]; ++j) {
      Element e = id();
      std::swap(e[i][j], e[i][j + 1]);
      gens.push_back(e);
    }
  return gens;
}

std::vector<PermGroup::Element> PermGroup::elements() const {
  std::vector<Element> out = {Element{}};
  for (int n : factor_sizes) {
    std::vector<Perm> perms;
    Perm p = perm_identity(n);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<Element> nxt;
    for (auto& e : out)
      for (auto& q : perms) {
        Element e2 = e;
        e2.push_back(q);
        nxt.push_back(e2);
      }
    out = std::move(nxt);
  }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

Perm PermGroup::block_perm(const Element& e) const {
  Perm p(total_letters());
  int off = 0;
  for (size_t i = 0; i < factor_sizes.size(); ++i) {
    for (int j = 0; j < factor_sizes[i]; ++j) p[off + j] = off + e[i][j];
    off += factor_sizes[i];
  }
  return p;
}

PermGroup::Element PermGroup::from_block_perm(const Perm& p) const {
  Element e;
  int off = 0;
  for (int n : factor_sizes) {
    Perm q(n);
    for (int j = 0; j < n; ++j) {
      int v = p[off + j] - off;
      if (v < 0 || v >= n) throw std::invalid_argument("from_block_perm: not block-diagonal");
      q[j] = v;
    }
    e.push_back(q);
    off += n;
  }
  return e;
}

bool element_less(const PermGroup::Element& a, const PermGroup::Element& b) { return a < b; }

GroupEmbedding GroupEmbedding::make(const PermGroup& h, const PermGroup& g,
                                    std::vector<PermGroup::Element> gi) {
  GroupEmbedding emb{h, g, std::move(gi), {}};
  auto gens = h.generators();
  if (gens.size() != emb.gen_images.size())
    throw std::invalid_argument("embedding: wrong number of generator images");
  // grow the graph of the homomorphism; inconsistency = not a homomorphism
  emb.graph[h.id()] = g.id();
  std::vector<PermGroup::Element> frontier = {h.id()};
  while (!frontier.empty()) {
    std::vector<PermGroup::Element> nxt;
    for (auto& x : frontier)
      for (size_t i = 0; i < gens.size(); ++i) {
        auto y = h.compose(gens[i], x);
        auto img = g.compose(emb.gen_images[i], emb.graph.at(x));
        auto it = emb.graph.find(y);
        if (it == emb.graph.end()) {
          emb.graph[y] = img;
          nxt.push_back(y);
        } else if (!(it->second == img)) {
          throw std::invalid_argument("embedding: generator images violate relations");
        }
      }
    frontier = std::move(nxt);
  }
  // injectivity
  std::vector<PermGroup::Element> imgs;
  for (auto& [k, v] : emb.graph) imgs.push_back(v);
  std::sort(imgs.begin(), imgs.end());
  imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
  if (static_cast<long long>(imgs.size()) != h.order())
    throw std::invalid_argument("embedding: not injective");
  return emb;
}

}  // namespace oforge
