#include "gtrellis/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gtrellis/errors.hpp"

namespace gtrellis {

namespace {

constexpr Element unset = static_cast<Element>(-1);

std::map<std::size_t, std::size_t> order_counts(FiniteGroup const &g)
{
  std::map<std::size_t, std::size_t> counts;
  for (Element x = 0; x < g.order(); ++x)
    ++counts[g.element_order(x)];
  return counts;
}

class IsoSearch
{
public:
  IsoSearch(FiniteGroup const &g, FiniteGroup const &h,
            std::function<bool(std::vector<Element> const &)> const &visit)
    : g_(g), h_(h), visit_(visit)
  {
    for (Element x = 0; x < g.order(); ++x)
      g_orders_.push_back(g.element_order(x));
    for (Element y = 0; y < h.order(); ++y)
      h_orders_.push_back(h.element_order(y));
    choose_generators();
  }

  void run()
  {
    std::vector<Element> phi(g_.order(), unset);
    phi[g_.identity()] = h_.identity();
    recurse(0, phi);
  }

private:
  void choose_generators()
  {
    std::vector<Element> by_order(g_.order());
    for (Element x = 0; x < g_.order(); ++x)
      by_order[x] = x;
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](Element a, Element b) {
                       return g_orders_[a] > g_orders_[b];
                     });

    std::vector<char> span(g_.order(), 0);
    span[g_.identity()] = 1;
    std::vector<Element> members{g_.identity()};
    for (Element x : by_order) {
      if (span[x])
        continue;
      gens_.push_back(x);
      // Re-close the span under the enlarged generator list.
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Element s : gens_) {
          Element y = g_.mul(members[i], s);
          if (!span[y]) {
            span[y] = 1;
            members.push_back(y);
          }
        }
      }
    }
  }

  bool extend(std::vector<Element> &phi, std::size_t level) const
  {
    std::vector<char> used(h_.order(), 0);
    std::vector<Element> queue;
    for (Element x = 0; x < g_.order(); ++x) {
      if (phi[x] != unset) {
        used[phi[x]] = 1;
        queue.push_back(x);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Element const x = queue[i];
      for (std::size_t k = 0; k <= level; ++k) {
        Element const z = g_.mul(x, gens_[k]);
        Element const w = h_.mul(phi[x], phi[gens_[k]]);
        if (phi[z] == unset) {
          if (used[w])
            return false;
          used[w] = 1;
          phi[z] = w;
          queue.push_back(z);
        } else if (phi[z] != w) {
          return false;
        }
      }
    }
    return true;
  }

  bool recurse(std::size_t level, std::vector<Element> const &phi)
  {
    if (level == gens_.size())
      return visit_(phi);

    Element const s = gens_[level];
    for (Element t = 0; t < h_.order(); ++t) {
      if (h_orders_[t] != g_orders_[s])
        continue;
      auto next = phi;
      if (next[s] != unset)
        continue;
      bool taken = false;
      for (Element x = 0; x < g_.order() && !taken; ++x)
        taken = next[x] == t;
      if (taken)
        continue;
      next[s] = t;
      if (!extend(next, level))
        continue;
      if (!recurse(level + 1, next))
        return false;
    }
    return true;
  }

  FiniteGroup const &g_;
  FiniteGroup const &h_;
  std::function<bool(std::vector<Element> const &)> const &visit_;
  std::vector<std::size_t> g_orders_;
  std::vector<std::size_t> h_orders_;
  std::vector<Element> gens_;
};

} // namespace

bool same_order_profile(FiniteGroup const &g, FiniteGroup const &h)
{
  return g.order() == h.order() && g.is_abelian() == h.is_abelian() &&
         order_counts(g) == order_counts(h);
}

void for_each_isomorphism(FiniteGroup const &g, FiniteGroup const &h,
                          std::function<bool(std::vector<Element> const &)> const
                              &visit)
{
  if (g.order() > isomorphism_order_cap || h.order() > isomorphism_order_cap) {
    std::ostringstream ss;
    ss << "isomorphism search is capped at order " << isomorphism_order_cap;
    throw TooLarge(ss.str());
  }
  if (!same_order_profile(g, h))
    return;
  IsoSearch(g, h, visit).run();
}

std::optional<std::vector<Element>> find_isomorphism(FiniteGroup const &g,
                                                     FiniteGroup const &h)
{
  std::optional<std::vector<Element>> found;
  for_each_isomorphism(g, h, [&](std::vector<Element> const &phi) {
    found = phi;
    return false;
  });
  return found;
}

VerifiedIsomorphism verify_quotient_map(Subgroup const &dom_amb,
                                        Subgroup const &dom_norm,
                                        Subgroup const &cod_amb,
                                        Subgroup const &cod_norm,
                                        CosetImage const &image,
                                        bool exact_image)
{
  auto fail = [](std::string const &what) {
    throw VerificationFailed("quotient map: " + what);
  };

  if (!dom_norm.is_subgroup_of(dom_amb) || !is_normal(dom_amb, dom_norm))
    fail("domain subgroup is not normal");
  if (!cod_norm.is_subgroup_of(cod_amb) || !is_normal(cod_amb, cod_norm))
    fail("codomain subgroup is not normal");

  VerifiedIsomorphism out{quotient_group(dom_amb, dom_norm),
                          quotient_group(cod_amb, cod_norm),
                          {}};
  auto const &dc = out.domain.cosets;
  auto const &cc = out.codomain.cosets;

  if (dc.count() != cc.count()) {
    std::ostringstream ss;
    ss << "quotient orders differ: " << dc.count() << " vs " << cc.count();
    fail(ss.str());
  }

  std::vector<char> hit(cc.count(), 0);
  for (std::size_t i = 0; i < dc.count(); ++i) {
    ElementSet const img = image(dc.cosets[i]);
    auto const first = img.find_first();
    if (first == ElementSet::npos) {
      std::ostringstream ss;
      ss << "empty image of the coset of " << dc.transversal[i];
      fail(ss.str());
    }
    std::size_t const target = cc.index_of[first];
    if (target == CosetList::npos || !img.is_subset_of(cc.cosets[target])) {
      std::ostringstream ss;
      ss << "image of the coset of " << dc.transversal[i]
         << " is not inside one codomain coset";
      fail(ss.str());
    }
    if (exact_image && img != cc.cosets[target]) {
      std::ostringstream ss;
      ss << "image of the coset of " << dc.transversal[i]
         << " is a proper part of the coset of " << cc.transversal[target];
      fail(ss.str());
    }
    if (hit[target]++) {
      std::ostringstream ss;
      ss << "not injective: coset of " << dc.transversal[i]
         << " collides at the coset of " << cc.transversal[target];
      fail(ss.str());
    }
    out.map.push_back(target);
  }

  auto const &dq = *out.domain.group;
  auto const &cq = *out.codomain.group;
  for (std::size_t a = 0; a < dc.count(); ++a) {
    for (std::size_t b = 0; b < dc.count(); ++b) {
      if (out.map[dq.mul(a, b)] != cq.mul(out.map[a], out.map[b])) {
        std::ostringstream ss;
        ss << "not a homomorphism at cosets of (" << dc.transversal[a] << ", "
           << dc.transversal[b] << ")";
        fail(ss.str());
      }
    }
  }
  return out;
}

} // namespace gtrellis
