#include "gtrellis/search.hpp"

#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "gtrellis/errors.hpp"
#include "gtrellis/isomorphism.hpp"
#include "gtrellis/subgroup.hpp"

namespace gtrellis {

namespace {

std::vector<Subgroup> all_subgroups(GroupPtr const &g)
{
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> found;
  std::vector<Element> cyclic_gens;
  for (Element x = 0; x < g->order(); ++x) {
    auto c = subgroup_closure(g, std::vector<Element>{x});
    if (seen.insert(c.members()).second) {
      found.push_back(std::move(c));
      cyclic_gens.push_back(x);
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element x : cyclic_gens) {
      if (found[i].contains(x))
        continue;
      ElementSet seed = found[i].members();
      seed.set(x);
      auto join = subgroup_closure(g, seed);
      if (seen.insert(join.members()).second)
        found.push_back(std::move(join));
    }
  }
  return found;
}

TrellisSection relabel(Subgroup const &b, GroupPtr const &s)
{
  auto const &p = b.group();
  std::size_t const n = s->order();
  auto const members = b.elements();
  std::vector<std::size_t> index(p.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i)
    index[members[i]] = i;

  std::size_t const m = members.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = index[p.mul(members[i], members[j])];

  std::vector<Element> left(m), right(m);
  for (std::size_t i = 0; i < m; ++i) {
    left[i] = members[i] / n;
    right[i] = members[i] % n;
  }
  return TrellisSection::from_parts(
      FiniteGroup::from_trusted_table(m, std::move(table)), s, std::move(left),
      std::move(right));
}

} // namespace

std::vector<SearchHit> search_subdirect(GroupPtr const &s,
                                        SearchFilter const &filter)
{
  std::size_t const n = s->order();
  if (n * n > search_order_cap) {
    std::ostringstream ss;
    ss << "|S x S| = " << n * n << " exceeds the search cap "
       << search_order_cap;
    throw TooLarge(ss.str());
  }

  auto const p = direct_product(*s, *s);
  std::vector<SearchHit> hits;
  for (auto const &b : all_subgroups(p)) {
    if (b.order() > filter.max_branch_order)
      continue;
    std::vector<char> left_hit(n, 0), right_hit(n, 0);
    for (Element x : b.elements()) {
      left_hit[x / n] = 1;
      right_hit[x % n] = 1;
    }
    bool subdirect = true;
    for (std::size_t v = 0; v < n; ++v)
      subdirect = subdirect && left_hit[v] && right_hit[v];
    if (!subdirect)
      continue;

    auto section = relabel(b, s);
    int ell = 0;
    try {
      ell = chains(section).ell();
    } catch (NotControllable const &) {
      continue;
    }
    bool const nonabelian = !section.b().is_abelian();
    if (filter.nonabelian && !nonabelian)
      continue;
    if (ell < filter.min_ell)
      continue;
    hits.push_back({std::move(section), ell, nonabelian});
  }
  return hits;
}

bool sections_isomorphic(TrellisSection const &a, TrellisSection const &b)
{
  if (a.s().order() != b.s().order() || a.b().order() != b.b().order())
    return false;

  std::set<std::pair<Element, Element>> target;
  for (Element x = 0; x < b.b().order(); ++x)
    target.emplace(b.left(x), b.right(x));

  bool found = false;
  for_each_isomorphism(a.s(), b.s(), [&](std::vector<Element> const &phi) {
    bool all = true;
    for (Element x = 0; x < a.b().order() && all; ++x)
      all = target.count({phi[a.left(x)], phi[a.right(x)]}) != 0;
    found = all;
    return !found;
  });
  return found;
}

} // namespace gtrellis
