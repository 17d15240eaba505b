#pragma once

#include <cstddef>
#include <vector>

#include "gtrellis/group.hpp"
#include "gtrellis/trellis.hpp"

namespace gtrellis {

/// Largest |S x S| the subgroup search accepts.
constexpr std::size_t search_order_cap = 256;

struct SearchFilter
{
  std::size_t max_branch_order = search_order_cap;
  bool nonabelian = false;
  int min_ell = 0;
};

struct SearchHit
{
  TrellisSection section;
  int ell;
  bool nonabelian;
};

/// Every controllable subdirect subgroup B of S x S that passes `filter`,
/// relabelled so that branch i is the i-th smallest member. Subgroups are
/// found as joins of cyclic subgroups. Throws TooLarge above the cap.
std::vector<SearchHit> search_subdirect(GroupPtr const &s,
                                        SearchFilter const &filter);

/// True iff some isomorphism of the state groups carries the state pairs
/// (left(b), right(b)) of one section onto those of the other.
bool sections_isomorphic(TrellisSection const &a, TrellisSection const &b);

} // namespace gtrellis
