#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gtrellis/group.hpp"

namespace gtrellis {

/// A subgroup of a FiniteGroup, stored as a bitset over the parent's
/// element indices.
class Subgroup
{
public:
  /// Checks identity, closure and inverses; throws NotASubgroup otherwise.
  Subgroup(GroupPtr parent, ElementSet members);

  /// For member sets that are subgroups by construction (closures,
  /// intersections, kernels).
  static Subgroup trusted(GroupPtr parent, ElementSet members);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  GroupPtr const &parent() const { return parent_; }
  FiniteGroup const &group() const { return *parent_; }
  ElementSet const &members() const { return members_; }
  std::vector<Element> elements() const { return members_of(members_); }

  std::size_t order() const { return order_; }
  bool contains(Element x) const { return members_.test(x); }
  bool is_trivial() const { return order_ == 1; }

  /// Set inclusion in a subgroup of the same parent.
  bool is_subgroup_of(Subgroup const &other) const;

  friend bool operator==(Subgroup const &a, Subgroup const &b)
  {
    return a.members_ == b.members_;
  }

private:
  Subgroup(GroupPtr parent, ElementSet members, std::size_t order);

  GroupPtr parent_;
  ElementSet members_;
  std::size_t order_;
};

/// Smallest subgroup of `g` containing `seed`.
Subgroup subgroup_closure(GroupPtr const &g, ElementSet const &seed);
Subgroup subgroup_closure(GroupPtr const &g, std::vector<Element> const &seed);

/// Smallest normal subgroup of `ambient` containing `seed`.
Subgroup normal_closure(Subgroup const &ambient, ElementSet const &seed);

/// True iff g h g^-1 lies in h for all g in ambient. Throws NotASubgroup
/// unless h <= ambient.
bool is_normal(Subgroup const &ambient, Subgroup const &h);

struct ProductSet
{
  ElementSet members;
  bool is_subgroup;
};

/// {ab : a in A, b in B}.
ProductSet product_set(FiniteGroup const &g, ElementSet const &a,
                       ElementSet const &b);

/// AB for subgroups. Throws NotASubgroup when AB is not a subgroup.
Subgroup product(Subgroup const &a, Subgroup const &b);

Subgroup intersect(Subgroup const &a, Subgroup const &b);

/// Right cosets Hx of h in ambient, ordered by transversal index, with the
/// identity coset first.
struct CosetList
{
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Subgroup subgroup;
  Subgroup ambient;
  std::vector<ElementSet> cosets;
  std::vector<Element> transversal;
  /// Coset index of every parent element, npos outside the ambient group.
  std::vector<std::size_t> index_of;

  std::size_t count() const { return cosets.size(); }
  std::size_t coset_of(Element x) const { return index_of[x]; }
};

/// Canonical transversal: identity for the subgroup itself, otherwise the
/// minimum element index of each coset.
CosetList right_cosets(Subgroup const &ambient, Subgroup const &h);

/// ambient / h as a group on coset indices. The projection is
/// `cosets.index_of`.
struct Quotient
{
  GroupPtr group;
  CosetList cosets;

  std::size_t project(Element x) const { return cosets.index_of[x]; }
  /// Preimage of a set of quotient elements.
  ElementSet pull_back(ElementSet const &quotient_set) const;
};

/// Throws NotNormal unless h is normal in ambient.
Quotient quotient_group(Subgroup const &ambient, Subgroup const &h);

/// Ascending chain of subgroups of one parent with a label per term.
struct Chain
{
  std::vector<Subgroup> groups;
  std::vector<std::string> labels;

  std::size_t size() const { return groups.size(); }
  void push(Subgroup g, std::string label = {})
  {
    groups.push_back(std::move(g));
    labels.push_back(std::move(label));
  }
};

Subgroup commutator_subgroup(Subgroup const &h);

/// Descending derived series h = G^(0) > G^(1) > ... down to the point where
/// it stabilizes.
struct DerivedSeries
{
  std::vector<Subgroup> terms;
  bool solvable;
};

DerivedSeries derived_series(Subgroup const &h);
bool is_solvable(Subgroup const &h);

bool is_simple(GroupPtr const &g);

/// Largest-order proper subgroup of `upper` that contains `lower` and is
/// normal in `upper`, ties broken by the lexicographically smallest member
/// list. Requires lower normal in upper and lower != upper.
Subgroup maximal_normal_between(Subgroup const &lower, Subgroup const &upper);

/// Refines every step of an ascending chain whose terms are each normal in
/// the next to a chain with simple factors. Equal consecutive terms are
/// merged. Throws NotNormalStep naming the first bad step.
Chain composition_refinement(Chain const &chain);

struct CompositionFactor
{
  std::size_t order;
  bool abelian;

  /// Z<order> for abelian factors, N<order> otherwise.
  std::string name() const;

  friend auto operator<=>(CompositionFactor const &,
                          CompositionFactor const &) = default;
};

/// Factors of the steps of a chain, in chain order.
std::vector<CompositionFactor> chain_factors(Chain const &chain);

/// Sorted factor multiset of a composition series of h.
std::vector<CompositionFactor> jordan_holder_factors(Subgroup const &h);

/// Composition length.
std::size_t eta(Subgroup const &h);

} // namespace gtrellis
