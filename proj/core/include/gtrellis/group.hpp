#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gtrellis {

/// Elements are dense indices 0..order-1 into a Cayley table.
using Element = std::size_t;

/// Subsets of a group are bitsets over the element indices.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<FiniteGroup const>;

/// A finite group given by its multiplication table.
///
/// Instances are immutable and always handled through GroupPtr so that
/// subgroups, cosets and sections can share one universe.
class FiniteGroup
{
public:
  /// Groups up to this order get an exhaustive associativity check; larger
  /// tables are checked on a fixed number of random triples.
  static constexpr std::size_t exhaustive_limit = 512;
  static constexpr std::size_t sampled_triples = 100000;

  /// Validates `table` (rows are products i*j) and computes identity and
  /// inverses. Throws NotAGroup naming the first failing row, column or
  /// triple.
  static GroupPtr from_table(std::vector<std::vector<Element>> const &table);

  /// Skips validation. For tables that are groups by construction
  /// (products, quotients, cyclic groups).
  static GroupPtr from_trusted_table(std::size_t order,
                                     std::vector<Element> flat_table);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }

  /// g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }

  Element pow(Element a, std::size_t e) const;
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  std::vector<std::vector<Element>> table() const;

  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet full_set() const { return ElementSet(order_).set(); }
  ElementSet singleton(Element a) const;
  ElementSet make_set(std::span<Element const> elements) const;

private:
  FiniteGroup(std::size_t order, std::vector<Element> table);

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
};

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &set) const;
};

/// Sorted element indices of a set.
std::vector<Element> members_of(ElementSet const &set);

/// Lexicographic order on sorted member lists of two equal-size sets.
bool lex_less(ElementSet const &a, ElementSet const &b);

/// Identity if present, otherwise the minimum element index.
Element canonical_pick(FiniteGroup const &g, ElementSet const &set);

GroupPtr trivial_group();
GroupPtr cyclic_group(std::size_t n);

/// G x H with element (g, h) stored at index g*|H| + h.
GroupPtr direct_product(FiniteGroup const &g, FiniteGroup const &h);

/// (Z_p)^n. Element index is the base-p number whose digit i is coordinate i
/// (coordinate 0 least significant).
GroupPtr elementary_abelian(std::size_t p, std::size_t n);

/// Symmetric group on n letters. Elements are the permutations in
/// lexicographic order of their one-line notation; the product a*b is the
/// composition "apply b, then a".
GroupPtr symmetric_group(std::size_t n);

/// One-line notation of element `index` of symmetric_group(n).
std::vector<std::size_t> permutation_of(std::size_t n, Element index);

} // namespace gtrellis
