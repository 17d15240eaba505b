#include "gtrellis/group.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>

#include <boost/container_hash/hash.hpp>

#include "gtrellis/errors.hpp"

namespace gtrellis {

namespace {

[[noreturn]] void not_a_group(std::string const &what)
{
  throw NotAGroup("not a group: " + what);
}

} // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table)
  : order_(order), table_(std::move(table)), inverse_(order)
{
  for (Element e = 0; e < order_; ++e) {
    bool is_identity = true;
    for (Element x = 0; x < order_ && is_identity; ++x)
      is_identity = mul(e, x) == x && mul(x, e) == x;
    if (is_identity) {
      identity_ = e;
      break;
    }
  }

  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

GroupPtr FiniteGroup::from_trusted_table(std::size_t order,
                                         std::vector<Element> flat_table)
{
  return GroupPtr(new FiniteGroup(order, std::move(flat_table)));
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<Element>> const &table)
{
  std::size_t const n = table.size();
  if (n == 0)
    not_a_group("empty table");

  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      std::ostringstream ss;
      ss << "row " << i << " has " << table[i].size() << " entries, expected "
         << n;
      not_a_group(ss.str());
    }
    for (Element x : table[i]) {
      if (x >= n) {
        std::ostringstream ss;
        ss << "row " << i << " entry " << x << " out of range";
        not_a_group(ss.str());
      }
      flat.push_back(x);
    }
  }

  // Latin square.
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[flat[i * n + j]]++) {
        std::ostringstream ss;
        ss << "row " << i << " repeats element " << flat[i * n + j];
        not_a_group(ss.str());
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[flat[i * n + j]]++) {
        std::ostringstream ss;
        ss << "column " << j << " repeats element " << flat[i * n + j];
        not_a_group(ss.str());
      }
    }
  }

  auto mul = [&](Element a, Element b) { return flat[a * n + b]; };
  auto check_triple = [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      std::ostringstream ss;
      ss << "associativity fails for (" << a << ", " << b << ", " << c << ")";
      not_a_group(ss.str());
    }
  };

  if (n <= exhaustive_limit) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, n - 1);
    for (std::size_t t = 0; t < sampled_triples; ++t)
      check_triple(pick(rng), pick(rng), pick(rng));
  }

  // A Latin square with an associative product has an identity.
  GroupPtr g(new FiniteGroup(n, std::move(flat)));
  for (Element x = 0; x < n; ++x) {
    if (g->mul(g->identity(), x) != x || g->mul(x, g->identity()) != x)
      not_a_group("no identity element");
  }
  return g;
}

Element FiniteGroup::pow(Element a, std::size_t e) const
{
  Element result = identity_;
  Element base = a;
  while (e) {
    if (e & 1u)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const
{
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a))
    ++k;
  return k;
}

bool FiniteGroup::is_abelian() const
{
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::table() const
{
  std::vector<std::vector<Element>> rows(order_);
  for (Element a = 0; a < order_; ++a)
    rows[a].assign(table_.begin() + a * order_,
                   table_.begin() + (a + 1) * order_);
  return rows;
}

ElementSet FiniteGroup::singleton(Element a) const
{
  ElementSet s(order_);
  s.set(a);
  return s;
}

ElementSet FiniteGroup::make_set(std::span<Element const> elements) const
{
  ElementSet s(order_);
  for (Element e : elements)
    s.set(e);
  return s;
}

std::size_t ElementSetHash::operator()(ElementSet const &set) const
{
  std::vector<std::uint64_t> blocks;
  boost::to_block_range(set, std::back_inserter(blocks));
  std::size_t seed = set.size();
  for (auto b : blocks)
    boost::hash_combine(seed, b);
  return seed;
}

std::vector<Element> members_of(ElementSet const &set)
{
  std::vector<Element> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i))
    out.push_back(i);
  return out;
}

bool lex_less(ElementSet const &a, ElementSet const &b)
{
  auto const first = (a ^ b).find_first();
  return first != ElementSet::npos && a.test(first);
}

Element canonical_pick(FiniteGroup const &g, ElementSet const &set)
{
  if (set.test(g.identity()))
    return g.identity();
  return set.find_first();
}

GroupPtr trivial_group()
{
  return cyclic_group(1);
}

GroupPtr cyclic_group(std::size_t n)
{
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a * n + b] = (a + b) % n;
  return FiniteGroup::from_trusted_table(n, std::move(t));
}

GroupPtr direct_product(FiniteGroup const &g, FiniteGroup const &h)
{
  std::size_t const m = h.order();
  std::size_t const n = g.order() * m;
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      t[a * n + b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  return FiniteGroup::from_trusted_table(n, std::move(t));
}

GroupPtr elementary_abelian(std::size_t p, std::size_t n)
{
  GroupPtr zp = cyclic_group(p);
  GroupPtr g = trivial_group();
  for (std::size_t i = 0; i < n; ++i)
    g = direct_product(*zp, *g);
  return g;
}

namespace {

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n)
{
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace

GroupPtr symmetric_group(std::size_t n)
{
  auto const perms = all_permutations(n);
  std::size_t const m = perms.size();

  std::vector<std::size_t> composed(n);
  std::vector<Element> t(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < n; ++x)
        composed[x] = perms[a][perms[b][x]];
      auto it = std::lower_bound(perms.begin(), perms.end(), composed);
      t[a * m + b] = static_cast<Element>(it - perms.begin());
    }
  }
  return FiniteGroup::from_trusted_table(m, std::move(t));
}

std::vector<std::size_t> permutation_of(std::size_t n, Element index)
{
  return all_permutations(n).at(index);
}

} // namespace gtrellis
