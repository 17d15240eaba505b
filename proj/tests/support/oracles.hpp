#pragma once

// Brute-force reference implementations. They work on raw tables and index
// vectors only and share no code with the library.

#include <cstddef>
#include <functional>
#include <string>
#include <random>
#include <set>
#include <vector>

#include "gtrellis/trellis.hpp"

namespace oracle {

using Table = std::vector<std::vector<std::size_t>>;
using Set = std::set<std::size_t>;

/// Permutations of {0..n-1} in lexicographic order and their composition
/// table, (a*b)(i) = a(b(i)).
struct Permutations
{
  std::vector<std::vector<std::size_t>> perms;
  Table table;
};
Permutations symmetric(std::size_t n);

Table cyclic(std::size_t n);
/// (g,h) at index g*|H|+h.
Table product(Table const &g, Table const &h);

std::size_t identity(Table const &t);
std::size_t inverse(Table const &t, std::size_t x);
/// inverses(t)[x] is the inverse of x.
std::vector<std::size_t> inverses(Table const &t);
std::size_t element_order(Table const &t, std::size_t x);

Set closure(Table const &t, Set const &seed);
bool is_subgroup(Table const &t, Set const &s);
bool is_normal(Table const &t, Set const &ambient, Set const &h);
Set commutator(Table const &t, Set const &h);
Set product_set(Table const &t, Set const &a, Set const &b);
/// Every subgroup, found by testing all subsets. Only for |G| <= 16.
std::vector<Set> all_subgroups_by_subsets(Table const &t);
/// Number of prime factors of n with multiplicity.
std::size_t prime_factor_count(std::size_t n);
/// Prime factors of n with multiplicity, ascending.
std::vector<std::size_t> prime_factors(std::size_t n);
/// True iff lo is normal in hi and hi/lo is simple: every normal subgroup
/// of hi strictly containing lo is hi itself.
bool simple_factor(Table const &t, Set const &hi, Set const &lo);
/// Derived series of g reaches the identity.
bool solvable(Table const &t, Set const &g);

/// A section as plain data.
struct Section
{
  Table branches;
  std::size_t states;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  std::size_t state_identity;
};
Section raw(gtrellis::TrellisSection const &s);
/// Shift register built from digit vectors: branch (x, s_1..s_m) at index
/// x + p s_1 + ... + p^m s_m.
Section shift_register(std::size_t p, std::size_t m);

/// Branches at time 0 of valid paths b_-j..b_0 with left(b_-j) trivial.
Set splitting(Section const &s, int j);
/// Branches at time 0 of valid paths b_0..b_k with right(b_k) trivial.
Set merging(Section const &s, int k);
/// Every valid path of n branches, each beginning with a branch in `first`.
std::vector<std::vector<std::size_t>> paths(Section const &s, Set const &first,
                                            std::size_t n);
std::vector<std::size_t> random_path(Section const &s, std::size_t n,
                                     std::mt19937_64 &rng);
bool valid(Section const &s, std::vector<std::size_t> const &path);
/// Branches whose left state is a right state of some branch in u.
Set next(Section const &s, Set const &u);
/// Intersection of two sets.
Set meet(Set const &a, Set const &b);

/// Checks that `image`, applied to every coset lo_d*a of the domain,
/// gives exactly one coset of lo_c in hi_c, and that the induced map is a
/// bijective homomorphism. Works on elements only. Returns an empty string
/// on success.
std::string check_quotient_map(Table const &t, Set const &hi_d,
                               Set const &lo_d, Set const &hi_c,
                               Set const &lo_c,
                               std::function<Set(Set const &)> const &image);

/// Library set to std::set.
Set to_set(gtrellis::ElementSet const &s);
Set to_set(gtrellis::Subgroup const &s);

} // namespace oracle
