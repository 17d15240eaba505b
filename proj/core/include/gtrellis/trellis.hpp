#pragma once

#include <cstddef>
#include <vector>

#include "gtrellis/group.hpp"
#include "gtrellis/subgroup.hpp"

namespace gtrellis {

/// Largest branch group the builders will construct.
constexpr std::size_t branch_order_cap = 4096;

/// A subgroup B of S x S given abstractly: the branch group, the state group
/// and the two coordinate projections, both onto S.
class TrellisSection
{
public:
  /// Validates that left and right are surjective homomorphisms and that
  /// b -> (left(b), right(b)) is injective.
  static TrellisSection from_parts(GroupPtr branches, GroupPtr states,
                                   std::vector<Element> left,
                                   std::vector<Element> right);

  GroupPtr const &branch_group() const { return branches_; }
  GroupPtr const &state_group() const { return states_; }
  FiniteGroup const &b() const { return *branches_; }
  FiniteGroup const &s() const { return *states_; }

  Element left(Element branch) const { return left_[branch]; }
  Element right(Element branch) const { return right_[branch]; }
  std::vector<Element> const &left_map() const { return left_; }
  std::vector<Element> const &right_map() const { return right_; }

  /// ker(left) and ker(right).
  Subgroup const &x0() const { return x0_; }
  Subgroup const &y0() const { return y0_; }
  Subgroup whole() const { return Subgroup::whole(branches_); }
  Subgroup trivial() const { return Subgroup::trivial(branches_); }

  /// Branches whose left state is `state`, ascending.
  std::vector<Element> const &branches_from(Element state) const
  {
    return from_[state];
  }

  ElementSet left_image(ElementSet const &u) const;
  ElementSet right_image(ElementSet const &u) const;

  /// Branches that can follow some branch of u: {e : left(e) in right(u)}.
  ElementSet next_set(ElementSet const &u) const;
  /// Branches that can precede some branch of u: {e : right(e) in left(u)}.
  ElementSet prev_set(ElementSet const &u) const;

  /// N and P of a subgroup are subgroups (preimages of subgroups of S).
  Subgroup next(Subgroup const &u) const;
  Subgroup prev(Subgroup const &u) const;

private:
  TrellisSection(GroupPtr branches, GroupPtr states, std::vector<Element> left,
                 std::vector<Element> right);

  GroupPtr branches_;
  GroupPtr states_;
  std::vector<Element> left_;
  std::vector<Element> right_;
  Subgroup x0_;
  Subgroup y0_;
  std::vector<std::vector<Element>> from_;
};

/// B = (Z_p)^(m+1) with branch (x, s_1..s_m) stored at index
/// x + p*s_1 + ... + p^m*s_m; left = (s_1..s_m), right = (x, s_1..s_(m-1)).
TrellisSection shift_register_section(std::size_t p, std::size_t m);

/// B = S x S with element (a, b) at index a*|S| + b, left = a, right = b.
TrellisSection complete_section(GroupPtr const &s);

/// Branch sequence b_0..b_l with right(b_i) = left(b_(i+1)).
struct PathSegment
{
  std::vector<Element> branches;

  std::size_t size() const { return branches.size(); }
  friend auto operator<=>(PathSegment const &, PathSegment const &) = default;
};

bool is_valid_path(TrellisSection const &section, PathSegment const &path);

/// Throws LengthMismatch for different lengths.
PathSegment componentwise_product(TrellisSection const &section,
                                  PathSegment const &a, PathSegment const &b);

/// All valid segments of l+1 branches whose first branch lies in u, sorted.
std::vector<PathSegment> join_paths(TrellisSection const &section,
                                    ElementSet const &u, std::size_t l);

/// The splitting chain X_j and merging chain Y_k, indexed from -1.
class ChainPair
{
public:
  ChainPair(Subgroup trivial, Subgroup whole, std::vector<Subgroup> x,
            std::vector<Subgroup> y);

  int ell() const { return static_cast<int>(x_.size()) - 1; }

  /// X_j for any integer j: trivial below 0, B above ell.
  Subgroup const &x(int j) const;
  Subgroup const &y(int k) const;

  /// [X_-1, X_0, ..., X_ell] and the same for Y.
  Chain x_chain() const;
  Chain y_chain() const;

private:
  Subgroup trivial_;
  Subgroup whole_;
  std::vector<Subgroup> x_;
  std::vector<Subgroup> y_;
};

/// Iterates X_(j+1) = N(X_j) from ker(left) and Y_(k+1) = P(Y_k) from
/// ker(right) until both reach B. Throws NotControllable carrying the
/// subgroup where the X chain stops growing.
ChainPair chains(TrellisSection const &section);

/// P(u) intersected with X_j. Throws IndexOutOfRange unless 0 <= j <= ell.
ElementSet prev_in_pletty(TrellisSection const &section, ChainPair const &c,
                          int j, ElementSet const &u);

} // namespace gtrellis
