#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gtrellis/generators.hpp"
#include "gtrellis/trellis.hpp"

namespace gtrellis {

using TablePtr = std::shared_ptr<GeneratorTable const>;

/// Input x_t in X_0, state bhat_t, output x_t * bhat_t.
///
/// The state is kept as the generator selections of the last ell epochs; bhat
/// is recomputed from them after every step.
class Encoder
{
public:
  explicit Encoder(TablePtr table);

  GeneratorTable const &table() const { return *table_; }
  Element state() const { return state_; }
  long time() const { return time_; }

  /// window()[a-1][f] is the path position selected for family f a epochs
  /// ago.
  std::vector<std::vector<std::size_t>> const &window() const
  {
    return window_;
  }

  /// Emits x * bhat and advances. Throws NotInX0.
  Element step(Element x);

  /// h_0 = x followed by the column products h_1..h_ell of the current
  /// window. Their product is the branch step(x) would emit.
  std::vector<Element> register_view(Element x) const;

  /// Replaces the window so that the next step can emit `branch`, and
  /// returns the input that does so.
  Element seed(Element branch);

  friend bool operator==(Encoder const &a, Encoder const &b)
  {
    return a.window_ == b.window_;
  }

private:
  void recompute_state();

  TablePtr table_;
  std::vector<std::vector<std::size_t>> window_;
  Element state_;
  long time_ = 0;
};

struct TrackResult
{
  std::vector<Element> inputs;
  PathSegment reproduced;
  bool exact = false;
};

/// Seeds an encoder on target's first branch (which must equal `initial`)
/// and feeds xhat = b* bhat^-1 at every later epoch. Throws InvalidPath or
/// InitialMismatch.
TrackResult track(TablePtr const &table, PathSegment const &target,
                  Element initial);

/// Output of a fresh encoder fed the start component of generator
/// `position` of `family` and then identities, over ell + 2 epochs.
/// Throws IndexOutOfRange.
PathSegment impulse_response(TablePtr const &table, std::size_t family,
                             std::size_t position);

/// Inputs over ell + 1 epochs from the identity state whose last output is b.
std::vector<Element> inputs_for(TablePtr const &table, Element b);

/// Distinct states bhat reachable from the identity state.
std::vector<Element> reachable_states(TablePtr const &table);

/// For each offset d, the least r in -1..ell with b_d a_d^-1 in X_r.
/// Throws InvalidPath, LengthMismatch or FirstBranchMismatch, and
/// VerificationFailed if r > d - 1 at some d <= ell.
std::vector<int> degradation_profile(TrellisSection const &section,
                                     ChainPair const &c, PathSegment const &a,
                                     PathSegment const &b);

} // namespace gtrellis
