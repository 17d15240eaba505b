#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gtrellis/trellis.hpp"

namespace gtrellis {

/// Sections up to this branch order get exhaustive checks; larger ones are
/// sampled.
constexpr std::size_t exhaustive_branch_cap = 512;

struct CheckResult
{
  std::string suite;
  std::string name;
  bool pass;
  /// Element indices or the error that made the check fail.
  std::string witness;
};

struct Ledger
{
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::size_t failures() const;
};

struct VerifyOptions
{
  /// Empty runs every suite: group, trellis, schreier, generators, encoder,
  /// refinement.
  std::set<std::string> suites;
  std::uint64_t seed = 1;
  std::size_t random_steps = 10000;
  std::size_t tracked_paths = 100;
  std::size_t tracked_length = 50;
};

std::vector<std::string> const &suite_names();

/// Runs the invariant checks of every requested suite. Throws
/// NotControllable before running anything if the section is not
/// controllable, and IndexOutOfRange for an unknown suite name.
Ledger run_verification(TrellisSection const &section,
                        VerifyOptions const &options);

/// Random walk of `length` branches starting from a uniformly chosen branch.
template <typename Rng>
PathSegment random_path(TrellisSection const &section, std::size_t length,
                        Rng &rng);

} // namespace gtrellis

#include "gtrellis/verify.inl"
