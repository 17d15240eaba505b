#pragma once

#include <vector>

#include "gtrellis/generators.hpp"
#include "gtrellis/subgroup.hpp"
#include "gtrellis/trellis.hpp"

namespace gtrellis {

/// One term of an indexed composition chain: column, row and position
/// inside the segment between rows.
struct IndexedTerm
{
  int column;
  int row;
  int sigma;
  Subgroup group;
};

/// Composition chain of B whose column-c segment at row r runs from
/// A_(c-1)(A_c∩B_r) (sigma = 0) to A_(c-1)(A_c∩B_(r+1)). For the primal
/// chain A = X, B = Y and columns are pushed forward by N; the dual swaps
/// the chains and pushes by P.
struct IndexedCompositionChain
{
  bool dual = false;
  int ell = 0;
  /// Every term, segment by segment, in chain order. Segment endpoints
  /// appear at both adjacent segments.
  std::vector<IndexedTerm> terms;
  /// sigma_bounds[r + 1] is the number of steps in segments with
  /// column + row = r, for -1 <= r <= ell - 1.
  std::vector<int> sigma_bounds;

  int sigma_bound(int row_sum) const
  {
    return sigma_bounds[static_cast<std::size_t>(row_sum + 1)];
  }

  /// Term (column, row, sigma).
  Subgroup const &term(int column, int row, int sigma) const;

  /// The chain from 1 to B with repeated terms removed.
  Chain chain() const;
};

/// Refines column 0 into composition segments, pushes every term forward
/// with N and verifies simplicity of every step, the endpoint identities
/// and the anti-diagonal isomorphisms.
IndexedCompositionChain x_composition_chain(TrellisSection const &section,
                                            ChainPair const &c);

/// The same with X and Y exchanged and P in place of N.
IndexedCompositionChain y_composition_chain(TrellisSection const &section,
                                            ChainPair const &c);

/// One step of a page: X_(j-1)(X_j∩Y^(sigma)_(k,rho)).
struct PageTerm
{
  int rho;
  int sigma;
  Subgroup group;
};

struct SchreierArrayPages
{
  int ell = 0;
  /// pages[j][k] for j + k <= ell. Pages with j + k > ell are X_j.
  std::vector<std::vector<std::vector<PageTerm>>> pages;
  IndexedCompositionChain y_chain;

  std::vector<PageTerm> const &page(int j, int k) const
  {
    return pages[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }

  /// Number of strict inclusions inside page (j, k).
  std::size_t page_length(int j, int k) const;

  /// Pages read column by column, repeated terms removed.
  Chain page_chain() const;

  /// Factors of page_chain in chain order.
  std::vector<CompositionFactor> factors() const;

  /// Number of anti-diagonal maps checked between neighbouring pages.
  std::size_t maps_verified = 0;
};

/// Builds every page from the dual composition chain and verifies that the
/// page chain is a composition chain of B with the Jordan-Hölder factors of
/// B, and that N maps each page step isomorphically onto the matching step
/// of the page one column to the right and one row down.
SchreierArrayPages schreier_array(TrellisSection const &section,
                                  ChainPair const &c);

struct SolvabilityCheck
{
  bool b_solvable;
  bool x0_solvable;
  bool agree() const { return b_solvable == x0_solvable; }
};

SolvabilityCheck solvability_equivalence(TrellisSection const &section);

/// Generator table over the page steps: one family per nontrivial step
/// (rho, sigma) of page (0, k), extended through the steps (rho + j, sigma)
/// of pages (j, k - j). Only nontrivial cells are kept.
GeneratorTable refined_representative_array(TrellisSection const &section);

} // namespace gtrellis
