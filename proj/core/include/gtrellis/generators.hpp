#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gtrellis/subgroup.hpp"
#include "gtrellis/trellis.hpp"

namespace gtrellis {

/// One step lower < upper of the factorization chain together with a right
/// transversal of upper/lower. Cell (j, i) of the coarse table has
/// upper = X_(j-1)(X_j∩Y_i), lower = X_(j-1)(X_j∩Y_(i-1)) and draws its
/// representatives from host = X_j∩Y_i. Refined cells add the (rho, sigma)
/// position inside the page.
struct Cell
{
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  int column = 0;
  int i = 0;
  std::optional<int> rho;
  int sigma = 0;

  Subgroup lower;
  Subgroup upper;
  Subgroup host;

  /// reps[0] is the identity.
  std::vector<Element> reps;
  /// Family whose generators supply this cell's representatives.
  std::size_t family = 0;
  /// For each element of upper, the position of the representative of its
  /// coset lower*x; npos outside upper.
  std::vector<std::size_t> rep_of;

  std::string label() const;
};

/// Generators of one span: paths whose component j is a representative of
/// the family's column-j cell. paths[p] starts with the start cell's reps[p].
struct GeneratorFamily
{
  int span = 0;
  std::optional<int> rho;
  int sigma = 0;
  /// Cell indices for columns 0..span.
  std::vector<std::size_t> cells;
  std::vector<PathSegment> paths;
};

/// Chain-coset decomposition of B with generator paths. Cells are kept in
/// chain order (column ascending, then i, rho, sigma), which is also the
/// order in which representatives multiply back to a branch.
struct GeneratorTable
{
  TrellisSection section;
  ChainPair chains;
  std::vector<Cell> cells;
  std::vector<GeneratorFamily> families;
  /// lower of the first cell followed by the upper of every cell.
  Chain chain;

  int ell() const { return chains.ell(); }
  /// Index of the cell with column 0 and the given family.
  std::size_t start_cell(std::size_t family) const
  {
    return families[family].cells.front();
  }
};

/// Specification of one family before representatives are chosen.
struct FamilySpec
{
  struct Column
  {
    int i = 0;
    std::optional<int> rho;
    Subgroup lower;
    Subgroup upper;
    Subgroup host;
  };

  int span = 0;
  std::optional<int> rho;
  int sigma = 0;
  std::vector<Column> columns;
};

/// Picks the canonical transversal of the start cell inside its host,
/// extends every representative column by column with the smallest
/// successor lying in the next host, and orders cells along the chain.
/// Families whose start quotient is trivial are dropped when
/// `drop_trivial` is set. Verifies the chain and every transversal.
GeneratorTable build_generator_table(TrellisSection const &section,
                                     ChainPair const &c,
                                     std::vector<FamilySpec> const &specs,
                                     bool drop_trivial);

/// Cells (j, i), j + i <= ell, with the span-k generators extended through
/// X_j∩Y_(k-j). Cell (0,0) is X_0∩Y_0.
GeneratorTable representative_array(TrellisSection const &section);

/// Position of the chosen representative per cell, in cell order.
struct Factorization
{
  Element target;
  std::vector<std::size_t> parts;
};

/// Peels representatives from the top of the chain down and checks the
/// product.
Factorization factorize(GeneratorTable const &table, Element b);

/// Product of the chosen representatives in cell order.
Element multiply_parts(GeneratorTable const &table,
                       std::vector<std::size_t> const &parts);

/// All generator paths of span k. Throws IndexOutOfRange unless
/// 0 <= k <= ell.
std::vector<PathSegment> generators_at(GeneratorTable const &table, int k);

struct EtaCheck
{
  std::size_t eta_b;
  std::size_t cells_product;
  /// Cells with more than one representative.
  std::size_t nontrivial_cells;
};

EtaCheck eta_check(GeneratorTable const &table);

} // namespace gtrellis
