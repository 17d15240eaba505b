#include <gtest/gtest.h>

#include <map>
#include <set>

#include "gtrellis/errors.hpp"
#include "gtrellis/generators.hpp"
#include "oracles.hpp"

using namespace gtrellis;
using oracle::to_set;

namespace {

constexpr Element b100 = 1;
constexpr Element b010 = 2;
constexpr Element b001 = 4;

Cell const *find_cell(GeneratorTable const &t, int column, int i)
{
  for (auto const &c : t.cells)
    if (c.column == column && c.i == i)
      return &c;
  return nullptr;
}

std::vector<TrellisSection> sample_sections()
{
  return {shift_register_section(2, 1), shift_register_section(2, 2),
          shift_register_section(2, 3), shift_register_section(3, 2),
          complete_section(cyclic_group(2)),
          complete_section(symmetric_group(3))};
}

} // namespace

TEST(RepresentativeArray, ShiftRegisterCells)
{
  auto const t = representative_array(shift_register_section(2, 2));
  std::vector<std::pair<int, int>> nontrivial;
  for (auto const &c : t.cells)
    if (c.reps.size() > 1) {
      nontrivial.emplace_back(c.column, c.i);
      EXPECT_EQ(c.reps.size(), 2u);
    }
  EXPECT_EQ(nontrivial,
            (std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(find_cell(t, 0, 2)->label(), "(0,2)");
}

TEST(RepresentativeArray, ShiftRegisterGenerator)
{
  auto const t = representative_array(shift_register_section(2, 2));
  auto const span2 = generators_at(t, 2);
  std::set<std::vector<Element>> got;
  for (auto const &p : span2)
    got.insert(p.branches);
  EXPECT_EQ(got, (std::set<std::vector<Element>>{{0, 0, 0},
                                                  {b100, b010, b001}}));
  auto const span0 = generators_at(t, 0);
  ASSERT_EQ(span0.size(), 1u);
  EXPECT_EQ(span0[0].branches, (std::vector<Element>{0}));
  EXPECT_THROW(generators_at(t, 3), IndexOutOfRange);
}

TEST(RepresentativeArray, CompleteS3)
{
  auto const t = representative_array(complete_section(symmetric_group(3)));
  auto const *c01 = find_cell(t, 0, 1);
  auto const *c10 = find_cell(t, 1, 0);
  ASSERT_TRUE(c01 && c10);
  EXPECT_EQ(c01->reps.size(), 6u);
  EXPECT_EQ(c10->reps.size(), 6u);
  auto const gens = generators_at(t, 1);
  EXPECT_EQ(gens.size(), 6u);
  for (auto const &p : gens)
    EXPECT_EQ(p.size(), 2u);
}

TEST(RepresentativeArray, TransversalsAreCanonical)
{
  for (auto const &s : sample_sections()) {
    auto const t = representative_array(s);
    auto const o = oracle::raw(s);
    for (auto const &cell : t.cells) {
      ASSERT_FALSE(cell.reps.empty());
      EXPECT_EQ(cell.reps[0], s.b().identity());
      // Representatives lie in the host and in distinct cosets of lower.
      std::set<oracle::Set> cosets;
      for (Element r : cell.reps) {
        EXPECT_TRUE(cell.host.contains(r));
        EXPECT_TRUE(cell.upper.contains(r));
        cosets.insert(oracle::product_set(o.branches, to_set(cell.lower), {r}));
      }
      EXPECT_EQ(cosets.size(), cell.reps.size());
      EXPECT_EQ(cell.reps.size() * cell.lower.order(), cell.upper.order());
    }
  }
}

TEST(RepresentativeArray, GeneratorsLieInChainIntersections)
{
  for (auto const &s : sample_sections()) {
    auto const t = representative_array(s);
    auto const o = oracle::raw(s);
    for (int k = 0; k <= t.ell(); ++k)
      for (auto const &p : generators_at(t, k)) {
        EXPECT_TRUE(oracle::valid(o, p.branches));
        EXPECT_EQ(o.left[p.branches.front()], o.state_identity);
        EXPECT_EQ(o.right[p.branches.back()], o.state_identity);
        for (int j = 0; j <= k; ++j) {
          auto const b = p.branches[static_cast<std::size_t>(j)];
          EXPECT_TRUE(oracle::splitting(o, j).count(b));
          EXPECT_TRUE(oracle::merging(o, k - j).count(b));
        }
      }
  }
}

TEST(Factorize, ShiftRegisterAllOnes)
{
  auto const t = representative_array(shift_register_section(2, 2));
  auto const f = factorize(t, 7);
  std::map<std::pair<int, int>, Element> chosen;
  for (std::size_t n = 0; n < t.cells.size(); ++n)
    chosen[{t.cells[n].column, t.cells[n].i}] = t.cells[n].reps[f.parts[n]];
  EXPECT_EQ((chosen[{0, 2}]), b100);
  EXPECT_EQ((chosen[{1, 1}]), b010);
  EXPECT_EQ((chosen[{2, 0}]), b001);
}

TEST(Factorize, ShiftRegisterSingleMiddle)
{
  auto const t = representative_array(shift_register_section(2, 2));
  auto const f = factorize(t, b010);
  for (std::size_t n = 0; n < t.cells.size(); ++n) {
    auto const r = t.cells[n].reps[f.parts[n]];
    if (t.cells[n].column == 1 && t.cells[n].i == 1)
      EXPECT_EQ(r, b010);
    else
      EXPECT_EQ(r, 0u);
  }
}

TEST(Factorize, RoundTripAndUniquenessByOracle)
{
  for (auto const &s : sample_sections()) {
    auto const t = representative_array(s);
    auto const o = oracle::raw(s);
    std::set<std::vector<std::size_t>> seen;
    for (Element b = 0; b < s.b().order(); ++b) {
      auto const f = factorize(t, b);
      // Multiply with the oracle table in cell order.
      Element x = oracle::identity(o.branches);
      for (std::size_t n = 0; n < t.cells.size(); ++n)
        x = o.branches[x][t.cells[n].reps[f.parts[n]]];
      EXPECT_EQ(x, b);
      EXPECT_EQ(multiply_parts(t, f.parts), b);
      seen.insert(f.parts);
    }
    EXPECT_EQ(seen.size(), s.b().order());
  }
}

TEST(Factorize, ChainRunsFromTrivialToB)
{
  for (auto const &s : sample_sections()) {
    auto const t = representative_array(s);
    ASSERT_GE(t.chain.size(), 1u);
    EXPECT_TRUE(t.chain.groups.front().is_trivial());
    EXPECT_EQ(t.chain.groups.back().order(), s.b().order());
    for (std::size_t n = 0; n < t.cells.size(); ++n)
      EXPECT_EQ(t.cells[n].lower, t.chain.groups[n]);
  }
}

TEST(EtaCheck, Values)
{
  auto const a = eta_check(representative_array(shift_register_section(2, 2)));
  EXPECT_EQ(a.eta_b, 3u);
  EXPECT_EQ(a.cells_product, 8u);
  auto const b =
      eta_check(representative_array(complete_section(symmetric_group(3))));
  EXPECT_EQ(b.eta_b, 4u);
  EXPECT_EQ(b.cells_product, 36u);
  EXPECT_EQ(b.nontrivial_cells, 2u);
}

TEST(EtaCheck, CellsProductIsOrderOfB)
{
  for (auto const &s : sample_sections())
    EXPECT_EQ(eta_check(representative_array(s)).cells_product,
              s.b().order());
}

TEST(RepresentativeArray, TrivialSectionHasNoCells)
{
  auto const t = representative_array(complete_section(trivial_group()));
  EXPECT_TRUE(t.cells.empty());
  EXPECT_EQ(factorize(t, 0).parts.size(), 0u);
}
