#include "gtrellis/generators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "gtrellis/errors.hpp"
#include "gtrellis/schreier.hpp"

namespace gtrellis {

std::string Cell::label() const
{
  std::ostringstream ss;
  ss << "(" << column << "," << i;
  if (rho)
    ss << "," << *rho << "," << sigma;
  ss << ")";
  return ss.str();
}

namespace {

[[noreturn]] void fail(std::string const &what)
{
  throw VerificationFailed("generator table: " + what);
}

// Maps each element of upper to the position of the representative of its
// coset lower*x, checking that reps form a transversal.
std::vector<std::size_t> coset_lookup(Subgroup const &upper,
                                      Subgroup const &lower,
                                      std::vector<Element> const &reps,
                                      std::string const &label)
{
  auto const cosets = right_cosets(upper, lower);
  if (cosets.count() != reps.size()) {
    std::ostringstream ss;
    ss << "cell " << label << " has " << reps.size()
       << " representatives for " << cosets.count() << " cosets";
    fail(ss.str());
  }

  std::vector<std::size_t> position_of_coset(cosets.count(), Cell::npos);
  for (std::size_t p = 0; p < reps.size(); ++p) {
    std::size_t const idx = cosets.index_of[reps[p]];
    if (idx == CosetList::npos || position_of_coset[idx] != Cell::npos) {
      std::ostringstream ss;
      ss << "cell " << label << " representative " << reps[p]
         << " does not start a new coset";
      fail(ss.str());
    }
    position_of_coset[idx] = p;
  }

  std::vector<std::size_t> rep_of(cosets.index_of.size(), Cell::npos);
  for (std::size_t e = 0; e < rep_of.size(); ++e)
    if (cosets.index_of[e] != CosetList::npos)
      rep_of[e] = position_of_coset[cosets.index_of[e]];
  return rep_of;
}

} // namespace

GeneratorTable build_generator_table(TrellisSection const &section,
                                     ChainPair const &c,
                                     std::vector<FamilySpec> const &specs,
                                     bool drop_trivial)
{
  auto const &g = section.b();
  std::vector<Cell> cells;
  std::vector<GeneratorFamily> families;

  for (auto const &spec : specs) {
    auto const &start = spec.columns.front();
    auto const cosets = right_cosets(start.upper, start.lower);
    if (drop_trivial && cosets.count() == 1)
      continue;

    GeneratorFamily family{spec.span, spec.rho, spec.sigma, {}, {}};
    for (std::size_t q = 0; q < cosets.count(); ++q) {
      ElementSet const options = cosets.cosets[q] & start.host.members();
      if (options.none()) {
        std::ostringstream ss;
        ss << "a coset of span " << spec.span << " misses its host group";
        fail(ss.str());
      }
      PathSegment path{{canonical_pick(g, options)}};

      for (std::size_t col = 1; col < spec.columns.size(); ++col) {
        ElementSet const next =
            section.next_set(g.singleton(path.branches.back())) &
            spec.columns[col].host.members();
        if (next.none()) {
          std::ostringstream ss;
          ss << "no successor of " << path.branches.back() << " in column "
             << col << " of span " << spec.span;
          fail(ss.str());
        }
        path.branches.push_back(canonical_pick(g, next));
      }
      family.paths.push_back(std::move(path));
    }

    std::size_t const family_index = families.size();
    for (std::size_t col = 0; col < spec.columns.size(); ++col) {
      auto const &column = spec.columns[col];
      std::vector<Element> reps;
      for (auto const &p : family.paths)
        reps.push_back(p.branches[col]);
      Cell cell{static_cast<int>(col), column.i, column.rho, spec.sigma,
                column.lower, column.upper, column.host, std::move(reps),
                family_index, {}};
      cell.rep_of = coset_lookup(cell.upper, cell.lower, cell.reps,
                                 cell.label());
      family.cells.push_back(cells.size());
      cells.push_back(std::move(cell));
    }
    families.push_back(std::move(family));
  }

  // Chain order.
  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t n) {
    auto const &cl = cells[n];
    return std::make_tuple(cl.column, cl.i, cl.rho.value_or(-2), cl.sigma);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<std::size_t> new_index(cells.size());
  std::vector<Cell> sorted;
  for (std::size_t n = 0; n < order.size(); ++n) {
    new_index[order[n]] = n;
    sorted.push_back(std::move(cells[order[n]]));
  }
  for (auto &f : families)
    for (auto &ci : f.cells)
      ci = new_index[ci];

  Chain chain;
  chain.push(section.trivial(), "1");
  for (auto const &cell : sorted) {
    if (!(cell.lower == chain.groups.back())) {
      std::ostringstream ss;
      ss << "cell " << cell.label() << " does not continue the chain";
      fail(ss.str());
    }
    chain.push(cell.upper, cell.label());
  }
  if (!(chain.groups.back() == section.whole()))
    fail("cells do not reach the branch group");

  return {section, c, std::move(sorted), std::move(families),
          std::move(chain)};
}

GeneratorTable representative_array(TrellisSection const &section)
{
  auto const c = chains(section);
  std::vector<FamilySpec> specs;
  if (section.b().order() > 1) {
    for (int k = 0; k <= c.ell(); ++k) {
      FamilySpec spec{k, std::nullopt, 0, {}};
      for (int j = 0; j <= k; ++j) {
        int const i = k - j;
        spec.columns.push_back({i, std::nullopt, schreier_term(c, j, i - 1),
                                schreier_term(c, j, i),
                                intersect(c.x(j), c.y(i))});
      }
      specs.push_back(std::move(spec));
    }
  }
  return build_generator_table(section, c, specs, false);
}

Element multiply_parts(GeneratorTable const &table,
                       std::vector<std::size_t> const &parts)
{
  auto const &g = table.section.b();
  Element x = g.identity();
  for (std::size_t n = 0; n < table.cells.size(); ++n)
    x = g.mul(x, table.cells[n].reps[parts[n]]);
  return x;
}

Factorization factorize(GeneratorTable const &table, Element b)
{
  auto const &g = table.section.b();
  Factorization out{b, std::vector<std::size_t>(table.cells.size(), 0)};
  Element x = b;
  for (std::size_t n = table.cells.size(); n-- > 0;) {
    auto const &cell = table.cells[n];
    std::size_t const pos = cell.rep_of[x];
    if (pos == Cell::npos) {
      std::ostringstream ss;
      ss << "remainder " << x << " left the chain at cell " << cell.label();
      fail(ss.str());
    }
    out.parts[n] = pos;
    x = g.mul(x, g.inv(cell.reps[pos]));
  }
  if (x != g.identity() || multiply_parts(table, out.parts) != b) {
    std::ostringstream ss;
    ss << "factorization of " << b << " does not multiply back";
    fail(ss.str());
  }
  return out;
}

std::vector<PathSegment> generators_at(GeneratorTable const &table, int k)
{
  if (k < 0 || k > table.ell()) {
    std::ostringstream ss;
    ss << "span " << k << " outside 0.." << table.ell();
    throw IndexOutOfRange(ss.str());
  }
  std::vector<PathSegment> out;
  for (auto const &f : table.families)
    if (f.span == k)
      out.insert(out.end(), f.paths.begin(), f.paths.end());
  return out;
}

EtaCheck eta_check(GeneratorTable const &table)
{
  EtaCheck out{eta(table.section.whole()), 1, 0};
  for (auto const &cell : table.cells) {
    out.cells_product *= cell.reps.size();
    if (cell.reps.size() > 1)
      ++out.nontrivial_cells;
  }
  return out;
}

} // namespace gtrellis
