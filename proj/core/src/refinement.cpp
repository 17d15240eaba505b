#include "gtrellis/refinement.hpp"

#include <algorithm>
#include <sstream>

#include "gtrellis/errors.hpp"
#include "gtrellis/isomorphism.hpp"
#include "gtrellis/schreier.hpp"

namespace gtrellis {

namespace {

[[noreturn]] void fail(std::string const &what)
{
  throw VerificationFailed("composition chain: " + what);
}

// Checks that lo < hi is a normal step with a simple factor.
void check_composition_step(Subgroup const &lo, Subgroup const &hi,
                            std::string const &where)
{
  if (!lo.is_subgroup_of(hi) || lo == hi || !is_normal(hi, lo))
    fail(where + " is not a proper normal step");
  if (!is_simple(quotient_group(hi, lo).group))
    fail(where + " has a factor that is not simple");
}

// Checks that consecutive distinct groups of a chain form composition steps
// running from 1 to B.
void check_composition_chain(Chain const &chain, Subgroup const &whole,
                             std::string const &name)
{
  if (chain.groups.empty() || !chain.groups.front().is_trivial() ||
      !(chain.groups.back() == whole))
    fail(name + " does not run from 1 to B");
  for (std::size_t n = 0; n + 1 < chain.size(); ++n) {
    std::ostringstream ss;
    ss << name << " step " << n;
    check_composition_step(chain.groups[n], chain.groups[n + 1], ss.str());
  }
}

// Both sides of a verified factor map must also be isomorphic as abstract
// groups; small factors are re-checked by search.
void check_factor_isomorphic(VerifiedIsomorphism const &iso,
                             std::string const &where)
{
  auto const &a = *iso.domain.group;
  auto const &b = *iso.codomain.group;
  if (a.order() != b.order())
    fail(where + ": factor orders differ");
  if (a.order() <= isomorphism_order_cap && !find_isomorphism(a, b))
    fail(where + ": factors are not isomorphic");
}

IndexedCompositionChain build_indexed_chain(TrellisSection const &section,
                                            ChainPair const &c, bool dual)
{
  auto a = [&](int i) -> Subgroup const & { return dual ? c.y(i) : c.x(i); };
  auto b = [&](int i) -> Subgroup const & { return dual ? c.x(i) : c.y(i); };
  auto term_formula = [&](int col, int row) {
    return dual ? dual_schreier_term(c, col, row) : schreier_term(c, col, row);
  };
  auto push = [&](Subgroup const &u) {
    return dual ? section.prev(u) : section.next(u);
  };
  auto push_set = [&](ElementSet const &u) {
    return dual ? section.prev_set(u) : section.next_set(u);
  };
  std::string const name = dual ? "Y" : "X";

  IndexedCompositionChain out;
  out.dual = dual;
  out.ell = c.ell();
  int const ell = out.ell;

  // segments[col][row + 1] holds sigma = 0..bound.
  std::vector<std::vector<std::vector<Subgroup>>> segments(
      static_cast<std::size_t>(ell + 1));

  for (int row = -1; row <= ell - 1; ++row) {
    Chain seg;
    seg.push(intersect(a(0), b(row)));
    seg.push(intersect(a(0), b(row + 1)));
    auto refined = composition_refinement(seg);
    out.sigma_bounds.push_back(static_cast<int>(refined.size()) - 1);
    segments[0].push_back(std::move(refined.groups));
  }
  for (int col = 1; col <= ell; ++col) {
    auto const &prev = segments[static_cast<std::size_t>(col - 1)];
    for (int row = -1; row <= ell - 1 - col; ++row) {
      std::vector<Subgroup> seg;
      for (auto const &g : prev[static_cast<std::size_t>(row + 2)])
        seg.push_back(push(g));
      segments[static_cast<std::size_t>(col)].push_back(std::move(seg));
    }
  }

  for (int col = 0; col <= ell; ++col) {
    for (int row = -1; row <= ell - 1 - col; ++row) {
      auto const &seg =
          segments[static_cast<std::size_t>(col)][static_cast<std::size_t>(row + 1)];
      std::ostringstream where;
      where << name << "(" << col << "," << row << ")";

      if (!(seg.front() == term_formula(col, row)) ||
          !(seg.back() == term_formula(col, row + 1)))
        fail(where.str() + " endpoints differ from the matrix entries");
      if (static_cast<int>(seg.size()) - 1 != out.sigma_bound(col + row))
        fail(where.str() + " has a different number of steps");

      for (std::size_t s = 0; s < seg.size(); ++s) {
        if (s > 0) {
          std::ostringstream step;
          step << where.str() << " sigma " << s;
          check_composition_step(seg[s - 1], seg[s], step.str());

          if (col > 0) {
            auto const &src = segments[static_cast<std::size_t>(col - 1)]
                                      [static_cast<std::size_t>(row + 2)];
            auto iso = verify_quotient_map(src[s], src[s - 1], seg[s],
                                           seg[s - 1], push_set, true);
            check_factor_isomorphic(iso, step.str());
          }
        }
        out.terms.push_back({col, row, static_cast<int>(s), seg[s]});
      }
    }
  }

  check_composition_chain(out.chain(), section.whole(), name + " chain");
  return out;
}

} // namespace

Subgroup const &IndexedCompositionChain::term(int column, int row,
                                              int sigma) const
{
  for (auto const &t : terms)
    if (t.column == column && t.row == row && t.sigma == sigma)
      return t.group;
  std::ostringstream ss;
  ss << "no term (" << column << "," << row << "," << sigma << ")";
  throw IndexOutOfRange(ss.str());
}

Chain IndexedCompositionChain::chain() const
{
  Chain out;
  for (auto const &t : terms) {
    if (!out.groups.empty() && out.groups.back() == t.group)
      continue;
    std::ostringstream label;
    label << "(" << t.column << "," << t.row << "," << t.sigma << ")";
    out.push(t.group, label.str());
  }
  return out;
}

IndexedCompositionChain x_composition_chain(TrellisSection const &section,
                                            ChainPair const &c)
{
  return build_indexed_chain(section, c, false);
}

IndexedCompositionChain y_composition_chain(TrellisSection const &section,
                                            ChainPair const &c)
{
  return build_indexed_chain(section, c, true);
}

std::size_t SchreierArrayPages::page_length(int j, int k) const
{
  auto const &p = page(j, k);
  std::size_t n = 0;
  for (std::size_t s = 1; s < p.size(); ++s)
    if (!(p[s].group == p[s - 1].group))
      ++n;
  return n;
}

Chain SchreierArrayPages::page_chain() const
{
  Chain out;
  for (int j = 0; j <= ell; ++j) {
    for (int k = 0; k <= ell - j; ++k) {
      for (auto const &t : page(j, k)) {
        if (!out.groups.empty() && out.groups.back() == t.group)
          continue;
        std::ostringstream label;
        label << "O(" << j << "," << k << ")[" << t.rho << "," << t.sigma
              << "]";
        out.push(t.group, label.str());
      }
    }
  }
  return out;
}

std::vector<CompositionFactor> SchreierArrayPages::factors() const
{
  return chain_factors(page_chain());
}

namespace {

Subgroup const &page_term(std::vector<PageTerm> const &page, int rho,
                          int sigma)
{
  for (auto const &t : page)
    if (t.rho == rho && t.sigma == sigma)
      return t.group;
  throw IndexOutOfRange("no such page step");
}

} // namespace

SchreierArrayPages schreier_array(TrellisSection const &section,
                                  ChainPair const &c)
{
  SchreierArrayPages out;
  out.ell = c.ell();
  out.y_chain = y_composition_chain(section, c);
  int const ell = out.ell;
  auto const &y = out.y_chain;

  for (int j = 0; j <= ell; ++j) {
    std::vector<std::vector<PageTerm>> column;
    for (int k = 0; k <= ell - j; ++k) {
      std::vector<PageTerm> page;
      for (int rho = -1; rho <= ell - k - 1; ++rho)
        for (int sigma = 0; sigma <= y.sigma_bound(k + rho); ++sigma)
          page.push_back({rho, sigma,
                          product(c.x(j - 1),
                                  intersect(c.x(j), y.term(k, rho, sigma)))});
      if (!(page.front().group == schreier_term(c, j, k - 1)) ||
          !(page.back().group == schreier_term(c, j, k))) {
        std::ostringstream ss;
        ss << "page (" << j << "," << k << ") endpoints differ from the matrix";
        fail(ss.str());
      }
      column.push_back(std::move(page));
    }
    out.pages.push_back(std::move(column));
  }

  check_composition_chain(out.page_chain(), section.whole(), "page chain");
  auto realized = out.factors();
  std::sort(realized.begin(), realized.end());
  if (realized != jordan_holder_factors(section.whole()))
    fail("page chain factors differ from the Jordan-Holder factors of B");

  auto next = [&](ElementSet const &u) { return section.next_set(u); };
  for (int j = 0; j <= ell; ++j) {
    for (int k = 1; j + k <= ell; ++k) {
      auto const &from = out.page(j, k);
      auto const &to = out.page(j + 1, k - 1);
      for (int rho = -1; rho <= ell - k - 1; ++rho) {
        for (int sigma = 1; sigma <= y.sigma_bound(k + rho); ++sigma) {
          auto iso = verify_quotient_map(
              page_term(from, rho, sigma), page_term(from, rho, sigma - 1),
              page_term(to, rho + 1, sigma), page_term(to, rho + 1, sigma - 1),
              next, true);
          std::ostringstream where;
          where << "page (" << j << "," << k << ") step (" << rho << ","
                << sigma << ")";
          check_factor_isomorphic(iso, where.str());
          ++out.maps_verified;
        }
      }
    }
  }
  return out;
}

SolvabilityCheck solvability_equivalence(TrellisSection const &section)
{
  return {is_solvable(section.whole()), is_solvable(section.x0())};
}

GeneratorTable refined_representative_array(TrellisSection const &section)
{
  auto const c = chains(section);
  auto const y = y_composition_chain(section, c);
  int const ell = c.ell();

  std::vector<FamilySpec> specs;
  for (int k = 0; k <= ell; ++k) {
    for (int rho = -1; rho <= ell - k - 1; ++rho) {
      for (int sigma = 1; sigma <= y.sigma_bound(k + rho); ++sigma) {
        FamilySpec spec{k, rho, sigma, {}};
        for (int j = 0; j <= k; ++j) {
          auto const &ys = y.term(k - j, rho + j, sigma);
          auto const &ys_prev = y.term(k - j, rho + j, sigma - 1);
          spec.columns.push_back(
              {k - j, rho + j, product(c.x(j - 1), intersect(c.x(j), ys_prev)),
               product(c.x(j - 1), intersect(c.x(j), ys)),
               intersect(c.x(j), ys)});
        }
        specs.push_back(std::move(spec));
      }
    }
  }
  return build_generator_table(section, c, specs, true);
}

} // namespace gtrellis
