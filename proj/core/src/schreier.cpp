#include "gtrellis/schreier.hpp"

#include <algorithm>
#include <sstream>

#include "gtrellis/errors.hpp"

namespace gtrellis {

Subgroup schreier_term(ChainPair const &c, int j, int k)
{
  return product(c.x(j - 1), intersect(c.x(j), c.y(k)));
}

Subgroup dual_schreier_term(ChainPair const &c, int k, int j)
{
  return product(c.y(k - 1), intersect(c.y(k), c.x(j)));
}

namespace {

SchreierMatrixForm build_matrix(ChainPair const &c, bool dual)
{
  SchreierMatrixForm out;
  out.ell = c.ell();
  out.dual = dual;
  out.controllable = true;
  for (int j = 0; j <= out.ell; ++j) {
    std::vector<Subgroup> column;
    for (int k = -1; k <= out.ell; ++k)
      column.push_back(dual ? dual_schreier_term(c, j, k)
                            : schreier_term(c, j, k));
    auto const &top = dual ? c.y(j) : c.x(j);
    if (!(column[static_cast<std::size_t>(out.ell - j + 1)] == top))
      out.controllable = false;
    out.entries.push_back(std::move(column));
  }
  return out;
}

void require(bool ok, std::string const &what)
{
  if (!ok)
    throw IndexOutOfRange(what);
}

} // namespace

SchreierMatrixForm schreier_matrix(ChainPair const &c)
{
  return build_matrix(c, false);
}

SchreierMatrixForm schreier_matrix(TrellisSection const &section)
{
  return schreier_matrix(chains(section));
}

SchreierMatrixForm dual_matrix(ChainPair const &c)
{
  return build_matrix(c, true);
}

SchreierMatrixForm dual_matrix(TrellisSection const &section)
{
  return dual_matrix(chains(section));
}

TriangularForm controllable_form(SchreierMatrixForm const &smf)
{
  if (!smf.controllable)
    throw NotControllableMatrix("diagonal test failed");

  TriangularForm out;
  out.ell = smf.ell;
  for (int j = 0; j <= smf.ell; ++j) {
    std::vector<Subgroup> column;
    for (int r = 0; r <= smf.ell; ++r) {
      // Entries with k < -1 repeat the bottom entry.
      int const k = std::max(r - j, -1);
      column.push_back(smf.entry(j, k));
    }
    out.columns.push_back(std::move(column));
  }
  return out;
}

VerifiedIsomorphism zassenhaus_iso(TrellisSection const &section,
                                   ChainPair const &c, int j, int k)
{
  int const ell = c.ell();
  require(0 <= j && j <= ell && 0 <= k && k <= ell,
          "zassenhaus indices outside 0..ell");

  auto const &g = section.b();
  auto const &u = c.x(j - 1);
  auto const ustar = intersect(c.x(j), c.y(k));
  auto const ustar_elems = ustar.elements();

  auto image = [&](ElementSet const &coset) {
    ElementSet out = g.empty_set();
    for (auto x = coset.find_first(); x != ElementSet::npos;
         x = coset.find_next(x))
      for (Element s : ustar_elems)
        if (u.contains(g.mul(x, g.inv(s))))
          out.set(s);
    return out;
  };

  return verify_quotient_map(schreier_term(c, j, k), schreier_term(c, j, k - 1),
                             dual_schreier_term(c, k, j),
                             dual_schreier_term(c, k, j - 1), image, false);
}

Subgroup star_term(ChainPair const &c, int j)
{
  return product(c.x(j), intersect(c.x(j + 1), c.y(0)));
}

Chain star_chain(ChainPair const &c)
{
  Chain out;
  out.push(c.x(-1), "X-1");
  if (c.ell() == 0)
    return out;
  for (int j = -1; j < c.ell(); ++j) {
    if (j >= 0)
      out.push(c.x(j), "X" + std::to_string(j));
    out.push(star_term(c, j), "X*" + std::to_string(j));
  }
  if (!(out.groups.back() == c.x(c.ell())))
    throw VerificationFailed("last starred term is not the branch group");
  return out;
}

VerifiedIsomorphism column_shift_iso(TrellisSection const &section,
                                     ChainPair const &c, int j)
{
  require(0 <= j && j < c.ell(), "column shift index outside 0..ell-1");
  auto image = [&](ElementSet const &coset) {
    return section.next_set(coset);
  };
  return verify_quotient_map(c.x(j), star_term(c, j - 1), c.x(j + 1), c.x(j),
                             image, true);
}

VerifiedIsomorphism adjacent_column_iso(TrellisSection const &section,
                                        ChainPair const &c, int j, int k,
                                        int m)
{
  require(j >= 0 && k >= 1 && j + k <= c.ell() && m >= 1 && k - m >= 0,
          "adjacent column indices out of range");
  auto image = [&](ElementSet const &coset) {
    return section.next_set(coset);
  };
  return verify_quotient_map(schreier_term(c, j, k), schreier_term(c, j, k - m),
                             schreier_term(c, j + 1, k - 1),
                             schreier_term(c, j + 1, k - m - 1), image, true);
}

RectangleFamily rectangle_family(TrellisSection const &section,
                                 ChainPair const &c, int k, int m, int l)
{
  require(0 < k && k <= c.ell() && m >= 1 && k - m > -1 && 0 < l &&
              l <= k - m + 1,
          "rectangle parameters out of range");

  RectangleFamily out;
  out.k = k;
  out.m = m;
  out.l = l;
  out.h.push_back(intersect(c.x(0), c.y(k)));
  out.j.push_back(intersect(c.x(0), c.y(k - m)));
  for (int i = 1; i <= l; ++i) {
    out.h.push_back(section.next(out.h.back()));
    out.j.push_back(section.next(out.j.back()));
  }

  for (int i = 0; i <= l; ++i) {
    auto const idx = static_cast<std::size_t>(i);
    if (!(out.h[idx] == schreier_term(c, i, k - i)) ||
        !(out.j[idx] == schreier_term(c, i, k - i - m))) {
      std::ostringstream ss;
      ss << "pushed-forward pair " << i << " is not the expected matrix entry";
      throw VerificationFailed(ss.str());
    }
    out.d.push_back(product(intersect(c.x(i), c.y(k - i - m)),
                            intersect(c.x(i - 1), c.y(k - i))));
  }

  for (int i = 0; i <= l; ++i) {
    auto const idx = static_cast<std::size_t>(i);
    auto push_forward = [&](ElementSet const &coset) {
      ElementSet s = coset;
      for (int t = 0; t < i; ++t)
        s = section.next_set(s);
      return s;
    };
    out.maps.push_back(verify_quotient_map(out.h[0], out.j[0], out.h[idx],
                                           out.j[idx], push_forward, true));

    auto const cell = intersect(c.x(i), c.y(k - i));
    auto inclusion = [](ElementSet const &coset) { return coset; };
    out.correspondences.push_back(verify_quotient_map(
        cell, out.d[idx], out.h[idx], out.j[idx], inclusion, false));
    out.transversals.push_back(
        out.correspondences.back().domain.cosets.transversal);
  }
  return out;
}

} // namespace gtrellis
