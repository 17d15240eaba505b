#include "gtrellis/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "gtrellis/encoder.hpp"
#include "gtrellis/errors.hpp"
#include "gtrellis/generators.hpp"
#include "gtrellis/isomorphism.hpp"
#include "gtrellis/refinement.hpp"
#include "gtrellis/schreier.hpp"

namespace gtrellis {

namespace {

using Rng = std::mt19937_64;

std::string set_text(ElementSet const &s)
{
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (Element x : members_of(s)) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << "}";
  return out.str();
}

class Recorder
{
public:
  Recorder(Ledger &ledger, std::string suite)
      : ledger_(ledger), suite_(std::move(suite))
  {
  }

  /// Runs `body`, which returns an empty string on success and a witness
  /// otherwise. Exceptions count as failures.
  void check(std::string const &name, std::function<std::string()> const &body)
  {
    std::string witness;
    bool pass = false;
    try {
      witness = body();
      pass = witness.empty();
    } catch (std::exception const &e) {
      witness = e.what();
    }
    ledger_.checks.push_back({suite_, name, pass, witness});
  }

private:
  Ledger &ledger_;
  std::string suite_;
};

struct Context
{
  TrellisSection const &section;
  ChainPair c;
  Rng rng;
  VerifyOptions const &options;

  bool exhaustive() const
  {
    return section.b().order() <= exhaustive_branch_cap;
  }

  /// Every branch when small, otherwise a fixed-size sample.
  std::vector<Element> branch_sample(std::size_t sample = 256)
  {
    std::size_t const n = section.b().order();
    std::vector<Element> out;
    if (exhaustive()) {
      for (Element x = 0; x < n; ++x)
        out.push_back(x);
      return out;
    }
    std::uniform_int_distribution<Element> d(0, n - 1);
    for (std::size_t i = 0; i < sample; ++i)
      out.push_back(d(rng));
    return out;
  }

  /// X_j for 0 <= j <= ell and Y_k for 0 <= k <= ell.
  std::vector<std::pair<std::string, Subgroup>> chain_terms() const
  {
    std::vector<std::pair<std::string, Subgroup>> out;
    for (int j = 0; j <= c.ell(); ++j)
      out.emplace_back("X" + std::to_string(j), c.x(j));
    for (int k = 0; k <= c.ell(); ++k)
      out.emplace_back("Y" + std::to_string(k), c.y(k));
    return out;
  }
};

ElementSet plus(Context const &ctx, ElementSet const &u)
{
  return ctx.section.right_image(u);
}

ElementSet minus(Context const &ctx, ElementSet const &u)
{
  return ctx.section.left_image(u);
}

// ---- group ----------------------------------------------------------------

void group_suite(Context &ctx, Recorder &rec)
{
  auto const &sec = ctx.section;
  auto const whole = sec.whole();

  rec.check("chain terms are normal subgroups of B", [&]() -> std::string {
    for (auto const &[name, g] : ctx.chain_terms()) {
      Subgroup(g.parent(), g.members());
      if (!is_normal(whole, g))
        return name + " is not normal";
    }
    return {};
  });

  rec.check("right cosets partition B", [&]() -> std::string {
    for (auto const *h : {&sec.x0(), &sec.y0()}) {
      auto cl = right_cosets(whole, *h);
      ElementSet seen = sec.b().empty_set();
      for (std::size_t i = 0; i < cl.count(); ++i) {
        if (cl.cosets[i].count() != h->order())
          return "coset " + std::to_string(i) + " has the wrong size";
        if (seen.intersects(cl.cosets[i]))
          return "cosets overlap at " + set_text(seen & cl.cosets[i]);
        seen |= cl.cosets[i];
      }
      if (!seen.all())
        return "cosets miss " + set_text(~seen);
    }
    return {};
  });

  rec.check("projection onto B/X0 is a homomorphism", [&]() -> std::string {
    auto q = quotient_group(whole, sec.x0());
    for (Element a : ctx.branch_sample(64))
      for (Element b : ctx.branch_sample(64))
        if (q.project(sec.b().mul(a, b)) !=
            q.group->mul(q.project(a), q.project(b))) {
          std::ostringstream ss;
          ss << "a=" << a << " b=" << b;
          return ss.str();
        }
    return {};
  });

  rec.check("B/X0 is isomorphic to S", [&]() -> std::string {
    auto q = quotient_group(whole, sec.x0());
    if (q.group->order() != sec.s().order())
      return "orders differ";
    if (q.group->order() <= isomorphism_order_cap &&
        !find_isomorphism(*q.group, sec.s()))
      return "no isomorphism found";
    return {};
  });

  rec.check("composition factors agree through X0 and Y0", [&]() -> std::string {
    Chain via_x, via_y;
    via_x.push(sec.trivial());
    via_x.push(sec.x0());
    via_x.push(whole);
    via_y.push(sec.trivial());
    via_y.push(sec.y0());
    via_y.push(whole);
    auto fx = chain_factors(composition_refinement(via_x));
    auto fy = chain_factors(composition_refinement(via_y));
    std::sort(fx.begin(), fx.end());
    std::sort(fy.begin(), fy.end());
    if (fx != fy)
      return "factor multisets differ";
    if (fx != jordan_holder_factors(whole))
      return "differs from the factors of B";
    return {};
  });

  rec.check("eta(B) = eta(X0) + eta(B/X0)", [&]() -> std::string {
    auto q = quotient_group(whole, sec.x0());
    std::size_t const lhs = eta(whole);
    std::size_t const rhs = eta(sec.x0()) + eta(Subgroup::whole(q.group));
    if (lhs != rhs)
      return std::to_string(lhs) + " != " + std::to_string(rhs);
    return {};
  });
}

// ---- trellis --------------------------------------------------------------

void trellis_suite(Context &ctx, Recorder &rec)
{
  auto const &sec = ctx.section;
  auto const &c = ctx.c;
  int const ell = c.ell();
  auto const terms = ctx.chain_terms();

  rec.check("X chain ascends from ker(left) to B", [&]() -> std::string {
    if (!(c.x(0) == sec.x0()) || !(c.y(0) == sec.y0()))
      return "X0 or Y0 is not the kernel";
    for (int j = 1; j <= ell; ++j) {
      if (!(sec.next(c.x(j - 1)) == c.x(j)))
        return "X" + std::to_string(j) + " != N(X" + std::to_string(j - 1) + ")";
      if (!(sec.prev(c.y(j - 1)) == c.y(j)))
        return "Y" + std::to_string(j) + " != P(Y" + std::to_string(j - 1) + ")";
    }
    if (!(c.x(ell) == sec.whole()) || !(c.y(ell) == sec.whole()))
      return "chains do not end at B";
    if (ell > 0 && (c.x(ell - 1) == sec.whole() || c.y(ell - 1) == sec.whole()))
      return "ell is not minimal";
    return {};
  });

  rec.check("fibre over a state is a coset of G∩X0", [&]() -> std::string {
    for (auto const &[name, g] : terms) {
      auto const k = intersect(g, sec.x0());
      auto const &grp = sec.b();
      for (Element b : g.elements()) {
        ElementSet fibre = grp.empty_set();
        for (Element e : g.elements())
          if (sec.left(e) == sec.left(b))
            fibre.set(e);
        ElementSet coset = grp.empty_set();
        for (Element h : k.elements())
          coset.set(grp.mul(h, b));
        if (fibre != coset)
          return name + " at branch " + std::to_string(b);
      }
    }
    return {};
  });

  rec.check("X_j^+ = X_(j+1)^- and Y_k^- = Y_(k+1)^+", [&]() -> std::string {
    for (int j = -1; j < ell; ++j) {
      if (plus(ctx, c.x(j).members()) != minus(ctx, c.x(j + 1).members()))
        return "X at j=" + std::to_string(j);
      if (minus(ctx, c.y(j).members()) != plus(ctx, c.y(j + 1).members()))
        return "Y at k=" + std::to_string(j);
    }
    return {};
  });

  rec.check("images respect intersections and products", [&]() -> std::string {
    for (auto const &[gn, g] : terms)
      for (auto const &[hn, h] : terms) {
        auto const gi = intersect(g, h).members();
        auto const gp = product(g, h).members();
        auto const &st = sec.s();
        auto prod_img = [&](ElementSet const &a, ElementSet const &b) {
          return product_set(st, a, b).members;
        };
        if (plus(ctx, gi) != (plus(ctx, g.members()) & plus(ctx, h.members())))
          return "(G∩H)^+ for " + gn + "," + hn;
        if (minus(ctx, gi) != (minus(ctx, g.members()) & minus(ctx, h.members())))
          return "(G∩H)^- for " + gn + "," + hn;
        if (plus(ctx, gp) != prod_img(plus(ctx, g.members()), plus(ctx, h.members())))
          return "(GH)^+ for " + gn + "," + hn;
        if (minus(ctx, gp) !=
            prod_img(minus(ctx, g.members()), minus(ctx, h.members())))
          return "(GH)^- for " + gn + "," + hn;
      }
    return {};
  });

  rec.check("(X_j∩Y_k)^+ = (X_(j+1)∩Y_(k-1))^-", [&]() -> std::string {
    for (int j = 0; j <= ell; ++j)
      for (int k = 0; k <= ell; ++k) {
        auto const lhs = plus(ctx, intersect(c.x(j), c.y(k)).members());
        auto const rhs = minus(ctx, intersect(c.x(j + 1), c.y(k - 1)).members());
        if (lhs != rhs)
          return "j=" + std::to_string(j) + " k=" + std::to_string(k);
      }
    return {};
  });

  rec.check("N and P carry subgroups to subgroups", [&]() -> std::string {
    for (auto const &[name, g] : terms) {
      auto const n = sec.next_set(g.members());
      auto const p = sec.prev_set(g.members());
      Subgroup(sec.branch_group(), n);
      Subgroup(sec.branch_group(), p);
    }
    return {};
  });

  rec.check("N preserves normal inclusions in the matrix", [&]() -> std::string {
    for (int j = 0; j < ell; ++j)
      for (int k = -1; k < ell; ++k) {
        auto const lo = schreier_term(c, j, k);
        auto const hi = schreier_term(c, j, k + 1);
        auto const nlo = sec.next(lo);
        auto const nhi = sec.next(hi);
        if (!nlo.is_subgroup_of(nhi) || !is_normal(nhi, nlo))
          return "column " + std::to_string(j) + " row " + std::to_string(k);
      }
    return {};
  });

  rec.check("N is monotone on subgroups over X_j∩Y_0", [&]() -> std::string {
    for (int j = 0; j <= ell; ++j) {
      std::vector<Subgroup> over;
      auto const base = intersect(c.x(j), c.y(0));
      for (int k = 0; k <= ell; ++k)
        over.push_back(product(base, intersect(c.x(j), c.y(k))));
      for (auto const &a : over)
        for (auto const &b : over) {
          bool const inc = a.is_subgroup_of(b);
          bool const ninc = sec.next(a).is_subgroup_of(sec.next(b));
          if (inc != ninc)
            return "column " + std::to_string(j);
        }
    }
    return {};
  });

  rec.check("N(GH) = N(G)N(H) on sampled subsets", [&]() -> std::string {
    auto const &grp = sec.b();
    std::bernoulli_distribution coin(0.1);
    for (int trial = 0; trial < 20; ++trial) {
      ElementSet g = grp.empty_set(), h = grp.empty_set();
      for (Element x = 0; x < grp.order(); ++x) {
        if (coin(ctx.rng))
          g.set(x);
        if (coin(ctx.rng))
          h.set(x);
      }
      g.set(grp.identity());
      h.set(grp.identity());
      auto const lhs = sec.next_set(product_set(grp, g, h).members);
      auto const rhs =
          product_set(grp, sec.next_set(g), sec.next_set(h)).members;
      if (lhs != rhs)
        return "trial " + std::to_string(trial) + " G=" + set_text(g);
    }
    return {};
  });

  rec.check("P_j(N(U)) = U for unions of X_j∩Y_0 cosets", [&]() -> std::string {
    std::bernoulli_distribution coin(0.5);
    for (int j = 0; j <= ell; ++j) {
      auto const cl = right_cosets(c.x(j), intersect(c.x(j), c.y(0)));
      for (int trial = 0; trial < 8; ++trial) {
        ElementSet u = sec.b().empty_set();
        for (auto const &coset : cl.cosets)
          if (coin(ctx.rng))
            u |= coset;
        if (u.none())
          u |= cl.cosets.front();
        if (prev_in_pletty(sec, c, j, sec.next_set(u)) != u)
          return "j=" + std::to_string(j) + " U=" + set_text(u);
      }
    }
    return {};
  });

  rec.check("random walks are valid paths", [&]() -> std::string {
    for (int trial = 0; trial < 20; ++trial) {
      auto const p = random_path(sec, 10, ctx.rng);
      if (!is_valid_path(sec, p))
        return "trial " + std::to_string(trial);
      auto const q = random_path(sec, 10, ctx.rng);
      if (!is_valid_path(sec, componentwise_product(sec, p, q)))
        return "product at trial " + std::to_string(trial);
    }
    return {};
  });
}

// ---- schreier -------------------------------------------------------------

void schreier_suite(Context &ctx, Recorder &rec)
{
  auto const &sec = ctx.section;
  auto const &c = ctx.c;
  int const ell = c.ell();
  auto const whole = sec.whole();

  rec.check("matrix and dual pass the diagonal test", [&]() -> std::string {
    auto const m = schreier_matrix(c);
    auto const d = dual_matrix(c);
    if (!m.controllable)
      return "primal matrix";
    if (!d.controllable)
      return "dual matrix";
    controllable_form(m);
    controllable_form(d);
    return {};
  });

  rec.check("columns ascend from X_(j-1) to X_j by normal steps",
            [&]() -> std::string {
              auto const m = schreier_matrix(c);
              for (int j = 0; j <= ell; ++j) {
                if (!(m.entry(j, -1) == c.x(j - 1)) || !(m.entry(j, ell) == c.x(j)))
                  return "column " + std::to_string(j) + " endpoints";
                for (int k = -1; k <= ell; ++k) {
                  if (!is_normal(whole, m.entry(j, k)))
                    return "entry " + std::to_string(j) + "," +
                           std::to_string(k) + " not normal in B";
                  if (k > -1 && !m.entry(j, k - 1).is_subgroup_of(m.entry(j, k)))
                    return "entry " + std::to_string(j) + "," +
                           std::to_string(k) + " not ascending";
                }
              }
              return {};
            });

  rec.check("prefix products of the anti-diagonal give X_j",
            [&]() -> std::string {
              auto acc = sec.trivial();
              for (int j = 0; j <= ell; ++j) {
                acc = product(acc, intersect(c.x(j), c.y(ell - j)));
                if (!(acc == c.x(j)))
                  return "j=" + std::to_string(j);
              }
              return {};
            });

  rec.check("Zassenhaus maps are isomorphisms", [&]() -> std::string {
    for (int j = 0; j <= ell; ++j)
      for (int k = 0; k <= ell; ++k)
        zassenhaus_iso(sec, c, j, k);
    return {};
  });

  rec.check("star chain runs from 1 to B", [&]() -> std::string {
    auto const chain = star_chain(c);
    for (std::size_t i = 1; i < chain.size(); ++i)
      if (!chain.groups[i - 1].is_subgroup_of(chain.groups[i]) ||
          !is_normal(chain.groups[i], chain.groups[i - 1]))
        return "step " + std::to_string(i);
    if (!(chain.groups.back() == whole))
      return "does not end at B";
    return {};
  });

  rec.check("column shift maps are isomorphisms", [&]() -> std::string {
    for (int j = 0; j < ell; ++j)
      column_shift_iso(sec, c, j);
    return {};
  });

  rec.check("adjacent column maps are isomorphisms", [&]() -> std::string {
    for (int j = 0; j < ell; ++j)
      for (int k = 1; j + k <= ell; ++k)
        for (int m = 1; m <= k; ++m)
          adjacent_column_iso(sec, c, j, k, m);
    return {};
  });

  rec.check("rectangle families have constant factors", [&]() -> std::string {
    for (int k = 1; k <= ell; ++k)
      for (int m = 1; m <= k; ++m)
        for (int l = 1; l <= k - m + 1; ++l) {
          auto const f = rectangle_family(sec, c, k, m, l);
          std::size_t const order = f.h[0].order() / f.j[0].order();
          for (std::size_t i = 0; i < f.h.size(); ++i) {
            if (f.h[i].order() / f.j[i].order() != order)
              return "order changes in k=" + std::to_string(k) +
                     " m=" + std::to_string(m);
            for (Element t : f.transversals[i])
              if (!intersect(c.x(static_cast<int>(i)),
                             c.y(k - static_cast<int>(i)))
                       .contains(t))
                return "transversal outside X_i∩Y_(k-i)";
          }
        }
    return {};
  });
}

// ---- generators -----------------------------------------------------------

std::string generator_checks(Context &ctx, GeneratorTable const &table,
                             std::string const &what)
{
  auto const &sec = ctx.section;
  auto const et = eta_check(table);
  if (et.cells_product != sec.b().order())
    return what + ": product of cell sizes is " +
           std::to_string(et.cells_product);
  std::map<std::vector<std::size_t>, Element> seen;
  for (Element b : ctx.branch_sample()) {
    auto const f = factorize(table, b);
    if (multiply_parts(table, f.parts) != b)
      return what + ": round trip fails at " + std::to_string(b);
    auto [it, fresh] = seen.emplace(f.parts, b);
    if (!fresh && it->second != b)
      return what + ": branches " + std::to_string(it->second) + " and " +
             std::to_string(b) + " share a factorization";
  }
  for (std::size_t fi = 0; fi < table.families.size(); ++fi) {
    auto const &fam = table.families[fi];
    for (auto const &path : fam.paths) {
      if (!is_valid_path(sec, path))
        return what + ": invalid generator in family " + std::to_string(fi);
      if (sec.left(path.branches.front()) != sec.s().identity() ||
          sec.right(path.branches.back()) != sec.s().identity())
        return what + ": generator of family " + std::to_string(fi) +
               " does not start and end at the identity state";
      for (std::size_t j = 0; j < path.size(); ++j)
        if (!table.cells[fam.cells[j]].host.contains(path.branches[j]))
          return what + ": component outside host in family " +
                 std::to_string(fi);
    }
  }
  return {};
}

void generators_suite(Context &ctx, Recorder &rec)
{
  auto const &sec = ctx.section;
  auto const table = representative_array(sec);
  int const ell = ctx.c.ell();

  rec.check("coarse table factorizes B uniquely",
            [&] { return generator_checks(ctx, table, "coarse"); });

  rec.check("cell (j,i) and (j+1,i-1) have equal size", [&]() -> std::string {
    std::map<std::pair<int, int>, std::size_t> size;
    for (auto const &cell : table.cells)
      size[{cell.column, cell.i}] = cell.reps.size();
    for (auto const &[key, n] : size) {
      auto it = size.find({key.first + 1, key.second - 1});
      if (it != size.end() && it->second != n)
        return "(" + std::to_string(key.first) + "," +
               std::to_string(key.second) + ")";
    }
    return {};
  });

  rec.check("generators of span k end in X_j∩Y_(k-j)", [&]() -> std::string {
    for (int k = 0; k <= ell; ++k)
      for (auto const &p : generators_at(table, k))
        for (int j = 0; j <= k; ++j)
          if (!intersect(ctx.c.x(j), ctx.c.y(k - j))
                   .contains(p.branches[static_cast<std::size_t>(j)]))
            return "k=" + std::to_string(k) + " j=" + std::to_string(j);
    return {};
  });

  rec.check("nontrivial coarse cells count at most eta(B)", [&]() -> std::string {
    auto const et = eta_check(table);
    if (et.nontrivial_cells > et.eta_b)
      return std::to_string(et.nontrivial_cells) + " > " +
             std::to_string(et.eta_b);
    return {};
  });
}

// ---- encoder --------------------------------------------------------------

std::string encoder_checks(Context &ctx, TablePtr const &table,
                           std::string const &what)
{
  auto const &sec = ctx.section;
  auto const &grp = sec.b();

  for (Element b : ctx.branch_sample()) {
    auto const inputs = inputs_for(table, b);
    Encoder enc(table);
    Element last = grp.identity();
    for (Element x : inputs)
      last = enc.step(x);
    if (last != b)
      return what + ": inputs_for misses branch " + std::to_string(b);
  }

  {
    auto const x0 = sec.x0().elements();
    std::uniform_int_distribution<std::size_t> pick(0, x0.size() - 1);
    Encoder enc(table);
    Element prev = enc.step(x0[pick(ctx.rng)]);
    for (std::size_t t = 1; t < ctx.options.random_steps; ++t) {
      Element const out = enc.step(x0[pick(ctx.rng)]);
      if (sec.right(prev) != sec.left(out))
        return what + ": invalid output at step " + std::to_string(t);
      prev = out;
    }
  }

  for (std::size_t trial = 0; trial < ctx.options.tracked_paths; ++trial) {
    auto const target = random_path(sec, ctx.options.tracked_length, ctx.rng);
    auto const r = track(table, target, target.branches.front());
    if (!r.exact || r.reproduced != target)
      return what + ": tracking fails on trial " + std::to_string(trial);
  }

  for (std::size_t f = 0; f < table->families.size(); ++f) {
    auto const &fam = table->families[f];
    for (std::size_t p = 0; p < fam.paths.size(); ++p) {
      auto const out = impulse_response(table, f, p);
      for (std::size_t t = 0; t < out.size(); ++t) {
        Element const expect = t < fam.paths[p].size()
                                   ? fam.paths[p].branches[t]
                                   : grp.identity();
        if (out.branches[t] != expect)
          return what + ": impulse response of family " + std::to_string(f) +
                 " position " + std::to_string(p) + " at epoch " +
                 std::to_string(t);
      }
    }
  }

  auto const states = reachable_states(table);
  if (states.size() != sec.s().order())
    return what + ": " + std::to_string(states.size()) +
           " reachable states, expected " + std::to_string(sec.s().order());
  auto const cl = right_cosets(sec.whole(), sec.x0());
  std::vector<char> hit(cl.count(), 0);
  for (Element s : states) {
    if (hit[cl.coset_of(s)])
      return what + ": two states in one coset of X0";
    hit[cl.coset_of(s)] = 1;
  }
  return {};
}

void encoder_suite(Context &ctx, Recorder &rec)
{
  auto const &sec = ctx.section;
  auto const table =
      std::make_shared<GeneratorTable const>(representative_array(sec));
  int const ell = ctx.c.ell();

  rec.check("coarse encoder is complete, valid, tracks, has |S| states",
            [&] { return encoder_checks(ctx, table, "coarse"); });

  rec.check("paths agreeing at time 0 degrade along X", [&]() -> std::string {
    std::size_t const len = static_cast<std::size_t>(ell) + 1;
    auto const &grp = sec.b();
    if (grp.order() <= 64) {
      auto const paths = join_paths(sec, grp.full_set(), len - 1);
      for (auto const &a : paths)
        for (auto const &b : paths)
          if (a.branches.front() == b.branches.front())
            degradation_profile(sec, ctx.c, a, b);
      return {};
    }
    for (int trial = 0; trial < 200; ++trial) {
      auto const a = random_path(sec, len, ctx.rng);
      PathSegment b{{a.branches.front()}};
      while (b.size() < len) {
        auto const &opts = sec.branches_from(sec.right(b.branches.back()));
        std::uniform_int_distribution<std::size_t> pick(0, opts.size() - 1);
        b.branches.push_back(opts[pick(ctx.rng)]);
      }
      degradation_profile(sec, ctx.c, a, b);
    }
    return {};
  });
}

// ---- refinement -----------------------------------------------------------

void refinement_suite(Context &ctx, Recorder &rec)
{
  auto const &sec = ctx.section;
  auto const &c = ctx.c;
  int const ell = c.ell();

  rec.check("X and Y composition chains verify", [&]() -> std::string {
    auto const xc = x_composition_chain(sec, c);
    auto const yc = y_composition_chain(sec, c);
    auto fx = chain_factors(xc.chain());
    auto fy = chain_factors(yc.chain());
    std::sort(fx.begin(), fx.end());
    std::sort(fy.begin(), fy.end());
    auto const jh = jordan_holder_factors(sec.whole());
    if (fx != jh || fy != jh)
      return "factors differ from those of B";
    return {};
  });

  rec.check("page chain is a composition chain of B", [&]() -> std::string {
    auto const pages = schreier_array(sec, c);
    auto f = pages.factors();
    std::sort(f.begin(), f.end());
    if (f != jordan_holder_factors(sec.whole()))
      return "factor multiset differs";
    return {};
  });

  rec.check("B is solvable iff X0 is", [&]() -> std::string {
    auto const s = solvability_equivalence(sec);
    return s.agree() ? std::string{} : std::string{"solvability differs"};
  });

  rec.check("pull-backs preserve normal inclusions", [&]() -> std::string {
    for (int j = 0; j < ell; ++j)
      for (int k = -1; k < ell; ++k) {
        auto const lo = schreier_term(c, j + 1, k);
        auto const hi = schreier_term(c, j + 1, k + 1);
        auto const plo = prev_in_pletty(sec, c, j, lo.members());
        auto const phi = prev_in_pletty(sec, c, j, hi.members());
        Subgroup const a(sec.branch_group(), plo);
        Subgroup const b(sec.branch_group(), phi);
        if (!a.is_subgroup_of(b) || !is_normal(b, a))
          return "column " + std::to_string(j) + " row " + std::to_string(k);
      }
    return {};
  });

  TablePtr table;
  rec.check("refined table builds", [&]() -> std::string {
    table = std::make_shared<GeneratorTable const>(
        refined_representative_array(sec));
    return {};
  });
  if (!table)
    return;

  rec.check("refined table factorizes B uniquely",
            [&] { return generator_checks(ctx, *table, "refined"); });

  rec.check("refined table has eta(B) cells with simple factors",
            [&]() -> std::string {
              auto const et = eta_check(*table);
              if (et.nontrivial_cells != et.eta_b ||
                  table->cells.size() != et.eta_b)
                return std::to_string(table->cells.size()) + " cells, eta " +
                       std::to_string(et.eta_b);
              for (auto const &cell : table->cells) {
                auto q = quotient_group(cell.upper, cell.lower);
                if (!is_simple(q.group))
                  return "cell " + cell.label() + " is not simple";
              }
              return {};
            });

  rec.check("refined encoder is complete, valid, tracks, has |S| states",
            [&] { return encoder_checks(ctx, table, "refined"); });
}

} // namespace

bool Ledger::all_pass() const { return failures() == 0; }

std::size_t Ledger::failures() const
{
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](auto const &c) { return !c.pass; }));
}

std::vector<std::string> const &suite_names()
{
  static std::vector<std::string> const names{
      "group", "trellis", "schreier", "generators", "encoder", "refinement"};
  return names;
}

Ledger run_verification(TrellisSection const &section,
                        VerifyOptions const &options)
{
  for (auto const &name : options.suites)
    if (std::find(suite_names().begin(), suite_names().end(), name) ==
        suite_names().end())
      throw IndexOutOfRange("unknown suite '" + name + "'");

  Context ctx{section, chains(section), Rng(options.seed), options};
  Ledger ledger;

  using Suite = void (*)(Context &, Recorder &);
  std::vector<std::pair<std::string, Suite>> const suites{
      {"group", group_suite},           {"trellis", trellis_suite},
      {"schreier", schreier_suite},     {"generators", generators_suite},
      {"encoder", encoder_suite},       {"refinement", refinement_suite}};
  for (auto const &[name, run] : suites) {
    if (!options.suites.empty() && !options.suites.count(name))
      continue;
    Recorder rec(ledger, name);
    run(ctx, rec);
  }
  return ledger;
}

} // namespace gtrellis
