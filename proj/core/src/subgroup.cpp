#include "gtrellis/subgroup.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "gtrellis/errors.hpp"

namespace gtrellis {

Subgroup::Subgroup(GroupPtr parent, ElementSet members, std::size_t order)
  : parent_(std::move(parent)), members_(std::move(members)), order_(order)
{}

Subgroup::Subgroup(GroupPtr parent, ElementSet members)
  : parent_(std::move(parent)), members_(std::move(members))
{
  auto const &g = *parent_;
  if (members_.size() != g.order())
    throw NotASubgroup("member set has the wrong universe size");
  if (!members_.test(g.identity()))
    throw NotASubgroup("missing the identity");

  auto const elems = members_of(members_);
  for (Element a : elems) {
    if (!members_.test(g.inv(a))) {
      std::ostringstream ss;
      ss << "not closed under inverse at " << a;
      throw NotASubgroup(ss.str());
    }
    for (Element b : elems) {
      if (!members_.test(g.mul(a, b))) {
        std::ostringstream ss;
        ss << "not closed: " << a << "*" << b << " = " << g.mul(a, b);
        throw NotASubgroup(ss.str());
      }
    }
  }
  order_ = elems.size();
}

Subgroup Subgroup::trusted(GroupPtr parent, ElementSet members)
{
  auto const order = members.count();
  return Subgroup(std::move(parent), std::move(members), order);
}

Subgroup Subgroup::trivial(GroupPtr parent)
{
  auto set = parent->singleton(parent->identity());
  return Subgroup(std::move(parent), std::move(set), 1);
}

Subgroup Subgroup::whole(GroupPtr parent)
{
  auto set = parent->full_set();
  auto const order = parent->order();
  return Subgroup(std::move(parent), std::move(set), order);
}

bool Subgroup::is_subgroup_of(Subgroup const &other) const
{
  return members_.is_subset_of(other.members_);
}

Subgroup subgroup_closure(GroupPtr const &g, ElementSet const &seed)
{
  auto const gens = members_of(seed);
  ElementSet members = g->singleton(g->identity());
  std::vector<Element> queue{g->identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      Element y = g->mul(queue[i], s);
      if (!members.test(y)) {
        members.set(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup::trusted(g, std::move(members));
}

Subgroup subgroup_closure(GroupPtr const &g, std::vector<Element> const &seed)
{
  return subgroup_closure(g, g->make_set(seed));
}

Subgroup normal_closure(Subgroup const &ambient, ElementSet const &seed)
{
  auto const &g = ambient.group();
  ElementSet conjugates = g.empty_set();
  auto const amb = ambient.elements();
  for (Element s : members_of(seed))
    for (Element a : amb)
      conjugates.set(g.conj(a, s));
  return subgroup_closure(ambient.parent(), conjugates);
}

bool is_normal(Subgroup const &ambient, Subgroup const &h)
{
  if (!h.is_subgroup_of(ambient))
    throw NotASubgroup("subgroup is not contained in the ambient group");
  auto const &g = ambient.group();
  auto const hs = h.elements();
  for (Element a : ambient.elements())
    for (Element x : hs)
      if (!h.contains(g.conj(a, x)))
        return false;
  return true;
}

ProductSet product_set(FiniteGroup const &g, ElementSet const &a,
                       ElementSet const &b)
{
  ProductSet out{g.empty_set(), false};
  auto const as = members_of(a);
  for (Element y : members_of(b))
    for (Element x : as)
      out.members.set(g.mul(x, y));

  if (!out.members.test(g.identity()))
    return out;
  auto const ps = members_of(out.members);
  for (Element x : ps)
    for (Element y : ps)
      if (!out.members.test(g.mul(x, y)))
        return out;
  out.is_subgroup = true;
  return out;
}

namespace {

// A*B for a subgroup A: the union of the right cosets Ab, each added once.
ElementSet subgroup_times_set(FiniteGroup const &g, Subgroup const &a,
                              ElementSet const &b)
{
  ElementSet out = g.empty_set();
  auto const as = a.elements();
  for (auto y = b.find_first(); y != ElementSet::npos; y = b.find_next(y)) {
    if (out.test(y))
      continue;
    for (Element x : as)
      out.set(g.mul(x, y));
  }
  return out;
}

} // namespace

Subgroup product(Subgroup const &a, Subgroup const &b)
{
  auto const &g = a.group();
  if (a.is_subgroup_of(b))
    return b;
  if (b.is_subgroup_of(a))
    return a;

  ElementSet ab = subgroup_times_set(g, a, b.members());
  ElementSet ba = subgroup_times_set(g, b, a.members());
  if (ab != ba)
    throw NotASubgroup("product of subgroups is not a subgroup");
  return Subgroup::trusted(a.parent(), std::move(ab));
}

Subgroup intersect(Subgroup const &a, Subgroup const &b)
{
  return Subgroup::trusted(a.parent(), a.members() & b.members());
}

CosetList right_cosets(Subgroup const &ambient, Subgroup const &h)
{
  if (!h.is_subgroup_of(ambient))
    throw NotASubgroup("subgroup is not contained in the ambient group");

  auto const &g = ambient.group();
  auto const hs = h.elements();

  struct Raw
  {
    Element rep;
    ElementSet set;
  };
  std::vector<Raw> raw;
  ElementSet covered = g.empty_set();
  for (Element x : ambient.elements()) {
    if (covered.test(x))
      continue;
    ElementSet coset = g.empty_set();
    for (Element y : hs)
      coset.set(g.mul(y, x));
    covered |= coset;
    raw.push_back({x, std::move(coset)});
  }

  // The coset h itself takes the identity as its representative and goes
  // first.
  for (auto &r : raw)
    if (r.set.test(g.identity()))
      r.rep = g.identity();
  std::stable_sort(raw.begin(), raw.end(), [&](Raw const &l, Raw const &r) {
    bool const li = l.rep == g.identity();
    bool const ri = r.rep == g.identity();
    if (li != ri)
      return li;
    return l.rep < r.rep;
  });

  CosetList out{h, ambient, {}, {}, std::vector<std::size_t>(g.order(),
                                                            CosetList::npos)};
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (auto e = raw[i].set.find_first(); e != ElementSet::npos;
         e = raw[i].set.find_next(e))
      out.index_of[e] = i;
    out.transversal.push_back(raw[i].rep);
    out.cosets.push_back(std::move(raw[i].set));
  }
  return out;
}

ElementSet Quotient::pull_back(ElementSet const &quotient_set) const
{
  ElementSet out = cosets.ambient.group().empty_set();
  for (std::size_t i = 0; i < cosets.count(); ++i)
    if (quotient_set.test(i))
      out |= cosets.cosets[i];
  return out;
}

Quotient quotient_group(Subgroup const &ambient, Subgroup const &h)
{
  if (!h.is_subgroup_of(ambient) || !is_normal(ambient, h))
    throw NotNormal("quotient by a subgroup that is not normal");

  auto cosets = right_cosets(ambient, h);
  auto const &g = ambient.group();
  std::size_t const n = cosets.count();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = cosets.index_of[g.mul(cosets.transversal[i],
                                               cosets.transversal[j])];
  return {FiniteGroup::from_trusted_table(n, std::move(table)),
          std::move(cosets)};
}

Subgroup commutator_subgroup(Subgroup const &h)
{
  auto const &g = h.group();
  auto const hs = h.elements();
  ElementSet comms = g.empty_set();
  for (Element a : hs)
    for (Element b : hs)
      comms.set(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return subgroup_closure(h.parent(), comms);
}

DerivedSeries derived_series(Subgroup const &h)
{
  DerivedSeries out{{h}, false};
  for (;;) {
    auto next = commutator_subgroup(out.terms.back());
    if (next == out.terms.back())
      break;
    out.terms.push_back(std::move(next));
  }
  out.solvable = out.terms.back().is_trivial();
  return out;
}

bool is_solvable(Subgroup const &h)
{
  return derived_series(h).solvable;
}

namespace {

std::size_t smallest_prime_factor(std::size_t n)
{
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return p;
  return n;
}

bool is_prime(std::size_t n)
{
  return n >= 2 && smallest_prime_factor(n) == n;
}

// Smallest order of a nonabelian simple group. Below it, every simple
// quotient is cyclic of prime order.
constexpr std::size_t min_nonabelian_simple = 60;

// One representative per conjugacy class.
std::vector<Element> class_representatives(FiniteGroup const &g)
{
  std::vector<Element> reps;
  ElementSet seen = g.empty_set();
  for (Element x = 0; x < g.order(); ++x) {
    if (seen.test(x))
      continue;
    reps.push_back(x);
    for (Element a = 0; a < g.order(); ++a)
      seen.set(g.conj(a, x));
  }
  return reps;
}

// All normal subgroups of q, as member sets.
std::vector<ElementSet> normal_subgroups(GroupPtr const &q)
{
  auto const whole = Subgroup::whole(q);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.members()).second)
      found.push_back(std::move(s));
  };

  add(Subgroup::trivial(q));
  for (Element x : class_representatives(*q))
    add(normal_closure(whole, q->singleton(x)));

  // Products of normal subgroups are normal; close the list under them.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      add(product(found[i], found[j]));

  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (auto const &s : found)
    out.push_back(s.members());
  return out;
}

// Index-p subgroups of an abelian group a, as kernels of maps onto Z_p.
std::vector<ElementSet> index_p_subgroups(GroupPtr const &a, std::size_t p)
{
  auto const whole = Subgroup::whole(a);

  ElementSet powers = a->empty_set();
  for (Element x = 0; x < a->order(); ++x)
    powers.set(a->pow(x, p));
  auto const frattini = Subgroup::trusted(a, powers);
  auto const v = quotient_group(whole, frattini);
  auto const &vg = *v.group;

  // Greedy basis of the F_p vector space v.
  std::vector<Element> basis;
  ElementSet span = vg.singleton(vg.identity());
  for (Element x = 0; x < vg.order(); ++x) {
    if (span.test(x))
      continue;
    basis.push_back(x);
    span = subgroup_closure(v.group, basis).members();
  }
  std::size_t const r = basis.size();

  std::vector<std::vector<std::size_t>> coords(vg.order());
  coords[vg.identity()] = std::vector<std::size_t>(r, 0);
  std::vector<Element> built{vg.identity()};
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t const existing = built.size();
    Element step = basis[i];
    for (std::size_t c = 1; c < p; ++c, step = vg.mul(step, basis[i])) {
      for (std::size_t e = 0; e < existing; ++e) {
        Element y = vg.mul(built[e], step);
        coords[y] = coords[built[e]];
        coords[y][i] = c;
        built.push_back(y);
      }
    }
  }

  std::vector<ElementSet> out;
  std::vector<std::size_t> functional(r, 0);
  // Functionals with leading coefficient 1, one per hyperplane.
  for (std::size_t lead = 0; lead < r; ++lead) {
    std::size_t free = r - lead - 1;
    std::size_t count = 1;
    for (std::size_t i = 0; i < free; ++i)
      count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      std::fill(functional.begin(), functional.end(), 0);
      functional[lead] = 1;
      std::size_t rest = code;
      for (std::size_t i = lead + 1; i < r; ++i, rest /= p)
        functional[i] = rest % p;

      ElementSet kernel = vg.empty_set();
      for (Element x = 0; x < vg.order(); ++x) {
        std::size_t dot = 0;
        for (std::size_t i = 0; i < r; ++i)
          dot += functional[i] * coords[x][i];
        if (dot % p == 0)
          kernel.set(x);
      }
      out.push_back(v.pull_back(kernel));
    }
  }
  return out;
}

} // namespace

bool is_simple(GroupPtr const &g)
{
  if (g->order() == 1)
    return false;
  if (g->is_abelian())
    return is_prime(g->order());
  auto const whole = Subgroup::whole(g);
  for (Element x : class_representatives(*g)) {
    if (x == g->identity())
      continue;
    if (normal_closure(whole, g->singleton(x)).order() != g->order())
      return false;
  }
  return true;
}

Subgroup maximal_normal_between(Subgroup const &lower, Subgroup const &upper)
{
  auto const q = quotient_group(upper, lower);
  auto const &qg = q.group;
  std::size_t const n = qg->order();

  // Candidate subgroups of the quotient, as member sets over coset indices.
  std::vector<ElementSet> candidates;
  if (qg->is_abelian() && is_prime(n)) {
    candidates.push_back(qg->singleton(qg->identity()));
  } else {
    auto const whole = Subgroup::whole(qg);
    auto const derived = commutator_subgroup(whole);
    std::size_t const p =
        derived.order() == n ? 0 : smallest_prime_factor(n / derived.order());
    if (p != 0 && p < min_nonabelian_simple) {
      // Every simple quotient of order p is abelian, and no nonabelian
      // simple quotient has order below 60, so the maximal normal subgroups
      // of largest order are the kernels onto Z_p.
      auto const ab = quotient_group(whole, derived);
      for (auto const &k : index_p_subgroups(ab.group, p))
        candidates.push_back(ab.pull_back(k));
    } else {
      std::size_t best = 0;
      for (auto &s : normal_subgroups(qg)) {
        std::size_t const c = s.count();
        if (c == n || c < best)
          continue;
        if (c > best) {
          best = c;
          candidates.clear();
        }
        candidates.push_back(std::move(s));
      }
    }
  }

  ElementSet best = q.pull_back(candidates.front());
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    ElementSet c = q.pull_back(candidates[i]);
    if (lex_less(c, best))
      best = std::move(c);
  }
  return Subgroup::trusted(upper.parent(), std::move(best));
}

Chain composition_refinement(Chain const &chain)
{
  Chain out;
  if (chain.groups.empty())
    return out;

  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto const &lo = chain.groups[i];
    auto const &hi = chain.groups[i + 1];
    if (!lo.is_subgroup_of(hi) || !is_normal(hi, lo)) {
      std::ostringstream ss;
      ss << "step " << i << " is not a normal inclusion";
      throw NotNormalStep(i, ss.str());
    }
  }

  out.push(chain.groups[0], chain.labels.empty() ? "" : chain.labels[0]);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto const &lo = chain.groups[i];
    auto const &hi = chain.groups[i + 1];
    if (lo == hi)
      continue;

    std::vector<Subgroup> descending;
    Subgroup cur = hi;
    for (;;) {
      auto next = maximal_normal_between(lo, cur);
      if (next == lo)
        break;
      descending.push_back(next);
      cur = std::move(next);
    }
    for (auto it = descending.rbegin(); it != descending.rend(); ++it)
      out.push(*it);
    out.push(hi, i + 1 < chain.labels.size() ? chain.labels[i + 1] : "");
  }
  return out;
}

std::string CompositionFactor::name() const
{
  return (abelian ? "Z" : "N") + std::to_string(order);
}

std::vector<CompositionFactor> chain_factors(Chain const &chain)
{
  std::vector<CompositionFactor> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto const &lo = chain.groups[i];
    auto const &hi = chain.groups[i + 1];
    if (lo == hi)
      continue;
    auto const q = quotient_group(hi, lo);
    out.push_back({q.group->order(), q.group->is_abelian()});
  }
  return out;
}

std::vector<CompositionFactor> jordan_holder_factors(Subgroup const &h)
{
  Chain c;
  c.push(Subgroup::trivial(h.parent()));
  c.push(h);
  auto factors = chain_factors(composition_refinement(c));
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::size_t eta(Subgroup const &h)
{
  return jordan_holder_factors(h).size();
}

} // namespace gtrellis
