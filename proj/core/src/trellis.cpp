#include "gtrellis/trellis.hpp"

#include <algorithm>
#include <sstream>

#include "gtrellis/errors.hpp"

namespace gtrellis {

namespace {

Subgroup kernel(GroupPtr const &b, FiniteGroup const &s,
                std::vector<Element> const &map)
{
  ElementSet k = b->empty_set();
  for (Element x = 0; x < b->order(); ++x)
    if (map[x] == s.identity())
      k.set(x);
  return Subgroup::trusted(b, std::move(k));
}

void check_projection(FiniteGroup const &b, FiniteGroup const &s,
                      std::vector<Element> const &map, char const *name)
{
  if (map.size() != b.order()) {
    std::ostringstream ss;
    ss << name << " has " << map.size() << " entries, expected " << b.order();
    throw NotHomomorphism(ss.str());
  }
  for (Element x = 0; x < b.order(); ++x) {
    if (map[x] >= s.order()) {
      std::ostringstream ss;
      ss << name << "(" << x << ") = " << map[x] << " is not a state";
      throw NotHomomorphism(ss.str());
    }
  }
  for (Element x = 0; x < b.order(); ++x) {
    for (Element y = 0; y < b.order(); ++y) {
      if (map[b.mul(x, y)] != s.mul(map[x], map[y])) {
        std::ostringstream ss;
        ss << name << " is not a homomorphism at (" << x << ", " << y << ")";
        throw NotHomomorphism(ss.str());
      }
    }
  }
  std::vector<char> hit(s.order(), 0);
  for (Element v : map)
    hit[v] = 1;
  for (Element v = 0; v < s.order(); ++v) {
    if (!hit[v]) {
      std::ostringstream ss;
      ss << name << " misses state " << v;
      throw NotSubdirect(ss.str());
    }
  }
}

} // namespace

TrellisSection::TrellisSection(GroupPtr branches, GroupPtr states,
                               std::vector<Element> left,
                               std::vector<Element> right)
  : branches_(std::move(branches)),
    states_(std::move(states)),
    left_(std::move(left)),
    right_(std::move(right)),
    x0_(kernel(branches_, *states_, left_)),
    y0_(kernel(branches_, *states_, right_)),
    from_(states_->order())
{
  for (Element x = 0; x < branches_->order(); ++x)
    from_[left_[x]].push_back(x);
}

TrellisSection TrellisSection::from_parts(GroupPtr branches, GroupPtr states,
                                          std::vector<Element> left,
                                          std::vector<Element> right)
{
  check_projection(*branches, *states, left, "left");
  check_projection(*branches, *states, right, "right");

  std::size_t const n = states->order();
  std::vector<char> pair_seen(n * n, 0);
  for (Element x = 0; x < branches->order(); ++x) {
    if (pair_seen[left[x] * n + right[x]]++) {
      std::ostringstream ss;
      ss << "branch " << x << " repeats the state pair (" << left[x] << ", "
         << right[x] << ")";
      throw NotSubdirect(ss.str());
    }
  }
  return TrellisSection(std::move(branches), std::move(states),
                        std::move(left), std::move(right));
}

ElementSet TrellisSection::left_image(ElementSet const &u) const
{
  ElementSet out = states_->empty_set();
  for (auto x = u.find_first(); x != ElementSet::npos; x = u.find_next(x))
    out.set(left_[x]);
  return out;
}

ElementSet TrellisSection::right_image(ElementSet const &u) const
{
  ElementSet out = states_->empty_set();
  for (auto x = u.find_first(); x != ElementSet::npos; x = u.find_next(x))
    out.set(right_[x]);
  return out;
}

ElementSet TrellisSection::next_set(ElementSet const &u) const
{
  ElementSet const states = right_image(u);
  ElementSet out = branches_->empty_set();
  for (Element e = 0; e < branches_->order(); ++e)
    if (states.test(left_[e]))
      out.set(e);
  return out;
}

ElementSet TrellisSection::prev_set(ElementSet const &u) const
{
  ElementSet const states = left_image(u);
  ElementSet out = branches_->empty_set();
  for (Element e = 0; e < branches_->order(); ++e)
    if (states.test(right_[e]))
      out.set(e);
  return out;
}

Subgroup TrellisSection::next(Subgroup const &u) const
{
  return Subgroup::trusted(branches_, next_set(u.members()));
}

Subgroup TrellisSection::prev(Subgroup const &u) const
{
  return Subgroup::trusted(branches_, prev_set(u.members()));
}

TrellisSection shift_register_section(std::size_t p, std::size_t m)
{
  if (p < 2 || m < 1)
    throw TooLarge("shift register needs p >= 2 and m >= 1");
  std::size_t states = 1;
  for (std::size_t i = 0; i < m; ++i) {
    states *= p;
    if (states * p > branch_order_cap) {
      std::ostringstream ss;
      ss << "SR(" << p << "," << m << ") exceeds the branch order cap "
         << branch_order_cap;
      throw TooLarge(ss.str());
    }
  }

  auto b = elementary_abelian(p, m + 1);
  auto s = elementary_abelian(p, m);
  std::vector<Element> left(b->order()), right(b->order());
  for (Element x = 0; x < b->order(); ++x) {
    left[x] = x / p;
    right[x] = x % states;
  }
  return TrellisSection::from_parts(b, s, std::move(left), std::move(right));
}

TrellisSection complete_section(GroupPtr const &s)
{
  std::size_t const n = s->order();
  if (n * n > branch_order_cap)
    throw TooLarge("complete section exceeds the branch order cap");
  auto b = direct_product(*s, *s);
  std::vector<Element> left(b->order()), right(b->order());
  for (Element x = 0; x < b->order(); ++x) {
    left[x] = x / n;
    right[x] = x % n;
  }
  return TrellisSection::from_parts(b, s, std::move(left), std::move(right));
}

bool is_valid_path(TrellisSection const &section, PathSegment const &path)
{
  for (Element x : path.branches)
    if (x >= section.b().order())
      return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (section.right(path.branches[i]) != section.left(path.branches[i + 1]))
      return false;
  return true;
}

PathSegment componentwise_product(TrellisSection const &section,
                                  PathSegment const &a, PathSegment const &b)
{
  if (a.size() != b.size()) {
    std::ostringstream ss;
    ss << "segments of length " << a.size() << " and " << b.size();
    throw LengthMismatch(ss.str());
  }
  PathSegment out;
  out.branches.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.branches.push_back(section.b().mul(a.branches[i], b.branches[i]));
  return out;
}

std::vector<PathSegment> join_paths(TrellisSection const &section,
                                    ElementSet const &u, std::size_t l)
{
  std::vector<PathSegment> out;
  PathSegment cur;
  auto extend = [&](auto &&self) -> void {
    if (cur.size() == l + 1) {
      out.push_back(cur);
      return;
    }
    for (Element e : section.branches_from(section.right(cur.branches.back()))) {
      cur.branches.push_back(e);
      self(self);
      cur.branches.pop_back();
    }
  };
  for (auto x = u.find_first(); x != ElementSet::npos; x = u.find_next(x)) {
    cur.branches.assign(1, x);
    extend(extend);
  }
  return out;
}

ChainPair::ChainPair(Subgroup trivial, Subgroup whole, std::vector<Subgroup> x,
                     std::vector<Subgroup> y)
  : trivial_(std::move(trivial)),
    whole_(std::move(whole)),
    x_(std::move(x)),
    y_(std::move(y))
{}

Subgroup const &ChainPair::x(int j) const
{
  if (j < 0)
    return trivial_;
  if (j > ell())
    return whole_;
  return x_[static_cast<std::size_t>(j)];
}

Subgroup const &ChainPair::y(int k) const
{
  if (k < 0)
    return trivial_;
  if (k > ell())
    return whole_;
  return y_[static_cast<std::size_t>(k)];
}

Chain ChainPair::x_chain() const
{
  Chain c;
  for (int j = -1; j <= ell(); ++j)
    c.push(x(j), "X" + std::to_string(j));
  return c;
}

Chain ChainPair::y_chain() const
{
  Chain c;
  for (int k = -1; k <= ell(); ++k)
    c.push(y(k), "Y" + std::to_string(k));
  return c;
}

ChainPair chains(TrellisSection const &section)
{
  auto const whole = section.whole();

  auto grow = [&](Subgroup start, bool forward, char const *name) {
    std::vector<Subgroup> terms{std::move(start)};
    while (!(terms.back() == whole)) {
      auto next = forward ? section.next(terms.back())
                          : section.prev(terms.back());
      if (next == terms.back()) {
        std::ostringstream ss;
        ss << "not controllable: the " << name << " chain stabilizes at a "
           << "subgroup of order " << next.order() << " < " << whole.order();
        throw NotControllable(next.elements(), ss.str());
      }
      terms.push_back(std::move(next));
    }
    return terms;
  };

  auto x = grow(section.x0(), true, "X");
  auto y = grow(section.y0(), false, "Y");
  if (x.size() != y.size()) {
    std::ostringstream ss;
    ss << "X chain reaches B after " << x.size() - 1 << " steps, Y after "
       << y.size() - 1;
    throw VerificationFailed(ss.str());
  }
  return ChainPair(section.trivial(), whole, std::move(x), std::move(y));
}

ElementSet prev_in_pletty(TrellisSection const &section, ChainPair const &c,
                          int j, ElementSet const &u)
{
  if (j < 0 || j > c.ell()) {
    std::ostringstream ss;
    ss << "pletty index " << j << " outside 0.." << c.ell();
    throw IndexOutOfRange(ss.str());
  }
  return section.prev_set(u) & c.x(j).members();
}

} // namespace gtrellis
