#include "gtrellis/encoder.hpp"

#include <deque>
#include <set>
#include <sstream>

#include "gtrellis/errors.hpp"

namespace gtrellis {

Encoder::Encoder(TablePtr table)
  : table_(std::move(table)),
    window_(static_cast<std::size_t>(table_->ell()),
            std::vector<std::size_t>(table_->families.size(), 0)),
    state_(table_->section.b().identity())
{}

void Encoder::recompute_state()
{
  auto const &g = table_->section.b();
  state_ = g.identity();
  for (auto const &cell : table_->cells) {
    if (cell.column == 0)
      continue;
    auto const age = static_cast<std::size_t>(cell.column - 1);
    state_ = g.mul(state_, cell.reps[window_[age][cell.family]]);
  }
}

Element Encoder::step(Element x)
{
  auto const &g = table_->section.b();
  if (x >= g.order() || !table_->chains.x(0).contains(x)) {
    std::ostringstream ss;
    ss << "input " << x << " is not in X_0";
    throw NotInX0(ss.str());
  }

  auto const f = factorize(*table_, x);
  std::vector<std::size_t> selection(table_->families.size(), 0);
  for (std::size_t fam = 0; fam < table_->families.size(); ++fam)
    selection[fam] = f.parts[table_->start_cell(fam)];

  Element const out = g.mul(x, state_);
  if (!window_.empty()) {
    window_.pop_back();
    window_.insert(window_.begin(), std::move(selection));
  }
  ++time_;
  recompute_state();
  return out;
}

std::vector<Element> Encoder::register_view(Element x) const
{
  auto const &g = table_->section.b();
  std::vector<Element> h(static_cast<std::size_t>(table_->ell()) + 1,
                         g.identity());
  h[0] = x;
  for (auto const &cell : table_->cells) {
    if (cell.column == 0)
      continue;
    auto const a = static_cast<std::size_t>(cell.column);
    h[a] = g.mul(h[a], cell.reps[window_[a - 1][cell.family]]);
  }
  return h;
}

Element Encoder::seed(Element branch)
{
  auto const &t = *table_;
  auto const &g = t.section.b();
  auto const f = factorize(t, branch);
  for (auto &age : window_)
    std::fill(age.begin(), age.end(), 0);

  Element x = g.identity();
  for (std::size_t n = 0; n < t.cells.size(); ++n) {
    auto const &cell = t.cells[n];
    if (cell.column == 0)
      x = g.mul(x, cell.reps[f.parts[n]]);
    else
      window_[static_cast<std::size_t>(cell.column - 1)][cell.family] =
          f.parts[n];
  }
  recompute_state();
  return x;
}

TrackResult track(TablePtr const &table, PathSegment const &target,
                  Element initial)
{
  auto const &section = table->section;
  auto const &g = section.b();
  if (target.branches.empty() || !is_valid_path(section, target))
    throw InvalidPath("target is not a valid path");
  if (target.branches.front() != initial) {
    std::ostringstream ss;
    ss << "initial branch " << initial << " differs from the path start "
       << target.branches.front();
    throw InitialMismatch(ss.str());
  }

  TrackResult out;
  Encoder enc(table);
  Element x = enc.seed(initial);
  for (std::size_t t = 0; t < target.size(); ++t) {
    if (t > 0) {
      x = g.mul(target.branches[t], g.inv(enc.state()));
      if (!table->chains.x(0).contains(x)) {
        std::ostringstream ss;
        ss << "epoch " << t << ": b* state^-1 = " << x << " is not in X_0";
        throw VerificationFailed(ss.str());
      }
    }
    out.inputs.push_back(x);
    out.reproduced.branches.push_back(enc.step(x));
  }
  out.exact = out.reproduced == target;
  return out;
}

PathSegment impulse_response(TablePtr const &table, std::size_t family,
                             std::size_t position)
{
  if (family >= table->families.size() ||
      position >= table->families[family].paths.size())
    throw IndexOutOfRange("no such generator");

  auto const &g = table->section.b();
  Encoder enc(table);
  PathSegment out;
  out.branches.push_back(
      enc.step(table->families[family].paths[position].branches.front()));
  for (int t = 0; t <= table->ell(); ++t)
    out.branches.push_back(enc.step(g.identity()));
  return out;
}

std::vector<Element> inputs_for(TablePtr const &table, Element b)
{
  auto const &t = *table;
  auto const &g = t.section.b();
  auto const f = factorize(t, b);
  auto const ell = static_cast<std::size_t>(t.ell());

  // positions[a][family]: selection needed a epochs before the last one.
  std::vector<std::vector<std::size_t>> positions(
      ell + 1, std::vector<std::size_t>(t.families.size(), 0));
  for (std::size_t n = 0; n < t.cells.size(); ++n)
    positions[static_cast<std::size_t>(t.cells[n].column)][t.cells[n].family] =
        f.parts[n];

  std::vector<Element> inputs;
  for (std::size_t e = 0; e <= ell; ++e) {
    auto const &sel = positions[ell - e];
    Element x = g.identity();
    for (auto const &cell : t.cells)
      if (cell.column == 0)
        x = g.mul(x, cell.reps[sel[cell.family]]);
    inputs.push_back(x);
  }
  return inputs;
}

std::vector<Element> reachable_states(TablePtr const &table)
{
  auto const inputs = table->chains.x(0).elements();
  std::set<std::vector<std::vector<std::size_t>>> seen;
  std::set<Element> states;
  std::deque<Encoder> queue{Encoder(table)};
  seen.insert(queue.front().window());
  while (!queue.empty()) {
    Encoder enc = std::move(queue.front());
    queue.pop_front();
    states.insert(enc.state());
    for (Element x : inputs) {
      Encoder next = enc;
      next.step(x);
      if (seen.insert(next.window()).second)
        queue.push_back(std::move(next));
    }
  }
  return {states.begin(), states.end()};
}

std::vector<int> degradation_profile(TrellisSection const &section,
                                     ChainPair const &c, PathSegment const &a,
                                     PathSegment const &b)
{
  if (!is_valid_path(section, a) || !is_valid_path(section, b))
    throw InvalidPath("degradation profile needs valid paths");
  if (a.size() != b.size())
    throw LengthMismatch("degradation profile needs paths of equal length");
  if (a.branches.empty() || a.branches.front() != b.branches.front())
    throw FirstBranchMismatch("paths differ in their first branch");

  auto const &g = section.b();
  std::vector<int> out;
  for (std::size_t d = 0; d < a.size(); ++d) {
    Element const diff = g.mul(b.branches[d], g.inv(a.branches[d]));
    int r = -1;
    while (!c.x(r).contains(diff))
      ++r;
    if (d >= 1 && static_cast<int>(d) <= c.ell() &&
        r > static_cast<int>(d) - 1) {
      std::ostringstream ss;
      ss << "offset " << d << " lies in X_" << r << " only";
      throw VerificationFailed(ss.str());
    }
    out.push_back(r);
  }
  return out;
}

} // namespace gtrellis
