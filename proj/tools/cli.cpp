#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "gtrellis/encoder.hpp"
#include "gtrellis/errors.hpp"
#include "gtrellis/generators.hpp"
#include "gtrellis/refinement.hpp"
#include "gtrellis/schreier.hpp"
#include "gtrellis/search.hpp"
#include "gtrellis/text_format.hpp"
#include "gtrellis/verify.hpp"
#include "report.hpp"

namespace gtrellis::cli {

namespace {

struct Options
{
  std::string section;
  std::string input;
  std::string group;
  std::string out_dir;
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
  bool machine = false;
  bool refined = false;
  bool states = false;
  bool nonabelian = false;
  int min_ell = 0;
  std::size_t max_order = search_order_cap;
};

struct Token
{
  std::size_t value;
  std::size_t line;
};

std::vector<Token> read_stream(std::istream &in)
{
  std::vector<Token> out;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    std::istringstream ss(text);
    for (std::string tok; ss >> tok;) {
      std::size_t value = 0;
      auto const *end = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(tok.data(), end, value);
      if (ec != std::errc() || ptr != end)
        throw ParseError(line, "expected an element index, got '" + tok + "'");
      out.push_back({value, line});
    }
  }
  return out;
}

std::vector<Token> read_input(Options const &opt, std::istream &in)
{
  if (opt.input.empty())
    return read_stream(in);
  std::ifstream file(opt.input);
  if (!file)
    throw ParseError(0, "cannot open " + opt.input);
  return read_stream(file);
}

std::string num(std::size_t v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

std::string orders_of(Chain const &chain)
{
  std::vector<std::size_t> v;
  for (auto const &g : chain.groups)
    v.push_back(g.order());
  return join(v);
}

void summary(Report &r, SectionDocument const &doc)
{
  r.field("source", "section", doc.source);
  r.field("provenance", "provenance", doc.provenance);
  r.field("branch_order", "|B|", num(doc.section.b().order()));
  r.field("state_order", "|S|", num(doc.section.s().order()));
  r.field("branch_abelian", "B abelian",
          doc.section.b().is_abelian() ? "yes" : "no");
}

void matrix_grid(Report &r, SchreierMatrixForm const &m, std::string const &key,
                 std::string const &title, std::string const &legend)
{
  std::vector<std::string> rows, cols;
  for (int k = -1; k <= m.ell; ++k)
    rows.push_back(num(k));
  for (int j = 0; j <= m.ell; ++j)
    cols.push_back(num(j));
  std::vector<std::vector<std::string>> cells;
  for (int k = -1; k <= m.ell; ++k) {
    std::vector<std::string> row;
    for (int j = 0; j <= m.ell; ++j)
      row.push_back(num(m.entry(j, k).order()));
    cells.push_back(std::move(row));
  }
  r.grid(key, title, "k\\j", rows, cols, cells, legend);
}

int cmd_analyze(SectionDocument const &doc, Report &r)
{
  auto const &s = doc.section;
  summary(r, doc);
  auto const c = chains(s);
  r.field("controllable", "controllable", "yes");
  r.field("ell", "ell", num(c.ell()));
  r.field("x_orders", "|X_j|, j = -1..ell", orders_of(c.x_chain()));
  r.field("y_orders", "|Y_k|, k = -1..ell", orders_of(c.y_chain()));
  r.field("eta", "eta(B)", num(eta(s.whole())));

  auto const m = schreier_matrix(c);
  auto const d = dual_matrix(c);
  matrix_grid(r, m, "matrix", "Schreier matrix (orders)",
              "entry at row k, column j: |X_(j-1)(X_j ∩ Y_k)|");
  matrix_grid(r, d, "dual", "Dual matrix (orders)",
              "entry at row k, column j: |Y_(j-1)(Y_j ∩ X_k)|");
  r.field("diagonal_ok", "diagonal test", m.controllable ? "pass" : "fail");
  r.field("dual_diagonal_ok", "dual diagonal test",
          d.controllable ? "pass" : "fail");

  auto const t = controllable_form(m);
  std::vector<std::string> rows, cols;
  for (int row = 0; row <= t.ell; ++row)
    rows.push_back(num(row));
  for (int j = 0; j <= t.ell; ++j)
    cols.push_back(num(j));
  std::vector<std::vector<std::string>> cells;
  for (int row = 0; row <= t.ell; ++row) {
    std::vector<std::string> line;
    for (int j = 0; j <= t.ell; ++j)
      line.push_back(num(t.columns[static_cast<std::size_t>(j)]
                                  [static_cast<std::size_t>(row)]
                                      .order()));
    cells.push_back(std::move(line));
  }
  r.grid("triangular", "Controllable form (orders)", "r\\j", rows, cols, cells,
         "entry at row r, column j: |X_(j-1)(X_j ∩ Y_(r-j))|; row ell is X_j");
  return exit_ok;
}

int cmd_verify(SectionDocument const &doc, Options const &opt, Report &r)
{
  summary(r, doc);
  VerifyOptions vo;
  vo.seed = opt.seed;
  vo.suites.insert(opt.suites.begin(), opt.suites.end());
  r.field("seed", "seed", num(static_cast<std::size_t>(opt.seed)));

  auto const ledger = run_verification(doc.section, vo);
  r.heading("checks");
  for (std::size_t i = 0; i < ledger.checks.size(); ++i) {
    auto const &c = ledger.checks[i];
    std::string const key = "check." + num(i);
    r.record(key + ".name", c.suite + ": " + c.name);
    r.record(key + ".status", c.pass ? "pass" : "fail");
    if (!c.pass)
      r.record(key + ".witness", c.witness);
    r.line(std::string(c.pass ? "PASS " : "FAIL ") + c.suite + ": " + c.name +
           (c.pass ? "" : "  witness: " + c.witness));
  }
  r.heading("summary");
  r.field("checks", "checks", num(ledger.checks.size()));
  r.field("failures", "failures", num(ledger.failures()));
  r.field("verdict", "verdict", ledger.all_pass() ? "PASS" : "FAIL");
  return ledger.all_pass() ? exit_ok : exit_verification;
}

TablePtr build_table(TrellisSection const &s, bool refined)
{
  return std::make_shared<GeneratorTable const>(
      refined ? refined_representative_array(s) : representative_array(s));
}

std::string path_text(PathSegment const &p) { return join(p.branches); }

int cmd_generators(SectionDocument const &doc, Options const &opt, Report &r)
{
  summary(r, doc);
  auto const table = build_table(doc.section, opt.refined);
  r.field("table", "table", opt.refined ? "refined" : "coarse");
  r.field("ell", "ell", num(table->ell()));
  auto const et = eta_check(*table);
  r.field("eta", "eta(B)", num(et.eta_b));
  r.field("cells_product", "product of cell sizes", num(et.cells_product));
  r.field("nontrivial_cells", "nontrivial cells", num(et.nontrivial_cells));

  r.heading("cells (chain order)");
  for (std::size_t n = 0; n < table->cells.size(); ++n) {
    auto const &cell = table->cells[n];
    std::string const key = "cell." + num(n);
    r.record(key + ".label", cell.label());
    r.record(key + ".size", num(cell.reps.size()));
    r.record(key + ".reps", join(cell.reps));
    r.line(cell.label() + "  |upper/lower| = " + num(cell.reps.size()) +
           "  reps: " + join(cell.reps));
  }

  r.heading("generators");
  for (std::size_t f = 0; f < table->families.size(); ++f) {
    auto const &fam = table->families[f];
    std::string name = "span " + num(fam.span);
    if (fam.rho)
      name += " rho " + num(*fam.rho) + " sigma " + num(fam.sigma);
    for (std::size_t p = 1; p < fam.paths.size(); ++p) {
      r.record("generator." + num(f) + "." + num(p), path_text(fam.paths[p]));
      r.line(name + " #" + num(p) + ": " + path_text(fam.paths[p]));
    }
  }
  return exit_ok;
}

int cmd_encode(SectionDocument const &doc, Options const &opt, std::istream &in,
               std::ostream &out, Report &r)
{
  auto const tokens = read_input(opt, in);
  auto const table = build_table(doc.section, opt.refined);
  Encoder enc(table);
  std::vector<std::size_t> branches, states;
  for (auto const &t : tokens) {
    if (t.value >= doc.section.b().order())
      throw ParseError(t.line, "input " + num(t.value) + " is not a branch");
    states.push_back(enc.state());
    try {
      branches.push_back(enc.step(t.value));
    } catch (NotInX0 const &e) {
      throw NotInX0("line " + num(t.line) + ": " + e.what());
    }
  }
  if (r.machine()) {
    r.record("epochs", num(branches.size()));
    r.record("branches", join(branches));
    if (opt.states)
      r.record("states", join(states));
    return exit_ok;
  }
  for (std::size_t i = 0; i < branches.size(); ++i) {
    out << branches[i];
    if (opt.states)
      out << " state=" << states[i];
    out << "\n";
  }
  return exit_ok;
}

int cmd_track(SectionDocument const &doc, Options const &opt, std::istream &in,
              Report &r)
{
  auto const &s = doc.section;
  auto const tokens = read_input(opt, in);
  if (tokens.empty())
    throw ParseError(0, "track needs at least one branch");
  PathSegment target;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto const &t = tokens[i];
    if (t.value >= s.b().order())
      throw ParseError(t.line, "branch " + num(t.value) + " is out of range");
    if (i > 0 && s.right(target.branches.back()) != s.left(t.value))
      throw InvalidPath("line " + num(t.line) + ": branch " + num(t.value) +
                        " does not follow branch " +
                        num(target.branches.back()));
    target.branches.push_back(t.value);
  }

  auto const table = build_table(s, opt.refined);
  auto const result = track(table, target, target.branches.front());
  r.field("inputs", "inputs", join(result.inputs));
  r.field("reproduced", "reproduced", path_text(result.reproduced));
  r.field("verdict", "verdict", result.exact ? "EXACT" : "FAIL");
  return result.exact ? exit_ok : exit_verification;
}

int cmd_compose(SectionDocument const &doc, Report &r)
{
  auto const &s = doc.section;
  summary(r, doc);
  auto const c = chains(s);
  r.field("ell", "ell", num(c.ell()));
  auto const x = x_composition_chain(s, c);

  r.heading("indexed composition chain");
  std::size_t n = 0;
  std::size_t last = 0;
  for (auto const &t : x.terms) {
    if (t.group.order() == last && t.sigma == 0)
      continue;
    last = t.group.order();
    std::string const label =
        "(" + num(t.column) + "," + num(t.row) + "," + num(t.sigma) + ")";
    r.record("chain." + num(n++), label + " " + num(t.group.order()));
    r.line(label + " order=" + num(t.group.order()));
  }

  auto const pages = schreier_array(s, c);
  std::vector<std::string> rows, cols;
  for (int k = 0; k <= c.ell(); ++k)
    rows.push_back(num(k));
  for (int j = 0; j <= c.ell(); ++j)
    cols.push_back(num(j));
  std::vector<std::vector<std::string>> cells;
  for (int k = 0; k <= c.ell(); ++k) {
    std::vector<std::string> line;
    for (int j = 0; j <= c.ell(); ++j)
      line.push_back(j + k <= c.ell() ? num(pages.page_length(j, k)) : "");
    cells.push_back(std::move(line));
  }
  r.grid("page", "Page lengths", "k\\j", rows, cols, cells,
         "entry at row k, column j: simple steps between matrix entries "
         "(j,k-1) and (j,k)");
  r.field("page_maps_verified", "page maps verified",
          num(pages.maps_verified));

  auto factors = pages.factors();
  std::sort(factors.begin(), factors.end());
  std::string names;
  for (auto const &f : factors)
    names += (names.empty() ? "" : " ") + f.name();
  r.field("factors", "composition factors", names);
  r.field("eta", "eta(B)", num(factors.size()));
  auto const sv = solvability_equivalence(s);
  r.field("solvable", "B solvable", sv.b_solvable ? "yes" : "no");
  r.field("x0_solvable", "X0 solvable", sv.x0_solvable ? "yes" : "no");
  r.field("solvability_agrees", "agreement", sv.agree() ? "yes" : "no");
  return sv.agree() ? exit_ok : exit_verification;
}

int cmd_search(Options const &opt, Report &r)
{
  if (opt.group.empty())
    throw ParseError(0, "search needs --group FILE");
  std::ifstream file(opt.group);
  if (!file)
    throw ParseError(0, "cannot open " + opt.group);
  auto const s = parse_group(file);

  SearchFilter filter;
  filter.max_branch_order = opt.max_order;
  filter.nonabelian = opt.nonabelian;
  filter.min_ell = opt.min_ell;
  auto const hits = search_subdirect(s, filter);

  r.field("state_order", "|S|", num(s->order()));
  r.field("hits", "hits", num(hits.size()));
  if (!opt.out_dir.empty())
    std::filesystem::create_directories(opt.out_dir);
  for (std::size_t i = 0; i < hits.size(); ++i) {
    auto const &h = hits[i];
    std::string const key = "hit." + num(i);
    r.record(key + ".branch_order", num(h.section.b().order()));
    r.record(key + ".ell", num(h.ell));
    r.record(key + ".nonabelian", h.nonabelian ? "yes" : "no");
    std::string file_note;
    if (!opt.out_dir.empty()) {
      auto const path =
          std::filesystem::path(opt.out_dir) / ("hit_" + num(i) + ".sec");
      std::ofstream f(path);
      f << "# search hit " << i << ": |B|=" << h.section.b().order()
        << " ell=" << h.ell << "\n"
        << format_section(h.section);
      if (!f)
        throw ParseError(0, "cannot write " + path.string());
      r.record(key + ".file", path.string());
      file_note = "  -> " + path.string();
    }
    r.line("hit " + num(i) + ": |B|=" + num(h.section.b().order()) +
           " ell=" + num(h.ell) + (h.nonabelian ? " nonabelian" : " abelian") +
           file_note);
  }
  return exit_ok;
}

std::string witness(NotControllable const &e)
{
  std::vector<std::size_t> const &v = e.stable();
  return "{" + join(v, ",") + "}";
}

} // namespace

int run_cli(std::vector<std::string> const &args, std::istream &in,
            std::ostream &out, std::ostream &err)
{
  CLI::App app{"Group trellis sections: analysis, generators, encoding"};
  app.name("gtrellis");
  app.require_subcommand(1);
  Options opt;

  auto add_section = [&](CLI::App *cmd) {
    cmd->add_option("--section", opt.section, "Section file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_flag("--machine", opt.machine, "Flat key=value output");
  };
  auto add_table = [&](CLI::App *cmd) {
    cmd->add_flag("--refined", opt.refined,
                  "Use the composition-refined generator table");
  };
  auto add_stream = [&](CLI::App *cmd) {
    cmd->add_option("--input", opt.input,
                    "Index stream file (default: standard input)")
        ->check(CLI::ExistingFile);
  };

  auto *analyze = app.add_subcommand("analyze", "Chains, matrices and eta");
  add_section(analyze);

  auto *verify = app.add_subcommand("verify", "Run the invariant checks");
  add_section(verify);
  verify->add_option("--seed", opt.seed, "Seed for sampled checks");
  verify->add_option("--suite", opt.suites, "Suites to run")
      ->delimiter(',')
      ->check(CLI::IsMember(suite_names()));

  auto *generators = app.add_subcommand("generators", "Generator table");
  add_section(generators);
  add_table(generators);

  auto *encode = app.add_subcommand("encode", "Encode an input stream");
  add_section(encode);
  add_table(encode);
  add_stream(encode);
  encode->add_flag("--states", opt.states, "Also print the state per epoch");

  auto *trk = app.add_subcommand("track", "Find inputs for a branch stream");
  add_section(trk);
  add_table(trk);
  add_stream(trk);

  auto *compose = app.add_subcommand("compose", "Composition refinement");
  add_section(compose);

  auto *search = app.add_subcommand("search", "Search subdirect products");
  search->add_option("--group", opt.group, "State group file")
      ->required()
      ->check(CLI::ExistingFile);
  search->add_flag("--nonabelian", opt.nonabelian, "Only nonabelian B");
  search->add_option("--min-ell", opt.min_ell, "Minimum ell");
  search->add_option("--max-order", opt.max_order, "Maximum |B|");
  search->add_option("--out-dir", opt.out_dir, "Write each hit as a file");
  search->add_flag("--machine", opt.machine, "Flat key=value output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Report report(out, opt.machine);
  try {
    if (search->parsed())
      return cmd_search(opt, report);

    auto const doc = load_section(opt.section);
    if (analyze->parsed())
      return cmd_analyze(doc, report);
    if (verify->parsed())
      return cmd_verify(doc, opt, report);
    if (generators->parsed())
      return cmd_generators(doc, opt, report);
    if (encode->parsed())
      return cmd_encode(doc, opt, in, out, report);
    if (trk->parsed())
      return cmd_track(doc, opt, in, report);
    if (compose->parsed())
      return cmd_compose(doc, report);
  } catch (NotControllable const &e) {
    report.field("controllable", "controllable", "no");
    report.field("stable", "X chain stabilizes at", witness(e));
    err << "error: " << e.what() << "\n";
    return exit_verification;
  } catch (VerificationFailed const &e) {
    report.field("verdict", "verdict", "FAIL");
    err << "error: " << e.what() << "\n";
    return exit_verification;
  } catch (Error const &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

} // namespace gtrellis::cli
