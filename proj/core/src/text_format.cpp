#include "gtrellis/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gtrellis/errors.hpp"

namespace gtrellis {

namespace {

struct Line
{
  std::size_t number;
  std::vector<std::string> tokens;
};

class LineReader
{
public:
  explicit LineReader(std::istream &in)
  {
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
      ++number;
      if (auto hash = text.find('#'); hash != std::string::npos)
        text.erase(hash);
      std::istringstream ss(text);
      Line line{number, {}};
      for (std::string tok; ss >> tok;)
        line.tokens.push_back(tok);
      if (!line.tokens.empty())
        lines_.push_back(std::move(line));
    }
    last_line_ = number;
  }

  bool done() const { return pos_ == lines_.size(); }
  Line const &peek() const { return lines_[pos_]; }

  Line const &next(std::string const &expected)
  {
    if (done())
      throw ParseError(last_line_, "unexpected end of input, expected " +
                                       expected);
    return lines_[pos_++];
  }

  std::size_t last_line() const { return last_line_; }

private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

std::size_t parse_index(std::string const &tok, std::size_t line)
{
  std::size_t value = 0;
  auto const *end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  return value;
}

// Value of a `key=<n>` token.
std::size_t parse_keyed(std::string const &tok, std::string const &key,
                        std::size_t line)
{
  std::string const prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0)
    throw ParseError(line, "expected " + prefix + "<n>, got '" + tok + "'");
  return parse_index(tok.substr(prefix.size()), line);
}

GroupPtr read_group(LineReader &r)
{
  auto const &header = r.next("group header");
  if (header.tokens.size() != 2 || header.tokens[0] != "group")
    throw ParseError(header.number, "expected 'group order=<n>'");
  std::size_t const n = parse_keyed(header.tokens[1], "order", header.number);
  if (n == 0)
    throw ParseError(header.number, "group order must be positive");

  std::vector<std::vector<Element>> table;
  for (std::size_t i = 0; i < n; ++i) {
    std::ostringstream what;
    what << "row " << i << " of the group table";
    auto const &row = r.next(what.str());
    if (row.tokens.size() != n) {
      std::ostringstream ss;
      ss << "row " << i << " has " << row.tokens.size() << " entries, expected "
         << n;
      throw ParseError(row.number, ss.str());
    }
    std::vector<Element> values;
    for (auto const &tok : row.tokens) {
      std::size_t const v = parse_index(tok, row.number);
      if (v >= n) {
        std::ostringstream ss;
        ss << "row " << i << " entry " << v << " is out of range";
        throw ParseError(row.number, ss.str());
      }
      values.push_back(v);
    }
    table.push_back(std::move(values));
  }
  return FiniteGroup::from_table(table);
}

// Reads `<keyword>: <count indices>` where the indices may wrap.
std::vector<Element> read_index_list(LineReader &r, std::string const &keyword,
                                     std::size_t count, std::size_t bound)
{
  auto const &first = r.next(keyword + ":");
  if (first.tokens.front() != keyword + ":")
    throw ParseError(first.number, "expected '" + keyword + ":'");

  std::vector<Element> out;
  auto take = [&](Line const &line, std::size_t from) {
    for (std::size_t t = from; t < line.tokens.size(); ++t) {
      if (out.size() == count)
        throw ParseError(line.number, "too many entries after " + keyword);
      std::size_t const v = parse_index(line.tokens[t], line.number);
      if (v >= bound) {
        std::ostringstream ss;
        ss << keyword << " entry " << v << " is not a state";
        throw ParseError(line.number, ss.str());
      }
      out.push_back(v);
    }
  };
  take(first, 1);
  while (out.size() < count) {
    std::ostringstream what;
    what << count - out.size() << " more " << keyword << " entries";
    take(r.next(what.str()), 0);
  }
  return out;
}

void expect_keyword(LineReader &r, std::string const &keyword)
{
  auto const &line = r.next(keyword);
  if (line.tokens.size() != 1 || line.tokens[0] != keyword)
    throw ParseError(line.number, "expected '" + keyword + "'");
}

void expect_end(LineReader const &r)
{
  if (!r.done())
    throw ParseError(r.peek().number, "unexpected trailing content");
}

} // namespace

GroupPtr parse_group(std::istream &in)
{
  LineReader r(in);
  auto g = read_group(r);
  expect_end(r);
  return g;
}

GroupPtr parse_group(std::string const &text)
{
  std::istringstream in(text);
  return parse_group(in);
}

std::string format_group(FiniteGroup const &g)
{
  std::ostringstream out;
  out << "group order=" << g.order() << "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b)
      out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
  return out.str();
}

SectionDocument parse_section(std::istream &in, std::string source)
{
  LineReader r(in);
  auto const &head = r.next("'section' or 'builder'");

  if (head.tokens[0] == "builder") {
    if (head.tokens.size() >= 2 && head.tokens[1] == "shift_register") {
      if (head.tokens.size() != 4)
        throw ParseError(head.number,
                         "expected 'builder shift_register p=<p> m=<m>'");
      std::size_t const p = parse_keyed(head.tokens[2], "p", head.number);
      std::size_t const m = parse_keyed(head.tokens[3], "m", head.number);
      if (p < 2 || m < 1)
        throw ParseError(head.number, "shift register needs p >= 2, m >= 1");
      expect_end(r);
      return {std::move(source), shift_register_section(p, m),
              "shift_register"};
    }
    if (head.tokens.size() >= 2 && head.tokens[1] == "complete") {
      if (head.tokens.size() > 3 ||
          (head.tokens.size() == 3 && head.tokens[2] != "group="))
        throw ParseError(head.number,
                         "expected 'builder complete group=' and a group block");
      auto s = read_group(r);
      expect_end(r);
      return {std::move(source), complete_section(s), "complete"};
    }
    throw ParseError(head.number, "unknown builder");
  }

  if (head.tokens.size() != 1 || head.tokens[0] != "section")
    throw ParseError(head.number, "expected 'section' or 'builder'");

  expect_keyword(r, "states:");
  auto s = read_group(r);
  expect_keyword(r, "branches:");
  auto b = read_group(r);
  auto left = read_index_list(r, "left", b->order(), s->order());
  auto right = read_index_list(r, "right", b->order(), s->order());
  expect_end(r);
  return {std::move(source),
          TrellisSection::from_parts(b, s, std::move(left), std::move(right)),
          "file"};
}

SectionDocument parse_section_text(std::string const &text, std::string source)
{
  std::istringstream in(text);
  return parse_section(in, std::move(source));
}

SectionDocument load_section(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open " + path.string());
  return parse_section(in, path.string());
}

std::string format_section(TrellisSection const &section)
{
  std::ostringstream out;
  out << "section\nstates:\n" << format_group(section.s());
  out << "branches:\n" << format_group(section.b());
  out << "left:";
  for (Element v : section.left_map())
    out << " " << v;
  out << "\nright:";
  for (Element v : section.right_map())
    out << " " << v;
  out << "\n";
  return out.str();
}

} // namespace gtrellis
