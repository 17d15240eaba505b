#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "gtrellis/group.hpp"
#include "gtrellis/trellis.hpp"

namespace gtrellis {

// Group block:
//
//   group order=<n>
//   <n rows of n indices, row i = products i*j>
//
// Section file, either explicit:
//
//   section
//   states:
//   <group block>
//   branches:
//   <group block>
//   left: <|B| indices>
//   right: <|B| indices>
//
// or a builder line:
//
//   builder shift_register p=<p> m=<m>
//   builder complete group=
//   <group block>
//
// '#' starts a comment. Index lists may wrap across lines.

GroupPtr parse_group(std::istream &in);
GroupPtr parse_group(std::string const &text);

std::string format_group(FiniteGroup const &g);

/// A parsed section and where it came from.
struct SectionDocument
{
  std::string source;
  TrellisSection section;
  /// file, shift_register, complete or search
  std::string provenance;
};

/// Throws ParseError with the offending line, or the validation errors of
/// the group and section constructors.
SectionDocument parse_section(std::istream &in, std::string source = "<input>");
SectionDocument parse_section_text(std::string const &text,
                                   std::string source = "<input>");
SectionDocument load_section(std::filesystem::path const &path);

/// Canonical explicit form; parse_section inverts it exactly.
std::string format_section(TrellisSection const &section);

} // namespace gtrellis
