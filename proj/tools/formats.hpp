#pragma once

// Line-oriented text formats. '#' starts a comment, blank lines are ignored.
//
//   .tree / .sigma  one binary string per line, ε written as "-"
//   .color          "n <N>" header, then "x y c" for every 0 <= x < y <= N
//   .enum           "e s x": element x enters W_e at stage s >= 1
//   .set            one natural per line, strictly increasing
//   .stages         "s τ": string τ enters the tree at stage s
//
// Writers emit the canonical form: strings by (length, lex), pairs by (y, x),
// events by (e, s, x), stage entries by s.

#include <iosfwd>
#include <string>
#include <vector>

#include "rkl/coloring.hpp"
#include "rkl/diagonal.hpp"
#include "rkl/family.hpp"
#include "rkl/natset.hpp"
#include "rkl/reductions.hpp"
#include "rkl/tree.hpp"

namespace rkl::io {

/// With `close` the strings are prefix-closed instead of validated.
FinTree read_tree(std::istream& in, bool close = false);
StringFamily read_family(std::istream& in);
PairColoring read_coloring(std::istream& in);
StagedEnum read_enum(std::istream& in);
NatSet read_set(std::istream& in);
std::vector<StageEntry> read_stages(std::istream& in);

void write_tree(std::ostream& out, const FinTree& t);
void write_family(std::ostream& out, const StringFamily& f);
void write_coloring(std::ostream& out, const PairColoring& f);
void write_enum(std::ostream& out, const StagedEnum& e);
void write_set(std::ostream& out, const NatSet& s);
void write_stages(std::ostream& out, const std::vector<StageEntry>& entries);

/// The file's text; throws ParseError if it cannot be opened.
std::string slurp(const std::string& path);

} // namespace rkl::io
