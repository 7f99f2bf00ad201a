#pragma once

#include <string>

#include "annular/diagram.hpp"

namespace annular {

// Line-oriented diagram documents:
//   X i: a b c d      crossing i, edge labels in CCW slots 0..3
//   O k: dotted|plain loop k
//   puncture: i.s     corner token, or `unbounded`
//   outer: i.s        likewise
//   orient: k=reversed [k=reversed ...]
// `#` starts a comment; blank lines are skipped. Marker lines may be
// omitted (treated as unbounded). Crossing and loop indices must cover
// 0..count-1. Structural slips (bad syntax, edge multiplicity, slot out
// of range) throw ParseError with the offending line; planarity is
// deferred to validate().
AnnularDiagram parse_diagram(const std::string& text);

// Canonical text: X lines ascending, then O lines, both markers (always
// written, `unbounded` spelled out), then one orient line when flags are
// present, sorted. parse(serialize(d)) == d; serialize(parse(t)) == t
// for canonical t.
std::string serialize_diagram(const AnnularDiagram& d);

// Structured-object equivalent, same field names; corner tokens and loop
// kinds as strings. Compact single-line JSON with trailing newline;
// byte-identical through parse -> serialize.
AnnularDiagram parse_diagram_object(const std::string& text);
std::string serialize_diagram_object(const AnnularDiagram& d);

}  // namespace annular
