#pragma once

#include <string>
#include <string_view>

#include "recip/graph.hpp"

namespace recip {

enum class GraphFormat { kAuto, kJson, kText };

/// Parses a coloured graph.
///
/// JSON: {"vertices":[{"id":1,"colour":"v1"},...],
///        "edges":[{"u":1,"v":2,"colour":"e1"},...]}
/// Vertex ids must be exactly 1..n (any order). Colours may be strings or
/// integers.
///
/// Plain text: a header line `n d`, then `v <id> <colour>` lines and
/// `e <u> <v> <colour>` lines. `#` starts a comment; blank lines are
/// ignored. `d` must equal the number of distinct colours used.
///
/// kAuto picks JSON when the first non-blank character is '{'. Throws
/// ParseError (with a line/field locus) or ValidationError.
ColouredGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

ColouredGraph read_graph_file(const std::string& path);

/// Canonical serializations; colour k is written as "c<k>".
std::string to_json(const ColouredGraph& g);
std::string to_text(const ColouredGraph& g);

}  // namespace recip
