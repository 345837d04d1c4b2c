#pragma once

#include <optional>
#include <string>

#include "afkg/rdf/graph.hpp"

namespace afkg::rdf {

/// Parses the Turtle subset used by the MetaNet data files:
/// @prefix / PREFIX, @base / BASE, absolute IRIs in angle brackets, prefixed
/// names, `a`, string literals with language tags and `^^` datatypes,
/// integer/decimal shorthand, `;` and `,` separators, `#` comments, and
/// labeled blank nodes. Collections and anonymous blank nodes are rejected.
/// Throws ParseError with line/column on malformed input.
Graph parse_turtle(const std::string& text,
                   std::optional<std::string> base_iri = std::nullopt);

/// Deterministic Turtle output: prefix declarations sorted by prefix, then
/// triples sorted by (subject, predicate, object) term order, one per line.
/// Prefixes are applied greedily by longest namespace match.
std::string serialize_turtle(const Graph& g);

/// One triple per line, absolute IRIs in angle brackets, " ." terminated,
/// sorted by (subject, predicate, object).
std::string serialize_ntriples(const Graph& g);

}  // namespace afkg::rdf
