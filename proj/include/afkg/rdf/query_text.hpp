#pragma once

#include <map>
#include <string>

#include "afkg/rdf/bgp.hpp"

namespace afkg::rdf {

/// Reads a SELECT query in the plain-text form
///
///   PREFIX p: <iri>          (repeatable; '@prefix p: <iri> .' also accepted)
///   SELECT [DISTINCT] ?a ?b
///   WHERE {
///     ?a p:x ?b .
///     { ?b a p:T1 } UNION { ?b a p:T2 }
///     ?b p:y "lit"
///   }
///
/// Triple patterns support `;` and `,` lists and the `a` keyword; the dot
/// before `}` or a UNION block is optional. `default_prefixes` seeds the
/// prefix map (declarations in the query override it), so a query can rely
/// on the prefixes of the data it targets. Throws ParseError on bad syntax.
BgpQuery parse_query(const std::string& text,
                     const std::map<std::string, std::string>& default_prefixes = {});

}  // namespace afkg::rdf
