#pragma once

#include <compare>
#include <string>

namespace afkg::rdf {

/// Kind order doubles as the global term sort order:
/// IRIs first, then blank nodes, then literals.
enum class TermKind { Iri = 0, BlankNode = 1, Literal = 2 };

/// One RDF term. IRIs carry the absolute IRI in `value`, blank nodes their
/// local label, literals their lexical form plus an optional language tag or
/// datatype IRI (never both).
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;
  std::string lang;      // literals only
  std::string datatype;  // literals only

  static Term iri(std::string v);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string lang = "",
                      std::string datatype = "");

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_blank() const { return kind == TermKind::BlankNode; }
  bool is_literal() const { return kind == TermKind::Literal; }

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

  /// N-Triples rendering: <iri>, _:label, "lexical"@lang / ^^<dt>.
  std::string to_ntriples() const;
};

/// True if the string starts with an IRI scheme ("letters-digits+.-:").
bool has_iri_scheme(const std::string& s);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

}  // namespace afkg::rdf
