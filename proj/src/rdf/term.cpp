#include "afkg/rdf/term.hpp"

#include <cctype>

#include "afkg/error.hpp"

namespace afkg::rdf {

bool has_iri_scheme(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.')
      return false;
  }
  return false;
}

Term Term::iri(std::string v) {
  if (!has_iri_scheme(v))
    throw Error("not an absolute IRI: <" + v + ">");
  Term t;
  t.kind = TermKind::Iri;
  t.value = std::move(v);
  return t;
}

Term Term::blank(std::string label) {
  Term t;
  t.kind = TermKind::BlankNode;
  t.value = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::string lang, std::string datatype) {
  if (!lang.empty() && !datatype.empty())
    throw Error("literal cannot carry both a language tag and a datatype");
  Term t;
  t.kind = TermKind::Literal;
  t.value = std::move(lexical);
  t.lang = std::move(lang);
  t.datatype = std::move(datatype);
  return t;
}

namespace {

std::string escape_literal(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          static const char* hex = "0123456789ABCDEF";
          out += "\\u00";
          out += hex[c >> 4];
          out += hex[c & 0xF];
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

}  // namespace

std::string Term::to_ntriples() const {
  switch (kind) {
    case TermKind::Iri:
      return "<" + value + ">";
    case TermKind::BlankNode:
      return "_:" + value;
    case TermKind::Literal: {
      std::string out = "\"" + escape_literal(value) + "\"";
      if (!lang.empty()) out += "@" + lang;
      if (!datatype.empty()) out += "^^<" + datatype + ">";
      return out;
    }
  }
  return {};
}

}  // namespace afkg::rdf
