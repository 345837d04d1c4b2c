#include "afkg/rdf/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "afkg/error.hpp"
#include "lexer.hpp"

namespace afkg::rdf {

namespace {

constexpr const char* kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
constexpr const char* kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
constexpr const char* kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

using detail::Lexer;
using detail::Tok;

class TurtleReader {
 public:
  TurtleReader(const std::string& text, std::optional<std::string> base)
      : lex_(text), base_(std::move(base)) {}

  Graph run() {
    while (true) {
      Tok t = lex_.peek();
      if (t == Tok::Eof) break;
      if (t == Tok::PrefixDir) {
        read_prefix_directive();
      } else if (t == Tok::BaseDir) {
        read_base_directive();
      } else {
        read_statement();
      }
    }
    return std::move(g_);
  }

 private:
  void read_prefix_directive() {
    lex_.next();
    Tok t = lex_.next();
    if (t != Tok::PName || !lex_.value().empty())
      lex_.fail("expected 'prefix:' after @prefix");
    std::string prefix = lex_.prefix();
    if (lex_.next() != Tok::IriRef)
      lex_.fail("expected namespace IRI after prefix");
    g_.add_prefix(prefix, resolve_iri(lex_.value()));
    // '@prefix' requires the closing dot, SPARQL 'PREFIX' has none.
    if (lex_.peek() == Tok::Dot) lex_.next();
  }

  void read_base_directive() {
    lex_.next();
    if (lex_.next() != Tok::IriRef) lex_.fail("expected IRI after base");
    base_ = lex_.value();
    if (lex_.peek() == Tok::Dot) lex_.next();
  }

  std::string resolve_iri(const std::string& text) {
    if (has_iri_scheme(text)) return text;
    if (!base_)
      lex_.fail("relative IRI <" + text + "> without a base IRI");
    const std::string& base = *base_;
    if (!text.empty() && text[0] == '#') {
      auto hash = base.find('#');
      return base.substr(0, hash) + text;
    }
    auto slash = base.rfind('/');
    if (slash == std::string::npos) return base + text;
    return base.substr(0, slash + 1) + text;
  }

  Term expand_pname() {
    const auto& prefixes = g_.prefixes();
    auto it = prefixes.find(lex_.prefix());
    if (it == prefixes.end())
      lex_.fail("unknown prefix '" + lex_.prefix() + ":'");
    return Term::iri(it->second + lex_.value());
  }

  Term read_subject() {
    switch (lex_.next()) {
      case Tok::IriRef: return Term::iri(resolve_iri(lex_.value()));
      case Tok::PName: return expand_pname();
      case Tok::BlankLabel: return Term::blank(lex_.value());
      default: lex_.fail("expected subject (IRI, prefixed name, or _:label)");
    }
  }

  Term read_predicate() {
    switch (lex_.next()) {
      case Tok::IriRef: return Term::iri(resolve_iri(lex_.value()));
      case Tok::PName: return expand_pname();
      case Tok::A: return Term::iri(kRdfType);
      default: lex_.fail("expected predicate");
    }
  }

  Term read_object() {
    switch (lex_.next()) {
      case Tok::IriRef: return Term::iri(resolve_iri(lex_.value()));
      case Tok::PName: return expand_pname();
      case Tok::BlankLabel: return Term::blank(lex_.value());
      case Tok::Integer: return Term::literal(lex_.value(), "", kXsdInteger);
      case Tok::Decimal: return Term::literal(lex_.value(), "", kXsdDecimal);
      case Tok::String: {
        std::string lexical = lex_.value();
        Tok t = lex_.peek();
        if (t == Tok::LangTag) {
          lex_.next();
          return Term::literal(lexical, lex_.value());
        }
        if (t == Tok::DatatypeMark) {
          lex_.next();
          Tok dt = lex_.next();
          if (dt == Tok::IriRef)
            return Term::literal(lexical, "", resolve_iri(lex_.value()));
          if (dt == Tok::PName) return Term::literal(lexical, "", expand_pname().value);
          lex_.fail("expected datatype IRI after '^^'");
        }
        return Term::literal(lexical);
      }
      default: lex_.fail("expected object");
    }
  }

  void read_statement() {
    Term subject = read_subject();
    while (true) {
      Term predicate = read_predicate();
      while (true) {
        g_.insert(subject, predicate, read_object());
        if (lex_.peek() != Tok::Comma) break;
        lex_.next();
      }
      Tok t = lex_.next();
      if (t == Tok::Dot) return;
      if (t == Tok::Semicolon) {
        // Trailing ';' before the dot is legal Turtle.
        if (lex_.peek() == Tok::Dot) {
          lex_.next();
          return;
        }
        continue;
      }
      lex_.fail("expected '.', ';' or ',' after object");
    }
  }

  Lexer lex_;
  std::optional<std::string> base_;
  Graph g_;
};

}  // namespace

Graph parse_turtle(const std::string& text, std::optional<std::string> base_iri) {
  return TurtleReader(text, std::move(base_iri)).run();
}

namespace {

bool is_pname_local(const std::string& s) {
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
      return false;
  return true;
}

bool is_integer_form(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// [+-]? digit* '.' digit+
bool is_decimal_form(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  auto dot = s.find('.', i);
  if (dot == std::string::npos || dot + 1 >= s.size()) return false;
  for (std::size_t j = i; j < dot; ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  for (std::size_t j = dot + 1; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  return true;
}

// Longest-namespace prefix compression; falls back to <>.
std::string render_iri(const std::string& iri,
                       const std::map<std::string, std::string>& prefixes) {
  const std::string* best_prefix = nullptr;
  std::size_t best_len = 0;
  for (const auto& [prefix, ns] : prefixes) {
    if (ns.size() > best_len && iri.compare(0, ns.size(), ns) == 0 &&
        is_pname_local(iri.substr(ns.size()))) {
      best_prefix = &prefix;
      best_len = ns.size();
    }
  }
  if (best_prefix) return *best_prefix + ":" + iri.substr(best_len);
  return "<" + iri + ">";
}

std::string render_term(const Term& t,
                        const std::map<std::string, std::string>& prefixes) {
  switch (t.kind) {
    case TermKind::Iri: return render_iri(t.value, prefixes);
    case TermKind::BlankNode: return "_:" + t.value;
    case TermKind::Literal:
      if (t.lang.empty()) {
        if (t.datatype == kXsdInteger && is_integer_form(t.value)) return t.value;
        if (t.datatype == kXsdDecimal && is_decimal_form(t.value)) return t.value;
      }
      if (!t.datatype.empty()) {
        Term plain = t;
        std::string dt = render_iri(t.datatype, prefixes);
        plain.datatype.clear();
        return plain.to_ntriples() + "^^" + dt;
      }
      return t.to_ntriples();
  }
  return {};
}

}  // namespace

std::string serialize_turtle(const Graph& g) {
  std::ostringstream out;
  for (const auto& [prefix, ns] : g.prefixes())
    out << "@prefix " << prefix << ": <" << ns << "> .\n";
  if (!g.prefixes().empty() && !g.empty()) out << "\n";
  for (const auto& t : g) {
    out << render_term(t.subject, g.prefixes()) << " ";
    if (t.predicate.value == kRdfType)
      out << "a";
    else
      out << render_term(t.predicate, g.prefixes());
    out << " " << render_term(t.object, g.prefixes()) << " .\n";
  }
  return out.str();
}

std::string serialize_ntriples(const Graph& g) {
  std::ostringstream out;
  for (const auto& t : g)
    out << t.subject.to_ntriples() << " " << t.predicate.to_ntriples() << " "
        << t.object.to_ntriples() << " .\n";
  return out.str();
}

}  // namespace afkg::rdf
