#include "afkg/rdf/query_text.hpp"

#include <cctype>

#include "afkg/error.hpp"
#include "lexer.hpp"

namespace afkg::rdf {

namespace {

constexpr const char* kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr const char* kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
constexpr const char* kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";

using detail::Lexer;
using detail::Tok;

bool ikeyword(const std::string& v, const char* kw) {
  if (v.size() != std::string(kw).size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::toupper(static_cast<unsigned char>(v[i])) != kw[i]) return false;
  return true;
}

class QueryReader {
 public:
  QueryReader(const std::string& text,
              const std::map<std::string, std::string>& defaults)
      : lex_(text), prefixes_(defaults) {}

  BgpQuery run() {
    read_prologue();
    bool distinct = false;
    auto projected = read_select(distinct);
    auto groups = read_where();
    return BgpQuery(std::move(groups), std::move(projected), distinct);
  }

 private:
  void read_prologue() {
    while (lex_.peek() == Tok::PrefixDir) {
      lex_.next();
      if (lex_.next() != Tok::PName || !lex_.value().empty())
        lex_.fail("expected 'prefix:' in PREFIX declaration");
      std::string prefix = lex_.prefix();
      if (lex_.next() != Tok::IriRef)
        lex_.fail("expected namespace IRI in PREFIX declaration");
      prefixes_[prefix] = lex_.value();
      if (lex_.peek() == Tok::Dot) lex_.next();
    }
  }

  std::vector<std::string> read_select(bool& distinct) {
    if (lex_.next() != Tok::Keyword || !ikeyword(lex_.value(), "SELECT"))
      lex_.fail("expected SELECT");
    std::vector<std::string> vars;
    while (true) {
      Tok t = lex_.peek();
      if (t == Tok::Keyword && ikeyword(lex_.peek_value(), "DISTINCT") &&
          vars.empty() && !distinct) {
        lex_.next();
        distinct = true;
        continue;
      }
      if (t != Tok::Variable) break;
      lex_.next();
      vars.push_back(lex_.value());
    }
    if (vars.empty()) lex_.fail("SELECT needs at least one variable");
    return vars;
  }

  Term expand_pname() {
    auto it = prefixes_.find(lex_.prefix());
    if (it == prefixes_.end())
      lex_.fail("unknown prefix '" + lex_.prefix() + ":'");
    return Term::iri(it->second + lex_.value());
  }

  PatternTerm read_position(bool as_predicate) {
    switch (lex_.next()) {
      case Tok::Variable: return Variable{lex_.value()};
      case Tok::IriRef:
        if (!has_iri_scheme(lex_.value()))
          lex_.fail("relative IRIs are not allowed in queries");
        return Term::iri(lex_.value());
      case Tok::PName: return expand_pname();
      case Tok::A:
        if (!as_predicate) lex_.fail("'a' is only valid as a predicate");
        return Term::iri(kRdfType);
      case Tok::BlankLabel:
        if (as_predicate) lex_.fail("blank node cannot be a predicate");
        return Term::blank(lex_.value());
      case Tok::Integer:
        if (as_predicate) lex_.fail("literal cannot be a predicate");
        return Term::literal(lex_.value(), "", kXsdInteger);
      case Tok::Decimal:
        if (as_predicate) lex_.fail("literal cannot be a predicate");
        return Term::literal(lex_.value(), "", kXsdDecimal);
      case Tok::String: {
        if (as_predicate) lex_.fail("literal cannot be a predicate");
        std::string lexical = lex_.value();
        Tok t = lex_.peek();
        if (t == Tok::LangTag) {
          lex_.next();
          return Term::literal(lexical, lex_.value());
        }
        if (t == Tok::DatatypeMark) {
          lex_.next();
          Tok dt = lex_.next();
          if (dt == Tok::IriRef) return Term::literal(lexical, "", lex_.value());
          if (dt == Tok::PName)
            return Term::literal(lexical, "", expand_pname().value);
          lex_.fail("expected datatype IRI after '^^'");
        }
        return Term::literal(lexical);
      }
      default: lex_.fail("expected a term or variable");
    }
  }

  // One subject with its predicate-object list, appended to `out`.
  void read_triples_block(std::vector<TriplePattern>& out) {
    PatternTerm subject = read_position(false);
    while (true) {
      PatternTerm predicate = read_position(true);
      while (true) {
        out.push_back(TriplePattern{subject, predicate, read_position(false)});
        if (lex_.peek() != Tok::Comma) break;
        lex_.next();
      }
      if (lex_.peek() == Tok::Semicolon) {
        lex_.next();
        if (lex_.peek() == Tok::Dot || lex_.peek() == Tok::RBrace) break;
        continue;
      }
      break;
    }
    if (lex_.peek() == Tok::Dot) lex_.next();
  }

  std::vector<TriplePattern> read_braced_conjunction() {
    if (lex_.next() != Tok::LBrace) lex_.fail("expected '{'");
    std::vector<TriplePattern> pats;
    while (lex_.peek() != Tok::RBrace) {
      if (lex_.peek() == Tok::Eof) lex_.fail("unterminated '{' block");
      read_triples_block(pats);
    }
    lex_.next();  // '}'
    return pats;
  }

  std::vector<PatternGroup> read_where() {
    if (lex_.next() != Tok::Keyword || !ikeyword(lex_.value(), "WHERE"))
      lex_.fail("expected WHERE");
    if (lex_.next() != Tok::LBrace) lex_.fail("expected '{' after WHERE");

    std::vector<PatternGroup> groups;
    PatternGroup current;
    auto flush = [&] {
      if (!current.patterns.empty()) {
        groups.push_back(std::move(current));
        current = PatternGroup{};
      }
    };

    while (true) {
      Tok t = lex_.peek();
      if (t == Tok::RBrace) {
        lex_.next();
        break;
      }
      if (t == Tok::Eof) lex_.fail("unterminated WHERE block");
      if (t == Tok::LBrace) {
        flush();
        PatternGroup group;
        group.patterns = read_braced_conjunction();
        if (lex_.peek() == Tok::Keyword &&
            ikeyword(lex_.peek_value(), "UNION")) {
          lex_.next();
          group.is_union = true;
          group.union_alternative = read_braced_conjunction();
        }
        groups.push_back(std::move(group));
        if (lex_.peek() == Tok::Dot) lex_.next();
        continue;
      }
      read_triples_block(current.patterns);
    }
    flush();
    if (lex_.next() != Tok::Eof) lex_.fail("trailing content after query");
    return groups;
  }

  Lexer lex_;
  std::map<std::string, std::string> prefixes_;
};

}  // namespace

BgpQuery parse_query(const std::string& text,
                     const std::map<std::string, std::string>& default_prefixes) {
  return QueryReader(text, default_prefixes).run();
}

}  // namespace afkg::rdf
