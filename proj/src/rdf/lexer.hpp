#pragma once

// Shared token stream for the Turtle reader and the query-text reader.
// Internal header, not installed.

#include <cstddef>
#include <string>

#include "afkg/error.hpp"

namespace afkg::rdf::detail {

enum class Tok {
  Eof,
  Dot,
  Semicolon,
  Comma,
  LBrace,
  RBrace,
  IriRef,       // value = IRI text (possibly relative)
  PName,        // prefix_ = prefix, value = local part
  BlankLabel,   // value = label
  A,            // the `a` keyword
  String,       // value = unescaped lexical form
  LangTag,      // value = tag without '@'
  DatatypeMark, // ^^
  Integer,      // value = digits
  Decimal,      // value = digits.digits
  Variable,     // value = name without '?'
  PrefixDir,    // @prefix or PREFIX
  BaseDir,      // @base or BASE
  Keyword,      // value = bare word (SELECT, DISTINCT, WHERE, UNION, ...)
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Tok next();
  Tok peek();

  const std::string& value() const { return value_; }
  const std::string& prefix() const { return prefix_; }

  /// Value of the token last returned by peek(). Only valid right after peek().
  const std::string& peek_value() const { return peek_value_; }

  std::size_t line() const { return tok_line_; }
  std::size_t column() const { return tok_col_; }

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(tok_line_, tok_col_, reason);
  }

 private:
  Tok lex();
  char cur() const { return text_[pos_]; }
  bool eof() const { return pos_ >= text_.size(); }
  void advance();
  void skip_ws_and_comments();
  void lex_string();
  void lex_iri();
  bool lex_pname_or_word();
  void lex_number();
  void append_codepoint(unsigned long cp);
  unsigned long lex_hex(int digits);

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::size_t tok_line_ = 1;
  std::size_t tok_col_ = 1;

  std::string value_;
  std::string prefix_;

  bool has_peek_ = false;
  Tok peeked_ = Tok::Eof;
  std::string peek_value_;
  std::string peek_prefix_;
  std::size_t peek_line_ = 1;
  std::size_t peek_col_ = 1;
};

}  // namespace afkg::rdf::detail
