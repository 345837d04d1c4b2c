#include "lexer.hpp"

#include <cctype>

namespace afkg::rdf::detail {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool iequals(const std::string& a, const char* b) {
  std::size_t i = 0;
  for (; i < a.size() && b[i]; ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return i == a.size() && !b[i];
}

}  // namespace

void Lexer::advance() {
  if (text_[pos_] == '\n') {
    ++line_;
    col_ = 1;
  } else {
    ++col_;
  }
  ++pos_;
}

void Lexer::skip_ws_and_comments() {
  while (!eof()) {
    char c = cur();
    if (c == '#') {
      while (!eof() && cur() != '\n') advance();
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
    } else {
      break;
    }
  }
}

Tok Lexer::peek() {
  if (!has_peek_) {
    std::size_t sl = tok_line_, sc = tok_col_;
    std::string sv = value_, sp = prefix_;
    peeked_ = lex();
    peek_value_ = value_;
    peek_prefix_ = prefix_;
    peek_line_ = tok_line_;
    peek_col_ = tok_col_;
    value_ = sv;
    prefix_ = sp;
    tok_line_ = sl;
    tok_col_ = sc;
    has_peek_ = true;
  }
  return peeked_;
}

Tok Lexer::next() {
  if (has_peek_) {
    has_peek_ = false;
    value_ = peek_value_;
    prefix_ = peek_prefix_;
    tok_line_ = peek_line_;
    tok_col_ = peek_col_;
    return peeked_;
  }
  return lex();
}

Tok Lexer::lex() {
  skip_ws_and_comments();
  tok_line_ = line_;
  tok_col_ = col_;
  value_.clear();
  prefix_.clear();
  if (eof()) return Tok::Eof;

  char c = cur();
  switch (c) {
    case '.': {
      // Distinguish the statement dot from a leading-dot decimal.
      if (pos_ + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        lex_number();
        return Tok::Decimal;
      }
      advance();
      return Tok::Dot;
    }
    case ';': advance(); return Tok::Semicolon;
    case ',': advance(); return Tok::Comma;
    case '{': advance(); return Tok::LBrace;
    case '}': advance(); return Tok::RBrace;
    case '(': fail("collections '( ... )' are not supported");
    case '[': fail("anonymous blank nodes '[ ... ]' are not supported");
    case '<': lex_iri(); return Tok::IriRef;
    case '"': lex_string(); return Tok::String;
    case '^': {
      advance();
      if (eof() || cur() != '^') fail("expected '^^'");
      advance();
      return Tok::DatatypeMark;
    }
    case '@': {
      advance();
      std::string word;
      while (!eof() && (std::isalpha(static_cast<unsigned char>(cur())) ||
                        cur() == '-')) {
        word += cur();
        advance();
      }
      if (word == "prefix") return Tok::PrefixDir;
      if (word == "base") return Tok::BaseDir;
      value_ = word;
      return Tok::LangTag;
    }
    case '?': {
      advance();
      while (!eof() && is_name_char(cur())) {
        value_ += cur();
        advance();
      }
      if (value_.empty()) fail("empty variable name after '?'");
      return Tok::Variable;
    }
    case '_': {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') {
        advance();
        advance();
        while (!eof() && is_name_char(cur())) {
          value_ += cur();
          advance();
        }
        if (value_.empty()) fail("empty blank node label");
        return Tok::BlankLabel;
      }
      return lex_pname_or_word() ? Tok::PName : Tok::Keyword;
    }
    case ':': {
      advance();
      prefix_.clear();
      while (!eof() && (is_name_char(cur()) || cur() == '.')) {
        value_ += cur();
        advance();
      }
      while (!value_.empty() && value_.back() == '.') {
        value_.pop_back();
        --pos_;
        --col_;
      }
      return Tok::PName;
    }
    default:
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-') {
        lex_number();
        return value_.find('.') == std::string::npos ? Tok::Integer
                                                     : Tok::Decimal;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        if (lex_pname_or_word()) return Tok::PName;
        if (value_ == "a") return Tok::A;
        if (iequals(value_, "prefix")) return Tok::PrefixDir;
        if (iequals(value_, "base")) return Tok::BaseDir;
        return Tok::Keyword;
      }
      fail(std::string("unexpected character '") + c + "'");
  }
}

void Lexer::lex_iri() {
  advance();  // '<'
  while (!eof() && cur() != '>') {
    if (cur() == '\n') fail("unterminated IRI");
    value_ += cur();
    advance();
  }
  if (eof()) fail("unterminated IRI");
  advance();  // '>'
}

unsigned long Lexer::lex_hex(int digits) {
  unsigned long cp = 0;
  for (int i = 0; i < digits; ++i) {
    if (eof() || !std::isxdigit(static_cast<unsigned char>(cur())))
      fail("bad hex escape in string");
    char c = cur();
    cp = cp * 16 + (std::isdigit(static_cast<unsigned char>(c))
                        ? c - '0'
                        : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
    advance();
  }
  return cp;
}

void Lexer::append_codepoint(unsigned long cp) {
  if (cp < 0x80) {
    value_ += static_cast<char>(cp);
  } else if (cp < 0x800) {
    value_ += static_cast<char>(0xC0 | (cp >> 6));
    value_ += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    value_ += static_cast<char>(0xE0 | (cp >> 12));
    value_ += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    value_ += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    value_ += static_cast<char>(0xF0 | (cp >> 18));
    value_ += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    value_ += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    value_ += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

void Lexer::lex_string() {
  advance();  // '"'
  while (true) {
    if (eof()) fail("unterminated string literal");
    char c = cur();
    if (c == '"') {
      advance();
      return;
    }
    if (c == '\\') {
      advance();
      if (eof()) fail("unterminated escape");
      char e = cur();
      advance();
      switch (e) {
        case 't': value_ += '\t'; break;
        case 'n': value_ += '\n'; break;
        case 'r': value_ += '\r'; break;
        case 'b': value_ += '\b'; break;
        case 'f': value_ += '\f'; break;
        case '"': value_ += '"'; break;
        case '\'': value_ += '\''; break;
        case '\\': value_ += '\\'; break;
        case 'u': append_codepoint(lex_hex(4)); break;
        case 'U': append_codepoint(lex_hex(8)); break;
        default: fail(std::string("unknown escape '\\") + e + "'");
      }
      continue;
    }
    if (c == '\n') fail("newline in string literal");
    value_ += c;
    advance();
  }
}

void Lexer::lex_number() {
  if (cur() == '+' || cur() == '-') {
    value_ += cur();
    advance();
  }
  bool seen_dot = false;
  while (!eof()) {
    char c = cur();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      value_ += c;
      advance();
    } else if (c == '.' && !seen_dot && pos_ + 1 < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      seen_dot = true;
      value_ += c;
      advance();
    } else {
      break;
    }
  }
  if (value_.empty() || value_ == "+" || value_ == "-")
    fail("malformed number");
}

// Returns true when a ':' was consumed, i.e. the token is a prefixed name.
bool Lexer::lex_pname_or_word() {
  std::string word;
  while (!eof() && is_name_char(cur())) {
    word += cur();
    advance();
  }
  if (eof() || cur() != ':') {
    value_ = word;
    prefix_.clear();
    return false;
  }
  advance();  // ':'
  prefix_ = word;
  value_.clear();
  while (!eof() && (is_name_char(cur()) || cur() == '.')) {
    value_ += cur();
    advance();
  }
  // Trailing dots belong to the statement terminator.
  while (!value_.empty() && value_.back() == '.') {
    value_.pop_back();
    --pos_;
    --col_;
  }
  return true;
}

}  // namespace afkg::rdf::detail
