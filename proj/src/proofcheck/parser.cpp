#include "agmloop/proofcheck/parser.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "agmloop/errors.hpp"

namespace agmloop::proofcheck {

namespace {

enum class Tok { Int, Ident, False, LParen, RParen, Comma, Dot, LBracket, RBracket, Star, Eq, Neq, Bar, Hash, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Int: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::False: return "'$F'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Star: return "'*'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::Bar: return "'|'";
    case Tok::Hash: return "'#'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view text, int first_line) {
  std::vector<Token> out;
  int line = first_line, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cl = col;
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), l, cl});
      advance(1);
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Int, std::string(text.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, cl});
      advance(j - i);
    } else if (c == '$') {
      if (text.substr(i, 2) != "$F") throw ParseError(l, cl, "unexpected '$'");
      out.push_back({Tok::False, "$F", l, cl});
      advance(2);
    } else if (c == '!') {
      if (text.substr(i, 2) != "!=") throw ParseError(l, cl, "expected '!='");
      out.push_back({Tok::Neq, "!=", l, cl});
      advance(2);
    } else {
      switch (c) {
        case '(': single(Tok::LParen); break;
        case ')': single(Tok::RParen); break;
        case ',': single(Tok::Comma); break;
        case '.': single(Tok::Dot); break;
        case '[': single(Tok::LBracket); break;
        case ']': single(Tok::RBracket); break;
        case '*': single(Tok::Star); break;
        case '=': single(Tok::Eq); break;
        case '|': single(Tok::Bar); break;
        case '#': single(Tok::Hash); break;
        default: throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
      }
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<ProofStep> steps() {
    std::vector<ProofStep> out;
    while (peek().kind != Tok::End) out.push_back(step());
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column,
                     "expected " + what + ", found " +
                         (t.kind == Tok::End ? std::string(describe(t.kind)) : "'" + t.text + "'"));
  }

  Token expect(Tok k) {
    if (peek().kind != k) fail(describe(k));
    return tokens_[pos_++];
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  int integer() {
    const Token t = expect(Tok::Int);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw ParseError(t.line, t.column, "integer out of range");
    }
    return v;
  }

  ProofStep step() {
    ProofStep s;
    s.id = integer();
    s.literals.push_back(literal());
    while (accept(Tok::Bar)) s.literals.push_back(literal());
    while (accept(Tok::Hash)) {
      const Token kw = expect(Tok::Ident);
      if (kw.text != "label") throw ParseError(kw.line, kw.column, "expected 'label'");
      expect(Tok::LParen);
      s.labels.push_back(expect(Tok::Ident).text);
      expect(Tok::RParen);
    }
    expect(Tok::Dot);
    expect(Tok::LBracket);
    if (peek().kind != Tok::RBracket) {
      s.parents.push_back(integer());
      while (accept(Tok::Comma)) s.parents.push_back(integer());
    }
    expect(Tok::RBracket);
    expect(Tok::Dot);
    return s;
  }

  Literal literal() {
    if (accept(Tok::False)) return Literal::contradiction();
    Literal l;
    l.lhs = term();
    if (accept(Tok::Eq)) {
      l.kind = Literal::Kind::Equation;
    } else if (accept(Tok::Neq)) {
      l.kind = Literal::Kind::Disequation;
    } else {
      fail("'=' or '!='");
    }
    l.rhs = term();
    return l;
  }

  Term term() {
    Term t = factor();
    while (accept(Tok::Star)) t = Term::apply(Symbol::Star, std::move(t), factor());
    return t;
  }

  Term factor() {
    if (accept(Tok::LParen)) {
      Term t = term();
      expect(Tok::RParen);
      return t;
    }
    if (peek().kind == Tok::Ident && peek().text == "m" && peek(1).kind == Tok::LParen) {
      pos_ += 2;
      Term left = term();
      expect(Tok::Comma);
      Term right = term();
      expect(Tok::RParen);
      return Term::apply(Symbol::Mean, std::move(left), std::move(right));
    }
    // Numerals such as the unit 1 are constants.
    if (peek().kind == Tok::Ident || peek().kind == Tok::Int) return Term::named(tokens_[pos_++].text);
    fail("term");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ProofTrace parse_trace(std::string_view text) {
  ProofTrace trace;
  // Header: leading lines not starting with a digit.
  std::size_t offset = 0;
  int line = 1;
  std::string header;
  while (offset < text.size()) {
    const std::size_t eol = std::min(text.find('\n', offset), text.size());
    const std::string_view current = text.substr(offset, eol - offset);
    const auto first = current.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && std::isdigit(static_cast<unsigned char>(current[first]))) {
      break;
    }
    if (first != std::string_view::npos) {
      const auto last = current.find_last_not_of(" \t\r");
      if (!header.empty()) header += "\n";
      header += current.substr(first, last - first + 1);
    }
    offset = eol + 1;
    ++line;
  }
  trace.header = std::move(header);
  if (offset >= text.size()) throw ParseError(line, 1, "trace contains no steps");
  trace.steps = Parser(tokenize(text.substr(offset), line)).steps();
  return trace;
}

}  // namespace agmloop::proofcheck
