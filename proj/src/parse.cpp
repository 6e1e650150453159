#include "keller/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace keller {

namespace {

enum class TokenKind { Name, Integer, Slash, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;
};

const char* describe(TokenKind k) {
  switch (k) {
    case TokenKind::Name: return "name";
    case TokenKind::Integer: return "integer";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokenKind::Integer, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({TokenKind::Name, std::string(text.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '/': kind = TokenKind::Slash; break;
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      default:
        throw parse_error(start, "a polynomial token", std::string(1, c));
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({TokenKind::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring)
      : tokens_(tokenize(text)), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial p = parse_expr();
    expect(TokenKind::End, "end of input");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token advance() { return tokens_[pos_++]; }

  void expect(TokenKind k, const std::string& what) {
    if (peek().kind != k) throw parse_error(peek().position, what, peek().lexeme);
    advance();
  }

  Polynomial parse_expr() {
    bool negate = false;
    if (peek().kind == TokenKind::Minus) {
      advance();
      negate = true;
    }
    Polynomial p = parse_term();
    if (negate) p = -p;
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      bool minus = advance().kind == TokenKind::Minus;
      Polynomial q = parse_term();
      if (minus)
        p -= q;
      else
        p += q;
    }
    return p;
  }

  Polynomial parse_term() {
    Polynomial p = parse_factor();
    while (peek().kind == TokenKind::Star) {
      advance();
      p = p * parse_factor();
    }
    return p;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (peek().kind != TokenKind::Caret) return base;
    advance();
    if (peek().kind != TokenKind::Integer) {
      throw parse_error(peek().position, "nonnegative integer exponent", peek().lexeme);
    }
    Token e = advance();
    if (peek().kind == TokenKind::Caret) {
      throw parse_error(peek().position, "no further '^' ('^' is non-associative)", peek().lexeme);
    }
    int exponent = 0;
    try {
      exponent = std::stoi(e.lexeme);
    } catch (const std::exception&) {
      throw parse_error(e.position, "a representable exponent", e.lexeme);
    }
    return base.pow(exponent);
  }

  Polynomial parse_base() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Integer: {
        Token num = advance();
        if (peek().kind == TokenKind::Slash) {
          advance();
          if (peek().kind != TokenKind::Integer) {
            throw parse_error(peek().position, "integer denominator", peek().lexeme);
          }
          Token den = advance();
          if (BigInt(den.lexeme).is_zero()) {
            throw parse_error(den.position, "nonzero denominator", den.lexeme);
          }
          return Polynomial::constant(ring_, Rational(BigInt(num.lexeme), BigInt(den.lexeme)));
        }
        return Polynomial::constant(ring_, Rational(BigInt(num.lexeme), BigInt(1)));
      }
      case TokenKind::Name: {
        Token name = advance();
        int idx = ring_->variable_index(name.lexeme);
        if (idx < 0) {
          throw parse_error(name.position, "a declared variable name", name.lexeme);
        }
        return Polynomial::variable(ring_, idx);
      }
      case TokenKind::LParen: {
        advance();
        Polynomial p = parse_expr();
        expect(TokenKind::RParen, "')'");
        return p;
      }
      default:
        throw parse_error(t.position, "a rational, variable name, or '('",
                          t.kind == TokenKind::End ? "" : t.lexeme);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

void print_monomial(std::ostream& os, const Monomial& m, const PolyRing& ring) {
  bool first = true;
  for (int i = 0; i < m.arity(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ring.variables()[i];
    if (m.exp[i] > 1) os << '^' << m.exp[i];
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << '-';
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (m.is_one()) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << '*';
      print_monomial(os, m, *p.ring());
    }
  }
  return os.str();
}

}  // namespace keller
