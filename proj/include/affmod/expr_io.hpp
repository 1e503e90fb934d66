#pragma once

// Text syntax for polynomials and fractions.
//
//   fraction := expr [ '/' expr ]
//   expr     := term { ('+' | '-') term }
//   term     := unary { '*' unary }
//   unary    := '-' unary | power
//   power    := primary [ '^' integer ]
//   primary  := integer | identifier | '(' expr ')'
//
// Multiplication is always explicit. Coefficients are integers; a '/' binds
// loosest and may appear once. parse_poly accepts it only for a nonzero
// constant denominator, which is how non-integral rational coefficients are
// printed and read back.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affmod/errors.hpp"
#include "affmod/poly.hpp"

namespace affmod {

struct ExprToken {
  enum class Kind { Identifier, Integer, Plus, Minus, Star, Slash, Caret, LeftParen, RightParen, End };
  Kind kind;
  std::string text;
  std::size_t begin;  // [begin, end) in the source
  std::size_t end;
};

inline std::vector<ExprToken> tokenize(std::string_view text) {
  std::vector<ExprToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({ExprToken::Kind::Integer, std::string(text.substr(start, i - start)), start, i});
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({ExprToken::Kind::Identifier, std::string(text.substr(start, i - start)), start, i});
      continue;
    }
    ExprToken::Kind kind;
    switch (ch) {
      case '+': kind = ExprToken::Kind::Plus; break;
      case '-': kind = ExprToken::Kind::Minus; break;
      case '*': kind = ExprToken::Kind::Star; break;
      case '/': kind = ExprToken::Kind::Slash; break;
      case '^': kind = ExprToken::Kind::Caret; break;
      case '(': kind = ExprToken::Kind::LeftParen; break;
      case ')': kind = ExprToken::Kind::RightParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + static_cast<char>(ch) + "'", start);
    }
    ++i;
    out.push_back({kind, std::string(1, static_cast<char>(ch)), start, i});
  }
  out.push_back({ExprToken::Kind::End, "", text.size(), text.size()});
  return out;
}

/// Numerator over denominator, kept exactly as written.
template <class Field>
struct FractionExpr {
  Poly<Field> numerator;
  Poly<Field> denominator;
};

namespace detail {

inline constexpr unsigned long kMaxDegree = 1024;
inline constexpr std::size_t kMaxNesting = 256;

template <class Field>
class ExprParser {
 public:
  using P = Poly<Field>;

  ExprParser(std::string_view text, RingPtr<Field> ring) : tokens_(tokenize(text)), ring_(std::move(ring)) {}

  std::pair<P, std::optional<std::pair<P, std::size_t>>> parse_fraction() {
    P num = expr();
    std::optional<std::pair<P, std::size_t>> den;
    if (peek().kind == ExprToken::Kind::Slash) {
      next();
      std::size_t at = peek().begin;
      den.emplace(expr(), at);
    }
    if (peek().kind != ExprToken::Kind::End) fail("unexpected '" + peek().text + "'");
    return {std::move(num), std::move(den)};
  }

 private:
  const ExprToken& peek() const { return tokens_[pos_]; }
  const ExprToken& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().begin); }

  P expr() {
    P acc = term();
    while (peek().kind == ExprToken::Kind::Plus || peek().kind == ExprToken::Kind::Minus) {
      bool minus = next().kind == ExprToken::Kind::Minus;
      P rhs = term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  P term() {
    P acc = unary();
    while (peek().kind == ExprToken::Kind::Star) {
      next();
      acc *= unary();
    }
    return acc;
  }

  P unary() {
    if (peek().kind == ExprToken::Kind::Minus) {
      next();
      Nest guard(*this);
      return -unary();
    }
    return power();
  }

  P power() {
    P base = primary();
    if (peek().kind != ExprToken::Kind::Caret) return base;
    next();
    if (peek().kind == ExprToken::Kind::Minus) fail("negative exponent");
    if (peek().kind != ExprToken::Kind::Integer) fail("expected an integer exponent");
    const auto& tok = next();
    unsigned long e = tok.text.size() > 6 ? kMaxDegree + 1 : std::stoul(tok.text);
    unsigned long base_degree = static_cast<unsigned long>(std::max(base.total_degree(), 1L));
    if (e > kMaxDegree || base_degree * e > kMaxDegree) throw ParseError("exponent too large", tok.begin);
    return base.pow(static_cast<unsigned>(e));
  }

  P primary() {
    const auto& tok = peek();
    switch (tok.kind) {
      case ExprToken::Kind::Integer: {
        next();
        return P::constant(ring_, ring_->field().from_integer(mpz_class(tok.text, 10)));
      }
      case ExprToken::Kind::Identifier: {
        auto idx = ring_->index_of(tok.text);
        if (!idx) throw ParseError("unknown variable '" + tok.text + "'", tok.begin);
        next();
        return P::variable(ring_, *idx);
      }
      case ExprToken::Kind::LeftParen: {
        next();
        Nest guard(*this);
        P inner = expr();
        if (peek().kind != ExprToken::Kind::RightParen) fail("expected ')'");
        next();
        return inner;
      }
      case ExprToken::Kind::End:
        fail("unexpected end of input");
      default:
        break;
    }
    fail("unexpected '" + tok.text + "'");
  }

  struct Nest {
    explicit Nest(ExprParser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail("expression nested too deeply");
    }
    ~Nest() { --parser.depth_; }
    ExprParser& parser;
  };

  std::vector<ExprToken> tokens_;
  RingPtr<Field> ring_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace detail

template <class Field>
Poly<Field> parse_poly(std::string_view text, const RingPtr<Field>& ring) {
  detail::ExprParser<Field> parser(text, ring);
  auto [num, den] = parser.parse_fraction();
  if (!den) return num;
  const auto& [d, at] = *den;
  if (d.is_zero()) throw ParseError("zero denominator", at);
  if (!d.is_constant()) throw ParseError("non-constant denominator in a polynomial", at);
  return num.scaled(ring->field().inv(d.constant_term()));
}

template <class Field>
FractionExpr<Field> parse_fraction(std::string_view text, const RingPtr<Field>& ring) {
  detail::ExprParser<Field> parser(text, ring);
  auto [num, den] = parser.parse_fraction();
  if (!den) return {std::move(num), Poly<Field>::from_int(ring, 1)};
  if (den->first.is_zero()) throw ParseError("zero denominator", den->second);
  return {std::move(num), std::move(den->first)};
}

/// Convenience for building rings and polynomials in tests and commands.
template <class Field>
std::vector<Poly<Field>> parse_polys(const std::vector<std::string>& texts, const RingPtr<Field>& ring) {
  std::vector<Poly<Field>> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

namespace detail {

template <class Field>
std::string format_integral(const PolyRing<Field>& ring, const std::vector<std::pair<Monomial, mpz_class>>& terms) {
  std::string out;
  for (const auto& [m, c] : terms) {
    bool negative = c < 0;
    mpz_class mag = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.name(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace detail

/// Deterministic text form, terms in descending grevlex order.
/// parse_poly(format(p), ring) == p.
template <class Field>
std::string format(const Poly<Field>& p) {
  if (p.is_zero()) return "0";
  const auto& f = p.field();
  mpz_class den = 1;
  for (const auto& [m, c] : p.terms()) den = lcm(den, f.denominator(c));

  std::vector<std::pair<Monomial, mpz_class>> scaled;
  for (const auto& [m, c] : p.terms()) scaled.emplace_back(m, f.numerator(c) * (den / f.denominator(c)));
  auto ord = MonomialOrder::grevlex();
  std::sort(scaled.begin(), scaled.end(), [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
  auto body = detail::format_integral(*p.ring(), scaled);
  if (den == 1) return body;
  return "(" + body + ")/" + den.get_str();
}

template <class Field>
std::string format(const FractionExpr<Field>& q) {
  if (q.denominator.is_constant() && q.denominator.field().is_one(q.denominator.constant_term()))
    return format(q.numerator);
  return "(" + format(q.numerator) + ")/(" + format(q.denominator) + ")";
}

/// One expression per line; '#' starts a comment, blank lines are skipped.
inline std::vector<std::string> read_expression_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

inline std::vector<std::string> read_expression_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_expression_lines(in);
}

/// Lines of the form "a, b" naming an (a, b) pair for an affine modification.
inline std::vector<std::pair<std::string, std::string>> read_expression_pairs(const std::string& path) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& line : read_expression_file(path)) {
    auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw ParseError("expected exactly one ',' separating a and b", comma == std::string::npos ? line.size() : comma);
    auto strip = [](std::string s) {
      auto a = s.find_first_not_of(" \t");
      auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    out.emplace_back(strip(line.substr(0, comma)), strip(line.substr(comma + 1)));
  }
  return out;
}

}  // namespace affmod
