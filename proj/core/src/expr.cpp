#include "dlang/expr.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <string>

namespace dlang {

namespace {

enum class Tok { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  int col = 0;  // zero-based offset into the text
};

std::vector<Token> lex(std::string_view s, int line, int column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int at = static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        if (v > (std::numeric_limits<long long>::max() - 9) / 10)
          throw ParseError("integer literal too large", line, column + at);
        v = v * 10 + (s[i++] - '0');
      }
      out.push_back({Tok::Int, std::string(s.substr(at, i - at)), v, at});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Name, std::string(s.substr(at, i - at)), 0, at});
    } else {
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, column + at);
      }
      out.push_back({k, std::string(1, c), 0, at});
      ++i;
    }
  }
  out.push_back({Tok::End, "", 0, static_cast<int>(s.size())});
  return out;
}

// Ring is a policy with: using Value; Value from_int(long long); optional<Value>
// name(const std::string&); add, sub, mul, div, neg, pow(Value, long long).
// Operations may throw std::invalid_argument / std::domain_error, which are
// reported at the operator's position.
template <class Ring>
class ExprParser {
 public:
  using Value = typename Ring::Value;

  ExprParser(Ring ring, std::string_view text, int line, int column)
      : ring_(std::move(ring)), toks_(lex(text, line, column)), line_(line), column_(column) {}

  Value parse() {
    if (peek().kind == Tok::End) fail("empty expression", peek());
    Value v = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek());
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, line_, column_ + at.col);
  }

  template <class F>
  Value guarded(const Token& at, F&& f) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what(), at);
    }
  }

  Value expr() {
    Value acc = [&] {
      if (peek().kind == Tok::Plus) next();
      return term();
    }();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      Value rhs = term();
      acc = guarded(op, [&] { return op.kind == Tok::Plus ? ring_.add(acc, rhs) : ring_.sub(acc, rhs); });
    }
    return acc;
  }

  static bool starts_atom(Tok k) { return k == Tok::Int || k == Tok::Name || k == Tok::LParen; }

  Value term() {
    Value acc = unary();
    for (;;) {
      const Token& op = peek();
      if (op.kind == Tok::Star || op.kind == Tok::Slash) {
        next();
        Value rhs = unary();
        acc = guarded(op, [&] { return op.kind == Tok::Star ? ring_.mul(acc, rhs) : ring_.div(acc, rhs); });
      } else if (starts_atom(op.kind)) {
        Value rhs = power();
        acc = guarded(op, [&] { return ring_.mul(acc, rhs); });
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = next();
      Value v = unary();
      return guarded(op, [&] { return ring_.neg(v); });
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (peek().kind != Tok::Caret) return base;
    const Token& op = next();
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    }
    if (peek().kind != Tok::Int) fail("exponent must be an integer literal", peek());
    const long long e = next().value;
    return guarded(op, [&] { return ring_.pow(base, negative ? -e : e); });
  }

  Value atom() {
    const Token& tok = next();
    switch (tok.kind) {
      case Tok::Int:
        return guarded(tok, [&] { return ring_.from_int(tok.value); });
      case Tok::Name: {
        std::optional<Value> v;
        try {
          v = ring_.name(tok.text);
        } catch (const std::exception& e) {
          fail(e.what(), tok);
        }
        if (!v) fail("unknown name '" + tok.text + "'", tok);
        return *v;
      }
      case Tok::LParen: {
        Value v = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'", peek());
        next();
        return v;
      }
      case Tok::End:
        fail("unexpected end of expression", tok);
      default:
        fail("unexpected '" + tok.text + "'", tok);
    }
  }

  Ring ring_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

// ------------------------------------------------------------------ rings

// Polynomials over F_p in x, as coefficient lists; used before the field exists.
struct ConductorRing {
  using Value = std::vector<int>;
  int p;

  Value trim(Value v) const {
    for (int& c : v) c = ((c % p) + p) % p;
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  }
  Value from_int(long long n) const { return trim({static_cast<int>(n % p)}); }
  std::optional<Value> name(const std::string& s) const {
    if (s == "x") return Value{0, 1};
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const {
    Value r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    return trim(r);
  }
  Value neg(const Value& a) const {
    Value r = a;
    for (int& c : r) c = -c;
    return trim(r);
  }
  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  Value mul(const Value& a, const Value& b) const {
    if (a.empty() || b.empty()) return {};
    Value r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(r);
  }
  Value div(const Value&, const Value&) const { throw std::invalid_argument("division is not allowed in a conductor"); }
  Value pow(const Value& a, long long e) const {
    if (e < 0) throw std::invalid_argument("negative exponent in a conductor");
    Value r{1};
    for (long long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
};

struct RatRing {
  using Value = RatFunc;
  FieldPtr f;

  Value from_int(long long n) const { return RatFunc::constant(f, f->from_int(n)); }
  std::optional<Value> name(const std::string& s) const {
    if (s == "t") return RatFunc::t(f);
    if (s == "g") return RatFunc::constant(f, f->generator());
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, long long e) const { return a.pow(e); }
};

struct TwistedRing {
  using Value = TwistedPoly;
  FieldPtr f;

  static bool scalar(const Value& a) { return a.degree() <= 0; }
  Value from_int(long long n) const { return TwistedPoly::scalar(RatRing{f}.from_int(n)); }
  std::optional<Value> name(const std::string& s) const {
    if (s == "tau") return TwistedPoly::tau(f);
    if (auto r = RatRing{f}.name(s)) return TwistedPoly::scalar(*r);
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const {
    if (!scalar(a) || !scalar(b)) throw std::invalid_argument("only scalars can be divided in K{tau}");
    return TwistedPoly::scalar(a.coeff(0) / b.coeff(0));
  }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, long long e) const {
    if (scalar(a)) return TwistedPoly::scalar(a.coeff(0).pow(e));
    if (e < 0) throw std::invalid_argument("negative power of a twisted polynomial");
    if (e > 64) throw std::invalid_argument("exponent too large");
    Value r = TwistedPoly::scalar(RatFunc::one(f));
    for (long long i = 0; i < e; ++i) r = r * a;
    return r;
  }
};

struct MPolyRing {
  using Value = MPoly;
  FieldPtr f;
  int g;

  static bool constant(const Value& a) { return a.total_degree() <= 0; }
  static RatFunc constant_value(const FieldPtr& f, const Value& a) {
    return a.is_zero() ? RatFunc(f) : a.terms().begin()->second;
  }
  Value lift(const RatFunc& c) const { return MPoly::constant(f, g, c); }
  Value from_int(long long n) const { return lift(RatRing{f}.from_int(n)); }
  std::optional<Value> name(const std::string& s) const {
    if (auto r = RatRing{f}.name(s)) return lift(*r);
    if (s.size() >= 2 && s[0] == 'X') {
      std::string digits = s.substr(s[1] == '_' ? 2 : 1);
      if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
      const int i = std::stoi(digits);
      if (i < 1 || i > g) throw std::invalid_argument("variable " + s + " beyond X_" + std::to_string(g));
      return MPoly::variable(f, g, i - 1);
    }
    return std::nullopt;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b) const {
    if (!constant(b)) throw std::invalid_argument("division by a non-constant polynomial");
    return a.scaled(RatFunc::one(f) / constant_value(f, b));
  }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, long long e) const {
    if (constant(a)) return lift(constant_value(f, a).pow(e));
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    if (e > 1024) throw std::invalid_argument("exponent too large");
    return a.pow(static_cast<int>(e));
  }
};

}  // namespace

std::vector<int> parse_conductor(int p, std::string_view text, int line, int column) {
  return ExprParser<ConductorRing>(ConductorRing{p}, text, line, column).parse();
}

RatFunc parse_ratfunc(const FieldPtr& f, std::string_view text, int line, int column) {
  return ExprParser<RatRing>(RatRing{f}, text, line, column).parse();
}

TwistedPoly parse_twisted(const FieldPtr& f, std::string_view text, int line, int column) {
  return ExprParser<TwistedRing>(TwistedRing{f}, text, line, column).parse();
}

MPoly parse_mpoly(const FieldPtr& f, int g, std::string_view text, int line, int column) {
  return ExprParser<MPolyRing>(MPolyRing{f, g}, text, line, column).parse();
}

}  // namespace dlang
