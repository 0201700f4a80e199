#include "gbv/textio.hpp"

#include <cctype>
#include <stdexcept>

namespace gbv {

std::vector<std::string> poly_var_names(int n) {
  if (n <= 3) {
    static const char* short_names[] = {"x", "y", "z"};
    return std::vector<std::string>(short_names, short_names + n);
  }
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> frame_names(int n) {
  std::vector<std::string> out = poly_var_names(n);
  for (auto& s : out) s = "d" + s;
  return out;
}

std::string monomial_label(uint64_t mask, const std::vector<std::string>& names) {
  if (mask == 0) return "1";
  std::string out;
  for (int i : mask_indices(mask)) {
    if (!out.empty()) out += "^";
    out += names.at(i);
  }
  return out;
}

std::string multivector_str(const Multivector<Rational>& a,
                            const std::vector<std::string>& names) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [mask, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += rational_str(c);
    if (mask != 0) out += " * " + monomial_label(mask, names);
  }
  return out;
}

std::string poly_str(const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [exps, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    bool has_vars = false;
    for (int e : exps) has_vars |= (e != 0);
    if (!has_vars) {
      out += rational_str(c);
      continue;
    }
    std::string factors;
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += vars.at(i);
      if (exps[i] > 1) factors += "^" + std::to_string(exps[i]);
    }
    if (c == -1) out += "-" + factors;
    else if (c == 1) out += factors;
    else out += rational_str(c) + "*" + factors;
  }
  return out;
}

std::string multivector_str(const Multivector<Poly>& a,
                            const std::vector<std::string>& frames,
                            const std::vector<std::string>& vars) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [mask, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + poly_str(c, vars) + ")";
    if (mask != 0) out += " * " + monomial_label(mask, frames);
  }
  return out;
}

namespace {

struct Token {
  enum Kind { Number, Name, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) return {Token::End, ""};
    char c = s_[pos_];
    switch (c) {
      case '+': ++pos_; return {Token::Plus, "+"};
      case '-': ++pos_; return {Token::Minus, "-"};
      case '*': ++pos_; return {Token::Star, "*"};
      case '^': ++pos_; return {Token::Caret, "^"};
      case '(': ++pos_; return {Token::LParen, "("};
      case ')': ++pos_; return {Token::RParen, ")"};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      // a slash directly between digit runs makes one rational literal
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return {Token::Number, s_.substr(start, pos_ - start)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return {Token::Name, s_.substr(start, pos_ - start)};
    }
    throw std::invalid_argument(std::string("unexpected character '") + c + "' in expression");
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, int nvars)
      : lex_(text), nvars_(nvars), vars_(poly_var_names(nvars)), frames_(frame_names(nvars)) {
    advance();
  }

  Multivector<Poly> parse() {
    Multivector<Poly> v = expression();
    expect(Token::End, "end of input");
    return v;
  }

 private:
  using MV = Multivector<Poly>;

  void advance() { tok_ = lex_.next(); }
  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k)
      throw std::invalid_argument(std::string("expected ") + what + " but found '" + tok_.text + "'");
  }

  MV expression() {
    MV v = product();
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool minus = tok_.kind == Token::Minus;
      advance();
      MV rhs = product();
      v = minus ? v - rhs : v + rhs;
    }
    return v;
  }

  MV product() {
    MV v = unary();
    while (tok_.kind == Token::Star) {
      advance();
      v = wedge(v, unary());
    }
    return v;
  }

  MV unary() {
    if (tok_.kind == Token::Minus) {
      advance();
      return -unary();
    }
    return power();
  }

  MV power() {
    MV v = atom();
    while (tok_.kind == Token::Caret) {
      advance();
      MV rhs = atom();
      v = apply_caret(v, rhs);
    }
    return v;
  }

  // ^ means integer power on scalars and the wedge between frame factors
  MV apply_caret(const MV& lhs, const MV& rhs) {
    if (lhs.top_degree() >= 1 && rhs.top_degree() >= 1) return wedge(lhs, rhs);
    if (lhs.top_degree() <= 0 && rhs.top_degree() <= 0) {
      Poly base = scalar_of(lhs);
      Poly expp = scalar_of(rhs);
      if (!expp.is_constant())
        throw std::invalid_argument("exponent must be a constant integer");
      Rational e = expp.constant_value();
      if (e.get_den() != 1 || e < 0)
        throw std::invalid_argument("exponent must be a nonnegative integer");
      unsigned long n = mpz_get_ui(e.get_num().get_mpz_t());
      Poly acc = Poly::constant(nvars_, 1);
      for (unsigned long i = 0; i < n; ++i) acc *= base;
      return MV::monomial(nvars_, 0, acc);
    }
    throw std::invalid_argument("'^' needs two frame factors or a scalar and an integer");
  }

  Poly scalar_of(const MV& v) {
    Poly out(nvars_);
    for (const auto& [mask, c] : v.terms()) {
      if (mask != 0) throw std::invalid_argument("expected a scalar subexpression");
      out += c;
    }
    return out;
  }

  MV atom() {
    switch (tok_.kind) {
      case Token::Number: {
        Rational r = parse_rational(tok_.text);
        advance();
        return MV::monomial(nvars_, 0, Poly::constant(nvars_, r));
      }
      case Token::Name: {
        std::string name = tok_.text;
        advance();
        for (int i = 0; i < nvars_; ++i)
          if (name == vars_[i]) return MV::monomial(nvars_, 0, Poly::variable(nvars_, i));
        for (int i = 0; i < nvars_; ++i)
          if (name == frames_[i])
            return MV::monomial(nvars_, uint64_t{1} << i, Poly::constant(nvars_, 1));
        throw std::invalid_argument("unknown name '" + name + "'");
      }
      case Token::LParen: {
        advance();
        MV v = expression();
        expect(Token::RParen, "')'");
        advance();
        return v;
      }
      default:
        throw std::invalid_argument("unexpected token '" + tok_.text + "'");
    }
  }

  Lexer lex_;
  Token tok_;
  int nvars_;
  std::vector<std::string> vars_;
  std::vector<std::string> frames_;
};

}  // namespace

Multivector<Poly> parse_poly_multivector(const std::string& text, int nvars) {
  return Parser(text, nvars).parse();
}

Poly parse_poly(const std::string& text, int nvars) {
  Multivector<Poly> v = parse_poly_multivector(text, nvars);
  Poly out(nvars);
  for (const auto& [mask, c] : v.terms()) {
    if (mask != 0)
      throw std::invalid_argument("expected a polynomial, found frame factors in '" + text + "'");
    out += c;
  }
  return out;
}

}  // namespace gbv
