#include "grasshilb/polynomial.hpp"

#include <cctype>
#include <functional>
#include <numeric>

#include "grasshilb/error.hpp"

namespace grasshilb {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw Error(ErrorKind::InvalidParameter, "negative exponent");
  }
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(ErrorKind::InvalidParameter, "variable index out of range");
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::DimensionMismatch, "monomial variable counts");
  Monomial out = a;
  for (std::size_t i = 0; i < a.nvars(); ++i) out.exps_[i] += b.exps_[i];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  const std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  }
  return ea.size() < eb.size();
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars == 0) {
    if (nvars == 0 && degree == 0) out.push_back(Monomial::one(0));
    return out;
  }
  std::vector<int> e(nvars, 0);
  // Largest exponent of x_0 first gives grlex-descending order directly.
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      fill(i + 1, left - v);
    }
  };
  fill(0, degree);
  return out;
}

MonomialIndex::MonomialIndex(std::size_t nvars, int degree)
    : nvars_(nvars), degree_(degree), monomials_(monomials_of_degree(nvars, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) position_.emplace(monomials_[i], i);
}

std::size_t MonomialIndex::index_of(const Monomial& m) const {
  auto it = position_.find(m);
  if (it == position_.end() || m.nvars() != nvars_) {
    throw Error(ErrorKind::DimensionMismatch, "monomial outside this graded piece");
  }
  return it->second;
}

HomogeneousPoly::HomogeneousPoly(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {}

HomogeneousPoly HomogeneousPoly::monomial(const Monomial& m, const Rational& c) {
  HomogeneousPoly p(m.nvars(), m.degree());
  p.add_term(m, c);
  return p;
}

HomogeneousPoly HomogeneousPoly::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index));
}

Rational HomogeneousPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_ || m.degree() != degree_) {
    throw Error(ErrorKind::DimensionMismatch, "term does not match polynomial degree/variables");
  }
  if (grasshilb::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (grasshilb::is_zero(it->second)) terms_.erase(it);
  }
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& other) {
  if (other.nvars_ != nvars_ || (other.degree_ != degree_ && !other.is_zero())) {
    throw Error(ErrorKind::DimensionMismatch, "adding polynomials of different shape");
  }
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& other) {
  return *this += -other;
}

HomogeneousPoly HomogeneousPoly::operator-() const { return scaled(-1); }

HomogeneousPoly HomogeneousPoly::scaled(const Rational& c) const {
  HomogeneousPoly out(nvars_, degree_);
  if (grasshilb::is_zero(c)) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
  return out;
}

HomogeneousPoly HomogeneousPoly::times(const Monomial& m) const {
  HomogeneousPoly out(nvars_, degree_ + m.degree());
  // Multiplying by a monomial preserves the order, so append in sequence.
  for (const auto& [t, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), t * m, v);
  return out;
}

Rational HomogeneousPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "evaluation point size");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_ && !grasshilb::is_zero(term); ++i) {
      for (int e = 0; e < m[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

HomogeneousPoly HomogeneousPoly::derivative(std::size_t index) const {
  if (index >= nvars_) throw Error(ErrorKind::InvalidParameter, "variable index out of range");
  HomogeneousPoly out(nvars_, degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [m, c] : terms_) {
    if (m[index] == 0) continue;
    std::vector<int> e(m.exponents().begin(), m.exponents().end());
    const int power = e[index]--;
    out.add_term(Monomial(std::move(e)), c * power);
  }
  return out;
}

HomogeneousPoly HomogeneousPoly::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw Error(ErrorKind::InvalidParameter, "cannot drop variables");
  HomogeneousPoly out(nvars, degree_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(m.exponents().begin(), m.exponents().end());
    e.resize(nvars, 0);
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

int HomogeneousPoly::highest_variable() const {
  int highest = -1;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] > 0) highest = std::max(highest, static_cast<int>(i));
  }
  return highest;
}

std::vector<Rational> HomogeneousPoly::dense(const MonomialIndex& index) const {
  if (!terms_.empty() && (index.degree() != degree_ || index.nvars() != nvars_)) {
    throw Error(ErrorKind::DimensionMismatch, "monomial index does not match polynomial");
  }
  std::vector<Rational> out(index.size());
  for (const auto& [m, c] : terms_) out[index.index_of(m)] = c;
  return out;
}

HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::DimensionMismatch, "product variable counts");
  HomogeneousPoly out(a.nvars(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string to_string(const HomogeneousPoly& p, std::string_view prefix) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += std::string(prefix) + std::to_string(i);
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  std::vector<std::pair<Monomial, Rational>> terms() {
    std::vector<std::pair<Monomial, Rational>> out;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out.push_back(term(sign));
      first = false;
      skip();
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> term(int sign) {
    Rational coeff = 1;
    std::vector<int> exps(nvars_, 0);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_factor = true;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        Rational den = number();
        if (den == 0) fail("zero denominator");
        coeff /= den;
      }
      skip();
      if (peek() != '*') return {Monomial(exps), coeff * sign};
      ++pos_;
      skip();
    }
    while (true) {
      if (peek() != 'x') fail(have_factor ? "expected a variable after '*'" : "expected a term");
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("variable needs an index");
      const Integer idx = number().get_num();
      if (idx >= Integer(nvars_)) fail("variable index out of range");
      int power = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        const Integer pw = number().get_num();
        if (pw > 10000) fail("exponent too large");
        power = static_cast<int>(pw.get_si());
      }
      exps[idx.get_ui()] += power;
      have_factor = true;
      skip();
      if (peek() != '*') break;
      ++pos_;
      skip();
    }
    return {Monomial(exps), coeff * sign};
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse,
                "polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogeneousPoly parse_polynomial(std::string_view text, std::size_t nvars, int degree) {
  const auto terms = PolyParser(text, nvars).terms();
  int deg = degree;
  if (deg < 0) deg = terms.front().first.degree();
  HomogeneousPoly out(nvars, deg);
  for (const auto& [m, c] : terms) {
    if (is_zero(c)) continue;
    if (m.degree() != deg) {
      throw Error(ErrorKind::Parse, "polynomial is not homogeneous of degree " + std::to_string(deg));
    }
    out.add_term(m, c);
  }
  return out;
}

}  // namespace grasshilb
