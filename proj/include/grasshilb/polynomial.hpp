#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grasshilb/rational.hpp"

namespace grasshilb {

/// Exponent vector over x_0 ... x_V.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index);
  static Monomial one(std::size_t nvars);

  std::size_t nvars() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Graded lexicographic order, largest first: higher degree first, then the
/// larger exponent of x_0, then x_1, ... Used as the map order everywhere.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of degree `degree` in `nvars` variables, grlex descending
/// (x_0^e first). There are C(degree + nvars - 1, degree) of them.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

/// Position of each monomial in `monomials_of_degree(nvars, degree)`.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, int degree);

  std::size_t nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  const Monomial& at(std::size_t i) const { return monomials_[i]; }
  /// Throws if `m` has the wrong degree or variable count.
  std::size_t index_of(const Monomial& m) const;

 private:
  std::size_t nvars_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, GrlexDescending> position_;
};

/// Homogeneous polynomial over Q. The zero polynomial still carries a degree
/// and a variable count so that sums stay well typed; a negative degree is
/// allowed and can only hold zero (e.g. a multiplier of a generator whose
/// degree exceeds the target degree).
class HomogeneousPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  HomogeneousPoly(std::size_t nvars, int degree);
  static HomogeneousPoly monomial(const Monomial& m, const Rational& c = 1);
  static HomogeneousPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  /// Adds c * m; m must match the degree and variable count.
  void add_term(const Monomial& m, const Rational& c);

  HomogeneousPoly& operator+=(const HomogeneousPoly& other);
  HomogeneousPoly& operator-=(const HomogeneousPoly& other);
  HomogeneousPoly operator-() const;
  HomogeneousPoly scaled(const Rational& c) const;
  HomogeneousPoly times(const Monomial& m) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// d/dx_index; a degree-0 input gives the zero polynomial of degree 0.
  HomogeneousPoly derivative(std::size_t index) const;
  /// Same polynomial viewed in more variables (new ones appended, unused).
  HomogeneousPoly extended(std::size_t nvars) const;
  /// Largest variable index that occurs, or -1 for constants / zero.
  int highest_variable() const;
  /// Coefficients in the basis `index.monomials()`.
  std::vector<Rational> dense(const MonomialIndex& index) const;

  friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;

 private:
  std::size_t nvars_;
  int degree_;
  Terms terms_;
};

HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b);
HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b);
HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);

/// Text form "3*x0^3 - x1*x2^2 + 1/2*x0*x1*x2"; "0" for zero. Variables are
/// named by `prefix` followed by the index.
std::string to_string(const HomogeneousPoly& p, std::string_view prefix = "x");

/// Parses the text form. Every term must have degree `degree`; pass -1 to
/// take the degree from the first term ("0" then needs an explicit degree).
HomogeneousPoly parse_polynomial(std::string_view text, std::size_t nvars, int degree = -1);

}  // namespace grasshilb
