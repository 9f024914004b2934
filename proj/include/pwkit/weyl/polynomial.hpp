#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace pwkit::weyl {

using Exponent = std::vector<int>;

/// Polynomial in a fixed number of variables with exact rational
/// coefficients. Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int vars = 0) : vars_(vars) {}

  static Polynomial constant(int vars, const mpq_class& c);
  static Polynomial variable(int vars, int i);
  static Polynomial monomial(const Exponent& e, const mpq_class& c = 1);

  int vars() const { return vars_; }
  const std::map<Exponent, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  mpq_class coefficient(const Exponent& e) const;
  mpq_class constant_term() const;
  Polynomial homogeneous_part(int degree) const;

  void add_term(const Exponent& e, const mpq_class& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const mpq_class& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
  friend Polynomial operator*(const mpq_class& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * mpq_class(-1); }
  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  Polynomial pow(int e) const;
  /// Same polynomial with extra trailing variables.
  Polynomial extended(int vars) const;

  /// One term per line: `coeff * x1^a1 x2^a2 ...`, constants as `coeff`.
  std::string to_string() const;
  /// Parses the to_string format. Terms may also be separated by `;`.
  static Polynomial parse(const std::string& text, int vars);

 private:
  int vars_;
  std::map<Exponent, mpq_class> terms_;
};

/// Exponent vectors of total degree `degree`, in lexicographic order.
std::vector<Exponent> monomials_of_degree(int vars, int degree);

/// p with x_{n+1} = ... = x_k = 0, as a polynomial in x_1..x_n.
Polynomial restrict_poly(const Polynomial& p, int n);

/// e_j(values).
Polynomial elementary_symmetric(const std::vector<Polynomial>& values, int j);

}  // namespace pwkit::weyl
