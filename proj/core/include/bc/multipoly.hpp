#pragma once

// Sparse multivariate polynomials over a cyclotomic field.
//
// Variables are indices into an ambient ordering (0 = delta, then one mu per
// reflection class, then one lambda per hyperplane orbit; see ParamRing).
// Monomials compare in degree-lexicographic order where a higher variable
// index is the bigger letter, so leading terms and monic normalization are
// deterministic.

#include <bc/cyclotomic.hpp>

#include <map>
#include <vector>

namespace bc {

// Exponent vector with trailing zeros trimmed; absent entries are zero.
using Monomial = std::vector<unsigned>;

int compare_deglex(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_deglex(a, b) < 0;
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Cyclotomic, MonomialLess>;

  Polynomial() = default;

  static Polynomial constant(const Cyclotomic& c);
  static Polynomial constant(const Rational& q) {
    return constant(Cyclotomic::from_rational(q));
  }
  static Polynomial variable(unsigned var);
  static Polynomial term(const Monomial& m, const Cyclotomic& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const;     // requires nonzero
  const Cyclotomic& leading_coefficient() const;
  Cyclotomic constant_value() const;            // requires is_constant
  unsigned total_degree() const;
  int max_variable() const;  // -1 when constant

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(const Cyclotomic& c) const;
  Polynomial scaled_exact_div(const Cyclotomic& c) const;

  // Quotient of an exact division; throws InvalidInput if not divisible.
  Polynomial exact_divide(const Polynomial& divisor) const;

  // Monic associate (leading coefficient 1).
  Polynomial monic() const;

  // Substitutes values for the assigned variables; others stay formal.
  Polynomial substituted(const std::map<unsigned, Cyclotomic>& values) const;

  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  std::uint64_t hash() const noexcept;

 private:
  void insert_term(const Monomial& m, const Cyclotomic& c);

  TermMap terms_;
};

}  // namespace bc
