#pragma once

// The deformation-parameter field: rational functions in delta, one mu per
// reflection class and one lambda per hyperplane orbit, with cyclotomic
// coefficients.  Fractions are kept gcd-reduced with a monic denominator, so
// equality is structural.

#include <bc/multipoly.hpp>

#include <map>
#include <string>

namespace bc {

// Variable layout shared by every scalar attached to one group:
// index 0 = delta, 1..mu_count = mu per reflection class (class order),
// then lambda per hyperplane orbit.
class ParamRing {
 public:
  ParamRing() : conductor_(1), mu_count_(0), lambda_count_(0) {}
  ParamRing(long conductor, unsigned mu_count, unsigned lambda_count)
      : conductor_(conductor),
        mu_count_(mu_count),
        lambda_count_(lambda_count) {}

  long conductor() const { return conductor_; }
  unsigned mu_count() const { return mu_count_; }
  unsigned lambda_count() const { return lambda_count_; }
  unsigned variable_count() const { return 1 + mu_count_ + lambda_count_; }

  unsigned delta_var() const { return 0; }
  unsigned mu_var(unsigned class_id) const;
  unsigned lambda_var(unsigned orbit_id) const;

  std::string variable_name(unsigned var) const;  // "d", "m0", ..., "l0", ...
  int variable_by_name(const std::string& name) const;  // -1 when unknown

 private:
  long conductor_;
  unsigned mu_count_;
  unsigned lambda_count_;
};

class ParamScalar {
 public:
  ParamScalar() : num_(), den_(Polynomial::constant(Cyclotomic::one())) {}

  static ParamScalar zero() { return ParamScalar(); }
  static ParamScalar one();
  static ParamScalar from_cyclotomic(const Cyclotomic& c);
  static ParamScalar from_rational(const Rational& q);
  static ParamScalar from_polynomial(Polynomial p);
  static ParamScalar variable(unsigned var);
  static ParamScalar fraction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const {
    return num_.is_constant() && den_.is_one();
  }
  Cyclotomic constant_value() const;  // requires is_constant

  ParamScalar operator-() const;
  ParamScalar operator+(const ParamScalar& o) const;
  ParamScalar operator-(const ParamScalar& o) const;
  ParamScalar operator*(const ParamScalar& o) const;
  ParamScalar operator/(const ParamScalar& o) const;  // throws DivisionByZero
  ParamScalar inverse() const;
  ParamScalar pow(long k) const;

  ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
  ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }

  bool operator==(const ParamScalar& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const ParamScalar& o) const { return !(*this == o); }

  // Eliminates assigned variables; throws PoleError if the denominator
  // vanishes under the assignment.
  ParamScalar specialized(const std::map<unsigned, Cyclotomic>& values) const;

  std::uint64_t hash() const noexcept {
    return hash_combine(num_.hash(), den_.hash());
  }

 private:
  ParamScalar(Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;  // nonzero, monic, coprime to num_
};

}  // namespace bc
