#include <bc/param.hpp>

namespace bc {

unsigned ParamRing::mu_var(unsigned class_id) const {
  if (class_id >= mu_count_) throw InvalidInput("mu class out of range");
  return 1 + class_id;
}

unsigned ParamRing::lambda_var(unsigned orbit_id) const {
  if (orbit_id >= lambda_count_) throw InvalidInput("lambda orbit out of range");
  return 1 + mu_count_ + orbit_id;
}

std::string ParamRing::variable_name(unsigned var) const {
  if (var == 0) return "d";
  if (var <= mu_count_) return "m" + std::to_string(var - 1);
  if (var < variable_count())
    return "l" + std::to_string(var - 1 - mu_count_);
  throw InvalidInput("variable index out of range");
}

int ParamRing::variable_by_name(const std::string& name) const {
  if (name == "d") return 0;
  if (name.size() >= 2 && (name[0] == 'm' || name[0] == 'l')) {
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(name[i]))) return -1;
    unsigned idx = static_cast<unsigned>(std::stoul(name.substr(1)));
    if (name[0] == 'm' && idx < mu_count_) return static_cast<int>(1 + idx);
    if (name[0] == 'l' && idx < lambda_count_)
      return static_cast<int>(1 + mu_count_ + idx);
  }
  return -1;
}

ParamScalar ParamScalar::one() {
  return from_cyclotomic(Cyclotomic::one());
}

ParamScalar ParamScalar::from_cyclotomic(const Cyclotomic& c) {
  return ParamScalar(Polynomial::constant(c),
                     Polynomial::constant(Cyclotomic::one()));
}

ParamScalar ParamScalar::from_rational(const Rational& q) {
  return from_cyclotomic(Cyclotomic::from_rational(q));
}

ParamScalar ParamScalar::from_polynomial(Polynomial p) {
  return ParamScalar(std::move(p), Polynomial::constant(Cyclotomic::one()));
}

ParamScalar ParamScalar::variable(unsigned var) {
  return from_polynomial(Polynomial::variable(var));
}

ParamScalar ParamScalar::fraction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  ParamScalar s(std::move(num), std::move(den));
  s.normalize();
  return s;
}

Cyclotomic ParamScalar::constant_value() const {
  if (!is_constant()) throw InvalidInput("scalar is not constant");
  return num_.constant_value();
}

void ParamScalar::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Cyclotomic::one());
    return;
  }
  if (!den_.is_one()) {
    if (den_.is_constant()) {
      num_ = num_.scaled_exact_div(den_.constant_value());
      den_ = Polynomial::constant(Cyclotomic::one());
      return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_divide(g);
      den_ = den_.exact_divide(g);
    }
    if (den_.is_constant()) {
      num_ = num_.scaled_exact_div(den_.constant_value());
      den_ = Polynomial::constant(Cyclotomic::one());
    } else if (!den_.leading_coefficient().is_one()) {
      Cyclotomic lc = den_.leading_coefficient();
      num_ = num_.scaled_exact_div(lc);
      den_ = den_.scaled_exact_div(lc);
    }
  }
}

ParamScalar ParamScalar::operator-() const {
  return ParamScalar(-num_, den_);
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
  if (den_.is_one() && o.den_.is_one())
    return ParamScalar(num_ + o.num_, den_);
  ParamScalar r(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  r.normalize();
  return r;
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const {
  return *this + (-o);
}

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
  if (num_.is_zero() || o.num_.is_zero()) return zero();
  if (den_.is_one() && o.den_.is_one())
    return ParamScalar(num_ * o.num_, den_);
  ParamScalar r(num_ * o.num_, den_ * o.den_);
  r.normalize();
  return r;
}

ParamScalar ParamScalar::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero scalar");
  ParamScalar r(den_, num_);
  r.normalize();
  return r;
}

ParamScalar ParamScalar::operator/(const ParamScalar& o) const {
  if (o.num_.is_zero()) throw DivisionByZero("scalar division by zero");
  ParamScalar r(num_ * o.den_, den_ * o.num_);
  r.normalize();
  return r;
}

ParamScalar ParamScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  ParamScalar acc = one();
  ParamScalar base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

ParamScalar ParamScalar::specialized(
    const std::map<unsigned, Cyclotomic>& values) const {
  Polynomial n = num_.substituted(values);
  Polynomial d = den_.substituted(values);
  if (d.is_zero())
    throw PoleError("denominator vanishes under the assignment");
  ParamScalar r(std::move(n), std::move(d));
  r.normalize();
  return r;
}

}  // namespace bc
