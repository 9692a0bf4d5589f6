#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is a vector of rationals of length phi(N), the residue of a
// polynomial in zeta_N modulo the N-th cyclotomic polynomial Phi_N.  Keeping
// residues fully reduced makes equality decidable by coefficient comparison,
// which is what group enumeration hammers on.  Elements of different
// conductors are promoted to the lcm conductor on mixed operations; hashing
// is only stable within a fixed conductor.

#include <bc/numeric.hpp>

#include <compare>
#include <cstdint>
#include <vector>

namespace bc {

// Phi_N as a dense monic integer polynomial, low degree first. Cached.
const std::vector<Rational>& cyclotomic_polynomial(long conductor);

long euler_phi(long n);

class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}

  static Cyclotomic zero(long conductor = 1);
  static Cyclotomic one(long conductor = 1);
  static Cyclotomic from_rational(const Rational& q, long conductor = 1);
  // zeta_N^power, reduced to canonical form. Conductor 0 is rejected.
  static Cyclotomic root_of_unity(long conductor, long power);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the residue is a degree-0 polynomial (value in Q).
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic promoted(long new_conductor) const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;  // throws DivisionByZero
  Cyclotomic inverse() const;                       // throws DivisionByZero
  Cyclotomic pow(long k) const;

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Total order used to fix deterministic enumerations (promotes to a
  // common conductor, then compares coefficient vectors lexicographically).
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  // Multiplicative order, or 0 if the element is not a root of unity.
  long multiplicative_order(long limit = 1024) const;

  std::uint64_t hash() const noexcept;

 private:
  Cyclotomic(long conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  long conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)
};

inline Cyclotomic operator*(const Rational& q, const Cyclotomic& c) {
  return Cyclotomic::from_rational(q, c.conductor()) * c;
}

}  // namespace bc
