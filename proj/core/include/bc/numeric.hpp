#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition or input violations (bad group spec, H not in arrangement, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// Division by a zero scalar, kept distinct from other arithmetic errors.
struct DivisionByZero : Error {
  using Error::Error;
};

// A substitution made a denominator vanish.
struct PoleError : Error {
  using Error::Error;
};

// An enumeration exceeded its configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

using Rational = mpq_class;

std::uint64_t hash_rational(const Rational& q) noexcept;

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// Parses "p", "-p", "p/q". Throws InvalidInput on malformed text or q = 0.
Rational parse_rational(const std::string& text);

// mpq_class(num, den) does not canonicalize; this does.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string render_rational(const Rational& q);

long lcm_long(long a, long b);

}  // namespace bc
