#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace percy {

// Exact rational scalar. mpq_class keeps values canonical (gcd-reduced,
// positive denominator) through all arithmetic; constructors from raw
// numerator/denominator pairs must go through rat() below.
using Rat = mpq_class;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Serialized form is "p/q", or just "p" when q = 1.
inline std::string to_string(const Rat& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0)
    throw error("malformed rational '" + s + "'");
  if (sgn(q.get_den()) < 0) q = -Rat(q.get_num(), -q.get_den());
  q.canonicalize();
  return q;
}

}  // namespace percy

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
