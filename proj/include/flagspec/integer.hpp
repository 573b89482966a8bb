#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

namespace flagspec {

using Integer = mpz_class;
using Rational = mpq_class;

}  // namespace flagspec

// Lets Eigen hold exact integers, e.g. for the fraction-free determinant.
namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
