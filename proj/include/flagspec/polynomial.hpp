#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "flagspec/integer.hpp"

namespace flagspec {

/// Dense univariate polynomial over a commutative ring, coefficients in
/// ascending degree. The zero polynomial has no coefficients and degree -1;
/// otherwise the leading coefficient is nonzero.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> ascending)
      : coeffs_(std::move(ascending)) {
    trim();
  }
  Polynomial(std::initializer_list<Scalar> ascending) : coeffs_(ascending) {
    trim();
  }

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  /// x - root
  static Polynomial linear_factor(const Scalar& root) {
    return Polynomial({Scalar(-root), Scalar(1)});
  }
  static Polynomial monomial(int degree, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Coefficient of x^i; zero outside the stored range.
  Scalar operator[](int i) const {
    if (i < 0 || i > degree()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Scalar& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == Scalar(1); }

  template <typename Value>
  Value evaluate(const Value& x) const {
    Value acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + Value(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (degree() < 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      d[i - 1] = coeffs_[i] * Scalar(static_cast<long>(i));
    }
    return Polynomial(std::move(d));
  }

  template <typename Other, typename Convert>
  Polynomial<Other> map(Convert convert) const {
    std::vector<Other> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(convert(c));
    return Polynomial<Other>(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form, highest degree first, e.g. "x^4 - 4*x^2".
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      Scalar c = (*this)[i];
      if (c == 0) continue;
      bool negative = c < 0;
      Scalar mag = negative ? Scalar(-c) : c;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      bool unit = (mag == 1);
      if (i == 0 || !unit) os << mag;
      if (i > 0) {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

template <typename Scalar>
Polynomial<Scalar> pow(Polynomial<Scalar> base, unsigned exponent) {
  Polynomial<Scalar> result = Polynomial<Scalar>::constant(Scalar(1));
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Polynomial<Scalar>& p) {
  return os << p.to_string();
}

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

}  // namespace flagspec
