#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "flagspec/design.hpp"
#include "flagspec/graph.hpp"
#include "flagspec/integer.hpp"
#include "flagspec/polynomial.hpp"

namespace flagspec {

// ---------------------------------------------------------------------------
// Exact characteristic polynomials

/// det(xI - M) by Berkowitz's algorithm. Division-free, so it is exact over
/// any commutative ring: use long long for small matrices, Integer otherwise.
template <typename Derived>
Polynomial<typename Derived::Scalar> characteristic_polynomial(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  // c holds the coefficients of the leading principal minor's polynomial,
  // highest degree first.
  std::vector<Scalar> c{Scalar(1)};
  std::vector<Scalar> q, w, next;
  for (Eigen::Index r = 1; r <= n; ++r) {
    const Eigen::Index last = r - 1;
    q.assign(static_cast<std::size_t>(r) + 1, Scalar(0));
    q[0] = Scalar(1);
    q[1] = Scalar(-m(last, last));
    w.assign(static_cast<std::size_t>(last), Scalar(0));
    for (Eigen::Index i = 0; i < last; ++i) w[i] = m(i, last);
    for (Eigen::Index j = 0; j + 2 <= r; ++j) {
      Scalar dot(0);
      for (Eigen::Index i = 0; i < last; ++i) dot += m(last, i) * w[i];
      q[j + 2] = Scalar(-dot);
      next.assign(w.size(), Scalar(0));
      for (Eigen::Index i = 0; i < last; ++i)
        for (Eigen::Index k = 0; k < last; ++k) next[i] += m(i, k) * w[k];
      std::swap(w, next);
    }
    next.assign(static_cast<std::size_t>(r) + 1, Scalar(0));
    for (Eigen::Index i = 0; i <= r; ++i)
      for (Eigen::Index j = 0; j <= std::min(i, r - 1); ++j) next[i] += q[i - j] * c[j];
    std::swap(c, next);
  }
  return Polynomial<Scalar>(std::vector<Scalar>(c.rbegin(), c.rend()));
}

/// Fraction-free (Bareiss) determinant; every division is exact.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return Scalar(0);
      a.row(k).swap(a.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = Scalar((a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous);
      }
    }
    previous = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Characteristic polynomial of the adjacency matrix, computed by Berkowitz
/// on the sparse neighbour structure over exact integers.
IntPolynomial char_poly(const Graph& g);

/// Integer cross-checks of a computed characteristic polynomial.
struct CharPolyAudit {
  bool monic_of_order = false;     ///< monic, degree n
  bool constant_is_det = false;    ///< p(0) == (-1)^n det(A), Bareiss route
  bool trace_free = false;         ///< coefficient of x^(n-1) is 0
  bool edge_coefficient = false;   ///< coefficient of x^(n-2) is -|E|
  bool passed() const { return monic_of_order && constant_is_det && trace_free && edge_coefficient; }
};

CharPolyAudit audit_char_poly(const Graph& g, const IntPolynomial& p);

// ---------------------------------------------------------------------------
// Spectrum claims

/// a + b*sqrt(d) with rational a, b and square-free d. Rationals are stored
/// with b = 0 and d = 0.
class AlgebraicEigenvalue {
 public:
  AlgebraicEigenvalue() = default;
  /// Normalises: squares are pulled out of d, d in {0, 1} folds into a.
  /// Throws InvalidClaim for negative d.
  AlgebraicEigenvalue(Rational a, Rational b, Integer d);
  explicit AlgebraicEigenvalue(Rational a) : a_(std::move(a)) { a_.canonicalize(); }
  static AlgebraicEigenvalue sqrt_of(const Integer& d) { return {Rational(0), Rational(1), d}; }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  AlgebraicEigenvalue conjugate() const;
  AlgebraicEigenvalue operator-() const { return {-a_, -b_, d_}; }
  double approx() const;

  /// "a", "a+b√d", "a-b√d", "b√d".
  std::string to_string() const;
  /// Accepts to_string() output, "sqrt" for √, and "(a±b√d)/m".
  static AlgebraicEigenvalue parse(std::string_view text);

  friend bool operator==(const AlgebraicEigenvalue& x, const AlgebraicEigenvalue& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

 private:
  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

struct SpectrumEntry {
  AlgebraicEigenvalue value;
  int multiplicity = 0;
};

/// Multiset of eigenvalues of degree at most 2 over Q.
class SpectrumClaim {
 public:
  SpectrumClaim() = default;
  SpectrumClaim(std::initializer_list<std::pair<AlgebraicEigenvalue, int>> entries);

  /// Adds multiplicity to an existing equal value or appends; m <= 0 is a no-op.
  SpectrumClaim& add(const AlgebraicEigenvalue& value, int multiplicity);
  /// Adds both a + b√d and a - b√d.
  SpectrumClaim& add_pair(const AlgebraicEigenvalue& value, int multiplicity);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  int total_multiplicity() const;
  /// Entries sorted by decreasing value.
  SpectrumClaim sorted() const;
  /// "value^m, ..." highest eigenvalue first; multiplicity 1 is omitted.
  std::string to_string() const;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Throws InvalidClaim when conjugate closure fails, NonIntegralClaim when
/// the product has a non-integer coefficient.
IntPolynomial claim_to_polynomial(const SpectrumClaim& c);

/// Exact identity char_poly(g) == claim_to_polynomial(c). Throws InvalidClaim
/// when the multiplicities do not sum to the graph order.
bool verify_spectrum(const Graph& g, const SpectrumClaim& c);
bool verify_spectrum(const IntPolynomial& char_poly_of_g, const SpectrumClaim& c);

/// sqrt(rk), sqrt(r-lambda)^(v-1), 0^(b-v), -sqrt(r-lambda)^(v-1), -sqrt(rk).
SpectrumClaim formula_spectrum_incidence(const DesignParams& p);

/// r+k-2, ((r+k-4 ± sqrt((k-r)^2 + 4(r-lambda)))/2)^(v-1), (k-2)^(b-v),
/// (-2)^(bk-b-v+1).
SpectrumClaim formula_spectrum_gamma1(const DesignParams& p);

bool cospectral(const Graph& g, const Graph& h);

// ---------------------------------------------------------------------------
// Numeric spectrum

struct EigenCluster {
  double value = 0.0;
  int multiplicity = 0;
  /// An exact root of the characteristic polynomial lies within tolerance,
  /// established by a Sturm count on rational endpoints.
  bool certified = false;
};

/// Eigenvalues of the adjacency matrix, clustered where consecutive values
/// are within `tolerance`, highest first.
std::vector<EigenCluster> numeric_spectrum(const Graph& g, double tolerance);

/// Number of distinct real roots of p in the half-open interval (lo, hi].
int count_distinct_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// Clusters and claim describe the same multiset: every claim entry has a
/// cluster within tolerance with the same multiplicity, and vice versa.
bool numeric_matches_claim(const std::vector<EigenCluster>& clusters, const SpectrumClaim& c,
                           double tolerance);

}  // namespace flagspec
