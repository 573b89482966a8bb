#include "flagspec/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "flagspec/errors.hpp"

namespace flagspec {

IntPolynomial char_poly(const Graph& g) {
  const int n = g.order();
  std::vector<Integer> c{Integer(1)};
  std::vector<Integer> q, w, next;
  std::vector<std::vector<Vertex>> lower(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (u < v) lower[v].push_back(u);
    }
  }
  // Same recurrence as characteristic_polynomial(), with A restricted to the
  // leading block applied through neighbour lists. Diagonal entries are 0.
  std::vector<std::vector<Vertex>> inner(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) {
    const Vertex last = r - 1;
    q.assign(static_cast<std::size_t>(r) + 1, Integer(0));
    q[0] = 1;
    w.assign(static_cast<std::size_t>(last), Integer(0));
    for (Vertex u : lower[last]) w[u] = 1;
    for (int j = 0; j + 2 <= r; ++j) {
      Integer dot(0);
      for (Vertex u : lower[last]) dot += w[u];
      q[j + 2] = -dot;
      if (j + 3 > r) break;
      next.assign(w.size(), Integer(0));
      for (Vertex i = 0; i < last; ++i) {
        for (Vertex k : inner[i]) next[i] += w[k];
      }
      std::swap(w, next);
    }
    next.assign(static_cast<std::size_t>(r) + 1, Integer(0));
    for (int i = 0; i <= r; ++i) {
      for (int j = 0; j <= std::min(i, r - 1); ++j) {
        if (q[i - j] != 0) mpz_addmul(next[i].get_mpz_t(), q[i - j].get_mpz_t(), c[j].get_mpz_t());
      }
    }
    std::swap(c, next);
    // grow the leading block's adjacency by the new vertex
    for (Vertex u : lower[last]) {
      inner[u].push_back(last);
      inner[last].push_back(u);
    }
  }
  return IntPolynomial(std::vector<Integer>(c.rbegin(), c.rend()));
}

CharPolyAudit audit_char_poly(const Graph& g, const IntPolynomial& p) {
  const int n = g.order();
  CharPolyAudit audit;
  audit.monic_of_order = p.is_monic() && p.degree() == n;
  Integer det = determinant(g.adjacency_matrix<Integer>());
  audit.constant_is_det = p[0] == (n % 2 == 0 ? det : Integer(-det));
  audit.trace_free = n < 1 || p[n - 1] == 0;
  audit.edge_coefficient = n < 2 || p[n - 2] == -Integer(static_cast<unsigned long>(g.size()));
  return audit;
}

// ---------------------------------------------------------------------------

namespace {

/// Splits d = s^2 * f with f square-free.
std::pair<Integer, Integer> square_free_split(Integer d) {
  Integer square(1);
  for (Integer f = 2; f * f <= d; ++f) {
    Integer ff = f * f;
    while (d % ff == 0) {
      d /= ff;
      square *= f;
    }
  }
  return {square, d};
}

}  // namespace

AlgebraicEigenvalue::AlgebraicEigenvalue(Rational a, Rational b, Integer d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ < 0) throw InvalidClaim("negative radicand " + d_.get_str());
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  auto [square, rest] = square_free_split(d_);
  b_ *= square;
  d_ = rest;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

AlgebraicEigenvalue AlgebraicEigenvalue::conjugate() const { return {a_, -b_, d_}; }

double AlgebraicEigenvalue::approx() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::string AlgebraicEigenvalue::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string out;
  if (a_ != 0) out = a_.get_str();
  Rational mag = abs(b_);
  if (b_ < 0) {
    out += "-";
  } else if (a_ != 0) {
    out += "+";
  }
  if (mag != 1) out += mag.get_str();
  out += "√" + d_.get_str();
  return out;
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty number");
  std::string body = s;
  if (body.front() == '+') body.erase(0, 1);
  for (std::size_t i = 0; i < body.size(); ++i) {
    char ch = body[i];
    bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (ch == '-' && i == 0);
    if (!ok) throw ParseError("bad rational '" + s + "'");
  }
  Rational q;
  if (q.set_str(body, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

AlgebraicEigenvalue AlgebraicEigenvalue::parse(std::string_view text) {
  std::string s = strip(text);
  for (std::size_t pos; (pos = s.find("sqrt")) != std::string::npos;) s.replace(pos, 4, "√");
  if (s.empty()) throw ParseError("empty eigenvalue");

  // (inner) or (inner)/m
  if (s.front() == '(') {
    std::size_t close = 0;
    for (int depth = 0; close < s.size(); ++close) {
      if (s[close] == '(') ++depth;
      if (s[close] == ')' && --depth == 0) break;
    }
    if (close == s.size()) throw ParseError("unbalanced parentheses in '" + s + "'");
    std::string rest = s.substr(close + 1);
    Rational divisor(1);
    if (!rest.empty()) {
      if (rest.front() != '/') throw ParseError("expected '/' after ')' in '" + s + "'");
      divisor = parse_rational(rest.substr(1));
      if (divisor == 0) throw ParseError("division by zero in '" + s + "'");
    }
    AlgebraicEigenvalue base = parse(s.substr(1, close - 1));
    return {base.a_ / divisor, base.b_ / divisor, base.d_};
  }

  auto radical = s.find("√");
  if (radical == std::string::npos) return AlgebraicEigenvalue(parse_rational(s));

  std::string prefix = s.substr(0, radical);
  std::string radicand = s.substr(radical + std::string("√").size());
  if (!radicand.empty() && radicand.front() == '(') {
    if (radicand.back() != ')') throw ParseError("unbalanced radicand in '" + s + "'");
    radicand = radicand.substr(1, radicand.size() - 2);
  }
  if (radicand.empty() ||
      !std::all_of(radicand.begin(), radicand.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw ParseError("radicand must be a non-negative integer in '" + s + "'");
  }
  if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();

  Rational a(0);
  std::string coeff = prefix;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if (prefix[i] == '+' || prefix[i] == '-') {
      a = parse_rational(prefix.substr(0, i));
      coeff = prefix.substr(i);
      break;
    }
  }
  Rational b;
  if (coeff.empty() || coeff == "+") {
    b = 1;
  } else if (coeff == "-") {
    b = -1;
  } else {
    b = parse_rational(coeff);
  }
  return {a, b, Integer(radicand)};
}

SpectrumClaim::SpectrumClaim(std::initializer_list<std::pair<AlgebraicEigenvalue, int>> entries) {
  for (const auto& [value, m] : entries) add(value, m);
}

SpectrumClaim& SpectrumClaim::add(const AlgebraicEigenvalue& value, int multiplicity) {
  if (multiplicity <= 0) return *this;
  for (auto& e : entries_) {
    if (e.value == value) {
      e.multiplicity += multiplicity;
      return *this;
    }
  }
  entries_.push_back({value, multiplicity});
  return *this;
}

SpectrumClaim& SpectrumClaim::add_pair(const AlgebraicEigenvalue& value, int multiplicity) {
  add(value, multiplicity);
  if (!value.is_rational()) add(value.conjugate(), multiplicity);
  return *this;
}

int SpectrumClaim::total_multiplicity() const {
  int total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

SpectrumClaim SpectrumClaim::sorted() const {
  SpectrumClaim out = *this;
  std::stable_sort(out.entries_.begin(), out.entries_.end(),
                   [](const SpectrumEntry& x, const SpectrumEntry& y) {
                     return x.value.approx() > y.value.approx();
                   });
  return out;
}

std::string SpectrumClaim::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : sorted().entries_) {
    if (!first) os << ", ";
    first = false;
    std::string v = e.value.to_string();
    bool wrap = e.multiplicity != 1 && (v.find_first_of("+√") != std::string::npos || v.find('-', 1) != std::string::npos ||
                                        v.find('/') != std::string::npos || v.front() == '-');
    os << (wrap ? "(" + v + ")" : v);
    if (e.multiplicity != 1) os << "^" << e.multiplicity;
  }
  return os.str();
}

IntPolynomial claim_to_polynomial(const SpectrumClaim& c) {
  RationalPolynomial product = RationalPolynomial::constant(Rational(1));
  for (const auto& e : c.entries()) {
    const auto& value = e.value;
    if (value.is_rational()) {
      product = product * pow(RationalPolynomial::linear_factor(value.rational_part()),
                              static_cast<unsigned>(e.multiplicity));
      continue;
    }
    const auto conj = value.conjugate();
    auto partner = std::find_if(c.entries().begin(), c.entries().end(),
                                [&](const SpectrumEntry& x) { return x.value == conj; });
    if (partner == c.entries().end() || partner->multiplicity != e.multiplicity) {
      throw InvalidClaim("conjugate of " + value.to_string() + " is missing or has a different multiplicity");
    }
    if (value.radical_coefficient() < 0) continue;  // handled with its partner
    const Rational& a = value.rational_part();
    const Rational& b = value.radical_coefficient();
    // (x - a)^2 - b^2 d
    RationalPolynomial quadratic({Rational(a * a - b * b * Rational(value.radicand())), Rational(-2 * a), Rational(1)});
    product = product * pow(quadratic, static_cast<unsigned>(e.multiplicity));
  }
  std::vector<Integer> coeffs;
  for (const auto& q : product.coefficients()) {
    if (q.get_den() != 1) {
      throw NonIntegralClaim("claimed spectrum gives coefficient " + q.get_str() + " which is not an integer");
    }
    coeffs.push_back(q.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

bool verify_spectrum(const IntPolynomial& char_poly_of_g, const SpectrumClaim& c) {
  if (c.total_multiplicity() != char_poly_of_g.degree()) {
    throw InvalidClaim("claim multiplicities sum to " + std::to_string(c.total_multiplicity()) +
                       " but the graph has order " + std::to_string(char_poly_of_g.degree()));
  }
  return char_poly_of_g == claim_to_polynomial(c);
}

bool verify_spectrum(const Graph& g, const SpectrumClaim& c) {
  if (c.total_multiplicity() != g.order()) {
    throw InvalidClaim("claim multiplicities sum to " + std::to_string(c.total_multiplicity()) +
                       " but the graph has order " + std::to_string(g.order()));
  }
  return verify_spectrum(char_poly(g), c);
}

SpectrumClaim formula_spectrum_incidence(const DesignParams& p) {
  SpectrumClaim claim;
  const auto top = AlgebraicEigenvalue::sqrt_of(Integer(p.r) * p.k);
  const auto mid = AlgebraicEigenvalue::sqrt_of(Integer(p.r - p.lambda));
  claim.add(top, 1);
  claim.add(mid, p.v - 1);
  claim.add(AlgebraicEigenvalue(Rational(0)), p.b - p.v);
  claim.add(-mid, p.v - 1);
  claim.add(-top, 1);
  return claim;
}

SpectrumClaim formula_spectrum_gamma1(const DesignParams& p) {
  SpectrumClaim claim;
  const Integer discriminant = Integer(p.k - p.r) * (p.k - p.r) + Integer(4) * (p.r - p.lambda);
  const AlgebraicEigenvalue plus(Rational(p.r + p.k - 4, 2), Rational(1, 2), discriminant);
  const AlgebraicEigenvalue minus(Rational(p.r + p.k - 4, 2), Rational(-1, 2), discriminant);
  claim.add(AlgebraicEigenvalue(Rational(p.r + p.k - 2)), 1);
  claim.add(plus, p.v - 1);
  claim.add(AlgebraicEigenvalue(Rational(p.k - 2)), p.b - p.v);
  claim.add(minus, p.v - 1);
  claim.add(AlgebraicEigenvalue(Rational(-2)), p.b * p.k - p.b - p.v + 1);
  return claim;
}

bool cospectral(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.size() == h.size() && char_poly(g) == char_poly(h);
}

// ---------------------------------------------------------------------------

namespace {

int sign_at(const IntPolynomial& p, const Rational& x) {
  // sign of p(num/den) * den^n = sum a_i num^i den^(n-i), den > 0
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  const int n = p.degree();
  std::vector<Integer> den_power(static_cast<std::size_t>(n) + 1, Integer(1));
  for (int i = 1; i <= n; ++i) den_power[i] = den_power[i - 1] * den;
  Integer acc(0);
  for (int i = n; i >= 0; --i) acc = acc * num + p[i] * den_power[n - i];
  return sgn(acc);
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  Integer content(0);
  for (const auto& c : p.coefficients()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content == 0 || content == 1) return p;
  std::vector<Integer> out;
  for (const auto& c : p.coefficients()) out.push_back(Integer(c / content));
  return IntPolynomial(std::move(out));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, exactly over Z.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  const int db = b.degree();
  const Integer& lead = b.leading();
  int exponent = a.degree() - db + 1;
  std::vector<Integer> r = a.coefficients();
  int dr = a.degree();
  while (dr >= db && dr >= 0) {
    Integer t = r[dr];
    for (auto& x : r) x *= lead;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= t * b[i];
    --exponent;
    while (dr >= 0 && r[dr] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  IntPolynomial rem(std::move(r));
  if (exponent > 0) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(exponent));
    rem *= scale;
  }
  return rem;
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq{primitive_part(p), primitive_part(p.derivative())};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // r = lc(b)^e * rem(a, b); the next term is a positive multiple of -rem.
    const int e = a.degree() - b.degree() + 1;
    bool flip = sgn(b.leading()) < 0 && (e % 2 == 1);
    r = primitive_part(r);
    seq.push_back(flip ? r : IntPolynomial(-r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<IntPolynomial>& seq, const Rational& x) {
  int count = 0;
  int previous = 0;
  for (const auto& s : seq) {
    int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (previous != 0 && sg != previous) ++count;
    previous = sg;
  }
  return count;
}

}  // namespace

int count_distinct_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) return 0;
  auto seq = sturm_sequence(p);
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

std::vector<EigenCluster> numeric_spectrum(const Graph& g, double tolerance) {
  if (!(tolerance > 0.0)) throw ValidationError("InvalidTolerance", "tolerance must be positive");
  const int n = g.order();
  std::vector<EigenCluster> clusters;
  if (n == 0) return clusters;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency_matrix<double>(),
                                                        Eigen::EigenvaluesOnly);
  Eigen::VectorXd values = solver.eigenvalues();  // ascending
  std::vector<std::pair<double, int>> raw;
  double sum = values[0];
  int count = 1;
  for (Eigen::Index i = 1; i <= values.size(); ++i) {
    if (i < values.size() && values[i] - values[i - 1] <= tolerance) {
      sum += values[i];
      ++count;
      continue;
    }
    raw.emplace_back(sum / count, count);
    if (i < values.size()) {
      sum = values[i];
      count = 1;
    }
  }
  const IntPolynomial p = char_poly(g);
  auto seq = sturm_sequence(p);
  const Rational tol(tolerance);
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
    const Rational centre(it->first);
    bool certified = sign_variations(seq, centre - tol) - sign_variations(seq, centre + tol) >= 1;
    clusters.push_back({it->first, it->second, certified});
  }
  return clusters;
}

bool numeric_matches_claim(const std::vector<EigenCluster>& clusters, const SpectrumClaim& c,
                           double tolerance) {
  if (clusters.size() != c.entries().size()) return false;
  std::vector<bool> used(clusters.size(), false);
  for (const auto& e : c.entries()) {
    const double target = e.value.approx();
    bool found = false;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      if (!used[i] && std::abs(clusters[i].value - target) <= tolerance &&
          clusters[i].multiplicity == e.multiplicity) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace flagspec
