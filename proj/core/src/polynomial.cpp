#include "leibniz/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <Eigen/Dense>
#include <set>
#include <stdexcept>

#include "leibniz/error.hpp"

namespace leibniz {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = Rational(1) / leading();
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational a = abs(c);
    if (k == 0 || a != Rational(1)) out += a.to_string();
    if (k >= 1) out += (k == 0 || a != Rational(1)) ? "*t" : "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(a.degree() - db + 1);
  const Rational lead_inv = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational q = rem[k] * lead_inv;
    quot[k - db] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coefficients()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kDimensionMismatch, "characteristic polynomial");
  const std::size_t n = m.rows();
  // c[k] is the coefficient of t^k; c[n] = 1.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix aux(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    aux = m * aux + c[n - k + 1] * id;
    c[n - k] = -(m * aux).trace() / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Polynomial> out;
  const Polynomial f = p.monic();
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(f.derivative(), a).first;
  Polynomial d = c - b.derivative();
  while (b.degree() >= 1) {
    Polynomial g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

namespace {

constexpr long kDivisorSearchLimit = 1'000'000;

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

std::vector<mpz_class> integer_coefficients(const std::vector<Rational>& coeffs) {
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    mpq_class scaled = c.raw() * mpq_class(lcm_den);
    ints.push_back(scaled.get_num());
  }
  return ints;
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const Polynomial& p) {
  const int d = p.degree();
  if (d < 1) return {};
  const Polynomial m = p.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -m.coefficient(static_cast<std::size_t>(i)).to_double();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + d);

  // A few Newton steps against the exact coefficients.
  std::vector<std::complex<double>> c(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) c[static_cast<std::size_t>(k)] = m.coefficient(static_cast<std::size_t>(k)).to_double();
  for (auto& z : roots) {
    for (int iter = 0; iter < 8; ++iter) {
      std::complex<double> f = 0.0, df = 0.0;
      for (int k = d; k >= 0; --k) {
        df = df * z + f;
        f = f * z + c[static_cast<std::size_t>(k)];
      }
      if (std::abs(df) == 0.0) break;
      const std::complex<double> step = f / df;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::set<Rational> roots;
  if (p.degree() < 1) return {};
  std::vector<Rational> coeffs = p.coefficients();
  std::size_t shift = 0;
  while (shift < coeffs.size() && coeffs[shift].is_zero()) ++shift;
  if (shift > 0) roots.insert(Rational(0));
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(shift));
  Polynomial reduced(coeffs);
  if (reduced.degree() >= 1) reduced = divmod(reduced, gcd(reduced, reduced.derivative())).first;
  if (reduced.degree() < 1) return {roots.begin(), roots.end()};

  const std::vector<mpz_class> ints = integer_coefficients(reduced.coefficients());
  const mpz_class& lead = ints.back();
  const mpz_class& tail = ints.front();
  if (abs(lead) <= kDivisorSearchLimit && abs(tail) <= kDivisorSearchLimit) {
    // Rational root theorem: complete and exact.
    for (const auto& num : divisors(tail)) {
      for (const auto& den : divisors(lead)) {
        for (int sign : {1, -1}) {
          const Rational candidate(mpq_class(num * sign, den));
          if (reduced(candidate).is_zero()) roots.insert(candidate);
        }
      }
    }
  } else {
    // Any rational root has the form s / lead with s an integer; locate s
    // numerically and confirm exactly.
    const double lead_d = lead.get_d();
    for (const auto& z : numeric_roots(reduced)) {
      if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
      const double s = std::round(z.real() * lead_d);
      for (double delta : {0.0, -1.0, 1.0}) {
        mpz_class num(s + delta);
        const Rational candidate(mpq_class(num, lead));
        if (reduced(candidate).is_zero()) roots.insert(candidate);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace leibniz
