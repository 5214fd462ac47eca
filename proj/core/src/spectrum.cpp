#include "leibniz/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/polynomial.hpp"

namespace leibniz {

bool ComplexSpectrum::all_rational() const {
  return std::all_of(components.begin(), components.end(),
                     [](const SpectralComponent& c) { return c.exact_eigenvalue.has_value(); });
}

std::size_t ComplexSpectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& c : components) total += c.multiplicity;
  return total;
}

double ComplexSpectrum::max_residual() const {
  double r = 0.0;
  for (const auto& c : components) r = std::max(r, c.residual);
  return r;
}

Eigen::MatrixXd to_eigen(const Matrix& a) {
  Eigen::MatrixXd out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(r, c).to_double();
  return out;
}

namespace {

struct Root {
  std::complex<double> value;
  std::optional<Rational> exact;
  std::size_t multiplicity;
};

std::vector<Root> exact_roots(const Matrix& a) {
  std::vector<Root> roots;
  const auto factors = squarefree_decomposition(characteristic_polynomial(a));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Polynomial rest = factors[i];
    if (rest.degree() < 1) continue;
    for (const auto& r : rational_roots(rest)) {
      roots.push_back({std::complex<double>(r.to_double(), 0.0), r, i + 1});
      rest = divmod(rest, Polynomial::linear_factor(r)).first;
    }
    for (const auto& z : numeric_roots(rest)) roots.push_back({z, std::nullopt, i + 1});
  }
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    return x.value.real() != y.value.real() ? x.value.real() < y.value.real()
                                            : x.value.imag() < y.value.imag();
  });
  return roots;
}

Eigen::MatrixXcd shifted_power(const Eigen::MatrixXcd& a, std::complex<double> lambda, std::size_t k) {
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXcd shifted = a - lambda * Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n);
  for (std::size_t i = 0; i < k; ++i) p = p * shifted;
  return p;
}

}  // namespace

ComplexSpectrum generalized_eigenspaces(const Matrix& a, const SpectrumOptions& options) {
  if (!a.is_square()) throw Error(ErrorCode::kDimensionMismatch, "generalized_eigenspaces");
  const std::size_t n = a.rows();
  const std::vector<Root> roots = exact_roots(a);

  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const double gap = std::abs(roots[i].value - roots[j].value);
      if (gap < 10.0 * options.tol_eig) {
        std::ostringstream os;
        os << "eigenvalues " << roots[i].value << " and " << roots[j].value << " are " << gap
           << " apart";
        throw Error(ErrorCode::kFailsToSeparate, os.str());
      }
    }
  }

  const Eigen::MatrixXcd ac = to_eigen(a).cast<std::complex<double>>();
  ComplexSpectrum spectrum;
  spectrum.ambient_dim = n;
  for (const auto& root : roots) {
    SpectralComponent comp;
    comp.eigenvalue = root.value;
    comp.exact_eigenvalue = root.exact;
    comp.multiplicity = root.multiplicity;
    const auto m = static_cast<Eigen::Index>(root.multiplicity);
    comp.basis.resize(static_cast<Eigen::Index>(n), m);
    const Eigen::MatrixXcd power = shifted_power(ac, root.value, root.multiplicity);
    if (root.exact) {
      const Matrix shifted = a - (*root.exact) * Matrix::identity(n);
      const Subspace gen_kernel = kernel(shifted.pow(root.multiplicity));
      if (gen_kernel.dim() != root.multiplicity) {
        throw std::logic_error("generalized eigenspace dimension differs from multiplicity");
      }
      for (Eigen::Index c = 0; c < m; ++c) {
        Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
        for (std::size_t r = 0; r < n; ++r) v(static_cast<Eigen::Index>(r)) = gen_kernel.basis()(static_cast<std::size_t>(c), r).to_double();
        comp.basis.col(c) = v.normalized();
      }
    } else {
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(power, Eigen::ComputeFullV);
      comp.basis = svd.matrixV().rightCols(m);
    }
    for (Eigen::Index c = 0; c < m; ++c) {
      comp.residual = std::max(comp.residual, (power * comp.basis.col(c)).norm());
    }
    spectrum.components.push_back(std::move(comp));
  }
  return spectrum;
}

std::vector<std::pair<Rational, std::size_t>> rational_eigenvalues(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::kDimensionMismatch, "rational_eigenvalues");
  std::vector<std::pair<Rational, std::size_t>> out;
  const auto factors = squarefree_decomposition(characteristic_polynomial(a));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& r : rational_roots(factors[i])) out.emplace_back(r, i + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::pair<Rational, std::size_t>>> rational_spectrum(const Matrix& a) {
  auto eigenvalues = rational_eigenvalues(a);
  std::size_t total = 0;
  for (const auto& [value, mult] : eigenvalues) total += mult;
  if (total != a.rows()) return std::nullopt;
  return eigenvalues;
}

}  // namespace leibniz
