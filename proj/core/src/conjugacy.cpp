#include "leibniz/conjugacy.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "leibniz/cartan.hpp"
#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/polynomial.hpp"
#include "leibniz/quotient.hpp"
#include "leibniz/random.hpp"

namespace leibniz {

WeightDecomposition weight_decomposition(const LeibnizAlgebra& algebra, const Vector& b,
                                         const SpectrumOptions& options) {
  const std::size_t n = algebra.dim();
  const Matrix op = algebra.right_mult(b);
  const ComplexSpectrum spectrum = generalized_eigenspaces(op, options);
  WeightDecomposition wd{algebra.element(b), {}, fitting_pair(op).null_component};
  bool saw_zero = false;
  for (const auto& comp : spectrum.components) {
    WeightComponent wc;
    wc.weight = comp.eigenvalue;
    wc.exact_weight = comp.exact_eigenvalue;
    wc.dim = comp.multiplicity;
    wc.space = comp.basis;
    wc.residual = comp.residual;
    if (comp.exact_eigenvalue) {
      wc.exact_space = kernel((op - (*comp.exact_eigenvalue) * Matrix::identity(n)).pow(n));
      if (comp.exact_eigenvalue->is_zero()) {
        saw_zero = true;
        if (!(*wc.exact_space == wd.zero_component)) {
          throw std::logic_error("weight_decomposition: zero weight space differs from Fitting null component");
        }
      }
    }
    wd.components.push_back(std::move(wc));
  }
  if (!saw_zero && !wd.zero_component.is_zero()) {
    throw std::logic_error("weight_decomposition: missing zero weight");
  }
  return wd;
}

bool is_automorphism(const LeibnizAlgebra& algebra, const Matrix& delta) {
  const std::size_t n = algebra.dim();
  if (delta.rows() != n || delta.cols() != n) return false;
  if (determinant(delta).is_zero()) return false;
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = delta.column(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (delta.apply(algebra.product(i, j)) != algebra.bracket(images[i], images[j])) return false;
    }
  }
  return true;
}

Automorphism identity_automorphism(const LeibnizAlgebra& algebra) {
  return {Matrix::identity(algebra.dim()), {}};
}

Automorphism exp_automorphism(const LeibnizAlgebra& algebra, const Vector& z) {
  Automorphism delta{exp_nilpotent(algebra.right_mult(z)), {z}};
  if (!is_automorphism(algebra, delta.matrix)) {
    throw std::logic_error("exp(R_z) is not an automorphism; is the table a Leibniz algebra?");
  }
  return delta;
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  Automorphism out{outer.matrix * inner.matrix, inner.generators};
  out.generators.insert(out.generators.end(), outer.generators.begin(), outer.generators.end());
  return out;
}

Automorphism inverse(const Automorphism& delta) {
  Automorphism out{leibniz::inverse(delta.matrix), {}};
  for (auto it = delta.generators.rbegin(); it != delta.generators.rend(); ++it) {
    out.generators.push_back(Rational(-1) * *it);
  }
  return out;
}

namespace {

// x = x0 + x1 with x0 in the null and x1 in the one component.
Vector null_part(const FittingPair& fp, const Vector& x) {
  const std::size_t n = x.size();
  std::vector<Vector> columns = fp.null_component.basis_vectors();
  for (auto& v : fp.one_component.basis_vectors()) columns.push_back(std::move(v));
  const Vector coeffs = leibniz::inverse(Matrix::from_columns(columns, n)).apply(x);
  Vector x0(n);
  for (std::size_t i = 0; i < fp.null_component.dim(); ++i) x0 = x0 + coeffs[i] * columns[i];
  return x0;
}

}  // namespace

Lemma31Check verify_lemma31(const LeibnizAlgebra& algebra, const Vector& x, const Vector& b, std::size_t k) {
  const Matrix op = algebra.right_mult(b);
  const FittingPair fp = fitting_pair(op);
  if (!is_subalgebra(algebra, fp.null_component) || !is_cartan(algebra, fp.null_component).is_cartan) {
    throw Error(ErrorCode::kHypothesisViolated,
                "Fitting null component of R_b is not a Cartan subalgebra: " + fp.null_component.to_string());
  }
  const Subspace ideal = squares_ideal(algebra);
  if (!ideal.contains(op.pow(k).apply(x))) {
    throw Error(ErrorCode::kHypothesisViolated,
                "[..[x,b],..,b] (" + std::to_string(k) + " times) is not in the squares ideal");
  }
  Lemma31Check check;
  check.x0 = null_part(fp, x);
  if (check.x0 == x) throw Error(ErrorCode::kHypothesisViolated, "x equals its null-component part x0");
  check.difference = x - check.x0;
  check.conclusion = ideal.contains(check.difference);
  return check;
}

std::vector<Vector> root_generators(const LeibnizAlgebra& algebra, const Subspace& c, std::uint64_t seed) {
  const std::size_t n = algebra.dim();
  const Element b = find_spanning_operator(algebra, c, seed);
  const Matrix op = right_mult(b);
  std::vector<Vector> out;
  for (const auto& [lambda, mult] : rational_eigenvalues(op)) {
    if (lambda.is_zero()) continue;
    const Subspace space = kernel((op - lambda * Matrix::identity(n)).pow(n));
    for (auto& v : space.basis_vectors()) {
      const Matrix rv = algebra.right_mult(v);
      if (!rv.is_zero() && is_nilpotent(rv)) out.push_back(std::move(v));
    }
  }
  return out;
}

namespace {

struct Generator {
  Vector z;
  std::vector<Matrix> scaled_powers;  // R_z^k / k!, k = 0.. until zero
};

Matrix exp_of(const Generator& g, const Rational& t) {
  Matrix out = g.scaled_powers.front();
  Rational tk = 1;
  for (std::size_t k = 1; k < g.scaled_powers.size(); ++k) {
    tk *= t;
    out += tk * g.scaled_powers[k];
  }
  return out;
}

struct Step {
  std::size_t generator;
  Rational coeff;
};

class ConjugatorSearch {
 public:
  ConjugatorSearch(const LeibnizAlgebra& algebra, const Subspace& c1, const Subspace& c2,
                   std::vector<Generator> pool, std::size_t budget)
      : algebra_(algebra), c1_(c1), c2_(c2), pool_(std::move(pool)), budget_(budget) {}

  std::size_t candidates() const { return candidates_; }
  bool exhausted() const { return candidates_ >= budget_; }
  void set_budget(std::size_t budget) { budget_ = budget; }

  // Enumerates all prefixes of length `prefix_length` over the coefficient
  // grid, solving for the last generator's coefficient.
  std::optional<Automorphism> enumerate(std::size_t prefix_length) {
    std::vector<Step> prefix;
    return enumerate_from(prefix, Matrix::identity(algebra_.dim()), prefix_length);
  }

  std::optional<Automorphism> random_candidate(Random& rng, std::size_t max_length) {
    const std::size_t length = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_length)));
    std::vector<Step> prefix;
    Matrix m = Matrix::identity(algebra_.dim());
    for (std::size_t i = 0; i + 1 < length; ++i) {
      const std::size_t g = pick_generator(rng, prefix);
      const Rational coeff(rng.integer(1, 3) * (rng.integer(0, 1) ? 1 : -1), rng.integer(1, 3));
      m = exp_of(pool_[g], coeff) * m;
      prefix.push_back({g, coeff});
    }
    return solve_last(prefix, m, pick_generator(rng, prefix));
  }

 private:
  std::size_t pick_generator(Random& rng, const std::vector<Step>& prefix) const {
    if (pool_.size() == 1) return 0;
    while (true) {
      const auto g = static_cast<std::size_t>(rng.integer(0, static_cast<long>(pool_.size()) - 1));
      if (prefix.empty() || prefix.back().generator != g) return g;
    }
  }

  std::optional<Automorphism> enumerate_from(std::vector<Step>& prefix, const Matrix& m, std::size_t remaining) {
    static const Rational kGrid[] = {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(2),
                                     Rational(-2)};
    for (std::size_t g = 0; g < pool_.size(); ++g) {
      if (!prefix.empty() && prefix.back().generator == g) continue;
      if (remaining == 0) {
        if (exhausted()) return std::nullopt;
        if (auto found = solve_last(prefix, m, g)) return found;
        continue;
      }
      for (const auto& coeff : kGrid) {
        if (exhausted()) return std::nullopt;
        prefix.push_back({g, coeff});
        auto found = enumerate_from(prefix, exp_of(pool_[g], coeff) * m, remaining - 1);
        prefix.pop_back();
        if (found) return found;
      }
    }
    return std::nullopt;
  }

  // Finds t with exp(t R_v) m (c1) = c2. Each coordinate of the residual of
  // exp(t R_v) m u modulo c2 is a polynomial in t; solutions are the
  // rational roots of their gcd.
  std::optional<Automorphism> solve_last(const std::vector<Step>& prefix, const Matrix& m, std::size_t g) {
    ++candidates_;
    const Generator& gen = pool_[g];
    const std::size_t n = algebra_.dim();
    Polynomial common;
    for (const auto& u0 : c1_.basis_vectors()) {
      const Vector u = m.apply(u0);
      std::vector<Vector> terms;
      for (const auto& p : gen.scaled_powers) terms.push_back(c2_.residual(p.apply(u)));
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rational> coeffs;
        for (const auto& t : terms) coeffs.push_back(t[c]);
        common = gcd(common, Polynomial(std::move(coeffs)));
        if (common.degree() == 0) return std::nullopt;
      }
    }
    std::vector<Rational> roots;
    if (common.is_zero()) {
      roots.push_back(Rational(0));
    } else {
      roots = rational_roots(common);
    }
    for (const auto& t : roots) {
      Automorphism delta{exp_of(gen, t) * m, {}};
      for (const auto& step : prefix) delta.generators.push_back(step.coeff * pool_[step.generator].z);
      if (!t.is_zero()) delta.generators.push_back(t * gen.z);
      if (delta.apply(c1_) == c2_) return delta;
    }
    return std::nullopt;
  }

  const LeibnizAlgebra& algebra_;
  const Subspace& c1_;
  const Subspace& c2_;
  std::vector<Generator> pool_;
  std::size_t budget_;
  std::size_t candidates_ = 0;
};

void require_cartan(const LeibnizAlgebra& algebra, const Subspace& c, const char* which) {
  if (c.ambient_dim() != algebra.dim()) throw Error(ErrorCode::kDimensionMismatch, which);
  if (!is_subalgebra(algebra, c) || !is_cartan(algebra, c).is_cartan) {
    throw Error(ErrorCode::kNotCartan, std::string(which) + " = " + c.to_string() + " is not a Cartan subalgebra");
  }
}

}  // namespace

ConjugationResult conjugate_cartan(const LeibnizAlgebra& algebra, const Subspace& c1, const Subspace& c2,
                                   const ConjugationOptions& options) {
  require_cartan(algebra, c1, "c1");
  require_cartan(algebra, c2, "c2");
  if (c1 == c2) return {identity_automorphism(algebra), 0, 0, "identity"};
  if (c1.dim() != c2.dim()) {
    throw Error(ErrorCode::kNotFound, "Cartan subalgebras of different dimensions");
  }

  std::vector<Generator> pool;
  std::vector<Subspace> seen;
  for (const Subspace* c : {&c1, &c2}) {
    for (auto& z : root_generators(algebra, *c, options.seed)) {
      const Subspace line = Subspace::span(algebra.dim(), std::vector<Vector>{z});
      if (std::find(seen.begin(), seen.end(), line) != seen.end()) continue;
      seen.push_back(line);
      Generator g{line.basis().row_vector(0), {}};
      const Matrix rz = algebra.right_mult(g.z);
      Matrix term = Matrix::identity(algebra.dim());
      for (std::size_t k = 0; !term.is_zero(); ++k) {
        g.scaled_powers.push_back(term);
        term = term * rz * Rational(1, static_cast<long>(k + 1));
      }
      pool.push_back(std::move(g));
    }
  }
  const std::size_t pool_size = pool.size();
  if (pool.empty()) throw Error(ErrorCode::kNotFound, "no nilpotent root vectors to build a conjugator from");

  const std::size_t enumeration_budget = options.budget - options.budget / 4;
  ConjugatorSearch search(algebra, c1, c2, std::move(pool), enumeration_budget);

  auto finish = [&](Automorphism delta, const char* phase) {
    if (!is_automorphism(algebra, delta.matrix)) throw std::logic_error("conjugator is not an automorphism");
    const Subspace image = delta.apply(c1);
    if (!(image == c2) || !is_cartan(algebra, image).is_cartan) {
      throw std::logic_error("conjugator does not map c1 onto a Cartan subalgebra equal to c2");
    }
    return ConjugationResult{std::move(delta), search.candidates(), pool_size, phase};
  };

  for (std::size_t length = 1; length <= options.max_length && !search.exhausted(); ++length) {
    if (auto found = search.enumerate(length - 1)) return finish(std::move(*found), "enumeration");
  }
  search.set_budget(options.budget);
  Random rng(options.seed);
  while (!search.exhausted()) {
    if (auto found = search.random_candidate(rng, options.max_length)) return finish(std::move(*found), "random");
  }
  throw Error(ErrorCode::kNotFound, "no conjugator within " + std::to_string(options.budget) + " candidates");
}

}  // namespace leibniz
