#include "leibniz/fixtures.hpp"

#include <charconv>
#include <optional>

#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/random.hpp"

namespace leibniz::fixtures {

namespace {

constexpr std::size_t kMaxDim = 20;

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

void require_dim(std::size_t n, std::size_t lo, const char* family) {
  if (n < lo || n > kMaxDim) {
    throw Error(ErrorCode::kUnknownLabel, std::string(family) + ": dimension " + std::to_string(n) +
                                              " outside [" + std::to_string(lo) + ", 20]");
  }
}

// Adds [e_i, e_j] += c e_k to a dense table.
class TableBuilder {
 public:
  explicit TableBuilder(std::size_t n) : n_(n), dense_(n * n, Vector(n)) {}
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) { dense_[i * n_ + j][k] += c; }
  const Vector& at(std::size_t i, std::size_t j) const { return dense_[i * n_ + j]; }

  std::vector<ProductEntry> entries() const {
    std::vector<ProductEntry> out;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        ProductEntry e{i, j, {}};
        for (std::size_t k = 0; k < n_; ++k)
          if (!dense_[i * n_ + j][k].is_zero()) e.result.push_back({k, dense_[i * n_ + j][k]});
        if (!e.result.empty()) out.push_back(std::move(e));
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<Vector> dense_;
};

AlgebraDocument example_document(const std::string& name, std::vector<std::string> basis,
                                 const std::vector<std::tuple<std::string, std::string, std::string, std::string>>& rows) {
  AlgebraDocument doc{name, basis.size(), std::move(basis), {}};
  for (const auto& [left, right, target, coeff] : rows) doc.table.push_back({left, right, {{target, coeff}}});
  return doc;
}

AlgebraDocument small_solvable_example() {
  return example_document("example-3.1", {"x", "y", "z"},
                          {{"x", "z", "x", "1"}, {"z", "y", "y", "1"}, {"y", "z", "y", "-1"}, {"z", "z", "x", "1"}});
}

AlgebraDocument sl2_extension_example() {
  return example_document("example-3.2", {"e1", "e2", "e3", "e4", "e5"},
                          {{"e2", "e1", "e3", "-1"},
                           {"e1", "e2", "e3", "1"},
                           {"e1", "e3", "e1", "-2"},
                           {"e3", "e1", "e1", "2"},
                           {"e3", "e2", "e2", "-2"},
                           {"e2", "e3", "e2", "2"},
                           {"e5", "e1", "e4", "1"},
                           {"e4", "e2", "e5", "1"},
                           {"e4", "e3", "e4", "-1"},
                           {"e5", "e3", "e5", "1"}});
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<FixtureInfo> catalog() {
  return {
      {"example-3.1", "3-dim solvable Leibniz algebra with [x,z]=x, [z,y]=y, [y,z]=-y, [z,z]=x"},
      {"example-3.2", "5-dim Leibniz algebra, sl2 extended by a 2-dim right module"},
      {"abelian-<n>", "all products zero"},
      {"filiform-leibniz-<n>", "[e_i,e_1] = e_{i+1}, nilpotent"},
      {"heisenberg", "3-dim Heisenberg Lie algebra (heisenberg-<n> for odd n)"},
      {"sl2-as-leibniz", "sl2 with basis e, f, h"},
      {"sl2-module-<m>", "sl2 plus its m-dim irreducible module acting on the right"},
      {"solvable-<n>[-<seed>]", "random solvable non-nilpotent non-Lie algebra"},
  };
}

AlgebraDocument document(std::string_view name) {
  const std::string n(name);
  if (n == "example-3.1") return small_solvable_example();
  if (n == "example-3.2") return sl2_extension_example();
  if (n == "heisenberg") return to_document(heisenberg(3), n);
  if (n == "sl2-as-leibniz") return to_document(sl2(), n);

  auto suffix_count = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!name.starts_with(prefix)) return std::nullopt;
    return parse_count(name.substr(prefix.size()));
  };
  if (auto k = suffix_count("abelian-")) return to_document(abelian(*k), n);
  if (auto k = suffix_count("filiform-leibniz-")) return to_document(filiform_leibniz(*k), n);
  if (auto k = suffix_count("heisenberg-")) return to_document(heisenberg(*k), n);
  if (auto k = suffix_count("sl2-module-")) return to_document(sl2_module(*k), n);
  if (name.starts_with("solvable-")) {
    std::string_view rest = name.substr(9);
    std::optional<std::size_t> seed = 0;
    if (const auto dash = rest.find('-'); dash != std::string_view::npos) {
      seed = parse_count(rest.substr(dash + 1));
      rest = rest.substr(0, dash);
    }
    const auto dim = parse_count(rest);
    if (dim && seed) return to_document(random_solvable(*dim, *seed), n);
  }
  throw Error(ErrorCode::kUnknownLabel, "unknown fixture '" + n + "'");
}

LeibnizAlgebra algebra(std::string_view name) { return to_algebra(document(name)); }

LeibnizAlgebra abelian(std::size_t n) {
  require_dim(n, 1, "abelian");
  return LeibnizAlgebra(numbered("e", n), {});
}

LeibnizAlgebra filiform_leibniz(std::size_t n) {
  require_dim(n, 1, "filiform-leibniz");
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i + 1 < n; ++i) entries.push_back({i, 0, {{i + 1, Rational(1)}}});
  return LeibnizAlgebra(numbered("e", n), std::move(entries));
}

LeibnizAlgebra heisenberg(std::size_t n) {
  if (n % 2 == 0) throw Error(ErrorCode::kUnknownLabel, "heisenberg: dimension must be odd");
  require_dim(n, 3, "heisenberg");
  const std::size_t k = n / 2;
  std::vector<std::string> names = numbered("x", k);
  for (auto& y : numbered("y", k)) names.push_back(y);
  names.push_back("z");
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i < k; ++i) {
    entries.push_back({i, k + i, {{n - 1, Rational(1)}}});
    entries.push_back({k + i, i, {{n - 1, Rational(-1)}}});
  }
  return LeibnizAlgebra(std::move(names), std::move(entries));
}

namespace {

enum Sl2 : std::size_t { kE = 0, kF = 1, kH = 2 };

void add_sl2(TableBuilder& t) {
  t.add(kE, kF, kH, 1);
  t.add(kF, kE, kH, -1);
  t.add(kH, kE, kE, 2);
  t.add(kE, kH, kE, -2);
  t.add(kH, kF, kF, -2);
  t.add(kF, kH, kF, 2);
}

}  // namespace

LeibnizAlgebra sl2() {
  TableBuilder t(3);
  add_sl2(t);
  return LeibnizAlgebra({"e", "f", "h"}, t.entries());
}

LeibnizAlgebra sl2_module(std::size_t m) {
  require_dim(m + 3, 4, "sl2-module");
  const std::size_t n = m + 3;
  TableBuilder t(n);
  add_sl2(t);
  const long top = static_cast<long>(m) - 1;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t v = 3 + k;
    const long kk = static_cast<long>(k);
    // [v_k, y] = -(y . v_k) for the standard module h.v_k = (m-1-2k) v_k,
    // f.v_k = v_{k+1}, e.v_k = k(m-k) v_{k-1}.
    if (top - 2 * kk != 0) t.add(v, kH, v, Rational(-(top - 2 * kk)));
    if (k + 1 < m) t.add(v, kF, v + 1, -1);
    if (k >= 1) t.add(v, kE, v - 1, Rational(-kk * (static_cast<long>(m) - kk)));
  }
  std::vector<std::string> names{"e", "f", "h"};
  for (auto& name : numbered("v", m)) names.push_back(name);
  return LeibnizAlgebra(std::move(names), t.entries());
}

LeibnizAlgebra random_solvable(std::size_t n, std::uint64_t seed) {
  require_dim(n, 3, "solvable");
  Random rng(seed);
  const std::size_t g = std::max<std::size_t>(2, (n + 1) / 2);
  const std::size_t m = n - g;

  auto nonzero = [&](long bound) {
    long v = 0;
    while (v == 0) v = rng.integer(-bound, bound);
    return v;
  };

  // Lie part: h = e_0, [a_i, h] = lambda_i a_i, [h, a_i] = -lambda_i a_i.
  TableBuilder t(n);
  std::vector<long> lambda(g, 0);
  for (std::size_t i = 1; i < g; ++i) {
    lambda[i] = nonzero(3);
    t.add(i, 0, i, lambda[i]);
    t.add(0, i, i, -lambda[i]);
  }
  // Module: rho(h) = diag(mu), rho(a_1) = c E_{01} when mu_0 - mu_1 = -lambda_1.
  std::vector<long> mu(m);
  for (auto& x : mu) x = rng.integer(-3, 3);
  if (m >= 2) mu[0] = mu[1] - lambda[1];
  if (std::all_of(mu.begin(), mu.end(), [](long x) { return x == 0; })) mu[0] = nonzero(3);
  for (std::size_t j = 0; j < m; ++j) {
    if (mu[j] != 0) t.add(g + j, 0, g + j, Rational(-mu[j]));
  }
  if (m >= 2) t.add(g + 1, 1, g, Rational(-nonzero(2)));

  // Unimodular change of basis P = L U; new basis vectors are the columns of P.
  Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = rng.integer(-1, 1);
      upper(j, i) = rng.integer(-1, 1);
    }
  }
  const Matrix basis_change = lower * upper;
  const Matrix back = inverse(basis_change);
  TableBuilder transformed(n);
  std::vector<Vector> columns(n);
  for (std::size_t i = 0; i < n; ++i) columns[i] = basis_change.column(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod(n);
      for (std::size_t a = 0; a < n; ++a) {
        if (columns[i][a].is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (columns[j][b].is_zero()) continue;
          prod = prod + (columns[i][a] * columns[j][b]) * t.at(a, b);
        }
      }
      const Vector coords = back.apply(prod);
      for (std::size_t k = 0; k < n; ++k)
        if (!coords[k].is_zero()) transformed.add(i, j, k, coords[k]);
    }
  }
  return LeibnizAlgebra(numbered("e", n), transformed.entries());
}

}  // namespace leibniz::fixtures
