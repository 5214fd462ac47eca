#include "leibniz/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

struct LeibnizAlgebra::Data {
  std::vector<std::string> names;
  std::vector<ProductEntry> entries;
  std::vector<Vector> dense;  // dense[i * n + j] = [e_i, e_j]
};

LeibnizAlgebra::LeibnizAlgebra(std::vector<std::string> basis_names, std::vector<ProductEntry> entries,
                               Validation validation) {
  const std::size_t n = basis_names.size();
  {
    std::set<std::string> seen;
    for (const auto& name : basis_names) {
      if (!seen.insert(name).second) throw Error(ErrorCode::kDuplicateEntry, "basis label '" + name + "'");
    }
  }
  auto data = std::make_shared<Data>();
  data->names = std::move(basis_names);
  data->dense.assign(n * n, Vector(n));

  std::map<std::pair<std::size_t, std::size_t>, std::vector<ProductTerm>> table;
  for (auto& entry : entries) {
    if (entry.left >= n || entry.right >= n) {
      throw Error(ErrorCode::kUnknownLabel, "product index out of range");
    }
    std::set<std::size_t> targets;
    std::vector<ProductTerm> terms;
    for (auto& term : entry.result) {
      if (term.basis >= n) throw Error(ErrorCode::kUnknownLabel, "result index out of range");
      if (!targets.insert(term.basis).second) {
        throw Error(ErrorCode::kDuplicateEntry,
                    "basis element repeated in [" + data->names[entry.left] + "," + data->names[entry.right] + "]");
      }
      if (!term.coeff.is_zero()) terms.push_back(term);
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.basis < b.basis; });
    if (!table.emplace(std::make_pair(entry.left, entry.right), std::move(terms)).second) {
      throw Error(ErrorCode::kDuplicateEntry,
                  "product [" + data->names[entry.left] + "," + data->names[entry.right] + "] given twice");
    }
  }
  for (auto& [key, terms] : table) {
    if (terms.empty()) continue;
    Vector& v = data->dense[key.first * n + key.second];
    for (const auto& t : terms) v[t.basis] = t.coeff;
    data->entries.push_back({key.first, key.second, std::move(terms)});
  }
  data_ = std::move(data);

  if (validation == Validation::kEnforce) {
    const ValidationReport report = validate_leibniz(*this);
    if (!report.ok) {
      std::string msg = "Leibniz identity fails on " + std::to_string(report.failures.size()) + " triple(s):";
      for (std::size_t i = 0; i < std::min<std::size_t>(report.failures.size(), 5); ++i) {
        const auto& f = report.failures[i];
        msg += " (" + data_->names[f.i] + "," + data_->names[f.j] + "," + data_->names[f.k] + ")";
      }
      throw Error(ErrorCode::kValidationError, msg);
    }
  }
}

std::size_t LeibnizAlgebra::dim() const { return data_->names.size(); }
const std::vector<std::string>& LeibnizAlgebra::basis_names() const { return data_->names; }
const std::vector<ProductEntry>& LeibnizAlgebra::entries() const { return data_->entries; }

std::optional<std::size_t> LeibnizAlgebra::index_of(const std::string& name) const {
  const auto& names = data_->names;
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

const Vector& LeibnizAlgebra::product(std::size_t i, std::size_t j) const {
  return data_->dense.at(i * dim() + j);
}

Vector LeibnizAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::kDimensionMismatch, "bracket");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vector& p = data_->dense[i * n + j];
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!p[k].is_zero()) out[k] += c * p[k];
      }
    }
  }
  return out;
}

Matrix LeibnizAlgebra::right_mult(const Vector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw Error(ErrorCode::kDimensionMismatch, "right_mult");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k].is_zero()) continue;
      const Vector& p = data_->dense[j * n + k];
      for (std::size_t r = 0; r < n; ++r) {
        if (!p[r].is_zero()) m(r, j) += x[k] * p[r];
      }
    }
  }
  return m;
}

Matrix LeibnizAlgebra::left_mult(const Vector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw Error(ErrorCode::kDimensionMismatch, "left_mult");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      const Vector& p = data_->dense[i * n + j];
      for (std::size_t r = 0; r < n; ++r) {
        if (!p[r].is_zero()) m(r, j) += x[i] * p[r];
      }
    }
  }
  return m;
}

Element LeibnizAlgebra::element(Vector coords) const { return Element(*this, std::move(coords)); }
Element LeibnizAlgebra::basis_element(std::size_t i) const { return Element(*this, unit_vector(dim(), i)); }
Element LeibnizAlgebra::zero() const { return Element(*this, zero_vector(dim())); }

std::string LeibnizAlgebra::format(const Vector& coords) const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Rational& c = coords[i];
    if (c.is_zero()) continue;
    const Rational a = abs(c);
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (a != Rational(1)) out += a.to_string() + "*";
    out += data_->names[i];
  }
  return out.empty() ? "0" : out;
}

Element::Element(LeibnizAlgebra algebra, Vector coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "element has " + std::to_string(coords_.size()) +
                                                   " coordinates, algebra has dimension " +
                                                   std::to_string(algebra_.dim()));
  }
}

namespace {

void require_same(const Element& a, const Element& b) {
  if (!a.algebra().same_algebra(b.algebra())) {
    throw Error(ErrorCode::kAlgebraMismatch, "elements belong to different algebras");
  }
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.algebra_, a.coords_ + b.coords_);
}

Element operator-(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.algebra_, a.coords_ - b.coords_);
}

Element operator*(const Rational& s, const Element& a) { return Element(a.algebra_, s * a.coords_); }

bool operator==(const Element& a, const Element& b) {
  return a.algebra_.same_algebra(b.algebra_) && a.coords_ == b.coords_;
}

Element bracket(const Element& x, const Element& y) {
  require_same(x, y);
  return Element(x.algebra(), x.algebra().bracket(x.coords(), y.coords()));
}

Matrix right_mult(const Element& x) { return x.algebra().right_mult(x.coords()); }
Matrix left_mult(const Element& x) { return x.algebra().left_mult(x.coords()); }

ValidationReport validate_leibniz(const LeibnizAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Matrix> right(n);
  std::vector<Matrix> left(n);
  for (std::size_t k = 0; k < n; ++k) {
    right[k] = algebra.right_mult(unit_vector(n, k));
    left[k] = algebra.left_mult(unit_vector(n, k));
  }
  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& ij = algebra.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector defect = left[i].apply(algebra.product(j, k));
        defect = defect - right[k].apply(ij);
        defect = defect + right[j].apply(algebra.product(i, k));
        if (!is_zero(defect)) {
          report.ok = false;
          report.failures.push_back({i, j, k, std::move(defect)});
        }
      }
    }
  }
  return report;
}

bool commutation_identity_check(const LeibnizAlgebra& algebra, const Vector& x, const Vector& y) {
  const Matrix rx = algebra.right_mult(x);
  const Matrix ry = algebra.right_mult(y);
  return rx * ry - ry * rx == algebra.right_mult(algebra.bracket(y, x));
}

SeriesReport lower_central_series(const LeibnizAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  SeriesReport report;
  report.terms.push_back(Subspace::full(n));
  while (true) {
    const Subspace& current = report.terms.back();
    std::vector<Vector> products;
    for (const auto& v : current.basis_vectors()) {
      for (std::size_t j = 0; j < n; ++j) products.push_back(algebra.bracket(v, unit_vector(n, j)));
    }
    Subspace next = Subspace::span(n, products);
    if (next.dim() == current.dim()) break;
    report.terms.push_back(std::move(next));
    if (report.terms.back().is_zero()) break;
  }
  report.nilpotent = report.terms.back().is_zero();
  report.stabilization_index = report.terms.size();
  return report;
}

bool is_nilpotent(const LeibnizAlgebra& algebra) { return lower_central_series(algebra).nilpotent; }

bool is_lie(const LeibnizAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(algebra.product(i, i))) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_zero(algebra.product(i, j) + algebra.product(j, i))) return false;
    }
  }
  return true;
}

bool is_subalgebra(const LeibnizAlgebra& algebra, const Subspace& s) {
  if (s.ambient_dim() != algebra.dim()) throw Error(ErrorCode::kDimensionMismatch, "is_subalgebra");
  const auto basis = s.basis_vectors();
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!s.contains(algebra.bracket(a, b))) return false;
  return true;
}

bool is_left_ideal(const LeibnizAlgebra& algebra, const Subspace& s) {
  if (s.ambient_dim() != algebra.dim()) throw Error(ErrorCode::kDimensionMismatch, "is_left_ideal");
  for (const auto& b : s.basis_vectors())
    if (!s.contains(image(algebra.right_mult(b)))) return false;
  return true;
}

bool is_right_ideal(const LeibnizAlgebra& algebra, const Subspace& s) {
  if (s.ambient_dim() != algebra.dim()) throw Error(ErrorCode::kDimensionMismatch, "is_right_ideal");
  for (const auto& b : s.basis_vectors())
    if (!s.contains(image(algebra.left_mult(b)))) return false;
  return true;
}

bool is_ideal(const LeibnizAlgebra& algebra, const Subspace& s) {
  return is_left_ideal(algebra, s) && is_right_ideal(algebra, s);
}

std::vector<Matrix> right_operator_family(const LeibnizAlgebra& algebra, const Subspace& s) {
  if (!is_subalgebra(algebra, s)) throw Error(ErrorCode::kNotASubalgebra, s.to_string());
  std::vector<Matrix> family;
  for (const auto& b : s.basis_vectors()) family.push_back(algebra.right_mult(b));
  return family;
}

LeibnizAlgebra subalgebra_structure(const LeibnizAlgebra& algebra, const Subspace& s) {
  if (!is_subalgebra(algebra, s)) throw Error(ErrorCode::kNotASubalgebra, s.to_string());
  const auto basis = s.basis_vectors();
  const std::size_t d = basis.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back("b" + std::to_string(i + 1));
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector coords = s.coordinates(algebra.bracket(basis[i], basis[j]));
      ProductEntry e{i, j, {}};
      for (std::size_t k = 0; k < d; ++k)
        if (!coords[k].is_zero()) e.result.push_back({k, coords[k]});
      if (!e.result.empty()) entries.push_back(std::move(e));
    }
  }
  return LeibnizAlgebra(std::move(names), std::move(entries), LeibnizAlgebra::Validation::kDeferred);
}

}  // namespace leibniz
