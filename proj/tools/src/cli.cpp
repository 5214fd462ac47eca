#include "leibniz_cli/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "leibniz/leibniz.hpp"
#include "render.hpp"

namespace leibniz::cli {

namespace {

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t trials = 64;
  std::size_t budget = 10'000;
  bool no_validate = false;
  double tol_eig = 1e-8;
  double tol_res = 1e-8;
};

struct CommandOptions {
  std::string algebra;
  std::string element;
  std::string subspace;
  std::string side = "left";
  std::string c1;
  std::string c2;
  std::string fixture;
};

struct Outcome {
  Json report;
  int code = kSuccess;
};

struct Loaded {
  std::string name;
  LeibnizAlgebra algebra;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\n\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Loaded load_algebra(const std::string& arg, bool validate) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw Error(ErrorCode::kParseError, "cannot read '" + arg + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    AlgebraDocument doc = parse_document(buffer.str());
    std::string name = doc.name;
    return {std::move(name), to_algebra(doc, validate)};
  }
  AlgebraDocument doc = fixtures::document(arg);
  std::string name = doc.name;
  return {std::move(name), to_algebra(doc, validate)};
}

Vector parse_coords(const LeibnizAlgebra& algebra, std::string_view text) {
  Vector v;
  for (const auto& part : split(text, ',')) v.push_back(Rational::parse(part));
  if (v.size() != algebra.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "expected " + std::to_string(algebra.dim()) + " coordinates, got " +
                                                   std::to_string(v.size()));
  }
  return v;
}

Subspace parse_rows(const LeibnizAlgebra& algebra, std::string_view text) {
  std::vector<Vector> rows;
  if (!trim(text).empty()) {
    for (const auto& row : split(text, ';')) rows.push_back(parse_coords(algebra, row));
  }
  return Subspace::span(algebra.dim(), rows);
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row_vector(r)));
  return out;
}

Json subspace_json(const LeibnizAlgebra& algebra, const Subspace& s) {
  Json out;
  out["dim"] = s.dim();
  Json basis = Json::array();
  Json span = Json::array();
  for (const auto& v : s.basis_vectors()) {
    basis.push_back(vector_json(v));
    span.push_back(algebra.format(v));
  }
  out["basis"] = std::move(basis);
  out["span"] = std::move(span);
  return out;
}

Json element_json(const Element& e) {
  Json out;
  out["coords"] = vector_json(e.coords());
  out["element"] = e.to_string();
  return out;
}

Json certificate_json(const LeibnizAlgebra& algebra, const CartanCertificate& cert) {
  Json out;
  out["is_cartan"] = cert.is_cartan;
  out["subalgebra"] = subspace_json(algebra, cert.subalgebra);
  out["nilpotent"] = cert.nilpotency_report.nilpotent;
  out["series_length"] = cert.nilpotency_report.stabilization_index;
  out["left_normalizer"] = subspace_json(algebra, cert.left_normalizer);
  out["equals_joint_null_component"] =
      cert.equals_joint_null_component ? Json(*cert.equals_joint_null_component) : Json(nullptr);
  return out;
}

Json regularity_json(const RegularityReport& report) {
  Json out;
  out["rank"] = report.nullity;
  out["witness"] = element_json(report.element);
  out["is_regular"] = report.is_regular;
  out["field"] = report.field;
  out["candidates"] = report.candidates;
  out["trials"] = report.trials;
  out["seed"] = report.seed;
  return out;
}

void merge(Json& out, const Json& extra) {
  for (const auto& [key, value] : extra.items()) out[key] = value;
}

// Fixed precision keeps machine-readable output byte-stable.
std::string format_double(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  std::ostringstream out;
  out << std::setprecision(12) << x;
  return out.str();
}

std::string format_complex(std::complex<double> z, double tol) {
  if (std::abs(z.imag()) <= tol) return format_double(z.real());
  const double im = z.imag();
  return format_double(z.real()) + (im < 0 ? " - " : " + ") + format_double(std::abs(im)) + "i";
}

Json document_table_json(const AlgebraDocument& doc) {
  Json table = Json::array();
  for (const auto& entry : doc.table) {
    std::string rhs;
    for (const auto& term : entry.result) {
      if (!rhs.empty()) rhs += " + ";
      if (term.coeff == "1") {
        rhs += term.basis;
      } else if (term.coeff == "-1") {
        rhs += "-" + term.basis;
      } else {
        rhs += term.coeff + "*" + term.basis;
      }
    }
    table.push_back("[" + entry.left + "," + entry.right + "] = " + rhs);
  }
  return table;
}

class Commands {
 public:
  Commands(const GlobalOptions& global, const CommandOptions& local) : g_(global), o_(local) {}

  Loaded load() const { return load_algebra(o_.algebra, !g_.no_validate); }

  SpectrumOptions spectrum_options() const { return {g_.tol_eig, g_.tol_res}; }

  Outcome validate() const {
    const Loaded l = load_algebra(o_.algebra, false);
    const ValidationReport report = validate_leibniz(l.algebra);
    Json failures = Json::array();
    const auto& names = l.algebra.basis_names();
    for (const auto& d : report.failures) {
      Json f;
      f["triple"] = {names[d.i], names[d.j], names[d.k]};
      f["defect"] = l.algebra.format(d.defect);
      failures.push_back(std::move(f));
    }
    Json out = header("validate", l);
    out["valid"] = report.ok;
    out["failing_triples"] = report.failures.size();
    out["failures"] = std::move(failures);
    return {std::move(out), report.ok ? kSuccess : kPropertyFalse};
  }

  Outcome info() const {
    const Loaded l = load();
    Json out = header("info", l);
    out["basis"] = l.algebra.basis_names();
    out["nonzero_products"] = l.algebra.entries().size();
    out["nilpotent"] = is_nilpotent(l.algebra);
    out["is_lie"] = is_lie(l.algebra);
    out["squares_ideal"] = subspace_json(l.algebra, squares_ideal(l.algebra));
    return {std::move(out), kSuccess};
  }

  Outcome series() const {
    const Loaded l = load();
    const SeriesReport report = lower_central_series(l.algebra);
    Json terms = Json::array();
    for (const auto& t : report.terms) terms.push_back(subspace_json(l.algebra, t));
    Json out = header("series", l);
    out["nilpotent"] = report.nilpotent;
    out["stabilization_index"] = report.stabilization_index;
    out["terms"] = std::move(terms);
    return {std::move(out), kSuccess};
  }

  Outcome rank() const {
    const Loaded l = load();
    const RegularityReport report = find_regular_element(l.algebra, g_.seed, g_.trials);
    Json out = header("rank", l);
    merge(out, regularity_json(report));
    return {std::move(out), kSuccess};
  }

  // With --element, decides whether that element is regular; otherwise
  // reports a regular element and its Fitting decomposition.
  Outcome regular() const {
    const Loaded l = load();
    const RegularityReport report = find_regular_element(l.algebra, g_.seed, g_.trials);
    Json out = header("regular", l);
    if (!o_.element.empty()) {
      const Vector x = parse_coords(l.algebra, o_.element);
      const FittingPair pair = fitting_wrt_element(l.algebra, x);
      const std::size_t nullity = pair.null_component.dim();
      const bool regular = nullity == report.nullity;
      out["element"] = element_json(l.algebra.element(x));
      out["nullity"] = nullity;
      out["rank"] = report.nullity;
      out["is_regular"] = regular;
      out["seed"] = g_.seed;
      return {std::move(out), regular ? kSuccess : kPropertyFalse};
    }
    const FittingPair pair = fitting_wrt_element(report.element);
    merge(out, regularity_json(report));
    out["null_component"] = subspace_json(l.algebra, pair.null_component);
    out["one_component"] = subspace_json(l.algebra, pair.one_component);
    return {std::move(out), kSuccess};
  }

  Outcome fitting() const {
    const Loaded l = load();
    const Vector x = require_element(l.algebra);
    const FittingPair pair = fitting_wrt_element(l.algebra, x);
    Json out = header("fitting", l);
    out["element"] = element_json(l.algebra.element(x));
    out["zero_root_order"] = pair.null_component.dim();
    out["null_component"] = subspace_json(l.algebra, pair.null_component);
    out["one_component"] = subspace_json(l.algebra, pair.one_component);
    return {std::move(out), kSuccess};
  }

  Outcome weights() const {
    const Loaded l = load();
    const Vector x = require_element(l.algebra);
    const WeightDecomposition wd = weight_decomposition(l.algebra, x, spectrum_options());
    Json components = Json::array();
    for (const auto& c : wd.components) {
      Json item;
      item["weight"] = c.exact_weight ? c.exact_weight->to_string() : format_complex(c.weight, g_.tol_eig);
      item["exact"] = c.exact_weight.has_value();
      item["dim"] = c.dim;
      item["residual_ok"] = c.residual <= g_.tol_res;
      if (c.exact_space) {
        item["space"] = subspace_json(l.algebra, *c.exact_space);
      } else {
        Json cols = Json::array();
        for (Eigen::Index j = 0; j < c.space.cols(); ++j) {
          Json col = Json::array();
          for (Eigen::Index i = 0; i < c.space.rows(); ++i) col.push_back(format_complex(c.space(i, j), 1e-12));
          cols.push_back(std::move(col));
        }
        item["numeric_space"] = std::move(cols);
      }
      components.push_back(std::move(item));
    }
    Json out = header("weights", l);
    out["element"] = element_json(wd.base);
    out["tol_eig"] = g_.tol_eig;
    out["tol_res"] = g_.tol_res;
    out["components"] = std::move(components);
    out["zero_component"] = subspace_json(l.algebra, wd.zero_component);
    return {std::move(out), kSuccess};
  }

  Outcome cartan() const {
    const Loaded l = load();
    const RegularityReport report = find_regular_element(l.algebra, g_.seed, g_.trials);
    const CartanCertificate cert = cartan_from_regular(l.algebra, report);
    Json out = header("cartan", l);
    out["basis"] = subspace_json(l.algebra, cert.subalgebra);
    out["regular_element"] = regularity_json(report);
    out["certificate"] = certificate_json(l.algebra, cert);
    out["seed"] = g_.seed;
    return {std::move(out), kSuccess};
  }

  Outcome normalizer() const {
    const Loaded l = load();
    const Subspace s = parse_rows(l.algebra, o_.subspace);
    const Subspace n = o_.side == "left" ? left_normalizer(l.algebra, s) : right_normalizer(l.algebra, s);
    Json out = header("normalizer", l);
    out["side"] = o_.side;
    out["subspace"] = subspace_json(l.algebra, s);
    out["normalizer"] = subspace_json(l.algebra, n);
    return {std::move(out), kSuccess};
  }

  Outcome is_cartan_cmd() const {
    const Loaded l = load();
    const Subspace s = parse_rows(l.algebra, o_.subspace);
    const CartanCertificate cert = is_cartan(l.algebra, s);
    Json out = header("is-cartan", l);
    merge(out, certificate_json(l.algebra, cert));
    return {std::move(out), cert.is_cartan ? kSuccess : kPropertyFalse};
  }

  Outcome quotient() const {
    const Loaded l = load();
    const QuotientMap map = build_quotient(l.algebra);
    const AlgebraDocument doc = to_document(map.quotient, l.name + "/I");
    Json out = header("quotient", l);
    out["squares_ideal"] = subspace_json(l.algebra, map.ideal);
    out["quotient_dim"] = map.quotient.dim();
    out["quotient_basis"] = map.quotient.basis_names();
    out["is_lie"] = is_lie(map.quotient);
    out["table"] = document_table_json(doc);
    out["projection"] = matrix_json(map.projection);
    return {std::move(out), kSuccess};
  }

  Outcome push() const {
    const Loaded l = load();
    const Subspace s = parse_rows(l.algebra, o_.subspace);
    const QuotientMap map = build_quotient(l.algebra);
    const Subspace image = push_subspace(map, s);
    Json out = header("push", l);
    out["subspace"] = subspace_json(l.algebra, s);
    out["quotient_basis"] = map.quotient.basis_names();
    out["image"] = subspace_json(map.quotient, image);
    if (is_subalgebra(l.algebra, s)) {
      out["is_cartan"] = is_cartan(l.algebra, s).is_cartan;
      out["image_is_cartan"] = is_cartan(map.quotient, image).is_cartan;
    }
    return {std::move(out), kSuccess};
  }

  Outcome conjugate() const {
    const Loaded l = load();
    const Subspace c1 = parse_rows(l.algebra, o_.c1);
    const Subspace c2 = parse_rows(l.algebra, o_.c2);
    ConjugationOptions options;
    options.seed = g_.seed;
    options.budget = g_.budget;
    const ConjugationResult result = conjugate_cartan(l.algebra, c1, c2, options);
    Json generators = Json::array();
    for (const auto& z : result.automorphism.generators) generators.push_back(l.algebra.format(z));
    Json out = header("conjugate", l);
    out["c1"] = subspace_json(l.algebra, c1);
    out["c2"] = subspace_json(l.algebra, c2);
    out["image"] = subspace_json(l.algebra, result.automorphism.apply(c1));
    out["generators"] = std::move(generators);
    out["matrix"] = matrix_json(result.automorphism.matrix);
    out["phase"] = result.phase;
    out["candidates"] = result.candidates;
    out["generator_pool"] = result.generator_pool;
    out["budget"] = g_.budget;
    out["seed"] = g_.seed;
    return {std::move(out), kSuccess};
  }

  Outcome examples_list() const {
    Json items = Json::array();
    for (const auto& info : fixtures::catalog()) {
      Json item;
      item["name"] = info.name;
      item["description"] = info.description;
      items.push_back(std::move(item));
    }
    Json out;
    out["command"] = "examples list";
    out["fixtures"] = std::move(items);
    return {std::move(out), kSuccess};
  }

 private:
  Json header(const char* command, const Loaded& l) const {
    Json out;
    out["command"] = command;
    out["algebra"] = l.name;
    out["dim"] = l.algebra.dim();
    return out;
  }

  Vector require_element(const LeibnizAlgebra& algebra) const {
    if (o_.element.empty()) throw Error(ErrorCode::kParseError, "--element is required");
    return parse_coords(algebra, o_.element);
  }

  const GlobalOptions& g_;
  const CommandOptions& o_;
};

int exit_code_for(ErrorCode code) { return code == ErrorCode::kNotFound ? kSearchExhausted : kInputError; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure analysis of finite-dimensional Leibniz algebras", "leibniz"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  CommandOptions o;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized searches");
  app.add_option("--trials", g.trials, "Random samples after the deterministic candidates");
  app.add_option("--budget", g.budget, "Candidate budget for conjugator search");
  app.add_flag("--no-validate", g.no_validate, "Skip the Leibniz identity check on load");
  app.add_option("--tol-eig", g.tol_eig, "Eigenvalue separation tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-res", g.tol_res, "Generalized eigenspace residual tolerance")->check(CLI::PositiveNumber);

  Commands commands(g, o);
  std::function<Outcome()> action;

  auto command = [&](const char* name, const char* help, Outcome (Commands::*fn)() const) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("algebra", o.algebra, "Algebra file or fixture name")->required();
    sub->callback([&, fn] { action = [&, fn] { return (commands.*fn)(); }; });
    return sub;
  };

  command("validate", "Check the Leibniz identity on all basis triples", &Commands::validate);
  command("info", "Dimension, nilpotency, Lie test and squares ideal", &Commands::info);
  command("series", "Lower central series", &Commands::series);
  command("rank", "Rank and a regular witness", &Commands::rank);
  command("regular", "Regular element search or test", &Commands::regular)
      ->add_option("--element", o.element, "Comma-separated coordinates");
  command("fitting", "Fitting decomposition of R_x", &Commands::fitting)
      ->add_option("--element", o.element, "Comma-separated coordinates")
      ->required();
  command("weights", "Generalized eigenspaces of R_x", &Commands::weights)
      ->add_option("--element", o.element, "Comma-separated coordinates")
      ->required();
  command("cartan", "Cartan subalgebra from a regular element", &Commands::cartan);
  CLI::App* normalizer = command("normalizer", "Left or right normalizer", &Commands::normalizer);
  normalizer->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
  normalizer->add_option("--subspace", o.subspace, "Semicolon-separated rows")->required();
  command("is-cartan", "Certify a subspace as Cartan", &Commands::is_cartan_cmd)
      ->add_option("--subspace", o.subspace, "Semicolon-separated rows")
      ->required();
  command("quotient", "Squares ideal and the Lie quotient", &Commands::quotient);
  command("push", "Image of a subspace in the quotient", &Commands::push)
      ->add_option("--subspace", o.subspace, "Semicolon-separated rows")
      ->required();
  CLI::App* conjugate = command("conjugate", "Search an automorphism carrying c1 onto c2", &Commands::conjugate);
  conjugate->add_option("--c1", o.c1, "Semicolon-separated rows")->required();
  conjugate->add_option("--c2", o.c2, "Semicolon-separated rows")->required();

  CLI::App* examples = app.add_subcommand("examples", "Built-in fixtures");
  examples->require_subcommand(1);
  examples->add_subcommand("list", "List fixtures")->callback([&] {
    action = [&] { return commands.examples_list(); };
  });
  CLI::App* show = examples->add_subcommand("show", "Print a fixture as a JSON document");
  show->add_option("name", o.fixture, "Fixture name")->required();
  bool raw_document = false;
  show->callback([&] {
    raw_document = true;
    action = [&] { return Outcome{Json::parse(serialize(fixtures::document(o.fixture))), kSuccess}; };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    Outcome outcome = action();
    if (g.format == "json" || raw_document) {
      out << outcome.report.dump(2) << '\n';
    } else {
      out << render_text(outcome.report);
    }
    return outcome.code;
  } catch (const Error& e) {
    if (g.format == "json") {
      Json report;
      report["error"] = to_string(e.code());
      report["message"] = e.what();
      out << report.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace leibniz::cli
