// rookchar: command-line front end for the rook-monoid state library.
//
// Exit codes: 0 success, 2 usage or parse error, 3 property violation,
// 4 resource guard tripped.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rookchar/io/json_io.hpp"
#include "rookchar/rookchar.hpp"

using namespace rookchar;
using io::ordered_json;

namespace {

  constexpr int exit_ok        = 0;
  constexpr int exit_usage     = 2;
  constexpr int exit_violation = 3;
  constexpr int exit_guard     = 4;

  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  ordered_json read_json(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open " + path);
    }
    try {
      return ordered_json::parse(in);
    } catch (nlohmann::json::parse_error const& e) {
      throw UsageError(path + ": " + e.what());
    }
  }

  State load_state(std::string const& path) {
    return make_state(io::state_from_json(read_json(path)));
  }

  // One element literal per line; blank lines and '#' comments skipped.
  std::vector<PartialBijection> read_elements(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open " + path);
    }
    std::vector<PartialBijection> out;
    std::string                   line;
    while (std::getline(in, line)) {
      auto const hash = line.find('#');
      if (hash != std::string::npos) {
        line.erase(hash);
      }
      if (line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      out.push_back(parse_element(line));
    }
    return out;
  }

  // A lookup-table function: {"default": "0", "values": {"<literal>": "p/q"}}
  struct TableFunction {
    std::map<PartialBijection, Rational> values;
    Rational                             fallback = 0;

    Rational operator()(PartialBijection const& r) const {
      auto it = values.find(r);
      return it == values.end() ? fallback : it->second;
    }
  };

  TableFunction load_table(std::string const& path) {
    auto const    j = read_json(path);
    TableFunction f;
    if (j.contains("default")) {
      f.fallback = parse_rational(j["default"].get<std::string>());
    }
    auto const values = j.value("values", ordered_json::object());
    for (auto const& [literal, value] : values.items()) {
      f.values[parse_element(literal)] = parse_rational(value.get<std::string>());
    }
    return f;
  }

  void print_json(ordered_json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  void print_suite(SuiteReport const& r, std::string const& format) {
    if (format == "json") {
      print_json(io::to_json(r));
      return;
    }
    std::cout << r.summary() << "\n";
    for (auto const& d : r.details) {
      std::cout << "  " << d << "\n";
    }
  }

  std::string csv_field(std::string const& s) {
    return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
  }

  struct Options {
    std::string format        = "json";
    std::string verify_format = "text";

    std::string element;
    std::string state_path;
    std::string params_path;
    std::string elems_path;
    std::string table_path;
    std::string ordering = "starJI";
    std::string suite;
    std::string regular_mode = "expand";
    std::string kappa        = "1/2";
    std::string x_literal, y_literal;

    std::size_t n = 0;
    std::size_t l = 0;
    std::size_t k = 1;
    double      tol = -1.0;

    std::vector<std::size_t> sizes;

    bool all_idempotents    = false;
    bool disable_sign_twist = false;
  };

  int cmd_decompose(Options const& o) {
    auto const   r = parse_element(o.element);
    ordered_json j;
    j["element"] = render(r);
    auto d       = io::to_json(quasicycle_decompose(r));
    j["parts"]     = d["parts"];
    j["invariant"] = d["invariant"];
    print_json(j);
    return exit_ok;
  }

  int cmd_eval(Options const& o) {
    auto const f = load_state(o.state_path);
    std::cout << to_string(f(parse_element(o.element))) << "\n";
    return exit_ok;
  }

  int cmd_gram(Options const& o) {
    std::vector<PartialBijection> elems;
    if (!o.elems_path.empty()) {
      elems = read_elements(o.elems_path);
    } else {
      elems = enumerate_rn(o.n);
    }
    auto const   ordering = parse_gram_ordering(o.ordering);
    GramReport   report;
    ordered_json j;
    if (!o.table_path.empty()) {
      report          = gram_matrix(load_table(o.table_path), elems, ordering);
      j["function"]   = "table:" + o.table_path;
    } else {
      report        = gram_matrix(load_state(o.state_path), elems, ordering);
      j["function"] = "state:" + o.state_path;
    }
    auto const body = io::to_json(report);
    for (auto const& [key, value] : body.items()) {
      j[key] = value;
    }
    print_json(j);
    return report.certificate.is_psd() ? exit_ok : exit_violation;
  }

  int cmd_verify(Options const& o) {
    SuiteReport report;
    if (o.suite == "gelfand") {
      report = verify_gelfand_pair(o.n);
    } else if (o.suite == "popova") {
      auto const rel = verify_popova_relations(static_cast<point_type>(o.n));
      report.name    = "popova";
      for (auto const& v : rel.violations) {
        report.record(false, v);
      }
      for (std::size_t i = rel.violations.size(); i < rel.checked; ++i) {
        report.record(true, "");
      }
      // word round trip on R_n
      for_each_rn(std::min<std::size_t>(o.n, 5), [&](PartialBijection const& r) {
        report.record_lazy(word_to_element(element_to_word(r)) == r,
                           [&] { return "word round trip fails for " + render(r); });
      });
    } else {
      if (o.state_path.empty()) {
        throw UsageError("--suite " + o.suite + " needs --state");
      }
      auto const f = load_state(o.state_path);
      if (o.suite == "centrality") {
        report = check_centrality(f, o.n);
      } else if (o.suite == "multiplicativity") {
        report = check_multiplicativity(f, o.n);
      } else if (o.suite == "star") {
        report = check_star_symmetry(f, o.n);
      } else if (o.suite == "conjugation") {
        report = check_conjugation_invariance(f, o.n);
      } else {
        throw UsageError("unknown suite " + o.suite);
      }
    }
    print_suite(report, o.verify_format);
    return report.passed() ? exit_ok : exit_violation;
  }

  ModelOptions model_options(Options const& o) {
    ModelOptions m;
    m.sign_twist   = !o.disable_sign_twist;
    m.regular_mode = o.regular_mode == "cycle" ? RegularMode::cycle : RegularMode::expand;
    return m;
  }

  ModelParams load_params(std::string const& path) {
    auto p      = io::params_from_json(read_json(path));
    auto report = validate_params(p);
    if (!report.passed()) {
      std::cerr << io::to_json(report).dump(2) << "\n";
      throw InvalidParams("invalid model parameters: " + report.failures());
    }
    return p;
  }

  int cmd_validate(Options const& o) {
    auto const report = validate_params(io::params_from_json(read_json(o.params_path)));
    print_json(io::to_json(report));
    return report.passed() ? exit_ok : exit_violation;
  }

  int cmd_oracle(Options const& o) {
    auto const   p   = load_params(o.params_path);
    std::size_t  n   = o.n == 0 ? std::min<std::size_t>(p.N, 4) : o.n;
    double const tol = o.tol > 0 ? o.tol : 1e-10;
    if (n > p.N) {
      throw UsageError("--n exceeds the number of slots N = " + std::to_string(p.N));
    }
    auto const m     = build_slot_model(p, model_options(o));
    double     worst = 0.0;
    auto       rows  = ordered_json::array();
    if (o.format == "csv") {
      std::cout << "element,closed_form,closed_form_decimal,model,abs_diff\n";
    }
    for_each_rn(n, [&](PartialBijection const& r) {
      Rational const exact = phi_closed_form(p, r);
      double const   model = expectation(m, program_for(r));
      double const   diff  = std::abs(model - to_double(exact));
      worst                = std::max(worst, diff);
      if (o.format == "csv") {
        std::cout << csv_field(render(r)) << "," << to_string(exact) << "," << io::format12(to_double(exact)) << ","
                  << io::format12(model) << "," << io::format12(diff) << "\n";
      } else {
        rows.push_back({{"element", render(r)},
                        {"closed_form", to_string(exact)},
                        {"model", io::round12(model)},
                        {"abs_diff", io::round12(diff)}});
      }
    });
    bool const ok = worst <= tol;
    if (o.format == "csv") {
      std::cerr << "max_abs_diff " << io::format12(worst) << (ok ? " <= " : " > ") << io::format12(tol) << "\n";
    } else {
      ordered_json j;
      j["params"]       = io::to_json(p);
      j["n"]            = n;
      j["sign_twist"]   = !o.disable_sign_twist;
      j["regular_mode"] = o.regular_mode;
      j["rows"]         = rows;
      j["max_abs_diff"] = io::round12(worst);
      j["tolerance"]    = tol;
      j["passed"]       = ok;
      print_json(j);
    }
    return ok ? exit_ok : exit_violation;
  }

  int cmd_okounkov(Options const& o) {
    auto const   p   = load_params(o.params_path);
    double const tol = o.tol > 0 ? o.tol : 1e-12;
    auto const   m   = build_slot_model(p, model_options(o));
    std::vector<PartialBijection> xs, ys;
    if (!o.x_literal.empty() || !o.y_literal.empty()) {
      xs = {o.x_literal.empty() ? PartialBijection() : parse_element(o.x_literal)};
      ys = {o.y_literal.empty() ? PartialBijection() : parse_element(o.y_literal)};
    } else {
      xs = enumerate_rn(std::min<std::size_t>(2, p.N - 1));
      ys = xs;
    }
    double     worst   = 0.0;
    auto       reports = ordered_json::array();
    if (o.format == "csv") {
      std::cout << "k,x,y,n,s_n,target,deviation\n";
    }
    for (auto const& x : xs) {
      for (auto const& y : ys) {
        auto const rep = okounkov_check(m, o.k, x, y);
        worst          = std::max(worst, rep.max_deviation);
        if (o.format == "csv") {
          for (auto const& row : rep.rows) {
            std::cout << o.k << "," << csv_field(render(x)) << "," << csv_field(render(y)) << "," << row.n << ","
                      << io::format12(row.value) << "," << io::format12(rep.target) << ","
                      << io::format12(row.deviation) << "\n";
          }
          continue;
        }
        auto rows = ordered_json::array();
        for (auto const& row : rep.rows) {
          rows.push_back({{"n", row.n}, {"s_n", io::round12(row.value)}, {"deviation", io::round12(row.deviation)}});
        }
        reports.push_back({{"x", render(x)},
                           {"y", render(y)},
                           {"target", io::round12(rep.target)},
                           {"rows", rows},
                           {"max_deviation", io::round12(rep.max_deviation)}});
      }
    }
    bool const ok = worst <= tol;
    if (o.format != "csv") {
      ordered_json j;
      j["k"]             = o.k;
      j["reports"]       = reports;
      j["max_deviation"] = io::round12(worst);
      j["tolerance"]     = tol;
      j["stable"]        = ok;
      print_json(j);
    } else {
      std::cerr << "max_deviation " << io::format12(worst) << "\n";
    }
    return ok ? exit_ok : exit_violation;
  }

  int cmd_spherical(Options const& o) {
    SphericalModel const          model{o.n, o.l, 0};
    std::vector<PartialBijection> elems;
    if (o.all_idempotents) {
      for (unsigned mask = 0; mask < (1U << o.n); ++mask) {
        std::vector<point_type> killed;
        for (point_type x = 1; x <= o.n; ++x) {
          if (mask & (1U << (x - 1))) {
            killed.push_back(x);
          }
        }
        elems.push_back(PartialBijection::idempotent(killed));
      }
    } else if (!o.element.empty()) {
      elems.push_back(parse_element(o.element));
    } else {
      throw UsageError("spherical needs --elem or --all-idempotents");
    }
    if (o.n > 20) {
      throw ResourceGuardError("spherical tables are limited to n <= 20");
    }
    bool all_match = true;
    auto rows      = ordered_json::array();
    if (o.format == "csv") {
      std::cout << "element,undefined,coefficient,formula,match\n";
    }
    for (auto const& r : elems) {
      Rational const c     = spherical_coeff(model, r);
      Rational const f     = spherical_formula(model, r);
      bool const     match = c == f;
      all_match            = all_match && match;
      if (o.format == "csv") {
        std::cout << csv_field(render(r)) << "," << undefined_count(r) << "," << to_string(c) << "," << to_string(f)
                  << "," << (match ? "true" : "false") << "\n";
      } else {
        rows.push_back({{"element", render(r)},
                        {"undefined", undefined_count(r)},
                        {"coefficient", to_string(c)},
                        {"formula", to_string(f)},
                        {"match", match}});
      }
    }
    if (o.format != "csv") {
      print_json({{"n", o.n}, {"l", o.l}, {"rows", rows}, {"all_match", all_match}});
    }
    return all_match ? exit_ok : exit_violation;
  }

  int cmd_spherical_limit(Options const& o) {
    auto const kappa = parse_rational(o.kappa);
    auto const r     = o.element.empty() ? parse_element("e{1}") : parse_element(o.element);
    auto const sizes = o.sizes.empty() ? default_limit_sizes() : o.sizes;
    auto const rep   = spherical_limit_check(kappa, r, sizes, o.tol > 0 ? o.tol : 0.02);
    if (o.format == "csv") {
      std::cout << "n,l_kappa,coeff_kappa,error_kappa,l_kappa2,coeff_kappa2,error_kappa2\n";
      for (auto const& row : rep.rows) {
        std::cout << row.n << "," << row.l_kappa << "," << to_string(row.value_kappa) << ","
                  << io::format12(row.error_kappa) << "," << row.l_kappa2 << "," << to_string(row.value_kappa2)
                  << "," << io::format12(row.error_kappa2) << "\n";
      }
      std::cerr << "converging scaling: " << rep.converging() << "\n";
    } else {
      auto rows = ordered_json::array();
      for (auto const& row : rep.rows) {
        rows.push_back({{"n", row.n},
                        {"l_kappa", row.l_kappa},
                        {"coeff_kappa", to_string(row.value_kappa)},
                        {"error_kappa", io::round12(row.error_kappa)},
                        {"l_kappa2", row.l_kappa2},
                        {"coeff_kappa2", to_string(row.value_kappa2)},
                        {"error_kappa2", io::round12(row.error_kappa2)}});
      }
      print_json({{"kappa", to_string(kappa)},
                  {"element", render(r)},
                  {"undefined", rep.undefined},
                  {"infinite_value", io::round12(rep.infinite_value)},
                  {"infinite_exact", to_string(rep.infinite_exact)},
                  {"rows", rows},
                  {"tolerance", rep.tolerance},
                  {"converging", rep.converging()}});
    }
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with central states on the infinite rook monoid"};
  app.require_subcommand(1);
  Options                o;
  std::function<int()>   run;
  std::vector<std::string> const formats{"json", "csv"};

  auto* decompose = app.add_subcommand("decompose", "Quasi-cycle decomposition and conjugacy invariant");
  decompose->add_option("element", o.element, "Element literal, e.g. \"[2,3,_,4,_]\" or \"(1 2 3)e{3}\"")->required();
  decompose->callback([&] { run = [&] { return cmd_decompose(o); }; });

  auto* eval = app.add_subcommand("eval", "Evaluate a state on an element (exact rational)");
  eval->add_option("--state", o.state_path, "State JSON file")->required();
  eval->add_option("--elem", o.element, "Element literal")->required();
  eval->callback([&] { run = [&] { return cmd_eval(o); }; });

  auto* gram = app.add_subcommand("gram", "Gram matrix with exact PSD certificate (exit 3 if not PSD)");
  auto* gram_state = gram->add_option("--state", o.state_path, "State JSON file");
  auto* gram_table = gram->add_option("--table", o.table_path,
                                      "Lookup-table function JSON {\"default\": \"0\", \"values\": {literal: value}}");
  gram_state->excludes(gram_table);
  auto* gram_n     = gram->add_option("--n", o.n, "Use all of R_n")->check(CLI::Range(0, 7));
  auto* gram_elems = gram->add_option("--elems", o.elems_path, "File with one element literal per line");
  gram_n->excludes(gram_elems);
  gram->add_option("--ordering", o.ordering, "starJI: M[i][j] = f(r_j* r_i); iStarJ: M[i][j] = f(r_i r_j*)")
      ->check(CLI::IsMember({"starJI", "iStarJ"}));
  gram->callback([&] {
    if (o.state_path.empty() && o.table_path.empty()) {
      throw CLI::ValidationError("gram", "one of --state or --table is required");
    }
    if (gram_n->count() == 0 && o.elems_path.empty()) {
      throw CLI::ValidationError("gram", "one of --n or --elems is required");
    }
    run = [&] { return cmd_gram(o); };
  });

  auto* verify = app.add_subcommand("verify", "Run a property suite (exit 3 on violation)");
  verify->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"centrality", "multiplicativity", "star", "conjugation", "gelfand", "popova"}));
  verify->add_option("--n", o.n, "Degree")->required()->check(CLI::Range(1, 7));
  verify->add_option("--state", o.state_path, "State JSON file (state suites)");
  verify->add_option("--format", o.verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->callback([&] { run = [&] { return cmd_verify(o); }; });

  auto* validate = app.add_subcommand("validate", "Check model parameters against conditions (a)-(f)");
  validate->add_option("--params", o.params_path, "Model parameter JSON file")->required();
  validate->callback([&] { run = [&] { return cmd_validate(o); }; });

  auto* oracle = app.add_subcommand(
      "oracle",
      "Closed form vs product model on all of R_n (exit 3 if max diff > tol).\n"
      "CSV columns: element, closed_form (p/q), closed_form_decimal, model, abs_diff");
  oracle->add_option("--params", o.params_path, "Model parameter JSON file")->required();
  oracle->add_option("--n", o.n, "Degree (default min(N, 4))")->check(CLI::Range(0, 7));
  oracle->add_option("--tol", o.tol, "Tolerance (default 1e-10)")->check(CLI::PositiveNumber);
  oracle->add_option("--format", o.format, "json or csv")->check(CLI::IsMember(formats));
  oracle->add_option("--regular-mode", o.regular_mode, "expand (default) or cycle")
      ->check(CLI::IsMember({"expand", "cycle"}));
  oracle->add_flag("--disable-sign-twist", o.disable_sign_twist, "Diagnostic: drop the fermionic sign");
  oracle->callback([&] { run = [&] { return cmd_oracle(o); }; });

  auto* okounkov = app.add_subcommand(
      "okounkov",
      "Okounkov-operator stabilization report (exit 3 if max deviation > tol).\n"
      "CSV columns: k, x, y, n, s_n, target, deviation");
  okounkov->add_option("--params", o.params_path, "Model parameter JSON file")->required();
  okounkov->add_option("--k", o.k, "Slot index k (1..N-1)")->required();
  okounkov->add_option("--x", o.x_literal, "Test vector x (default: all of R_2)");
  okounkov->add_option("--y", o.y_literal, "Test vector y (default: all of R_2)");
  okounkov->add_option("--tol", o.tol, "Tolerance (default 1e-12)")->check(CLI::PositiveNumber);
  okounkov->add_option("--format", o.format, "json or csv")->check(CLI::IsMember(formats));
  okounkov->add_option("--regular-mode", o.regular_mode, "expand (default) or cycle")
      ->check(CLI::IsMember({"expand", "cycle"}));
  okounkov->callback([&] { run = [&] { return cmd_okounkov(o); }; });

  auto* spherical = app.add_subcommand(
      "spherical",
      "Spherical coefficients of pi^(n,l) vs the falling-factorial formula (exit 3 on mismatch).\n"
      "CSV columns: element, undefined, coefficient, formula, match");
  spherical->add_option("--n", o.n, "Ground-set size")->required();
  spherical->add_option("--l", o.l, "Marked-subset size")->required();
  auto* sph_elem = spherical->add_option("--elem", o.element, "Element literal");
  auto* sph_all  = spherical->add_flag("--all-idempotents", o.all_idempotents, "Every e_B with B in {1..n}");
  sph_elem->excludes(sph_all);
  spherical->add_option("--format", o.format, "json or csv")->check(CLI::IsMember(formats));
  spherical->callback([&] { run = [&] { return cmd_spherical(o); }; });

  auto* limit = app.add_subcommand(
      "spherical-limit",
      "Finite spherical coefficients along l_n = round(kappa n) and round(kappa^2 n).\n"
      "CSV columns: n, l_kappa, coeff_kappa, error_kappa, l_kappa2, coeff_kappa2, error_kappa2");
  limit->add_option("--kappa", o.kappa, "kappa = (u, w) as a rational in [0, 1] (default 1/2)");
  limit->add_option("--elem", o.element, "Element literal (default e{1})");
  limit->add_option("--sizes", o.sizes, "Values of n (default 10 25 50 100 200)");
  limit->add_option("--tol", o.tol, "Convergence threshold at the last n (default 0.02)")->check(CLI::PositiveNumber);
  limit->add_option("--format", o.format, "json or csv")->check(CLI::IsMember(formats));
  limit->callback([&] { run = [&] { return cmd_spherical_limit(o); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }
  try {
    return run();
  } catch (ResourceGuardError const& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return exit_guard;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
