#pragma once

// JSON forms of states, model parameters and reports. Exact values travel
// as "p/q" strings; floating values as numbers rounded to 12 significant
// digits so reports diff cleanly.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "../partial_bijection.hpp"
#include "../quasi_cycle.hpp"
#include "../rational.hpp"
#include "../report.hpp"
#include "../states/gram.hpp"
#include "../states/state.hpp"
#include "../tensor/model_params.hpp"

namespace rookchar::io {

  using nlohmann::ordered_json;

  inline double round12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
  }

  inline std::string format12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
  }

  namespace detail {
    inline Rational rational_field(ordered_json const& j, std::string const& what) {
      if (j.is_string()) {
        return parse_rational(j.get<std::string>());
      }
      if (j.is_number_integer()) {
        return Rational(std::to_string(j.get<long long>()));
      }
      throw ParseError(what + ": expected a rational string such as \"1/3\"");
    }

    inline std::vector<Rational> rational_list(ordered_json const& j, std::string const& what) {
      std::vector<Rational> out;
      if (j.is_null()) {
        return out;
      }
      if (!j.is_array()) {
        throw ParseError(what + ": expected an array");
      }
      for (auto const& x : j) {
        out.push_back(rational_field(x, what));
      }
      return out;
    }

    inline ordered_json rational_array(std::vector<Rational> const& xs) {
      auto out = ordered_json::array();
      for (auto const& x : xs) {
        out.push_back(to_string(x));
      }
      return out;
    }
  }  // namespace detail

  // {"alpha": [...], "beta": [...], "mark": {"i": 1, "t": "1/3"} | null}
  inline StateSpec state_from_json(ordered_json const& j) {
    if (!j.is_object()) {
      throw ParseError("state: expected a JSON object");
    }
    StateSpec spec;
    spec.thoma.alpha = detail::rational_list(j.value("alpha", ordered_json()), "alpha");
    spec.thoma.beta  = detail::rational_list(j.value("beta", ordered_json()), "beta");
    auto const mark  = j.value("mark", ordered_json());
    if (!mark.is_null()) {
      if (!mark.is_object() || !mark.contains("i") || !mark.contains("t")
          || !mark["i"].is_number_unsigned()) {
        throw ParseError("mark: expected {\"i\": <positive int>, \"t\": <rational>}");
      }
      spec.mark = Mark{mark["i"].get<std::size_t>(), detail::rational_field(mark["t"], "mark.t")};
    }
    return spec;
  }

  inline ordered_json to_json(StateSpec const& spec) {
    ordered_json j;
    j["alpha"] = detail::rational_array(spec.thoma.alpha);
    j["beta"]  = detail::rational_array(spec.thoma.beta);
    if (spec.mark) {
      j["mark"] = {{"i", spec.mark->i}, {"t", to_string(spec.mark->t)}};
    } else {
      j["mark"] = nullptr;
    }
    return j;
  }

  // {"a_diag": [...], "v": ["sqrt(1/2)", ...], "regular": [4], "N": 4}
  inline ModelParams params_from_json(ordered_json const& j) {
    if (!j.is_object()) {
      throw ParseError("params: expected a JSON object");
    }
    ModelParams p;
    p.a_diag = detail::rational_list(j.value("a_diag", ordered_json()), "a_diag");
    auto const v = j.value("v", ordered_json());
    if (!v.is_array()) {
      throw ParseError("v: expected an array");
    }
    for (auto const& x : v) {
      if (x.is_string()) {
        p.v.push_back(SqrtRational::parse(x.get<std::string>()));
      } else {
        p.v.push_back(SqrtRational::from_rational(detail::rational_field(x, "v")));
      }
    }
    auto const reg = j.value("regular", ordered_json::array());
    if (!reg.is_array()) {
      throw ParseError("regular: expected an array of coordinates");
    }
    for (auto const& c : reg) {
      if (!c.is_number_unsigned()) {
        throw ParseError("regular: coordinates are positive integers");
      }
      p.regular.push_back(c.get<std::size_t>());
    }
    if (!j.contains("N") || !j["N"].is_number_unsigned()) {
      throw ParseError("N: expected a positive integer");
    }
    p.N = j["N"].get<std::size_t>();
    return p;
  }

  inline ordered_json to_json(ModelParams const& p) {
    ordered_json j;
    j["a_diag"] = detail::rational_array(p.a_diag);
    auto v      = ordered_json::array();
    for (auto const& x : p.v) {
      v.push_back(x.str());
    }
    j["v"]       = v;
    j["regular"] = p.regular;
    j["N"]       = p.N;
    return j;
  }

  inline ordered_json to_json(ParamsReport const& r) {
    ordered_json j;
    j["passed"] = r.passed();
    auto checks = ordered_json::array();
    for (auto const& c : r.checks) {
      ordered_json e{{"condition", c.label}, {"passed", c.passed}};
      if (!c.passed) {
        e["message"] = c.message;
      }
      checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
  }

  inline ordered_json to_json(RationalMatrix const& m) {
    auto rows = ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto row = ordered_json::array();
      for (std::size_t j = 0; j < m.size(); ++j) {
        row.push_back(to_string(m(i, j)));
      }
      rows.push_back(row);
    }
    return rows;
  }

  inline ordered_json to_json(PsdCertificate const& c) {
    ordered_json j;
    j["verdict"] = c.is_psd() ? "PSD" : "NotPSD";
    if (c.is_psd()) {
      j["pivots"]      = detail::rational_array(c.pivots);
      j["permutation"] = c.permutation;
      j["lower"]       = to_json(c.lower);
    } else {
      j["witness"]       = detail::rational_array(c.witness);
      j["witness_value"] = to_string(c.witness_value);
    }
    return j;
  }

  inline ordered_json to_json(GramReport const& g) {
    ordered_json j;
    j["ordering"] = to_string(g.ordering);
    auto elems    = ordered_json::array();
    for (auto const& e : g.elements) {
      elems.push_back(render(e));
    }
    j["elements"]    = elems;
    j["matrix"]      = to_json(g.matrix);
    j["certificate"] = to_json(g.certificate);
    if (!g.note.empty()) {
      j["note"] = g.note;
    }
    return j;
  }

  inline ordered_json to_json(SuiteReport const& r) {
    ordered_json j;
    j["suite"]      = r.name;
    j["passed"]     = r.passed();
    j["checked"]    = r.checked;
    j["violations"] = r.violations;
    j["details"]    = r.details;
    return j;
  }

  inline ordered_json to_json(QuasiCycleDecomposition const& d) {
    auto parts = ordered_json::array();
    for (auto const& p : d.parts) {
      parts.push_back(render(p));
    }
    auto const inv = conjugacy_invariant(d);
    ordered_json j;
    j["parts"]     = parts;
    j["invariant"] = {{"q_partition", inv.q_partition},
                      {"c_partition", inv.c_partition},
                      {"m", inv.m}};
    return j;
  }

}  // namespace rookchar::io
