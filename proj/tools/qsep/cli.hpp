/* Copyright 2026 The qsep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// qsep command-line front end. `run` is the whole program minus process
// plumbing so tests can drive it in-process.
//
// Exit codes: 0 separable / success / equivalent, 1 entangled / not
// equivalent, 2 usage or input error.

#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsep/qsep.hpp"

namespace qsep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitEntangled = 1;
inline constexpr int kExitUsage = 2;

using io::json;

namespace detail {

struct StateInput {
  std::string path;
  bool allow_unnormalized = false;
  double norm_tol = kDefaultNormTol;
};

struct Loaded {
  PureState state;
  std::optional<std::string> name;
};

inline Loaded load(const std::string& path, const StateInput& opts, std::istream& in) {
  io::StateFile file;
  if (path == "-") {
    file = io::parse_state_file(in);
  } else {
    std::ifstream f(path);
    if (!f) throw invalid_state_error("cannot open " + path);
    file = io::parse_state_file(f);
  }
  const auto policy =
      opts.allow_unnormalized ? Normalization::allow_unnormalized : Normalization::validate;
  return Loaded{io::to_state(file, policy, opts.norm_tol), file.name};
}

inline json witness_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, MinorWitness>) {
          return json{{"kind", "minor"},  {"party", v.party},
                      {"r1", v.r1},       {"r2", v.r2},
                      {"c1", v.c1},       {"c2", v.c2},
                      {"value", io::complex_json(v.value)},
                      {"magnitude", std::abs(v.value)}};
        } else if constexpr (std::is_same_v<T, QuadWitness>) {
          return json{{"kind", "quad"},
                      {"i", v.quad.i},
                      {"j", v.quad.j},
                      {"k", v.quad.k},
                      {"l", v.quad.l},
                      {"residual", io::complex_json(v.residual)},
                      {"magnitude", std::abs(v.residual)}};
        } else {
          return json{{"kind", "purity"}, {"party", v.party}, {"purity", v.purity}};
        }
      },
      w);
}

inline json verdict_json(const Verdict& v) {
  return json{{"separable", v.separable}, {"witness", witness_json(v.witness)}};
}

inline json header(std::string_view command, const Loaded& loaded) {
  json r = json::object();
  r["command"] = command;
  if (loaded.name) r["name"] = *loaded.name;
  r["dims"] = loaded.state.dims();
  return r;
}

inline Dims parse_dims(const std::string& text) {
  Dims dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw shape_error("--dims: '" + item + "' is not an integer");
    }
    if (used != item.size()) throw shape_error("--dims: '" + item + "' is not an integer");
    dims.push_back(v);
  }
  validate_dims(dims);
  check_size_cap(dims);
  return dims;
}

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  void stamp(json& report) const {
    if (!enabled_) return;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    report["elapsed_seconds"] = dt.count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

inline void emit(std::ostream& out, const json& report) {
  io::write_json(out, report);
  out << '\n';
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"qsep: full-separability tests and entanglement measures for pure states"};
  app.require_subcommand(1);

  bool timing = false;
  app.add_flag("--timing", timing, "Add elapsed wall time to the report");

  detail::StateInput input;
  auto add_state_opts = [&](CLI::App* sub) {
    sub->add_flag("--allow-unnormalized", input.allow_unnormalized,
                  "Accept states whose norm is off by more than --norm-tol");
    sub->add_option("--norm-tol", input.norm_tol, "Normalization tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  // check
  double check_tol = kDefaultMinorTol;
  std::string method = "all";
  auto* check = app.add_subcommand("check", "Decide full separability");
  check->add_option("path", input.path, "State file, or - for stdin")->required();
  check->add_option("--tol", check_tol, "Relative zero tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  check->add_option("--method", method, "Decider to run")
      ->capture_default_str()
      ->check(CLI::IsMember({"minors", "pairs", "oracle", "all"}));
  add_state_opts(check);

  // measure
  auto* measure = app.add_subcommand("measure", "Compute D_E, |det M| and the two-qubit spectrum");
  measure->add_option("path", input.path, "State file, or - for stdin")->required();
  add_state_opts(measure);

  // factor
  double factor_tol = kDefaultFactorTol;
  auto* factor_cmd = app.add_subcommand("factor", "Recover local states of a product state");
  factor_cmd->add_option("path", input.path, "State file, or - for stdin")->required();
  factor_cmd->add_option("--tol", factor_tol, "Residual threshold")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_state_opts(factor_cmd);

  // gen
  std::string kind;
  std::string dims_text;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string gen_name;
  auto* gen = app.add_subcommand("gen", "Write a generated state file");
  gen->add_option("kind", kind, "ghz | w | product | random")
      ->required()
      ->check(CLI::IsMember({"ghz", "w", "product", "random"}));
  gen->add_option("--dims", dims_text, "Comma-separated party dimensions")->required();
  gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", out_path, "Output path (stdout when omitted)");
  gen->add_option("--name", gen_name, "Name stored in the file (defaults to the kind)");

  // equiv
  std::string path_b;
  double equiv_tol = kDefaultEquivTol;
  auto* equiv = app.add_subcommand("equiv", "Two-qubit LU equivalence via D_E");
  equiv->add_option("path_a", input.path, "First state file")->required();
  equiv->add_option("path_b", path_b, "Second state file")->required();
  equiv->add_option("--tol", equiv_tol, "Allowed D_E difference")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_state_opts(equiv);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qsep: " << e.what() << '\n';
    return kExitUsage;
  }

  const detail::Timer timer(timing);
  try {
    if (*check) {
      const auto loaded = detail::load(input.path, input, in);
      json report = detail::header("check", loaded);
      report["tolerance"] = check_tol;
      report["normalization_tolerance"] = input.norm_tol;
      json verdicts = json::object();
      std::vector<Verdict> results;
      const std::vector<Method> methods =
          method == "all" ? std::vector<Method>{Method::minors, Method::pairs, Method::oracle}
          : method == "minors" ? std::vector<Method>{Method::minors}
          : method == "pairs"  ? std::vector<Method>{Method::pairs}
                               : std::vector<Method>{Method::oracle};
      for (Method m : methods) {
        results.push_back(decide(loaded.state, m, check_tol));
        verdicts[std::string(to_string(m))] = detail::verdict_json(results.back());
      }
      const bool separable = results.front().separable;
      report["separable"] = separable;
      if (method == "all") {
        bool agree = true;
        for (const auto& v : results) agree = agree && v.separable == separable;
        report["agreement"] = agree;
      }
      report["verdicts"] = std::move(verdicts);
      timer.stamp(report);
      detail::emit(out, report);
      return separable ? kExitOk : kExitEntangled;
    }

    if (*measure) {
      const auto loaded = detail::load(input.path, input, in);
      const auto& state = loaded.state;
      json report = detail::header("measure", loaded);
      report["normalization_tolerance"] = input.norm_tol;
      report["d_e"] = d_e(state);
      if (state.parties() == 2 && state.dims()[0] == state.dims()[1]) {
        report["det_invariant"] = det_invariant(state);
      }
      if (state.dims() == Dims{2, 2}) {
        const auto s = schmidt_two_qubit(state);
        report["schmidt"] = json{{"epsilon", s.epsilon},
                                 {"lambda_plus", s.lambda_plus},
                                 {"lambda_minus", s.lambda_minus}};
      }
      timer.stamp(report);
      detail::emit(out, report);
      return kExitOk;
    }

    if (*factor_cmd) {
      auto loaded = detail::load(input.path, input, in);
      json report = detail::header("factor", loaded);
      report["tolerance"] = factor_tol;
      report["normalization_tolerance"] = input.norm_tol;
      PureState state = loaded.state;
      if (std::abs(state.norm_squared() - 1.0) > kDefaultNormTol) {
        state = qsep::detail::unit_norm(state);
        report["input_rescaled"] = true;
      }
      try {
        const Factorization f = factor(state, factor_tol);
        report["separable"] = true;
        report["residual"] = f.residual;
        report["global_phase"] = io::complex_json(f.global_phase);
        json locals = json::array();
        for (const auto& v : f.locals) locals.push_back(io::vector_json(v));
        report["locals"] = std::move(locals);
        timer.stamp(report);
        detail::emit(out, report);
        return kExitOk;
      } catch (const entangled_error& e) {
        report["separable"] = false;
        report["residual"] = e.residual();
        timer.stamp(report);
        detail::emit(out, report);
        return kExitEntangled;
      }
    }

    if (*gen) {
      const Dims dims = detail::parse_dims(dims_text);
      const bool qubits = std::all_of(dims.begin(), dims.end(), [](auto d) { return d == 2; });
      if ((kind == "ghz" || kind == "w") && !qubits) {
        throw shape_error(kind + " is defined for qubits only; use --dims 2,2,...");
      }
      const PureState state = kind == "ghz"       ? ghz(dims.size())
                              : kind == "w"       ? w(dims.size())
                              : kind == "product" ? random_product_state(dims, seed)
                                                  : random_state(dims, seed);
      const std::string name = gen_name.empty() ? kind : gen_name;
      if (out_path.empty()) {
        io::write_state_file(out, state, name);
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw invalid_state_error("cannot write " + out_path);
        io::write_state_file(f, state, name);
      }
      return kExitOk;
    }

    if (*equiv) {
      const auto a = detail::load(input.path, input, in);
      const auto b = detail::load(path_b, input, in);
      if (a.state.dims() != Dims{2, 2} || b.state.dims() != Dims{2, 2}) {
        throw shape_error("equiv: both states must be two-qubit");
      }
      json report = json::object();
      report["command"] = "equiv";
      const double da = d_e(a.state);
      const double db = d_e(b.state);
      report["d_e_a"] = da;
      report["d_e_b"] = db;
      report["difference"] = std::abs(da - db);
      report["tolerance"] = equiv_tol;
      const bool same = lu_equiv_two_qubit(a.state, b.state, equiv_tol);
      report["equivalent"] = same;
      timer.stamp(report);
      detail::emit(out, report);
      return same ? kExitOk : kExitEntangled;
    }
  } catch (const std::exception& e) {
    err << "qsep: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qsep::cli
