//
// Copyright 2026 The monocat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// monocat: command-line front end.
//
// Exit codes: 0 success or Equal, 10 Unknown, 1 a suite check failed,
// 2 usage, parse or shape error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "monocat/monocat.hpp"

namespace {

  using monocat::json;

  constexpr int exit_ok      = 0;
  constexpr int exit_fail    = 1;
  constexpr int exit_usage   = 2;
  constexpr int exit_unknown = 10;

  struct CapsFlags {
    std::optional<std::size_t>         max_gens;
    std::optional<monocat::width_type> max_width;
    std::optional<monocat::width_type> max_n;
    std::optional<std::size_t>         max_states;

    void attach(CLI::App* app) {
      app->add_option("--max-gens", max_gens, "generator count cap");
      app->add_option("--max-width", max_width, "intermediate width cap");
      app->add_option("--max-n", max_n, "second generator index cap");
      app->add_option("--max-states", max_states, "visited state cap")->check(CLI::PositiveNumber);
    }

    [[nodiscard]] monocat::SearchCaps resolve() const {
      monocat::SearchCaps caps;
      if (char const* env = std::getenv("MONOCAT_MAX_STATES")) {
        try {
          caps.max_states = std::stoull(env);
        } catch (std::exception const&) {
          throw monocat::Error(std::string("MONOCAT_MAX_STATES is not a number: ") + env);
        }
      }
      caps.max_gen_count = max_gens.value_or(caps.max_gen_count);
      caps.max_width     = max_width.value_or(caps.max_width);
      caps.max_index_n   = max_n.value_or(caps.max_index_n);
      caps.max_states    = max_states.value_or(caps.max_states);
      return caps;
    }
  };

  monocat::Mode parse_mode(std::string const& s) {
    if (s == "C" || s == "c") {
      return monocat::Mode::C;
    }
    if (s == "D" || s == "d") {
      return monocat::Mode::D;
    }
    throw monocat::Error("unknown mode '" + s + "' (expected C or D)");
  }

  void print_parse_error(std::string const& input, monocat::ParseError const& e) {
    std::cerr << "error: " << e.what() << "\n  " << input << "\n  "
              << std::string(e.position(), ' ') << "^\n";
  }

  json path_json(std::vector<monocat::RewriteStep> const& path) {
    json out = json::array();
    for (auto const& s : path) {
      out.push_back(monocat::describe(s));
    }
    return out;
  }

  template <typename Field>
  monocat::FunctorSpec<Field> make_spec(Field const& field, std::size_t dim, std::string const& phi) {
    if (phi == "identity") {
      return monocat::identity_spec(field, dim);
    }
    if (phi.rfind("random:", 0) == 0) {
      std::size_t used = 0;
      auto const  seed = std::stoull(phi.substr(7), &used);
      if (used != phi.size() - 7) {
        throw monocat::Error("bad seed in --phi " + phi);
      }
      return monocat::random_spec(field, dim, seed);
    }
    if (phi.rfind("file:", 0) == 0) {
      return monocat::load_phi(field, phi.substr(5));
    }
    throw monocat::Error("bad --phi '" + phi + "' (identity | random:SEED | file:PATH)");
  }

  template <typename Field>
  int run_eval(Field const& field, monocat::Term const& t, std::size_t dim, std::string const& phi, bool as_json) {
    auto const spec = make_spec(field, dim, phi);
    auto const m    = monocat::eval_term(spec, t);
    if (as_json) {
      json rows = json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
          row.push_back(field.to_string(m(r, c)));
        }
        rows.push_back(std::move(row));
      }
      json out{{"term", monocat::render(t)},
               {"dim", spec.dim()},
               {"field", field.name()},
               {"rows", m.rows()},
               {"cols", m.cols()},
               {"entries", rows}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << monocat::to_string(m);
    }
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monocat: word problems and vect semantics for the presented categories D and C"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output on stdout");

  std::string expr, other, mode_name = "C", phi = "identity", field_name = "q", config_path;
  std::size_t dim = 2;
  unsigned    threads = 1;
  bool        zero_timings = false;
  monocat::width_type hom_m = 0, hom_n = 0;
  CapsFlags   caps_flags;

  auto* parse_cmd = app.add_subcommand("parse", "parse an expression and print it back");
  parse_cmd->add_option("expr", expr, "term expression")->required();

  auto* norm_cmd = app.add_subcommand("normalize", "interchange normal form");
  norm_cmd->add_option("expr", expr, "term expression")->required();

  auto* eq_cmd = app.add_subcommand("eq", "bounded search for a rewrite path between two terms");
  eq_cmd->add_option("a", expr, "left term")->required();
  eq_cmd->add_option("b", other, "right term")->required();
  eq_cmd->add_option("--mode", mode_name, "C (with triangle rules) or D");
  caps_flags.attach(eq_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "matrix of a term under the vect functor");
  eval_cmd->add_option("expr", expr, "term expression")->required();
  eval_cmd->add_option("--dim", dim, "dimension of the image of 1")->check(CLI::Range(1, 16));
  eval_cmd->add_option("--phi", phi, "identity | random:SEED | file:PATH");
  eval_cmd->add_option("--field", field_name, "q | p:PRIME");

  auto* explore_cmd = app.add_subcommand("explore", "breadth-first closure of a term's class");
  explore_cmd->add_option("expr", expr, "term expression")->required();
  explore_cmd->add_option("--mode", mode_name, "C or D");
  explore_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
  caps_flags.attach(explore_cmd);

  auto* hom_cmd = app.add_subcommand("homset", "enumerate classes of Hom(m, n) under caps");
  hom_cmd->add_option("m", hom_m, "source width")->required();
  hom_cmd->add_option("n", hom_n, "target width")->required();
  hom_cmd->add_option("--mode", mode_name, "C or D");
  caps_flags.attach(hom_cmd);

  auto* suite_cmd = app.add_subcommand("suite", "run the counterexample checks");
  suite_cmd->add_option("--config", config_path, "JSON config file");
  suite_cmd->add_flag("--zero-timings", zero_timings, "report elapsed_ms as 0");
  suite_cmd->add_option("--threads", threads, "worker threads for exploration")->check(CLI::Range(1, 256));

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->add_flag("--json", as_json, "JSON output on stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  std::string current_input;
  try {
    auto parse = [&](std::string const& s) {
      current_input = s;
      return monocat::parse_expr(s);
    };

    if (parse_cmd->parsed()) {
      auto const t = parse(expr);
      if (as_json) {
        std::cout << json{{"term", monocat::render(t)},
                          {"source", t.source()},
                          {"target", t.target()},
                          {"gen_count", monocat::gen_count(t)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << monocat::render(t) << "\n";
      }
      return exit_ok;
    }

    if (norm_cmd->parsed()) {
      auto const t = monocat::canonical(parse(expr));
      if (as_json) {
        std::cout << json{{"canonical", monocat::render(t)},
                          {"source", t.source()},
                          {"target", t.target()}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << monocat::render(t) << "\n";
      }
      return exit_ok;
    }

    if (eq_cmd->parsed()) {
      auto const a    = parse(expr);
      auto const b    = parse(other);
      auto const caps = caps_flags.resolve();
      auto const res  = monocat::equal(a, b, parse_mode(mode_name), caps);
      if (as_json) {
        std::cout << json{{"verdict", res.equal() ? "Equal" : "Unknown"},
                          {"path", path_json(res.path)},
                          {"states_visited", res.states_visited},
                          {"truncated", res.truncated},
                          {"caps", monocat::to_json(caps)}}
                         .dump(2)
                  << "\n";
      } else if (res.equal()) {
        std::cout << "Equal (" << res.path.size() << " steps, " << res.states_visited << " states)\n";
        for (auto const& s : res.path) {
          std::cout << "  " << monocat::describe(s) << "\n";
        }
      } else {
        std::cout << "Unknown (" << res.states_visited << " states"
                  << (res.truncated ? ", truncated" : ", caps exhausted") << ")\n";
      }
      return res.equal() ? exit_ok : exit_unknown;
    }

    if (eval_cmd->parsed()) {
      auto const t     = parse(expr);
      auto const field = monocat::FieldConfig::parse(field_name);
      if (field.prime) {
        return run_eval(monocat::PrimeField(field.modulus), t, dim, phi, as_json);
      }
      return run_eval(monocat::RationalField{}, t, dim, phi, as_json);
    }

    if (explore_cmd->parsed()) {
      auto const t      = parse(expr);
      auto const report = monocat::explore(t, parse_mode(mode_name), caps_flags.resolve(), threads);
      if (as_json) {
        std::cout << monocat::to_json(report).dump(2) << "\n";
      } else {
        std::cout << "states visited:   " << report.states_visited << "\n"
                  << "identity found:   " << (report.identity_found ? "yes" : "no") << "\n"
                  << "min gen count:    " << report.min_gen_count_seen << "\n"
                  << "levels:           " << report.depth << "\n"
                  << "truncated:        " << (report.truncated ? "yes" : "no") << "\n";
        for (auto const& s : report.witness) {
          std::cout << "  " << monocat::describe(s) << "\n";
        }
      }
      return exit_ok;
    }

    if (hom_cmd->parsed()) {
      auto const caps = caps_flags.resolve();
      auto const hom  = monocat::enum_hom(monocat::Obj{hom_m}, monocat::Obj{hom_n},
                                         parse_mode(mode_name), caps);
      if (as_json) {
        json classes = json::array();
        for (auto const& c : hom.classes) {
          json members = json::array();
          for (auto const& t : c.members) {
            members.push_back(monocat::render(t));
          }
          classes.push_back({{"representative", monocat::render(c.representative)},
                             {"members", members}});
        }
        std::cout << json{{"source", hom_m},
                          {"target", hom_n},
                          {"caps", monocat::to_json(caps)},
                          {"terms", hom.raw_terms},
                          {"classes", classes},
                          {"unresolved_pairs", hom.unresolved.size()}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << hom.raw_terms << " terms, " << hom.classes.size() << " classes, "
                  << hom.unresolved.size() << " unresolved pairs\n";
        for (auto const& c : hom.classes) {
          std::cout << "  [" << c.members.size() << "] " << monocat::render(c.representative) << "\n";
        }
      }
      return exit_ok;
    }

    if (suite_cmd->parsed()) {
      monocat::SuiteConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
          std::cerr << "error: cannot open config " << config_path << "\n";
          return exit_usage;
        }
        json j;
        try {
          j = json::parse(in);
        } catch (json::exception const& e) {
          std::cerr << "error: config " << config_path << ": " << e.what() << "\n";
          return exit_usage;
        }
        try {
          cfg = monocat::config_from_json(j);
        } catch (json::exception const& e) {
          std::cerr << "error: config " << config_path << ": " << e.what() << "\n";
          return exit_usage;
        }
      }
      if (suite_cmd->count("--threads") != 0) {
        cfg.threads = threads;
      }
      auto const report = monocat::run_all(cfg);
      if (as_json) {
        std::cout << report.to_json(zero_timings).dump(2) << "\n";
      } else {
        for (auto const& c : report.checks) {
          std::cout << std::left << std::setw(24) << c.name << " " << monocat::to_string(c.status);
          if (!zero_timings) {
            std::cout << "  (" << static_cast<long>(c.elapsed_ms) << " ms)";
          }
          std::cout << "\n";
        }
      }
      return report.failed() ? exit_fail : exit_ok;
    }
  } catch (monocat::ParseError const& e) {
    print_parse_error(current_input, e);
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
