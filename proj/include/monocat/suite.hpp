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

// The counterexample checks: closedness through the triangle identities,
// bounded evidence that the snake composite is not the identity, functor
// obstructions to invertibility, and the r-category bijection at x = 1.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "monocat/field.hpp"
#include "monocat/random.hpp"
#include "monocat/rewrite.hpp"
#include "monocat/rules.hpp"
#include "monocat/term.hpp"
#include "monocat/vect.hpp"

namespace monocat {

  using json = nlohmann::ordered_json;

  // (id_1 (x) eps_{0,1}) (eta_{0,1} (x) id_1)
  inline Term snake_term() {
    return Term(1, {{0, eta(0, 1), 1}, {1, eps(0, 1), 0}});
  }

  inline Term triangle_a(width_type i, width_type n) {
    return instantiate(RuleId::TriangleA, RuleParams{0, 0, i, 0, 1, 0, n}).lhs_term();
  }

  inline Term triangle_b(width_type i, width_type n) {
    return instantiate(RuleId::TriangleB, RuleParams{0, 0, i, 0, 1, 0, n}).lhs_term();
  }

  // f : y+x -> z  |->  (f (+) id_x) eta_{y,x} : y -> z+x
  inline Term transpose(Term const& f, Obj x) {
    if (x.wires == 0) {
      return f;
    }
    if (f.source() < x.wires) {
      throw NotComposable("transpose: source " + std::to_string(f.source()) + " is narrower than "
                          + std::to_string(x.wires));
    }
    return compose(whisker(0, eta(f.source() - x.wires, x.wires), 0), tensor(f, identity(x)));
  }

  // g : y -> z+x  |->  eps_{z,x} (g (+) id_x) : y+x -> z
  inline Term untranspose(Term const& g, Obj x) {
    if (x.wires == 0) {
      return g;
    }
    if (g.target() < x.wires) {
      throw NotComposable("untranspose: target " + std::to_string(g.target())
                          + " is narrower than " + std::to_string(x.wires));
    }
    return compose(tensor(g, identity(x)), whisker(0, eps(g.target() - x.wires, x.wires), 0));
  }

  struct FieldConfig {
    bool          prime   = false;
    std::uint64_t modulus = PrimeField::default_prime;

    [[nodiscard]] std::string name() const {
      return prime ? "p:" + std::to_string(modulus) : "q";
    }

    static FieldConfig parse(std::string const& text) {
      if (text == "q") {
        return {};
      }
      if (text.rfind("p:", 0) == 0) {
        std::size_t   used = 0;
        std::uint64_t p    = 0;
        try {
          p = std::stoull(text.substr(2), &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used == 0 || used != text.size() - 2) {
          throw Error("bad field '" + text + "'");
        }
        PrimeField{p};  // validates
        return {true, p};
      }
      throw Error("bad field '" + text + "' (expected q or p:PRIME)");
    }
  };

  struct SuiteConfig {
    SearchCaps                 caps;
    std::vector<std::size_t>   dims      = {1, 2};
    std::vector<std::uint64_t> phi_seeds = {11, 23, 37, 41, 59};
    FieldConfig                field;
    // hom-set enumeration for the r-category and automorphism checks
    SearchCaps    hom_caps{3, 6, 1, 5000};
    std::uint64_t sample_seed         = 2024;
    std::size_t   obstruction_samples = 100;
    std::size_t   invariant_trials    = 1000;
    unsigned      threads             = 1;
    // test hook: perturb one rule's right-hand side in the soundness sweep
    std::optional<RuleId> corrupt_rule;
  };

  inline json to_json(SearchCaps const& c) {
    return json{{"max_gen_count", c.max_gen_count},
                {"max_width", c.max_width},
                {"max_index_n", c.max_index_n},
                {"max_states", c.max_states}};
  }

  inline SearchCaps caps_from_json(json const& j, SearchCaps caps) {
    for (auto const& [key, value] : j.items()) {
      if (key == "max_gen_count") {
        caps.max_gen_count = value.get<std::size_t>();
      } else if (key == "max_width") {
        caps.max_width = value.get<width_type>();
      } else if (key == "max_index_n") {
        caps.max_index_n = value.get<width_type>();
      } else if (key == "max_states") {
        caps.max_states = value.get<std::size_t>();
      } else {
        throw Error("unknown caps key '" + key + "'");
      }
    }
    if (caps.max_width < 1 || caps.max_index_n < 1 || caps.max_states < 1) {
      throw Error("caps max_width, max_index_n and max_states must be >= 1");
    }
    if (caps.max_width > 16 || caps.max_index_n > 4 || caps.max_gen_count > 12) {
      throw Error("caps exceed guards (width <= 16, n <= 4, gens <= 12)");
    }
    return caps;
  }

  inline json to_json(SuiteConfig const& c) {
    json j{{"caps", to_json(c.caps)},
           {"dims", c.dims},
           {"phi_seeds", c.phi_seeds},
           {"field", c.field.name()},
           {"hom_caps", to_json(c.hom_caps)},
           {"sample_seed", c.sample_seed},
           {"obstruction_samples", c.obstruction_samples},
           {"invariant_trials", c.invariant_trials},
           {"threads", c.threads}};
    if (c.corrupt_rule) {
      j["corrupt_rule"] = to_string(*c.corrupt_rule);
    }
    return j;
  }

  inline SuiteConfig config_from_json(json const& j) {
    SuiteConfig c;
    if (!j.is_object()) {
      throw Error("suite config must be a JSON object");
    }
    for (auto const& [key, value] : j.items()) {
      if (key == "caps") {
        c.caps = caps_from_json(value, c.caps);
      } else if (key == "hom_caps") {
        c.hom_caps = caps_from_json(value, c.hom_caps);
      } else if (key == "dims") {
        c.dims = value.get<std::vector<std::size_t>>();
      } else if (key == "phi_seeds") {
        c.phi_seeds = value.get<std::vector<std::uint64_t>>();
      } else if (key == "field") {
        c.field = FieldConfig::parse(value.get<std::string>());
      } else if (key == "sample_seed") {
        c.sample_seed = value.get<std::uint64_t>();
      } else if (key == "obstruction_samples") {
        c.obstruction_samples = value.get<std::size_t>();
      } else if (key == "invariant_trials") {
        c.invariant_trials = value.get<std::size_t>();
      } else if (key == "threads") {
        c.threads = value.get<unsigned>();
      } else if (key == "corrupt_rule") {
        auto const name = value.get<std::string>();
        bool       hit  = false;
        for (RuleId r : {RuleId::NatEtaEta, RuleId::NatEtaEps, RuleId::NatEpsEta,
                         RuleId::NatEpsEps, RuleId::TriangleA, RuleId::TriangleB}) {
          if (name == to_string(r)) {
            c.corrupt_rule = r;
            hit            = true;
          }
        }
        if (!hit) {
          throw Error("unknown rule '" + name + "'");
        }
      } else {
        throw Error("unknown config key '" + key + "'");
      }
    }
    if (c.dims.empty()) {
      throw Error("dims must be non-empty");
    }
    for (auto d : c.dims) {
      if (d < 1 || d > 3) {
        throw Error("dims must lie in {1,2,3}");
      }
    }
    return c;
  }

  enum class Status : std::uint8_t { Pass, Fail, Evidence, Skipped };

  inline char const* to_string(Status s) noexcept {
    switch (s) {
      case Status::Pass: return "pass";
      case Status::Fail: return "fail";
      case Status::Evidence: return "evidence";
      case Status::Skipped: return "skipped";
    }
    return "?";
  }

  struct CheckResult {
    std::string                             name;
    Status                                  status = Status::Pass;
    json                                    details = json::object();
    std::optional<std::size_t>              states_visited;
    std::optional<std::vector<std::string>> path;
    double                                  elapsed_ms = 0;
  };

  struct SuiteReport {
    json                     config;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool failed() const {
      for (auto const& c : checks) {
        if (c.status == Status::Fail) {
          return true;
        }
      }
      return false;
    }

    [[nodiscard]] CheckResult const* find(std::string const& name) const {
      for (auto const& c : checks) {
        if (c.name == name) {
          return &c;
        }
      }
      return nullptr;
    }

    [[nodiscard]] json to_json(bool zero_timings = false) const {
      json out{{"config", config}, {"checks", json::array()}};
      for (auto const& c : checks) {
        json e{{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}};
        if (c.states_visited) {
          e["states_visited"] = *c.states_visited;
        }
        if (c.path) {
          e["path"] = *c.path;
        }
        e["elapsed_ms"] = zero_timings ? 0.0 : c.elapsed_ms;
        out["checks"].push_back(std::move(e));
      }
      return out;
    }
  };

  namespace detail {

    inline std::vector<std::string> describe_path(std::vector<RewriteStep> const& path) {
      std::vector<std::string> out;
      for (auto const& s : path) {
        out.push_back(describe(s));
      }
      return out;
    }

    template <typename Field>
    std::vector<FunctorSpec<Field>> specs_for(Field const&              field,
                                              std::size_t               d,
                                              SuiteConfig const&        cfg,
                                              std::size_t               max_random) {
      std::vector<FunctorSpec<Field>> out{identity_spec(field, d)};
      for (std::size_t k = 0; k < cfg.phi_seeds.size() && k < max_random; ++k) {
        out.push_back(random_spec(field, d, cfg.phi_seeds[k]));
      }
      return out;
    }

    template <typename F>
    CheckResult timed(std::string name, F&& body) {
      auto        t0 = std::chrono::steady_clock::now();
      CheckResult r;
      r.name = std::move(name);
      body(r);
      r.elapsed_ms
          = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      return r;
    }

    // Key of the images under d = 2 with two pairings; separates classes.
    inline std::string vect_invariant(Term const& t) {
      static thread_local auto e1 = Evaluator<RationalField>(identity_spec(RationalField{}, 2));
      static thread_local auto e2 = Evaluator<RationalField>(random_spec(RationalField{}, 2, 7));
      return e1.eval(t).key(RationalField{}) + "#" + e2.eval(t).key(RationalField{});
    }

    // Every instance of every relation with i, j, l in {0,1,2}, k, n in {1,2}.
    inline std::vector<std::pair<RuleId, RuleInstance>> rule_instances(
        std::optional<RuleId> corrupt = std::nullopt) {
      std::vector<std::pair<RuleId, RuleInstance>> out;
      for (RuleId r : naturality_rules) {
        for (width_type i = 0; i <= 2; ++i) {
          for (width_type j = 0; j <= 2; ++j) {
            for (width_type l = 0; l <= 2; ++l) {
              for (width_type k = 1; k <= 2; ++k) {
                for (width_type n = 1; n <= 2; ++n) {
                  out.emplace_back(r, instantiate(r, RuleParams{0, 0, i, j, k, l, n}));
                }
              }
            }
          }
        }
      }
      for (RuleId r : triangle_rules) {
        for (width_type i = 0; i <= 2; ++i) {
          for (width_type n = 1; n <= 2; ++n) {
            out.emplace_back(r, instantiate(r, RuleParams{0, 0, i, 0, 1, 0, n}));
          }
        }
      }
      if (corrupt) {
        for (auto& [r, inst] : out) {
          if (r != *corrupt) {
            continue;
          }
          if (inst.rhs.empty()) {
            // identity replaced by a bubble on the left
            inst.rhs = {{0, eta(0, 1), inst.source}, {0, eps(0, 1), inst.source}};
          } else {
            // move the second slice's left whisker to the right
            auto& s = inst.rhs.back();
            std::swap(s.left, s.right);
          }
        }
      }
      return out;
    }

  }  // namespace detail

  template <typename Field>
  CheckResult check_rule_soundness(SuiteConfig const& cfg, Field const& field) {
    return detail::timed("rule_soundness", [&](CheckResult& r) {
      auto const  instances = detail::rule_instances(cfg.corrupt_rule);
      std::size_t checked = 0, failed = 0;
      json        failures = json::array();
      for (std::size_t d : cfg.dims) {
        if (d > 2) {
          continue;  // widths up to 14 in the sweep
        }
        for (auto const& spec : detail::specs_for(field, d, cfg, 1)) {
          Evaluator<Field> ev(spec);
          for (auto const& [rule, inst] : instances) {
            ++checked;
            Term const lhs = inst.lhs_term();
            Term const rhs(lhs.source(), inst.rhs);
            if (lhs.target() != rhs.target() || !(ev.eval(lhs) == ev.eval(rhs))) {
              ++failed;
              if (failures.size() < 10) {
                failures.push_back(std::string(to_string(rule)) + " d=" + std::to_string(d)
                                   + ": " + render(lhs) + " vs " + render(rhs));
              }
            }
          }
        }
      }
      r.status  = failed == 0 ? Status::Pass : Status::Fail;
      r.details = {{"instances_checked", checked}, {"failed", failed}, {"failures", failures}};
    });
  }

  template <typename Field>
  CheckResult check_tower_snake(SuiteConfig const& cfg, Field const& field) {
    return detail::timed("tower_snake", [&](CheckResult& r) {
      std::size_t checked = 0, failed = 0;
      for (std::size_t d : cfg.dims) {
        for (auto const& spec : detail::specs_for(field, d, cfg, cfg.phi_seeds.size())) {
          for (std::size_t n = 0; n <= 3; ++n) {
            std::size_t dn = 1;
            for (std::size_t k = 0; k < n; ++k) {
              dn *= d;
            }
            auto const id = Matrix<Field>::identity(field, dn);
            auto const coev = coev_mat(spec, n);
            auto const ev   = ev_mat(spec, n);
            // (id (x) ev)(coev (x) id) and (ev (x) id)(id (x) coev)
            auto const first  = multiply(kron(id, ev), kron(coev, id));
            auto const second = multiply(kron(ev, id), kron(id, coev));
            checked += 2;
            failed += !first.is_identity();
            failed += !second.is_identity();
          }
        }
      }
      r.status  = failed == 0 ? Status::Pass : Status::Fail;
      r.details = {{"composites_checked", checked}, {"failed", failed}};
    });
  }

  inline CheckResult check_closedness(SuiteConfig const& cfg) {
    return detail::timed("closedness", [&](CheckResult& r) {
      bool        ok = true;
      json        triangles = json::array(), roundtrips = json::array();
      std::size_t visited = 0;
      for (width_type i = 0; i <= 2; ++i) {
        for (width_type n = 1; n <= 2; ++n) {
          for (bool a : {true, false}) {
            Term const t   = a ? triangle_a(i, n) : triangle_b(i, n);
            auto const res = equal(t, identity(Obj{i + n}), Mode::C, cfg.caps);
            visited += res.states_visited;
            bool good = res.equal() && res.path.size() == 1 && verify_path(t, identity(Obj{i + n}), res.path);
            for (auto const& s : res.path) {
              good = good && is_triangle(s.rule);
            }
            ok = ok && good;
            triangles.push_back({{"rule", a ? "TriangleA" : "TriangleB"},
                                 {"i", i},
                                 {"n", n},
                                 {"equal", res.equal()},
                                 {"path_length", res.path.size()}});
            if (i == 0 && n == 1 && a) {
              r.path = detail::describe_path(res.path);
            }
          }
        }
      }
      for (width_type m = 0; m <= 2; ++m) {
        for (width_type k = 1; k <= 2; ++k) {
          for (Generator g : {eta(m, k), eps(m, k)}) {
            for (width_type x = 1; x <= 2; ++x) {
              Term const gen = whisker(0, g, 0);
              for (bool forward_first : {true, false}) {
                if (forward_first ? gen.source() < x : gen.target() < x) {
                  continue;
                }
                Term const round = forward_first ? untranspose(transpose(gen, Obj{x}), Obj{x})
                                                 : transpose(untranspose(gen, Obj{x}), Obj{x});
                SearchCaps caps{gen_count(round), std::max<width_type>(round.max_width(), 2),
                                std::max<width_type>(2, round.max_index_n()), 20000};
                auto const res  = equal(round, gen, Mode::C, caps);
                visited += res.states_visited;
                bool const good = res.equal() && res.path.size() <= 2 && verify_path(round, gen, res.path);
                ok              = ok && good;
                roundtrips.push_back({{"generator", render(g)},
                                      {"x", x},
                                      {"order", forward_first ? "untranspose.transpose"
                                                              : "transpose.untranspose"},
                                      {"equal", res.equal()},
                                      {"path_length", res.path.size()}});
              }
            }
          }
        }
      }
      r.status         = ok ? Status::Pass : Status::Fail;
      r.states_visited = visited;
      r.details        = {{"triangles", triangles}, {"roundtrips", roundtrips}};
    });
  }

  inline json to_json(ExploreReport const& e) {
    return json{{"start", render(e.start)},
                {"mode", to_string(e.mode)},
                {"caps", to_json(e.caps)},
                {"states_visited", e.states_visited},
                {"identity_found", e.identity_found},
                {"min_gen_count_seen", e.min_gen_count_seen},
                {"truncated", e.truncated},
                {"depth", e.depth},
                {"witness", detail::describe_path(e.witness)}};
  }

  inline CheckResult check_not_rigid_evidence(SuiteConfig const& cfg) {
    return detail::timed("not_rigid_evidence", [&](CheckResult& r) {
      auto const main = explore(snake_term(), Mode::C, cfg.caps, cfg.threads);
      SearchCaps no_expansion = cfg.caps;
      no_expansion.max_gen_count = 2;
      auto const small   = explore(snake_term(), Mode::C, no_expansion, cfg.threads);
      auto const control = explore(triangle_a(0, 1), Mode::C, cfg.caps, cfg.threads);
      bool const ok      = !main.identity_found && !small.identity_found && control.identity_found;
      r.status           = ok ? Status::Evidence : Status::Fail;
      r.states_visited   = main.states_visited;
      r.details          = {{"snake", to_json(main)},
                            {"snake_without_expansions", to_json(small)},
                            {"control_triangle", to_json(control)}};
    });
  }

  template <typename Field>
  CheckResult check_skeletal_and_obstructions(SuiteConfig const& cfg, Field const& field) {
    return detail::timed("skeletal_obstructions", [&](CheckResult& r) {
      std::optional<std::size_t> dim;
      for (std::size_t d : cfg.dims) {
        if (d >= 2) {
          dim = d;
          break;
        }
      }
      if (!dim) {
        r.status  = Status::Skipped;
        r.details = {{"reason", "needs a dimension >= 2"}};
        return;
      }
      auto const spec = cfg.phi_seeds.empty() ? identity_spec(field, *dim)
                                              : random_spec(field, *dim, cfg.phi_seeds.front());
      std::mt19937_64 rng(cfg.sample_seed);
      width_type const max_w = *dim == 2 ? 6 : 4;
      std::uniform_int_distribution<int> small(0, 2), gens(0, 3), width(0, 4);

      std::size_t leading_eps = 0, trailing_eta = 0, non_square = 0, samples = 0;
      json        misses = json::array();
      auto        record = [&](Term const& t, std::size_t& counter) {
        ++samples;
        auto const v = iso_obstruction(spec, t);
        if (v.not_iso) {
          ++counter;
        } else if (misses.size() < 5) {
          misses.push_back(render(t));
        }
      };
      RandomTermShape shape{0, max_w, 2};
      // g (id (x) eps_{j,k} (x) id)
      for (std::size_t s = 0; s < cfg.obstruction_samples; ++s) {
        width_type const k = 1, j = width_type(small(rng)) % 2;
        width_type const i1 = width_type(small(rng)) % 2, i2 = width_type(small(rng)) % 2;
        Term const       first = whisker(i1, eps(j, k), i2);
        shape.gens              = std::size_t(gens(rng));
        record(compose(first, random_term(rng, first.target(), shape)), leading_eps);
      }
      // (id (x) eta_{l,m} (x) id) g
      for (std::size_t s = 0; s < cfg.obstruction_samples; ++s) {
        shape.gens   = std::size_t(gens(rng));
        Term g       = random_term(rng, width_type(width(rng)), shape);
        while (g.target() + 2 > max_w) {
          g = random_term(rng, width_type(width(rng)) % 3, shape);
        }
        width_type const w  = g.target();
        std::uniform_int_distribution<width_type> at(0, w);
        width_type const j1 = at(rng);
        std::uniform_int_distribution<width_type> len(0, w - j1);
        width_type const l  = len(rng);
        record(compose(g, whisker(j1, eta(l, 1), w - j1 - l)), trailing_eta);
      }
      // m -> n with m != n: random noise, then a generator reaching n
      std::size_t pairs = 0;
      while (pairs < 20) {
        width_type const m = width_type(width(rng)), n = width_type(width(rng));
        if (m == n || (m + n) % 2 != 0) {
          continue;
        }
        ++pairs;
        shape.gens       = std::size_t(small(rng));
        Term             t = random_term(rng, m, shape);
        width_type const w = t.target();
        if (w < n) {
          t = compose(t, whisker(0, eta(w, (n - w) / 2), 0));
        } else if (w > n) {
          t = compose(t, whisker(0, eps(n, (w - n) / 2), 0));
        }
        ++samples;
        auto const v = iso_obstruction(spec, t);
        non_square += v.not_iso && v.reason.rfind("non-square", 0) == 0;
      }
      bool const id_inconclusive = !iso_obstruction(spec, identity(Obj{3})).not_iso;
      auto const eps_image       = eval_term(spec, whisker(0, eps(0, 1), 0));
      std::size_t const eps_rank = rank(eps_image);

      bool const ok = leading_eps == cfg.obstruction_samples
                      && trailing_eta == cfg.obstruction_samples && non_square == 20
                      && id_inconclusive && eps_rank == 1;
      r.status  = ok ? Status::Pass : Status::Fail;
      r.details = {{"dimension", *dim},
                   {"leading_eps_not_iso", leading_eps},
                   {"trailing_eta_not_iso", trailing_eta},
                   {"non_square_not_iso", non_square},
                   {"samples", samples},
                   {"identity_inconclusive", id_inconclusive},
                   {"eps01_rank", eps_rank},
                   {"eps01_columns", eps_image.cols()},
                   {"misses", misses}};
    });
  }

  inline CheckResult check_r_category(SuiteConfig const& cfg) {
    return detail::timed("r_category", [&](CheckResult& r) {
      Obj const        x{1};
      SearchCaps const hc = cfg.hom_caps;
      SearchCaps       eq = cfg.caps;
      eq.max_gen_count    = std::max(eq.max_gen_count, hc.max_gen_count + 3);
      eq.max_states       = std::min<std::size_t>(eq.max_states, 20000);
      bool        ok      = true;
      json        per_y   = json::array();
      std::size_t visited = 0;
      auto        same    = [&](Term const& a, Term const& b) {
        auto const res = equal(a, b, Mode::C, eq);
        visited += res.states_visited;
        return res.equal();
      };
      // y = 0 and y = 2 are empty by parity; y = 3 adds a non-empty case
      for (width_type y = 0; y <= 3; ++y) {
        auto const left  = enum_hom(Obj{y + x.wires}, Obj{0}, Mode::C, hc, detail::vect_invariant);
        auto const right = enum_hom(Obj{y}, x, Mode::C, hc, detail::vect_invariant);
        std::size_t mapped_forward = 0, mapped_backward = 0, roundtrips = 0, failures = 0;
        for (auto const& c : left.classes) {
          Term const f = c.representative;
          roundtrips += 1;
          if (!same(untranspose(transpose(f, x), x), f)) {
            ++failures;
          }
          if (gen_count(f) + 1 <= hc.max_gen_count) {
            auto const target = right.class_of(transpose(f, x));
            if (!target || !same(untranspose(right.classes[*target].representative, x), f)) {
              ++failures;
            } else {
              ++mapped_forward;
            }
          }
        }
        for (auto const& c : right.classes) {
          Term const g = c.representative;
          roundtrips += 1;
          if (!same(transpose(untranspose(g, x), x), g)) {
            ++failures;
          }
          if (gen_count(g) + 1 <= hc.max_gen_count) {
            auto const source = left.class_of(untranspose(g, x));
            if (!source || !same(transpose(left.classes[*source].representative, x), g)) {
              ++failures;
            } else {
              ++mapped_backward;
            }
          }
        }
        ok = ok && failures == 0;
        per_y.push_back({{"y", y},
                         {"x", x.wires},
                         {"hom_yx_0_classes", left.classes.size()},
                         {"hom_y_x_classes", right.classes.size()},
                         {"hom_yx_0_terms", left.raw_terms},
                         {"hom_y_x_terms", right.raw_terms},
                         {"unresolved", left.unresolved.size() + right.unresolved.size()},
                         {"mapped_forward", mapped_forward},
                         {"mapped_backward", mapped_backward},
                         {"roundtrips", roundtrips},
                         {"failures", failures}});
      }
      // L(x) = R(x) = x on objects, so LR and RL are the identity on objects.
      r.status         = ok ? Status::Pass : Status::Fail;
      r.states_visited = visited;
      r.details        = {{"per_y", per_y}, {"dual_object_of_1", 1}};
    });
  }

  inline CheckResult check_automorphisms(SuiteConfig const& cfg) {
    return detail::timed("automorphisms_trivial", [&](CheckResult& r) {
      SearchCaps hc    = cfg.hom_caps;
      hc.max_gen_count = std::min<std::size_t>(hc.max_gen_count, 2);
      SearchCaps eq    = cfg.caps;
      eq.max_gen_count = std::min<std::size_t>(eq.max_gen_count, 2 * hc.max_gen_count);
      eq.max_states    = std::min<std::size_t>(eq.max_states, 5000);
      json        per_obj = json::array();
      bool        ok      = true;
      for (width_type w : {1u, 2u}) {
        auto const  hom = enum_hom(Obj{w}, Obj{w}, Mode::C, hc, detail::vect_invariant);
        Term const  id(Obj{w});
        std::size_t autos = 0, nontrivial = 0;
        for (auto const& f : hom.classes) {
          for (auto const& g : hom.classes) {
            Term const fg = compose(f.representative, g.representative);
            Term const gf = compose(g.representative, f.representative);
            if (detail::vect_invariant(fg) != detail::vect_invariant(id)
                || detail::vect_invariant(gf) != detail::vect_invariant(id)) {
              continue;
            }
            if (equal(fg, id, Mode::C, eq).equal() && equal(gf, id, Mode::C, eq).equal()) {
              ++autos;
              if (!equal(f.representative, id, Mode::C, eq).equal()) {
                ++nontrivial;
              }
              break;
            }
          }
        }
        ok = ok && nontrivial == 0;
        per_obj.push_back({{"object", w},
                           {"classes", hom.classes.size()},
                           {"automorphisms", autos},
                           {"non_identity", nontrivial}});
      }
      r.status  = ok ? Status::Evidence : Status::Fail;
      r.details = {{"caps", to_json(hc)}, {"objects", per_obj}};
    });
  }

  template <typename Field>
  CheckResult check_functor_blindness(SuiteConfig const& cfg, Field const& field) {
    return detail::timed("functor_blindness", [&](CheckResult& r) {
      Term const  s = snake_term();
      std::size_t specs = 0, identity_images = 0;
      for (std::size_t d : cfg.dims) {
        for (auto const& spec : detail::specs_for(field, d, cfg, cfg.phi_seeds.size())) {
          ++specs;
          identity_images += eval_term(spec, s).is_identity();
        }
      }
      auto const res = equal(s, identity(Obj{1}), Mode::C, cfg.caps);
      bool const ok  = identity_images == specs && !res.equal();
      r.status         = ok ? Status::Pass : Status::Fail;
      r.states_visited = res.states_visited;
      r.details        = {{"specs", specs},
                          {"identity_images", identity_images},
                          {"eq_snake_id1", res.equal() ? "Equal" : "Unknown"},
                          {"truncated", res.truncated}};
    });
  }

  inline CheckResult check_rewrite_invariants(SuiteConfig const& cfg) {
    return detail::timed("rewrite_invariants", [&](CheckResult& r) {
      std::mt19937_64 rng(cfg.sample_seed + 1);
      SearchCaps      open{12, 12, 2, 1};
      auto const      spec = random_spec(RationalField{}, 2, 5);
      Evaluator<RationalField> ev(spec);

      auto random_step = [&](Mode mode, bool triangle) -> std::optional<std::pair<Term, RewriteStep>> {
        for (int attempt = 0; attempt < 200; ++attempt) {
          RandomTermShape shape{std::uniform_int_distribution<std::size_t>(2, 4)(rng), 6, 2};
          Term const t = canonical(random_term(rng, width_type(rng() % 3), shape));
          std::vector<RewriteStep> steps;
          for (auto& s : match_rules(t, mode, open)) {
            if (is_triangle(s.rule) == triangle) {
              steps.push_back(std::move(s));
            }
          }
          if (!steps.empty()) {
            return std::pair{t, steps[rng() % steps.size()]};
          }
        }
        return std::nullopt;
      };

      std::size_t d_ok = 0, c_ok = 0, inverse_ok = 0, image_ok = 0, canon_ok = 0;
      std::size_t const trials = cfg.invariant_trials;
      for (std::size_t k = 0; k < trials; ++k) {
        if (auto p = random_step(Mode::D, false)) {
          auto const& [t, step] = *p;
          Term const u          = apply(t, step);
          d_ok += gen_count(u) == gen_count(t) && u.source() == t.source() && u.target() == t.target();
          inverse_ok += apply(u, reverse(step)) == canonical(t);
          image_ok += ev.eval(u) == ev.eval(t);
        }
        if (auto p = random_step(Mode::C, true)) {
          auto const& [t, step] = *p;
          Term const u          = apply(t, step);
          auto const diff = std::int64_t(gen_count(u)) - std::int64_t(gen_count(t));
          c_ok += (diff == 2 || diff == -2) && u.source() == t.source() && u.target() == t.target();
        }
        RandomTermShape shape{std::uniform_int_distribution<std::size_t>(0, 6)(rng), 7, 2};
        Term const t = random_term(rng, width_type(rng() % 4), shape);
        Term const c = canonical(t);
        canon_ok += canonical(c) == c && canonical(random_shuffle(rng, t, 20)) == c;
      }
      bool const ok = d_ok == trials && c_ok == trials && inverse_ok == trials
                      && image_ok == trials && canon_ok == trials;
      r.status  = ok ? Status::Pass : Status::Fail;
      r.details = {{"trials", trials},
                   {"d_rewrites_preserving_gen_count", d_ok},
                   {"c_triangle_rewrites_changing_by_2", c_ok},
                   {"reverse_restores", inverse_ok},
                   {"vect_image_preserved", image_ok},
                   {"canonical_idempotent_and_shuffle_invariant", canon_ok}};
    });
  }

  namespace detail {

    template <typename Field>
    SuiteReport run_all_in(SuiteConfig const& cfg, Field const& field) {
      SuiteReport report;
      report.config = to_json(cfg);
      report.checks.push_back(check_rule_soundness(cfg, field));
      report.checks.push_back(check_tower_snake(cfg, field));
      report.checks.push_back(check_closedness(cfg));
      report.checks.push_back(check_not_rigid_evidence(cfg));
      report.checks.push_back(check_skeletal_and_obstructions(cfg, field));
      report.checks.push_back(check_r_category(cfg));
      report.checks.push_back(check_automorphisms(cfg));
      report.checks.push_back(check_functor_blindness(cfg, field));
      report.checks.push_back(check_rewrite_invariants(cfg));
      return report;
    }

  }  // namespace detail

  inline SuiteReport run_all(SuiteConfig const& cfg) {
    if (cfg.field.prime) {
      return detail::run_all_in(cfg, PrimeField(cfg.field.modulus));
    }
    return detail::run_all_in(cfg, RationalField{});
  }

}  // namespace monocat
