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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <catch_amalgamated.hpp>

#include "monocat/parse.hpp"
#include "monocat/random.hpp"
#include "monocat/rewrite.hpp"
#include "monocat/vect.hpp"

using namespace monocat;

namespace {

  Term const snake = parse_expr("(eta(0,1) * id(1)) ; (id(1) * eps(0,1))");
  Term const tri_a = parse_expr("(eta(0,1) * id(1)) ; eps(1,1)");
  Term const tri_b = parse_expr("eta(1,1) ; (eps(0,1) * id(1))");

  SearchCaps const open_caps{20, 16, 3, 1};

  std::set<Term> results(Term const& t, Mode mode, SearchCaps const& caps) {
    std::set<Term> out;
    for (auto& r : rewrites(t, mode, caps)) {
      out.insert(r.result);
    }
    return out;
  }

  RuleParams random_params(std::mt19937_64& rng, RuleId r) {
    RuleParams p;
    p.i = width_type(rng() % 3);
    p.n = width_type(1 + rng() % 2);
    if (!is_triangle(r)) {
      p.j = width_type(rng() % 3);
      p.k = width_type(1 + rng() % 2);
      p.l = width_type(rng() % 3);
    }
    return p;
  }

  // prefix ; (id_a (x) side (x) id_b) ; suffix, with a + b chosen so that
  // the widths fit the prefix.
  struct Embedded {
    Term with_lhs;
    Term with_rhs;
  };

  Embedded embed(std::mt19937_64& rng, RuleId r, RuleParams p) {
    Term       prefix = random_term(rng, width_type(rng() % 3), {std::size_t(rng() % 3), 6, 2});
    auto const core   = instantiate(r, p).source;
    if (prefix.target() < core) {
      prefix = tensor(prefix, identity(Obj{core - prefix.target()}));
    }
    width_type const spare = prefix.target() - core;
    p.a                    = width_type(rng() % (spare + 1));
    p.b                    = spare - p.a;
    auto const inst        = instantiate(r, p);
    Term const lhs         = compose(prefix, inst.lhs_term());
    Term const rhs         = compose(prefix, inst.rhs_term());
    Term const suffix      = random_term(rng, lhs.target(), {std::size_t(rng() % 3), 8, 2});
    return {compose(lhs, suffix), compose(rhs, suffix)};
  }

}  // namespace

TEST_CASE("rule instances", "[rules]") {
  auto nat = instantiate(RuleId::NatEtaEta, RuleParams{0, 0, 0, 0, 1, 0, 1});
  REQUIRE(nat.lhs == std::vector<Slice>{{0, eta(0, 1), 0}, {0, eta(2, 1), 0}});
  REQUIRE(nat.rhs == std::vector<Slice>{{0, eta(0, 1), 0}, {0, eta(0, 1), 2}});

  auto ta = instantiate(RuleId::TriangleA, RuleParams{0, 0, 0, 0, 1, 0, 1});
  REQUIRE(ta.lhs_term() == tri_a);
  REQUIRE(ta.rhs.empty());
  auto tb = instantiate(RuleId::TriangleB, RuleParams{0, 0, 0, 0, 1, 0, 1});
  REQUIRE(tb.lhs_term() == tri_b);

  // every instance is width-preserving and gen_count-balanced
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    for (RuleId r : naturality_rules) {
      auto p = random_params(rng, r);
      p.a    = width_type(rng() % 2);
      p.b    = width_type(rng() % 2);
      auto i = instantiate(r, p);
      REQUIRE(i.lhs_term().target() == i.rhs_term().target());
      REQUIRE(i.lhs.size() == i.rhs.size());
      REQUIRE(match_pair(r, Direction::Forward, i.lhs[0], i.lhs[1]) == p);
      REQUIRE(match_pair(r, Direction::Backward, i.rhs[0], i.rhs[1]) == p);
    }
    for (RuleId r : triangle_rules) {
      auto p = random_params(rng, r);
      p.a    = width_type(rng() % 2);
      p.b    = width_type(rng() % 2);
      auto i = instantiate(r, p);
      REQUIRE(i.lhs_term().target() == i.source);
      auto m = match_pair(r, Direction::Forward, i.lhs[0], i.lhs[1]);
      REQUIRE(m.has_value());
      REQUIRE(instantiate(r, *m).lhs == i.lhs);
    }
  }
}

TEST_CASE("snake is not a triangle composite", "[rules]") {
  REQUIRE(snake.slices()[1] == Slice{1, eps(0, 1), 0});
  REQUIRE(tri_a.slices()[1] == Slice{0, eps(1, 1), 0});
  REQUIRE(snake != tri_a);
}

TEST_CASE("match_rules examples", "[rewrite]") {
  auto const a = match_rules(tri_a, Mode::C, SearchCaps{});
  bool       found = false;
  for (auto const& s : a) {
    if (s.rule == RuleId::TriangleA && s.direction == Direction::Forward && s.params.i == 0
        && s.params.n == 1) {
      found = true;
    }
  }
  REQUIRE(found);

  REQUIRE(match_rules(identity(Obj{0}), Mode::D, SearchCaps{}).empty());
  REQUIRE(match_rules(identity(Obj{0}), Mode::C, SearchCaps{}).empty());

  // no naturality instance or contraction matches the snake; in C only
  // expansions are offered
  REQUIRE(match_rules(snake, Mode::D, SearchCaps{}).empty());
  auto const on_snake = match_rules(snake, Mode::C, SearchCaps{});
  REQUIRE_FALSE(on_snake.empty());
  for (auto const& s : on_snake) {
    REQUIRE(is_triangle(s.rule));
    REQUIRE(s.direction == Direction::Backward);
  }
}

TEST_CASE("apply examples", "[rewrite]") {
  auto step_for = [](Term const& t, RuleId r, Direction d) {
    for (auto const& s : match_rules(t, Mode::C, SearchCaps{})) {
      if (s.rule == r && s.direction == d) {
        return s;
      }
    }
    FAIL("no step");
    return RewriteStep{};
  };
  REQUIRE(apply(tri_a, step_for(tri_a, RuleId::TriangleA, Direction::Forward)) == identity(Obj{1}));
  REQUIRE(apply(tri_b, step_for(tri_b, RuleId::TriangleB, Direction::Forward)) == identity(Obj{1}));

  Term lhs(0, {{0, eta(0, 1), 0}, {0, eta(2, 1), 0}});
  Term rhs(0, {{0, eta(0, 1), 0}, {0, eta(0, 1), 2}});
  REQUIRE(apply(lhs, step_for(lhs, RuleId::NatEtaEta, Direction::Forward)) == canonical(rhs));

  auto bad = step_for(tri_a, RuleId::TriangleA, Direction::Forward);
  REQUIRE_THROWS_AS(apply(snake, bad), InvalidStep);
  bad.position = 1;
  REQUIRE_THROWS_AS(apply(tri_a, bad), InvalidStep);
}

TEST_CASE("neighbors", "[rewrite]") {
  REQUIRE(neighbors(identity(Obj{0}), Mode::D, SearchCaps{}).empty());

  auto const n1 = results(identity(Obj{1}), Mode::C, SearchCaps{2, 8, 1, 100});
  REQUIRE(n1.count(canonical(tri_a)) == 1);
  REQUIRE(n1.count(canonical(tri_b)) == 1);
  for (auto const& u : n1) {
    REQUIRE(gen_count(u) == 2);
  }
  // no expansion beyond the generator cap
  REQUIRE(neighbors(identity(Obj{1}), Mode::C, SearchCaps{1, 8, 1, 100}).empty());

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Term t = canonical(random_term(rng, width_type(rng() % 3), {std::size_t(rng() % 4), 6, 2}));
    for (auto const& u : neighbors(t, Mode::C, SearchCaps{6, 8, 2, 1})) {
      REQUIRE(u.source() == t.source());
      REQUIRE(u.target() == t.target());
      REQUIRE(within_caps(u, SearchCaps{6, 8, 2, 1}));
      REQUIRE(canonical(u) == u);
    }
  }
}

TEST_CASE("every embedded rule instance is matched", "[rewrite][property]") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    for (RuleId r : naturality_rules) {
      auto const e = embed(rng, r, random_params(rng, r));
      INFO(to_string(r) << ": " << render(e.with_lhs));
      REQUIRE(results(e.with_lhs, Mode::D, open_caps).count(canonical(e.with_rhs)) == 1);
      REQUIRE(results(e.with_rhs, Mode::D, open_caps).count(canonical(e.with_lhs)) == 1);
    }
    for (RuleId r : triangle_rules) {
      auto const e = embed(rng, r, random_params(rng, r));
      INFO(to_string(r) << ": " << render(e.with_lhs));
      REQUIRE(results(e.with_lhs, Mode::C, open_caps).count(canonical(e.with_rhs)) == 1);
      REQUIRE(results(e.with_rhs, Mode::C, open_caps).count(canonical(e.with_lhs)) == 1);
    }
  }
}

TEST_CASE("rewrites preserve invariants", "[rewrite][property]") {
  std::mt19937_64 rng(99);
  auto const      spec = random_spec(RationalField{}, 2, 3);
  Evaluator<RationalField> ev(spec);
  std::size_t     d_steps = 0, c_steps = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Term t = canonical(random_term(rng, width_type(rng() % 3), {std::size_t(2 + rng() % 3), 6, 2}));
    auto const image = ev.eval(t);
    for (auto const& s : match_rules(t, Mode::C, SearchCaps{7, 8, 2, 1})) {
      Term const u = apply(t, s);
      REQUIRE(ev.eval(u) == image);
      REQUIRE(apply(u, reverse(s)) == t);
      if (is_triangle(s.rule)) {
        ++c_steps;
        auto const diff = std::int64_t(gen_count(u)) - std::int64_t(gen_count(t));
        REQUIRE((diff == 2 || diff == -2));
      } else {
        ++d_steps;
        REQUIRE(gen_count(u) == gen_count(t));
      }
    }
  }
  REQUIRE(d_steps > 100);
  REQUIRE(c_steps > 100);
}

TEST_CASE("equal examples", "[rewrite]") {
  auto const a = equal(tri_a, identity(Obj{1}), Mode::C, SearchCaps{});
  REQUIRE(a.equal());
  REQUIRE(a.path.size() == 1);
  REQUIRE(a.path[0].rule == RuleId::TriangleA);
  REQUIRE(verify_path(tri_a, identity(Obj{1}), a.path));

  auto const same = equal(snake, snake, Mode::C, SearchCaps{});
  REQUIRE(same.equal());
  REQUIRE(same.path.empty());

  auto const s = equal(snake, identity(Obj{1}), Mode::C, SearchCaps{});
  REQUIRE_FALSE(s.equal());
  REQUIRE_FALSE(s.truncated);

  // triangles are not relations of D
  REQUIRE_FALSE(equal(tri_a, identity(Obj{1}), Mode::D, SearchCaps{}).equal());

  REQUIRE_THROWS_AS(equal(identity(Obj{1}), identity(Obj{2}), Mode::C, SearchCaps{}), NotEqualShape);
}

TEST_CASE("equal paths replay", "[rewrite][property]") {
  std::mt19937_64 rng(21);
  SearchCaps const caps{6, 8, 2, 3000};
  int              found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Term t = canonical(random_term(rng, width_type(1 + rng() % 2), {std::size_t(2 + rng() % 2), 6, 2}));
    auto const ns = rewrites(t, Mode::C, caps);
    if (ns.empty()) {
      continue;
    }
    Term u = ns[rng() % ns.size()].result;
    for (auto const& r : rewrites(u, Mode::C, caps)) {
      if (within_caps(r.result, caps) && rng() % 3 == 0) {
        u = r.result;
        break;
      }
    }
    auto const res = equal(t, u, Mode::C, caps);
    REQUIRE(res.equal());
    REQUIRE(res.path.size() <= 2);
    REQUIRE(verify_path(t, u, res.path));
    ++found;
  }
  REQUIRE(found > 30);
}

TEST_CASE("explore examples", "[rewrite]") {
  auto const s = explore(snake, Mode::C, SearchCaps{6, 8, 2, 100000});
  REQUIRE_FALSE(s.identity_found);
  REQUIRE_FALSE(s.truncated);
  REQUIRE(s.min_gen_count_seen == 2);

  auto const a = explore(tri_a, Mode::C, SearchCaps{4, 6, 1, 1000});
  REQUIRE(a.identity_found);
  REQUIRE(a.min_gen_count_seen == 0);
  REQUIRE(a.witness.size() == 1);

  auto const bubble = explore(parse_expr("eta(0,1) ; eps(0,1)"), Mode::C, SearchCaps{});
  REQUIRE_FALSE(bubble.identity_found);
  REQUIRE_FALSE(bubble.truncated);

  auto const small = explore(snake, Mode::C, SearchCaps{2, 8, 2, 100000});
  REQUIRE(small.states_visited == 1);
  REQUIRE_FALSE(small.identity_found);
}

TEST_CASE("explore visits share the start's vect image", "[rewrite]") {
  auto const  spec = random_spec(RationalField{}, 2, 13);
  Evaluator<RationalField> ev(spec);
  auto const  image = ev.eval(snake);
  std::size_t count = 0;
  auto const  report = explore(snake, Mode::C, SearchCaps{}, 1, [&](Term const& t) {
    REQUIRE(ev.eval(t) == image);
    ++count;
  });
  REQUIRE(count == report.states_visited);
  REQUIRE(count > 1000);
}

TEST_CASE("explore is deterministic across thread counts", "[rewrite]") {
  SearchCaps const  caps{5, 8, 2, 100000};
  std::vector<Term> one, four;
  auto const        r1 = explore(snake, Mode::C, caps, 1, [&](Term const& t) { one.push_back(t); });
  auto const        r4 = explore(snake, Mode::C, caps, 4, [&](Term const& t) { four.push_back(t); });
  REQUIRE(r1.states_visited == r4.states_visited);
  REQUIRE(one == four);
  auto const again = explore(snake, Mode::C, caps, 3);
  REQUIRE(again.states_visited == r1.states_visited);
}

TEST_CASE("explore honours the state cap", "[rewrite]") {
  auto const r = explore(snake, Mode::C, SearchCaps{6, 8, 2, 50});
  REQUIRE(r.truncated);
  REQUIRE(r.states_visited == 50);
}

TEST_CASE("enumerate_terms", "[rewrite]") {
  // parity: no term 0 -> 1
  REQUIRE(enumerate_terms(Obj{0}, Obj{1}, SearchCaps{4, 6, 2, 1}).empty());
  REQUIRE(enumerate_terms(Obj{1}, Obj{1}, SearchCaps{0, 6, 2, 1}) == std::vector<Term>{identity(Obj{1})});

  // brute force: all slice sequences within caps whose canonical form is
  // also within caps
  SearchCaps const caps{3, 5, 1, 1};
  for (width_type m = 0; m <= 2; ++m) {
    for (width_type n = 0; n <= 3; ++n) {
      std::set<Term>    expected;
      std::vector<Term> todo{identity(Obj{m})};
      while (!todo.empty()) {
        Term t = todo.back();
        todo.pop_back();
        if (t.target() == n && within_caps(canonical(t), caps)) {
          expected.insert(canonical(t));
        }
        if (gen_count(t) == caps.max_gen_count) {
          continue;
        }
        width_type const w = t.target();
        for (width_type a = 0; a <= w; ++a) {
          for (width_type mm = 0; a + mm <= w; ++mm) {
            Term up = compose(t, whisker(a, eta(mm, 1), w - a - mm));
            if (up.max_width() <= caps.max_width) {
              todo.push_back(up);
            }
            if (a + mm + 2 <= w) {
              todo.push_back(compose(t, whisker(a, eps(mm, 1), w - a - mm - 2)));
            }
          }
        }
      }
      auto const got = enumerate_terms(Obj{m}, Obj{n}, caps);
      REQUIRE(std::set<Term>(got.begin(), got.end()) == expected);
    }
  }
}

TEST_CASE("enum_hom examples", "[rewrite]") {
  REQUIRE(enum_hom(Obj{0}, Obj{1}, Mode::C, SearchCaps{4, 6, 2, 1000}).classes.empty());

  auto const d = enum_hom(Obj{1}, Obj{1}, Mode::D, SearchCaps{0, 6, 2, 1000});
  REQUIRE(d.classes.size() == 1);
  REQUIRE(d.classes[0].representative == identity(Obj{1}));

  auto const  spec = identity_spec(RationalField{}, 2);
  auto const  key  = [&](Term const& t) { return eval_sparse(spec, t).key(RationalField{}); };
  auto const  h    = enum_hom(Obj{0}, Obj{0}, Mode::C, SearchCaps{2, 6, 1, 1000}, key);
  auto const  id   = h.class_of(identity(Obj{0}));
  auto const  bub  = h.class_of(parse_expr("eta(0,1) ; eps(0,1)"));
  REQUIRE(id.has_value());
  REQUIRE(bub.has_value());
  REQUIRE(*id != *bub);
}
