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

#include <random>
#include <string>

#include <catch_amalgamated.hpp>

#include "monocat/parse.hpp"
#include "monocat/random.hpp"
#include "monocat/term.hpp"

using namespace monocat;

TEST_CASE("generator arities", "[term]") {
  auto g = generator(Kind::Eta, 0, 1);
  REQUIRE(g.source() == 0);
  REQUIRE(g.target() == 2);
  auto e = generator(Kind::Eps, 1, 1);
  REQUIRE(e.source() == 3);
  REQUIRE(e.target() == 1);
  REQUIRE(eta(2, 3).target() == 8);
  REQUIRE(eps(2, 3).source() == 8);
  REQUIRE_THROWS_AS(generator(Kind::Eta, 2, 0), InvalidGenerator);
  REQUIRE_THROWS_AS(eps(0, 0), InvalidGenerator);
}

TEST_CASE("identity and whiskering", "[term]") {
  Term id0 = identity(Obj{0});
  REQUIRE(id0.source() == 0);
  REQUIRE(id0.target() == 0);
  REQUIRE(id0.is_identity());
  REQUIRE(identity(Obj{1}).target() == 1);

  Term w = whisker(0, eta(0, 1), 1);
  REQUIRE(w.source() == 1);
  REQUIRE(w.target() == 3);
  REQUIRE(w.slices() == std::vector<Slice>{{0, eta(0, 1), 1}});

  Term v = whisker(1, eps(0, 1), 0);
  REQUIRE(v.source() == 3);
  REQUIRE(v.target() == 1);

  Term bare = whisker(0, eta(0, 1), 0);
  REQUIRE(bare.source() == 0);
  REQUIRE(bare.target() == 2);
  REQUIRE(bare.size() == 1);
}

TEST_CASE("composition", "[term]") {
  Term s = compose(whisker(0, eta(0, 1), 1), whisker(1, eps(0, 1), 0));
  REQUIRE(s.source() == 1);
  REQUIRE(s.target() == 1);
  REQUIRE(gen_count(s) == 2);
  REQUIRE(s.slices() == std::vector<Slice>{{0, eta(0, 1), 1}, {1, eps(0, 1), 0}});

  REQUIRE(compose(identity(Obj{1}), identity(Obj{1})) == identity(Obj{1}));
  REQUIRE_THROWS_AS(compose(whisker(0, eta(0, 1), 0), identity(Obj{1})), NotComposable);
  try {
    compose(whisker(0, eta(0, 1), 0), identity(Obj{1}));
  } catch (NotComposable const& e) {
    REQUIRE(std::string(e.what()).find("2 != 1") != std::string::npos);
  }
  REQUIRE_THROWS_AS(Term(1, {{0, eps(0, 1), 0}}), NotComposable);
}

TEST_CASE("identity is a unit for composition", "[term]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Term t = random_term(rng, 2, {4, 7, 2});
    REQUIRE(compose(identity(Obj{2}), t) == t);
    REQUIRE(compose(t, identity(Obj{t.target()})) == t);
  }
}

TEST_CASE("tensor", "[term]") {
  Term e = whisker(0, eta(0, 1), 0);
  Term c = whisker(0, eps(0, 1), 0);
  REQUIRE(tensor(e, identity(Obj{1})) == whisker(0, eta(0, 1), 1));
  REQUIRE(tensor(identity(Obj{0}), c) == c);
  REQUIRE(tensor(c, identity(Obj{0})) == c);

  Term ec = tensor(e, c);
  REQUIRE(ec.source() == 2);
  REQUIRE(ec.target() == 2);
  REQUIRE(ec.slices() == std::vector<Slice>{{0, eta(0, 1), 2}, {2, eps(0, 1), 0}});
}

TEST_CASE("tensor is associative and sums widths", "[term]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Term a = random_term(rng, width_type(rng() % 3), {2, 5, 2});
    Term b = random_term(rng, width_type(rng() % 3), {2, 5, 2});
    Term c = random_term(rng, width_type(rng() % 3), {2, 5, 2});
    REQUIRE(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    REQUIRE(tensor(a, b).source() == a.source() + b.source());
    REQUIRE(tensor(a, b).target() == a.target() + b.target());
    REQUIRE(gen_count(tensor(a, b)) == gen_count(a) + gen_count(b));
  }
}

TEST_CASE("gen_count", "[term]") {
  REQUIRE(gen_count(identity(Obj{5})) == 0);
  REQUIRE(gen_count(parse_expr("(eta(0,1) * id(1)) ; (id(1) * eps(0,1))")) == 2);
}

TEST_CASE("render", "[term][parse]") {
  Term s(1, {{0, eta(0, 1), 1}, {1, eps(0, 1), 0}});
  REQUIRE(render(s) == "(eta(0,1) * id(1)) ; (id(1) * eps(0,1))");
  REQUIRE(render(identity(Obj{0})) == "id(0)");
  REQUIRE(render(identity(Obj{4})) == "id(4)");
  REQUIRE(render(whisker(0, eps(1, 2), 0)) == "eps(1,2)");
  REQUIRE(render(whisker(2, eta(0, 1), 1)) == "(id(2) * eta(0,1) * id(1))");
}

TEST_CASE("parse", "[parse]") {
  Term s = parse_expr("(eta(0,1) * id(1)) ; (id(1) * eps(0,1))");
  REQUIRE(s == Term(1, {{0, eta(0, 1), 1}, {1, eps(0, 1), 0}}));
  REQUIRE(parse_expr("id(0)") == identity(Obj{0}));
  REQUIRE(parse_expr("  eta( 0 , 1 )*id(1);eps(1,1) ") == parse_expr("(eta(0,1) * id(1)) ; eps(1,1)"));
  REQUIRE(parse_expr("id(2) * id(1)") == identity(Obj{3}));
  REQUIRE(parse_expr("eta(0,1) ; (id(1) * (eta(0,1) * id(1)))").target() == 4);

  REQUIRE_THROWS_AS(parse_expr("eta(0,1) ; id(1)"), NotComposable);
  REQUIRE_THROWS_AS(parse_expr("eta(2,0)"), InvalidGenerator);
  REQUIRE_THROWS_AS(parse_expr("eta(0,1"), ParseError);
  REQUIRE_THROWS_AS(parse_expr(""), ParseError);
  REQUIRE_THROWS_AS(parse_expr("foo(1)"), ParseError);
  REQUIRE_THROWS_AS(parse_expr("id(1) ;"), ParseError);
  REQUIRE_THROWS_AS(parse_expr("id(1) id(1)"), ParseError);

  try {
    parse_expr("id(2) ; eps(0,1) x");
    FAIL("no error");
  } catch (ParseError const& e) {
    REQUIRE(e.position() == 17);
  }
}

TEST_CASE("parse and render round trip", "[parse]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    Term t = random_term(rng, width_type(rng() % 4), {std::size_t(rng() % 7), 8, 2});
    INFO(render(t));
    REQUIRE(parse_expr(render(t)) == t);
  }
}
