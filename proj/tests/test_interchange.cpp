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

#include "monocat/interchange.hpp"
#include "monocat/parse.hpp"
#include "monocat/random.hpp"

using namespace monocat;

namespace {

  // Interval view: slice x acts on wires [left, left+src) of its input and
  // produces [left, left+tgt) of its output.
  std::vector<std::pair<Slice, Slice>> exchanges(Slice const& x, Slice const& y) {
    std::vector<std::pair<Slice, Slice>> out;
    auto const w0 = x.source();
    auto const ys = y.gen.source(), yt = y.gen.target();
    auto const xs = x.gen.source(), xt = x.gen.target();
    // y entirely left of x's output block
    if (y.left + ys <= x.left) {
      Slice y2{y.left, y.gen, w0 - y.left - ys};
      Slice x2{x.left + yt - ys, x.gen, x.right};
      out.emplace_back(y2, x2);
    }
    // y entirely right of x's output block
    if (y.left >= x.left + xt) {
      auto const off = y.left - (x.left + xt);
      Slice y2{x.left + xs + off, y.gen, y.right};
      Slice x2{x.left, x.gen, x.right - ys + yt};
      out.emplace_back(y2, x2);
    }
    return out;
  }

  std::vector<Slice> brute_force_min(Term const& t) {
    std::set<std::vector<Slice>> seen{t.slices()};
    std::vector<std::vector<Slice>> todo{t.slices()};
    while (!todo.empty()) {
      auto cur = todo.back();
      todo.pop_back();
      for (std::size_t q = 0; q + 1 < cur.size(); ++q) {
        for (auto const& [a, b] : exchanges(cur[q], cur[q + 1])) {
          auto next = cur;
          next[q]     = a;
          next[q + 1] = b;
          if (seen.insert(next).second) {
            todo.push_back(next);
          }
        }
      }
    }
    return *seen.begin();
  }

}  // namespace

TEST_CASE("exchange of disjoint slices", "[interchange]") {
  // eps on the right, then eta on the left
  Slice a{2, eps(0, 1), 0};
  Slice b{0, eta(0, 1), 2};
  REQUIRE(commutes(a, b));
  Term t(4, {a, b});
  Term c = canonical(t);
  REQUIRE(c.slices() == std::vector<Slice>{{0, eta(0, 1), 4}, {4, eps(0, 1), 0}});
  REQUIRE(c.source() == t.source());
  REQUIRE(c.target() == t.target());
}

TEST_CASE("dependent slices do not commute", "[interchange]") {
  Term s = parse_expr("(eta(0,1) * id(1)) ; (id(1) * eps(0,1))");
  REQUIRE_FALSE(commutes(s.slices()[0], s.slices()[1]));
  REQUIRE(canonical(s) == s);
  REQUIRE(interchange_class(s).size() == 1);
}

TEST_CASE("cap followed by cup at the same point has two placements", "[interchange]") {
  // eps_{0,1} then eta_{0,1}: the eta may be placed on either side of where
  // the eps was.
  Term t(3, {{1, eps(0, 1), 0}, {1, eta(0, 1), 0}});
  std::set<std::vector<Slice>> lists;
  for (auto const& lin : interchange_class(t)) {
    std::vector<Slice> v;
    for (auto const& x : lin) {
      v.push_back(x.slice);
    }
    lists.insert(v);
  }
  REQUIRE(lists.size() == 3);
  REQUIRE(lists.count({{1, eta(0, 1), 2}, {3, eps(0, 1), 0}}) == 1);
  REQUIRE(lists.count({{3, eta(0, 1), 0}, {1, eps(0, 1), 2}}) == 1);
}

TEST_CASE("canonical of identities", "[interchange]") {
  for (width_type n = 0; n < 5; ++n) {
    REQUIRE(canonical(identity(Obj{n})) == identity(Obj{n}));
  }
}

TEST_CASE("canonical is the lexicographic minimum of the class", "[interchange][property]") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 400; ++trial) {
    Term t = random_term(rng, width_type(rng() % 4), {std::size_t(rng() % 6), 7, 2});
    INFO(render(t));
    REQUIRE(canonical(t).slices() == brute_force_min(t));
  }
}

TEST_CASE("canonical is idempotent and shuffle invariant", "[interchange][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Term t = random_term(rng, width_type(rng() % 4), {std::size_t(rng() % 7), 8, 2});
    Term c = canonical(t);
    INFO(render(t));
    REQUIRE(canonical(c) == c);
    REQUIRE(c.source() == t.source());
    REQUIRE(c.target() == t.target());
    REQUIRE(gen_count(c) == gen_count(t));
    Term u = random_shuffle(rng, t, 25);
    REQUIRE(interchange_equivalent(t, u));
    REQUIRE(canonical(u) == c);
  }
}

TEST_CASE("interchange class members are well formed", "[interchange][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Term t = random_term(rng, width_type(rng() % 3), {std::size_t(rng() % 5), 6, 2});
    for (auto const& lin : interchange_class(t)) {
      std::vector<Slice>    v;
      std::set<std::size_t> ids;
      for (auto const& x : lin) {
        v.push_back(x.slice);
        ids.insert(x.id);
      }
      REQUIRE(ids.size() == t.size());
      Term u(t.source(), v);  // throws if not composable
      REQUIRE(u.target() == t.target());
      REQUIRE(canonical(u) == canonical(t));
    }
  }
}
