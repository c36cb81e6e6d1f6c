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

// The defining relations in slice form.
//
// Every relation is an equation between two short slice lists, placed in
// context by outer whiskers a (left) and b (right). Writing [s1, s2] for
// "s1 then s2":
//
//   NatEtaEta  [(a+i, eta_{j,k}, l+b),     (a, eta_{i+j+2k+l,n}, b)]
//            = [(a, eta_{i+j+l,n}, b),      (a+i, eta_{j,k}, l+2n+b)]
//   NatEtaEps  [(a+i, eps_{j,k}, l+b),     (a, eta_{i+j+l,n}, b)]
//            = [(a, eta_{i+j+2k+l,n}, b),   (a+i, eps_{j,k}, l+2n+b)]
//   NatEpsEta  [(a+i, eta_{j,k}, l+2n+b),  (a, eps_{i+j+2k+l,n}, b)]
//            = [(a, eps_{i+j+l,n}, b),      (a+i, eta_{j,k}, l+b)]
//   NatEpsEps  [(a+i, eps_{j,k}, l+2n+b),  (a, eps_{i+j+l,n}, b)]
//            = [(a, eps_{i+j+2k+l,n}, b),   (a+i, eps_{j,k}, l+b)]
//   TriangleA  [(a, eta_{i,n}, n+b),       (a, eps_{i+n,n}, b)]    = id
//   TriangleB  [(a, eta_{i+n,n}, b),       (a, eps_{i,n}, n+b)]    = id
//
// The first four are the naturality squares of eta_{-,n} and eps_{-,n}
// against a whiskered generator; the last two are the triangle identities
// (mode C only). Forward rewrites the left-hand side into the right.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocat/term.hpp"

namespace monocat {

  enum class RuleId : std::uint8_t {
    NatEtaEta,
    NatEtaEps,
    NatEpsEta,
    NatEpsEps,
    TriangleA,
    TriangleB
  };

  enum class Direction : std::uint8_t { Forward, Backward };

  inline constexpr std::array<RuleId, 4> naturality_rules
      = {RuleId::NatEtaEta, RuleId::NatEtaEps, RuleId::NatEpsEta, RuleId::NatEpsEps};

  inline constexpr std::array<RuleId, 2> triangle_rules = {RuleId::TriangleA, RuleId::TriangleB};

  inline bool is_triangle(RuleId r) noexcept {
    return r == RuleId::TriangleA || r == RuleId::TriangleB;
  }

  inline char const* to_string(RuleId r) noexcept {
    switch (r) {
      case RuleId::NatEtaEta: return "NatEtaEta";
      case RuleId::NatEtaEps: return "NatEtaEps";
      case RuleId::NatEpsEta: return "NatEpsEta";
      case RuleId::NatEpsEps: return "NatEpsEps";
      case RuleId::TriangleA: return "TriangleA";
      case RuleId::TriangleB: return "TriangleB";
    }
    return "?";
  }

  inline char const* to_string(Direction d) noexcept {
    return d == Direction::Forward ? "Forward" : "Backward";
  }

  inline Direction reverse(Direction d) noexcept {
    return d == Direction::Forward ? Direction::Backward : Direction::Forward;
  }

  // Parameter binding; j, k and l are unused by the triangle rules.
  struct RuleParams {
    width_type a = 0, b = 0;
    width_type i = 0, j = 0, k = 1, l = 0, n = 1;

    friend bool operator==(RuleParams const&, RuleParams const&) = default;
  };

  struct RuleInstance {
    width_type         source;
    std::vector<Slice> lhs;
    std::vector<Slice> rhs;

    [[nodiscard]] Term lhs_term() const {
      return Term(source, lhs);
    }
    [[nodiscard]] Term rhs_term() const {
      return Term(source, rhs);
    }
  };

  inline RuleInstance instantiate(RuleId rule, RuleParams const& p) {
    auto const [a, b, i, j, k, l, n] = p;
    switch (rule) {
      case RuleId::NatEtaEta:
        return {a + i + j + l + b,
                {{a + i, eta(j, k), l + b}, {a, eta(i + j + 2 * k + l, n), b}},
                {{a, eta(i + j + l, n), b}, {a + i, eta(j, k), l + 2 * n + b}}};
      case RuleId::NatEtaEps:
        return {a + i + j + 2 * k + l + b,
                {{a + i, eps(j, k), l + b}, {a, eta(i + j + l, n), b}},
                {{a, eta(i + j + 2 * k + l, n), b}, {a + i, eps(j, k), l + 2 * n + b}}};
      case RuleId::NatEpsEta:
        return {a + i + j + l + 2 * n + b,
                {{a + i, eta(j, k), l + 2 * n + b}, {a, eps(i + j + 2 * k + l, n), b}},
                {{a, eps(i + j + l, n), b}, {a + i, eta(j, k), l + b}}};
      case RuleId::NatEpsEps:
        return {a + i + j + 2 * k + l + 2 * n + b,
                {{a + i, eps(j, k), l + 2 * n + b}, {a, eps(i + j + l, n), b}},
                {{a, eps(i + j + 2 * k + l, n), b}, {a + i, eps(j, k), l + b}}};
      case RuleId::TriangleA:
        return {a + i + n + b, {{a, eta(i, n), n + b}, {a, eps(i + n, n), b}}, {}};
      case RuleId::TriangleB:
        return {a + i + n + b, {{a, eta(i + n, n), b}, {a, eps(i, n), n + b}}, {}};
    }
    return {};
  }

  // Binds the parameters under which the adjacent pair (s1, s2) is the
  // matched side of `rule` (lhs for Forward, rhs for Backward). Candidate
  // parameters are read off the pair and confirmed by instantiating.
  inline std::optional<RuleParams> match_pair(RuleId      rule,
                                              Direction   dir,
                                              Slice const& s1,
                                              Slice const& s2) {
    using signed_w = std::int64_t;
    RuleParams p;
    signed_w   i = 0, l = 0;
    if (is_triangle(rule)) {
      if (dir != Direction::Forward) {
        return std::nullopt;
      }
      p.a = s2.left;
      p.b = rule == RuleId::TriangleA ? s2.right : s1.right;
      p.n = s1.gen.n();
      i   = rule == RuleId::TriangleA ? signed_w(s1.gen.m()) : signed_w(s2.gen.m());
    } else {
      // the generator carrying the n index sits outside, the whiskered one
      // (indices j, k) inside
      bool const         fwd   = dir == Direction::Forward;
      Slice const&       outer = fwd ? s2 : s1;
      Slice const&       inner = fwd ? s1 : s2;
      p.a                      = outer.left;
      p.b                      = outer.right;
      p.n                      = outer.gen.n();
      p.j                      = inner.gen.m();
      p.k                      = inner.gen.n();
      i                        = signed_w(inner.left) - signed_w(p.a);
      // trailing 2n wires lie inside the inner slice's right whisker when
      // the eps/eta carrying n is on the other side of it
      bool const extra_2n = (rule == RuleId::NatEpsEta || rule == RuleId::NatEpsEps) == fwd;
      l = signed_w(inner.right) - signed_w(p.b) - (extra_2n ? 2 * signed_w(p.n) : 0);
    }
    if (i < 0 || l < 0) {
      return std::nullopt;
    }
    p.i = static_cast<width_type>(i);
    p.l = static_cast<width_type>(l);
    auto const inst    = instantiate(rule, p);
    auto const& pattern = dir == Direction::Forward ? inst.lhs : inst.rhs;
    if (pattern.size() == 2 && pattern[0] == s1 && pattern[1] == s2) {
      return p;
    }
    return std::nullopt;
  }

}  // namespace monocat
