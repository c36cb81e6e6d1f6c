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

// Bidirectional rewriting with the relations of D (and C), bounded
// word-problem search, reachability exploration and hom-set enumeration.
//
// States are canonical forms. A rewrite is found by matching rule sides
// against list-adjacent pairs of every linearisation of a state, which is
// the same as matching interchange-adjacent pairs of the state itself.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "monocat/error.hpp"
#include "monocat/interchange.hpp"
#include "monocat/rules.hpp"
#include "monocat/term.hpp"

namespace monocat {

  struct SearchCaps {
    std::size_t max_gen_count = 6;
    width_type  max_width     = 8;
    width_type  max_index_n   = 2;
    std::size_t max_states    = 100000;

    friend bool operator==(SearchCaps const&, SearchCaps const&) = default;
  };

  inline bool within_caps(Term const& t, SearchCaps const& caps) {
    return gen_count(t) <= caps.max_gen_count && t.max_width() <= caps.max_width
           && t.max_index_n() <= caps.max_index_n;
  }

  struct RewriteStep {
    RuleId             rule      = RuleId::NatEtaEta;
    Direction          direction = Direction::Forward;
    std::size_t        position  = 0;  // slice index, or boundary index for expansions
    RuleParams         params;
    width_type         source = 0;
    std::vector<Slice> site;  // the linearisation the step is applied to

    friend bool operator==(RewriteStep const&, RewriteStep const&) = default;
  };

  inline std::string describe(RewriteStep const& s) {
    auto const& p   = s.params;
    std::string out = std::string(to_string(s.rule)) + " " + to_string(s.direction) + " @"
                      + std::to_string(s.position) + " (a=" + std::to_string(p.a)
                      + ",b=" + std::to_string(p.b) + ",i=" + std::to_string(p.i);
    if (!is_triangle(s.rule)) {
      out += ",j=" + std::to_string(p.j) + ",k=" + std::to_string(p.k)
             + ",l=" + std::to_string(p.l);
    }
    return out + ",n=" + std::to_string(p.n) + ")";
  }

  namespace detail {

    inline std::vector<Slice> const& matched_side(RuleInstance const& inst, Direction d) {
      return d == Direction::Forward ? inst.lhs : inst.rhs;
    }

    inline std::vector<Slice> const& produced_side(RuleInstance const& inst, Direction d) {
      return d == Direction::Forward ? inst.rhs : inst.lhs;
    }

    // Replaces the matched side at step.position by the produced side,
    // without any validation.
    inline std::vector<Slice> splice(RewriteStep const& step) {
      auto const         inst     = instantiate(step.rule, step.params);
      auto const&        matched  = matched_side(inst, step.direction);
      auto const&        produced = produced_side(inst, step.direction);
      std::vector<Slice> out(step.site.begin(), step.site.begin() + step.position);
      out.insert(out.end(), produced.begin(), produced.end());
      out.insert(out.end(), step.site.begin() + step.position + matched.size(), step.site.end());
      return out;
    }

    inline width_type width_before(width_type source, std::vector<Slice> const& s, std::size_t k) {
      return k == 0 ? source : s[k - 1].target();
    }

  }  // namespace detail

  // The inverse rewrite of `step`, applicable to its result.
  inline RewriteStep reverse(RewriteStep const& step) {
    RewriteStep r = step;
    r.direction   = reverse(step.direction);
    r.site        = detail::splice(step);
    return r;
  }

  // Applies a step and returns the canonical result. Throws InvalidStep if
  // the step's linearisation is not a linearisation of t or the rule side is
  // not found at the recorded position.
  inline Term apply(Term const& t, RewriteStep const& step) {
    if (step.source != t.source()) {
      throw InvalidStep("step source width differs from the term");
    }
    Term site(step.source, step.site);
    if (site.size() != t.size() || canonical(site) != canonical(t)) {
      throw InvalidStep("step site is not a linearisation of the term");
    }
    auto const  inst    = instantiate(step.rule, step.params);
    auto const& matched = detail::matched_side(inst, step.direction);
    if (step.position > site.size() || step.position + matched.size() > site.size()) {
      throw InvalidStep("step position out of range");
    }
    if (!std::equal(matched.begin(), matched.end(), step.site.begin() + step.position)) {
      throw InvalidStep(std::string(to_string(step.rule)) + " does not match at position "
                        + std::to_string(step.position));
    }
    if (detail::width_before(step.source, step.site, step.position) != inst.source) {
      throw InvalidStep("rule instance width does not fit the boundary");
    }
    return canonical(Term(step.source, detail::splice(step)));
  }

  // Enumerates every applicable step on t; fn(step, result_slices) where
  // result_slices is the spliced, non-canonical result. Expansions (triangle
  // rules backwards) are bounded by caps.
  template <typename Fn>
  void for_each_rewrite(Term const& t, Mode mode, SearchCaps const& caps, Fn&& fn) {
    auto const lins = interchange_class(t);

    std::set<std::pair<std::pair<std::uint8_t, std::uint8_t>, std::pair<Slice, Slice>>> pairs;
    std::set<std::uint64_t> cuts;

    RewriteStep step;
    step.source = t.source();

    auto emit = [&](std::vector<Slice> const& site, RuleId rule, Direction dir, std::size_t pos,
                    RuleParams const& p) {
      step.rule      = rule;
      step.direction = dir;
      step.position  = pos;
      step.params    = p;
      step.site      = site;
      fn(step, detail::splice(step));
    };

    for (auto const& lin : lins) {
      std::vector<Slice> site;
      site.reserve(lin.size());
      for (auto const& x : lin) {
        site.push_back(x.slice);
      }
      for (std::size_t q = 0; q + 1 < lin.size(); ++q) {
        if (!pairs.insert({{lin[q].id, lin[q + 1].id}, {lin[q].slice, lin[q + 1].slice}}).second) {
          continue;
        }
        for (RuleId rule : naturality_rules) {
          for (Direction dir : {Direction::Forward, Direction::Backward}) {
            if (auto p = match_pair(rule, dir, site[q], site[q + 1])) {
              emit(site, rule, dir, q, *p);
            }
          }
        }
        if (mode == Mode::C) {
          for (RuleId rule : triangle_rules) {
            if (auto p = match_pair(rule, Direction::Forward, site[q], site[q + 1])) {
              emit(site, rule, Direction::Forward, q, *p);
            }
          }
        }
      }
      if (mode != Mode::C || t.size() + 2 > caps.max_gen_count) {
        continue;
      }
      std::uint64_t mask = 0;
      for (std::size_t q = 0; q <= lin.size(); ++q) {
        if (q > 0) {
          mask |= std::uint64_t(1) << lin[q - 1].id;
        }
        if (!cuts.insert(mask).second) {
          continue;
        }
        width_type const w = detail::width_before(t.source(), site, q);
        for (width_type n = 1; n <= caps.max_index_n && w + 2 * n <= caps.max_width; ++n) {
          for (width_type a = 0; a + n <= w; ++a) {
            for (width_type i = 0; a + i + n <= w; ++i) {
              RuleParams p;
              p.a = a;
              p.i = i;
              p.n = n;
              p.b = w - a - i - n;
              for (RuleId rule : triangle_rules) {
                emit(site, rule, Direction::Backward, q, p);
              }
            }
          }
        }
      }
    }
  }

  inline std::vector<RewriteStep> match_rules(Term const& t, Mode mode, SearchCaps const& caps) {
    std::vector<RewriteStep> out;
    for_each_rewrite(t, mode, caps, [&](RewriteStep const& s, std::vector<Slice> const&) {
      out.push_back(s);
    });
    return out;
  }

  struct Rewrite {
    Term        result;
    RewriteStep step;
  };

  // Distinct canonical results within caps, in enumeration order.
  inline std::vector<Rewrite> rewrites(Term const& t, Mode mode, SearchCaps const& caps) {
    std::vector<Rewrite>                     out;
    std::unordered_set<Term, TermHash>       seen;
    for_each_rewrite(t, mode, caps, [&](RewriteStep const& s, std::vector<Slice> const& r) {
      Term result = canonical(Term(t.source(), r));
      if (within_caps(result, caps) && seen.insert(result).second) {
        out.push_back({std::move(result), s});
      }
    });
    return out;
  }

  inline std::vector<Term> neighbors(Term const& t, Mode mode, SearchCaps const& caps) {
    std::vector<Term> out;
    for (auto& r : rewrites(t, mode, caps)) {
      out.push_back(std::move(r.result));
    }
    return out;
  }

  enum class Verdict : std::uint8_t { Equal, Unknown };

  struct EqualityResult {
    Verdict                  verdict = Verdict::Unknown;
    std::vector<RewriteStep> path;  // from a to b when Equal
    std::size_t              states_visited = 0;
    bool                     truncated      = false;

    [[nodiscard]] bool equal() const noexcept {
      return verdict == Verdict::Equal;
    }
  };

  // Replays a path step by step through apply().
  inline bool verify_path(Term const& a, Term const& b, std::vector<RewriteStep> const& path) {
    try {
      Term cur = canonical(a);
      for (auto const& s : path) {
        cur = apply(cur, s);
      }
      return cur == canonical(b);
    } catch (InvalidStep const&) {
      return false;
    }
  }

  // Bounded word problem: bidirectional breadth-first search over canonical
  // forms. Equal carries a concrete path; Unknown means undecided within
  // caps.
  inline EqualityResult equal(Term const& a, Term const& b, Mode mode, SearchCaps const& caps) {
    if (a.source() != b.source() || a.target() != b.target()) {
      throw NotEqualShape(std::to_string(a.source()) + "->" + std::to_string(a.target()) + " vs "
                          + std::to_string(b.source()) + "->" + std::to_string(b.target()));
    }
    EqualityResult result;
    Term const     ca = canonical(a);
    Term const     cb = canonical(b);
    if (ca == cb) {
      result.verdict        = Verdict::Equal;
      result.states_visited = 1;
      return result;
    }

    struct Parent {
      std::optional<Term>        parent;
      std::optional<RewriteStep> step;  // parent -> this
    };
    using side_map = std::unordered_map<Term, Parent, TermHash>;
    side_map          from_a, from_b;
    std::vector<Term> frontier_a{ca}, frontier_b{cb};
    from_a.emplace(ca, Parent{});
    from_b.emplace(cb, Parent{});

    auto path_to = [](side_map const& m, Term x) {
      std::vector<RewriteStep> steps;
      for (;;) {
        auto const& p = m.at(x);
        if (!p.parent) {
          break;
        }
        steps.push_back(*p.step);
        x = *p.parent;
      }
      std::reverse(steps.begin(), steps.end());
      return steps;  // root -> x
    };

    auto join = [&](Term const& meet) {
      auto path   = path_to(from_a, meet);
      auto back   = path_to(from_b, meet);  // b -> meet
      for (auto it = back.rbegin(); it != back.rend(); ++it) {
        path.push_back(reverse(*it));
      }
      return path;
    };

    while (!frontier_a.empty() || !frontier_b.empty()) {
      bool const expand_a = !frontier_a.empty()
                            && (frontier_b.empty() || frontier_a.size() <= frontier_b.size());
      auto& frontier = expand_a ? frontier_a : frontier_b;
      auto& mine     = expand_a ? from_a : from_b;
      auto& other    = expand_a ? from_b : from_a;

      std::vector<Term> next;
      for (auto const& x : frontier) {
        for (auto& r : rewrites(x, mode, caps)) {
          if (other.count(r.result) != 0) {
            mine.emplace(r.result, Parent{x, r.step});
            result.verdict        = Verdict::Equal;
            result.path           = join(r.result);
            result.states_visited = from_a.size() + from_b.size();
            return result;
          }
          if (mine.count(r.result) != 0) {
            continue;
          }
          if (from_a.size() + from_b.size() >= caps.max_states) {
            result.truncated = true;
            continue;
          }
          mine.emplace(r.result, Parent{x, r.step});
          next.push_back(std::move(r.result));
        }
      }
      frontier = std::move(next);
    }
    result.states_visited = from_a.size() + from_b.size();
    return result;
  }

  struct ExploreReport {
    Term                     start;
    Mode                     mode = Mode::C;
    SearchCaps               caps;
    std::size_t              states_visited     = 0;
    bool                     identity_found     = false;
    std::size_t              min_gen_count_seen = 0;
    bool                     truncated          = false;
    std::size_t              depth              = 0;  // BFS levels completed
    std::vector<RewriteStep> witness;                 // start -> identity when found
  };

  // Breadth-first closure of the class of t under caps. Each level's
  // neighbour computation may run on several threads; states are merged in
  // frontier order, so the visit set does not depend on `threads`.
  inline ExploreReport explore(Term const&                              t,
                               Mode                                     mode,
                               SearchCaps const&                        caps,
                               unsigned                                 threads = 1,
                               std::function<void(Term const&)> const& visit   = {}) {
    ExploreReport report;
    report.start = t;
    report.mode  = mode;
    report.caps  = caps;

    struct Parent {
      std::optional<Term>        parent;
      std::optional<RewriteStep> step;
    };
    std::unordered_map<Term, Parent, TermHash> seen;
    Term const                                 start = canonical(t);
    Term const                                 goal(Obj{t.source()});
    seen.emplace(start, Parent{});
    report.min_gen_count_seen = gen_count(start);
    if (visit) {
      visit(start);
    }

    auto finish_witness = [&](Term x) {
      std::vector<RewriteStep> steps;
      while (seen.at(x).parent) {
        steps.push_back(*seen.at(x).step);
        x = *seen.at(x).parent;
      }
      std::reverse(steps.begin(), steps.end());
      report.witness = std::move(steps);
    };

    if (t.source() == t.target() && start == goal) {
      report.identity_found = true;
    }

    std::vector<Term> frontier{start};
    threads = std::max(1u, threads);
    while (!frontier.empty() && !report.identity_found) {
      std::vector<std::vector<Rewrite>> found(frontier.size());
      auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t k = first; k < frontier.size(); k += stride) {
          found[k] = rewrites(frontier[k], mode, caps);
        }
      };
      if (threads == 1 || frontier.size() == 1) {
        work(0, 1);
      } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
          pool.emplace_back(work, w, threads);
        }
      }

      std::vector<Term> next;
      for (std::size_t k = 0; k < frontier.size() && !report.identity_found; ++k) {
        for (auto& r : found[k]) {
          if (seen.count(r.result) != 0) {
            continue;
          }
          if (seen.size() >= caps.max_states) {
            report.truncated = true;
            break;
          }
          seen.emplace(r.result, Parent{frontier[k], r.step});
          report.min_gen_count_seen = std::min(report.min_gen_count_seen, gen_count(r.result));
          if (visit) {
            visit(r.result);
          }
          if (r.result == goal) {
            report.identity_found = true;
            finish_witness(r.result);
            break;
          }
          next.push_back(std::move(r.result));
        }
      }
      frontier = std::move(next);
      ++report.depth;
    }
    report.states_visited = seen.size();
    return report;
  }

  struct HomClass {
    Term              representative;
    std::vector<Term> members;  // canonical forms, representative first
  };

  struct HomSet {
    Obj                                           source;
    Obj                                           target;
    Mode                                          mode = Mode::C;
    SearchCaps                                    caps;
    std::size_t                                   raw_terms = 0;
    std::vector<HomClass>                         classes;
    std::vector<std::pair<std::size_t, std::size_t>> unresolved;  // same invariant, Unknown
    std::map<Term, std::size_t>                   index;          // canonical form -> class

    [[nodiscard]] std::optional<std::size_t> class_of(Term const& t) const {
      auto it = index.find(canonical(t));
      if (it == index.end()) {
        return std::nullopt;
      }
      return it->second;
    }
  };

  // Canonical forms of every term m -> n within caps (generator count,
  // second index, intermediate width of the canonical form).
  inline std::vector<Term> enumerate_terms(Obj m, Obj n, SearchCaps const& caps) {
    std::set<Term>    all;
    std::set<Term>    level{Term(m)};
    std::set<Term>    prefixes = level;
    for (std::size_t g = 0;; ++g) {
      for (auto const& t : level) {
        if (t.target() == n.wires) {
          all.insert(t);
        }
      }
      if (g == caps.max_gen_count) {
        break;
      }
      std::set<Term> next;
      for (auto const& t : level) {
        width_type const w = t.target();
        for (width_type k = 1; k <= caps.max_index_n; ++k) {
          for (width_type a = 0; a <= w; ++a) {
            for (width_type mm = 0; a + mm <= w; ++mm) {
              width_type const r = w - a - mm;
              if (w + 2 * k <= caps.max_width) {
                next.insert(canonical(compose(t, whisker(a, eta(mm, k), r))));
              }
              if (a + mm + 2 * k <= w) {
                next.insert(canonical(compose(t, whisker(a, eps(mm, k), w - a - mm - 2 * k))));
              }
            }
          }
        }
      }
      level.clear();
      for (auto const& t : next) {
        if (within_caps(t, caps) && prefixes.insert(t).second) {
          level.insert(t);
        }
      }
      if (level.empty()) {
        break;
      }
    }
    std::vector<Term> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(), [](Term const& x, Term const& y) {
      return gen_count(x) < gen_count(y);
    });
    return out;
  }

  // Classes of Hom(m, n) within caps. Terms whose invariant (e.g. a vector
  // space image) differs are never compared; terms sharing an invariant are
  // merged when bounded equality proves them equal, and recorded as
  // unresolved when it cannot.
  template <typename Invariant>
  HomSet enum_hom(Obj m, Obj n, Mode mode, SearchCaps const& caps, Invariant&& invariant) {
    HomSet hom;
    hom.source = m;
    hom.target = n;
    hom.mode   = mode;
    hom.caps   = caps;

    auto const terms = enumerate_terms(m, n, caps);
    hom.raw_terms    = terms.size();
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (auto const& t : terms) {
      auto& bucket = buckets[invariant(t)];
      std::optional<std::size_t> home;
      std::vector<std::size_t>   undecided;
      for (std::size_t c : bucket) {
        if (equal(t, hom.classes[c].representative, mode, caps).equal()) {
          home = c;
          break;
        }
        undecided.push_back(c);
      }
      if (!home) {
        home = hom.classes.size();
        hom.classes.push_back({t, {}});
        for (std::size_t c : undecided) {
          hom.unresolved.emplace_back(c, *home);
        }
        bucket.push_back(*home);
      }
      hom.classes[*home].members.push_back(t);
      hom.index.emplace(t, *home);
    }
    return hom;
  }

  inline HomSet enum_hom(Obj m, Obj n, Mode mode, SearchCaps const& caps) {
    return enum_hom(m, n, mode, caps, [](Term const&) { return std::string(); });
  }

}  // namespace monocat
