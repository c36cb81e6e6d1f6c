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

// Interchange law on slice lists: adjacent slices with disjoint support
// commute. The canonical form of a term is the lexicographically smallest
// slice list among all interchange-equivalent lists.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "monocat/term.hpp"

namespace monocat {

  // Calls fn(moved, shifted) for every way of exchanging the adjacent pair
  // (earlier, later) so that `later` is applied first. `moved` is the new
  // first slice, `shifted` the new second one.
  //
  // Left exchange:  later acts on [l2, l2+src2) with l2+src2 <= l1.
  // Right exchange: later acts at or beyond l1+tgt1.
  // Both apply only when tgt(earlier) = src(later) = 0 at the same point.
  template <typename Fn>
  void for_each_swap(Slice const& earlier, Slice const& later, Fn&& fn) {
    width_type const l1   = earlier.left;
    width_type const src1 = earlier.gen.source();
    width_type const tgt1 = earlier.gen.target();
    width_type const l2   = later.left;
    width_type const src2 = later.gen.source();
    width_type const tgt2 = later.gen.target();
    width_type const w0   = earlier.source();

    if (l2 + src2 <= l1) {
      Slice moved{l2, later.gen, w0 - l2 - src2};
      Slice shifted{l1 - src2 + tgt2, earlier.gen, earlier.right};
      fn(moved, shifted);
    }
    if (l2 >= l1 + tgt1) {
      Slice moved{l2 - tgt1 + src1, later.gen, later.right};
      Slice shifted{l1, earlier.gen, earlier.right - src2 + tgt2};
      fn(moved, shifted);
    }
  }

  inline bool commutes(Slice const& earlier, Slice const& later) {
    bool any = false;
    for_each_swap(earlier, later, [&any](Slice const&, Slice const&) { any = true; });
    return any;
  }

  namespace detail {

    // Every interchange-equivalent slice list, reached by adjacent exchanges.
    // The set is ordered, so its first element is the lexicographic minimum.
    inline std::set<std::vector<Slice>> slice_class(std::vector<Slice> const& s) {
      std::set<std::vector<Slice>>                   seen{s};
      std::vector<std::vector<Slice> const*>         queue{&*seen.begin()};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto const& cur = *queue[head];
        for (std::size_t q = 0; q + 1 < cur.size(); ++q) {
          for_each_swap(cur[q], cur[q + 1], [&](Slice const& moved, Slice const& shifted) {
            std::vector<Slice> next = cur;
            next[q]                 = moved;
            next[q + 1]             = shifted;
            auto [it, fresh]        = seen.insert(std::move(next));
            if (fresh) {
              queue.push_back(&*it);
            }
          });
        }
      }
      return seen;
    }

  }  // namespace detail

  // Normal form modulo the interchange law.
  inline Term canonical(Term const& t) {
    return Term(t.source(), *detail::slice_class(t.slices()).begin());
  }

  inline bool interchange_equivalent(Term const& a, Term const& b) {
    return a.source() == b.source() && a.size() == b.size() && canonical(a) == canonical(b);
  }

  // A slice together with a label identifying it across linearisations.
  struct TaggedSlice {
    Slice        slice;
    std::uint8_t id;
  };

  using Linearisation = std::vector<TaggedSlice>;

  class ClassTooLarge : public Error {
   public:
    using Error::Error;
  };

  // Every slice list interchange-equivalent to t (breadth-first over adjacent
  // exchanges). Lists are deduplicated by slices; the labels of the first
  // visit are kept.
  inline std::vector<Linearisation> interchange_class(Term const& t, std::size_t limit = 1 << 20) {
    Linearisation start;
    start.reserve(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
      start.push_back({t.slices()[k], static_cast<std::uint8_t>(k)});
    }
    auto key = [](Linearisation const& l) {
      std::vector<Slice> s;
      s.reserve(l.size());
      for (auto const& x : l) {
        s.push_back(x.slice);
      }
      return s;
    };
    std::set<std::vector<Slice>> seen;
    std::vector<Linearisation>   out;
    seen.insert(key(start));
    out.push_back(std::move(start));
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (std::size_t q = 0; q + 1 < out[head].size(); ++q) {
        auto const a = out[head][q];
        auto const b = out[head][q + 1];
        for_each_swap(a.slice, b.slice, [&](Slice const& moved, Slice const& shifted) {
          Linearisation next = out[head];
          next[q]            = {moved, b.id};
          next[q + 1]        = {shifted, a.id};
          if (seen.insert(key(next)).second) {
            if (out.size() >= limit) {
              throw ClassTooLarge("interchange class exceeds " + std::to_string(limit)
                                  + " linearisations");
            }
            out.push_back(std::move(next));
          }
        });
      }
    }
    return out;
  }

}  // namespace monocat
