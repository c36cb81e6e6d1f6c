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

// Seeded random terms and interchange shuffles for property checks.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "monocat/interchange.hpp"
#include "monocat/term.hpp"

namespace monocat {

  struct RandomTermShape {
    std::size_t gens        = 4;
    width_type  max_width   = 6;
    width_type  max_index_n = 2;
  };

  // One random slice on a layer of width w, or nothing if no generator fits.
  template <typename Rng>
  std::optional<Slice> random_slice(Rng& rng, width_type w, width_type max_width, width_type max_n) {
    std::vector<Slice> options;
    for (width_type n = 1; n <= max_n; ++n) {
      for (width_type a = 0; a <= w; ++a) {
        for (width_type m = 0; a + m <= w; ++m) {
          if (w + 2 * n <= max_width) {
            options.push_back({a, eta(m, n), w - a - m});
          }
          if (a + m + 2 * n <= w) {
            options.push_back({a, eps(m, n), w - a - m - 2 * n});
          }
        }
      }
    }
    if (options.empty()) {
      return std::nullopt;
    }
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    return options[pick(rng)];
  }

  template <typename Rng>
  Term random_term(Rng& rng, width_type source, RandomTermShape const& shape) {
    std::vector<Slice> slices;
    width_type         w = source;
    for (std::size_t g = 0; g < shape.gens; ++g) {
      auto s = random_slice(rng, w, shape.max_width, shape.max_index_n);
      if (!s) {
        break;
      }
      slices.push_back(*s);
      w = s->target();
    }
    return Term(source, std::move(slices));
  }

  // Applies up to `swaps` random legal adjacent exchanges.
  template <typename Rng>
  Term random_shuffle(Rng& rng, Term const& t, std::size_t swaps) {
    std::vector<Slice> s = t.slices();
    if (s.size() < 2) {
      return t;
    }
    std::uniform_int_distribution<std::size_t> pos(0, s.size() - 2);
    for (std::size_t k = 0; k < swaps; ++k) {
      std::size_t const  q = pos(rng);
      std::vector<std::pair<Slice, Slice>> opts;
      for_each_swap(s[q], s[q + 1], [&](Slice const& moved, Slice const& shifted) {
        opts.emplace_back(moved, shifted);
      });
      if (opts.empty()) {
        continue;
      }
      std::uniform_int_distribution<std::size_t> pick(0, opts.size() - 1);
      auto const& [moved, shifted] = opts[pick(rng)];
      s[q]                         = moved;
      s[q + 1]                     = shifted;
    }
    return Term(t.source(), std::move(s));
  }

}  // namespace monocat
