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

// Objects and morphism terms of the free PRO generated by the parametric
// arrows eta_{m,n} : m -> m+2n and eps_{m,n} : m+2n -> m (n >= 1).
//
// A morphism is stored as a list of slices, each slice being one generator
// whiskered by identity wires on both sides. Slices are applied first to
// last (diagrammatic order).

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "monocat/error.hpp"

namespace monocat {

  using width_type = std::uint32_t;

  struct Obj {
    width_type wires = 0;

    friend auto operator<=>(Obj, Obj) = default;
  };

  enum class Kind : std::uint8_t { Eta, Eps };

  // {D | C}: C adds the triangle identities to the relations of D.
  enum class Mode : std::uint8_t { D, C };

  class Generator {
   public:
    Generator(Kind kind, width_type m, width_type n) : _kind(kind), _m(m), _n(n) {
      if (n == 0) {
        throw InvalidGenerator(std::string(kind == Kind::Eta ? "eta" : "eps") + "("
                               + std::to_string(m) + ",0): second index must be >= 1");
      }
    }

    [[nodiscard]] Kind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] width_type m() const noexcept {
      return _m;
    }
    [[nodiscard]] width_type n() const noexcept {
      return _n;
    }
    [[nodiscard]] bool is_eta() const noexcept {
      return _kind == Kind::Eta;
    }

    [[nodiscard]] width_type source() const noexcept {
      return is_eta() ? _m : _m + 2 * _n;
    }
    [[nodiscard]] width_type target() const noexcept {
      return is_eta() ? _m + 2 * _n : _m;
    }

    friend auto operator<=>(Generator const&, Generator const&) = default;

   private:
    Kind       _kind;
    width_type _m;
    width_type _n;
  };

  inline Generator generator(Kind kind, width_type m, width_type n) {
    return Generator(kind, m, n);
  }

  inline Generator eta(width_type m, width_type n) {
    return Generator(Kind::Eta, m, n);
  }

  inline Generator eps(width_type m, width_type n) {
    return Generator(Kind::Eps, m, n);
  }

  // id_left (+) gen (+) id_right
  struct Slice {
    width_type left;
    Generator  gen;
    width_type right;

    [[nodiscard]] width_type source() const noexcept {
      return left + gen.source() + right;
    }
    [[nodiscard]] width_type target() const noexcept {
      return left + gen.target() + right;
    }

    friend auto operator<=>(Slice const&, Slice const&) = default;
  };

  class Term {
   public:
    Term() = default;

    explicit Term(Obj source) : _source(source.wires) {}

    Term(width_type source, std::vector<Slice> slices)
        : _source(source), _slices(std::move(slices)) {
      width_type w = _source;
      for (std::size_t k = 0; k < _slices.size(); ++k) {
        if (_slices[k].source() != w) {
          throw NotComposable("slice " + std::to_string(k) + " expects width "
                              + std::to_string(_slices[k].source()) + " but receives "
                              + std::to_string(w));
        }
        w = _slices[k].target();
      }
    }

    [[nodiscard]] width_type source() const noexcept {
      return _source;
    }

    [[nodiscard]] width_type target() const noexcept {
      return _slices.empty() ? _source : _slices.back().target();
    }

    [[nodiscard]] std::vector<Slice> const& slices() const noexcept {
      return _slices;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _slices.size();
    }

    [[nodiscard]] bool is_identity() const noexcept {
      return _slices.empty();
    }

    // Width of the layer before slice k (k == size() gives the target).
    [[nodiscard]] width_type width_at(std::size_t k) const noexcept {
      return k == 0 ? _source : _slices[k - 1].target();
    }

    [[nodiscard]] width_type max_width() const noexcept {
      width_type w = _source;
      for (auto const& s : _slices) {
        w = std::max(w, s.target());
      }
      return w;
    }

    [[nodiscard]] width_type max_index_n() const noexcept {
      width_type n = 0;
      for (auto const& s : _slices) {
        n = std::max(n, s.gen.n());
      }
      return n;
    }

    friend bool operator==(Term const&, Term const&) = default;

    friend auto operator<=>(Term const& a, Term const& b) {
      if (auto c = a._source <=> b._source; c != 0) {
        return c;
      }
      return a._slices <=> b._slices;
    }

   private:
    width_type         _source = 0;
    std::vector<Slice> _slices;
  };

  inline Term identity(Obj n) {
    return Term(n);
  }

  inline Term whisker(width_type left, Generator g, width_type right) {
    return Term(left + g.source() + right, {Slice{left, g, right}});
  }

  inline Term compose(Term const& f, Term const& g) {
    if (f.target() != g.source()) {
      throw NotComposable("cannot compose " + std::to_string(f.source()) + "->"
                          + std::to_string(f.target()) + " with " + std::to_string(g.source())
                          + "->" + std::to_string(g.target()) + " ("
                          + std::to_string(f.target()) + " != " + std::to_string(g.source())
                          + ")");
    }
    std::vector<Slice> slices = f.slices();
    slices.insert(slices.end(), g.slices().begin(), g.slices().end());
    return Term(f.source(), std::move(slices));
  }

  // f (x) g = (f (x) id) ; (id (x) g)
  inline Term tensor(Term const& f, Term const& g) {
    std::vector<Slice> slices;
    slices.reserve(f.size() + g.size());
    for (auto s : f.slices()) {
      s.right += g.source();
      slices.push_back(s);
    }
    for (auto s : g.slices()) {
      s.left += f.target();
      slices.push_back(s);
    }
    return Term(f.source() + g.source(), std::move(slices));
  }

  inline std::size_t gen_count(Term const& t) noexcept {
    return t.size();
  }

  inline std::string render(Generator const& g) {
    return std::string(g.is_eta() ? "eta(" : "eps(") + std::to_string(g.m()) + ","
           + std::to_string(g.n()) + ")";
  }

  inline std::string render(Slice const& s) {
    if (s.left == 0 && s.right == 0) {
      return render(s.gen);
    }
    std::string out = "(";
    if (s.left != 0) {
      out += "id(" + std::to_string(s.left) + ") * ";
    }
    out += render(s.gen);
    if (s.right != 0) {
      out += " * id(" + std::to_string(s.right) + ")";
    }
    return out + ")";
  }

  // Text form in the grammar accepted by parse_expr.
  inline std::string render(Term const& t) {
    if (t.is_identity()) {
      return "id(" + std::to_string(t.source()) + ")";
    }
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k != 0) {
        out += " ; ";
      }
      out += render(t.slices()[k]);
    }
    return out;
  }

  inline char const* to_string(Mode mode) noexcept {
    return mode == Mode::D ? "D" : "C";
  }

  struct TermHash {
    std::size_t operator()(Term const& t) const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ULL ^ t.source();
      auto          mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      };
      for (auto const& s : t.slices()) {
        mix((std::uint64_t(s.left) << 40) ^ (std::uint64_t(s.gen.m()) << 20)
            ^ (std::uint64_t(s.gen.n()) << 2) ^ std::uint64_t(s.gen.is_eta()));
        mix(s.right);
      }
      return static_cast<std::size_t>(h);
    }
  };

}  // namespace monocat
