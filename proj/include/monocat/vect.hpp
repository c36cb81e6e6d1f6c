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

// The strong monoidal functor F_(V,phi) into finite-dimensional vector
// spaces: object n goes to V^{(x)n}, eta_{m,n} to id_m (x) coev_n and eps_{m,n}
// to id_m (x) ev_n, where V is self-dual through phi.
//
// phi is stored as the matrix B of the pairing ev_1(v (x) w) = v^T B w, and
// coev_1 carries B^{-1}, so both snake identities hold for any invertible B.
// Basis index of V^{(x)w}: leftmost wire most significant (kron order).

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monocat/error.hpp"
#include "monocat/field.hpp"
#include "monocat/interchange.hpp"
#include "monocat/matrix.hpp"
#include "monocat/term.hpp"

namespace monocat {

  inline constexpr std::uint64_t default_dimension_cap = std::uint64_t(1) << 20;

  template <typename Field>
  class FunctorSpec {
   public:
    using value_type = typename Field::value_type;

    explicit FunctorSpec(Matrix<Field> phi)
        : _phi(std::move(phi)), _phi_inv(_phi.field(), 0, 0) {
      if (_phi.rows() == 0 || _phi.rows() != _phi.cols()) {
        throw NotInvertible("phi must be a non-empty square matrix");
      }
      _phi_inv = inverse(_phi);
    }

    [[nodiscard]] std::size_t dim() const noexcept {
      return _phi.rows();
    }
    [[nodiscard]] Field const& field() const noexcept {
      return _phi.field();
    }
    [[nodiscard]] Matrix<Field> const& phi() const noexcept {
      return _phi;
    }
    [[nodiscard]] Matrix<Field> const& phi_inv() const noexcept {
      return _phi_inv;
    }

   private:
    Matrix<Field> _phi;
    Matrix<Field> _phi_inv;
  };

  template <typename Field>
  FunctorSpec<Field> identity_spec(Field field, std::size_t d) {
    return FunctorSpec<Field>(Matrix<Field>::identity(std::move(field), d));
  }

  // Entries drawn uniformly from [-3, 3]; redrawn until invertible.
  template <typename Field>
  FunctorSpec<Field> random_spec(Field field, std::size_t d, std::uint64_t seed) {
    std::mt19937_64                             rng(seed);
    std::uniform_int_distribution<std::int64_t> entry(-3, 3);
    for (;;) {
      Matrix<Field> phi(field, d, d);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          phi(r, c) = field.from_int(entry(rng));
        }
      }
      if (rank(phi) == d) {
        return FunctorSpec<Field>(std::move(phi));
      }
    }
  }

  // First token d, then d*d entries ("num/den" or integers), row-major.
  template <typename Field>
  FunctorSpec<Field> read_phi(Field field, std::istream& in) {
    std::size_t d = 0;
    if (!(in >> d) || d == 0) {
      throw Error("phi file: expected a positive dimension on the first line");
    }
    Matrix<Field> phi(field, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        std::string tok;
        if (!(in >> tok)) {
          throw Error("phi file: expected " + std::to_string(d * d) + " entries");
        }
        phi(r, c) = field.parse(tok);
      }
    }
    std::string extra;
    if (in >> extra) {
      throw Error("phi file: trailing token '" + extra + "'");
    }
    return FunctorSpec<Field>(std::move(phi));
  }

  template <typename Field>
  FunctorSpec<Field> load_phi(Field field, std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open phi file '" + path + "'");
    }
    return read_phi(std::move(field), in);
  }

  // coev_n : k -> V^{(x)2n}, a d^{2n} x 1 column.
  // coev_n = (id_V (x) coev_{n-1} (x) id_V) coev_1, coev_0 = [1].
  template <typename Field>
  Matrix<Field> coev_mat(FunctorSpec<Field> const& spec, std::size_t n) {
    auto const&   f = spec.field();
    std::size_t   d = spec.dim();
    Matrix<Field> out = Matrix<Field>::identity(f, 1);
    if (n == 0) {
      return out;
    }
    Matrix<Field> coev1(f, d * d, 1);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        coev1(a * d + b, 0) = spec.phi_inv()(a, b);
      }
    }
    out               = coev1;
    auto const id_v   = Matrix<Field>::identity(f, d);
    for (std::size_t k = 2; k <= n; ++k) {
      out = multiply(kron(kron(id_v, out), id_v), coev1);
    }
    return out;
  }

  // ev_n : V^{(x)2n} -> k, a 1 x d^{2n} row.
  // ev_n = ev_1 (id_V (x) ev_{n-1} (x) id_V), ev_0 = [1].
  template <typename Field>
  Matrix<Field> ev_mat(FunctorSpec<Field> const& spec, std::size_t n) {
    auto const&   f = spec.field();
    std::size_t   d = spec.dim();
    Matrix<Field> out = Matrix<Field>::identity(f, 1);
    if (n == 0) {
      return out;
    }
    Matrix<Field> ev1(f, 1, d * d);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        ev1(0, a * d + b) = spec.phi()(a, b);
      }
    }
    out             = ev1;
    auto const id_v = Matrix<Field>::identity(f, d);
    for (std::size_t k = 2; k <= n; ++k) {
      out = multiply(ev1, kron(kron(id_v, out), id_v));
    }
    return out;
  }

  // Image of a term kept as sorted sparse columns.
  template <typename Field>
  struct SparseImage {
    using value_type = typename Field::value_type;
    using column     = std::vector<std::pair<std::uint64_t, value_type>>;

    std::uint64_t       rows = 0;
    std::uint64_t       cols = 0;
    std::vector<column> columns;

    friend bool operator==(SparseImage const&, SparseImage const&) = default;

    [[nodiscard]] bool is_identity(Field const& f) const {
      if (rows != cols) {
        return false;
      }
      for (std::uint64_t c = 0; c < cols; ++c) {
        auto const& col = columns[c];
        if (col.size() != 1 || col[0].first != c || !(col[0].second == f.one())) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] std::string key(Field const& f) const {
      std::string out = std::to_string(rows) + "x" + std::to_string(cols) + ":";
      for (auto const& col : columns) {
        for (auto const& [r, v] : col) {
          out += std::to_string(r) + "=" + f.to_string(v) + ",";
        }
        out += "|";
      }
      return out;
    }
  };

  namespace detail {

    inline std::uint64_t checked_power(std::uint64_t d, std::uint64_t w, std::uint64_t cap) {
      std::uint64_t p = 1;
      for (std::uint64_t k = 0; k < w; ++k) {
        p *= d;
        if (p > cap) {
          throw TooLarge("dimension " + std::to_string(d) + "^" + std::to_string(w)
                         + " exceeds the cap of " + std::to_string(cap));
        }
      }
      return p;
    }

  }  // namespace detail

  // Evaluates terms under one spec, caching the coev_n/ev_n kernels.
  template <typename Field>
  class Evaluator {
   public:
    using value_type = typename Field::value_type;
    using image_type = SparseImage<Field>;
    using column     = typename image_type::column;

    explicit Evaluator(FunctorSpec<Field> spec, std::uint64_t cap = default_dimension_cap)
        : _spec(std::move(spec)), _cap(cap) {}

    [[nodiscard]] FunctorSpec<Field> const& spec() const noexcept {
      return _spec;
    }

    [[nodiscard]] image_type eval(Term const& t) {
      std::uint64_t const d = _spec.dim();
      auto const&         f = _spec.field();
      image_type          img;
      img.cols = detail::checked_power(d, t.source(), _cap);
      img.rows = img.cols;
      img.columns.resize(img.cols);
      for (std::uint64_t c = 0; c < img.cols; ++c) {
        img.columns[c].emplace_back(c, f.one());
      }
      for (auto const& s : t.slices()) {
        img.rows = detail::checked_power(d, s.target(), _cap);
        apply(s, img);
      }
      return img;
    }

   private:
    column const& kernel(Kind kind, std::size_t n) {
      auto it = _kernels.find({kind, n});
      if (it != _kernels.end()) {
        return it->second;
      }
      Matrix<Field> m = kind == Kind::Eta ? coev_mat(_spec, n) : ev_mat(_spec, n);
      column        k;
      for (std::size_t i = 0; i < m.entries().size(); ++i) {
        if (!_spec.field().is_zero(m.entries()[i])) {
          k.emplace_back(i, m.entries()[i]);
        }
      }
      return _kernels.emplace(std::pair{kind, n}, std::move(k)).first->second;
    }

    void apply(Slice const& s, image_type& img) {
      auto const&         f = _spec.field();
      std::uint64_t const d = _spec.dim();
      std::uint64_t const R = detail::checked_power(d, s.right, _cap);
      std::uint64_t const K = detail::checked_power(d, 2 * s.gen.n(), _cap);
      auto const&         ker = kernel(s.gen.kind(), s.gen.n());
      // the ev kernel is indexed by its input position
      std::vector<value_type const*> ev_lookup;
      if (!s.gen.is_eta()) {
        ev_lookup.assign(K, nullptr);
        for (auto const& [i, v] : ker) {
          ev_lookup[i] = &v;
        }
      }
      for (auto& col : img.columns) {
        column out;
        if (s.gen.is_eta()) {
          out.reserve(col.size() * ker.size());
          for (auto const& [idx, v] : col) {
            std::uint64_t const L = idx / R, r = idx % R;
            for (auto const& [o, kv] : ker) {
              out.emplace_back((L * K + o) * R + r, f.mul(v, kv));
            }
          }
        } else {
          out.reserve(col.size());
          for (auto const& [idx, v] : col) {
            std::uint64_t const r = idx % R, rest = idx / R;
            std::uint64_t const in = rest % K, L = rest / K;
            if (ev_lookup[in] != nullptr) {
              out.emplace_back(L * R + r, f.mul(v, *ev_lookup[in]));
            }
          }
        }
        col = merge(std::move(out));
      }
    }

    column merge(column out) const {
      auto const& f = _spec.field();
      std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
        return a.first < b.first;
      });
      column merged;
      merged.reserve(out.size());
      for (auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first) {
          merged.back().second = f.add(merged.back().second, e.second);
        } else {
          if (!merged.empty() && f.is_zero(merged.back().second)) {
            merged.pop_back();
          }
          merged.push_back(std::move(e));
        }
      }
      if (!merged.empty() && f.is_zero(merged.back().second)) {
        merged.pop_back();
      }
      return merged;
    }

    FunctorSpec<Field>                               _spec;
    std::uint64_t                                    _cap;
    std::map<std::pair<Kind, std::size_t>, column>   _kernels;
  };

  template <typename Field>
  SparseImage<Field> eval_sparse(FunctorSpec<Field> const& spec,
                                 Term const&               t,
                                 std::uint64_t             cap = default_dimension_cap) {
    return Evaluator<Field>(spec, cap).eval(t);
  }

  template <typename Field>
  Matrix<Field> to_dense(Field const& f, SparseImage<Field> const& img) {
    if (img.rows * img.cols > (std::uint64_t(1) << 26)) {
      throw TooLarge("dense image " + std::to_string(img.rows) + "x" + std::to_string(img.cols)
                     + " is too large to materialise");
    }
    Matrix<Field> m(f, img.rows, img.cols);
    for (std::uint64_t c = 0; c < img.cols; ++c) {
      for (auto const& [r, v] : img.columns[c]) {
        m(r, c) = v;
      }
    }
    return m;
  }

  // F(t) as a d^target x d^source matrix.
  template <typename Field>
  Matrix<Field> eval_term(FunctorSpec<Field> const& spec,
                          Term const&               t,
                          std::uint64_t             cap = default_dimension_cap) {
    return to_dense(spec.field(), eval_sparse(spec, t, cap));
  }

  template <typename Field>
  bool check_rule_instance(FunctorSpec<Field> const& spec, Term const& lhs, Term const& rhs) {
    if (lhs.source() != rhs.source() || lhs.target() != rhs.target()) {
      throw NotEqualShape("rule sides " + std::to_string(lhs.source()) + "->"
                          + std::to_string(lhs.target()) + " and " + std::to_string(rhs.source())
                          + "->" + std::to_string(rhs.target()) + " differ in shape");
    }
    Evaluator<Field> ev(spec);
    return ev.eval(lhs) == ev.eval(rhs);
  }

  struct IsoVerdict {
    bool        not_iso = false;
    std::string reason;  // empty when inconclusive
  };

  namespace detail {

    // Some linearisation applies an eps first or an eta last.
    inline bool has_forbidden_shape(Term const& t) {
      for (auto const& lin : interchange_class(t)) {
        if (!lin.front().slice.gen.is_eta() || lin.back().slice.gen.is_eta()) {
          return true;
        }
      }
      return false;
    }

  }  // namespace detail

  // Functor-based witness that t is not an isomorphism.
  template <typename Field>
  IsoVerdict iso_obstruction(FunctorSpec<Field> const& spec, Term const& t) {
    if (t.source() != t.target()) {
      return {true, "non-square: " + std::to_string(t.source()) + " != " + std::to_string(t.target())};
    }
    if (t.is_identity()) {
      return {};
    }
    auto const        img  = eval_term(spec, t);
    std::size_t const r    = rank(img);
    if (r < img.rows()) {
      std::string reason = "rank " + std::to_string(r) + " < " + std::to_string(img.rows());
      if (detail::has_forbidden_shape(t)) {
        reason += " (leading eps / trailing eta)";
      }
      return {true, reason};
    }
    return {};
  }

}  // namespace monocat
