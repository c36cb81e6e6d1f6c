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

// Exact scalar fields used by the vector-space semantics. A field is a
// policy object: values are plain `value_type`s and every operation goes
// through the field, so a runtime modulus can be carried by the policy.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "monocat/error.hpp"

namespace monocat {

  class RationalField {
   public:
    using value_type = mpq_class;

    [[nodiscard]] value_type zero() const {
      return value_type(0);
    }
    [[nodiscard]] value_type one() const {
      return value_type(1);
    }
    [[nodiscard]] value_type from_int(std::int64_t v) const {
      return value_type(static_cast<long>(v));
    }

    // "a/b" or "a", optional leading sign
    [[nodiscard]] value_type parse(std::string_view text) const {
      value_type q;
      if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
        throw Error("not a rational number: '" + std::string(text) + "'");
      }
      q.canonicalize();
      return q;
    }

    [[nodiscard]] bool is_zero(value_type const& v) const {
      return sgn(v) == 0;
    }
    [[nodiscard]] value_type add(value_type const& a, value_type const& b) const {
      return a + b;
    }
    [[nodiscard]] value_type sub(value_type const& a, value_type const& b) const {
      return a - b;
    }
    [[nodiscard]] value_type mul(value_type const& a, value_type const& b) const {
      return a * b;
    }
    [[nodiscard]] value_type neg(value_type const& a) const {
      return -a;
    }
    [[nodiscard]] value_type inv(value_type const& a) const {
      if (is_zero(a)) {
        throw NotInvertible("division by zero");
      }
      return 1 / a;
    }
    void fma(value_type& acc, value_type const& a, value_type const& b) const {
      acc += a * b;
    }

    [[nodiscard]] std::string to_string(value_type const& v) const {
      return v.get_str();
    }
    [[nodiscard]] std::string name() const {
      return "q";
    }

    friend bool operator==(RationalField const&, RationalField const&) = default;
  };

  class PrimeField {
   public:
    using value_type = std::uint64_t;

    static constexpr std::uint64_t default_prime = 1000003;

    explicit PrimeField(std::uint64_t p = default_prime) : _p(p) {
      if (!is_prime(p) || p >= (std::uint64_t(1) << 32)) {
        throw Error("modulus " + std::to_string(p) + " is not a prime below 2^32");
      }
    }

    [[nodiscard]] std::uint64_t modulus() const noexcept {
      return _p;
    }

    [[nodiscard]] value_type zero() const {
      return 0;
    }
    [[nodiscard]] value_type one() const {
      return 1;
    }
    [[nodiscard]] value_type from_int(std::int64_t v) const {
      std::int64_t r = v % static_cast<std::int64_t>(_p);
      return static_cast<value_type>(r < 0 ? r + static_cast<std::int64_t>(_p) : r);
    }

    [[nodiscard]] value_type parse(std::string_view text) const {
      mpq_class q = RationalField().parse(text);
      mpz_class p(std::to_string(_p));
      mpz_class num = q.get_num() % p;
      mpz_class den = q.get_den() % p;
      if (num < 0) {
        num += p;
      }
      if (den == 0) {
        throw NotInvertible("denominator of '" + std::string(text) + "' vanishes mod "
                            + std::to_string(_p));
      }
      return mul(num.get_ui(), inv(den.get_ui()));
    }

    [[nodiscard]] bool is_zero(value_type v) const {
      return v == 0;
    }
    [[nodiscard]] value_type add(value_type a, value_type b) const {
      value_type s = a + b;
      return s >= _p ? s - _p : s;
    }
    [[nodiscard]] value_type sub(value_type a, value_type b) const {
      return a >= b ? a - b : a + _p - b;
    }
    [[nodiscard]] value_type mul(value_type a, value_type b) const {
      return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % _p);
    }
    [[nodiscard]] value_type neg(value_type a) const {
      return a == 0 ? 0 : _p - a;
    }
    [[nodiscard]] value_type inv(value_type a) const {
      if (a == 0) {
        throw NotInvertible("division by zero");
      }
      // Fermat
      value_type result = 1, base = a;
      for (std::uint64_t e = _p - 2; e != 0; e >>= 1) {
        if (e & 1) {
          result = mul(result, base);
        }
        base = mul(base, base);
      }
      return result;
    }
    void fma(value_type& acc, value_type a, value_type b) const {
      acc = add(acc, mul(a, b));
    }

    [[nodiscard]] std::string to_string(value_type v) const {
      return std::to_string(v);
    }
    [[nodiscard]] std::string name() const {
      return "p:" + std::to_string(_p);
    }

    friend bool operator==(PrimeField const&, PrimeField const&) = default;

   private:
    static bool is_prime(std::uint64_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint64_t q = 2; q * q <= p; ++q) {
        if (p % q == 0) {
          return false;
        }
      }
      return true;
    }

    std::uint64_t _p;
  };

}  // namespace monocat
