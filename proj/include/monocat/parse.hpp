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

// Grammar (whitespace-insensitive):
//
//   expr := term (";" term)*          diagrammatic composition, left first
//   term := atom ("*" atom)*          tensor product
//   atom := "id(" nat ")" | "eta(" nat "," nat ")" | "eps(" nat "," nat ")"
//         | "(" expr ")"

#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

#include "monocat/error.hpp"
#include "monocat/term.hpp"

namespace monocat {

  namespace detail {

    class ExprParser {
     public:
      explicit ExprParser(std::string_view text) : _text(text) {}

      Term parse() {
        Term t = expr();
        skip_space();
        if (_pos != _text.size()) {
          throw ParseError("unexpected '" + std::string(1, _text[_pos]) + "'", _pos);
        }
        return t;
      }

     private:
      Term expr() {
        Term t = term();
        while (accept(';')) {
          std::size_t const at  = _pos;
          Term              rhs = term();
          try {
            t = compose(t, rhs);
          } catch (NotComposable const& e) {
            throw NotComposable(std::string(e.what()) + " at position " + std::to_string(at));
          }
        }
        return t;
      }

      Term term() {
        Term t = atom();
        while (accept('*')) {
          t = tensor(t, atom());
        }
        return t;
      }

      Term atom() {
        skip_space();
        if (accept('(')) {
          Term t = expr();
          expect(')');
          return t;
        }
        std::size_t const at   = _pos;
        std::string       name = word();
        if (name == "id") {
          expect('(');
          width_type n = number();
          expect(')');
          return identity(Obj{n});
        }
        if (name == "eta" || name == "eps") {
          expect('(');
          width_type m = number();
          expect(',');
          width_type n = number();
          expect(')');
          return whisker(0, Generator(name == "eta" ? Kind::Eta : Kind::Eps, m, n), 0);
        }
        if (name.empty()) {
          throw ParseError(_pos < _text.size()
                               ? "unexpected '" + std::string(1, _text[_pos]) + "'"
                               : std::string("unexpected end of input"),
                           _pos);
        }
        throw ParseError("unknown atom '" + name + "'", at);
      }

      std::string word() {
        std::string out;
        while (_pos < _text.size() && std::isalpha(static_cast<unsigned char>(_text[_pos]))) {
          out += _text[_pos++];
        }
        return out;
      }

      width_type number() {
        skip_space();
        std::size_t const at  = _pos;
        std::uint64_t     val = 0;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          val = val * 10 + static_cast<std::uint64_t>(_text[_pos++] - '0');
          if (val > 4096) {
            throw ParseError("number too large", at);
          }
        }
        if (_pos == at) {
          throw ParseError("expected a natural number", at);
        }
        return static_cast<width_type>(val);
      }

      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool accept(char c) {
        skip_space();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          throw ParseError(std::string("expected '") + c + "'", _pos);
        }
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

  }  // namespace detail

  inline Term parse_expr(std::string_view input) {
    return detail::ExprParser(input).parse();
  }

}  // namespace monocat
