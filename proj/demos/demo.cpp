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

// The snake composite and a triangle composite side by side: the vect
// functor sends both to the identity, but only the triangle rewrites to it.

#include <iostream>

#include "monocat/monocat.hpp"

int main() {
  using namespace monocat;

  Term const snake    = parse_expr("(eta(0,1) * id(1)) ; (id(1) * eps(0,1))");
  Term const triangle = parse_expr("(eta(0,1) * id(1)) ; eps(1,1)");
  auto const spec     = random_spec(RationalField{}, 2, 7);

  for (Term const& t : {snake, triangle}) {
    std::cout << render(t) << "\n";
    std::cout << to_string(eval_term(spec, t));

    auto const res = equal(t, identity(Obj{1}), Mode::C, SearchCaps{});
    if (res.equal()) {
      std::cout << "  = id(1) via";
      for (auto const& s : res.path) {
        std::cout << " " << describe(s);
      }
      std::cout << "\n\n";
    } else {
      std::cout << "  no path to id(1) among " << res.states_visited << " states\n\n";
    }
  }
}
