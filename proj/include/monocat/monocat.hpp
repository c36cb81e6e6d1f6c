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

#pragma once

#include "monocat/error.hpp"
#include "monocat/field.hpp"
#include "monocat/interchange.hpp"
#include "monocat/matrix.hpp"
#include "monocat/parse.hpp"
#include "monocat/random.hpp"
#include "monocat/rewrite.hpp"
#include "monocat/rules.hpp"
#include "monocat/suite.hpp"
#include "monocat/term.hpp"
#include "monocat/vect.hpp"
