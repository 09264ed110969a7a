/*
   Copyright 2026 The gtkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Everything except json_io.hpp, which needs nlohmann/json.

#ifndef GTKIT_GTKIT_HPP
#define GTKIT_GTKIT_HPP

#include "coefficient.hpp"
#include "divdiff.hpp"
#include "errors.hpp"
#include "gtmodule.hpp"
#include "identities.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "param_scalar.hpp"
#include "polynomial.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "rational_function.hpp"
#include "singular.hpp"
#include "symcomb.hpp"
#include "variables.hpp"

#ifndef GTKIT_VERSION
#define GTKIT_VERSION "0.1.0"
#endif

namespace gtkit {

inline constexpr const char* kVersion = GTKIT_VERSION;

}  // namespace gtkit

#endif  // GTKIT_GTKIT_HPP
