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

#ifndef GTKIT_ERRORS_HPP
#define GTKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gtkit {

/// Base of every domain error; name() is the stable identifier reported by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what) : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define GTKIT_DEFINE_ERROR(Type)                                         \
  class Type : public Error {                                            \
   public:                                                               \
    explicit Type(const std::string& what) : Error(#Type, what) {}       \
  };

GTKIT_DEFINE_ERROR(DenominatorVanishes)
GTKIT_DEFINE_ERROR(NotInNormalForm)
GTKIT_DEFINE_ERROR(NotDominant)
GTKIT_DEFINE_ERROR(BoundExceeded)
GTKIT_DEFINE_ERROR(LatticeViolation)
GTKIT_DEFINE_ERROR(InternalError)

#undef GTKIT_DEFINE_ERROR

}  // namespace gtkit

#endif  // GTKIT_ERRORS_HPP
