// Copyright 2026 The hwps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HWPS_ERROR_HPP
#define HWPS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hwps {

/// Base class of every error raised by the library. The category string is
/// stable and used by the CLI to pick an exit code.
class Error : public std::runtime_error {
  public:
    Error(std::string category, const std::string &what)
        : std::runtime_error(what), category_(std::move(category)) {}

    const std::string &category() const noexcept { return category_; }

  private:
    std::string category_;
};

#define HWPS_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                             \
      public:                                                               \
        explicit Name(const std::string &what) : Error(#Name, what) {}      \
    }

HWPS_DEFINE_ERROR(NonHermitianInput);
HWPS_DEFINE_ERROR(OutOfRange);
HWPS_DEFINE_ERROR(InvalidAngularMomenta);
HWPS_DEFINE_ERROR(InvalidState);
HWPS_DEFINE_ERROR(DimensionMismatch);
HWPS_DEFINE_ERROR(OverflowRisk);
HWPS_DEFINE_ERROR(ConventionCheckFailed);
HWPS_DEFINE_ERROR(TruncationUnsafe);
HWPS_DEFINE_ERROR(EvenDimension);
HWPS_DEFINE_ERROR(NonUnitaryTransform);
HWPS_DEFINE_ERROR(HWRelationViolated);
HWPS_DEFINE_ERROR(NonIsometric);
HWPS_DEFINE_ERROR(EvenCodeDimension);
HWPS_DEFINE_ERROR(AlphaTooLarge);
HWPS_DEFINE_ERROR(OutsideCVRegime);
HWPS_DEFINE_ERROR(InvalidArgument);
HWPS_DEFINE_ERROR(ParseError);

#undef HWPS_DEFINE_ERROR

}  // namespace hwps

#endif  // HWPS_ERROR_HPP
