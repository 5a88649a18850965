/**************************************************************************
 * errors.hpp
 *
 * Copyright 2026 The skewcc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace skewcc {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error { using Error::Error; };
struct MismatchedField : Error { using Error::Error; };
struct MismatchedRing : Error { using Error::Error; };
struct MismatchedContext : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct KTooSmall : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct NonUnitLeadingCoeff : Error { using Error::Error; };
struct NonUnitPivot : Error { using Error::Error; };
struct NonMonic : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct CharacteristicThree : Error { using Error::Error; };
struct FieldTooLarge : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct NoPsRoot : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NotReduced : Error { using Error::Error; };
struct ZeroCode : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };
struct UnsupportedAmbient : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotDeskScale : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct NotFieldCode : Error { using Error::Error; };
struct AutomorphismMovesAlpha : Error { using Error::Error; };
struct ModulusUnavailable : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };

}  // namespace skewcc
