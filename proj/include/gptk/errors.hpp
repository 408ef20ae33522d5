// Copyright 2026 The gptkit authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace gptk {

/// Base class for every error raised by the toolkit.
class GptError : public std::runtime_error {
  public:
    explicit GptError(const std::string &what) : std::runtime_error(what) {}
};

class EmptyTable : public GptError {
  public:
    explicit EmptyTable(const std::string &what = "table has no rows or columns")
        : GptError(what) {}
};

class DimensionMismatch : public GptError {
  public:
    explicit DimensionMismatch(const std::string &what = "dimension mismatch")
        : GptError(what) {}
};

/// Internal inconsistency: a linear system that must be regular was not.
class SingularSystem : public GptError {
  public:
    explicit SingularSystem(const std::string &what = "singular linear system")
        : GptError(what) {}
};

class DegenerateInput : public GptError {
  public:
    explicit DegenerateInput(const std::string &what = "degenerate input") : GptError(what) {}
};

class NotAState : public GptError {
  public:
    explicit NotAState(const std::string &what = "vector is not in the state cone")
        : GptError(what) {}
};

class NotAnEffect : public GptError {
  public:
    explicit NotAnEffect(const std::string &what = "vector is not in the dual cone")
        : GptError(what) {}
};

class InvalidCompletion : public GptError {
  public:
    explicit InvalidCompletion(const std::string &what = "failure effect is not a valid effect")
        : GptError(what) {}
};

class RestrictedSubsystem : public GptError {
  public:
    explicit RestrictedSubsystem(const std::string &what = "subsystem violates no-restriction; "
                                                           "use the generalized maximal tensor")
        : GptError(what) {}
};

class ZeroProbabilityCondition : public GptError {
  public:
    explicit ZeroProbabilityCondition(const std::string &what =
                                          "conditioning effect has probability zero")
        : GptError(what) {}
};

class SingularBasis : public GptError {
  public:
    explicit SingularBasis(const std::string &what = "supplied vectors do not form a basis")
        : GptError(what) {}
};

class IncompleteMeasurement : public GptError {
  public:
    explicit IncompleteMeasurement(const std::string &what = "measurement effects do not sum "
                                                             "to the unit measure")
        : GptError(what) {}
};

class UnboundedCone : public GptError {
  public:
    explicit UnboundedCone(const std::string &what = "optimization unbounded over joint cone")
        : GptError(what) {}
};

class Unsupported : public GptError {
  public:
    explicit Unsupported(const std::string &what = "operation not supported for this system")
        : GptError(what) {}
};

class OperationCancelled : public GptError {
  public:
    explicit OperationCancelled(const std::string &what = "operation cancelled") : GptError(what) {}
};

class ParseError : public GptError {
  public:
    explicit ParseError(const std::string &what) : GptError(what) {}
};

} // namespace gptk
