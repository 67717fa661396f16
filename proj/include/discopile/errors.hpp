// Copyright 2026 discopile contributors
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

namespace discopile {

// Base class for all library errors. Each failure mode below names one
// contract violation so callers can map it to a distinct exit code.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UnknownTokenError : public Error {
 public:
  explicit UnknownTokenError(const std::string& token)
      : Error("unknown token: " + token), token(token) {}
  std::string token;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, long line = -1)
      : Error(line >= 0 ? "parse error at line " + std::to_string(line) +
                              ": " + msg
                        : "parse error: " + msg),
        line(line) {}
  long line;
};

class NotGrammaticalError : public Error {
 public:
  explicit NotGrammaticalError(const std::string& msg)
      : Error("not grammatical: " + msg) {}
};

class NotANounError : public Error {
 public:
  explicit NotANounError(const std::string& msg)
      : Error("not a plain noun wire: " + msg) {}
};

class TypeMismatchError : public Error {
 public:
  explicit TypeMismatchError(const std::string& msg)
      : Error("type mismatch: " + msg) {}
};

class InvalidDiagramError : public Error {
 public:
  explicit InvalidDiagramError(const std::string& msg)
      : Error("invalid diagram: " + msg) {}
};

class UnboundParamError : public Error {
 public:
  explicit UnboundParamError(const std::string& name)
      : Error("unbound parameter: " + name), name(name) {}
  std::string name;
};

class InvalidCircuitError : public Error {
 public:
  explicit InvalidCircuitError(const std::string& msg)
      : Error("invalid circuit: " + msg) {}
};

class ZeroPostselectMassError : public Error {
 public:
  explicit ZeroPostselectMassError(const std::string& msg)
      : Error("postselection annihilated the state: " + msg) {}
};

class ZeroMassError : public Error {
 public:
  explicit ZeroMassError(const std::string& msg)
      : Error("zero mass: " + msg) {}
};

class NotHermitianError : public Error {
 public:
  explicit NotHermitianError(const std::string& msg)
      : Error("matrix is not Hermitian: " + msg) {}
};

class InvalidDistributionError : public Error {
 public:
  explicit InvalidDistributionError(const std::string& msg)
      : Error("invalid probability distribution: " + msg) {}
};

class TooManyBranchesError : public Error {
 public:
  explicit TooManyBranchesError(const std::string& msg)
      : Error("unsupported branch count: " + msg) {}
};

class AllBranchesZeroMassError : public Error {
 public:
  explicit AllBranchesZeroMassError(const std::string& msg)
      : Error("all branches have zero mass: " + msg) {}
};

class IncompatibleShapesError : public Error {
 public:
  explicit IncompatibleShapesError(const std::string& msg)
      : Error("incompatible sentence shapes: " + msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error("i/o error: " + msg) {}
};

}  // namespace discopile
