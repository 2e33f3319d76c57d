// Copyright 2026 The dnb-endgame Authors. All rights reserved.
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

#ifndef DNB_ERROR_HPP_
#define DNB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dnb {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed position or component notation, or a component that violates
// the chain/loop length rules.
class ParseError : public Error {
 public:
  using Error::Error;
};

class ComponentNotPresent : public Error {
 public:
  using Error::Error;
};

class EmptyPosition : public Error {
 public:
  EmptyPosition() : Error("position is empty") {}
  using Error::Error;
};

class IllegalAction : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// Two closed-form routes that must agree did not. Always a bug.
class InternalContradiction : public Error {
 public:
  using Error::Error;
};

}  // namespace dnb

#endif  // DNB_ERROR_HPP_
