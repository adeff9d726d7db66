//------------------------------------------------------------------------------
//
//   Copyright 2026 The allpay Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace allpay {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A count, weight or list argument violates its precondition.
class InvalidParameter : public Error
{
public:
  using Error::Error;
};

/// A value lies outside the support it must be evaluated on.
class DomainError : public Error
{
public:
  using Error::Error;
};

/// Parameters make a closed form divide by zero (n = 1 with lambda = 1 under inflated).
class SingularParameter : public Error
{
public:
  using Error::Error;
};

/// A root finder could not bracket or converge.
class SolverFailure : public Error
{
public:
  using Error::Error;
};

/// A scenario or config record failed validation; the message lists every offending field.
class ValidationError : public Error
{
public:
  using Error::Error;
};

}  // namespace allpay
