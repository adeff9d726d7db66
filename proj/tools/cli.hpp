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

#include <iosfwd>
#include <span>
#include <string>

namespace allpay::cli {

enum ExitCode : int
{
  kOk            = 0,
  kInvalid       = 1,
  kSolverFailure = 2
};

/// Parses `args` (without the program name), runs the subcommand and writes its
/// artifact to `out` (or the --output file). Diagnostics and usage go to `err`.
int Dispatch(std::span<std::string const> args, std::ostream &out, std::ostream &err);

}  // namespace allpay::cli
