// SPDX-License-Identifier: Apache-2.0
//
// iosnoma - rate simulator and analytical bounds for IOS-assisted NOMA/OMA
// Copyright (C) 2026 The iosnoma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <iosfwd>

namespace iosnoma::cli {

enum ExitCode : int
{
    kOk = 0,
    kFailure = 1,
    kConfigError = 2,
    kNumericError = 3,
};

/// Parses argv and dispatches to run / list-specs / validate / bound.
/// Output goes to `out`, diagnostics to `err`; nothing touches the global
/// streams so the dispatcher can be driven from tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace iosnoma::cli
