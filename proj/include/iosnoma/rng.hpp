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

#include <cstdint>
#include <random>

namespace iosnoma {

using Rng = std::mt19937_64;

/// Independent random streams drawn within one Monte Carlo trial.
enum class Stream : std::uint64_t
{
    ChannelH = 1,   // TX -> IOS
    ChannelG,       // IOS -> T
    ChannelR,       // IOS -> R
    ChannelGp,      // IOS -> T'
    ChannelRp,      // IOS -> R'
    PhaseT,
    PhaseR,
    PhaseTp,
    PhaseRp,
    Oracle,         // test-side draws
};

/// Counter-based seed: a pure function of (master, trial, stream), so a
/// trial's draws do not depend on which worker runs it or in what order.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t trial, Stream stream);

inline Rng trial_stream(std::uint64_t master, std::uint64_t trial, Stream stream)
{
    return Rng{stream_seed(master, trial, stream)};
}

} // namespace iosnoma
