// Copyright 2026 The gdmux Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include "gdm/mux.hpp"

namespace gdm {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Frames checked by the randomized properties: every frame when p^N is at
/// most `trials`, otherwise `trials` frames drawn from a generator seeded
/// with `seed`.
std::vector<UserFrame> sample_frames(std::uint64_t p, std::uint64_t n, std::uint64_t seed, std::size_t trials);

/// Runs every algebraic and pipeline property for one scheme.
std::vector<PropertyResult> run_property_suite(const MuxConfig& cfg, std::uint64_t seed, std::size_t trials = 1000);

}  // namespace gdm
