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

#include <optional>

#include "gdm/error.hpp"

template <typename Fn>
std::optional<gdm::ErrorCode> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const gdm::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

#define CHECK_ERROR(expr, error_code) CHECK(error_of([&] { (void)(expr); }) == std::optional{gdm::ErrorCode::error_code})
