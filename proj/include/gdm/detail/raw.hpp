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

#include "gdm/field.hpp"

namespace gdm::detail {

// Gaussian value as a bare pair of encodings; used in the O(N^2) loops where
// carrying a FieldPtr per element would dominate the cost.
struct RawGauss {
  Enc re = 0;
  Enc im = 0;
  bool operator==(const RawGauss&) const = default;
};

inline RawGauss add(const FieldSpec& f, RawGauss a, RawGauss b) noexcept {
  return {f.add(a.re, b.re), f.add(a.im, b.im)};
}

inline RawGauss mul(const FieldSpec& f, RawGauss a, RawGauss b) noexcept {
  return {f.sub(f.mul(a.re, b.re), f.mul(a.im, b.im)), f.add(f.mul(a.re, b.im), f.mul(a.im, b.re))};
}

inline RawGauss scale(const FieldSpec& f, Enc s, RawGauss a) noexcept { return {f.mul(s, a.re), f.mul(s, a.im)}; }

inline RawGauss conj(const FieldSpec& f, RawGauss a) noexcept { return {a.re, f.neg(a.im)}; }

inline RawGauss pow(const FieldSpec& f, RawGauss base, std::uint64_t e) noexcept {
  RawGauss result{1, 0};
  while (e > 0) {
    if (e & 1) result = mul(f, result, base);
    base = mul(f, base, base);
    e >>= 1;
  }
  return result;
}

inline RawGauss raw(const GaussianElement& z) noexcept { return {z.re().encoding(), z.im().encoding()}; }

inline GaussianElement cook(const FieldPtr& field, RawGauss z) { return {field, z.re, z.im}; }

}  // namespace gdm::detail
