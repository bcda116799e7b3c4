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

#include <cstddef>
#include <string_view>
#include <vector>

#include "gdm/trig.hpp"

namespace gdm {

enum class TransformKind { Fourier, Hartley };

std::string_view kind_name(TransformKind kind) noexcept;
TransformKind parse_kind(std::string_view text);

/// Length-N Galois-domain signal. User signals are real with entries in GF(p).
struct SignalVector {
  TrigContextPtr ctx;
  std::vector<GaussianElement> values;
};

struct Spectrum {
  TrigContextPtr ctx;
  TransformKind kind = TransformKind::Hartley;
  std::vector<GaussianElement> values;
};

/// Lifts GF(p) residues into a real signal over ctx's field.
SignalVector make_signal(const TrigContextPtr& ctx, const std::vector<std::int64_t>& residues);

/// F_k = sum_i v_i zeta^(k i).
Spectrum ffft_forward(const SignalVector& v);
/// v_i = N^-1 sum_k F_k zeta^(-k i).
SignalVector ffft_inverse(const Spectrum& spectrum);
/// V_k = sum_i v_i cas(k i).
Spectrum ffht_forward(const SignalVector& v);
/// v_i = N^-1 sum_k V_k cas(i k).
SignalVector ffht_inverse(const Spectrum& spectrum);

Spectrum forward(const SignalVector& v, TransformKind kind);
SignalVector inverse(const Spectrum& spectrum);

/// Sign s in the Hartley Frobenius law (V_k)^p = V_{s p k}: -1 iff p = 3 mod 4.
int hartley_sign(std::uint64_t p) noexcept;

struct ConjugacyReport {
  bool pass = true;
  /// Indices k at which some law fails, ascending and unique.
  std::vector<std::size_t> violations;
};

/// Checks the symmetries a spectrum of a GF(p)-valued signal must obey.
/// Fourier: V_k real and V_{pk} = V_k^p. Hartley: V_k^p = V_{s p k} and
/// V_{N-k} = conj(V_k).
ConjugacyReport verify_conjugacy(const Spectrum& spectrum);

}  // namespace gdm
