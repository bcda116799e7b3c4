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

/**
 * @file mux.hpp
 * @brief Galois-field division multiplexing and its spectral-efficiency metrics.
 *
 * User i owns transform index i. Multiplexing a frame of GF(p) symbols is the
 * forward transform of the user vector; demultiplexing is the inverse
 * transform. The line carries only the coset leaders of the spectrum.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gdm/cosets.hpp"

namespace gdm {

struct MuxConfig {
  TrigContextPtr ctx;
  TransformKind kind = TransformKind::Hartley;
  /// Symbol period in seconds; only used by the metrics.
  double symbol_period = 1.0;
  CosetPartition partition;

  std::uint64_t users() const noexcept { return ctx->n(); }
};

/// n defaults to p^m - 1.
MuxConfig make_mux_config(std::int64_t p, std::int64_t m, std::optional<std::uint64_t> n = std::nullopt,
                          TransformKind kind = TransformKind::Hartley, std::optional<Enc> zeta = std::nullopt,
                          double symbol_period = 1.0);
MuxConfig make_mux_config(const TrigContextPtr& ctx, TransformKind kind, double symbol_period = 1.0);

/// One GF(p) symbol per user, in user order.
struct UserFrame {
  std::vector<std::uint32_t> symbols;
  bool operator==(const UserFrame&) const = default;
};

/// Elementwise product of a symbol sequence and a carrier sequence.
std::vector<GaussianElement> galois_modulate(std::span<const GaussianElement> signal,
                                             std::span<const GaussianElement> carrier);

Spectrum mux(const MuxConfig& cfg, const UserFrame& frame);
UserFrame demux(const MuxConfig& cfg, const Spectrum& line);

struct PipelineResult {
  LineFrame line;
  UserFrame recovered;
};

/// mux -> compress -> expand -> demux.
PipelineResult transmit_pipeline(const MuxConfig& cfg, const UserFrame& frame);

/// Exact non-negative rational, always in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

/// N / v.
Rational gamma_cc(std::uint64_t n, std::uint64_t v);

struct GdmGain {
  std::uint64_t channels = 0;
  Rational percent;
  Rational bandwidth_ratio;
};

/// Extra channels N - v that fit in the TDM bandwidth, as a count and percent.
GdmGain gdm_gain(std::uint64_t n, std::uint64_t v);

struct LinkMetrics {
  Rational gamma_cc;
  std::uint64_t processing_gain = 0;
  std::uint64_t channels_gained = 0;
  Rational gain_percent;
  double rate_user_bps = 0;
  double rate_bps = 0;
  double bandwidth_tdm_hz = 0;
  double bandwidth_gdm_hz = 0;
  double eta_tdm = 0;
  double eta_gdm = 0;
};

/// One-user / TDM / GDM rate, bandwidth and spectral-efficiency comparison.
LinkMetrics table2_metrics(std::uint64_t p, std::uint64_t n, std::uint64_t v, double symbol_period = 1.0,
                           double user_bandwidth = 1.0);

/// Largest gamma_cc the Gaussian channel supports: log2(1 + snr) / log2(p).
double shannon_max_gamma(std::uint64_t p, double snr_linear);
/// Smallest linear SNR at which gamma is achievable: p^gamma - 1.
double shannon_min_snr(std::uint64_t p, double gamma);
bool shannon_feasible(std::uint64_t p, double snr_linear, std::uint64_t n, std::uint64_t v);

}  // namespace gdm
