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

#include "gdm/mux.hpp"

#include <cmath>
#include <numeric>

namespace gdm {

MuxConfig make_mux_config(const TrigContextPtr& ctx, TransformKind kind, double symbol_period) {
  if (!ctx) throw Error(ErrorCode::InvalidArgument, "missing trig context");
  if (!(symbol_period > 0)) throw Error(ErrorCode::InvalidArgument, "symbol period must be positive");
  return {ctx, kind, symbol_period, transmission_partition(ctx->n(), ctx->field()->p(), kind)};
}

MuxConfig make_mux_config(std::int64_t p, std::int64_t m, std::optional<std::uint64_t> n, TransformKind kind,
                          std::optional<Enc> zeta, double symbol_period) {
  const FieldPtr field = make_field(p, m);
  return make_mux_config(make_trig_context(field, n.value_or(field->size() - 1), zeta), kind, symbol_period);
}

std::vector<GaussianElement> galois_modulate(std::span<const GaussianElement> signal,
                                             std::span<const GaussianElement> carrier) {
  if (signal.size() != carrier.size()) {
    throw Error(ErrorCode::LengthMismatch, "signal has " + std::to_string(signal.size()) +
                                               " symbols, carrier has " + std::to_string(carrier.size()));
  }
  std::vector<GaussianElement> out;
  out.reserve(signal.size());
  for (std::size_t i = 0; i < signal.size(); ++i) out.push_back(signal[i] * carrier[i]);
  return out;
}

Spectrum mux(const MuxConfig& cfg, const UserFrame& frame) {
  const std::uint32_t p = cfg.ctx->field()->p();
  std::vector<std::int64_t> residues;
  residues.reserve(frame.symbols.size());
  for (auto s : frame.symbols) {
    if (s >= p) throw Error(ErrorCode::NotBaseField, "symbol " + std::to_string(s) + " is not in GF(" + std::to_string(p) + ")");
    residues.push_back(s);
  }
  return forward(make_signal(cfg.ctx, residues), cfg.kind);
}

UserFrame demux(const MuxConfig& cfg, const Spectrum& line) {
  if (line.kind != cfg.kind) throw Error(ErrorCode::KindMismatch, "line spectrum kind differs from the scheme");
  if (!line.ctx || line.ctx->n() != cfg.users() || !same_field(line.ctx->field(), cfg.ctx->field())) {
    throw Error(ErrorCode::SpecMismatch, "line spectrum does not belong to this scheme");
  }
  const SignalVector v = inverse(line);
  UserFrame out;
  out.symbols.reserve(v.values.size());
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    const auto& z = v.values[i];
    if (!z.is_real() || !z.field()->in_prime_subfield(z.re().encoding())) {
      throw Error(ErrorCode::NotBaseField, "recovered symbol " + std::to_string(i) + " is outside GF(p)");
    }
    out.symbols.push_back(z.re().encoding());
  }
  return out;
}

PipelineResult transmit_pipeline(const MuxConfig& cfg, const UserFrame& frame) {
  LineFrame line = compress_spectrum(mux(cfg, frame), cfg.partition);
  UserFrame recovered = demux(cfg, expand_spectrum(line, cfg.partition));
  return {std::move(line), std::move(recovered)};
}

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational gamma_cc(std::uint64_t n, std::uint64_t v) {
  if (v == 0) throw Error(ErrorCode::ZeroCosets, "coset count must be >= 1");
  return Rational::make(n, v);
}

GdmGain gdm_gain(std::uint64_t n, std::uint64_t v) {
  const Rational gamma = gamma_cc(n, v);
  if (v > n) throw Error(ErrorCode::InvalidArgument, "more cosets than channels");
  return {n - v, Rational::make(checked_mul(100, n - v), n), gamma};
}

LinkMetrics table2_metrics(std::uint64_t p, std::uint64_t n, std::uint64_t v, double symbol_period,
                           double user_bandwidth) {
  if (p == 2) throw Error(ErrorCode::EvenCharUnsupported, "characteristic 2 is not supported");
  if (p < 3 || n == 0 || !(symbol_period > 0) || !(user_bandwidth > 0)) {
    throw Error(ErrorCode::InvalidArgument, "metrics need p >= 3 and positive N, T, B1");
  }
  const GdmGain gain = gdm_gain(n, v);
  const double bits = std::log2(static_cast<double>(p));
  LinkMetrics out;
  out.gamma_cc = gain.bandwidth_ratio;
  out.processing_gain = v;
  out.channels_gained = gain.channels;
  out.gain_percent = gain.percent;
  out.rate_user_bps = bits / symbol_period;
  out.rate_bps = static_cast<double>(n) * out.rate_user_bps;
  out.bandwidth_tdm_hz = static_cast<double>(n) * user_bandwidth;
  out.bandwidth_gdm_hz = static_cast<double>(v) * user_bandwidth;
  out.eta_tdm = bits;
  out.eta_gdm = out.gamma_cc.value() * bits;
  return out;
}

double shannon_max_gamma(std::uint64_t p, double snr_linear) {
  if (snr_linear < 0 || std::isnan(snr_linear)) throw Error(ErrorCode::NegativeSnr, "SNR must be >= 0");
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "p must be >= 2");
  return std::log2(1.0 + snr_linear) / std::log2(static_cast<double>(p));
}

double shannon_min_snr(std::uint64_t p, double gamma) {
  if (p < 2 || gamma < 0) throw Error(ErrorCode::InvalidArgument, "need p >= 2 and gamma >= 0");
  return std::expm1(gamma * std::log(static_cast<double>(p)));
}

bool shannon_feasible(std::uint64_t p, double snr_linear, std::uint64_t n, std::uint64_t v) {
  return gamma_cc(n, v).value() <= shannon_max_gamma(p, snr_linear);
}

}  // namespace gdm
