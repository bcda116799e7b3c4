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

#include "gdm/transforms.hpp"

#include <algorithm>
#include <string>

namespace gdm {

using detail::RawGauss;

std::string_view kind_name(TransformKind kind) noexcept {
  return kind == TransformKind::Fourier ? "fourier" : "hartley";
}

TransformKind parse_kind(std::string_view text) {
  if (text == "fourier") return TransformKind::Fourier;
  if (text == "hartley") return TransformKind::Hartley;
  throw Error(ErrorCode::InvalidArgument, "unknown transform kind '" + std::string(text) + "'");
}

int hartley_sign(std::uint64_t p) noexcept { return p % 4 == 3 ? -1 : 1; }

SignalVector make_signal(const TrigContextPtr& ctx, const std::vector<std::int64_t>& residues) {
  if (residues.size() != ctx->n()) {
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(ctx->n()) + " values, got " + std::to_string(residues.size()));
  }
  SignalVector out{ctx, {}};
  out.values.reserve(residues.size());
  for (auto r : residues) out.values.emplace_back(FieldElement::from_int(ctx->field(), r));
  return out;
}

namespace {

void check_length(const TrigContextPtr& ctx, std::size_t size) {
  if (!ctx) throw Error(ErrorCode::InvalidArgument, "missing trig context");
  if (size != ctx->n()) {
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(ctx->n()) + " values, got " + std::to_string(size));
  }
}

std::vector<RawGauss> to_raw(const TrigContext& ctx, const std::vector<GaussianElement>& values) {
  std::vector<RawGauss> out;
  out.reserve(values.size());
  for (const auto& z : values) {
    if (!same_field(z.field(), ctx.field())) throw Error(ErrorCode::SpecMismatch, "element from another field");
    out.push_back(detail::raw(z));
  }
  return out;
}

std::vector<GaussianElement> from_raw(const FieldPtr& field, const std::vector<RawGauss>& values) {
  std::vector<GaussianElement> out;
  out.reserve(values.size());
  for (auto z : values) out.push_back(detail::cook(field, z));
  return out;
}

// out_k = scale * sum_i in_i kernel(k i mod N)
template <typename Kernel>
std::vector<RawGauss> apply(const TrigContext& ctx, const std::vector<RawGauss>& in, Kernel kernel, Enc scale) {
  const FieldSpec& f = *ctx.field();
  const std::size_t n = ctx.n();
  std::vector<RawGauss> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    RawGauss acc{};
    for (std::size_t i = 0; i < n; ++i) {
      if (in[i].im == 0) {
        if (in[i].re == 0) continue;
        acc = detail::add(f, acc, detail::scale(f, in[i].re, kernel(k * i % n)));
      } else {
        acc = detail::add(f, acc, detail::mul(f, in[i], kernel(k * i % n)));
      }
    }
    out[k] = scale == 1 ? acc : detail::scale(f, scale, acc);
  }
  return out;
}

Enc inverse_n(const TrigContext& ctx) {
  return ctx.field()->inv(ctx.field()->from_int(static_cast<std::int64_t>(ctx.n())));
}

}  // namespace

Spectrum ffft_forward(const SignalVector& v) {
  check_length(v.ctx, v.values.size());
  const TrigContext& ctx = *v.ctx;
  auto out = apply(ctx, to_raw(ctx, v.values), [&](std::size_t x) { return RawGauss{ctx.zeta_pow(x), 0}; }, 1);
  return {v.ctx, TransformKind::Fourier, from_raw(ctx.field(), out)};
}

SignalVector ffft_inverse(const Spectrum& spectrum) {
  if (spectrum.kind != TransformKind::Fourier) throw Error(ErrorCode::KindMismatch, "expected a Fourier spectrum");
  check_length(spectrum.ctx, spectrum.values.size());
  const TrigContext& ctx = *spectrum.ctx;
  const auto n = static_cast<std::int64_t>(ctx.n());
  auto out = apply(
      ctx, to_raw(ctx, spectrum.values),
      [&](std::size_t x) { return RawGauss{ctx.zeta_pow(n - static_cast<std::int64_t>(x)), 0}; }, inverse_n(ctx));
  return {spectrum.ctx, from_raw(ctx.field(), out)};
}

Spectrum ffht_forward(const SignalVector& v) {
  check_length(v.ctx, v.values.size());
  const TrigContext& ctx = *v.ctx;
  auto out = apply(ctx, to_raw(ctx, v.values), [&](std::size_t x) { return ctx.cas_table()[x]; }, 1);
  return {v.ctx, TransformKind::Hartley, from_raw(ctx.field(), out)};
}

SignalVector ffht_inverse(const Spectrum& spectrum) {
  if (spectrum.kind != TransformKind::Hartley) throw Error(ErrorCode::KindMismatch, "expected a Hartley spectrum");
  check_length(spectrum.ctx, spectrum.values.size());
  const TrigContext& ctx = *spectrum.ctx;
  auto out = apply(
      ctx, to_raw(ctx, spectrum.values), [&](std::size_t x) { return ctx.cas_table()[x]; }, inverse_n(ctx));
  return {spectrum.ctx, from_raw(ctx.field(), out)};
}

Spectrum forward(const SignalVector& v, TransformKind kind) {
  return kind == TransformKind::Fourier ? ffft_forward(v) : ffht_forward(v);
}

SignalVector inverse(const Spectrum& spectrum) {
  return spectrum.kind == TransformKind::Fourier ? ffft_inverse(spectrum) : ffht_inverse(spectrum);
}

ConjugacyReport verify_conjugacy(const Spectrum& spectrum) {
  check_length(spectrum.ctx, spectrum.values.size());
  const TrigContext& ctx = *spectrum.ctx;
  const FieldSpec& f = *ctx.field();
  const auto values = to_raw(ctx, spectrum.values);
  const auto n = static_cast<std::int64_t>(ctx.n());
  const std::int64_t p = f.p();
  const std::int64_t step = spectrum.kind == TransformKind::Fourier ? p : hartley_sign(f.p()) * p;

  std::vector<bool> bad(ctx.n(), false);
  for (std::int64_t k = 0; k < n; ++k) {
    const RawGauss vk = values[static_cast<std::size_t>(k)];
    const std::size_t image = ctx.reduce(step * k);
    if (detail::pow(f, vk, static_cast<std::uint64_t>(p)) != values[image]) bad[static_cast<std::size_t>(k)] = bad[image] = true;
    if (spectrum.kind == TransformKind::Fourier) {
      if (vk.im != 0) bad[static_cast<std::size_t>(k)] = true;
    } else {
      const std::size_t mirror = ctx.reduce(-k);
      if (detail::conj(f, vk) != values[mirror]) bad[static_cast<std::size_t>(k)] = bad[mirror] = true;
    }
  }
  ConjugacyReport report;
  for (std::size_t k = 0; k < bad.size(); ++k) {
    if (bad[k]) report.violations.push_back(k);
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace gdm
