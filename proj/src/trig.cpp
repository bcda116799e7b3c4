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

#include "gdm/trig.hpp"

#include <string>

namespace gdm {

using detail::RawGauss;

TrigContextPtr make_trig_context(const FieldPtr& field, std::uint64_t n, std::optional<Enc> zeta) {
  if (!field) throw Error(ErrorCode::InvalidArgument, "null field");
  const std::uint64_t group = field->size() - 1;
  if (n == 0 || group % n != 0) {
    throw Error(ErrorCode::NoSuchOrder, "N=" + std::to_string(n) + " does not divide " + std::to_string(group));
  }
  FieldElement root = zeta ? FieldElement(field, *zeta) : find_element_of_order(field, n);
  if (root.is_zero() || element_order(root) != n) {
    throw Error(ErrorCode::NoSuchOrder,
                "zeta=" + std::to_string(root.encoding()) + " does not have order " + std::to_string(n));
  }
  return std::make_shared<const TrigContext>(TrigContext::Key{}, std::move(root), n);
}

TrigContext::TrigContext(Key, FieldElement zeta, std::uint64_t n)
    : field_(zeta.field()), zeta_(std::move(zeta)), n_(n) {
  const FieldSpec& f = *field_;
  zeta_pows_.resize(n_);
  Enc acc = 1;
  for (std::uint64_t k = 0; k < n_; ++k) {
    zeta_pows_[k] = acc;
    acc = f.mul(acc, zeta_.encoding());
  }
  const Enc half = f.inv(2);
  cas_.resize(n_);
  for (std::uint64_t x = 0; x < n_; ++x) {
    const Enc up = zeta_pows_[x];
    const Enc down = zeta_pows_[(n_ - x) % n_];
    // sin(x) = (up - down) / (2j) = -j (up - down) / 2
    cas_[x] = {f.mul(f.add(up, down), half), f.mul(f.sub(down, up), half)};
  }
}

std::size_t TrigContext::reduce(std::int64_t x) const noexcept {
  const auto n = static_cast<std::int64_t>(n_);
  std::int64_t r = x % n;
  if (r < 0) r += n;
  return static_cast<std::size_t>(r);
}

GaussianElement ff_cos(const TrigContext& ctx, std::int64_t x) {
  return detail::cook(ctx.field(), {ctx.cas_table()[ctx.reduce(x)].re, 0});
}

GaussianElement ff_sin(const TrigContext& ctx, std::int64_t x) {
  return detail::cook(ctx.field(), {0, ctx.cas_table()[ctx.reduce(x)].im});
}

GaussianElement ff_cas(const TrigContext& ctx, std::int64_t x) {
  return detail::cook(ctx.field(), ctx.cas_table()[ctx.reduce(x)]);
}

CarrierMatrix carrier_matrix(const TrigContextPtr& ctx) {
  const std::size_t n = ctx->n();
  CarrierMatrix out{ctx, JMode::Abstract, {}};
  out.rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<GaussianElement> row;
    row.reserve(n);
    for (std::size_t k = 0; k < n; ++k) row.push_back(detail::cook(ctx->field(), ctx->cas_table()[i * k % n]));
    out.rows.push_back(std::move(row));
  }
  return out;
}

CarrierMatrix embed_j(const CarrierMatrix& matrix) {
  const FieldPtr& field = matrix.ctx->field();
  const auto qr = minus_one_is_qr(field->p());
  if (!qr.is_residue) {
    throw Error(ErrorCode::JNotEmbeddable, "-1 is not a square mod " + std::to_string(field->p()));
  }
  if (matrix.j_mode == JMode::Embedded) return matrix;
  const FieldElement r = FieldElement::from_int(field, static_cast<std::int64_t>(*qr.root));
  CarrierMatrix out{matrix.ctx, JMode::Embedded, {}};
  out.rows.reserve(matrix.rows.size());
  for (const auto& row : matrix.rows) {
    std::vector<GaussianElement> embedded;
    embedded.reserve(row.size());
    for (const auto& z : row) embedded.emplace_back(z.re() + r * z.im());
    out.rows.push_back(std::move(embedded));
  }
  return out;
}

namespace {

RawGauss inner(const FieldSpec& f, const CarrierMatrix& m, bool columns, std::size_t a, std::size_t b,
               bool conjugate) {
  RawGauss acc{};
  for (std::size_t k = 0; k < m.size(); ++k) {
    const RawGauss x = detail::raw(columns ? m.rows[k][a] : m.rows[a][k]);
    RawGauss y = detail::raw(columns ? m.rows[k][b] : m.rows[b][k]);
    if (conjugate) y = detail::conj(f, y);
    acc = detail::add(f, acc, detail::mul(f, x, y));
  }
  return acc;
}

}  // namespace

OrthogonalityReport verify_orthogonality(const CarrierMatrix& matrix) {
  const FieldPtr& field = matrix.ctx->field();
  const FieldSpec& f = *field;
  const std::size_t n = matrix.size();
  const RawGauss energy{f.from_int(static_cast<std::int64_t>(n)), 0};
  OrthogonalityReport report{FieldElement(field, energy.re), true, {}, true};
  for (bool columns : {false, true}) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        const RawGauss expected = a == b ? energy : RawGauss{};
        const RawGauss got = inner(f, matrix, columns, a, b, false);
        if (got != expected) {
          report.pass = false;
          report.failures.push_back({columns, a, b, detail::cook(field, got)});
        }
        if (inner(f, matrix, columns, a, b, true) != expected) report.conjugated_pass = false;
      }
    }
  }
  return report;
}

}  // namespace gdm
