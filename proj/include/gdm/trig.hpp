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
 * @file trig.hpp
 * @brief Finite-field cos/sin/cas and the N x N carrier matrix.
 *
 * With zeta of multiplicative order N in GF(p^m):
 *
 *     cos(x) = (zeta^x + zeta^-x) * 2^-1
 *     sin(x) = (zeta^x - zeta^-x) * (2j)^-1
 *     cas(x) = cos(x) + sin(x)
 *
 * Arguments are integers taken mod N. Row i of the carrier matrix is the
 * spreading waveform of user i: rows[i][k] = cas(i * k).
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gdm/detail/raw.hpp"
#include "gdm/field.hpp"

namespace gdm {

/// How j is represented: as a formal symbol adjoined to GF(p^m), or replaced
/// by a square root of -1 in GF(p) (only when p = 1 mod 4).
enum class JMode { Abstract, Embedded };

class TrigContext;
using TrigContextPtr = std::shared_ptr<const TrigContext>;

/// zeta defaults to the smallest-encoded element of order n.
TrigContextPtr make_trig_context(const FieldPtr& field, std::uint64_t n, std::optional<Enc> zeta = std::nullopt);

class TrigContext {
 public:
  const FieldPtr& field() const noexcept { return field_; }
  const FieldElement& zeta() const noexcept { return zeta_; }
  std::uint64_t n() const noexcept { return n_; }

  /// zeta^x for any integer x.
  Enc zeta_pow(std::int64_t x) const noexcept { return zeta_pows_[reduce(x)]; }
  /// Cached cas(x) for x in [0, N).
  const std::vector<detail::RawGauss>& cas_table() const noexcept { return cas_; }
  std::size_t reduce(std::int64_t x) const noexcept;

  struct Key {
   private:
    Key() = default;
    friend TrigContextPtr make_trig_context(const FieldPtr&, std::uint64_t, std::optional<Enc>);
  };
  TrigContext(Key, FieldElement zeta, std::uint64_t n);

 private:
  FieldPtr field_;
  FieldElement zeta_;
  std::uint64_t n_;
  std::vector<Enc> zeta_pows_;
  std::vector<detail::RawGauss> cas_;
};

GaussianElement ff_cos(const TrigContext& ctx, std::int64_t x);
GaussianElement ff_sin(const TrigContext& ctx, std::int64_t x);
GaussianElement ff_cas(const TrigContext& ctx, std::int64_t x);

struct CarrierMatrix {
  TrigContextPtr ctx;
  JMode j_mode = JMode::Abstract;
  std::vector<std::vector<GaussianElement>> rows;

  std::size_t size() const noexcept { return rows.size(); }
};

CarrierMatrix carrier_matrix(const TrigContextPtr& ctx);

/// Replaces every a + jb by a + r*b, r the smaller square root of -1 mod p.
CarrierMatrix embed_j(const CarrierMatrix& matrix);

struct OrthogonalityFailure {
  bool columns = false;  // false: row pair, true: column pair
  std::size_t first = 0;
  std::size_t second = 0;
  GaussianElement inner_product;
};

struct OrthogonalityReport {
  FieldElement energy;
  bool pass = false;
  std::vector<OrthogonalityFailure> failures;
  /// Same check with the second factor conjugated; informational only.
  bool conjugated_pass = false;
};

/// Plain (unconjugated) inner products of all row pairs and all column
/// pairs; passes iff they equal N * delta.
OrthogonalityReport verify_orthogonality(const CarrierMatrix& matrix);

}  // namespace gdm
