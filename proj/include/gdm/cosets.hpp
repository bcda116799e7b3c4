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
 * @file cosets.hpp
 * @brief Cyclotomic cosets of spectrum indices and leader-only compression.
 *
 * For a GF(p)-valued signal the spectrum components are tied together by
 * Frobenius (k -> p k) and, for Hartley spectra, by conjugation (k -> N - k).
 * Only one component per orbit ("coset leader", the smallest index) needs to
 * be sent; the rest are recovered by walking the orbit.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gdm/transforms.hpp"

namespace gdm {

struct CosetPartition {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  TransformKind kind = TransformKind::Fourier;
  /// Hartley Frobenius sign; +1 for Fourier partitions.
  int sign = 1;
  /// Whether reciprocal indices k and N - k share a coset.
  bool reciprocal = false;
  /// Sorted members, ordered by leader.
  std::vector<std::vector<std::uint64_t>> cosets;
  std::vector<std::uint64_t> leaders;

  std::size_t count() const noexcept { return cosets.size(); }
  /// Members of the coset led by `leader` in walk order: the orbit of
  /// k -> sign p k from the leader, then (if needed) the reciprocal orbit.
  std::vector<std::uint64_t> orbit_order(std::uint64_t leader) const;
};

int mobius(std::int64_t n);

/// Number of monic irreducible polynomials of degree k over GF(q).
std::uint64_t irreducible_count(std::uint64_t q, std::uint64_t k);

/// Coset count predicted for N = p^m - 1 by grouping the roots of x^N - 1 by
/// minimal polynomial: sum over d | m of irreducible_count(p, d), minus one
/// for the polynomial x.
std::uint64_t fourier_count_from_irreducibles(std::uint64_t p, std::uint64_t m);

/// Orbits of {0..N-1} under k -> p k mod N.
CosetPartition fourier_cosets(std::uint64_t n, std::uint64_t p);

/// Fourier cosets with each C_s merged with C_{N-s}.
CosetPartition hartley_cosets(std::uint64_t n, std::uint64_t p);

/// The partition a multiplexer actually uses for leader-only transmission.
/// Identical to fourier_cosets / hartley_cosets except for Hartley when
/// p = 1 mod 4, where the Frobenius-only orbits are used (kind stays Hartley).
CosetPartition transmission_partition(std::uint64_t n, std::uint64_t p, TransformKind kind);

/// (v_F - (N mod 2)) / 2 + 1, when exact and positive.
std::uint64_t vh_closed_form(std::uint64_t v_f, std::uint64_t n);

struct CosetEstimates {
  std::uint64_t vf_est = 0;
  std::uint64_t vh_est = 0;
  /// Set when p was supplied and N != p^m - 1.
  bool off_design = false;
};

/// Rule-of-thumb counts for N = p^m - 1: ceil(N/m) and ceil(ceil(N/m)/2 + 1).
CosetEstimates coset_estimates(std::uint64_t n, std::uint64_t m, std::optional<std::uint64_t> p = std::nullopt);

/// Leader-indexed spectrum components; what actually goes on the line.
struct LineFrame {
  TrigContextPtr ctx;
  TransformKind kind = TransformKind::Hartley;
  std::vector<std::uint64_t> leaders;
  std::vector<GaussianElement> values;
};

LineFrame compress_spectrum(const Spectrum& spectrum, const CosetPartition& part);
Spectrum expand_spectrum(const LineFrame& frame, const CosetPartition& part);

}  // namespace gdm
