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

#include "gdm/cosets.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>

namespace gdm {

using detail::RawGauss;

int mobius(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::NonPositive, "mobius requires n >= 1");
  int sign = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t irreducible_count(std::uint64_t q, std::uint64_t k) {
  if (q < 2 || k < 1) throw Error(ErrorCode::InvalidArgument, "irreducible_count requires q >= 2, k >= 1");
  // Positive and negative terms are summed separately to stay unsigned.
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  for (std::uint64_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    const int mu = mobius(static_cast<std::int64_t>(d));
    if (mu == 0) continue;
    const std::uint64_t term = checked_pow(q, k / d);
    (mu > 0 ? plus : minus) += term;
  }
  const std::uint64_t total = plus - minus;
  if (total % k != 0) throw Error(ErrorCode::InternalInconsistency, "necklace sum not divisible by k");
  return total / k;
}

std::uint64_t fourier_count_from_irreducibles(std::uint64_t p, std::uint64_t m) {
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d == 0) total += irreducible_count(p, d);
  }
  return total - 1;
}

namespace {

void check_coprime(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw Error(ErrorCode::NonPositive, "N must be >= 1");
  if (std::gcd(n, p) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(p) + ") != 1");
  }
}

// Orbits of the group generated by k -> p k (and k -> -k when `reciprocal`).
CosetPartition build(std::uint64_t n, std::uint64_t p, TransformKind kind, int sign, bool reciprocal) {
  check_coprime(n, p);
  CosetPartition part{n, p, kind, sign, reciprocal, {}, {}};
  std::vector<bool> seen(n, false);
  const std::uint64_t step = p % n;
  for (std::uint64_t leader = 0; leader < n; ++leader) {
    if (seen[leader]) continue;
    std::vector<std::uint64_t> members;
    // The Frobenius orbit of k is a cycle; the reciprocal orbit is the cycle of -k.
    for (std::uint64_t start : {leader, (n - leader) % n}) {
      if (seen[start]) continue;
      for (std::uint64_t k = start; !seen[k]; k = step * k % n) {
        seen[k] = true;
        members.push_back(k);
      }
      if (!reciprocal) break;
    }
    std::sort(members.begin(), members.end());
    part.leaders.push_back(members.front());
    part.cosets.push_back(std::move(members));
  }
  return part;
}

}  // namespace

std::vector<std::uint64_t> CosetPartition::orbit_order(std::uint64_t leader) const {
  const auto it = std::find(leaders.begin(), leaders.end(), leader);
  if (it == leaders.end()) throw Error(ErrorCode::InvalidArgument, std::to_string(leader) + " is not a leader");
  const auto& coset = cosets[static_cast<std::size_t>(it - leaders.begin())];
  const std::uint64_t step = sign < 0 ? n - p % n : p % n;
  std::vector<std::uint64_t> out;
  auto walk = [&](std::uint64_t start) {
    std::uint64_t k = start;
    do {
      out.push_back(k);
      k = step * k % n;
    } while (k != start);
  };
  walk(leader);
  if (out.size() < coset.size()) walk((n - leader) % n);
  return out;
}

CosetPartition fourier_cosets(std::uint64_t n, std::uint64_t p) {
  return build(n, p, TransformKind::Fourier, 1, false);
}

CosetPartition hartley_cosets(std::uint64_t n, std::uint64_t p) {
  return build(n, p, TransformKind::Hartley, hartley_sign(p), true);
}

CosetPartition transmission_partition(std::uint64_t n, std::uint64_t p, TransformKind kind) {
  if (kind == TransformKind::Fourier) return fourier_cosets(n, p);
  if (hartley_sign(p) < 0) return hartley_cosets(n, p);
  return build(n, p, TransformKind::Hartley, 1, false);
}

std::uint64_t vh_closed_form(std::uint64_t v_f, std::uint64_t n) {
  const std::uint64_t odd = n % 2;
  if (v_f < odd || (v_f - odd) % 2 != 0) {
    throw Error(ErrorCode::FormulaInapplicable,
                "(" + std::to_string(v_f) + " - " + std::to_string(odd) + ")/2 is not an integer");
  }
  return (v_f - odd) / 2 + 1;
}

CosetEstimates coset_estimates(std::uint64_t n, std::uint64_t m, std::optional<std::uint64_t> p) {
  if (m == 0) throw Error(ErrorCode::NonPositive, "m must be >= 1");
  CosetEstimates out;
  out.vf_est = (n + m - 1) / m;
  // ceil(vf/2 + 1) = ceil(vf/2) + 1
  out.vh_est = (out.vf_est + 1) / 2 + 1;
  if (p) out.off_design = checked_pow(*p, m) - 1 != n;
  return out;
}

namespace {

void check_matches(const TrigContext& ctx, TransformKind kind, const CosetPartition& part) {
  if (part.n != ctx.n() || part.p != ctx.field()->p() || part.kind != kind) {
    throw Error(ErrorCode::PartitionMismatch, "partition does not match the spectrum's N, p or kind");
  }
}

}  // namespace

LineFrame compress_spectrum(const Spectrum& spectrum, const CosetPartition& part) {
  if (!spectrum.ctx) throw Error(ErrorCode::InvalidArgument, "missing trig context");
  check_matches(*spectrum.ctx, spectrum.kind, part);
  const auto report = verify_conjugacy(spectrum);
  if (!report.pass) {
    throw Error(ErrorCode::NotBaseFieldSpectrum,
                std::to_string(report.violations.size()) + " components violate the conjugacy laws");
  }
  LineFrame out{spectrum.ctx, spectrum.kind, part.leaders, {}};
  out.values.reserve(part.leaders.size());
  for (auto leader : part.leaders) out.values.push_back(spectrum.values[leader]);
  return out;
}

Spectrum expand_spectrum(const LineFrame& frame, const CosetPartition& part) {
  if (!frame.ctx) throw Error(ErrorCode::InvalidArgument, "missing trig context");
  if (frame.values.size() != part.count()) {
    throw Error(ErrorCode::LeaderCountMismatch,
                "frame has " + std::to_string(frame.values.size()) + " components, partition has " +
                    std::to_string(part.count()) + " cosets");
  }
  if (frame.leaders != part.leaders) throw Error(ErrorCode::PartitionMismatch, "leader indices differ");
  const TrigContext& ctx = *frame.ctx;
  check_matches(ctx, frame.kind, part);
  const FieldSpec& f = *ctx.field();
  const std::uint64_t n = part.n;
  const std::uint64_t step = part.sign < 0 ? n - part.p % n : part.p % n;

  std::vector<std::optional<RawGauss>> slots(n);
  auto assign = [&](std::uint64_t k, RawGauss value, std::deque<std::uint64_t>& todo) {
    if (!slots[k]) {
      slots[k] = value;
      todo.push_back(k);
    } else if (*slots[k] != value) {
      throw Error(ErrorCode::InternalInconsistency, "index " + std::to_string(k) + " received two values");
    }
  };
  for (std::size_t c = 0; c < part.count(); ++c) {
    std::deque<std::uint64_t> todo;
    assign(part.leaders[c], detail::raw(frame.values[c]), todo);
    while (!todo.empty()) {
      const std::uint64_t k = todo.front();
      todo.pop_front();
      const RawGauss value = *slots[k];
      assign(step * k % n, detail::pow(f, value, f.p()), todo);
      if (part.reciprocal) assign((n - k) % n, detail::conj(f, value), todo);
    }
  }
  Spectrum out{frame.ctx, frame.kind, {}};
  out.values.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    if (!slots[k]) throw Error(ErrorCode::InternalInconsistency, "index " + std::to_string(k) + " never filled");
    out.values.push_back(detail::cook(ctx.field(), *slots[k]));
  }
  return out;
}

}  // namespace gdm
