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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "configs.hpp"
#include "gdm/io.hpp"
#include "gdm/transforms.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gdm;

namespace {

TrigContextPtr gf5() { return make_trig_context(make_field(5, 1), 4); }

std::vector<std::string> text(const std::vector<GaussianElement>& values) {
  std::vector<std::string> out;
  for (const auto& z : values) out.push_back(format_element(z));
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("FFFT over GF(5)") {
  const auto ctx = gf5();
  // Oracle: F_k = sum_i v_i 2^(k i) mod 5 with plain integers.
  const std::vector<std::int64_t> v{4, 0, 1, 2};
  std::vector<std::string> expected;
  for (std::int64_t k = 0; k < 4; ++k) {
    std::int64_t acc = 0;
    for (std::int64_t i = 0; i < 4; ++i) acc += v[static_cast<std::size_t>(i)] * oracle::pow_mod(2, k * i, 5);
    expected.push_back(std::to_string(oracle::mod(acc, 5)));
  }
  CHECK(expected == Strings{"2", "4", "3", "2"});

  const auto F = ffft_forward(make_signal(ctx, v));
  CHECK(F.kind == TransformKind::Fourier);
  CHECK(text(F.values) == expected);
  CHECK(ffft_inverse(F).values == make_signal(ctx, v).values);

  CHECK(text(ffft_forward(make_signal(ctx, {0, 0, 0, 0})).values) == Strings{"0", "0", "0", "0"});
  CHECK(text(ffft_forward(make_signal(ctx, {1, 0, 0, 0})).values) == Strings{"1", "1", "1", "1"});
  const Spectrum ones{ctx, TransformKind::Fourier, make_signal(ctx, {1, 1, 1, 1}).values};
  CHECK(text(ffft_inverse(ones).values) == Strings{"1", "0", "0", "0"});
}

TEST_CASE("FFHT over GF(5) reproduces the multiplexed example") {
  const auto ctx = gf5();
  const auto V = ffht_forward(make_signal(ctx, {4, 0, 1, 2}));
  CHECK(V.kind == TransformKind::Hartley);
  CHECK(text(V.values) == Strings{"2", "3+j4", "3", "3+j1"});
  CHECK(text(ffht_inverse(V).values) == Strings{"4", "0", "1", "2"});
  CHECK(text(ffht_forward(make_signal(ctx, {0, 0, 0, 0})).values) == Strings{"0", "0", "0", "0"});
  CHECK(text(ffht_forward(make_signal(ctx, {1, 0, 0, 0})).values) == Strings{"1", "1", "1", "1"});
  const Spectrum zero{ctx, TransformKind::Hartley, make_signal(ctx, {0, 0, 0, 0}).values};
  CHECK(text(ffht_inverse(zero).values) == Strings{"0", "0", "0", "0"});
}

TEST_CASE("FFHT matches a brute-force sum over prime fields") {
  for (std::int64_t p : {7, 11, 13}) {
    const auto n = static_cast<std::uint64_t>(p - 1);
    const auto ctx = make_trig_context(make_field(p, 1), n);
    const auto zeta = static_cast<std::int64_t>(ctx->zeta().encoding());
    std::mt19937 rng(static_cast<unsigned>(p));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> v(n);
      for (auto& x : v) x = static_cast<std::int64_t>(rng() % static_cast<unsigned>(p));
      const auto V = ffht_forward(make_signal(ctx, v));
      for (std::size_t k = 0; k < n; ++k) {
        oracle::Gi acc;
        for (std::size_t i = 0; i < n; ++i) {
          const auto c = oracle::cas(zeta, static_cast<std::int64_t>(k * i), static_cast<std::int64_t>(n), p);
          acc.re = oracle::mod(acc.re + v[i] * c.re, p);
          acc.im = oracle::mod(acc.im + v[i] * c.im, p);
        }
        CHECK(V.values[k] == GaussianElement(ctx->field(), static_cast<Enc>(acc.re), static_cast<Enc>(acc.im)));
      }
    }
  }
}

TEST_CASE("inverse transforms reject the wrong kind and length") {
  const auto ctx = gf5();
  const auto F = ffft_forward(make_signal(ctx, {1, 2, 3, 4}));
  const auto V = ffht_forward(make_signal(ctx, {1, 2, 3, 4}));
  CHECK_ERROR(ffht_inverse(F), KindMismatch);
  CHECK_ERROR(ffft_inverse(V), KindMismatch);
  CHECK_ERROR(make_signal(ctx, {1, 2, 3}), LengthMismatch);
  CHECK_ERROR(ffht_forward(SignalVector{ctx, {GaussianElement::one(ctx->field())}}), LengthMismatch);
  const auto other = make_field(7, 1);
  CHECK_ERROR(ffht_forward(SignalVector{ctx, std::vector<GaussianElement>(4, GaussianElement::one(other))}),
              SpecMismatch);
}

TEST_CASE("GI(27) Hartley round trip on 500 random GF(3) vectors") {
  const auto ctx = make_trig_context(make_field(3, 3), 26);
  std::mt19937_64 rng(500);
  for (int t = 0; t < 500; ++t) {
    std::vector<std::int64_t> v(26);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % 3);
    const auto sig = make_signal(ctx, v);
    REQUIRE(ffht_inverse(ffht_forward(sig)).values == sig.values);
  }
}

TEST_CASE("conjugacy laws") {
  const auto ctx = make_trig_context(make_field(3, 3), 26);
  std::mt19937_64 rng(7);
  std::vector<std::int64_t> v(26);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % 3);
  const auto V = ffht_forward(make_signal(ctx, v));
  CHECK(verify_conjugacy(V).pass);
  CHECK(verify_conjugacy(ffft_forward(make_signal(ctx, v))).pass);

  // Orbit of index 1 under k -> -3k mod 26
  std::vector<std::size_t> orbit;
  std::size_t k = 1;
  do {
    orbit.push_back(k);
    k = ctx->reduce(-3 * static_cast<std::int64_t>(k));
  } while (k != 1);
  CHECK(orbit == std::vector<std::size_t>{1, 23, 9, 25, 3, 17});
  for (auto idx : orbit) CHECK(V.values[idx].pow(3) == V.values[ctx->reduce(-3 * static_cast<std::int64_t>(idx))]);

  const Spectrum zero{ctx, TransformKind::Hartley, make_signal(ctx, std::vector<std::int64_t>(26, 0)).values};
  CHECK(verify_conjugacy(zero).pass);

  // Perturb one component; both sides of every law touching it are recomputed.
  auto corrupted = V;
  corrupted.values[5] = corrupted.values[5] + GaussianElement::one(ctx->field());
  const auto report = verify_conjugacy(corrupted);
  CHECK_FALSE(report.pass);
  std::vector<std::size_t> expected;
  for (std::size_t i = 0; i < 26; ++i) {
    const auto& x = corrupted.values;
    const bool frob = x[i].pow(3) != x[ctx->reduce(-3 * static_cast<std::int64_t>(i))];
    const bool mirror = x[i].conj() != x[(26 - i) % 26];
    bool hit = frob || mirror;
    for (std::size_t j = 0; j < 26 && !hit; ++j) {
      if (ctx->reduce(-3 * static_cast<std::int64_t>(j)) == i && x[j].pow(3) != x[i]) hit = true;
    }
    if (hit) expected.push_back(i);
  }
  CHECK(report.violations == expected);
  CHECK(std::find(report.violations.begin(), report.violations.end(), 5u) != report.violations.end());

  // A complex-valued Fourier spectrum cannot come from a GF(p) signal.
  auto fourier = ffft_forward(make_signal(ctx, v));
  fourier.values[0] = fourier.values[0] + GaussianElement::j(ctx->field());
  const auto fr = verify_conjugacy(fourier);
  CHECK_FALSE(fr.pass);
  CHECK(fr.violations.front() == 0);
}

TEST_CASE("transform properties in every shipped configuration") {
  for (const auto& c : kConfigs) {
    CAPTURE(c.p);
    CAPTURE(c.m);
    CAPTURE(c.n);
    const auto ctx = make_trig_context(make_field(c.p, c.m), c.n);
    const auto field = ctx->field();
    const FieldElement n_elem = FieldElement::from_int(field, static_cast<std::int64_t>(c.n));
    const FieldElement half = FieldElement::from_int(field, 2).inverse();
    const GaussianElement inv_two_j = (FieldElement::from_int(field, 2) * GaussianElement::j(field)).inverse();
    std::mt19937_64 rng(c.n * 31 + static_cast<std::uint64_t>(c.p));
    for (int t = 0; t < 40; ++t) {
      std::vector<std::int64_t> a(c.n), b(c.n);
      for (auto& x : a) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(c.p));
      for (auto& x : b) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(c.p));
      const auto u = make_signal(ctx, a);
      const auto v = make_signal(ctx, b);
      const auto F = ffft_forward(v);
      const auto V = ffht_forward(v);
      CHECK(ffft_inverse(F).values == v.values);
      CHECK(ffht_inverse(V).values == v.values);
      CHECK(verify_conjugacy(F).pass);
      CHECK(verify_conjugacy(V).pass);
      for (const auto& z : F.values) CHECK(z.is_real());

      // linearity
      const FieldElement s = FieldElement::from_int(field, static_cast<std::int64_t>(rng() % 97));
      const FieldElement r = FieldElement::from_int(field, static_cast<std::int64_t>(rng() % 97));
      SignalVector mix{ctx, {}};
      for (std::size_t i = 0; i < c.n; ++i) mix.values.push_back(s * u.values[i] + r * v.values[i]);
      const auto Fu = ffft_forward(u), Fm = ffft_forward(mix);
      const auto Vu = ffht_forward(u), Vm = ffht_forward(mix);
      for (std::size_t k = 0; k < c.n; ++k) {
        CHECK(Fm.values[k] == s * Fu.values[k] + r * F.values[k]);
        CHECK(Vm.values[k] == s * Vu.values[k] + r * V.values[k]);
      }

      // Hartley kernel is self-inverse up to N
      const auto twice = ffht_forward(SignalVector{ctx, V.values});
      for (std::size_t i = 0; i < c.n; ++i) CHECK(twice.values[i] == n_elem * v.values[i]);

      // cas = cos + sin relates the two spectra
      for (std::size_t k = 0; k < c.n; ++k) {
        const auto& fk = F.values[k];
        const auto& fm = F.values[(c.n - k) % c.n];
        CHECK(V.values[k] == half * (fk + fm) + (fk - fm) * inv_two_j);
      }

      // Energy identities (unconjugated): sum V_k^2 = N sum v_i^2 and
      // sum V_k V_{N-k} = N sum v_i v_{N-i}.
      GaussianElement lhs_sq = GaussianElement::zero(field), rhs_sq = lhs_sq, lhs_mir = lhs_sq, rhs_mir = lhs_sq;
      for (std::size_t k = 0; k < c.n; ++k) {
        lhs_sq = lhs_sq + V.values[k] * V.values[k];
        rhs_sq = rhs_sq + v.values[k] * v.values[k];
        lhs_mir = lhs_mir + V.values[k] * V.values[(c.n - k) % c.n];
        rhs_mir = rhs_mir + v.values[k] * v.values[(c.n - k) % c.n];
      }
      CHECK(lhs_sq == n_elem * rhs_sq);
      CHECK(lhs_mir == n_elem * rhs_mir);
    }
  }
}
