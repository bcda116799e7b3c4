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

#include <cmath>
#include <random>

#include "gdm/io.hpp"
#include "gdm/mux.hpp"
#include "gdm/verify.hpp"
#include "configs.hpp"
#include "support.hpp"

using namespace gdm;

namespace {

using Strings = std::vector<std::string>;

Strings text(const std::vector<GaussianElement>& values) {
  Strings out;
  for (const auto& z : values) out.push_back(format_element(z));
  return out;
}

UserFrame random_frame(std::uint64_t n, std::uint32_t p, std::mt19937_64& rng) {
  UserFrame f;
  f.symbols.resize(n);
  for (auto& s : f.symbols) s = static_cast<std::uint32_t>(rng() % p);
  return f;
}

}  // namespace

TEST_CASE("galois_modulate scales a carrier row") {
  const auto ctx = make_trig_context(make_field(5, 1), 4);
  const auto carrier = carrier_matrix(ctx).rows[1];
  CHECK(text(carrier) == Strings{"1", "0+j3", "4", "0+j2"});

  const auto field = ctx->field();
  const std::vector<GaussianElement> four(4, GaussianElement(field, 4, 0));
  CHECK(text(galois_modulate(four, carrier)) == Strings{"4", "0+j2", "1", "0+j3"});

  const std::vector<GaussianElement> ones(4, GaussianElement::one(field));
  CHECK(galois_modulate(ones, carrier) == carrier);
  const std::vector<GaussianElement> zeros(4, GaussianElement::zero(field));
  CHECK(galois_modulate(zeros, carrier) == zeros);

  const std::vector<GaussianElement> three(3, GaussianElement::one(field));
  CHECK_ERROR(galois_modulate(three, carrier), LengthMismatch);
}

TEST_CASE("mux and demux over GF(5)") {
  const auto cfg = make_mux_config(5, 1, 4);
  CHECK(cfg.users() == 4);
  CHECK(cfg.partition.count() == 4);
  const UserFrame frame{{4, 0, 1, 2}};
  const auto line = mux(cfg, frame);
  CHECK(text(line.values) == Strings{"2", "3+j4", "3", "3+j1"});
  CHECK(demux(cfg, line) == frame);

  CHECK(text(mux(cfg, UserFrame{{0, 0, 0, 0}}).values) == Strings{"0", "0", "0", "0"});
  CHECK_ERROR(mux(cfg, UserFrame{{5, 0, 0, 0}}), NotBaseField);
  CHECK_ERROR(mux(cfg, UserFrame{{1, 0, 0}}), LengthMismatch);

  std::uint64_t checked = 0;
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b)
      for (std::uint32_t c = 0; c < 5; ++c)
        for (std::uint32_t d = 0; d < 5; ++d) {
          const UserFrame f{{a, b, c, d}};
          REQUIRE(demux(cfg, mux(cfg, f)) == f);
          REQUIRE(transmit_pipeline(cfg, f).recovered == f);
          ++checked;
        }
  CHECK(checked == 625);
}

TEST_CASE("mux round trips over GF(27), N = 26") {
  std::mt19937_64 rng(26);
  for (auto kind : {TransformKind::Hartley, TransformKind::Fourier}) {
    const auto cfg = make_mux_config(3, 3, 26, kind);
    for (int t = 0; t < 1000; ++t) {
      const auto f = random_frame(26, 3, rng);
      REQUIRE(demux(cfg, mux(cfg, f)) == f);
    }
  }
}

TEST_CASE("a single active user causes no crosstalk") {
  const auto cfg = make_mux_config(3, 3, 26);
  for (std::uint64_t user = 0; user < 26; ++user) {
    for (std::uint32_t s = 1; s < 3; ++s) {
      UserFrame f{std::vector<std::uint32_t>(26, 0)};
      f.symbols[user] = s;
      const auto out = demux(cfg, mux(cfg, f));
      REQUIRE(out == f);
    }
  }
}

TEST_CASE("transmit pipeline sends one component per coset") {
  std::mt19937_64 rng(6);
  const auto cfg = make_mux_config(3, 3, 26);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_frame(26, 3, rng);
    const auto result = transmit_pipeline(cfg, f);
    REQUIRE(result.line.values.size() == 6);
    REQUIRE(result.recovered == f);
  }
  CHECK(transmit_pipeline(cfg, UserFrame{std::vector<std::uint32_t>(26, 0)}).line.leaders ==
        std::vector<std::uint64_t>{0, 1, 2, 4, 5, 13});
  const auto fourier = make_mux_config(3, 3, 26, TransformKind::Fourier);
  CHECK(transmit_pipeline(fourier, random_frame(26, 3, rng)).line.values.size() == 10);
  const auto gf5 = make_mux_config(5, 1, 4);
  CHECK(transmit_pipeline(gf5, UserFrame{{4, 0, 1, 2}}).line.values.size() == 4);
}

TEST_CASE("demux rejects a spectrum that does not come from GF(p) symbols") {
  const auto cfg = make_mux_config(3, 3, 26);
  auto line = mux(cfg, UserFrame{std::vector<std::uint32_t>(26, 1)});
  line.values[3] = line.values[3] + GaussianElement::one(cfg.ctx->field());
  CHECK_ERROR(demux(cfg, line), NotBaseField);

  auto fourier = line;
  fourier.kind = TransformKind::Fourier;
  CHECK_ERROR(demux(cfg, fourier), KindMismatch);

  const auto other = make_mux_config(5, 1, 4);
  CHECK_ERROR(demux(other, line), SpecMismatch);
}

TEST_CASE("compression ratio and gain") {
  CHECK(gamma_cc(26, 6) == Rational{13, 3});
  CHECK(gamma_cc(26, 6).str() == "13/3");
  CHECK(gamma_cc(26, 6).value() == doctest::Approx(4.3333333333));
  CHECK(gamma_cc(4, 4) == Rational{1, 1});
  CHECK(gamma_cc(4, 4).str() == "1");
  CHECK_ERROR(gamma_cc(26, 0), ZeroCosets);
  CHECK_ERROR(Rational::make(1, 0), DivisionByZero);

  const auto g = gdm_gain(26, 6);
  CHECK(g.channels == 20);
  CHECK(g.percent == Rational{1000, 13});
  CHECK(g.percent.value() == doctest::Approx(76.923).epsilon(1e-4));
  CHECK(g.bandwidth_ratio == Rational{13, 3});

  const auto f = gdm_gain(26, 10);
  CHECK(f.channels == 16);
  CHECK(f.percent == Rational{800, 13});
  CHECK(f.percent.value() == doctest::Approx(61.538).epsilon(1e-4));

  CHECK(gdm_gain(4, 4).channels == 0);
  CHECK(gdm_gain(4, 4).percent == Rational{0, 1});
}

TEST_CASE("link metrics") {
  const auto m = table2_metrics(3, 26, 6);
  CHECK(m.gamma_cc == Rational{13, 3});
  CHECK(m.processing_gain == 6);
  CHECK(m.channels_gained == 20);
  CHECK(m.rate_user_bps == doctest::Approx(std::log2(3.0)));
  CHECK(m.rate_bps == doctest::Approx(41.2).epsilon(1e-3));
  CHECK(m.bandwidth_tdm_hz == doctest::Approx(26));
  CHECK(m.bandwidth_gdm_hz == doctest::Approx(6));
  CHECK(m.eta_gdm == doctest::Approx(6.87).epsilon(1e-3));
  CHECK(m.eta_tdm == doctest::Approx(std::log2(3.0)));

  const auto even = table2_metrics(5, 4, 4);
  CHECK(even.bandwidth_gdm_hz == doctest::Approx(even.bandwidth_tdm_hz));
  CHECK(even.eta_gdm == doctest::Approx(even.eta_tdm));

  CHECK_ERROR(table2_metrics(2, 4, 4), EvenCharUnsupported);
  CHECK_ERROR(table2_metrics(3, 26, 6, 0.0), InvalidArgument);
}

TEST_CASE("Shannon bound") {
  CHECK(shannon_max_gamma(3, 0) == 0);
  CHECK(shannon_max_gamma(3, 15) == doctest::Approx(4 / std::log2(3.0)));
  CHECK(shannon_max_gamma(3, 15) == doctest::Approx(2.524).epsilon(1e-3));
  CHECK(shannon_min_snr(3, 13.0 / 3.0) == doctest::Approx(std::pow(3.0, 13.0 / 3.0) - 1));
  CHECK(shannon_min_snr(3, 13.0 / 3.0) == doctest::Approx(115.82).epsilon(1e-4));
  CHECK(shannon_min_snr(3, 0) == 0);
  CHECK_ERROR(shannon_max_gamma(3, -1), NegativeSnr);
  CHECK_ERROR(shannon_max_gamma(3, std::nan("")), NegativeSnr);

  double prev = -1;
  bool flipped = false;
  bool last = false;
  int flips = 0;
  for (int i = 0; i <= 400; ++i) {
    const double snr = i * 0.5;
    const double g = shannon_max_gamma(3, snr);
    CHECK(g > prev);
    prev = g;
    const bool ok = shannon_feasible(3, snr, 26, 6);
    if (i > 0 && ok != last) ++flips;
    if (ok) flipped = true;
    last = ok;
  }
  CHECK(flipped);
  CHECK(flips == 1);
  for (double gamma : {0.5, 1.0, 13.0 / 3.0, 7.0}) {
    CHECK(shannon_max_gamma(3, shannon_min_snr(3, gamma)) == doctest::Approx(gamma).epsilon(1e-9));
  }
}

TEST_CASE("property suite passes on every shipped configuration") {
  for (const auto& c : kConfigs) {
    for (auto kind : {TransformKind::Hartley, TransformKind::Fourier}) {
      const auto cfg = make_mux_config(c.p, c.m, c.n, kind);
      for (const auto& r : run_property_suite(cfg, 7, 200)) {
        INFO("p=" << c.p << " m=" << c.m << " n=" << c.n << " " << r.name << " " << r.detail);
        CHECK(r.pass);
      }
    }
  }
}
