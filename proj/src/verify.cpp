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

#include "gdm/verify.hpp"

#include <random>
#include <sstream>

namespace gdm {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ == 0) first_ = what;
  }

  PropertyResult result() const {
    std::ostringstream detail;
    detail << checks_ << " checks";
    if (failures_ > 0) detail << ", " << failures_ << " failed; first: " << first_;
    return {name_, failures_ == 0, detail.str()};
  }

 private:
  std::string name_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::vector<std::int64_t> residues(const UserFrame& frame) { return {frame.symbols.begin(), frame.symbols.end()}; }

std::string frame_str(const UserFrame& frame) {
  std::string out = "(";
  for (std::size_t i = 0; i < frame.symbols.size(); ++i) out += (i ? "," : "") + std::to_string(frame.symbols[i]);
  return out + ")";
}

GaussianElement sum_of_products(const std::vector<GaussianElement>& a, const std::vector<GaussianElement>& b) {
  GaussianElement acc = GaussianElement::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

}  // namespace

std::vector<UserFrame> sample_frames(std::uint64_t p, std::uint64_t n, std::uint64_t seed, std::size_t trials) {
  std::vector<UserFrame> frames;
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::uint64_t i = 0; i < n && exhaustive; ++i) {
    total *= p;
    exhaustive = total <= trials;
  }
  if (exhaustive) {
    for (std::uint64_t code = 0; code < total; ++code) {
      UserFrame frame;
      std::uint64_t rest = code;
      for (std::uint64_t i = 0; i < n; ++i) {
        frame.symbols.push_back(static_cast<std::uint32_t>(rest % p));
        rest /= p;
      }
      frames.push_back(std::move(frame));
    }
    return frames;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> symbol(0, static_cast<std::uint32_t>(p - 1));
  for (std::size_t t = 0; t < trials; ++t) {
    UserFrame frame;
    for (std::uint64_t i = 0; i < n; ++i) frame.symbols.push_back(symbol(rng));
    frames.push_back(std::move(frame));
  }
  return frames;
}

std::vector<PropertyResult> run_property_suite(const MuxConfig& cfg, std::uint64_t seed, std::size_t trials) {
  const TrigContextPtr& ctx = cfg.ctx;
  const FieldPtr& field = ctx->field();
  const std::uint64_t p = field->p();
  const std::uint64_t n = ctx->n();
  const auto sn = static_cast<std::int64_t>(n);
  const int sign = hartley_sign(p);
  std::vector<PropertyResult> out;

  {
    Tally t("field.fermat");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Enc> pick(1, field->size() - 1);
    const bool exhaustive = field->size() <= 3125;
    const std::uint64_t count = exhaustive ? field->size() - 1 : trials;
    for (std::uint64_t i = 0; i < count; ++i) {
      const FieldElement x(field, exhaustive ? static_cast<Enc>(i + 1) : pick(rng));
      t.check(x.pow(field->size() - 1).is_one(), "x=" + std::to_string(x.encoding()));
    }
    out.push_back(t.result());
  }

  const GaussianElement one = GaussianElement::one(field);
  const FieldElement two = FieldElement::from_int(field, 2);
  {
    Tally circle("trig.unit_circle");
    Tally parity("trig.parity");
    Tally frob("trig.kernel_frobenius");
    for (std::int64_t x = 0; x < sn; ++x) {
      const auto c = ff_cos(*ctx, x);
      const auto s = ff_sin(*ctx, x);
      const std::string at = "x=" + std::to_string(x);
      circle.check(c * c + s * s == one, at);
      parity.check(ff_cos(*ctx, -x) == c && ff_sin(*ctx, -x) == -s &&
                       ff_cas(*ctx, x) + ff_cas(*ctx, -x) == two * c,
                   at);
      frob.check(ff_cas(*ctx, x).pow(static_cast<std::int64_t>(p)) ==
                     ff_cas(*ctx, sign * static_cast<std::int64_t>(p) * x),
                 at);
    }
    out.push_back(circle.result());
    out.push_back(parity.result());
    out.push_back(frob.result());
  }

  {
    const CarrierMatrix matrix = carrier_matrix(ctx);
    Tally sym("trig.kernel_symmetry");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i + 1; k < n; ++k) {
        sym.check(matrix.rows[i][k] == matrix.rows[k][i], "(" + std::to_string(i) + "," + std::to_string(k) + ")");
      }
    }
    out.push_back(sym.result());
    const auto report = verify_orthogonality(matrix);
    Tally orth("trig.orthogonality");
    orth.check(report.pass, std::to_string(report.failures.size()) + " failing pairs");
    out.push_back(orth.result());
  }

  {
    Tally part("cosets.partition");
    const auto fourier = fourier_cosets(n, p);
    const auto hartley = hartley_cosets(n, p);
    for (const auto* c : {&fourier, &hartley, &cfg.partition}) {
      std::vector<int> hits(n, 0);
      for (const auto& coset : c->cosets) {
        for (auto k : coset) ++hits[k];
      }
      for (std::size_t k = 0; k < n; ++k) part.check(hits[k] == 1, "index " + std::to_string(k));
    }
    out.push_back(part.result());

    Tally coarse("cosets.hartley_coarser");
    std::vector<std::size_t> owner(n);
    for (std::size_t c = 0; c < hartley.count(); ++c) {
      for (auto k : hartley.cosets[c]) owner[k] = c;
    }
    for (const auto& coset : fourier.cosets) {
      bool same = true;
      for (auto k : coset) same = same && owner[k] == owner[coset.front()];
      coarse.check(same, "coset of " + std::to_string(coset.front()));
    }
    out.push_back(coarse.result());
  }

  Tally ffft_rt("transforms.ffft_round_trip");
  Tally ffht_rt("transforms.ffht_round_trip");
  Tally self_inv("transforms.hartley_self_inverse");
  Tally consistency("transforms.fourier_hartley_consistency");
  Tally parseval("transforms.parseval");
  Tally linear("transforms.linearity");
  Tally conj("transforms.conjugacy");
  Tally compress("cosets.compress_expand");
  Tally mux_rt("gdm.mux_demux");
  Tally pipeline("gdm.pipeline");

  const FieldElement n_elem = FieldElement::from_int(field, sn);
  const FieldElement half = two.inverse();
  const GaussianElement inv_two_j = (two * GaussianElement::j(field)).inverse();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::int64_t> scalar(0, static_cast<std::int64_t>(p) - 1);

  const auto frames = sample_frames(p, n, seed, trials);
  for (std::size_t t = 0; t < frames.size(); ++t) {
    const UserFrame& frame = frames[t];
    const std::string at = frame_str(frame);
    const SignalVector v = make_signal(ctx, residues(frame));
    const Spectrum F = ffft_forward(v);
    const Spectrum V = ffht_forward(v);
    ffft_rt.check(ffft_inverse(F).values == v.values, at);
    ffht_rt.check(ffht_inverse(V).values == v.values, at);

    const Spectrum twice = ffht_forward({ctx, V.values});
    bool scaled = true;
    for (std::size_t i = 0; i < n; ++i) scaled = scaled && twice.values[i] == n_elem * v.values[i];
    self_inv.check(scaled, at);

    bool consistent = true;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& fk = F.values[k];
      const auto& fm = F.values[(n - k) % n];
      consistent = consistent && V.values[k] == half * (fk + fm) + (fk - fm) * inv_two_j;
    }
    consistency.check(consistent, at);
    parseval.check(sum_of_products(V.values, V.values) == n_elem * sum_of_products(v.values, v.values), at);

    // Pair each frame with the next one for linearity.
    const UserFrame& other = frames[(t + 1) % frames.size()];
    const SignalVector u = make_signal(ctx, residues(other));
    const FieldElement a = FieldElement::from_int(field, scalar(rng));
    const FieldElement b = FieldElement::from_int(field, scalar(rng));
    SignalVector mix{ctx, {}};
    for (std::size_t i = 0; i < n; ++i) mix.values.push_back(a * u.values[i] + b * v.values[i]);
    for (TransformKind kind : {TransformKind::Fourier, TransformKind::Hartley}) {
      const auto tu = forward(u, kind);
      const auto tv = forward(v, kind);
      const auto tm = forward(mix, kind);
      bool ok = true;
      for (std::size_t k = 0; k < n; ++k) ok = ok && tm.values[k] == a * tu.values[k] + b * tv.values[k];
      linear.check(ok, std::string(kind_name(kind)) + " " + at);
    }

    conj.check(verify_conjugacy(F).pass && verify_conjugacy(V).pass, at);
    const Spectrum line = cfg.kind == TransformKind::Fourier ? F : V;
    try {
      compress.check(expand_spectrum(compress_spectrum(line, cfg.partition), cfg.partition).values == line.values, at);
    } catch (const Error& e) {
      compress.check(false, at + ": " + e.what());
    }
    mux_rt.check(demux(cfg, mux(cfg, frame)) == frame, at);
    try {
      const auto result = transmit_pipeline(cfg, frame);
      pipeline.check(result.recovered == frame && result.line.values.size() == cfg.partition.count(), at);
    } catch (const Error& e) {
      pipeline.check(false, at + ": " + e.what());
    }
  }
  for (const auto* tally : {&ffft_rt, &ffht_rt, &self_inv, &consistency, &parseval, &linear, &conj, &compress,
                            &mux_rt, &pipeline}) {
    out.push_back(tally->result());
  }

  {
    Tally crosstalk("gdm.zero_crosstalk");
    for (std::size_t user = 0; user < n; ++user) {
      UserFrame single{std::vector<std::uint32_t>(n, 0)};
      single.symbols[user] = 1;
      const Spectrum line = mux(cfg, single);
      const auto back = demux(cfg, line);
      crosstalk.check(back == single, "user " + std::to_string(user));
    }
    out.push_back(crosstalk.result());
  }

  {
    Tally metrics("gdm.metrics_consistency");
    const std::uint64_t v = cfg.partition.count();
    const auto gain = gdm_gain(n, v);
    const auto m = table2_metrics(p, n, v, cfg.symbol_period, 1.0);
    metrics.check(gain.channels + m.processing_gain == n, "channels + v != N");
    metrics.check(checked_mul(gain.bandwidth_ratio.num, v) == checked_mul(n, gain.bandwidth_ratio.den),
                  "gamma * B_GDM != B_TDM");
    metrics.check(gamma_cc(n, v) == Rational::make(n, cfg.partition.count()), "compression ratio != gamma");
    out.push_back(metrics.result());
  }
  return out;
}

}  // namespace gdm
