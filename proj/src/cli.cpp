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

#include "gdm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "gdm/io.hpp"
#include "gdm/verify.hpp"

namespace gdm::cli {

namespace {

struct CliConfig {
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> m;
  std::optional<std::uint64_t> n;
  std::optional<std::string> kind;
  std::optional<Enc> zeta;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::string in_path;
  std::string out_path;
  bool embed_j = false;
  std::optional<double> snr;
  double symbol_period = 1.0;
  double user_bandwidth = 1.0;
};

std::string fixed(double x, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::string polynomial_text(const FieldSpec& f) {
  const auto& c = f.irreducible();
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (c[i] != 1 || i == 0) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

MuxConfig config_from_flags(const CliConfig& cfg) {
  if (!cfg.p) throw Error(ErrorCode::InvalidArgument, "--p is required");
  const TransformKind kind = parse_kind(cfg.kind.value_or("hartley"));
  return make_mux_config(*cfg.p, cfg.m.value_or(1), cfg.n, kind, cfg.zeta, cfg.symbol_period);
}

// The file header is authoritative; flags given alongside it must agree.
void check_flags_against(const CliConfig& cfg, const VectorFile& file) {
  const FieldSpec& f = *file.ctx->field();
  auto clash = [](const char* flag, const std::string& header) {
    throw Error(ErrorCode::SpecMismatch, std::string("--") + flag + " disagrees with input header (" + header + ")");
  };
  if (cfg.p && *cfg.p != static_cast<std::int64_t>(f.p())) clash("p", "p=" + std::to_string(f.p()));
  if (cfg.m && *cfg.m != static_cast<std::int64_t>(f.m())) clash("m", "m=" + std::to_string(f.m()));
  if (cfg.n && *cfg.n != file.ctx->n()) clash("n", "n=" + std::to_string(file.ctx->n()));
  if (cfg.zeta && *cfg.zeta != file.ctx->zeta().encoding()) {
    clash("zeta", "zeta=" + std::to_string(file.ctx->zeta().encoding()));
  }
  if (cfg.kind && parse_kind(*cfg.kind) != file.kind) clash("kind", "kind=" + std::string(kind_name(file.kind)));
}

class Io {
 public:
  Io(const CliConfig& cfg, std::istream& in, std::ostream& out) : cfg_(cfg), in_(in), out_(out) {}

  VectorFile read() {
    if (cfg_.in_path.empty()) return read_vector_file(in_);
    std::ifstream file(cfg_.in_path);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + cfg_.in_path);
    VectorFile parsed = read_vector_file(file);
    return parsed;
  }

  void write(const VectorFile& file) {
    if (cfg_.out_path.empty()) {
      write_vector_file(out_, file);
      return;
    }
    std::ofstream stream(cfg_.out_path);
    if (!stream) throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg_.out_path);
    write_vector_file(stream, file);
  }

  std::ostream& text() {
    if (cfg_.out_path.empty()) return out_;
    if (!file_) {
      file_.emplace(cfg_.out_path);
      if (!*file_) throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg_.out_path);
    }
    return *file_;
  }

 private:
  const CliConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<std::ofstream> file_;
};

int cmd_design(const CliConfig& cfg, Io& io) {
  const MuxConfig mux_cfg = config_from_flags(cfg);
  const FieldSpec& f = *mux_cfg.ctx->field();
  const std::uint64_t n = mux_cfg.users();
  const auto fourier = fourier_cosets(n, f.p());
  const auto hartley = hartley_cosets(n, f.p());
  const std::uint64_t v = mux_cfg.partition.count();
  const auto gain = gdm_gain(n, v);
  const auto metrics = table2_metrics(f.p(), n, v, cfg.symbol_period, cfg.user_bandwidth);
  const auto est = coset_estimates(n, f.m(), f.p());

  std::ostream& out = io.text();
  out << "field=GF(" << f.p() << "^" << f.m() << ") size=" << f.size() << " poly=" << f.polynomial_encoding()
      << " (" << polynomial_text(f) << ")\n";
  out << "n=" << n << '\n';
  out << "zeta=" << mux_cfg.ctx->zeta().encoding() << '\n';
  out << "kind=" << kind_name(mux_cfg.kind) << '\n';
  const auto qr = minus_one_is_qr(f.p());
  out << "minus_one_is_qr=" << (qr.is_residue ? "yes root=" + std::to_string(*qr.root) : std::string("no")) << '\n';
  out << "v_F=" << fourier.count() << '\n';
  out << "v_H=" << hartley.count() << '\n';
  out << "v_F_est=" << est.vf_est << '\n';
  out << "v_H_est=" << est.vh_est << '\n';
  out << "leaders=" << join(mux_cfg.partition.leaders, ",") << '\n';
  out << "cosets_transmitted=" << v << '\n';
  out << "gamma_cc=" << gain.bandwidth_ratio.str() << " (" << fixed(gain.bandwidth_ratio.value()) << ")\n";
  out << "processing_gain=" << metrics.processing_gain << '\n';
  out << "channels_gained=" << gain.channels << '\n';
  out << "gain_percent=" << gain.percent.str() << " (" << fixed(gain.percent.value(), 3) << "%)\n";
  out << "rate_user_bps=" << fixed(metrics.rate_user_bps) << '\n';
  out << "rate_bps=" << fixed(metrics.rate_bps) << '\n';
  out << "bandwidth_tdm_hz=" << fixed(metrics.bandwidth_tdm_hz) << '\n';
  out << "bandwidth_gdm_hz=" << fixed(metrics.bandwidth_gdm_hz) << '\n';
  out << "eta_tdm=" << fixed(metrics.eta_tdm) << '\n';
  out << "eta_gdm=" << fixed(metrics.eta_gdm) << '\n';
  if (cfg.snr) {
    out << "shannon_max_gamma=" << fixed(shannon_max_gamma(f.p(), *cfg.snr)) << '\n';
    out << "shannon_min_snr=" << fixed(shannon_min_snr(f.p(), gain.bandwidth_ratio.value())) << '\n';
    out << "feasible=" << (shannon_feasible(f.p(), *cfg.snr, n, v) ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int cmd_table(const CliConfig& cfg, Io& io) {
  const MuxConfig mux_cfg = config_from_flags(cfg);
  CarrierMatrix matrix = carrier_matrix(mux_cfg.ctx);
  if (cfg.embed_j) matrix = embed_j(matrix);
  std::ostream& out = io.text();
  for (const auto& row : matrix.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ' ';
      out << format_element(row[k]);
    }
    out << '\n';
  }
  return kExitOk;
}

void print_cosets(std::ostream& out, const char* title, const CosetPartition& part) {
  out << title << '\n';
  for (auto leader : part.leaders) {
    out << 'C' << leader << "=(" << join(part.orbit_order(leader), ",") << ")\n";
  }
}

int cmd_cosets(const CliConfig& cfg, Io& io) {
  if (!cfg.p) throw Error(ErrorCode::InvalidArgument, "--p is required");
  const FieldPtr field = make_field(*cfg.p, cfg.m.value_or(1));
  const std::uint64_t n = cfg.n.value_or(field->size() - 1);
  const auto fourier = fourier_cosets(n, field->p());
  const auto hartley = hartley_cosets(n, field->p());
  std::ostream& out = io.text();
  print_cosets(out, "FFFT cosets", fourier);
  print_cosets(out, "FFHT cosets", hartley);
  out << "v_F=" << fourier.count() << '\n';
  out << "v_H=" << hartley.count() << '\n';
  return kExitOk;
}

int cmd_mux(const CliConfig& cfg, Io& io) {
  const VectorFile file = io.read();
  check_flags_against(cfg, file);
  const MuxConfig mux_cfg = make_mux_config(file.ctx, file.kind, cfg.symbol_period);
  io.write(spectrum_file(mux(mux_cfg, to_frame(file))));
  return kExitOk;
}

int cmd_demux(const CliConfig& cfg, Io& io) {
  const VectorFile file = io.read();
  check_flags_against(cfg, file);
  const MuxConfig mux_cfg = make_mux_config(file.ctx, file.kind, cfg.symbol_period);
  io.write(frame_file(mux_cfg, demux(mux_cfg, to_spectrum(file))));
  return kExitOk;
}

int cmd_compress(const CliConfig& cfg, Io& io) {
  const VectorFile file = io.read();
  check_flags_against(cfg, file);
  const MuxConfig mux_cfg = make_mux_config(file.ctx, file.kind, cfg.symbol_period);
  io.write(line_file(compress_spectrum(to_spectrum(file), mux_cfg.partition)));
  return kExitOk;
}

int cmd_expand(const CliConfig& cfg, Io& io) {
  const VectorFile file = io.read();
  check_flags_against(cfg, file);
  const MuxConfig mux_cfg = make_mux_config(file.ctx, file.kind, cfg.symbol_period);
  io.write(spectrum_file(expand_spectrum(to_line(file), mux_cfg.partition)));
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, Io& io) {
  const MuxConfig mux_cfg = config_from_flags(cfg);
  const auto results = run_property_suite(mux_cfg, cfg.seed, cfg.trials);
  std::ostream& out = io.text();
  bool all = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    all = all && r.pass;
  }
  out << (all ? "all properties hold" : "some properties FAILED") << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

int cmd_metrics(const CliConfig& cfg, Io& io) {
  const MuxConfig mux_cfg = config_from_flags(cfg);
  const std::uint64_t p = mux_cfg.ctx->field()->p();
  const std::uint64_t n = mux_cfg.users();
  const std::uint64_t v = mux_cfg.partition.count();
  const auto m = table2_metrics(p, n, v, cfg.symbol_period, cfg.user_bandwidth);
  std::ostream& out = io.text();
  out << "n=" << n << " v=" << v << " kind=" << kind_name(mux_cfg.kind) << '\n';
  out << "gamma_cc=" << m.gamma_cc.str() << " (" << fixed(m.gamma_cc.value()) << ")\n";
  out << "processing_gain=" << m.processing_gain << '\n';
  out << "channels_gained=" << m.channels_gained << '\n';
  out << "gain_percent=" << m.gain_percent.str() << " (" << fixed(m.gain_percent.value(), 3) << "%)\n";
  out << "                one-user      tdm           gdm\n";
  out << "rate_bps        " << std::left << std::setw(14) << fixed(m.rate_user_bps) << std::setw(14)
      << fixed(m.rate_bps) << fixed(m.rate_bps) << '\n';
  out << "bandwidth_hz    " << std::setw(14) << fixed(cfg.user_bandwidth) << std::setw(14)
      << fixed(m.bandwidth_tdm_hz) << fixed(m.bandwidth_gdm_hz) << '\n';
  out << "eta_bits_s_hz   " << std::setw(14) << fixed(m.eta_tdm) << std::setw(14) << fixed(m.eta_tdm)
      << fixed(m.eta_gdm) << '\n'
      << std::right;
  if (cfg.snr) {
    out << "shannon_max_gamma=" << fixed(shannon_max_gamma(p, *cfg.snr)) << '\n';
    out << "shannon_min_snr=" << fixed(shannon_min_snr(p, m.gamma_cc.value())) << '\n';
    out << "feasible=" << (shannon_feasible(p, *cfg.snr, n, v) ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

void add_common_flags(CLI::App& sub, CliConfig& cfg) {
  sub.add_option("--p", cfg.p, "Field characteristic (odd prime)");
  sub.add_option("--m", cfg.m, "Extension degree (default 1)");
  sub.add_option("--n", cfg.n, "Number of users / transform length (default p^m - 1)");
  sub.add_option("--kind", cfg.kind, "Transform kind: fourier | hartley (default hartley)");
  sub.add_option("--zeta", cfg.zeta, "Encoding of the root of unity (default: smallest of order n)");
  sub.add_option("--seed", cfg.seed, "Seed for randomized checks");
  sub.add_option("--trials", cfg.trials, "Random frames per property");
  sub.add_option("--in", cfg.in_path, "Input file (default stdin)");
  sub.add_option("--out", cfg.out_path, "Output file (default stdout)");
  sub.add_flag("--embed-j", cfg.embed_j, "Replace j by a square root of -1 in GF(p)");
  sub.add_option("--snr", cfg.snr, "Linear signal-to-noise ratio for the Shannon bound");
  sub.add_option("--T", cfg.symbol_period, "Symbol period in seconds");
  sub.add_option("--B1", cfg.user_bandwidth, "Single-user bandwidth in Hz");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois-field division multiplexing toolkit", "gdmux"};
  app.require_subcommand(1);
  CliConfig cfg;

  using Handler = std::function<int(const CliConfig&, Io&)>;
  const std::vector<std::tuple<const char*, const char*, Handler>> commands = {
      {"design", "Report field, cosets, gains and link metrics for a scheme", cmd_design},
      {"table", "Print the carrier (cas) matrix", cmd_table},
      {"cosets", "Print Fourier and Hartley cyclotomic cosets", cmd_cosets},
      {"mux", "Multiplex a user frame file into a spectrum file", cmd_mux},
      {"demux", "Demultiplex a spectrum file into a user frame file", cmd_demux},
      {"compress", "Keep only coset leaders of a spectrum file", cmd_compress},
      {"expand", "Rebuild a full spectrum from a line-frame file", cmd_expand},
      {"verify", "Run the property suite for a scheme", cmd_verify},
      {"metrics", "Print spectral-efficiency metrics", cmd_metrics},
  };
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, help, handler] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common_flags(*sub, cfg);
    subs.emplace_back(sub, handler);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    Io io(cfg, in, out);
    for (const auto& [sub, handler] : subs) {
      if (sub->parsed()) return handler(cfg, io);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace gdm::cli
