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

#include "gdm/io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace gdm {

namespace {

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t out = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return out;
}

Enc parse_encoding(const FieldPtr& field, std::string_view text) {
  const std::uint64_t v = parse_uint(text, "element");
  if (v >= field->size()) {
    throw Error(ErrorCode::ParseError, "element " + std::string(text) + " out of range for GF(" +
                                           std::to_string(field->size()) + ")");
  }
  return static_cast<Enc>(v);
}

std::map<std::string, std::string> parse_fields(std::string_view line) {
  std::map<std::string, std::string> out;
  std::istringstream words{std::string(line)};
  std::string word;
  while (words >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + word + "'");
    out[word.substr(0, eq)] = word.substr(eq + 1);
  }
  return out;
}

const std::string& require(const std::map<std::string, std::string>& fields, const std::string& key) {
  const auto it = fields.find(key);
  if (it == fields.end()) throw Error(ErrorCode::ParseError, "header is missing " + key);
  return it->second;
}

}  // namespace

std::string format_element(const GaussianElement& z) {
  std::string out = std::to_string(z.re().encoding());
  if (!z.is_real()) out += "+j" + std::to_string(z.im().encoding());
  return out;
}

GaussianElement parse_element(const FieldPtr& field, std::string_view text) {
  const auto sep = text.find_first_of("+-");
  if (sep == std::string_view::npos) return GaussianElement(FieldElement(field, parse_encoding(field, text)));
  if (sep + 1 >= text.size() || text[sep + 1] != 'j') {
    throw Error(ErrorCode::ParseError, "bad Gaussian element '" + std::string(text) + "'");
  }
  const FieldElement re(field, parse_encoding(field, text.substr(0, sep)));
  FieldElement im(field, parse_encoding(field, text.substr(sep + 2)));
  if (text[sep] == '-') im = -im;
  return {re, im};
}

void write_vector_file(std::ostream& out, const VectorFile& file) {
  const TrigContext& ctx = *file.ctx;
  const FieldSpec& f = *ctx.field();
  out << "#gdm v1 p=" << f.p() << " m=" << f.m() << " poly=" << f.polynomial_encoding() << " n=" << ctx.n()
      << " zeta=" << ctx.zeta().encoding() << " kind=" << kind_name(file.kind) << '\n';
  if (file.leaders) {
    out << "compressed=1 leaders=";
    for (std::size_t i = 0; i < file.leaders->size(); ++i) out << (i ? "," : "") << (*file.leaders)[i];
    out << '\n';
  }
  for (const auto& z : file.values) out << format_element(z) << '\n';
}

VectorFile read_vector_file(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("#gdm v1 ")) {
    throw Error(ErrorCode::ParseError, "missing '#gdm v1' header");
  }
  const auto header = parse_fields(std::string_view(line).substr(8));
  const FieldPtr field = make_field(static_cast<std::int64_t>(parse_uint(require(header, "p"), "p")),
                                    static_cast<std::int64_t>(parse_uint(require(header, "m"), "m")));
  if (parse_uint(require(header, "poly"), "poly") != field->polynomial_encoding()) {
    throw Error(ErrorCode::SpecMismatch, "poly=" + require(header, "poly") + " is not the canonical polynomial " +
                                             std::to_string(field->polynomial_encoding()));
  }
  VectorFile file;
  file.ctx = make_trig_context(field, parse_uint(require(header, "n"), "n"),
                               parse_encoding(field, require(header, "zeta")));
  file.kind = parse_kind(require(header, "kind"));

  std::vector<std::string> body;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    body.push_back(line);
  }
  while (!body.empty() && body.back().empty()) body.pop_back();

  std::size_t first = 0;
  if (!body.empty() && body.front().starts_with("compressed=")) {
    const auto fields = parse_fields(body.front());
    if (require(fields, "compressed") != "1") throw Error(ErrorCode::ParseError, "expected compressed=1");
    std::vector<std::uint64_t> leaders;
    std::string_view list = require(fields, "leaders");
    while (!list.empty()) {
      const auto comma = list.find(',');
      leaders.push_back(parse_uint(list.substr(0, comma), "leader"));
      list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    }
    file.leaders = std::move(leaders);
    first = 1;
  }
  for (std::size_t i = first; i < body.size(); ++i) file.values.push_back(parse_element(field, body[i]));
  const std::size_t expected = file.leaders ? file.leaders->size() : file.ctx->n();
  if (file.values.size() != expected) {
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(expected) + " elements, got " + std::to_string(file.values.size()));
  }
  return file;
}

VectorFile frame_file(const MuxConfig& cfg, const UserFrame& frame) {
  VectorFile out{cfg.ctx, cfg.kind, std::nullopt, {}};
  for (auto s : frame.symbols) out.values.emplace_back(FieldElement(cfg.ctx->field(), s));
  return out;
}

VectorFile spectrum_file(const Spectrum& spectrum) { return {spectrum.ctx, spectrum.kind, std::nullopt, spectrum.values}; }

VectorFile line_file(const LineFrame& line) { return {line.ctx, line.kind, line.leaders, line.values}; }

UserFrame to_frame(const VectorFile& file) {
  if (file.leaders) throw Error(ErrorCode::ParseError, "expected an uncompressed frame file");
  UserFrame out;
  for (const auto& z : file.values) {
    if (!z.is_real() || !z.field()->in_prime_subfield(z.re().encoding())) {
      throw Error(ErrorCode::NotBaseField, "frame symbol " + format_element(z) + " is outside GF(p)");
    }
    out.symbols.push_back(z.re().encoding());
  }
  return out;
}

Spectrum to_spectrum(const VectorFile& file) {
  if (file.leaders) throw Error(ErrorCode::ParseError, "expected an uncompressed spectrum file");
  return {file.ctx, file.kind, file.values};
}

LineFrame to_line(const VectorFile& file) {
  if (!file.leaders) throw Error(ErrorCode::ParseError, "expected a compressed line-frame file");
  return {file.ctx, file.kind, *file.leaders, file.values};
}

}  // namespace gdm
