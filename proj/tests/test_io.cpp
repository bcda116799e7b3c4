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

#include <random>
#include <sstream>

#include "gdm/io.hpp"
#include "support.hpp"

using namespace gdm;

namespace {

std::string write(const VectorFile& file) {
  std::ostringstream out;
  write_vector_file(out, file);
  return out.str();
}

VectorFile read(const std::string& text) {
  std::istringstream in(text);
  return read_vector_file(in);
}

}  // namespace

TEST_CASE("element syntax") {
  const auto field = make_field(5, 1);
  CHECK(format_element(GaussianElement(field, 3, 0)) == "3");
  CHECK(format_element(GaussianElement(field, 0, 2)) == "0+j2");
  CHECK(format_element(GaussianElement(field, 3, 4)) == "3+j4");
  CHECK(parse_element(field, "3+j4") == GaussianElement(field, 3, 4));
  CHECK(parse_element(field, "3-j1") == GaussianElement(field, 3, 4));
  CHECK(parse_element(field, "0") == GaussianElement::zero(field));
  CHECK(parse_element(field, "2+j0") == GaussianElement(field, 2, 0));

  for (const char* bad : {"", "5", "x", "1+2", "1+j", "1+jj", "-1", "1+j5", " 1"}) {
    INFO(bad);
    CHECK_ERROR(parse_element(field, bad), ParseError);
  }

  const auto big = make_field(3, 3);
  for (Enc re = 0; re < 27; ++re) {
    for (Enc im = 0; im < 27; ++im) {
      const GaussianElement z(big, re, im);
      REQUIRE(parse_element(big, format_element(z)) == z);
    }
  }
}

TEST_CASE("frame file header") {
  const auto cfg = make_mux_config(5, 1, 4);
  const auto text = write(frame_file(cfg, UserFrame{{4, 0, 1, 2}}));
  CHECK(text == "#gdm v1 p=5 m=1 poly=5 n=4 zeta=2 kind=hartley\n4\n0\n1\n2\n");
  const auto file = read(text);
  CHECK(file.ctx->field()->p() == 5);
  CHECK(file.ctx->n() == 4);
  CHECK(file.kind == TransformKind::Hartley);
  CHECK_FALSE(file.leaders.has_value());
  CHECK(to_frame(file) == UserFrame{{4, 0, 1, 2}});
}

TEST_CASE("line file carries the leaders") {
  const auto cfg = make_mux_config(3, 3, 26);
  const auto result = transmit_pipeline(cfg, UserFrame{std::vector<std::uint32_t>(26, 1)});
  const auto text = write(line_file(result.line));
  CHECK(text.starts_with("#gdm v1 p=3 m=3 poly=34 n=26 zeta="));
  CHECK(text.find("\ncompressed=1 leaders=0,1,2,4,5,13\n") != std::string::npos);
  const auto line = to_line(read(text));
  CHECK(line.leaders == result.line.leaders);
  CHECK(line.values == result.line.values);
  CHECK(expand_spectrum(line, cfg.partition).values == mux(cfg, UserFrame{std::vector<std::uint32_t>(26, 1)}).values);
}

TEST_CASE("spectrum files round trip") {
  std::mt19937_64 rng(12);
  for (auto kind : {TransformKind::Hartley, TransformKind::Fourier}) {
    const auto cfg = make_mux_config(3, 3, 26, kind);
    for (int t = 0; t < 100; ++t) {
      UserFrame f;
      for (int i = 0; i < 26; ++i) f.symbols.push_back(static_cast<std::uint32_t>(rng() % 3));
      const auto spectrum = mux(cfg, f);
      const auto back = to_spectrum(read(write(spectrum_file(spectrum))));
      REQUIRE(back.kind == kind);
      REQUIRE(back.values == spectrum.values);
      REQUIRE(demux(cfg, back) == f);
    }
  }
}

TEST_CASE("malformed files are rejected") {
  const std::string header = "#gdm v1 p=5 m=1 poly=5 n=4 zeta=2 kind=hartley\n";
  CHECK_ERROR(read(""), ParseError);
  CHECK_ERROR(read("p=5\n1\n"), ParseError);
  CHECK_ERROR(read("#gdm v1 p=5 m=1 n=4 zeta=2 kind=hartley\n1\n2\n3\n4\n"), ParseError);
  CHECK_ERROR(read("#gdm v1 p=5 m=1 poly=7 n=4 zeta=2 kind=hartley\n1\n2\n3\n4\n"), SpecMismatch);
  CHECK_ERROR(read("#gdm v1 p=3 m=3 poly=35 n=26 zeta=3 kind=hartley\n"), SpecMismatch);
  CHECK_ERROR(read("#gdm v1 p=5 m=1 poly=5 n=4 zeta=4 kind=hartley\n1\n2\n3\n4\n"), NoSuchOrder);
  CHECK_ERROR(read("#gdm v1 p=5 m=1 poly=5 n=4 zeta=2 kind=walsh\n1\n2\n3\n4\n"), InvalidArgument);
  CHECK_ERROR(read("#gdm v1 p=4 m=1 poly=4 n=3 zeta=2 kind=hartley\n"), NotPrime);
  CHECK_ERROR(read(header + "1\n2\n3\n"), LengthMismatch);
  CHECK_ERROR(read(header + "1\n2\n3\n4\n0\n"), LengthMismatch);
  CHECK_ERROR(read(header + "1\n2\nz\n4\n"), ParseError);
  CHECK_ERROR(read(header + "compressed=1 leaders=0,x\n1\n2\n"), ParseError);
  CHECK_ERROR(to_frame(read(header + "1\n2+j1\n3\n4\n")), NotBaseField);
  CHECK_ERROR(to_line(read(header + "1\n2\n3\n4\n")), ParseError);
  CHECK_ERROR(to_spectrum(read(header + "compressed=1 leaders=0,1\n1\n2\n")), ParseError);
  // trailing blank lines and CRLF are tolerated
  CHECK(to_frame(read(header + "1\r\n2\r\n3\r\n4\r\n\n\n")) == UserFrame{{1, 2, 3, 4}});
}
