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
 * @file io.hpp
 * @brief Plain-text element syntax and the vector / spectrum / line-frame files.
 *
 * Element syntax: a field element is its encoding in decimal; a Gaussian
 * element is `A` when its imaginary part is zero, otherwise `A+jB` (`A-jB`
 * is accepted on input). Files start with
 *
 *     #gdm v1 p=<p> m=<m> poly=<enc> n=<N> zeta=<enc> kind=<fourier|hartley>
 *
 * optionally followed by `compressed=1 leaders=<i1,i2,...>`, then one element
 * per line.
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdm/mux.hpp"

namespace gdm {

std::string format_element(const GaussianElement& z);
GaussianElement parse_element(const FieldPtr& field, std::string_view text);

struct VectorFile {
  TrigContextPtr ctx;
  TransformKind kind = TransformKind::Hartley;
  std::optional<std::vector<std::uint64_t>> leaders;
  std::vector<GaussianElement> values;
};

void write_vector_file(std::ostream& out, const VectorFile& file);
/// Rebuilds the field and trig context from the header and validates it.
VectorFile read_vector_file(std::istream& in);

VectorFile frame_file(const MuxConfig& cfg, const UserFrame& frame);
VectorFile spectrum_file(const Spectrum& spectrum);
VectorFile line_file(const LineFrame& line);

UserFrame to_frame(const VectorFile& file);
Spectrum to_spectrum(const VectorFile& file);
LineFrame to_line(const VectorFile& file);

}  // namespace gdm
