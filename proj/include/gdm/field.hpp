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
 * @file field.hpp
 * @brief Exact arithmetic in GF(p), GF(p^m) and the Gaussian ring GI(p^m).
 *
 * A field is described by an odd prime p, an extension degree m and a monic
 * irreducible polynomial of degree m over GF(p). Elements are identified with
 * their canonical integer encoding
 *
 *     enc(c_0 + c_1 x + ... + c_{m-1} x^{m-1}) = c_0 + c_1 p + ... + c_{m-1} p^{m-1},
 *
 * which is a bijection onto [0, p^m). Multiplication goes through discrete
 * log/antilog tables built once per field; addition is digit-wise mod p.
 *
 * GaussianElement adjoins a formal j with j^2 = -1. When p = 1 (mod 4) the
 * resulting ring has zero divisors; inversion then reports NotInvertible.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gdm/error.hpp"

namespace gdm {

/// Canonical integer encoding of a field element.
using Enc = std::uint32_t;

/// Largest supported field size p^m.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

/// Overflow-checked helpers shared by the whole library.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Builds GF(p^m) with the canonical irreducible polynomial: the monic
/// degree-m irreducible whose coefficient list (constant term first), read as
/// base-p digits, is smallest. For m = 1 the placeholder polynomial x is used
/// and reduction is plain mod-p arithmetic.
FieldPtr make_field(std::int64_t p, std::int64_t m);

class FieldSpec {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  /// p^m.
  std::uint32_t size() const noexcept { return size_; }
  /// Monic polynomial of degree m, constant term first (length m + 1).
  const std::vector<std::uint32_t>& irreducible() const noexcept { return irreducible_; }
  /// Base-p encoding of the full irreducible polynomial including its leading 1.
  std::uint64_t polynomial_encoding() const noexcept;

  bool operator==(const FieldSpec& other) const noexcept {
    return p_ == other.p_ && m_ == other.m_ && irreducible_ == other.irreducible_;
  }

  // Raw arithmetic on encodings. Arguments must be valid encodings.
  Enc add(Enc a, Enc b) const noexcept;
  Enc sub(Enc a, Enc b) const noexcept;
  Enc neg(Enc a) const noexcept;
  Enc mul(Enc a, Enc b) const noexcept;
  Enc inv(Enc a) const;
  Enc pow(Enc a, std::int64_t e) const;
  /// Image of an integer in the prime subfield.
  Enc from_int(std::int64_t n) const noexcept;
  bool in_prime_subfield(Enc a) const noexcept { return a < p_; }

  /// Discrete log with respect to the internal primitive element; a != 0.
  std::uint32_t log(Enc a) const noexcept { return log_[a]; }
  Enc exp(std::uint64_t k) const noexcept { return exp_[k % (size_ - 1)]; }

  std::vector<std::uint32_t> digits(Enc a) const;
  Enc from_digits(std::span<const std::uint32_t> digits) const;

  /// Tag type restricting construction to make_field.
  struct Key {
   private:
    Key() = default;
    friend FieldPtr make_field(std::int64_t, std::int64_t);
  };
  FieldSpec(Key, std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> irreducible);

 private:
  Enc poly_mul(Enc a, Enc b) const;
  Enc digit_add(Enc a, Enc b) const noexcept;

  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t size_;
  std::vector<std::uint32_t> irreducible_;
  std::vector<std::uint32_t> place_;  // p^i
  std::vector<Enc> exp_;              // 2 (size_ - 1) entries
  std::vector<std::uint32_t> log_;    // size_ entries, log_[0] unused
  std::vector<std::uint32_t> zech_;   // m > 1 only
};

inline Enc FieldSpec::add(Enc a, Enc b) const noexcept {
  if (m_ == 1) {
    const Enc s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (a == 0) return b;
  if (b == 0) return a;
  // a + b = a (1 + b / a)
  const std::uint32_t group = size_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t z = zech_[lb >= la ? lb - la : lb + group - la];
  return z == kNoLog ? 0 : exp_[la + z];
}

inline Enc FieldSpec::neg(Enc a) const noexcept {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  if (a == 0) return 0;
  // -1 = g^((q - 1) / 2)
  return exp_[log_[a] + (size_ - 1) / 2];
}

inline Enc FieldSpec::sub(Enc a, Enc b) const noexcept { return add(a, neg(b)); }

inline Enc FieldSpec::mul(Enc a, Enc b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[std::size_t{log_[a]} + log_[b]];
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

class FieldElement {
 public:
  FieldElement(FieldPtr field, Enc value);

  static FieldElement zero(const FieldPtr& field) { return {field, 0}; }
  static FieldElement one(const FieldPtr& field) { return {field, 1}; }
  /// n mod p, embedded in the prime subfield.
  static FieldElement from_int(const FieldPtr& field, std::int64_t n);

  const FieldPtr& field() const noexcept { return field_; }
  Enc encoding() const noexcept { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->digits(value_); }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;

  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && same_field(a.field_, b.field_);
  }

 private:
  FieldPtr field_;
  Enc value_;
};

/// Multiplicative order of a nonzero element.
std::uint64_t element_order(const FieldElement& x);

/// The element of multiplicative order exactly n with the smallest encoding.
FieldElement find_element_of_order(const FieldPtr& field, std::uint64_t n);

struct MinusOneResidue {
  bool is_residue = false;
  /// Smaller square root of -1 mod p when is_residue.
  std::optional<std::uint64_t> root;
};

MinusOneResidue minus_one_is_qr(std::uint64_t p);

/// a + jb over GF(p^m), j^2 = -1.
class GaussianElement {
 public:
  GaussianElement(FieldElement re, FieldElement im);
  explicit GaussianElement(FieldElement re);
  GaussianElement(const FieldPtr& field, Enc re, Enc im) : GaussianElement({field, re}, {field, im}) {}

  static GaussianElement zero(const FieldPtr& field) { return {field, 0, 0}; }
  static GaussianElement one(const FieldPtr& field) { return {field, 1, 0}; }
  static GaussianElement j(const FieldPtr& field) { return {field, 0, 1}; }

  const FieldElement& re() const noexcept { return re_; }
  const FieldElement& im() const noexcept { return im_; }
  const FieldPtr& field() const noexcept { return re_.field(); }
  bool is_real() const noexcept { return im_.is_zero(); }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  GaussianElement conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  FieldElement norm() const { return re_ * re_ + im_ * im_; }
  GaussianElement inverse() const;
  GaussianElement pow(std::int64_t e) const;

  GaussianElement operator-() const { return {-re_, -im_}; }
  friend GaussianElement operator+(const GaussianElement& a, const GaussianElement& b);
  friend GaussianElement operator-(const GaussianElement& a, const GaussianElement& b);
  friend GaussianElement operator*(const GaussianElement& a, const GaussianElement& b);
  friend GaussianElement operator*(const FieldElement& s, const GaussianElement& z);
  friend bool operator==(const GaussianElement& a, const GaussianElement& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  FieldElement re_;
  FieldElement im_;
};

}  // namespace gdm
