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

#include "gdm/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gdm {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharUnsupported: return "EvenCharUnsupported";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::ZeroHasNoOrder: return "ZeroHasNoOrder";
    case ErrorCode::NoSuchOrder: return "NoSuchOrder";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::JNotEmbeddable: return "JNotEmbeddable";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::FormulaInapplicable: return "FormulaInapplicable";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::NotBaseFieldSpectrum: return "NotBaseFieldSpectrum";
    case ErrorCode::LeaderCountMismatch: return "LeaderCountMismatch";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotBaseField: return "NotBaseField";
    case ErrorCode::ZeroCosets: return "ZeroCosets";
    case ErrorCode::NegativeSnr: return "NegativeSnr";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Dense polynomials over GF(p), constant term first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - factor * f[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      out[i + k] = (out[i + k] + a[i] * b[k]) % p;
    }
  }
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= m/2.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> canonical_irreducible(std::uint32_t p, std::uint32_t m) {
  if (m == 1) return {0, 1};
  const std::uint64_t count = checked_pow(p, m);
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f(m + 1, 0);
    std::uint64_t rest = low;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[m] = 1;
    if (f[0] == 0) continue;  // divisible by x
    if (is_irreducible(f, p)) return {f.begin(), f.end()};
  }
  throw Error(ErrorCode::InternalInconsistency, "no irreducible polynomial found");
}

}  // namespace

FieldPtr make_field(std::int64_t p, std::int64_t m) {
  if (p == 2) throw Error(ErrorCode::EvenCharUnsupported, "characteristic 2 is not supported");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t size = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    size = checked_mul(size, static_cast<std::uint64_t>(p));
    if (size > kMaxFieldSize) {
      throw Error(ErrorCode::FieldTooLarge, "p^m exceeds " + std::to_string(kMaxFieldSize));
    }
  }
  const auto pp = static_cast<std::uint32_t>(p);
  const auto mm = static_cast<std::uint32_t>(m);
  return std::make_shared<const FieldSpec>(FieldSpec::Key{}, pp, mm, canonical_irreducible(pp, mm));
}

FieldSpec::FieldSpec(Key, std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> irreducible)
    : p_(p), m_(m), size_(static_cast<std::uint32_t>(checked_pow(p, m))), irreducible_(std::move(irreducible)) {
  place_.resize(m_ + 1);
  place_[0] = 1;
  for (std::uint32_t i = 1; i <= m_; ++i) place_[i] = place_[i - 1] * p_;

  // Any primitive element will do for the tables; the canonical choices exposed
  // to callers are made by encoding order elsewhere.
  const std::uint64_t group = size_ - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](Enc a, std::uint64_t e) {
    Enc result = 1;
    while (e > 0) {
      if (e & 1) result = poly_mul(result, a);
      a = poly_mul(a, a);
      e >>= 1;
    }
    return result;
  };
  Enc generator = 0;
  for (Enc g = 1; g < size_; ++g) {
    const bool primitive = std::all_of(factors.begin(), factors.end(),
                                       [&](std::uint64_t r) { return slow_pow(g, group / r) != 1; });
    if (primitive) {
      generator = g;
      break;
    }
  }
  // Two periods so that log a + log b indexes without a reduction.
  exp_.resize(2 * group);
  log_.assign(size_, 0);
  Enc acc = 1;
  for (std::uint64_t k = 0; k < group; ++k) {
    exp_[k] = exp_[k + group] = acc;
    log_[acc] = static_cast<std::uint32_t>(k);
    acc = poly_mul(acc, generator);
  }
  if (m_ > 1) {
    // Zech logarithms: g^zech[k] = 1 + g^k.
    zech_.resize(group);
    for (std::uint64_t k = 0; k < group; ++k) {
      const Enc s = digit_add(1, exp_[k]);
      zech_[k] = s == 0 ? kNoLog : log_[s];
    }
  }
}

Enc FieldSpec::digit_add(Enc a, Enc b) const noexcept {
  Enc out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    Enc d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * place_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint64_t FieldSpec::polynomial_encoding() const noexcept {
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (auto c : irreducible_) {
    out += c * place;
    place *= p_;
  }
  return out;
}

Enc FieldSpec::poly_mul(Enc a, Enc b) const {
  if (m_ == 1) return static_cast<Enc>(std::uint64_t{a} * b % p_);
  const auto da = digits(a);
  const auto db = digits(b);
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t k = 0; k < m_; ++k) {
      prod[i + k] = (prod[i + k] + std::uint64_t{da[i]} * db[k]) % p_;
    }
  }
  const Poly f(irreducible_.begin(), irreducible_.end());
  const Poly r = poly_mod(std::move(prod), f, p_);
  Enc out = 0;
  for (std::size_t i = 0; i < r.size(); ++i) out += static_cast<Enc>(r[i]) * place_[i];
  return out;
}

Enc FieldSpec::inv(Enc a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t group = size_ - 1;
  return exp_[(group - log_[a]) % group];
}

Enc FieldSpec::pow(Enc a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return 0;
  }
  const std::int64_t group = size_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % group)) % group;
  if (k < 0) k += group;
  return exp_[static_cast<std::size_t>(k)];
}

Enc FieldSpec::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Enc>(r);
}

std::vector<std::uint32_t> FieldSpec::digits(Enc a) const {
  std::vector<std::uint32_t> out(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Enc FieldSpec::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != m_) throw Error(ErrorCode::InvalidArgument, "coefficient count must equal m");
  Enc out = 0;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (digits[i] >= p_) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
    out += digits[i] * place_[i];
  }
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw Error(ErrorCode::SpecMismatch, "operands belong to different fields");
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, Enc value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
  if (value_ >= field_->size()) {
    throw Error(ErrorCode::InvalidArgument, "encoding " + std::to_string(value_) + " out of range");
  }
}

FieldElement FieldElement::from_int(const FieldPtr& field, std::int64_t n) { return {field, field->from_int(n)}; }

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a.field_, b.field_);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a.field_, b.field_);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a.field_, b.field_);
  return {a.field_, a.field_->mul(a.value_, a.field_->inv(b.value_))};
}

std::uint64_t element_order(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroHasNoOrder, "zero has no multiplicative order");
  const std::uint64_t group = x.field()->size() - 1;
  return group / std::gcd(std::uint64_t{x.field()->log(x.encoding())}, group);
}

FieldElement find_element_of_order(const FieldPtr& field, std::uint64_t n) {
  const std::uint64_t group = field->size() - 1;
  if (n == 0 || group % n != 0) {
    throw Error(ErrorCode::NoSuchOrder,
                std::to_string(n) + " does not divide " + std::to_string(group));
  }
  for (Enc e = 1; e < field->size(); ++e) {
    if (element_order(FieldElement(field, e)) == n) return {field, e};
  }
  throw Error(ErrorCode::InternalInconsistency, "cyclic group lacks an element of order " + std::to_string(n));
}

MinusOneResidue minus_one_is_qr(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) throw Error(ErrorCode::InvalidArgument, "p must be an odd prime");
  if (p % 4 != 1) return {};
  for (std::uint64_t r = 1; r < p; ++r) {
    if (r * r % p == p - 1) return {true, r};
  }
  throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

GaussianElement::GaussianElement(FieldElement re, FieldElement im) : re_(std::move(re)), im_(std::move(im)) {
  require_same(re_.field(), im_.field());
}

GaussianElement::GaussianElement(FieldElement re)
    : re_(std::move(re)), im_(FieldElement::zero(re_.field())) {}

GaussianElement GaussianElement::inverse() const {
  const FieldElement n = norm();
  if (n.is_zero()) throw Error(ErrorCode::NotInvertible, "element has zero norm");
  return n.inverse() * conj();
}

GaussianElement GaussianElement::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianElement result = one(field());
  GaussianElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

GaussianElement operator+(const GaussianElement& a, const GaussianElement& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

GaussianElement operator-(const GaussianElement& a, const GaussianElement& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

GaussianElement operator*(const GaussianElement& a, const GaussianElement& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianElement operator*(const FieldElement& s, const GaussianElement& z) { return {s * z.re_, s * z.im_}; }

}  // namespace gdm
