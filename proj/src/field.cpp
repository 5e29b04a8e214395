#include "semipolar/field.hpp"

#include "semipolar/errors.hpp"

#include <algorithm>
#include <utility>

namespace semipolar {

namespace {

using Poly = std::vector<int>; // constant term first

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

int mod_inverse(int a, int p) {
  for (int b = 1; b < p; ++b)
    if (a * b % p == 1)
      return b;
  throw DomainError("no inverse modulo p");
}

// Remainder of a divided by b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly &b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = mod_inverse(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = a.back() * lead_inv % p;
    for (int i = 0; i <= db; ++i)
      a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly &a, const Poly &b, int p) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

int int_pow(int base, int e) {
  int r = 1;
  while (e-- > 0)
    r *= base;
  return r;
}

} // namespace

bool is_prime(int n) {
  if (n < 2)
    return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

bool is_irreducible(int p, const std::vector<int> &poly) {
  Poly f = poly;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1)
    return false;
  for (int d = 1; d <= deg / 2; ++d) {
    // every monic polynomial of degree d
    const int count = int_pow(p, d);
    for (int code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      int c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

int FieldSpec::order() const { return int_pow(p, k); }

FieldSpec standard_field(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p))
      continue;
    int k = 0;
    int r = 1;
    while (r < q) {
      r *= p;
      ++k;
    }
    if (r != q)
      continue;
    if (q > kMaxFieldOrder)
      break;
    FieldSpec spec{p, k, {}};
    switch (q) {
    case 4: spec.modulus = {1, 1, 1}; break;
    case 8: spec.modulus = {1, 1, 0, 1}; break;
    case 9: spec.modulus = {1, 0, 1}; break;
    case 16: spec.modulus = {1, 1, 0, 0, 1}; break;
    default: break;
    }
    return spec;
  }
  throw ConfigurationError("unsupported field order " + std::to_string(q) +
                           " (need a prime power <= " +
                           std::to_string(kMaxFieldOrder) + ")");
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p))
    throw ConfigurationError("field characteristic " +
                             std::to_string(spec_.p) + " is not prime");
  if (spec_.k < 1)
    throw ConfigurationError("field extension degree must be >= 1");
  q_ = int_pow(spec_.p, spec_.k);
  if (q_ > kMaxFieldOrder)
    throw ConfigurationError("field order " + std::to_string(q_) +
                             " exceeds " + std::to_string(kMaxFieldOrder));
  if (spec_.k == 1) {
    spec_.modulus.clear();
  } else {
    if (static_cast<int>(spec_.modulus.size()) != spec_.k + 1 ||
        spec_.modulus.back() != 1)
      throw ConfigurationError("modulus must be monic of degree " +
                               std::to_string(spec_.k));
    for (int c : spec_.modulus)
      if (c < 0 || c >= spec_.p)
        throw ConfigurationError("modulus coefficient out of range");
    if (!is_irreducible(spec_.p, spec_.modulus))
      throw ConfigurationError("modulus is reducible over GF(" +
                               std::to_string(spec_.p) + ")");
  }

  const int q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const auto ca = coefficients(a);
    std::vector<int> cn(spec_.k);
    for (int i = 0; i < spec_.k; ++i)
      cn[i] = (spec_.p - ca[i]) % spec_.p;
    neg_[a] = static_cast<std::uint8_t>(from_coefficients(cn));
    for (int b = 0; b < q; ++b) {
      const auto cb = coefficients(b);
      std::vector<int> cs(spec_.k);
      for (int i = 0; i < spec_.k; ++i)
        cs[i] = (ca[i] + cb[i]) % spec_.p;
      add_[a * q + b] = static_cast<std::uint8_t>(from_coefficients(cs));

      Poly prod = poly_mul(ca, cb, spec_.p);
      if (spec_.k > 1)
        prod = poly_mod(prod, spec_.modulus, spec_.p);
      else
        trim(prod);
      prod.resize(spec_.k, 0);
      mul_[a * q + b] = static_cast<std::uint8_t>(from_coefficients(prod));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul(a, b) == 1)
        inv_[a] = static_cast<std::uint8_t>(b);

  conj_.assign(q, 0);
  if (has_conjugation()) {
    const unsigned e = static_cast<unsigned>(int_pow(spec_.p, spec_.k / 2));
    for (int a = 0; a < q; ++a)
      conj_[a] = static_cast<std::uint8_t>(pow(a, e));
  }
}

int GaloisField::inv(int a) const {
  if (a == 0)
    throw DomainError("inverse of zero");
  return inv_[a];
}

int GaloisField::conj(int a) const {
  if (!has_conjugation())
    throw UsageError("conjugation needs a field of even extension degree");
  return conj_[a];
}

int GaloisField::pow(int a, unsigned e) const {
  int r = 1;
  int b = a;
  while (e) {
    if (e & 1u)
      r = mul(r, b);
    b = mul(b, b);
    e >>= 1u;
  }
  return r;
}

std::vector<int> GaloisField::coefficients(int a) const {
  std::vector<int> c(spec_.k);
  for (int i = 0; i < spec_.k; ++i) {
    c[i] = a % spec_.p;
    a /= spec_.p;
  }
  return c;
}

int GaloisField::from_coefficients(const std::vector<int> &coeffs) const {
  if (static_cast<int>(coeffs.size()) > spec_.k)
    throw UsageError("coefficient vector longer than the extension degree");
  int r = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[i] < 0 || coeffs[i] >= spec_.p)
      throw UsageError("coefficient out of range");
    r = r * spec_.p + coeffs[i];
  }
  return r;
}

FieldPtr make_field(int q) {
  return std::make_shared<const GaloisField>(standard_field(q));
}

FieldPtr make_field(FieldSpec spec) {
  return std::make_shared<const GaloisField>(std::move(spec));
}

FieldElement::FieldElement(FieldPtr field, int rep)
    : field_(std::move(field)), rep_(rep) {
  if (!field_)
    throw UsageError("field element without a field");
  if (rep_ < 0 || rep_ >= field_->order())
    throw UsageError("field element representation out of range");
}

FieldElement FieldElement::from_coefficients(FieldPtr field,
                                             const std::vector<int> &coeffs) {
  const int rep = field->from_coefficients(coeffs);
  return FieldElement(std::move(field), rep);
}

namespace {

void require_same_field(const FieldElement &a, const FieldElement &b) {
  if (a.field() != b.field() && a.field()->spec() != b.field()->spec())
    throw UsageError("operands belong to different fields");
}

} // namespace

FieldElement FieldElement::inv() const {
  return FieldElement(field_, field_->inv(rep_));
}

FieldElement FieldElement::conj() const {
  return FieldElement(field_, field_->conj(rep_));
}

FieldElement operator+(const FieldElement &a, const FieldElement &b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.field_->add(a.rep_, b.rep_));
}

FieldElement operator-(const FieldElement &a, const FieldElement &b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.field_->sub(a.rep_, b.rep_));
}

FieldElement operator*(const FieldElement &a, const FieldElement &b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.field_->mul(a.rep_, b.rep_));
}

bool operator==(const FieldElement &a, const FieldElement &b) {
  require_same_field(a, b);
  return a.rep_ == b.rep_;
}

FieldElement fe_add(const FieldElement &a, const FieldElement &b) { return a + b; }
FieldElement fe_mul(const FieldElement &a, const FieldElement &b) { return a * b; }
FieldElement fe_inv(const FieldElement &a) { return a.inv(); }
FieldElement fe_conj(const FieldElement &a) { return a.conj(); }

} // namespace semipolar
