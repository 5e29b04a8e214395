#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace semipolar {

/// Description of GF(p^k). `modulus` lists the coefficients of a monic
/// degree-k polynomial over GF(p), constant term first. It is ignored for
/// k = 1.
struct FieldSpec {
  int p = 2;
  int k = 1;
  std::vector<int> modulus;

  int order() const;
  bool operator==(const FieldSpec &) const = default;
};

/// Largest field order this library is configured for.
inline constexpr int kMaxFieldOrder = 16;

/// The shipped field of order q: GF(4) uses x^2+x+1, GF(8) x^3+x+1,
/// GF(9) x^2+1 and GF(16) x^4+x+1. Throws ConfigurationError when q is not a
/// prime power or exceeds kMaxFieldOrder.
FieldSpec standard_field(int q);

/// Finite field with precomputed operation tables.
///
/// Elements are encoded as integers in [0, q): the coefficient vector
/// (c_0, ..., c_{k-1}) of c_0 + c_1 x + ... is stored as sum c_i p^i, so
/// 0 and 1 are the additive and multiplicative identities and the prime
/// subfield occupies [0, p).
class GaloisField {
public:
  explicit GaloisField(FieldSpec spec);

  const FieldSpec &spec() const { return spec_; }
  int order() const { return q_; }
  int characteristic() const { return spec_.p; }
  int degree() const { return spec_.k; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int conj(int a) const;
  int pow(int a, unsigned e) const;

  bool has_conjugation() const { return spec_.k % 2 == 0; }

  std::vector<int> coefficients(int a) const;
  int from_coefficients(const std::vector<int> &coeffs) const;

private:
  FieldSpec spec_;
  int q_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
  std::vector<std::uint8_t> conj_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

FieldPtr make_field(int q);
FieldPtr make_field(FieldSpec spec);

/// Field element bound to its field. Arithmetic between elements of
/// different fields throws UsageError.
class FieldElement {
public:
  FieldElement(FieldPtr field, int rep);

  static FieldElement from_coefficients(FieldPtr field,
                                        const std::vector<int> &coeffs);

  int rep() const { return rep_; }
  std::vector<int> coefficients() const { return field_->coefficients(rep_); }
  const FieldPtr &field() const { return field_; }
  bool is_zero() const { return rep_ == 0; }

  FieldElement inv() const;
  FieldElement conj() const;

  friend FieldElement operator+(const FieldElement &a, const FieldElement &b);
  friend FieldElement operator-(const FieldElement &a, const FieldElement &b);
  friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
  friend bool operator==(const FieldElement &a, const FieldElement &b);

private:
  FieldPtr field_;
  int rep_;
};

FieldElement fe_add(const FieldElement &a, const FieldElement &b);
FieldElement fe_mul(const FieldElement &a, const FieldElement &b);
FieldElement fe_inv(const FieldElement &a);
FieldElement fe_conj(const FieldElement &a);

bool is_prime(int n);

/// True when the monic polynomial (constant term first) has no monic factor
/// of degree 1..deg/2 over GF(p).
bool is_irreducible(int p, const std::vector<int> &poly);

} // namespace semipolar
