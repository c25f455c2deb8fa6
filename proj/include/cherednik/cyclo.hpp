#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/rational.hpp"

namespace cherednik {

/// Integer coefficients of the rational cyclotomic polynomial Phi_n, lowest
/// degree first. Cached; safe to call concurrently.
const std::vector<long>& cyclotomic_coefficients(int n);

/// Exact element of Q(zeta_N), stored in the power basis
/// 1, zeta_N, ..., zeta_N^{phi(N)-1} with reduction modulo Phi_N.
///
/// Values whose only nonzero coefficient is the constant one are always
/// stored with order 1, so rationals compare and hash cheaply. Mixed-order
/// arithmetic lifts both operands to the lcm of the orders.
class CycloNum {
 public:
  CycloNum() : order_(1), coeffs_{Rational(0)} {}
  CycloNum(const Rational& value) : order_(1), coeffs_{value} {}  // NOLINT
  CycloNum(long value) : order_(1), coeffs_{Rational(value)} {}   // NOLINT
  CycloNum(int order, std::vector<Rational> coeffs);

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static CycloNum zeta(int n, long k = 1);
  /// 2 cos(2 pi k / n) = zeta_n^k + zeta_n^-k.
  static CycloNum two_cos(int n, long k = 1);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws InternalError when not rational.
  Rational to_rational() const;

  /// Same value expressed in Q(zeta_L); L must be a multiple of order().
  CycloNum lifted(int L) const;
  /// Tries to shrink the order: drops to N/2 when N = 2 mod 4 and to N/p when
  /// p^2 | N and the value lies in the subfield.
  CycloNum reduced() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  /// Throws DivisionByZero on zero.
  CycloNum inv() const;
  CycloNum pow(long e) const;
  /// Complex conjugate (zeta -> zeta^-1).
  CycloNum conj() const;
  /// Galois automorphism zeta_N -> zeta_N^t, gcd(t, N) = 1.
  CycloNum galois(long t) const;

  std::complex<double> to_complex() const;

  /// If the value is a root of unity exp(2 pi i theta), returns theta in [0,1).
  std::optional<Rational> root_of_unity_angle() const;

  /// Hash of the representation lifted to Q(zeta_L) (L a multiple of order()).
  std::size_t hash_at(int L) const;

  /// Human readable, e.g. "1/2 + 3*z12^2".
  std::string str() const;

 private:
  void normalize();

  int order_;
  std::vector<Rational> coeffs_;
};

}  // namespace cherednik
