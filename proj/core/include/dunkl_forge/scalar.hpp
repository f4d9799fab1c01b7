#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dforge {

/// Which coefficient field a run computes in.
enum class FieldKind { Rational, Gaussian, Cyclotomic, Float };

struct Field {
  FieldKind kind = FieldKind::Rational;
  int conductor = 1;  ///< m for Q(zeta_m); 1 for Q, 4 for Q(i), 0 for Float

  static Field rational() { return {FieldKind::Rational, 1}; }
  static Field gaussian() { return {FieldKind::Gaussian, 4}; }
  static Field cyclotomic(int m);
  static Field floating() { return {FieldKind::Float, 0}; }

  bool exact() const { return kind != FieldKind::Float; }
  std::string name() const;
  /// Parses "rational" | "gaussian" | "cyclotomic:m" | "float".
  static Field parse(const std::string& text);

  bool operator==(const Field&) const = default;
};

/// Euler phi, the degree of Q(zeta_m) over Q.
int euler_phi(int m);

/// Coefficients (low to high) of the m-th cyclotomic polynomial.
const std::vector<long long>& cyclotomic_polynomial(int m);

/// An element of an exact cyclotomic field Q(zeta_m), or a complex double.
///
/// Exact values are stored in the power basis 1, z, ..., z^(phi(m)-1) with
/// z = exp(2 pi i / m), reduced modulo the m-th cyclotomic polynomial.
/// Rationals are the m = 1 case and Gaussian rationals the m = 4 case, so
/// values of different exact fields combine by embedding both into
/// Q(zeta_lcm). Mixing with a float value degrades the result to float.
class Scalar {
 public:
  static constexpr double kFloatTolerance = 1e-10;

  Scalar() : conductor_(1), coeffs_(1) {}
  Scalar(long value) : conductor_(1), coeffs_{mpq_class(value)} {}  // NOLINT
  Scalar(int value) : Scalar(static_cast<long>(value)) {}          // NOLINT
  explicit Scalar(mpq_class value);

  static Scalar rational(long num, long den);
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  /// zeta_m^k.
  static Scalar zeta(int m, long k = 1);
  /// sum_k coeffs[k] zeta_m^k; any length, reduced on construction.
  static Scalar cyclotomic(int m, std::vector<mpq_class> coeffs);
  static Scalar from_complex(std::complex<double> z);

  bool is_float() const { return conductor_ == 0; }
  bool is_exact() const { return conductor_ != 0; }
  int conductor() const { return conductor_; }
  /// Power-basis coefficients (exact values only).
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (exact values only).
  bool is_rational() const;
  mpq_class as_rational() const;

  Scalar conj() const;
  Scalar inverse() const;
  std::complex<double> to_complex() const;
  double abs() const { return std::abs(to_complex()); }

  /// Re-expresses an exact value in Q(zeta_m); requires conductor() | m.
  Scalar embed(int m) const;
  /// Same value in the given field (float conversion or exact embedding).
  Scalar in_field(const Field& field) const;

  /// Canonical text: "3/4", "1/2+1/2*i", "1-2*z+z^3" (z = zeta_m), "(1.5,-2)".
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// Exact equality for exact values; tolerance kFloatTolerance once float.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  static void align(Scalar& a, Scalar& b);

  int conductor_;                 // 0 marks float
  std::vector<mpq_class> coeffs_;  // exact payload, size phi(conductor_)
  std::complex<double> value_{};   // float payload
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dforge
