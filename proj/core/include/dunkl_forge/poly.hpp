#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dunkl_forge/matrix.hpp"
#include "dunkl_forge/scalar.hpp"

namespace dforge {

using Exponent = std::vector<std::uint8_t>;

/// Per-variable degree limit of the exponent representation.
inline constexpr int kMaxDegreePerVariable = 64;

/// Sparse multivariate polynomial; no zero coefficient is ever stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Scalar>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Scalar& c);
  static MultiPoly variable(std::size_t nvars, std::size_t j);
  static MultiPoly monomial(const Exponent& exp, const Scalar& c = Scalar(1));

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Scalar coefficient(const Exponent& exp) const;

  /// Adds c * x^exp in place.
  void add_term(const Exponent& exp, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;
  MultiPoly partial_derivative(std::size_t j) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  MultiPoly in_field(const Field& field) const;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o, const char* what) const;

  std::size_t nvars_;
  Terms terms_;
};

/// Coefficient vector of a linear form sum_j c_j x_j.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t nvars() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t j) const { return coeffs_[j]; }
  bool is_zero() const;
  MultiPoly to_poly() const;

 private:
  std::vector<Scalar> coeffs_;
};

/// p(x g) for the row vector x, i.e. x_i -> sum_k x_k g_{ki}. With `conjugate`
/// the entrywise conjugate of g is substituted instead.
MultiPoly act_by_matrix(const MultiPoly& p, const Matrix& g, bool conjugate = false);

/// Exact quotient q with p = l * q. Throws NotDivisible when a remainder is
/// left, and re-multiplies to confirm the quotient before returning it.
MultiPoly divide_by_linear(const MultiPoly& p, const LinearForm& l);

/// All monomials of total degree <= d in n variables, graded then lexicographic.
std::vector<Exponent> monomials_up_to(std::size_t nvars, int degree);

}  // namespace dforge
