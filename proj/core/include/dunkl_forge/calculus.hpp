#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dunkl_forge/group.hpp"
#include "dunkl_forge/scalar.hpp"

namespace dforge {

/// Left-invariant 1-form: coefficients over the germ basis {[s] : s in S}.
class GermVector {
 public:
  using Coeffs = std::map<Element, Scalar>;

  GermVector() = default;

  /// The basis germ [s].
  static GermVector basis(Element s);

  const Coeffs& coeffs() const { return coeffs_; }
  Scalar operator[](Element s) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add(Element s, const Scalar& c);

  GermVector& operator+=(const GermVector& o);
  GermVector& operator-=(const GermVector& o);
  GermVector& operator*=(const Scalar& c);
  friend GermVector operator+(GermVector a, const GermVector& b) { return a += b; }
  friend GermVector operator-(GermVector a, const GermVector& b) { return a -= b; }
  friend GermVector operator*(GermVector a, const Scalar& c) { return a *= c; }
  friend bool operator==(const GermVector& a, const GermVector& b) { return (a - b).is_zero(); }

 private:
  Coeffs coeffs_;
};

/// Function on G with finite (explicit) support.
class FunctionOnG {
 public:
  FunctionOnG() = default;

  static FunctionOnG delta(Element g);
  /// The unit 1 of F(G).
  static FunctionOnG one(const GroupTable& table);

  const std::map<Element, Scalar>& values() const { return values_; }
  Scalar operator()(Element g) const;
  void set(Element g, const Scalar& v);

 private:
  std::map<Element, Scalar> values_;
};

/// sum_g delta_g (x) theta_g in the trivialization A (x) Gamma_inv.
class GammaElement {
 public:
  using Terms = std::map<Element, GermVector>;

  GammaElement() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Adds delta_g (x) theta.
  void add(Element g, const GermVector& theta);
  /// Coefficient of delta_g (x) [s].
  Scalar coefficient(Element g, Element s) const;

  GammaElement& operator+=(const GammaElement& o);
  GammaElement& operator-=(const GammaElement& o);
  friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
  friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
  friend bool operator==(const GammaElement& a, const GammaElement& b) { return (a - b).is_zero(); }

 private:
  Terms terms_;
};

/// Quantum germ [delta_g]: the basis vector for g in S, -sum_s [s] for the
/// identity, zero otherwise.
GermVector quantum_germ(const GroupTable& table, const SubsetS& S, Element g);

/// d(delta_g) = sum_s (delta_{g s^-1} - delta_g) (x) [s].
GammaElement differential_delta(const GroupTable& table, const SubsetS& S, Element g);

/// theta o b, acting componentwise by [s] o b = b(s) [s].
GermVector circ_action(const GermVector& theta, const FunctionOnG& b);

/// Right module structure: (delta_g (x) [s]) . b = b(g s) delta_g (x) [s].
GammaElement right_module_action(const GroupTable& table, const GammaElement& x, const FunctionOnG& b);

/// Left module structure: pointwise multiplication on the function factor.
GammaElement left_module_action(const FunctionOnG& b, const GammaElement& x);

/// The vacuum 1 (x) sum_s [s] = [-e].
GammaElement vacuum(const GroupTable& table, const SubsetS& S);

/// [-e] delta_g - delta_g [-e], the inner-derivation form of d(delta_g).
GammaElement inner_derivation(const GroupTable& table, const SubsetS& S, Element g);

struct AdTerm {
  Element conjugated;  ///< k g k^-1
  Element k;
  Scalar weight;
};

/// ad(delta_g) = sum_k delta_{k g k^-1} (x) delta_k, one term per k in order.
std::vector<AdTerm> ad_coaction(const GroupTable& table, Element g);

/// Woronowicz braid on basis tensors: [g] (x) [h] -> [g h g^-1] (x) [g].
std::pair<Element, Element> braid_sigma(const GroupTable& table, const SubsetS& S, Element g, Element h);

/// Number of orbits of the braid permutation on S x S.
std::size_t braid_orbit_count(const GroupTable& table, const SubsetS& S);

/// Dimension of the degree-2 part of the quadratic calculus:
/// |S|^2 minus the dimension of ker(id - sigma).
std::size_t gamma_tilde_dim2(const GroupTable& table, const SubsetS& S);

}  // namespace dforge
