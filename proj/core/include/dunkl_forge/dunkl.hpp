#pragma once

#include <memory>
#include <vector>

#include "dunkl_forge/group.hpp"
#include "dunkl_forge/poly.hpp"
#include "dunkl_forge/report.hpp"

namespace dforge {

/// One reflection s in S with its root and multiplicity nu(s).
struct ReflectionDatum {
  Element element;
  LinearForm root;
  Scalar multiplicity;
};

enum class DunklMode { Real, Complex };

/// Real mode: polynomials in x, roots real. Complex mode: polynomials in the
/// conjugate coordinates, <x, alpha> = sum alpha_i conj(x_i). With
/// `holomorphic` set the group acts through conjugated matrices and roots are
/// conjugated, giving the holomorphic variant.
struct DunklConfig {
  std::shared_ptr<const GroupTable> group;
  SubsetS S;
  std::vector<ReflectionDatum> data;
  DunklMode mode = DunklMode::Real;
  bool holomorphic = false;

  std::size_t nvars() const { return group->degree(); }
};

/// A spanning vector of the image of rep(s) - I: the root whose linear form
/// divides every difference p - p_s.
LinearForm default_root(const GroupTable& table, Element s);

/// Builds data for every s in S with default roots and nu taken per class from
/// `class_values` (indexed like conjugacy_classes(table); classes outside S ignored).
DunklConfig make_config(std::shared_ptr<const GroupTable> group, SubsetS S, const std::vector<Scalar>& class_values,
                        DunklMode mode);

/// Structural checks: one datum per s, reflection type per mode, root matched
/// to its reflection, multiplicity constant on classes.
Report validate_config(const DunklConfig& cfg);

/// D_j p = d_j p + sum_s nu(s) alpha_j (p - p_s) / <alpha_s, x>, all divisions exact.
MultiPoly dunkl_apply(const DunklConfig& cfg, std::size_t j, const MultiPoly& p);

std::vector<MultiPoly> dunkl_gradient(const DunklConfig& cfg, const MultiPoly& p);

struct CommutatorOptions {
  int degree = 6;
  int degree_guard = 8;
};

/// [D_j, D_k] x^a = 0 for every j < k and every monomial of degree <= d.
/// Throws BudgetExceeded when d exceeds the guard.
Report commutator_check(const DunklConfig& cfg, const CommutatorOptions& opts = {});

/// D(p_g) = g (Dp)_g for every g, as polynomials, on monomials of degree <= d.
CheckResult equivariance_check(const DunklConfig& cfg, int degree);

/// The config with every multiplicity set to zero.
DunklConfig zero_multiplicity(DunklConfig cfg);

}  // namespace dforge
