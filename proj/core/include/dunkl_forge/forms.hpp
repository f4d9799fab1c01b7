#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "dunkl_forge/cyclic.hpp"
#include "dunkl_forge/group.hpp"
#include "dunkl_forge/report.hpp"

namespace dforge {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Coefficients of d conj(x_1), ..., d conj(x_n).
struct Covector {
  CVector c;
};

/// Antisymmetric coefficient matrix of a 2-form; only j < k is stored.
class TwoForm {
 public:
  explicit TwoForm(std::size_t n = 0) : n_(n), upper_(n * (n > 0 ? n - 1 : 0) / 2) {}

  std::size_t dim() const { return n_; }
  /// Coefficient of d conj(x_j) ^ d conj(x_k); antisymmetric in (j, k).
  cplx operator()(std::size_t j, std::size_t k) const;
  void add(std::size_t j, std::size_t k, cplx v);
  double norm() const;

  TwoForm& operator+=(const TwoForm& o);

 private:
  std::size_t index(std::size_t j, std::size_t k) const { return j * n_ - j * (j + 1) / 2 + (k - j - 1); }
  std::size_t n_;
  CVector upper_;
};

/// <x, y> = sum conj(x_i) y_i, linear in the second entry.
cplx inner(const CVector& x, const CVector& y);
double norm(const CVector& v);
CVector to_complex(const std::vector<Scalar>& v);

/// Unit vector spanning the image of s - I. Throws NotAReflection unless that rank is 1.
CVector eigenline(const Matrix& s);

/// Relative threshold of the singular-point guard.
inline constexpr double kSingularGuard = 1e-6;

/// alpha_j / <x, alpha>. Throws SingularPoint near the hyperplane <x, alpha> = 0.
Covector xi_eval(const CVector& alpha, const CVector& x);

TwoForm wedge(const Covector& a, const Covector& b);

struct CyclicSumResult {
  TwoForm sum;
  double max_term = 0.0;  ///< largest single wedge norm
  double relative() const { return max_term > 0 ? sum.norm() / max_term : sum.norm(); }
};

/// sum_i xi_{W_i}(x) ^ xi_{W_{i+1}}(x) with cyclic wrap, optionally scaled by weights.
CyclicSumResult cyclic_sum(const std::vector<CVector>& lines, const CVector& x, const CVector& weights = {});

/// Maps s in S to a line mu(s) and carries a class-constant multiplicity.
struct DisplacementConfig {
  std::shared_ptr<const GroupTable> group;
  SubsetS S;
  std::vector<CVector> mu;                   ///< unit representative per S index
  std::vector<std::vector<Scalar>> mu_exact;  ///< exact representatives when known
  CVector nu;                                 ///< per S index
};

/// mu(s) = image of s - I, exact; nu given per conjugacy class (indexed like conjugacy_classes).
DisplacementConfig make_displacement_config(std::shared_ptr<const GroupTable> group, SubsetS S,
                                            const CVector& class_values);

struct Container {
  std::size_t rank = 0;
  bool exact = false;
  std::vector<CVector> basis;  ///< orthonormal
};

Container container(const CyclicLine& line, const DisplacementConfig& cfg);

/// Rank of every line's container is at most 2.
CheckResult container_scan(const DisplacementConfig& cfg);

struct FormTolerances {
  double identity = 1e-9;
  double closedness = 1e-5;
  double fd_step = 1e-5;
};

/// (i) S closed under conjugation by S, (ii) mu(u v u^-1) = u[mu(v)] as lines,
/// (iii) u(beta) in span(alpha, beta).
Report coxeter_type_check(const DisplacementConfig& cfg, const FormTolerances& tol = {});

struct SampleOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::size_t max_rejections = 10'000;
};

/// Sample point with trivial stabilizer away from every mu(s) hyperplane,
/// drawn from the stream for (seed, index). Throws SamplingExhausted.
CVector sample_point(const DisplacementConfig& cfg, const std::vector<std::vector<CVector>>& rep, std::uint64_t seed,
                     std::size_t index, std::size_t max_rejections);

/// Cyclic property, covariance, lambda_0 invariance and closedness at seeded samples.
Report displacement_checks(const DisplacementConfig& cfg, const SampleOptions& opts = {},
                           const FormTolerances& tol = {});

/// Numeric rep matrices, row-major, one per group element.
std::vector<std::vector<CVector>> numeric_rep(const GroupTable& table);

}  // namespace dforge
