#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dunkl_forge/group.hpp"
#include "dunkl_forge/report.hpp"

namespace dforge {

using ElementPair = std::pair<Element, Element>;

/// (g, h) -> (g h g^-1, g)
ElementPair flip(const GroupTable& table, const SubsetS& S, Element g, Element h);
/// (g, h) -> (h, h^-1 g h)
ElementPair flip_inv(const GroupTable& table, const SubsetS& S, Element g, Element h);

/// A flip orbit as the chain (q1,q2), (q2,q3), ..., (qn,q1), each pair sent
/// to the next by flip_inv.
struct Orbit {
  std::vector<ElementPair> pairs;

  std::size_t size() const { return pairs.size(); }
  std::vector<Element> points() const;
};

/// Points of a cyclic line, stored in the lexicographically least rotation.
struct CyclicLine {
  std::vector<std::size_t> points;

  static CyclicLine canonical(std::vector<std::size_t> points);
  std::size_t size() const { return points.size(); }
  bool operator==(const CyclicLine&) const = default;
  auto operator<=>(const CyclicLine&) const = default;
};

/// Orbits of flip on S x S, started from unvisited pairs in index order.
std::vector<Orbit> enumerate_orbits(const GroupTable& table, const SubsetS& S);

/// True when the first components q1..qn are pairwise distinct.
bool first_components_distinct(const Orbit& o);

/// q_k q_{k+1}, checked constant along the orbit (q1^2 for a singleton).
Element orbit_invariant(const GroupTable& table, const Orbit& o);

/// Braid relation s12 s23 s12 = s23 s12 s23 on S^3 and commutation of
/// non-adjacent flips on S^n. Throws BudgetExceeded past |S|^n > 1e7.
Report braid_check(const GroupTable& table, const SubsetS& S, int n);

/// A finite set of points with a family of cyclically ordered lines.
class CyclicSpace {
 public:
  CyclicSpace() = default;
  /// Lines are canonicalized; no axioms are enforced here.
  CyclicSpace(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> lines);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<CyclicLine>& lines() const { return lines_; }

  struct Incidence {
    std::size_t line;
    std::size_t position;  ///< index of x inside the line
  };
  /// Lines in which y directly follows x (x != y), or the singleton (x).
  const std::vector<Incidence>& incidences(std::size_t x, std::size_t y) const;

 private:
  std::vector<std::string> labels_;
  std::vector<CyclicLine> lines_;
  std::vector<std::vector<Incidence>> by_pair_;
};

/// Omega = S with one line per flip orbit.
CyclicSpace build_cyclic_space(const GroupTable& table, const SubsetS& S);

/// The seven imaginary octonion units: each Fano line in both orientations
/// plus the seven singletons.
CyclicSpace fano_space();

/// x < y: third point on the line through (x, y); x on lines of length <= 2
/// and on the diagonal. Throws ValidationError if no line passes (x, y).
std::size_t triangle_action(const CyclicSpace& space, std::size_t x, std::size_t y);

struct AxiomOptions {
  std::uint64_t seed = 0;
  std::size_t exhaustive_limit = 10'000'000;  ///< |Omega|^3 bound before sampling
  std::size_t samples = 1'000'000;
};

/// Line axioms, both cancellation laws, non-triviality, distributivity of the
/// action (over all triples and over collinear triples) and independence of
/// the consecutive composition along each line. Left cancellation and
/// non-triviality are hypotheses for reconstruction, reported Unmet when absent.
Report verify_cyclic_axioms(const CyclicSpace& space, const AxiomOptions& opts = {});

/// Check names used by verify_cyclic_axioms.
namespace axiom {
inline constexpr const char* kUniqueLine = "unique oriented line per pair";
inline constexpr const char* kSingletons = "singleton lines";
inline constexpr const char* kDistinctPoints = "line points distinct";
inline constexpr const char* kRightCancel = "right cancellation";
inline constexpr const char* kLeftCancel = "left cancellation";
inline constexpr const char* kNonTrivial = "non-triviality";
inline constexpr const char* kDistributive = "distributivity";
inline constexpr const char* kDistributiveCollinear = "distributivity on collinear triples";
inline constexpr const char* kConsecutive = "consecutive composition constant";
}  // namespace axiom

struct Reconstruction {
  GroupTable group;
  std::vector<Element> embedding;  ///< point x -> the permutation (.) < x
};

/// Group generated by the permutations (.) < x. Refuses with
/// AxiomsNotVerified unless right cancellation, non-triviality and distributivity
/// hold. Without left cancellation the embedding is not injective.
Reconstruction reconstruct_group(const CyclicSpace& space);

/// x < y equals y^-1 x y inside the reconstructed group.
CheckResult check_reconstruction(const CyclicSpace& space, const Reconstruction& rec);

/// x < y equals y^-1 x y in the source group of a group-derived space.
CheckResult check_group_action(const GroupTable& table, const SubsetS& S, const CyclicSpace& space);

/// sum over consecutive pairs of each line of mul(xi(w_i), xi(w_{i+1})) has
/// norm <= tol; singletons give xi(w)^2.
template <class T, class Mul, class Norm>
CheckResult check_dunkl_representation(const CyclicSpace& space, const std::vector<T>& xi, Mul mul, Norm norm,
                                       double tol) {
  CheckResult r{.name = "dunkl representation", .tolerance = tol};
  for (const auto& line : space.lines()) {
    const auto& p = line.points;
    auto acc = mul(xi[p[0]], xi[p[p.size() > 1 ? 1 : 0]]);
    for (std::size_t i = 1; i < p.size(); ++i) acc = acc + mul(xi[p[i]], xi[p[(i + 1) % p.size()]]);
    const double res = norm(acc);
    r.max_residual = std::max(r.max_residual, res);
    if (res > tol) {
      std::string w = "(";
      for (std::size_t i = 0; i < p.size(); ++i) w += (i ? "," : "") + space.labels()[p[i]];
      r.fail(w + ")");
    }
  }
  return r;
}

}  // namespace dforge
