#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dunkl_forge/matrix.hpp"

namespace dforge {

/// Index of an element inside its GroupTable.
struct Element {
  std::uint32_t id = 0;
  auto operator<=>(const Element&) const = default;
};

using Permutation = std::vector<std::uint32_t>;  ///< 0-based images, x -> p[x]

enum class GroupKind { Permutation, Matrix };

/// Generators of a finite group. Permutations act on the right:
/// x^(gh) = (x^g)^h, so (gh)[x] = h[g[x]]. Matrix products are ordinary
/// products, matching the row-vector right action x -> x g.
struct GroupSpec {
  GroupKind kind = GroupKind::Permutation;
  std::size_t degree = 0;
  std::vector<Permutation> permutations;
  std::vector<Matrix> matrices;
  std::vector<std::string> generator_names;  ///< matrix groups only; default g1, g2, ...
  Field field = Field::rational();
  std::size_t order_bound = 10000;
};

/// A finite group as explicit multiplication and inverse tables. Immutable
/// after construction.
class GroupTable {
 public:
  std::size_t order() const { return inverse_.size(); }
  GroupKind kind() const { return kind_; }
  std::size_t degree() const { return degree_; }
  const Field& field() const { return field_; }
  Element identity() const { return Element{0}; }

  Element product(Element a, Element b) const { return Element{product_[a.id * order() + b.id]}; }
  Element inverse(Element a) const { return Element{inverse_[a.id]}; }
  /// g s g^-1
  Element conjugate(Element g, Element s) const { return product(product(g, s), inverse(g)); }
  bool commute(Element a, Element b) const { return product(a, b) == product(b, a); }

  const std::string& label(Element a) const { return labels_[a.id]; }
  std::optional<Element> find_label(const std::string& label) const;
  std::vector<Element> elements() const;

  bool has_rep() const { return !rep_.empty(); }
  const Matrix& rep(Element a) const;
  std::optional<Element> find_matrix(const Matrix& m) const;

  bool is_permutation_group() const { return kind_ == GroupKind::Permutation; }
  const Permutation& permutation(Element a) const { return perms_.at(a.id); }
  std::optional<Element> find_permutation(const Permutation& p) const;

  /// Exhaustive associativity check; skipped (returns nullopt) above `bound`.
  std::optional<bool> check_associative(std::size_t bound = 200) const;
  /// rep[g] rep[h] = rep[gh] for all pairs, and every rep[g] unitary.
  bool rep_is_unitary_homomorphism() const;

 private:
  friend GroupTable build_group(const GroupSpec& spec);

  GroupKind kind_ = GroupKind::Permutation;
  std::size_t degree_ = 0;
  Field field_;
  std::vector<std::uint32_t> product_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::string> labels_;
  std::vector<Matrix> rep_;
  std::vector<Permutation> perms_;
  std::unordered_map<std::string, std::uint32_t> by_key_;
  std::unordered_map<std::string, std::uint32_t> by_label_;
};

/// Breadth-first closure of the generators. Element 0 is the identity and the
/// element order follows discovery, so labels are shortest generator words.
GroupTable build_group(const GroupSpec& spec);

/// Cycle notation with 1-based points, "()" for the identity.
std::string cycle_notation(const Permutation& p);
/// Parses "(1,2)(3,4)" or "(1 2)" into images on `degree` points.
Permutation parse_cycles(const std::string& text, std::size_t degree);

/// The subset S defining the calculus, kept sorted by element index.
class SubsetS {
 public:
  SubsetS() = default;
  SubsetS(const GroupTable& table, std::vector<Element> members);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Element>& members() const { return members_; }
  Element operator[](std::size_t i) const { return members_[i]; }
  bool contains(Element e) const { return e.id < position_.size() && position_[e.id] >= 0; }
  /// Position of e within members(); e must be a member.
  std::size_t index_of(Element e) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

 private:
  std::vector<Element> members_;
  std::vector<int> position_;
};

/// Smallest superset of the seeds closed under conjugation by the whole
/// group and, when asked, under inversion.
SubsetS conjugacy_closure(const GroupTable& table, std::span<const Element> seeds, bool add_inverses);

struct ConditionResult {
  bool pass = true;
  std::optional<Element> witness;     ///< offending element
  std::optional<Element> conjugator;  ///< for the conjugation condition
  std::string message;
};

/// Outcome of the four defining conditions on S, numbered as
/// (1) S^-1 = S, (2) g^-1 S g = S, (3) e not in S, (4) S nonempty.
struct SubsetValidation {
  std::array<ConditionResult, 4> conditions;
  bool ok() const;
  /// 1-based number of the first failing condition, 0 if none.
  int first_failure() const;
};

SubsetValidation validate_subset(const GroupTable& table, std::span<const Element> members);

/// Elements s != e with rank(rep[s] - I) = 1.
std::vector<Element> complex_reflections(const GroupTable& table);

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<Element>> conjugacy_classes(const GroupTable& table);

}  // namespace dforge

template <>
struct std::hash<dforge::Element> {
  std::size_t operator()(const dforge::Element& e) const noexcept { return e.id; }
};
