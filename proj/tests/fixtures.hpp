#pragma once

#include <dunkl_forge/group.hpp>

namespace fixtures {

using namespace dforge;

inline GroupTable s3() {
  GroupSpec spec;
  spec.degree = 3;
  spec.permutations = {parse_cycles("(1,2)", 3), parse_cycles("(1,3)", 3)};
  return build_group(spec);
}

inline Element el(const GroupTable& t, const std::string& label) { return t.find_label(label).value(); }

inline SubsetS transpositions(const GroupTable& t) {
  return SubsetS(t, {el(t, "(1,2)"), el(t, "(1,3)"), el(t, "(2,3)")});
}

inline GroupTable q8() {
  GroupSpec spec;
  spec.kind = GroupKind::Matrix;
  spec.degree = 2;
  spec.field = Field::gaussian();
  const Scalar i = Scalar::gaussian(0, 1);
  spec.matrices = {Matrix(2, 2, {i, 0, 0, -i}), Matrix(2, 2, {0, 1, -1, 0})};
  spec.generator_names = {"i", "j"};
  return build_group(spec);
}

inline Element minus_one(const GroupTable& t) { return t.find_matrix(Matrix(2, 2, {-1, 0, 0, -1}).in_field(t.field())).value(); }

/// Hyperoctahedral group B2 as signed permutation matrices.
inline GroupTable b2() {
  GroupSpec spec;
  spec.kind = GroupKind::Matrix;
  spec.degree = 2;
  spec.matrices = {Matrix(2, 2, {-1, 0, 0, 1}), Matrix(2, 2, {0, 1, 1, 0})};
  return build_group(spec);
}

}  // namespace fixtures

namespace fixtures {

inline Matrix perm_matrix(const std::vector<int>& images) {
  const std::size_t n = images.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, images[i]) = Scalar(1);
  return m;
}

/// S3 permuting three coordinates.
inline GroupTable a2() {
  GroupSpec spec;
  spec.kind = GroupKind::Matrix;
  spec.degree = 3;
  spec.matrices = {perm_matrix({1, 0, 2}), perm_matrix({2, 1, 0})};
  return build_group(spec);
}

/// G(3,1,2): diag(zeta_3, 1) and the coordinate swap.
inline GroupTable g312() {
  GroupSpec spec;
  spec.kind = GroupKind::Matrix;
  spec.degree = 2;
  spec.field = Field::cyclotomic(3);
  spec.matrices = {Matrix(2, 2, {Scalar::zeta(3), 0, 0, 1}), Matrix(2, 2, {0, 1, 1, 0})};
  return build_group(spec);
}

inline GroupTable z4() {
  GroupSpec spec;
  spec.kind = GroupKind::Matrix;
  spec.degree = 1;
  spec.field = Field::cyclotomic(4);
  spec.matrices = {Matrix(1, 1, {Scalar::zeta(4)})};
  return build_group(spec);
}

}  // namespace fixtures
