#pragma once

#include <array>
#include <optional>
#include <vector>

#include "core/chartable.hpp"
#include "core/exactnum.hpp"
#include "core/permgroup.hpp"

namespace artin3 {

// Exact 3x3 matrix over cyclotomic numbers, row-major.
struct Matrix3 {
  std::array<CycNum, 9> a;

  Matrix3() = default;
  static Matrix3 identity();
  static Matrix3 scalar(const CycNum& c);

  const CycNum& at(int r, int c) const { return a[r * 3 + c]; }
  CycNum& at(int r, int c) { return a[r * 3 + c]; }

  Matrix3 operator*(const Matrix3& o) const;
  Matrix3 operator-() const;
  CycNum trace() const;
  CycNum det() const;
  bool operator==(const Matrix3& o) const;

  // All entries rewritten over Q(zeta_m).
  Matrix3 on_conductor(int m) const;
};

// Finite group of exact 3x3 matrices. Elements are normalized to a common
// ambient conductor (at most 60) and listed in a deterministic order. The
// abstract structure is carried by the left-regular permutation group.
class MatrixGroup3 {
public:
  static constexpr size_t kMaxOrder = 240;
  static constexpr int kMaxAmbient = 60;

  // Closure of the generators; GroupTooLarge above kMaxOrder (which also
  // flags infinite input). Entry conductors must stay within kMaxAmbient.
  static MatrixGroup3 close(std::vector<Matrix3> gens);

  size_t order() const { return elems_.size(); }
  const std::vector<Matrix3>& elements() const { return elems_; }
  const std::vector<Matrix3>& generators() const { return gens_; }
  int ambient_conductor() const { return ambient_; }

  size_t index_of(const Matrix3& m) const;  // InvalidArgument if absent
  bool contains(const Matrix3& m) const;

  // Left-regular permutation model and the index correspondence.
  const GroupPtr& abstract_group() const { return abstract_; }
  size_t to_abstract(size_t matrix_index) const { return to_abs_[matrix_index]; }
  size_t from_abstract(size_t abstract_index) const { return from_abs_[abstract_index]; }

private:
  MatrixGroup3() = default;
  std::vector<Matrix3> gens_;
  std::vector<Matrix3> elems_;
  int ambient_ = 1;
  GroupPtr abstract_;
  std::vector<size_t> to_abs_;
  std::vector<size_t> from_abs_;
};

// Trace character (the 3-dimensional character of the inclusion) and the
// determinant character, both on the abstract group.
std::pair<ClassFunction, ClassFunction> trace_and_det_characters(const MatrixGroup3& G);

struct OrthoClassification {
  bool in_so3 = false;
  bool contains_minus_one = false;
  bool irreducible = false;
  // C<k>, D<k>, A4, S4, A5, an SO(3) label suffixed with xC2, or
  // S4-isoclinic for the irreducible index-two lift case.
  std::string abstract_type;
  // Present when -1 is in G: H = G intersect SO(3), with G = H x {+-1} and
  // the sign factor recovered by the determinant character.
  std::optional<MatrixGroup3> split_h;
};

// Decision tree over (in SO(3)?, -1 in G?, irreducible?). NotOrthogonal if
// some element has determinant other than +-1.
OrthoClassification classify(const MatrixGroup3& G);

std::string classification_to_json(const OrthoClassification& c, const MatrixGroup3& G);

struct IsoclinicLift {
  MatrixGroup3 lifted;          // H* = H union (-kappa)H, inside SO(3)
  std::vector<size_t> map;      // element index in G -> element index in H*
};

// The index-two sign lift h -> h, kappa h -> (-kappa) h for groups not inside
// SO(3) with -1 absent. PreconditionFailed otherwise. The element map is
// verified to be a group isomorphism.
IsoclinicLift isoclinic_lift(const MatrixGroup3& G);

// Abstract-type recognition for groups on the SO(3) list, by certified
// structure tests (cyclic; dihedral presentation; order + derived-subgroup
// fingerprints for A4, S4, A5). UnsupportedGroup if nothing matches.
std::string recognize_so3_type(const GroupPtr& A);

// Built-in exact generator sets.
std::vector<Matrix3> tetrahedral_gens();   // A4 rotations
std::vector<Matrix3> octahedral_gens();    // S4 rotations
std::vector<Matrix3> icosahedral_gens();   // A5 rotations, conductor 5
std::vector<Matrix3> s4_standard_gens();   // standard rep of S4, det = sign
// Rotation about the z axis by 2 pi / k, plus the flip turning it dihedral.
Matrix3 rotation_z(int k);
Matrix3 flip_x();

}  // namespace artin3
