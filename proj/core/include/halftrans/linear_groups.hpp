#pragma once

#include <map>
#include <string>
#include <vector>

#include "halftrans/action.hpp"
#include "halftrans/matrix.hpp"

namespace halftrans {

// Points of PG(d-1, q): normalized vectors (first nonzero coordinate 1) in
// lexicographic order of their coordinates.
class ProjectiveSpace {
public:
  ProjectiveSpace(FieldPtr field, unsigned dim);

  FieldPtr const &field() const { return field_; }
  unsigned dim() const { return dim_; }
  unsigned size() const { return static_cast<unsigned>(points_.size()); }
  Vec const &point(Point i) const { return points_[i]; }
  Point index(Vec const &v) const; // v need not be normalized

  // v -> v g on points.
  Permutation permutation(Matrix const &g) const;
  // Coordinatewise x -> x^(p^k).
  Permutation frobenius_permutation(unsigned k) const;

private:
  FieldPtr field_;
  unsigned dim_;
  std::vector<Vec> points_;
  std::map<Vec, Point> index_;
};

BigInt psl_order(unsigned d, unsigned q);

// Generators of SL_d(q): an elementary transvection, a diagonal element and
// a monomial d-cycle of determinant 1.
std::vector<Matrix> sl_generators(FieldPtr const &field, unsigned d);

// PSL_d(q) acting on the points of PG(d-1, q).
PermGroup psl_on_points(unsigned d, unsigned q);

enum class LineFlavor { PSL, PGL, PGammaL };
TransitiveAction projective_line_action(unsigned q, LineFlavor flavor);

// PSL_d(q) on m-dimensional subspaces, ordered by their reduced echelon
// matrices read row by row.
TransitiveAction subspace_action(unsigned d, unsigned q, unsigned m);

struct DihedralTorus {
  Matrix t, w;
  PermGroup group; // <t, w> on PG(1, q)
};
// q = 2^f >= 4. t is the companion matrix of the first x^2 + a x + 1 (a in
// increasing element order) whose roots have order q+1; w is the first
// involution of SL_2(q), entries read row by row, with w t w = t^-1.
DihedralTorus dihedral_torus(unsigned q);
PermGroup dihedral_torus_subgroup(unsigned q);

// PSL_2(q).m (q = 2^f, m | f, field automorphisms of order m) on PG(1, q).
PermGroup psl2_extension(unsigned q, unsigned m);
// PSL_2(q).m on the cosets of the normalizer of the dihedral torus subgroup.
TransitiveAction psl2_dihedral_action(unsigned q, unsigned m = 1);

// PSL_d(q), d prime, on cosets of the normalizer C_l x| C_d of a Singer
// cycle. With `graph`, the group is PSL_d(q).2 acting on points and
// hyperplanes (extended by the standard polarity) and the subgroup is the
// normalizer there.
TransitiveAction singer_normalizer_action(unsigned d, unsigned q, bool graph = false);
PermGroup singer_normalizer_subgroup(unsigned d, unsigned q);

// Isometries (det 1) of the identity form on GF(q)^d, as a subgroup of
// PSL_d(q) on points. kind: "su" (hermitian over GF(q0^2), q = q0^2),
// "so" (symmetric bilinear), "gso" (similitudes of the symmetric form).
PermGroup form_subgroup(std::string const &kind, unsigned d, unsigned q);
TransitiveAction form_subgroup_action(std::string const &kind, unsigned d, unsigned q);

// Sp_{2n}(2) on the quadratic forms of one type polarizing to the symplectic
// form (2^{n-1}(2^n + 1) plus forms, 2^{n-1}(2^n - 1) minus forms).
TransitiveAction symplectic_forms_action(unsigned n, bool plus, bool derived = false);
// O^{+-}_{2n}(2) on the nonzero singular vectors of its quadratic form; with
// `omega` the derived subgroup.
TransitiveAction orthogonal_singular_action(unsigned n, bool plus, bool omega = false);

} // namespace halftrans
