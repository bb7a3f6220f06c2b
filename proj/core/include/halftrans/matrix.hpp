#pragma once

#include <compare>
#include <vector>

#include "halftrans/finite_field.hpp"

namespace halftrans {

using Elem = FiniteField::Elem;
using Vec = std::vector<Elem>;
// Polynomial over a finite field, coefficients from degree 0 upward, no
// trailing zeros (the zero polynomial is empty).
using Poly = std::vector<Elem>;

class Matrix {
public:
  Matrix() = default;
  Matrix(FieldPtr field, unsigned dim);
  static Matrix identity(FieldPtr field, unsigned dim);
  static Matrix from_rows(FieldPtr field, std::vector<Vec> const &rows);

  unsigned dim() const { return dim_; }
  FieldPtr const &field() const { return field_; }
  Elem operator()(unsigned i, unsigned j) const { return a_[i * dim_ + j]; }
  Elem &at(unsigned i, unsigned j) { return a_[i * dim_ + j]; }
  Vec row(unsigned i) const;

  Matrix operator*(Matrix const &rhs) const;
  Matrix operator+(Matrix const &rhs) const;
  Matrix operator-(Matrix const &rhs) const;
  Matrix scaled(Elem c) const;
  Matrix transpose() const;
  Matrix inverse() const; // throws InvalidArgument if singular
  Matrix pow(long long e) const;
  // Entries raised to the p^k-th power.
  Matrix frobenius(unsigned k = 1) const;
  Elem det() const;
  unsigned rank() const;
  bool is_identity() const;
  bool is_scalar() const;

  friend bool operator==(Matrix const &a, Matrix const &b) { return a.a_ == b.a_; }
  friend auto operator<=>(Matrix const &a, Matrix const &b) { return a.a_ <=> b.a_; }

private:
  FieldPtr field_;
  unsigned dim_ = 0;
  std::vector<Elem> a_;
};

// Row vector times matrix.
Vec row_times(Vec const &v, Matrix const &m);
// Scales v so its first nonzero coordinate is 1.
Vec normalize_projective(FiniteField const &F, Vec v);
// Reduced row echelon form; zero rows dropped.
std::vector<Vec> rref(FiniteField const &F, std::vector<Vec> rows);

Poly poly_trim(Poly a);
Poly poly_mul(FiniteField const &F, Poly const &a, Poly const &b);
Poly poly_sub(FiniteField const &F, Poly const &a, Poly const &b);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(FiniteField const &F, Poly const &a, Poly const &b);
Poly poly_gcd(FiniteField const &F, Poly a, Poly b); // monic
Poly poly_powmod(FiniteField const &F, Poly const &base, unsigned long long e,
                 Poly const &mod);
Elem poly_eval(FiniteField const &F, Poly const &a, Elem x);
Matrix poly_eval(Poly const &a, Matrix const &m);

// Monic characteristic polynomial det(tI - m), via Hessenberg reduction.
Poly characteristic_polynomial(Matrix const &m);

// Codimension of the largest eigenspace over the algebraic closure.
// Irreducible factors of the characteristic polynomial of degree e > 1 are
// handled through dim ker f(m) = e * (eigenspace dimension); requires dim <= 5.
unsigned nu(Matrix const &m);

} // namespace halftrans
