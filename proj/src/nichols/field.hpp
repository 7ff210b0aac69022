#pragma once

#include "nichols/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

/// Exact base fields: Q, Q(zeta_n) for n in {1,2,3,4,6,12}, F_p, and F_p(zeta_n).
///
/// Elements are residue-class polynomials in the adjoined root zeta, reduced
/// modulo a fixed minimal polynomial: the full cyclotomic polynomial Phi_n in
/// characteristic 0, and the lexicographically smallest monic irreducible
/// factor of Phi_n in characteristic p.  All coefficient arithmetic is exact
/// (arbitrary-precision rationals, reduced mod p when p > 0).
struct FieldDescriptor {
  unsigned characteristic = 0; // 0 or a prime
  unsigned cyclotomic_order = 1; // order of the adjoined root; 1 = prime field / Q

  bool operator==(const FieldDescriptor&) const = default;
};

class Field;

class Scalar {
 public:
  Scalar() : field_(nullptr) {}
  Scalar(const Field* f, std::vector<Rational> coeffs);

  const Field* field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Multiplicative order if this is a root of unity, 0 otherwise (search cap 48).
  int multiplicative_order() const;

  /// Canonical dense form "c0 + c1*z + ..." with rational coefficients.
  std::string str() const;

 private:
  const Field* field_;
  std::vector<Rational> c_; // size = extension degree, canonical
  friend class Field;
};

class Field {
 public:
  /// Fields are interned: one immutable instance per descriptor, never freed.
  static const Field& get(const FieldDescriptor& d);
  static const Field& rationals() { return get({0, 1}); }

  const FieldDescriptor& descriptor() const { return desc_; }
  unsigned characteristic() const { return desc_.characteristic; }
  unsigned degree() const { return degree_; }
  /// Minimal polynomial of zeta, monic, coefficient i of x^i, length degree+1.
  const std::vector<Rational>& minimal_polynomial() const { return minpoly_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar zeta() const; // primitive cyclotomic_order-th root of unity
  Scalar from_int(long n) const;
  Scalar from_rational(const Rational& r) const;
  Scalar from_coeffs(std::vector<Rational> c) const;

  Scalar minus_one() const { return from_int(-1); }

  /// All x in the field with x^n = 1, deduplicated, deterministic order.
  std::vector<Scalar> roots_of_unity(unsigned n) const;

  /// Parses the canonical form produced by Scalar::str(); round-trips exactly.
  Scalar parse(const std::string& s) const;

  Rational reduce_coeff(const Rational& r) const;

 private:
  explicit Field(const FieldDescriptor& d);

  FieldDescriptor desc_;
  unsigned degree_;
  std::vector<Rational> minpoly_;
  std::vector<Scalar> torsion_; // cached roots-of-unity generator closure

  std::vector<Rational> reduce_poly(std::vector<Rational> p) const;
  friend class Scalar;
};

/// (n)_q = 1 + q + ... + q^{n-1}
Scalar quantum_integer(unsigned n, const Scalar& q);

/// (n)!_q = prod_{k=1}^{n} (k)_q
Scalar quantum_factorial(unsigned n, const Scalar& q);

} // namespace nichols
