#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nichols/field.hpp"

using namespace nichols;

TEST_CASE("field creation and minimal polynomials") {
  const Field& q = Field::get({0, 1});
  CHECK(q.degree() == 1);
  CHECK(q.zeta().is_one()); // degenerate extension: zeta = 1

  const Field& f4 = Field::get({2, 3});
  CHECK(f4.degree() == 2); // field with 4 elements
  Scalar z = f4.zeta();
  CHECK((z * z + z + f4.one()).is_zero()); // z^2 + z + 1 = 0

  const Field& q6 = Field::get({0, 6});
  Scalar z6 = q6.zeta();
  CHECK((z6 * z6 - z6 + q6.one()).is_zero()); // Phi_6 = x^2 - x + 1

  CHECK_THROWS(Field::get({4, 1}));  // non-prime characteristic
  CHECK_THROWS(Field::get({3, 6})); // p divides cyclotomic order
  CHECK_THROWS(Field::get({0, 5})); // unsupported order
}

TEST_CASE("zeta has exact multiplicative order") {
  for (unsigned n : {1u, 2u, 3u, 4u, 6u, 12u}) {
    CHECK(Field::get({0, n}).zeta().multiplicative_order() == static_cast<int>(n));
  }
  CHECK(Field::get({2, 3}).zeta().multiplicative_order() == 3);
  CHECK(Field::get({3, 4}).zeta().multiplicative_order() == 4);
  CHECK(Field::get({5, 12}).zeta().multiplicative_order() == 12);
  CHECK(Field::get({7, 12}).zeta().multiplicative_order() == 12);
}

TEST_CASE("quantum integers") {
  const Field& q = Field::rationals();
  CHECK(quantum_integer(2, q.from_int(-1)).is_zero());
  CHECK(quantum_integer(6, q.one()) == q.from_int(6));

  const Field& q3 = Field::get({0, 3});
  CHECK(quantum_integer(3, q3.zeta()).is_zero());

  const Field& f3 = Field::get({3, 1});
  CHECK(quantum_factorial(3, f3.one()).is_zero()); // (3)_1 = 3 = 0 in char 3

  const Field& q6 = Field::get({0, 6});
  CHECK_FALSE(quantum_factorial(2, q6.zeta()).is_zero()); // 1 + zeta_6 != 0
  CHECK(quantum_factorial(4, q6.from_int(-1)).is_zero()); // contains (2)_{-1}
}

TEST_CASE("quantum integer multiplicativity (nm)_q = (n)_q (m)_{q^n}") {
  const Field& f = Field::get({0, 12});
  std::vector<Scalar> qs = f.roots_of_unity(12);
  qs.push_back(f.from_int(2));
  for (const auto& q : qs)
    for (unsigned n = 1; n <= 6; ++n)
      for (unsigned m = 1; m <= 6; ++m)
        CHECK(quantum_integer(n * m, q) == quantum_integer(n, q) * quantum_integer(m, q.pow(n)));
}

TEST_CASE("quantum factorial vanishes iff some quantum integer does") {
  for (FieldDescriptor d : {FieldDescriptor{0, 12}, FieldDescriptor{2, 3}, FieldDescriptor{3, 4},
                            FieldDescriptor{5, 4}, FieldDescriptor{7, 3}}) {
    const Field& f = Field::get(d);
    for (const auto& q : f.roots_of_unity(12))
      for (unsigned n = 1; n <= 7; ++n) {
        bool some_zero = false;
        for (unsigned k = 1; k <= n; ++k)
          if (quantum_integer(k, q).is_zero()) some_zero = true;
        CHECK(quantum_factorial(n, q).is_zero() == some_zero);
      }
  }
}

TEST_CASE("roots of unity") {
  CHECK(Field::rationals().roots_of_unity(3).size() == 1);
  CHECK(Field::get({0, 3}).roots_of_unity(3).size() == 3);
  CHECK(Field::get({2, 3}).roots_of_unity(3).size() == 3);
  CHECK(Field::get({0, 12}).roots_of_unity(12).size() == 12);
  CHECK(Field::get({0, 1}).roots_of_unity(2).size() == 2); // {1, -1}
  for (const auto& x : Field::get({0, 12}).roots_of_unity(6)) CHECK(x.pow(6).is_one());
}

TEST_CASE("field axioms on samples") {
  for (FieldDescriptor d : {FieldDescriptor{0, 6}, FieldDescriptor{2, 3}, FieldDescriptor{7, 4}}) {
    const Field& f = Field::get(d);
    std::vector<Scalar> sample = f.roots_of_unity(12);
    sample.push_back(f.zero());
    sample.push_back(f.from_int(3));
    sample.push_back(f.zeta() + f.from_int(2));
    for (const auto& a : sample)
      for (const auto& b : sample)
        for (const auto& c : sample) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
    for (const auto& a : sample) {
      if (a.is_zero()) continue;
      CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("scalar serialization round-trips bit-exactly") {
  for (FieldDescriptor d : {FieldDescriptor{0, 12}, FieldDescriptor{0, 1}, FieldDescriptor{5, 4}}) {
    const Field& f = Field::get(d);
    std::vector<Scalar> sample = f.roots_of_unity(12);
    sample.push_back(f.zero());
    sample.push_back(f.from_rational(Rational(-7, 3)) * f.zeta());
    for (const auto& a : sample) {
      Scalar back = f.parse(a.str());
      CHECK(back == a);
      CHECK(back.str() == a.str());
    }
  }
}
