#pragma once

#include "nichols/weyl.hpp"

#include <map>

namespace nichols {

/// One factor (n)_{t1^a t2^b} = 1 + t1^a t2^b + ... + t1^{a(n-1)} t2^{b(n-1)}.
struct QuantumFactor {
  unsigned n;
  int a, b;
  bool operator==(const QuantumFactor&) const = default;
  auto operator<=>(const QuantumFactor&) const = default;
};

/// Bigraded Hilbert series held as a product of quantum-integer factors;
/// the expansion is a polynomial with non-negative integer coefficients and
/// constant term 1.
struct HilbertSeries {
  std::vector<QuantumFactor> factors;

  std::map<std::pair<int, int>, BigInt> expansion() const;
  BigInt dimension() const; // product of the n's = evaluation at t1 = t2 = 1
  void canonicalize();      // sort factors for deterministic output
};

enum class YClassLabel { Y1, Y2, Y3, Y4, Y5, Y6, Y7, Y8, None };
std::string yclass_name(YClassLabel y);
YClassLabel yclass_from_name(const std::string& s);

/// h_p and h'_p of the univariate series table: h_2 = 3, h_3 = 2, h_p = 6
/// otherwise; h'_3 = 2, h'_p = 6 otherwise.
unsigned h_of(unsigned p);
unsigned hprime_of(unsigned p);

/// Univariate factor list of the class, as pairs (n, e) meaning (n)_{t^e}.
/// Throws on label/characteristic mismatch (Y2 requires characteristic 2).
std::vector<std::pair<unsigned, unsigned>> yclass_series(YClassLabel y, unsigned characteristic);

/// Classifies a module over a Gamma_3 image into Y1..Y8 (None if no row fits).
YClassLabel yclass_of(const YDModule& U);

struct RootAssignment {
  RootExpr root;
  YClassLabel cls;
};

/// Walks the reflections along each root's alternating word and classifies the
/// corresponding pair entry.
std::vector<RootAssignment> root_assignments(const CartanScheme2& s, const Caps& caps = {});

/// Substitutes t -> t1^{m1} t2^{m2} in each class's univariate factors.
HilbertSeries assemble(const std::vector<RootAssignment>& roots, unsigned characteristic);

/// Quantum symmetrizer S_d on U^{(x)d} via the braided-shuffle factorization
/// S_d = (id (x) S_{d-1}) (id + c_1 + c_1 c_2 + ... + c_1 ... c_{d-1}).
Matrix symmetrizer_matrix(const YDModule& U, int d, long cap = 20000);

/// Sum over Matsumoto lifts of all permutations (cross-check, small d only).
Matrix symmetrizer_matsumoto(const YDModule& U, int d, long cap = 20000);

/// Bigraded symmetrizer ranks: for each (d1, d2) with d1 + d2 <= max_degree,
/// the rank of S_{d1+d2} on the (d1, d2) multidegree component of
/// (V (+) W)^{(x)(d1+d2)}, computed per group-degree block.
std::map<std::pair<int, int>, long> oracle_bigraded(const YDModule& V, const YDModule& W,
                                                    int max_degree, long cap = 200000);

/// Univariate oracle: rank of S_d on U^{(x)d} for d = 0..max_degree.
std::vector<long> oracle_univariate(const YDModule& U, int max_degree, long cap = 200000);

} // namespace nichols
