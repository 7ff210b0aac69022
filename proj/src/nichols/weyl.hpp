#pragma once

#include "nichols/adjoint.hpp"

#include <array>
#include <string>
#include <vector>

namespace nichols {

/// Rank-two Cartan scheme generated from a pair by the reflections R_1, R_2.
///
/// Objects are closed up under reflections.  Classified Gamma_3 pairs are
/// identified by (class label, Cartan matrix) -- the identification the paper's
/// schemes use; unclassified pairs fall back to componentwise graded
/// isomorphism.
struct SchemeObject {
  PairState pair;
  PairState::Analysis analysis;
  std::array<int, 2> next{-1, -1}; // object reached by R_1 / R_2
};

struct CartanScheme2 {
  std::vector<SchemeObject> objects;
  int base = 0;
  bool finite = false;
  std::string failure; // set when generation aborted (undefined reflection / cap)

  bool axioms_hold(std::string* why = nullptr) const;
  bool standard() const; // all objects carry the same Cartan matrix
};

CartanScheme2 generate_scheme(const PairState& p, const Caps& caps = {});

/// A positive real root together with its alternating-word expression
/// s_{w[0]} s_{w[1]} ... s_{w[m-1]} (alpha_j), evaluated right-to-left along
/// the object path obj -> r_{w[0]}(obj) -> ...
struct RootExpr {
  std::array<int, 2> coords;
  std::vector<int> word; // reflection indices, 1-based
  int j;                 // simple root index, 1-based
};

/// Positive roots at an object, enumerated by the alternating word starting
/// with s_1 (the order used by the decomposition theorems).  Throws on
/// non-termination past the cap ("infinite root system").
std::vector<RootExpr> positive_roots(const CartanScheme2& s, int obj, int first = 1,
                                     int cap = 24);

} // namespace nichols
