#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nichols {

/// Finite non-abelian quotients of Gamma_2, Gamma_3, Gamma_4, and T.
///
/// Gamma_n (n >= 2):  generators a, b, nu;  ba = nu ab, nu a = a nu^{-1},
///                    nu b = b nu, nu^n = 1.  Quotient parameters: the orders
///                    A of a and B of b (A even, n | B, else the image is
///                    abelian or the quotient ill-defined).
/// Gamma_3 variant:   generators eps, g, z;  g eps g^{-1} = eps^2, z central,
///                    eps^3 = 1.  Parameters: order N of g (even), order M of z.
/// T:                 generators zeta (central), chi_1, chi_2 with the braid
///                    relation and chi_1^3 = chi_2^3.  Quotients are realized
///                    inside SL(2,3) x C_M; parameter: M.
///
/// Elements are normal-form exponent tuples (or an SL(2,3) matrix plus a
/// central exponent); multiplication moves generators into normal order via
/// the defining relations, folded into closed-form exponent arithmetic.
enum class Family { Gamma2, Gamma3, Gamma4, T };

struct GroupSpec {
  Family family;
  std::vector<unsigned> params;
  bool operator==(const GroupSpec&) const = default;
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);

using Elt = uint16_t;

struct Quandle {
  std::vector<Elt> elements;             // group elements carried by the quandle
  std::vector<std::vector<int>> table;   // table[x][y] = index of elements[x] elements[y] elements[x]^{-1}
  bool self_distributive() const;
  /// One of Z2^{2,2}, Z3^{3,1}, Z3^{3,2}, Z4^{4,2}, Z_T^{4,1}, trivial(n), unknown.
  std::string type_name() const;
};

class Group {
 public:
  static std::shared_ptr<const Group> make(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  int order() const { return static_cast<int>(tuples_.size()); }

  Elt one() const { return one_; }
  Elt mul(Elt a, Elt b) const { return mul_[static_cast<size_t>(a) * order() + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt conj(Elt x, Elt by) const { return mul(mul(by, x), inv(by)); }
  Elt power(Elt a, long e) const;
  int element_order(Elt a) const;
  bool commute(Elt a, Elt b) const { return mul(a, b) == mul(b, a); }

  /// Family generators, fixed order: Gamma_*: [nu, a, b] (Gamma3: [eps, g, z]);
  /// T: [u, l, c] with u, l the unitriangular SL(2,3) generators, c the C_M one.
  const std::vector<Elt>& generators() const { return gens_; }

  /// Named accessors for the canonical epimorphism targets.
  Elt gen_eps() const { return gens_[0]; }
  Elt gen_a() const { return gens_[1]; }
  Elt gen_b() const { return gens_[2]; }

  std::vector<Elt> conjugacy_class(Elt x) const; // BFS over generator conjugations
  std::vector<Elt> centralizer_elements(Elt x) const;
  std::vector<Elt> centralizer_generators(Elt x) const; // greedy small generating set
  std::vector<Elt> center() const;
  bool is_central(Elt x) const;
  std::vector<Elt> subgroup_closure(const std::vector<Elt>& gens) const;
  bool generates(const std::vector<Elt>& gens) const;

  /// Word in generators() with product equal to x (left-to-right).
  const std::vector<int>& word_of(Elt x) const { return words_[x]; }

  /// Elements in BFS discovery order from the identity (shortest words first).
  const std::vector<Elt>& bfs_order() const { return bfs_order_; }

  /// Word of an element of the subgroup generated by sub_gens, in sub_gens.
  std::vector<int> word_in(const std::vector<Elt>& sub_gens, Elt x) const;

  Quandle quandle_of_class(Elt x) const;
  /// Union of the conjugacy classes of the given representatives.
  Quandle quandle_of_support(const std::vector<Elt>& reps) const;

  /// Exponent tuple (Gamma families) or matrix entries plus central exponent (T).
  std::array<int, 5> tuple_of(Elt x) const { return tuples_[x]; }
  Elt from_tuple(const std::array<int, 5>& t) const;
  std::string element_str(Elt x) const;

 private:
  Group() = default;
  void build_tables();

  GroupSpec spec_;
  std::vector<std::array<int, 5>> tuples_;
  std::vector<Elt> mul_;
  std::vector<Elt> inv_;
  std::vector<std::vector<int>> words_;
  std::vector<Elt> bfs_order_;
  std::vector<Elt> gens_;
  Elt one_;
};

} // namespace nichols
