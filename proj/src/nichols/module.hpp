#pragma once

#include "nichols/group.hpp"
#include "nichols/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nichols {

/// A representation of a centralizer subgroup, given by invertible matrices
/// on a small generating set.  Degree 1 = character, degree 2 only occurs for
/// Gamma_3 images in characteristic != 3.
struct CentralizerRep {
  std::vector<Elt> gens;
  std::vector<Matrix> images; // per generator, degree x degree

  int degree() const { return images.empty() ? 0 : images[0].rows(); }

  /// Value on an arbitrary subgroup element, via word decomposition.
  Matrix value(const Group& G, Elt x) const;

  /// Checks that the generator images extend to a homomorphism.
  bool well_defined(const Group& G, std::string* why = nullptr) const;
};

/// Yetter-Drinfeld module over a group quotient: a G-graded space with a
/// G-action such that h . V_d lies in V_{h d h^{-1}}.  The basis is adapted:
/// every basis vector is homogeneous.
class YDModule {
 public:
  YDModule() = default;
  YDModule(std::shared_ptr<const Group> G, const Field* K, std::vector<Elt> degrees,
           std::vector<Matrix> gen_action, std::vector<std::string> labels = {});

  /// Induced module M(x, tau): basis = (BFS-minimal coset reps of G^x) x
  /// (tau-space basis), degrees the conjugates of x.
  static YDModule induce(std::shared_ptr<const Group> G, Elt x, const CentralizerRep& tau,
                         const Field* K);

  static YDModule direct_sum(const YDModule& a, const YDModule& b);

  int dim() const { return static_cast<int>(deg_.size()); }
  const Group& group() const { return *G_; }
  std::shared_ptr<const Group> group_ptr() const { return G_; }
  const Field* field() const { return K_; }
  Elt degree(int i) const { return deg_[i]; }
  const std::vector<Elt>& degrees() const { return deg_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Action matrix of an arbitrary group element (cached word product).
  const Matrix& act(Elt x) const;

  /// Sorted set of degrees with nonzero component.
  std::vector<Elt> support() const;

  YDModule dual() const;

  /// YD compatibility + action well-definedness; returns false with a reason.
  bool validate(std::string* why = nullptr) const;

  /// Absolutely simple iff the algebra generated by the grading projections
  /// and the action matrices is the full matrix algebra (Burnside).
  bool is_absolutely_simple() const;

  /// Scalar by which a central element acts (throws if not scalar).
  Scalar central_scalar(Elt z) const;

  /// Eigenvalue of x on the (1-dimensional) degree-x component.
  std::optional<Scalar> self_eigenvalue(Elt x) const;

 private:
  std::shared_ptr<const Group> G_;
  const Field* K_ = nullptr;
  std::vector<Elt> deg_;
  std::vector<Matrix> gen_action_; // per G.generators()
  std::vector<std::string> labels_;
  mutable std::map<Elt, Matrix> act_cache_;
};

/// Submodule generated by vectors (coordinates in V's basis), closed under the
/// group action, with an adapted homogeneous basis.  Returns the module and the
/// inclusion (each new basis vector as a vector in V's coordinates).
struct Submodule {
  YDModule module;
  std::vector<std::vector<Scalar>> inclusion;
};
Submodule submodule_generated(const YDModule& V, const std::vector<std::vector<Scalar>>& vectors);

/// Tensor product with row-major basis (left factor is the slow index).
YDModule tensor_product(const YDModule& A, const YDModule& B);

/// Braiding c_{V,W}: V (x) W -> W (x) V, v (x) w |-> (deg v).w (x) v, in
/// row-major tensor bases (left factor is the slow index).
Matrix braiding(const YDModule& V, const YDModule& W);

/// c_{W,V} c_{V,W} on V (x) W.
Matrix braiding_square(const YDModule& V, const YDModule& W);

/// Checks the braid equation on U (x) U (x) U.
bool braid_equation_holds(const YDModule& U);

/// Basis of the space of grading-preserving G-equivariant maps A -> B.
std::vector<Matrix> intertwiners(const YDModule& A, const YDModule& B);

/// Graded isomorphism test (degree-preserving invertible intertwiner).
bool graded_isomorphic(const YDModule& A, const YDModule& B);

} // namespace nichols
