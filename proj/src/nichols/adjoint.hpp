#pragma once

#include "nichols/module.hpp"

#include <optional>

namespace nichols {

/// Adjoint-action recursion for a pair of Yetter-Drinfeld modules:
///   phi_0 = 0,  X_0 = D,
///   phi_m = id - c_{U,C} c_{C,U} + (id (x) phi_{m-1}) c_{1,2}   on C^{(x)m} (x) D,
///   X_m   = phi_m(C (x) X_{m-1}),
/// with U = C^{(x)(m-1)} (x) D and c_{1,2} the braiding of tensor positions
/// 1 and 2.  X_m realizes (ad C)^m(D).
enum class XStatus { Zero, AbsolutelySimple, Neither };

struct ChainLevel {
  long ambient_dim = 0;
  std::vector<SparseVec> phi;        // columns of phi_m on the ambient space
  std::vector<Elt> ambient_degree;   // degree of each ambient basis tensor
  XStatus status = XStatus::Zero;
  std::optional<YDModule> X;         // present unless status == Zero
  std::vector<SparseVec> x_basis;    // inclusion: X basis in ambient coordinates
};

enum class ChainOutcome {
  Terminated,     // some X_m = 0; all earlier X absolutely simple
  NotSemisimple,  // some X_m neither absolutely simple nor zero
  CapReached,     // X_m != 0 for every m up to the chain cap
  DimCap,         // ambient dimension exceeded the configured cap
};

struct Caps {
  int chain = 8;       // largest m explored (paper cases stop by 4)
  long dim = 20000;    // ambient dimension guard
  int objects = 16;    // Weyl groupoid object guard
};

class AdjointChain {
 public:
  /// Computes X_m for m = 0,1,... until zero, a non-semisimple level, or a cap.
  AdjointChain(const YDModule& C, const YDModule& D, const Caps& caps = {});

  ChainOutcome outcome() const { return outcome_; }
  /// Index of the last non-zero level (0 if X_1 = 0 already).
  int top() const { return top_; }
  /// Levels 0..top (level 0 is D itself); level top+1 exists when terminated.
  const std::vector<ChainLevel>& levels() const { return levels_; }
  const YDModule& X(int m) const;

  /// Applies phi_m to a vector in ambient coordinates of level m.
  SparseVec apply_phi(int m, const SparseVec& v) const;

  /// First level at which the status is Neither (outcome NotSemisimple).
  int neither_level() const { return neither_level_; }

 private:
  const YDModule *C_, *D_;
  std::vector<ChainLevel> levels_;
  ChainOutcome outcome_;
  int top_ = 0;
  int neither_level_ = -1;
};

/// Cartan matrix of a pair: diagonal 2, a12 = -max{m : (ad V)^m(W) != 0}.
struct CartanMatrix {
  int a12 = 0, a21 = 0;
  bool operator==(const CartanMatrix&) const = default;
};

enum class PairClass {
  P1, P2, P3, P4, P5, P5p, P5pp, P6, Unclassified
};
std::string pair_class_name(PairClass c);

/// The Gamma_3 frame found by classification: the epimorphism targets and the
/// character values the class conditions were evaluated on.
struct G3Frame {
  Elt g, eps, z;
  Scalar rho_g, rho_z;         // V = M(g, rho)
  int sigma_degree = 1;
  Scalar sigma_eps, sigma_z;   // W = M(eps z, sigma) or M(z, sigma)
  Scalar sigma_g;              // sigma(g) when defined (W central, degree 1)
  Scalar sigma_g2;             // sigma(g^2)
  bool w_on_eps_class = false; // W supported on the eps z class
};

struct PairState {
  YDModule V, W;

  struct Analysis {
    ChainOutcome vw_outcome, wv_outcome;
    std::optional<CartanMatrix> cartan; // present iff both chains terminated
    PairClass cls = PairClass::Unclassified;
    std::optional<G3Frame> frame;
    int vw_top = 0, wv_top = 0;
  };
};

/// Runs both chains and classifies (classification only on Gamma_3 images).
PairState::Analysis analyze_pair(const PairState& p, const Caps& caps = {});

/// Classifies a pair over a Gamma_3 image by the character conditions of the
/// finite-type class tables; Unclassified when no admissible frame matches.
PairClass classify_pair(const PairState& p, std::optional<G3Frame>* frame_out = nullptr);

struct ReflectError {
  ChainOutcome reason;
  int level;
  std::string message; // e.g. "reflection undefined at R2 image"
};

/// R_1(V,W) = (V*, X_{-a12}^{V,W}),  R_2(V,W) = (X_{-a21}^{W,V}, W*).
/// Throws std::runtime_error with the ReflectError message if the needed
/// chain is not simple-or-zero through its vanishing level.
PairState reflect(int i, const PairState& p, const Caps& caps = {});

/// Componentwise graded isomorphism of pairs over the same group.
bool pair_isomorphic(const PairState& a, const PairState& b);

/// True iff c_{W,V} c_{V,W} = id on V (x) W.
bool braiding_square_is_identity(const PairState& p);

} // namespace nichols
