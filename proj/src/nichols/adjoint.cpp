#include "nichols/adjoint.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nichols {

namespace {

// phi_m columns on C^{(x)m} (x) D, built level by level; the braidings are
// applied column-wise, so everything stays sparse.
struct PhiTower {
  const YDModule *C, *D;
  long dim_cap;
  std::vector<long> dims;                    // dims[m] = dim C^m * dim D
  std::vector<std::vector<Elt>> degs;        // degree of each ambient basis tensor
  std::vector<std::vector<SparseVec>> phi;   // phi[m] for m >= 1

  PhiTower(const YDModule* c, const YDModule* d, long cap) : C(c), D(d), dim_cap(cap) {
    dims.push_back(d->dim());
    degs.push_back(d->degrees());
    phi.emplace_back(); // phi_0 = 0, never applied
  }

  // action of a group element on an ambient basis tensor, as a sparse column
  SparseVec act(int m, Elt g, long idx) const {
    if (m == 0) {
      const Matrix& a = D->act(g);
      SparseVec v;
      for (int i = 0; i < D->dim(); ++i) v.add(static_cast<uint32_t>(i), a.at(i, static_cast<int>(idx)));
      return v;
    }
    long sub = dims[m - 1];
    int i = static_cast<int>(idx / sub);
    long r = idx % sub;
    const Matrix& a = C->act(g);
    SparseVec tail = act(m - 1, g, r);
    SparseVec out;
    for (int k = 0; k < C->dim(); ++k) {
      const Scalar& ck = a.at(k, i);
      if (ck.is_zero()) continue;
      for (const auto& [t, cv] : tail.t) out.add(static_cast<uint32_t>(k * sub + t), ck * cv);
    }
    return out;
  }

  SparseVec act(int m, Elt g, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, c] : v.t) {
      SparseVec col = act(m, g, i);
      out.accumulate(col, c);
    }
    out.normalize();
    return out;
  }

  void ensure(int m) {
    while (static_cast<int>(phi.size()) <= m) {
      int level = static_cast<int>(phi.size());
      long sub = dims[level - 1];
      long dm = static_cast<long>(C->dim()) * sub;
      if (dm > dim_cap) throw std::length_error("tensor power dimension exceeds cap");
      dims.push_back(dm);
      std::vector<Elt> dg(dm);
      for (int i = 0; i < C->dim(); ++i)
        for (long r = 0; r < sub; ++r)
          dg[i * sub + r] = C->group().mul(C->degree(i), degs[level - 1][r]);
      degs.push_back(std::move(dg));

      std::vector<SparseVec> cols(dm);
      long subsub = level >= 2 ? dims[level - 2] : 0;
      for (int i = 0; i < C->dim(); ++i) {
        const Matrix& ci = C->act(C->degree(i));
        for (long r = 0; r < sub; ++r) {
          long e = i * sub + r;
          SparseVec col;
          col.add(static_cast<uint32_t>(e), C->field()->one());
          // - c_{U,C} c_{C,U}: first (deg v_i) . u_r, then (deg u_k) . v_i
          SparseVec w = act(level - 1, C->degree(i), r);
          for (const auto& [rk, ck] : w.t) {
            const Matrix& a = C->act(degs[level - 1][rk]);
            for (int vk = 0; vk < C->dim(); ++vk) {
              const Scalar& cv = a.at(vk, i);
              if (!cv.is_zero()) col.add(static_cast<uint32_t>(vk * sub + rk), -(ck * cv));
            }
          }
          // + (id (x) phi_{m-1}) c_{1,2}
          if (level >= 2) {
            int i2 = static_cast<int>(r / subsub);
            long r2 = r % subsub;
            for (int k = 0; k < C->dim(); ++k) {
              const Scalar& ck = ci.at(k, i2);
              if (ck.is_zero()) continue;
              const SparseVec& prev = phi[level - 1][i * subsub + r2];
              for (const auto& [t, cv] : prev.t)
                col.add(static_cast<uint32_t>(k * sub + t), ck * cv);
            }
          }
          col.normalize();
          cols[e] = std::move(col);
        }
      }
      phi.push_back(std::move(cols));
    }
  }

  SparseVec apply(int m, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, c] : v.t) out.accumulate(phi[m][i], c);
    out.normalize();
    return out;
  }
};

YDModule extract_module(const PhiTower& tw, int m, const EchelonBasis& basis) {
  const Field* K = tw.C->field();
  const auto& rows = basis.rows();
  const int k = basis.size();
  std::vector<Elt> degrees;
  for (int r = 0; r < k; ++r) degrees.push_back(tw.degs[m][basis.pivots()[r]]);
  std::vector<Matrix> action;
  for (Elt h : tw.C->group().generators()) {
    Matrix out(K, k, k);
    for (int r = 0; r < k; ++r) {
      SparseVec img = tw.act(m, h, rows[r]);
      std::vector<Scalar> coords;
      if (!basis.coordinates(img, coords))
        throw std::logic_error("adjoint module is not closed under the action");
      for (int i = 0; i < k; ++i) out.at(i, r) = coords[i];
    }
    action.push_back(std::move(out));
  }
  return YDModule(tw.C->group_ptr(), K, std::move(degrees), std::move(action));
}

} // namespace

AdjointChain::AdjointChain(const YDModule& C, const YDModule& D, const Caps& caps) : C_(&C), D_(&D) {
  PhiTower tw(&C, &D, caps.dim);

  ChainLevel l0;
  l0.ambient_dim = D.dim();
  l0.ambient_degree = D.degrees();
  l0.X = D;
  for (int i = 0; i < D.dim(); ++i) {
    SparseVec v;
    v.add(static_cast<uint32_t>(i), D.field()->one());
    l0.x_basis.push_back(std::move(v));
  }
  l0.status = D.is_absolutely_simple() ? XStatus::AbsolutelySimple : XStatus::Neither;
  levels_.push_back(std::move(l0));

  outcome_ = ChainOutcome::CapReached;
  for (int m = 1; m <= caps.chain; ++m) {
    try {
      tw.ensure(m);
    } catch (const std::length_error&) {
      outcome_ = ChainOutcome::DimCap;
      return;
    }
    ChainLevel lv;
    lv.ambient_dim = tw.dims[m];
    lv.ambient_degree = tw.degs[m];
    lv.phi = tw.phi[m];

    EchelonBasis basis(C.field());
    long sub = tw.dims[m - 1];
    for (int i = 0; i < C.dim(); ++i)
      for (const auto& xi : levels_[m - 1].x_basis) {
        SparseVec input;
        for (const auto& [t, c] : xi.t) input.add(static_cast<uint32_t>(i * sub + t), c);
        basis.insert(tw.apply(m, input));
      }

    if (basis.size() == 0) {
      lv.status = XStatus::Zero;
      levels_.push_back(std::move(lv));
      top_ = m - 1;
      outcome_ = ChainOutcome::Terminated;
      return;
    }
    lv.x_basis = basis.rows();
    lv.X = extract_module(tw, m, basis);
    lv.status = lv.X->is_absolutely_simple() ? XStatus::AbsolutelySimple : XStatus::Neither;
    bool neither = lv.status == XStatus::Neither;
    levels_.push_back(std::move(lv));
    if (neither) {
      neither_level_ = m;
      outcome_ = ChainOutcome::NotSemisimple;
      return;
    }
    top_ = m;
  }
}

const YDModule& AdjointChain::X(int m) const {
  if (m < 0 || m >= static_cast<int>(levels_.size()) || !levels_[m].X.has_value())
    throw std::out_of_range("chain level not available");
  return *levels_[m].X;
}

SparseVec AdjointChain::apply_phi(int m, const SparseVec& v) const {
  if (m < 1 || m >= static_cast<int>(levels_.size()))
    throw std::out_of_range("phi level not available");
  SparseVec out;
  for (const auto& [i, c] : v.t) out.accumulate(levels_[m].phi[i], c);
  out.normalize();
  return out;
}

std::string pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::P1: return "P1";
    case PairClass::P2: return "P2";
    case PairClass::P3: return "P3";
    case PairClass::P4: return "P4";
    case PairClass::P5: return "P5";
    case PairClass::P5p: return "P5'";
    case PairClass::P5pp: return "P5''";
    case PairClass::P6: return "P6";
    case PairClass::Unclassified: return "unclassified";
  }
  return "?";
}

namespace {

bool three_is_zero(const Scalar& q) { return quantum_integer(3, q).is_zero(); }

} // namespace

PairClass classify_pair(const PairState& p, std::optional<G3Frame>* frame_out) {
  if (frame_out) frame_out->reset();
  const Group& G = p.V.group();
  if (G.family() != Family::Gamma3) return PairClass::Unclassified;
  const Field* K = p.V.field();
  unsigned ch = K->characteristic();

  std::vector<Elt> suppV = p.V.support(), suppW = p.W.support();
  if (suppV.size() != 3 || p.V.dim() != 3) return PairClass::Unclassified;
  if (suppW.size() > 2) return PairClass::Unclassified;
  if (!p.V.is_absolutely_simple() || !p.W.is_absolutely_simple()) return PairClass::Unclassified;

  const Scalar one = K->one(), minus_one = K->minus_one();

  for (Elt g : suppV) {
    auto rho_g_opt = p.V.self_eigenvalue(g);
    if (!rho_g_opt) continue;
    for (Elt g2 : suppV) {
      if (g2 == g) continue;
      Elt eps = G.mul(G.inv(g), g2);
      if (eps == G.one() || G.power(eps, 3) != G.one()) continue;
      if (G.conj(eps, g) != G.mul(eps, eps)) continue; // g eps g^{-1} = eps^2

      std::vector<Elt> zs;
      bool w_on_eps_class = suppW.size() == 2;
      if (w_on_eps_class) {
        for (Elt x : suppW) zs.push_back(G.mul(G.inv(eps), x)); // x = eps z
      } else {
        zs.push_back(suppW[0]); // W = M(z, sigma)
      }
      for (Elt z : zs) {
        if (!G.is_central(z)) continue;
        if (!G.generates({g, eps, z})) continue;

        G3Frame fr;
        fr.g = g;
        fr.eps = eps;
        fr.z = z;
        fr.rho_g = *rho_g_opt;
        fr.rho_z = p.V.central_scalar(z);
        fr.w_on_eps_class = w_on_eps_class;
        Elt g_sq = G.mul(g, g);

        if (w_on_eps_class) {
          Elt x = G.mul(eps, z);
          auto s_opt = p.W.self_eigenvalue(x);
          if (!s_opt) continue;
          // sigma(eps) is the eps-eigenvalue on the (eps z)-component
          const Matrix& me = p.W.act(eps);
          int idx = -1;
          for (int i = 0; i < p.W.dim(); ++i)
            if (p.W.degree(i) == x) idx = i;
          fr.sigma_eps = me.at(idx, idx);
          fr.sigma_z = p.W.central_scalar(z);
          fr.sigma_g2 = p.W.central_scalar(g_sq);
          fr.sigma_g = K->zero(); // not defined for this support
          fr.sigma_degree = 1;
        } else {
          fr.sigma_degree = p.W.dim();
          fr.sigma_z = p.W.central_scalar(z);
          fr.sigma_g2 = p.W.central_scalar(g_sq);
          if (fr.sigma_degree == 1) {
            fr.sigma_eps = p.W.act(eps).at(0, 0);
            if (!(fr.sigma_eps == one)) continue; // characters of G are trivial on eps
            fr.sigma_g = p.W.act(g).at(0, 0);
          } else {
            fr.sigma_eps = K->zero();
            fr.sigma_g = K->zero();
          }
        }

        auto match = [&](PairClass cls) {
          if (frame_out) *frame_out = fr;
          return cls;
        };

        const Scalar rz2 = fr.rho_z * fr.rho_z;
        if (w_on_eps_class) {
          const Scalar s_ez = fr.sigma_eps * fr.sigma_z;
          if (fr.rho_g == minus_one && s_ez == minus_one &&
              rz2 * fr.sigma_eps * fr.sigma_g2 == one && three_is_zero(fr.sigma_eps))
            return match(PairClass::P1);
          if (ch != 3 && fr.rho_g == minus_one && fr.sigma_z == minus_one &&
              fr.sigma_eps == one && rz2 * fr.sigma_eps * fr.sigma_g2 == one)
            return match(PairClass::P2);
          if (ch == 2 && three_is_zero(fr.sigma_eps) && fr.sigma_z == fr.sigma_eps &&
              rz2 * fr.sigma_eps * fr.sigma_g2 == one && fr.rho_g == one)
            return match(PairClass::P5p);
        } else if (fr.sigma_degree == 2) {
          if (ch != 3 && fr.rho_g == minus_one && fr.sigma_z == minus_one &&
              rz2 * fr.sigma_g2 == one)
            return match(PairClass::P3);
        } else {
          const Scalar rs = fr.rho_z * fr.sigma_g;
          if (fr.rho_g == minus_one && rs * fr.sigma_z == one && three_is_zero(-rs))
            return match(PairClass::P4);
          if (ch == 2 && fr.rho_g == one && fr.sigma_z == one && three_is_zero(rs))
            return match(PairClass::P5);
          if (ch == 2 && three_is_zero(fr.rho_g) && fr.sigma_z == one &&
              fr.rho_g * rs == one)
            return match(PairClass::P5pp);
          if (ch != 2 && ch != 3 && fr.rho_g == minus_one && fr.sigma_z == minus_one &&
              three_is_zero(-rs))
            return match(PairClass::P6);
        }
      }
    }
  }
  return PairClass::Unclassified;
}

PairState::Analysis analyze_pair(const PairState& p, const Caps& caps) {
  PairState::Analysis a;
  AdjointChain vw(p.V, p.W, caps);
  AdjointChain wv(p.W, p.V, caps);
  a.vw_outcome = vw.outcome();
  a.wv_outcome = wv.outcome();
  a.vw_top = vw.top();
  a.wv_top = wv.top();
  if (vw.outcome() == ChainOutcome::Terminated && wv.outcome() == ChainOutcome::Terminated)
    a.cartan = CartanMatrix{-vw.top(), -wv.top()};
  a.cls = classify_pair(p, &a.frame);
  return a;
}

PairState reflect(int i, const PairState& p, const Caps& caps) {
  if (i != 1 && i != 2) throw std::invalid_argument("reflection index must be 1 or 2");
  const YDModule& C = i == 1 ? p.V : p.W;
  const YDModule& D = i == 1 ? p.W : p.V;
  AdjointChain chain(C, D, caps);
  if (chain.outcome() == ChainOutcome::NotSemisimple) {
    std::ostringstream os;
    os << "reflection undefined at R" << i << " image: (ad "
       << (i == 1 ? "V" : "W") << ")^" << chain.neither_level() << "("
       << (i == 1 ? "W" : "V") << ") is neither absolutely simple nor zero";
    throw std::runtime_error(os.str());
  }
  if (chain.outcome() != ChainOutcome::Terminated)
    throw std::runtime_error(i == 1 ? "Cartan entry a12 unbounded at cap"
                                    : "Cartan entry a21 unbounded at cap");
  const YDModule& top = chain.X(chain.top());
  if (i == 1) return PairState{p.V.dual(), top};
  return PairState{top, p.W.dual()};
}

bool pair_isomorphic(const PairState& a, const PairState& b) {
  return graded_isomorphic(a.V, b.V) && graded_isomorphic(a.W, b.W);
}

bool braiding_square_is_identity(const PairState& p) {
  return braiding_square(p.V, p.W).is_identity();
}

} // namespace nichols
