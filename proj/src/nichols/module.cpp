#include "nichols/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nichols {

Matrix CentralizerRep::value(const Group& G, Elt x) const {
  Matrix acc = Matrix::identity(images[0].field(), degree());
  for (int gi : G.word_in(gens, x)) acc = acc * images[gi];
  return acc;
}

bool CentralizerRep::well_defined(const Group& G, std::string* why) const {
  std::vector<Elt> sub = G.subgroup_closure(gens);
  std::map<Elt, Matrix> val;
  for (Elt x : sub) val.emplace(x, value(G, x));
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (Elt x : sub) {
      Elt y = G.mul(gens[gi], x);
      if (!(images[gi] * val.at(x) == val.at(y))) {
        if (why) *why = "representation images do not respect the subgroup relations";
        return false;
      }
    }
  return true;
}

YDModule::YDModule(std::shared_ptr<const Group> G, const Field* K, std::vector<Elt> degrees,
                   std::vector<Matrix> gen_action, std::vector<std::string> labels)
    : G_(std::move(G)), K_(K), deg_(std::move(degrees)), gen_action_(std::move(gen_action)),
      labels_(std::move(labels)) {
  if (labels_.empty())
    for (size_t i = 0; i < deg_.size(); ++i) labels_.push_back("b" + std::to_string(i));
}

YDModule YDModule::induce(std::shared_ptr<const Group> G, Elt x, const CentralizerRep& tau,
                          const Field* K) {
  std::string why;
  if (!tau.well_defined(*G, &why)) throw std::invalid_argument("induce: " + why);
  std::vector<Elt> cent = G->centralizer_elements(x);
  std::sort(cent.begin(), cent.end());

  // BFS-minimal coset representatives of G^x
  std::vector<Elt> reps;
  std::vector<int> coset_of(G->order(), -1);
  for (Elt e : G->bfs_order()) {
    bool fresh = true;
    for (size_t r = 0; r < reps.size(); ++r)
      if (std::binary_search(cent.begin(), cent.end(), G->mul(G->inv(reps[r]), e))) {
        coset_of[e] = static_cast<int>(r);
        fresh = false;
        break;
      }
    if (fresh) {
      coset_of[e] = static_cast<int>(reps.size());
      reps.push_back(e);
    }
  }

  const int d = tau.degree();
  const int n = static_cast<int>(reps.size()) * d;
  std::vector<Elt> degrees(n);
  std::vector<std::string> labels(n);
  for (size_t r = 0; r < reps.size(); ++r) {
    Elt dg = G->conj(x, reps[r]);
    for (int s = 0; s < d; ++s) {
      degrees[r * d + s] = dg;
      std::ostringstream os;
      os << G->element_str(reps[r]) << (d > 1 ? "." + std::to_string(s) : "") << "*w";
      labels[r * d + s] = os.str();
    }
  }

  std::vector<Matrix> action;
  for (Elt h : G->generators()) {
    Matrix m(K, n, n);
    for (size_t r = 0; r < reps.size(); ++r) {
      Elt hr = G->mul(h, reps[r]);
      int j = coset_of[hr];
      Elt c = G->mul(G->inv(reps[j]), hr); // lies in G^x
      Matrix tc = tau.value(*G, c);
      for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) m.at(j * d + t, r * d + s) = tc.at(t, s);
    }
    action.push_back(std::move(m));
  }
  return YDModule(std::move(G), K, std::move(degrees), std::move(action), std::move(labels));
}

YDModule YDModule::direct_sum(const YDModule& a, const YDModule& b) {
  if (a.G_ != b.G_ || a.K_ != b.K_) throw std::invalid_argument("direct_sum: mismatched context");
  std::vector<Elt> deg = a.deg_;
  deg.insert(deg.end(), b.deg_.begin(), b.deg_.end());
  std::vector<Matrix> act;
  for (size_t gi = 0; gi < a.gen_action_.size(); ++gi) {
    Matrix m(a.K_, a.dim() + b.dim(), a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) m.at(i, j) = a.gen_action_[gi].at(i, j);
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j) m.at(a.dim() + i, a.dim() + j) = b.gen_action_[gi].at(i, j);
    act.push_back(std::move(m));
  }
  std::vector<std::string> labels = a.labels_;
  for (const auto& l : b.labels_) labels.push_back(l + "'");
  return YDModule(a.G_, a.K_, std::move(deg), std::move(act), std::move(labels));
}

const Matrix& YDModule::act(Elt x) const {
  auto it = act_cache_.find(x);
  if (it != act_cache_.end()) return it->second;
  Matrix acc = Matrix::identity(K_, dim());
  for (int gi : G_->word_of(x)) acc = acc * gen_action_[gi];
  return act_cache_.emplace(x, std::move(acc)).first->second;
}

std::vector<Elt> YDModule::support() const {
  std::vector<Elt> s = deg_;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

YDModule YDModule::dual() const {
  std::vector<Elt> deg(deg_.size());
  for (size_t i = 0; i < deg_.size(); ++i) deg[i] = G_->inv(deg_[i]);
  std::vector<Matrix> act;
  for (size_t gi = 0; gi < gen_action_.size(); ++gi) {
    Elt h = G_->generators()[gi];
    act.push_back(this->act(G_->inv(h)).transpose());
  }
  std::vector<std::string> labels;
  for (const auto& l : labels_) labels.push_back(l + "*");
  return YDModule(G_, K_, std::move(deg), std::move(act), std::move(labels));
}

bool YDModule::validate(std::string* why) const {
  for (size_t gi = 0; gi < gen_action_.size(); ++gi) {
    Elt h = G_->generators()[gi];
    for (int j = 0; j < dim(); ++j) {
      Elt target = G_->conj(deg_[j], h);
      for (int i = 0; i < dim(); ++i)
        if (!gen_action_[gi].at(i, j).is_zero() && deg_[i] != target) {
          if (why) *why = "action of a generator is not degree-compatible";
          return false;
        }
    }
  }
  for (size_t gi = 0; gi < gen_action_.size(); ++gi)
    for (int x = 0; x < G_->order(); ++x) {
      Elt hx = G_->mul(G_->generators()[gi], static_cast<Elt>(x));
      if (!(act(hx) == gen_action_[gi] * act(static_cast<Elt>(x)))) {
        if (why) *why = "generator images do not respect the group relations";
        return false;
      }
    }
  return true;
}

bool YDModule::is_absolutely_simple() const {
  const int n = dim();
  if (n == 0) throw std::invalid_argument("zero module");
  const uint32_t n2 = static_cast<uint32_t>(n) * n;
  EchelonBasis alg(K_);
  auto mat_vec = [&](const Matrix& m) {
    SparseVec v;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.add(static_cast<uint32_t>(i) * n + j, m.at(i, j));
    return v;
  };
  // the image of the smash product is generated by the grading projections
  // and the group action; absolutely simple iff it is all of End(V)
  std::vector<Matrix> gens;
  for (Elt d : support()) {
    Matrix p(K_, n, n);
    for (int i = 0; i < n; ++i)
      if (deg_[i] == d) p.at(i, i) = K_->one();
    gens.push_back(std::move(p));
  }
  for (const auto& m : gen_action_) gens.push_back(m);

  std::vector<Matrix> basis_mats{Matrix::identity(K_, n)};
  alg.insert(mat_vec(basis_mats[0]));
  for (size_t wi = 0; wi < basis_mats.size(); ++wi) {
    if (alg.size() == static_cast<int>(n2)) break;
    for (const auto& g : gens) {
      Matrix prod = g * basis_mats[wi];
      if (alg.insert(mat_vec(prod))) basis_mats.push_back(std::move(prod));
      if (alg.size() == static_cast<int>(n2)) break;
    }
  }
  return alg.size() == static_cast<int>(n2);
}

Scalar YDModule::central_scalar(Elt z) const {
  const Matrix& m = act(z);
  Scalar c = m.at(0, 0);
  Matrix expect(K_, dim(), dim());
  for (int i = 0; i < dim(); ++i) expect.at(i, i) = c;
  if (!(m == expect)) throw std::invalid_argument("element does not act by a scalar");
  return c;
}

std::optional<Scalar> YDModule::self_eigenvalue(Elt x) const {
  int idx = -1;
  for (int i = 0; i < dim(); ++i)
    if (deg_[i] == x) {
      if (idx >= 0) return std::nullopt;
      idx = i;
    }
  if (idx < 0) return std::nullopt;
  const Matrix& m = act(x);
  for (int i = 0; i < dim(); ++i)
    if (i != idx && !m.at(i, idx).is_zero()) return std::nullopt;
  return m.at(idx, idx);
}

Submodule submodule_generated(const YDModule& V, const std::vector<std::vector<Scalar>>& vectors) {
  const Field* K = V.field();
  const int n = V.dim();
  EchelonBasis basis(K);
  std::vector<SparseVec> work;

  auto push = [&](const SparseVec& sv) {
    if (basis.insert(sv)) work.push_back(sv);
  };
  for (const auto& v : vectors) {
    // homogeneous generating vectors; others are split into components
    std::map<Elt, SparseVec> comp;
    for (int i = 0; i < n; ++i)
      if (!v[i].is_zero()) comp[V.degree(i)].add(static_cast<uint32_t>(i), v[i]);
    for (auto& [d, vec] : comp) push(vec);
  }

  for (size_t wi = 0; wi < work.size(); ++wi) {
    SparseVec cur = work[wi];
    for (Elt h : V.group().generators()) {
      const Matrix& m = V.act(h);
      SparseVec img;
      for (const auto& [j, c] : cur.t)
        for (int i = 0; i < n; ++i) img.add(static_cast<uint32_t>(i), m.at(i, j) * c);
      img.normalize();
      push(img);
    }
  }

  const auto& rows = basis.rows();
  const int k = basis.size();
  std::vector<std::vector<Scalar>> inclusion;
  std::vector<Elt> degrees;
  for (int r = 0; r < k; ++r) {
    std::vector<Scalar> full(n, K->zero());
    for (const auto& [i, c] : rows[r].t) full[i] = c;
    degrees.push_back(V.degree(static_cast<int>(basis.pivots()[r])));
    inclusion.push_back(std::move(full));
  }

  std::vector<Matrix> action;
  for (Elt h : V.group().generators()) {
    const Matrix& m = V.act(h);
    Matrix out(K, k, k);
    for (int r = 0; r < k; ++r) {
      SparseVec img;
      for (const auto& [j, c] : rows[r].t)
        for (int i = 0; i < n; ++i) img.add(static_cast<uint32_t>(i), m.at(i, j) * c);
      img.normalize();
      std::vector<Scalar> coords;
      if (!basis.coordinates(img, coords)) throw std::logic_error("submodule closure is not closed");
      for (int i = 0; i < k; ++i) out.at(i, r) = coords[i];
    }
    action.push_back(std::move(out));
  }
  return {YDModule(V.group_ptr(), K, std::move(degrees), std::move(action)), std::move(inclusion)};
}

YDModule tensor_product(const YDModule& A, const YDModule& B) {
  const Field* K = A.field();
  std::vector<Elt> deg;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < B.dim(); ++j) deg.push_back(A.group().mul(A.degree(i), B.degree(j)));
  std::vector<Matrix> act;
  for (Elt h : A.group().generators()) act.push_back(A.act(h).kronecker(B.act(h)));
  std::vector<std::string> labels;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < B.dim(); ++j) labels.push_back(A.labels()[i] + "(x)" + B.labels()[j]);
  return YDModule(A.group_ptr(), K, std::move(deg), std::move(act), std::move(labels));
}

Matrix braiding(const YDModule& V, const YDModule& W) {
  const Field* K = V.field();
  const int nv = V.dim(), nw = W.dim();
  Matrix c(K, nw * nv, nv * nw);
  for (int i = 0; i < nv; ++i) {
    const Matrix& a = W.act(V.degree(i));
    for (int j = 0; j < nw; ++j)
      for (int k = 0; k < nw; ++k)
        if (!a.at(k, j).is_zero()) c.at(k * nv + i, i * nw + j) = a.at(k, j);
  }
  return c;
}

Matrix braiding_square(const YDModule& V, const YDModule& W) {
  return braiding(W, V) * braiding(V, W);
}

bool braid_equation_holds(const YDModule& U) {
  const Field* K = U.field();
  const int n = U.dim();
  Matrix c = braiding(U, U);
  Matrix id = Matrix::identity(K, n);
  Matrix c12 = c.kronecker(id);
  Matrix c23 = id.kronecker(c);
  return c12 * c23 * c12 == c23 * c12 * c23;
}

std::vector<Matrix> intertwiners(const YDModule& A, const YDModule& B) {
  const Field* K = A.field();
  const int na = A.dim(), nb = B.dim();
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < na; ++j)
      if (B.degree(i) == A.degree(j)) slots.emplace_back(i, j);
  if (slots.empty()) return {};
  const int gens = static_cast<int>(A.group().generators().size());
  Matrix sys(K, gens * nb * na, static_cast<int>(slots.size()));
  for (int g = 0; g < gens; ++g) {
    const Matrix& ma = A.act(A.group().generators()[g]);
    const Matrix& mb = B.act(A.group().generators()[g]);
    // equations: (mb F - F ma)[i,j] = 0; slot (k,l) contributes
    // mb[i,k] to equation (i,l) and -ma[l,j] to equation (k,j)
    for (size_t s = 0; s < slots.size(); ++s) {
      auto [k, l] = slots[s];
      for (int i = 0; i < nb; ++i)
        if (!mb.at(i, k).is_zero())
          sys.at(g * nb * na + i * na + l, static_cast<int>(s)) += mb.at(i, k);
      for (int j = 0; j < na; ++j)
        if (!ma.at(l, j).is_zero())
          sys.at(g * nb * na + k * na + j, static_cast<int>(s)) -= ma.at(l, j);
    }
  }
  std::vector<Matrix> out;
  for (const auto& sol : nullspace(sys)) {
    Matrix f(K, nb, na);
    for (size_t s = 0; s < slots.size(); ++s) f.at(slots[s].first, slots[s].second) = sol[s];
    out.push_back(std::move(f));
  }
  return out;
}

bool graded_isomorphic(const YDModule& A, const YDModule& B) {
  if (A.dim() != B.dim()) return false;
  if (&A.group() != &B.group() || A.field() != B.field()) return false;
  auto sols = intertwiners(A, B);
  for (const auto& f : sols)
    if (rank_of(f) == A.dim()) return true;
  if (sols.size() >= 2) {
    Matrix sum = sols[0];
    for (size_t i = 1; i < sols.size(); ++i) sum = sum + sols[i];
    if (rank_of(sum) == A.dim()) return true;
  }
  return false;
}

} // namespace nichols
