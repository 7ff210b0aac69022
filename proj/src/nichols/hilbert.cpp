#include "nichols/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace nichols {

std::map<std::pair<int, int>, BigInt> HilbertSeries::expansion() const {
  std::map<std::pair<int, int>, BigInt> poly{{{0, 0}, 1}};
  for (const auto& f : factors) {
    std::map<std::pair<int, int>, BigInt> next;
    for (unsigned k = 0; k < f.n; ++k)
      for (const auto& [mono, c] : poly) {
        auto key = std::make_pair(mono.first + static_cast<int>(k) * f.a,
                                  mono.second + static_cast<int>(k) * f.b);
        next[key] += c;
      }
    poly = std::move(next);
  }
  return poly;
}

BigInt HilbertSeries::dimension() const {
  BigInt d = 1;
  for (const auto& f : factors) d *= f.n;
  return d;
}

void HilbertSeries::canonicalize() { std::sort(factors.begin(), factors.end()); }

std::string yclass_name(YClassLabel y) {
  switch (y) {
    case YClassLabel::Y1: return "Y1";
    case YClassLabel::Y2: return "Y2";
    case YClassLabel::Y3: return "Y3";
    case YClassLabel::Y4: return "Y4";
    case YClassLabel::Y5: return "Y5";
    case YClassLabel::Y6: return "Y6";
    case YClassLabel::Y7: return "Y7";
    case YClassLabel::Y8: return "Y8";
    case YClassLabel::None: return "none";
  }
  return "?";
}

YClassLabel yclass_from_name(const std::string& s) {
  for (int i = 0; i < 8; ++i) {
    YClassLabel y = static_cast<YClassLabel>(i);
    if (yclass_name(y) == s) return y;
  }
  throw std::invalid_argument("unknown Y class: " + s);
}

unsigned h_of(unsigned p) { return p == 2 ? 3 : p == 3 ? 2 : 6; }
unsigned hprime_of(unsigned p) { return p == 3 ? 2 : 6; }

std::vector<std::pair<unsigned, unsigned>> yclass_series(YClassLabel y, unsigned p) {
  switch (y) {
    case YClassLabel::Y1: return {{2, 1}, {2, 1}, {3, 1}};
    case YClassLabel::Y2:
      if (p != 2) throw std::invalid_argument("Y2 requires characteristic 2");
      return {{3, 1}, {4, 1}, {6, 1}, {6, 2}};
    case YClassLabel::Y3: return {{2, 1}};
    case YClassLabel::Y4: return {{h_of(p), 1}};
    case YClassLabel::Y5: return {{2, 1}, {2, 1}};
    case YClassLabel::Y6: return {{3, 1}, {3, 1}};
    case YClassLabel::Y7: return {{2, 1}, {2, 1}};
    case YClassLabel::Y8: return {{2, 1}, {hprime_of(p), 1}};
    case YClassLabel::None: break;
  }
  throw std::invalid_argument("no series for unclassified module");
}

YClassLabel yclass_of(const YDModule& U) {
  const Group& G = U.group();
  if (G.family() != Family::Gamma3) return YClassLabel::None;
  const Field* K = U.field();
  unsigned ch = K->characteristic();
  const Scalar one = K->one(), minus_one = K->minus_one();
  std::vector<Elt> supp = U.support();

  if (supp.size() == 3 && U.dim() == 3) {
    // g-type class: ratio of two class members has order 3 and is inverted by x
    Elt x = supp[0];
    Elt eps = G.mul(G.inv(x), supp[1]);
    if (G.power(eps, 3) != G.one() || G.conj(eps, x) != G.mul(eps, eps)) return YClassLabel::None;
    auto tau = U.self_eigenvalue(x);
    if (!tau) return YClassLabel::None;
    if (*tau == minus_one) return YClassLabel::Y1;
    if (ch == 2 && quantum_integer(3, *tau).is_zero()) return YClassLabel::Y2;
    return YClassLabel::None;
  }
  if (supp.size() == 1 && G.is_central(supp[0])) {
    Scalar tau = U.central_scalar(supp[0]);
    if (U.dim() == 1) {
      if (tau == minus_one) return YClassLabel::Y3;
      if (quantum_integer(3, -tau).is_zero()) return YClassLabel::Y4;
      return YClassLabel::None;
    }
    if (U.dim() == 2 && U.is_absolutely_simple()) {
      if (tau == minus_one) return YClassLabel::Y5;
      return YClassLabel::None;
    }
    return YClassLabel::None;
  }
  if (supp.size() == 2 && U.dim() == 2) {
    // eps z-type class: try both splittings x = eps z
    for (int pick = 0; pick < 2; ++pick) {
      Elt x = supp[pick], x2 = supp[1 - pick];
      Elt eps = G.mul(x2, G.inv(x)); // (eps^2 z)(eps z)^{-1} = eps
      if (eps == G.one() || G.power(eps, 3) != G.one()) continue;
      Elt z = G.mul(G.inv(eps), x);
      if (!G.is_central(z)) continue;
      int idx = -1;
      for (int i = 0; i < U.dim(); ++i)
        if (U.degree(i) == x) idx = i;
      const Matrix& me = U.act(eps);
      bool diag = true;
      for (int i = 0; i < U.dim(); ++i)
        if (i != idx && !me.at(i, idx).is_zero()) diag = false;
      if (!diag) continue;
      Scalar te = me.at(idx, idx);
      Scalar tz = U.central_scalar(z);
      if (tz == te && quantum_integer(3, te).is_zero()) return YClassLabel::Y6;
      if (te == one && tz == minus_one) return YClassLabel::Y7;
      if (te * tz == minus_one && quantum_integer(3, te).is_zero()) return YClassLabel::Y8;
    }
    return YClassLabel::None;
  }
  return YClassLabel::None;
}

std::vector<RootAssignment> root_assignments(const CartanScheme2& s, const Caps& caps) {
  std::vector<RootAssignment> out;
  for (const auto& expr : positive_roots(s, s.base)) {
    PairState p = s.objects[s.base].pair;
    for (int w : expr.word) p = reflect(w, p, caps);
    const YDModule& entry = expr.j == 1 ? p.V : p.W;
    out.push_back({expr, yclass_of(entry)});
  }
  return out;
}

HilbertSeries assemble(const std::vector<RootAssignment>& roots, unsigned characteristic) {
  HilbertSeries h;
  for (const auto& r : roots) {
    if (r.cls == YClassLabel::None)
      throw std::invalid_argument("assemble: unclassified root module");
    for (auto [n, e] : yclass_series(r.cls, characteristic))
      h.factors.push_back({n, static_cast<int>(e) * r.root.coords[0],
                           static_cast<int>(e) * r.root.coords[1]});
  }
  h.canonicalize();
  return h;
}

namespace {

// Sparse application of the quantum symmetrizer on tensor-index codes.
// A length-L tuple (i_0,...,i_{L-1}) over [0, dim) is encoded as
// i_0 * dim^{L-1} + ... + i_{L-1}.
struct Symmetrizer {
  const YDModule* U;
  int dim;
  std::vector<uint64_t> pow; // pow[k] = dim^k
  std::vector<std::unordered_map<uint64_t, SparseVec>> memo;

  explicit Symmetrizer(const YDModule* u, int maxd) : U(u), dim(u->dim()) {
    pow.resize(maxd + 1);
    pow[0] = 1;
    for (int k = 1; k <= maxd; ++k) pow[k] = pow[k - 1] * dim;
    memo.resize(maxd + 1);
  }

  int digit(uint64_t key, int L, int pos) const { // pos 0 = leftmost factor
    return static_cast<int>((key / pow[L - 1 - pos]) % dim);
  }

  // braiding at positions (pos, pos+1), 0-based, on a single code
  SparseVec braid_at(uint64_t key, int L, int pos, const Scalar& coef) const {
    int xi = digit(key, L, pos), xj = digit(key, L, pos + 1);
    const Matrix& a = U->act(U->degree(xi));
    SparseVec out;
    uint64_t base = key - static_cast<uint64_t>(xi) * pow[L - 1 - pos] -
                    static_cast<uint64_t>(xj) * pow[L - 2 - pos];
    for (int m = 0; m < dim; ++m) {
      const Scalar& c = a.at(m, xj);
      if (c.is_zero()) continue;
      uint64_t nk = base + static_cast<uint64_t>(m) * pow[L - 1 - pos] +
                    static_cast<uint64_t>(xi) * pow[L - 2 - pos];
      out.add(static_cast<uint32_t>(nk), coef * c);
    }
    return out;
  }

  SparseVec braid_at(const SparseVec& v, int L, int pos) const {
    SparseVec out;
    for (const auto& [k, c] : v.t) {
      SparseVec part = braid_at(k, L, pos, c);
      out.t.insert(out.t.end(), part.t.begin(), part.t.end());
    }
    out.normalize();
    return out;
  }

  const SparseVec& apply(int L, uint64_t key) {
    auto it = memo[L].find(key);
    if (it != memo[L].end()) return it->second;
    SparseVec result;
    if (L <= 1) {
      result.add(static_cast<uint32_t>(key), U->field()->one());
    } else {
      // terms c_1 c_2 ... c_k (c_k applied first) for k = 0..L-1
      for (int k = 0; k < L; ++k) {
        SparseVec term;
        term.add(static_cast<uint32_t>(key), U->field()->one());
        for (int i = k; i >= 1; --i) term = braid_at(term, L, i - 1);
        // (id (x) S_{L-1})
        for (const auto& [tk, tc] : term.t) {
          uint64_t head = tk / pow[L - 1];
          uint64_t tail = tk % pow[L - 1];
          const SparseVec& sub = apply(L - 1, tail);
          for (const auto& [sk, sc] : sub.t)
            result.add(static_cast<uint32_t>(head * pow[L - 1] + sk), tc * sc);
        }
      }
      result.normalize();
    }
    return memo[L].emplace(key, std::move(result)).first->second;
  }

  Elt code_degree(int L, uint64_t key) const {
    const Group& G = U->group();
    Elt d = G.one();
    for (int p = 0; p < L; ++p) d = G.mul(d, U->degree(digit(key, L, p)));
    return d;
  }
};

long blocked_rank(Symmetrizer& sym, int d, const std::vector<uint64_t>& basis, const Field* K) {
  if (d == 0) return 1;
  std::map<Elt, std::vector<uint64_t>> blocks;
  for (uint64_t k : basis) blocks[sym.code_degree(d, k)].push_back(k);
  long rank = 0;
  for (const auto& [degree, keys] : blocks) {
    std::vector<SparseVec> cols;
    cols.reserve(keys.size());
    for (uint64_t k : keys) cols.push_back(sym.apply(d, k));
    rank += rank_of(std::move(cols), K);
  }
  return rank;
}

} // namespace

Matrix symmetrizer_matrix(const YDModule& U, int d, long cap) {
  long n = 1;
  for (int i = 0; i < d; ++i) {
    n *= U.dim();
    if (n > cap) throw std::length_error("symmetrizer dimension exceeds cap");
  }
  Symmetrizer sym(&U, d);
  Matrix m(U.field(), static_cast<int>(n), static_cast<int>(n));
  for (long j = 0; j < n; ++j)
    for (const auto& [i, c] : sym.apply(d, static_cast<uint64_t>(j)).t)
      m.at(static_cast<int>(i), static_cast<int>(j)) = c;
  return m;
}

Matrix symmetrizer_matsumoto(const YDModule& U, int d, long cap) {
  long n = 1;
  for (int i = 0; i < d; ++i) {
    n *= U.dim();
    if (n > cap) throw std::length_error("symmetrizer dimension exceeds cap");
  }
  const Field* K = U.field();
  const int nn = static_cast<int>(n);
  // braidings at each position as dense matrices
  std::vector<Matrix> c;
  Matrix braid = braiding(U, U);
  for (int pos = 0; pos + 1 < d; ++pos) {
    Matrix left = Matrix::identity(K, 1);
    for (int i = 0; i < pos; ++i) left = left.kronecker(Matrix::identity(K, U.dim()));
    Matrix right = Matrix::identity(K, 1);
    for (int i = pos + 2; i < d; ++i) right = right.kronecker(Matrix::identity(K, U.dim()));
    c.push_back(left.kronecker(braid).kronecker(right));
  }
  // BFS over permutations: lift(w s_i) = lift(w) * c_i when the length grows
  std::vector<std::vector<int>> perms;
  std::vector<Matrix> lifts;
  std::vector<int> id(d);
  for (int i = 0; i < d; ++i) id[i] = i;
  perms.push_back(id);
  lifts.push_back(Matrix::identity(K, nn));
  Matrix total = lifts[0];
  for (size_t qi = 0; qi < perms.size(); ++qi) {
    for (int i = 0; i + 1 < d; ++i) {
      std::vector<int> p = perms[qi];
      std::swap(p[i], p[i + 1]);
      // length grows iff the new inversion appears
      if (!(perms[qi][i] < perms[qi][i + 1])) continue;
      if (std::find(perms.begin(), perms.end(), p) != perms.end()) continue;
      Matrix lift = lifts[qi] * c[i];
      total = total + lift;
      perms.push_back(std::move(p));
      lifts.push_back(std::move(lift));
    }
  }
  return total;
}

std::map<std::pair<int, int>, long> oracle_bigraded(const YDModule& V, const YDModule& W,
                                                    int max_degree, long cap) {
  YDModule U = YDModule::direct_sum(V, W);
  const int nv = V.dim(), nu = U.dim();
  Symmetrizer sym(&U, max_degree);
  std::map<std::pair<int, int>, long> out;
  out[{0, 0}] = 1;
  for (int d = 1; d <= max_degree; ++d) {
    // enumerate tuples by bidegree (number of V-legs)
    std::map<int, std::vector<uint64_t>> by_d1;
    std::vector<int> tuple(d, 0);
    while (true) {
      int d1 = 0;
      uint64_t key = 0;
      for (int p = 0; p < d; ++p) {
        key = key * nu + tuple[p];
        if (tuple[p] < nv) ++d1;
      }
      by_d1[d1].push_back(key);
      int p = d - 1;
      while (p >= 0 && tuple[p] == nu - 1) tuple[p--] = 0;
      if (p < 0) break;
      ++tuple[p];
    }
    for (auto& [d1, basis] : by_d1) {
      if (static_cast<long>(basis.size()) > cap)
        throw std::length_error("oracle component dimension exceeds cap");
      out[{d1, d - d1}] = blocked_rank(sym, d, basis, U.field());
    }
  }
  return out;
}

std::vector<long> oracle_univariate(const YDModule& U, int max_degree, long cap) {
  Symmetrizer sym(&U, max_degree);
  std::vector<long> out{1};
  for (int d = 1; d <= max_degree; ++d) {
    long n = 1;
    for (int i = 0; i < d; ++i) n *= U.dim();
    if (n > cap) throw std::length_error("oracle component dimension exceeds cap");
    std::vector<uint64_t> basis(n);
    for (long k = 0; k < n; ++k) basis[k] = static_cast<uint64_t>(k);
    out.push_back(blocked_rank(sym, d, basis, U.field()));
  }
  return out;
}

} // namespace nichols
