#include "nichols/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nichols {

std::string family_name(Family f) {
  switch (f) {
    case Family::Gamma2: return "Gamma2";
    case Family::Gamma3: return "Gamma3";
    case Family::Gamma4: return "Gamma4";
    case Family::T: return "T";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "Gamma2") return Family::Gamma2;
  if (s == "Gamma3") return Family::Gamma3;
  if (s == "Gamma4") return Family::Gamma4;
  if (s == "T") return Family::T;
  throw std::invalid_argument("unknown group family: " + s);
}

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

// nu-exponent sign under conjugation by a^j: a^j nu a^{-j} = nu^{(-1)^j}
int sgn(int j) { return j % 2 == 0 ? 1 : -1; }

struct Sl23 {
  // all matrices (m00,m01,m10,m11) over F_3 with det 1, fixed enumeration order
  std::vector<std::array<int, 4>> mats;
  std::map<std::array<int, 4>, int> index;

  Sl23() {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d)
            if (mod(a * d - b * c, 3) == 1) {
              index[{a, b, c, d}] = static_cast<int>(mats.size());
              mats.push_back({a, b, c, d});
            }
  }

  std::array<int, 4> mul(const std::array<int, 4>& x, const std::array<int, 4>& y) const {
    return {mod(x[0] * y[0] + x[1] * y[2], 3), mod(x[0] * y[1] + x[1] * y[3], 3),
            mod(x[2] * y[0] + x[3] * y[2], 3), mod(x[2] * y[1] + x[3] * y[3], 3)};
  }
};

const Sl23& sl23() {
  static Sl23 s;
  return s;
}

} // namespace

std::shared_ptr<const Group> Group::make(const GroupSpec& spec) {
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<unsigned>>, std::shared_ptr<const Group>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(spec.family), spec.params);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto g = std::shared_ptr<Group>(new Group());
  g->spec_ = spec;

  auto bad = [&](const std::string& why) {
    throw std::invalid_argument(family_name(spec.family) + " quotient rejected: " + why);
  };

  switch (spec.family) {
    case Family::Gamma2:
    case Family::Gamma4: {
      unsigned n = spec.family == Family::Gamma2 ? 2 : 4;
      if (spec.params.size() != 2) bad("expected parameters {order of a, order of b}");
      unsigned A = spec.params[0], B = spec.params[1];
      if (A < 2 || A % 2 != 0) bad("order of a must be even (image abelian otherwise)");
      if (B < n || B % n != 0) bad("order of b must be a multiple of the order of nu");
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < A; ++j)
          for (unsigned k = 0; k < B; ++k)
            g->tuples_.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k), 0, 0});
      break;
    }
    case Family::Gamma3: {
      if (spec.params.size() != 2) bad("expected parameters {order of g, order of z}");
      unsigned N = spec.params[0], M = spec.params[1];
      if (N < 2 || N % 2 != 0) bad("order of g must be even (image abelian otherwise)");
      if (M < 1) bad("order of z must be positive");
      for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < N; ++j)
          for (unsigned k = 0; k < M; ++k)
            g->tuples_.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k), 0, 0});
      break;
    }
    case Family::T: {
      if (spec.params.size() != 1) bad("expected parameter {order of central factor}");
      unsigned M = spec.params[0];
      if (M < 1) bad("central order must be positive");
      for (const auto& m : sl23().mats)
        for (unsigned k = 0; k < M; ++k)
          g->tuples_.push_back({m[0], m[1], m[2], m[3], static_cast<int>(k)});
      break;
    }
  }
  g->build_tables();
  auto out = std::shared_ptr<const Group>(g);
  cache.emplace(key, out);
  return out;
}

void Group::build_tables() {
  const int n = static_cast<int>(tuples_.size());
  if (n > 65535) throw std::invalid_argument("quotient too large");
  std::map<std::array<int, 5>, Elt> index;
  for (int i = 0; i < n; ++i) index[tuples_[i]] = static_cast<Elt>(i);

  auto mul_tuple = [&](const std::array<int, 5>& x, const std::array<int, 5>& y) -> std::array<int, 5> {
    switch (spec_.family) {
      case Family::Gamma2:
      case Family::Gamma4: {
        int nu = spec_.family == Family::Gamma2 ? 2 : 4;
        int A = static_cast<int>(spec_.params[0]), B = static_cast<int>(spec_.params[1]);
        // nu^{i1} a^{j1} b^{k1} nu^{i2} a^{j2} b^{k2}
        //   = nu^{i1 + i2 (-1)^{j1} + k1 (j2 mod 2)(-1)^{j1}} a^{j1+j2} b^{k1+k2}
        int i = mod(x[0] + sgn(x[1]) * (y[0] + x[2] * (y[1] % 2)), nu);
        return {i, mod(x[1] + y[1], A), mod(x[2] + y[2], B), 0, 0};
      }
      case Family::Gamma3: {
        int N = static_cast<int>(spec_.params[0]), M = static_cast<int>(spec_.params[1]);
        // eps^{i1} g^{j1} z^{k1} eps^{i2} g^{j2} z^{k2}
        //   = eps^{i1 + i2 (-1)^{j1}} g^{j1+j2} z^{k1+k2}    (g eps g^{-1} = eps^2)
        int i = mod(x[0] + sgn(x[1]) * y[0], 3);
        return {i, mod(x[1] + y[1], N), mod(x[2] + y[2], M), 0, 0};
      }
      case Family::T: {
        int M = static_cast<int>(spec_.params[0]);
        auto m = sl23().mul({x[0], x[1], x[2], x[3]}, {y[0], y[1], y[2], y[3]});
        return {m[0], m[1], m[2], m[3], mod(x[4] + y[4], M)};
      }
    }
    return {};
  };

  mul_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul_[static_cast<size_t>(i) * n + j] = index.at(mul_tuple(tuples_[i], tuples_[j]));

  std::array<int, 5> one_tuple = spec_.family == Family::T
                                     ? std::array<int, 5>{1, 0, 0, 1, 0}
                                     : std::array<int, 5>{0, 0, 0, 0, 0};
  one_ = index.at(one_tuple);

  inv_.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mul(static_cast<Elt>(i), static_cast<Elt>(j)) == one_) {
        inv_[i] = static_cast<Elt>(j);
        break;
      }

  switch (spec_.family) {
    case Family::Gamma2:
    case Family::Gamma4:
    case Family::Gamma3:
      // the third generator collapses to the identity in quotients of order 1
      gens_ = {index.at({1, 0, 0, 0, 0}), index.at({0, 1, 0, 0, 0}),
               index.at({0, 0, spec_.params[1] > 1 ? 1 : 0, 0, 0})};
      break;
    case Family::T:
      // u = [[1,1],[0,1]], l = [[1,0],[-1,1]]; braid holds, u^3 = l^3 = 1
      gens_ = {index.at({1, 1, 0, 1, 0}), index.at({1, 0, 2, 1, 0}),
               index.at(std::array<int, 5>{1, 0, 0, 1, spec_.params[0] > 1 ? 1 : 0})};
      break;
  }

  // non-abelian guard (quandle-injectivity of the defining epimorphism)
  bool abelian = true;
  for (Elt a : gens_)
    for (Elt b : gens_)
      if (!commute(a, b)) abelian = false;
  if (abelian) throw std::invalid_argument("abelian quotient rejected at construction");

  // BFS words over left multiplication by generators
  words_.assign(n, {});
  std::vector<bool> seen(n, false);
  std::vector<Elt> queue{one_};
  seen[one_] = true;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Elt y = queue[qi];
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
      Elt x = mul(gens_[gi], y);
      if (!seen[x]) {
        seen[x] = true;
        words_[x] = words_[y];
        words_[x].insert(words_[x].begin(), static_cast<int>(gi));
        queue.push_back(x);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw std::logic_error("generators do not generate the quotient");
  bfs_order_ = queue;
}

Elt Group::power(Elt a, long e) const {
  Elt r = one_;
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  for (long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int Group::element_order(Elt a) const {
  Elt x = a;
  int k = 1;
  while (x != one_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::vector<Elt> Group::conjugacy_class(Elt x) const {
  std::vector<Elt> out{x};
  std::vector<bool> seen(order(), false);
  seen[x] = true;
  for (size_t qi = 0; qi < out.size(); ++qi)
    for (Elt h : gens_) {
      Elt y = conj(out[qi], h);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  return out;
}

std::vector<Elt> Group::centralizer_elements(Elt x) const {
  std::vector<Elt> out;
  for (int i = 0; i < order(); ++i)
    if (commute(static_cast<Elt>(i), x)) out.push_back(static_cast<Elt>(i));
  return out;
}

std::vector<Elt> Group::subgroup_closure(const std::vector<Elt>& gens) const {
  std::vector<bool> seen(order(), false);
  std::vector<Elt> out{one_};
  seen[one_] = true;
  for (size_t qi = 0; qi < out.size(); ++qi)
    for (Elt h : gens) {
      Elt y = mul(h, out[qi]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool Group::generates(const std::vector<Elt>& gens) const {
  return static_cast<int>(subgroup_closure(gens).size()) == order();
}

std::vector<Elt> Group::centralizer_generators(Elt x) const {
  std::vector<Elt> cent = centralizer_elements(x);
  std::vector<Elt> gens;
  std::vector<Elt> closure{one_};
  for (Elt c : cent) {
    if (std::binary_search(closure.begin(), closure.end(), c)) continue;
    gens.push_back(c);
    closure = subgroup_closure(gens);
    if (closure.size() == cent.size()) break;
  }
  return gens;
}

std::vector<Elt> Group::center() const {
  std::vector<Elt> out;
  for (int i = 0; i < order(); ++i) {
    bool central = true;
    for (Elt h : gens_)
      if (!commute(static_cast<Elt>(i), h)) {
        central = false;
        break;
      }
    if (central) out.push_back(static_cast<Elt>(i));
  }
  return out;
}

bool Group::is_central(Elt x) const {
  for (Elt h : gens_)
    if (!commute(x, h)) return false;
  return true;
}

std::vector<int> Group::word_in(const std::vector<Elt>& sub_gens, Elt x) const {
  std::vector<std::vector<int>> words(order());
  std::vector<bool> seen(order(), false);
  std::vector<Elt> queue{one_};
  seen[one_] = true;
  if (x == one_) return {};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Elt y = queue[qi];
    for (size_t gi = 0; gi < sub_gens.size(); ++gi) {
      Elt z = mul(sub_gens[gi], y);
      if (!seen[z]) {
        seen[z] = true;
        words[z] = words[y];
        words[z].insert(words[z].begin(), static_cast<int>(gi));
        if (z == x) return words[z];
        queue.push_back(z);
      }
    }
  }
  throw std::invalid_argument("element not in subgroup");
}

Elt Group::from_tuple(const std::array<int, 5>& t) const {
  for (int i = 0; i < order(); ++i)
    if (tuples_[i] == t) return static_cast<Elt>(i);
  throw std::invalid_argument("no element with this tuple");
}

std::string Group::element_str(Elt x) const {
  const auto& t = tuples_[x];
  std::ostringstream os;
  if (spec_.family == Family::T)
    os << "[" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ";" << t[4] << "]";
  else
    os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

bool Quandle::self_distributive() const {
  const int n = static_cast<int>(elements.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int w = 0; w < n; ++w)
        if (table[w][table[x][y]] != table[table[w][x]][table[w][y]]) return false;
  return true;
}

namespace {

// Reference conjugation tables of the five admissible quandles, realized in
// minimal faithful quotients (see tests for a re-derivation from other
// quotients).  table[x][y] = x y x^{-1} as an index.
struct NamedQuandle {
  const char* name;
  std::vector<std::vector<int>> table;
};

const std::vector<NamedQuandle>& named_quandles();

bool iso_search(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                std::vector<int>& map, std::vector<bool>& used, size_t next) {
  const size_t n = a.size();
  if (next == n) return true;
  for (size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    map[next] = static_cast<int>(cand);
    used[cand] = true;
    bool ok = true;
    for (size_t i = 0; i <= next && ok; ++i)
      for (size_t j = 0; j <= next && ok; ++j) {
        int m = map[a[i][j]];
        if (m >= 0 && b[map[i]][map[j]] != m) ok = false;
      }
    if (ok && iso_search(a, b, map, used, next + 1)) return true;
    used[cand] = false;
    map[next] = -1;
  }
  return false;
}

bool quandle_isomorphic(const std::vector<std::vector<int>>& a,
                        const std::vector<std::vector<int>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return iso_search(a, b, map, used, 0);
}

} // namespace

std::string Quandle::type_name() const {
  bool trivial = true;
  const int n = static_cast<int>(elements.size());
  for (int x = 0; x < n && trivial; ++x)
    for (int y = 0; y < n; ++y)
      if (table[x][y] != y) {
        trivial = false;
        break;
      }
  if (trivial) return "trivial(" + std::to_string(n) + ")";
  for (const auto& q : named_quandles())
    if (quandle_isomorphic(table, q.table)) return q.name;
  return "unknown";
}

Quandle Group::quandle_of_class(Elt x) const { return quandle_of_support({x}); }

Quandle Group::quandle_of_support(const std::vector<Elt>& reps) const {
  Quandle q;
  for (Elt r : reps)
    for (Elt e : conjugacy_class(r))
      if (std::find(q.elements.begin(), q.elements.end(), e) == q.elements.end())
        q.elements.push_back(e);
  const int n = static_cast<int>(q.elements.size());
  q.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elt c = conj(q.elements[j], q.elements[i]);
      auto it = std::find(q.elements.begin(), q.elements.end(), c);
      if (it == q.elements.end()) throw std::logic_error("support not closed under conjugation");
      q.table[i][j] = static_cast<int>(it - q.elements.begin());
    }
  return q;
}

namespace {

const std::vector<NamedQuandle>& named_quandles() {
  static std::vector<NamedQuandle> qs = [] {
    std::vector<NamedQuandle> out;
    auto add = [&](const char* name, Family fam, std::vector<unsigned> params,
                   const std::vector<std::array<int, 5>>& reps) {
      auto g = Group::make({fam, std::move(params)});
      std::vector<Elt> rr;
      for (const auto& t : reps) rr.push_back(g->from_tuple(t));
      out.push_back({name, g->quandle_of_support(rr).table});
    };
    // class of a and class of b in the smallest faithful Gamma_2 image
    add("Z2^{2,2}", Family::Gamma2, {2, 2}, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});
    // class of g together with the central z
    add("Z3^{3,1}", Family::Gamma3, {2, 2}, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});
    // class of g together with the class of eps z
    add("Z3^{3,2}", Family::Gamma3, {2, 2}, {{0, 1, 0, 0, 0}, {1, 0, 1, 0, 0}});
    // class of a (size 4) and class of b (size 2)
    add("Z4^{4,2}", Family::Gamma4, {2, 4}, {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});
    // class of x1 (size 4) and the central zeta image
    add("Z_T^{4,1}", Family::T, {2}, {{1, 1, 0, 1, 0}, {1, 0, 0, 1, 1}});
    return out;
  }();
  return qs;
}

} // namespace

} // namespace nichols
