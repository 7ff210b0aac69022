#include "nichols/instantiate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace nichols {

namespace {

// Candidate fields per characteristic, ordered by extension degree then order.
std::vector<FieldDescriptor> candidate_fields(unsigned p) {
  std::vector<FieldDescriptor> out;
  for (unsigned n : {1u, 2u, 3u, 4u, 6u, 12u}) {
    if (p != 0 && n % p == 0) continue;
    out.push_back({p, n});
  }
  std::stable_sort(out.begin(), out.end(), [](const FieldDescriptor& a, const FieldDescriptor& b) {
    return Field::get(a).degree() < Field::get(b).degree();
  });
  return out;
}

// All characters of the subgroup generated by gens, as image tuples in the
// deterministic roots-of-unity order, filtered by well-definedness.
std::vector<std::vector<Scalar>> characters_on(const Group& G, const Field* K,
                                               const std::vector<Elt>& gens) {
  std::vector<std::vector<Scalar>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    candidates[i] = K->roots_of_unity(G.element_order(gens[i]));
  std::vector<std::vector<Scalar>> out;
  std::vector<size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<Scalar> values;
    for (size_t i = 0; i < gens.size(); ++i) values.push_back(candidates[i][pick[i]]);
    CentralizerRep rep;
    rep.gens = gens;
    for (const auto& v : values) {
      Matrix m(K, 1, 1);
      m.at(0, 0) = v;
      rep.images.push_back(std::move(m));
    }
    if (rep.well_defined(G)) out.push_back(std::move(values));
    size_t i = gens.size();
    while (i > 0 && ++pick[i - 1] == candidates[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

CentralizerRep char_rep(const Field* K, const std::vector<Elt>& gens,
                        const std::vector<Scalar>& values) {
  CentralizerRep rep;
  rep.gens = gens;
  for (const auto& v : values) {
    Matrix m(K, 1, 1);
    m.at(0, 0) = v;
    rep.images.push_back(std::move(m));
  }
  return rep;
}

bool pair_viable(const PairState& p) {
  if (braiding_square_is_identity(p)) return false;
  if (!p.V.is_absolutely_simple() || !p.W.is_absolutely_simple()) return false;
  std::vector<Elt> supp = p.V.support();
  for (Elt x : p.W.support()) supp.push_back(x);
  return p.V.group().generates(supp);
}

using Builder = std::function<bool(unsigned characteristic, Instantiated& out)>;

// Gamma_3 searches share their scaffolding; the three module shapes are
// W = M(eps z, sigma), W = M(z, sigma) with deg sigma = 1, and deg sigma = 2.
enum class WShape { EpsClass, CentralChar, CentralDeg2 };

struct G3Constraint {
  WShape shape;
  // scalar predicate on (rho_g, rho_z, sigma values); sigma layout by shape:
  //   EpsClass:    {sigma_eps, sigma_z, sigma_g2}
  //   CentralChar: {sigma_eps(=1), sigma_g, sigma_z}
  //   CentralDeg2: {lambda, sigma_g2, sigma_z}
  std::function<bool(const Field*, const Scalar& rho_g, const Scalar& rho_z,
                     const std::vector<Scalar>& sig)>
      pred;
};

bool build_gamma3(const G3Constraint& c, unsigned p, Instantiated& out) {
  for (const auto& fd : candidate_fields(p)) {
    const Field* K = &Field::get(fd);
    std::vector<std::pair<unsigned, std::pair<unsigned, unsigned>>> sizes;
    for (unsigned N = 2; N <= 12; N += 2)
      for (unsigned M = 1; M <= 12; ++M) sizes.push_back({3 * N * M, {N, M}});
    std::stable_sort(sizes.begin(), sizes.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [gsize, NM] : sizes) {
      auto G = Group::make({Family::Gamma3, {NM.first, NM.second}});
      Elt eps = G->gen_eps(), g = G->gen_a(), z = G->gen_b();
      Elt g2 = G->mul(g, g);
      auto rhos = characters_on(*G, K, {g, z});

      std::vector<std::pair<std::vector<Scalar>, CentralizerRep>> sigmas;
      Elt wsupp = 0;
      if (c.shape == WShape::EpsClass) {
        wsupp = G->mul(eps, z);
        for (auto& vals : characters_on(*G, K, {eps, z, g2}))
          sigmas.push_back({vals, char_rep(K, {eps, z, g2}, vals)});
      } else if (c.shape == WShape::CentralChar) {
        wsupp = z;
        for (auto& vals : characters_on(*G, K, {eps, g, z})) {
          if (!vals[0].is_one()) continue;
          sigmas.push_back({vals, char_rep(K, {eps, g, z}, vals)});
        }
      } else {
        wsupp = z;
        for (const auto& lambda : K->roots_of_unity(3)) {
          if (lambda.is_one()) continue;
          for (const auto& s : K->roots_of_unity(G.get()->element_order(g2)))
            for (const auto& u : K->roots_of_unity(G.get()->element_order(z))) {
              CentralizerRep rep;
              rep.gens = {eps, g, z};
              Matrix me(K, 2, 2), mg(K, 2, 2), mz(K, 2, 2);
              me.at(0, 0) = lambda;
              me.at(1, 1) = lambda * lambda;
              mg.at(0, 1) = s;
              mg.at(1, 0) = K->one();
              mz.at(0, 0) = u;
              mz.at(1, 1) = u;
              rep.images = {me, mg, mz};
              if (!rep.well_defined(*G)) continue;
              sigmas.push_back({{lambda, s, u}, rep});
            }
        }
      }

      for (const auto& rv : rhos) {
        for (const auto& [sv, srep] : sigmas) {
          if (!c.pred(K, rv[0], rv[1], sv)) continue;
          YDModule V = YDModule::induce(G, g, char_rep(K, {g, z}, rv), K);
          YDModule W = YDModule::induce(G, wsupp, srep, K);
          PairState pair{std::move(V), std::move(W)};
          if (!pair_viable(pair)) continue;
          out.G = G;
          out.K = K;
          out.v = {g, {g, z}, char_rep(K, {g, z}, rv).images};
          out.w = {wsupp, srep.gens, srep.images};
          out.pair = std::move(pair);
          return true;
        }
      }
    }
  }
  return false;
}

bool build_gamma2or4(Family fam, unsigned p, Instantiated& out,
                     const std::function<bool(const Field*, const std::vector<Scalar>& rho,
                                              const std::vector<Scalar>& sig)>& pred) {
  unsigned nu = fam == Family::Gamma2 ? 2 : 4;
  for (const auto& fd : candidate_fields(p)) {
    const Field* K = &Field::get(fd);
    std::vector<std::pair<unsigned, std::pair<unsigned, unsigned>>> sizes;
    for (unsigned A = 2; A <= 12; A += 2)
      for (unsigned B = nu; B <= 12; B += nu) sizes.push_back({nu * A * B, {A, B}});
    std::stable_sort(sizes.begin(), sizes.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [gsize, AB] : sizes) {
      auto G = Group::make({fam, {AB.first, AB.second}});
      Elt eps = G->gen_eps(), a = G->gen_a(), b = G->gen_b();
      Elt a2 = G->mul(a, a), b2 = G->mul(b, b);
      // Gamma2: V = M(a, rho) on <eps, a, b^2>, W = M(b, sigma) on <eps, b, a^2>.
      // Gamma4: V = M(b, rho) on <eps, b, a^2>, W = M(a, sigma) on <eps^2, eps^{-1}b^2, a>.
      std::vector<Elt> vx_gens, wx_gens;
      Elt vx, wx;
      if (fam == Family::Gamma2) {
        vx = a;
        vx_gens = {eps, a, b2};
        wx = b;
        wx_gens = {eps, b, a2};
      } else {
        vx = b;
        vx_gens = {eps, b, a2};
        wx = a;
        wx_gens = {G->mul(eps, eps), G->mul(G->inv(eps), b2), a};
      }
      auto rhos = characters_on(*G, K, vx_gens);
      auto sigmas = characters_on(*G, K, wx_gens);
      for (const auto& rv : rhos)
        for (const auto& sv : sigmas) {
          if (!pred(K, rv, sv)) continue;
          YDModule V = YDModule::induce(G, vx, char_rep(K, vx_gens, rv), K);
          YDModule W = YDModule::induce(G, wx, char_rep(K, wx_gens, sv), K);
          PairState pair{std::move(V), std::move(W)};
          if (!pair_viable(pair)) continue;
          out.G = G;
          out.K = K;
          out.v = {vx, vx_gens, char_rep(K, vx_gens, rv).images};
          out.w = {wx, wx_gens, char_rep(K, wx_gens, sv).images};
          out.pair = std::move(pair);
          return true;
        }
    }
  }
  return false;
}

bool build_t(unsigned p, Instantiated& out) {
  for (const auto& fd : candidate_fields(p)) {
    const Field* K = &Field::get(fd);
    for (unsigned M = 1; M <= 12; ++M) {
      auto G = Group::make({Family::T, {M}});
      Elt u = G->generators()[0], l = G->generators()[1];
      Elt cgen = G->from_tuple({1, 0, 0, 1, M > 1 ? 1 : 0});
      for (unsigned k1 = 0; k1 < M; ++k1)
        for (unsigned s = 0; s < M; ++s) {
          Elt x1 = G->mul(u, G->power(cgen, k1));
          Elt x2 = G->mul(l, G->power(cgen, k1));
          Elt z = G->power(cgen, s);
          if (!G->generates({x1, x2, z})) continue;
          Elt x3 = G->conj(x1, x2), x4 = G->conj(x2, x1);
          Elt x2x3 = G->mul(x2, x3);
          std::vector<Elt> ggens = G->generators();
          auto rhos = characters_on(*G, K, ggens);
          std::vector<Elt> cgens = G->centralizer_generators(x1);
          auto sigmas = characters_on(*G, K, cgens);
          for (const auto& rv : rhos) {
            CentralizerRep rho = char_rep(K, ggens, rv);
            Scalar rho_x1 = rho.value(*G, x1).at(0, 0);
            Scalar rho_x1z = rho.value(*G, G->mul(x1, z)).at(0, 0);
            for (const auto& sv : sigmas) {
              CentralizerRep sigma = char_rep(K, cgens, sv);
              Scalar sig_x1 = sigma.value(*G, x1).at(0, 0);
              Scalar sig_x2x3 = sigma.value(*G, x2x3).at(0, 0);
              Scalar sig_z = sigma.value(*G, z).at(0, 0);
              const Scalar q = rho_x1 * sig_z;
              if (!(sig_x1 == K->minus_one())) continue;
              if (!sig_x2x3.is_one()) continue;
              if (!(q * q - q + K->one()).is_zero()) continue;
              if (!(rho_x1z * sig_z).is_one()) continue;
              YDModule V = YDModule::induce(G, z, rho, K);
              YDModule W = YDModule::induce(G, x1, sigma, K);
              PairState pair{std::move(V), std::move(W)};
              if (!pair_viable(pair)) continue;
              // record the distinguished tuple in the provenance
              (void)x4;
              out.G = G;
              out.K = K;
              out.v = {z, ggens, rho.images};
              out.w = {x1, cgens, sigma.images};
              out.pair = std::move(pair);
              return true;
            }
          }
        }
    }
  }
  return false;
}

struct ExampleDef {
  std::string id;
  std::function<bool(unsigned)> admits;
  Builder build;
};

bool is_zero3(const Scalar& q) { return quantum_integer(3, q).is_zero(); }

const std::vector<ExampleDef>& example_defs() {
  static std::vector<ExampleDef> defs = [] {
    std::vector<ExampleDef> d;
    auto any = [](unsigned) { return true; };
    auto not3 = [](unsigned p) { return p != 3; };
    auto not2 = [](unsigned p) { return p != 2; };
    auto not23 = [](unsigned p) { return p != 2 && p != 3; };
    auto only2 = [](unsigned p) { return p == 2; };
    auto only3 = [](unsigned p) { return p == 3; };

    d.push_back({"g2a", any, [](unsigned p, Instantiated& out) {
                   return build_gamma2or4(Family::Gamma2, p, out,
                                          [](const Field* K, const auto& r, const auto& s) {
                                            return r[1] == K->minus_one() &&
                                                   s[1] == K->minus_one() &&
                                                   (r[0] * r[2] * s[0] * s[2]).is_one();
                                          });
                 }});
    d.push_back({"g2b", only3, [](unsigned p, Instantiated& out) {
                   return build_gamma2or4(Family::Gamma2, p, out,
                                          [](const Field* K, const auto& r, const auto& s) {
                                            return r[1].is_one() && s[1] == K->minus_one() &&
                                                   (r[0] * r[2] * s[0] * s[2]).is_one();
                                          });
                 }});
    d.push_back({"g4", any, [](unsigned p, Instantiated& out) {
                   // rho on {eps, h, g^2}, sigma on {eps^2, eps^{-1}h^2, g}
                   return build_gamma2or4(Family::Gamma4, p, out,
                                          [](const Field* K, const auto& r, const auto& s) {
                                            return r[1] == K->minus_one() &&
                                                   s[2] == K->minus_one() &&
                                                   r[0] == r[2] * s[1] &&
                                                   r[0] * r[0] == K->minus_one();
                                          });
                 }});
    d.push_back({"t", any, [](unsigned p, Instantiated& out) { return build_t(p, out); }});

    auto g3 = [](WShape shape, auto pred) {
      return [shape, pred](unsigned p, Instantiated& out) {
        return build_gamma3({shape, pred}, p, out);
      };
    };
    d.push_back({"z32-p1", any,
                 g3(WShape::EpsClass, [](const Field* K, const Scalar& rg, const Scalar& rz,
                                         const std::vector<Scalar>& s) {
                   return rg == K->minus_one() && s[0] * s[1] == K->minus_one() &&
                          (rz * rz * s[0] * s[2]).is_one() && is_zero3(s[0]);
                 })});
    d.push_back({"z32-p2", not3,
                 g3(WShape::EpsClass, [](const Field* K, const Scalar& rg, const Scalar& rz,
                                         const std::vector<Scalar>& s) {
                   return rg == K->minus_one() && s[1] == K->minus_one() && s[0].is_one() &&
                          (rz * rz * s[0] * s[2]).is_one();
                 })});
    d.push_back({"z32-p5'", only2,
                 g3(WShape::EpsClass, [](const Field* K, const Scalar& rg, const Scalar& rz,
                                         const std::vector<Scalar>& s) {
                   return rg.is_one() && s[1] == s[0] && is_zero3(s[0]) &&
                          (rz * rz * s[0] * s[2]).is_one();
                 })});
    d.push_back({"z31a-p4", any,
                 g3(WShape::CentralChar, [](const Field* K, const Scalar& rg, const Scalar& rz,
                                            const std::vector<Scalar>& s) {
                   return rg == K->minus_one() && (rz * s[1] * s[2]).is_one() &&
                          is_zero3(-(rz * s[1]));
                 })});
    d.push_back({"z31a-p5", only2,
                 g3(WShape::CentralChar, [](const Field* K, const Scalar& rg, const Scalar& rz,
                                            const std::vector<Scalar>& s) {
                   return rg.is_one() && s[2].is_one() && is_zero3(rz * s[1]);
                 })});
    d.push_back({"z31a-p5''", only2,
                 g3(WShape::CentralChar, [](const Field* K, const Scalar& rg, const Scalar& rz,
                                            const std::vector<Scalar>& s) {
                   return is_zero3(rg) && s[2].is_one() && (rg * rz * s[1]).is_one();
                 })});
    d.push_back({"z31a-p6", not23,
                 g3(WShape::CentralChar, [](const Field* K, const Scalar& rg, const Scalar& rz,
                                            const std::vector<Scalar>& s) {
                   return rg == K->minus_one() && s[2] == K->minus_one() &&
                          is_zero3(-(rz * s[1]));
                 })});
    d.push_back({"z31b-p3", not3,
                 g3(WShape::CentralDeg2, [](const Field* K, const Scalar& rg, const Scalar& rz,
                                            const std::vector<Scalar>& s) {
                   return rg == K->minus_one() && s[2] == K->minus_one() &&
                          (rz * rz * s[1]).is_one();
                 })});
    return d;
  }();
  return defs;
}

} // namespace

const std::vector<std::string>& example_ids() {
  static std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : example_defs()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

bool example_admits_char(const std::string& id, unsigned p) {
  for (const auto& d : example_defs())
    if (d.id == id) return d.admits(p);
  throw std::invalid_argument("unknown example id: " + id);
}

const Instantiated& instantiate_example(const std::string& id, unsigned characteristic) {
  static std::map<std::pair<std::string, unsigned>, Instantiated> cache;
  auto key = std::make_pair(id, characteristic);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  for (const auto& d : example_defs()) {
    if (d.id != id) continue;
    if (!d.admits(characteristic))
      throw std::invalid_argument("example " + id + " does not admit characteristic " +
                                  std::to_string(characteristic));
    Instantiated inst;
    inst.id = id;
    inst.characteristic = characteristic;
    if (!d.build(characteristic, inst))
      throw std::runtime_error("no witness for " + id + " within the search bounds");
    return cache.emplace(key, std::move(inst)).first->second;
  }
  throw std::invalid_argument("unknown example id: " + id);
}

const YDModule& yclass_witness(YClassLabel y, unsigned characteristic) {
  static std::map<std::pair<int, unsigned>, YDModule> cache;
  auto key = std::make_pair(static_cast<int>(y), characteristic);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  for (const auto& fd : candidate_fields(characteristic)) {
    const Field* K = &Field::get(fd);
    for (unsigned N = 2; N <= 12; N += 2)
      for (unsigned M = 1; M <= 12; ++M) {
        auto G = Group::make({Family::Gamma3, {N, M}});
        Elt eps = G->gen_eps(), g = G->gen_a(), z = G->gen_b();
        std::vector<std::pair<Elt, CentralizerRep>> candidates;
        if (y == YClassLabel::Y1 || y == YClassLabel::Y2) {
          for (auto& v : characters_on(*G, K, {g, z}))
            candidates.push_back({g, char_rep(K, {g, z}, v)});
        } else if (y == YClassLabel::Y3 || y == YClassLabel::Y4) {
          for (auto& v : characters_on(*G, K, {eps, g, z})) {
            if (!v[0].is_one()) continue;
            candidates.push_back({z, char_rep(K, {eps, g, z}, v)});
          }
        } else if (y == YClassLabel::Y5) {
          for (const auto& lambda : K->roots_of_unity(3)) {
            if (lambda.is_one()) continue;
            for (const auto& s : K->roots_of_unity(G->element_order(G->mul(g, g))))
              for (const auto& u : K->roots_of_unity(M)) {
                CentralizerRep rep;
                rep.gens = {eps, g, z};
                Matrix me(K, 2, 2), mg(K, 2, 2), mz(K, 2, 2);
                me.at(0, 0) = lambda;
                me.at(1, 1) = lambda * lambda;
                mg.at(0, 1) = s;
                mg.at(1, 0) = K->one();
                mz.at(0, 0) = u;
                mz.at(1, 1) = u;
                rep.images = {me, mg, mz};
                if (!rep.well_defined(*G)) continue;
                candidates.push_back({z, rep});
              }
          }
        } else {
          Elt g2 = G->mul(g, g);
          for (auto& v : characters_on(*G, K, {eps, z, g2}))
            candidates.push_back({G->mul(eps, z), char_rep(K, {eps, z, g2}, v)});
        }
        for (const auto& [x, rep] : candidates) {
          YDModule U = YDModule::induce(G, x, rep, K);
          if (yclass_of(U) == y) return cache.emplace(key, std::move(U)).first->second;
        }
      }
  }
  throw std::runtime_error("no witness for " + yclass_name(y) + " in characteristic " +
                           std::to_string(characteristic));
}

const std::vector<TableRow>& classification_table() {
  static std::vector<TableRow> rows = {
      {1, 4, Family::Gamma2, "", 64, "Z2^{2,2}", {"g2a"}},
      {2, 4, Family::Gamma2, "3", 1296, "Z2^{2,2}", {"g2b"}},
      {3, 4, Family::Gamma3, "!=2,3", 10368, "Z3^{3,1}", {"z31a-p4"}},
      {4, 4, Family::Gamma3, "2", 5184, "Z3^{3,1}", {"z31a-p4"}},
      {5, 4, Family::Gamma3, "3", 1152, "Z3^{3,1}", {"z31a-p4"}},
      {6, 4, Family::Gamma3, "2", 2239488, "Z3^{3,1}", {"z31a-p5", "z31a-p5''"}},
      {7, 5, Family::Gamma3, "!=2,3", 10368, "Z3^{3,2}", {"z32-p1"}},
      {8, 5, Family::Gamma3, "2", 5184, "Z3^{3,2}", {"z32-p1"}},
      {9, 5, Family::Gamma3, "3", 1152, "Z3^{3,2}", {"z32-p1"}},
      {10, 5, Family::Gamma3, "!=3", 2304, "Z3^{3,2}", {"z32-p2"}},
      {11, 5, Family::Gamma3, "!=3", 2304, "Z3^{3,1}", {"z31b-p3"}},
      {12, 5, Family::Gamma3, "2", 2239488, "Z3^{3,2}", {"z32-p5'"}},
      {13, 5, Family::T, "!=2", 80621568, "Z_T^{4,1}", {"t"}},
      {14, 5, Family::T, "2", 1259712, "Z_T^{4,1}", {"t"}},
      {15, 6, Family::Gamma4, "!=2", 262144, "Z4^{4,2}", {"g4"}},
      {16, 6, Family::Gamma4, "2", 65536, "Z4^{4,2}", {"g4"}},
  };
  return rows;
}

bool row_applicable(const TableRow& row, unsigned p) {
  const std::string& c = row.char_condition;
  if (c.empty()) return true;
  if (c == "2") return p == 2;
  if (c == "3") return p == 3;
  if (c == "!=2") return p != 2;
  if (c == "!=3") return p != 3;
  if (c == "!=2,3") return p != 2 && p != 3;
  throw std::logic_error("bad char condition");
}

HilbertSeries stated_example_series(const std::string& id, unsigned p) {
  HilbertSeries h;
  auto add = [&](unsigned n, int a, int b, int count = 1) {
    for (int i = 0; i < count; ++i) h.factors.push_back({n, a, b});
  };
  if (id == "g2a") {
    add(2, 1, 0, 2);
    add(2, 1, 1, 2);
    add(2, 0, 1, 2);
  } else if (id == "g2b") {
    add(3, 1, 0, 2);
    add(2, 0, 1, 2);
    add(3, 1, 1, 2);
    add(2, 2, 1, 2);
  } else if (id == "g4") {
    add(2, 0, 1, 4);
    add(2, 0, 2, 2);
    add(2, 1, 1, 4);
    add(2, 2, 2, 2);
    // q(t) = (1+t)^2 (1+t^2) if char != 2, (1+t)^2 if char = 2; at t1 t2^2 and t1
    add(2, 1, 2, 2);
    add(2, 1, 0, 2);
    if (p != 2) {
      add(2, 2, 4);
      add(2, 2, 0);
    }
  } else if (id == "t") {
    if (p != 2) {
      add(6, 1, 0);
      add(6, 1, 3);
      add(6, 2, 3);
      add(2, 0, 1, 2);
      add(3, 0, 1);
      add(6, 0, 1);
      add(2, 1, 1, 2);
      add(3, 1, 1);
      add(6, 1, 1);
      add(2, 1, 2, 2);
      add(3, 1, 2);
      add(6, 1, 2);
    } else {
      add(3, 1, 0);
      add(3, 1, 3);
      add(3, 2, 3);
      add(2, 0, 1, 2);
      add(3, 0, 1, 2);
      add(2, 1, 1, 2);
      add(3, 1, 1, 2);
      add(2, 1, 2, 2);
      add(3, 1, 2, 2);
    }
  } else {
    throw std::invalid_argument("no stated series for " + id);
  }
  h.canonicalize();
  return h;
}

} // namespace nichols
