#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nichols/adjoint.hpp"
#include "nichols/instantiate.hpp"

using namespace nichols;

namespace {

CentralizerRep character(const Field* K, std::vector<Elt> gens, std::vector<Scalar> values) {
  CentralizerRep rep;
  rep.gens = std::move(gens);
  for (const auto& v : values) {
    Matrix m(K, 1, 1);
    m.at(0, 0) = v;
    rep.images.push_back(std::move(m));
  }
  return rep;
}

// the z32-p1 shape: V = M(g,rho), W = M(eps z, sigma) over Gamma_3(2,6), Q(zeta_6)
struct P1Fixture {
  std::shared_ptr<const Group> G;
  const Field* K;
  Scalar rg, rz, se, sz, sg2;
  PairState pair;

  P1Fixture() {
    G = Group::make({Family::Gamma3, {2, 6}});
    K = &Field::get({0, 6});
    rg = K->minus_one();
    rz = K->zeta().pow(2); // zeta_3
    se = K->zeta().pow(2);
    sz = K->minus_one() * se.inverse();
    sg2 = K->one();
    Elt eps = G->gen_eps(), g = G->gen_a(), z = G->gen_b();
    pair.V = YDModule::induce(G, g, character(K, {g, z}, {rg, rz}), K);
    pair.W = YDModule::induce(G, G->mul(eps, z),
                              character(K, {eps, z, G->mul(g, g)}, {se, sz, sg2}), K);
  }
};

} // namespace

TEST_CASE("phi_1 on the first pair reproduces the w' formula") {
  P1Fixture f;
  AdjointChain chain(f.pair.V, f.pair.W, {});
  // phi_1(eps^2 v (x) w) = eps^2 v (x) w - rho(z) sigma(eps)^2 eps v (x) gw
  SparseVec in;
  in.add(2 * 2 + 0, f.K->one());
  SparseVec out = chain.apply_phi(1, in);
  REQUIRE(out.t.size() == 2);
  CHECK(out.t[0].first == 1 * 2 + 1);
  CHECK(out.t[0].second == -(f.rz * f.se * f.se));
  CHECK(out.t[1].first == 2 * 2 + 0);
  CHECK(out.t[1].second.is_one());
}

TEST_CASE("first-pair chain: X_1 = M(gz, sigma_1), X_2 simple, X_3 = 0") {
  P1Fixture f;
  AdjointChain chain(f.pair.V, f.pair.W, {});
  REQUIRE(chain.outcome() == ChainOutcome::Terminated);
  CHECK(chain.top() == 2);

  const YDModule& X1 = chain.X(1);
  CHECK(X1.dim() == 3);
  CHECK(X1.is_absolutely_simple());
  // X_1 = M(gz, sigma_1), sigma_1(g) = -rho(g z^{-1}) sigma(eps),
  // sigma_1(z) = rho(z) sigma(z)
  Elt g = f.G->gen_a(), z = f.G->gen_b();
  Scalar s1g = -(f.rg * f.rz.inverse() * f.se);
  Scalar s1z = f.rz * f.sz;
  YDModule expect =
      YDModule::induce(f.G, f.G->mul(g, z), character(f.K, {g, z}, {s1g, s1z}), f.K);
  CHECK(graded_isomorphic(X1, expect));

  // X_2 = M(g^2 z, sigma_2): character of G with sigma_2(g) = -rho(z)^{-1} sigma(eps),
  // sigma_2(z) = rho(z)^2 sigma(z)
  const YDModule& X2 = chain.X(2);
  CHECK(X2.is_absolutely_simple());
  Elt eps = f.G->gen_eps();
  Scalar s2g = -(f.rz.inverse() * f.se);
  Scalar s2z = f.rz * f.rz * f.sz;
  YDModule expect2 = YDModule::induce(
      f.G, f.G->mul(f.G->mul(g, g), z),
      character(f.K, {eps, g, z}, {f.K->one(), s2g, s2z}), f.K);
  CHECK(graded_isomorphic(X2, expect2));

  // degrees of X_m lie on the (g z^m)-class (here m = 1)
  for (Elt d : X1.support()) {
    auto cls = f.G->conjugacy_class(f.G->mul(g, z));
    CHECK(std::find(cls.begin(), cls.end(), d) != cls.end());
  }
}

TEST_CASE("reverse chain of the first pair vanishes at the predicted level") {
  P1Fixture f;
  // sigma(eps z) = -1, so X_2^{W,V} = 0 and a21 = -1
  AdjointChain chain(f.pair.W, f.pair.V, {});
  REQUIRE(chain.outcome() == ChainOutcome::Terminated);
  CHECK(chain.top() == 1);
  auto an = analyze_pair(f.pair);
  REQUIRE(an.cartan.has_value());
  CHECK(an.cartan->a12 == -2);
  CHECK(an.cartan->a21 == -1);
  CHECK(an.cls == PairClass::P1);
}

TEST_CASE("phi_1 vanishes when the braiding square is the identity") {
  // third-pair shape with rho(z) sigma(g) = 1
  auto G = Group::make({Family::Gamma3, {2, 2}});
  const Field* K = &Field::rationals();
  Elt eps = G->gen_eps(), g = G->gen_a(), z = G->gen_b();
  YDModule V = YDModule::induce(G, g, character(K, {g, z}, {K->minus_one(), K->one()}), K);
  YDModule W = YDModule::induce(
      G, z, character(K, {eps, g, z}, {K->one(), K->one(), K->minus_one()}), K);
  PairState p{V, W};
  CHECK(braiding_square_is_identity(p));
  AdjointChain chain(V, W, {});
  CHECK(chain.outcome() == ChainOutcome::Terminated);
  CHECK(chain.top() == 0); // X_1 = phi_1(V (x) W) = 0
  auto an = analyze_pair(p);
  CHECK(an.cartan->a12 == 0);
  CHECK(an.cartan->a21 == 0);
}

TEST_CASE("classification of the instantiated examples") {
  struct Case {
    const char* id;
    unsigned ch;
    PairClass cls;
  };
  for (const Case& c : {Case{"z32-p1", 0, PairClass::P1}, Case{"z32-p2", 0, PairClass::P2},
                        Case{"z31b-p3", 0, PairClass::P3}, Case{"z31a-p4", 0, PairClass::P4},
                        Case{"z31a-p5", 2, PairClass::P5}, Case{"z32-p5'", 2, PairClass::P5p},
                        Case{"z31a-p5''", 2, PairClass::P5pp},
                        Case{"z31a-p6", 0, PairClass::P6}}) {
    const Instantiated& inst = instantiate_example(c.id, c.ch);
    CAPTURE(c.id);
    CHECK(classify_pair(inst.pair) == c.cls);
  }
}

TEST_CASE("Cartan matrices of the instantiated classes") {
  for (const char* id : {"z32-p1", "z32-p2", "z31b-p3", "z31a-p4"}) {
    auto an = analyze_pair(instantiate_example(id, 0).pair);
    CAPTURE(id);
    REQUIRE(an.cartan.has_value());
    CHECK(an.cartan->a12 == -2);
    CHECK(an.cartan->a21 == -1);
  }
  auto p5 = analyze_pair(instantiate_example("z31a-p5", 2).pair);
  CHECK(p5.cartan->a12 == -2);
  CHECK(p5.cartan->a21 == -1);
  auto p5pp = analyze_pair(instantiate_example("z31a-p5''", 2).pair);
  CHECK(p5pp.cartan->a12 == -4);
  CHECK(p5pp.cartan->a21 == -1);
  auto p5p = analyze_pair(instantiate_example("z32-p5'", 2).pair);
  CHECK(p5p.cartan->a12 == -2);
  CHECK(p5p.cartan->a21 == -2);
}

TEST_CASE("reflections move between the paper's classes") {
  const Instantiated& p1 = instantiate_example("z32-p1", 0);
  PairState r1 = reflect(1, p1.pair);
  CHECK(classify_pair(r1) == PairClass::P4);
  PairState r2 = reflect(2, p1.pair);
  CHECK(classify_pair(r2) == PairClass::P1);

  // R_i^2 is isomorphic to the original pair via graded intertwiners
  CHECK(pair_isomorphic(reflect(1, r1), p1.pair));
  CHECK(pair_isomorphic(reflect(2, r2), p1.pair));
}

TEST_CASE("the P6 pair breaks after R2") {
  const Instantiated& p6 = instantiate_example("z31a-p6", 0);
  auto an = analyze_pair(p6.pair);
  REQUIRE(an.cartan.has_value());
  CHECK(an.cartan->a12 == -2);
  CHECK(an.cartan->a21 == -1);
  PairState r2 = reflect(2, p6.pair);
  AdjointChain chain(r2.V, r2.W, {});
  CHECK(chain.outcome() == ChainOutcome::NotSemisimple);
  CHECK_THROWS_WITH_AS(reflect(1, r2), doctest::Contains("reflection undefined"),
                       std::runtime_error);
}
