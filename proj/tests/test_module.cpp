#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nichols/module.hpp"

#include <algorithm>

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

// M(g, rho) over a Gamma_3 image, rho = (rho_g, rho_z) on <g, z>
YDModule make_V(std::shared_ptr<const Group> G, const Field* K, const Scalar& rho_g,
                const Scalar& rho_z) {
  Elt g = G->gen_a(), z = G->gen_b();
  return YDModule::induce(G, g, character(K, {g, z}, {rho_g, rho_z}), K);
}

// M(eps z, sigma), sigma = (sigma_eps, sigma_z, sigma_g2) on <eps, z, g^2>
YDModule make_W_eps(std::shared_ptr<const Group> G, const Field* K, const Scalar& se,
                    const Scalar& sz, const Scalar& sg2) {
  Elt eps = G->gen_eps(), g = G->gen_a(), z = G->gen_b();
  return YDModule::induce(G, G->mul(eps, z),
                          character(K, {eps, z, G->mul(g, g)}, {se, sz, sg2}), K);
}

} // namespace

TEST_CASE("induced module M(g,rho) matches the basis and action conventions") {
  auto G = Group::make({Family::Gamma3, {4, 6}});
  const Field* K = &Field::get({0, 6});
  Scalar rg = K->minus_one(), rz = K->zeta(); // zeta_6
  YDModule V = make_V(G, K, rg, rz);

  REQUIRE(V.dim() == 3);
  Elt eps = G->gen_eps(), g = G->gen_a();
  // degrees g, g eps, g eps^2
  CHECK(V.degree(0) == g);
  CHECK(V.degree(1) == G->mul(g, eps));
  CHECK(V.degree(2) == G->mul(g, G->mul(eps, eps)));

  // eps cycles v -> eps v -> eps^2 v -> v
  const Matrix& me = V.act(eps);
  CHECK(me.at(1, 0).is_one());
  CHECK(me.at(2, 1).is_one());
  CHECK(me.at(0, 2).is_one());
  // z acts by rho(z)
  const Matrix& mz = V.act(G->gen_b());
  for (int i = 0; i < 3; ++i) CHECK(mz.at(i, i) == rz);
  // g: v -> rho(g) v, eps v -> rho(g) eps^2 v, eps^2 v -> rho(g) eps v
  const Matrix& mg = V.act(g);
  CHECK(mg.at(0, 0) == rg);
  CHECK(mg.at(2, 1) == rg);
  CHECK(mg.at(1, 2) == rg);

  std::string why;
  CHECK(V.validate(&why));
  CHECK(V.is_absolutely_simple());
  CHECK(V.support().size() == 3);
}

TEST_CASE("induced module M(eps z, sigma)") {
  auto G = Group::make({Family::Gamma3, {4, 6}});
  const Field* K = &Field::get({0, 6});
  Scalar se = K->zeta() * K->zeta();          // zeta_3
  Scalar sz = K->minus_one() * se.inverse();  // sigma(eps z) = -1
  YDModule W = make_W_eps(G, K, se, sz, K->one());

  REQUIRE(W.dim() == 2);
  Elt eps = G->gen_eps(), g = G->gen_a(), z = G->gen_b();
  CHECK(W.degree(0) == G->mul(eps, z));
  CHECK(W.degree(1) == G->mul(G->mul(eps, eps), z)); // eps^2 z

  const Matrix& me = W.act(eps);
  CHECK(me.at(0, 0) == se);
  CHECK(me.at(1, 1) == se * se);
  const Matrix& mg = W.act(g);
  CHECK(mg.at(1, 0).is_one());       // g.w = gw
  CHECK(mg.at(0, 1).is_one());       // g.gw = sigma(g^2) w = w
  CHECK(W.validate());
  CHECK(W.is_absolutely_simple());
}

TEST_CASE("one-dimensional M(z, sigma)") {
  auto G = Group::make({Family::Gamma3, {2, 2}});
  const Field* K = &Field::rationals();
  Elt eps = G->gen_eps(), g = G->gen_a(), z = G->gen_b();
  YDModule W =
      YDModule::induce(G, z, character(K, {eps, g, z}, {K->one(), K->one(), K->minus_one()}), K);
  CHECK(W.dim() == 1);
  CHECK(W.support() == std::vector<Elt>{z});
  CHECK(W.is_absolutely_simple());
  // dual has degree z^{-1}
  CHECK(W.dual().degree(0) == G->inv(z));
}

TEST_CASE("braiding against the example table") {
  auto G = Group::make({Family::Gamma3, {4, 6}});
  const Field* K = &Field::get({0, 6});
  Scalar rg = K->minus_one(), rz = K->zeta();
  Scalar se = K->zeta() * K->zeta();
  Scalar sz = K->minus_one() * se.inverse();
  YDModule V = make_V(G, K, rg, rz);
  YDModule W = make_W_eps(G, K, se, sz, K->one());

  Matrix c = braiding(V, W);
  // c(v (x) w) = (deg v).w (x) v = g.w (x) v = gw (x) v
  // tensor index of v (x) w is 0; of gw (x) v is 1*3+0 = 3
  CHECK(c.at(3, 0).is_one());
  for (int r = 0; r < 6; ++r)
    if (r != 3) CHECK(c.at(r, 0).is_zero());

  // c(v (x) v) = rho(g) v (x) v on the square of V
  Matrix cv = braiding(V, V);
  CHECK(cv.at(0, 0) == rg);

  // braid equation on (V + W)^{(x)3}
  CHECK(braid_equation_holds(YDModule::direct_sum(V, W)));

  // c_{W,V} c_{V,W} != id
  CHECK_FALSE(braiding_square(V, W).is_identity());
}

TEST_CASE("dual module conventions") {
  auto G = Group::make({Family::Gamma3, {4, 6}});
  const Field* K = &Field::get({0, 6});
  YDModule V = make_V(G, K, K->minus_one(), K->zeta());

  YDModule Vd = V.dual();
  CHECK(Vd.validate());
  // M(g,rho)* = M(g^{-1}, rho') with rho'(g') = rho(g)^{-1} = -1
  Elt ginv = G->inv(G->gen_a());
  CHECK(Vd.support() == [&] {
    std::vector<Elt> s;
    for (Elt d : V.support()) s.push_back(G->inv(d));
    std::sort(s.begin(), s.end());
    return s;
  }());
  auto ev = Vd.self_eigenvalue(ginv);
  REQUIRE(ev.has_value());
  CHECK(*ev == K->minus_one());

  // (V*)* is graded-isomorphic to V
  CHECK(graded_isomorphic(Vd.dual(), V));
}

TEST_CASE("absolute simplicity") {
  auto G = Group::make({Family::Gamma3, {2, 3}});
  const Field* K = &Field::rationals();
  YDModule V = make_V(G, K, K->minus_one(), K->one());
  CHECK(V.is_absolutely_simple());

  YDModule VV = YDModule::direct_sum(V, V);
  CHECK_FALSE(VV.is_absolutely_simple());

  // negative control: z acting by a rational rotation of order 3 is simple
  // over Q but splits over Q(zeta_3)
  Elt z = G->gen_b();
  std::vector<Matrix> act;
  for (Elt h : G->generators()) {
    Matrix m = Matrix::identity(K, 2);
    if (h == z) {
      m = Matrix(K, 2, 2);
      m.at(0, 1) = K->minus_one();
      m.at(1, 0) = K->one();
      m.at(1, 1) = K->minus_one();
    }
    act.push_back(std::move(m));
  }
  YDModule control(G, K, {z, z}, std::move(act));
  CHECK(control.validate());
  CHECK_FALSE(control.is_absolutely_simple());
}

TEST_CASE("submodule closure") {
  // parameters satisfying rho(z)^2 sigma(eps g^2) = 1 with g^2 = 1
  auto G = Group::make({Family::Gamma3, {2, 6}});
  const Field* K = &Field::get({0, 6});
  Scalar rg = K->minus_one(), rz = K->zeta().pow(2); // zeta_3
  Scalar se = K->zeta().pow(2);
  Scalar sz = K->minus_one() * se.inverse();
  YDModule V = make_V(G, K, rg, rz);
  YDModule W = make_W_eps(G, K, se, sz, K->one());

  YDModule VW = tensor_product(V, W);
  CHECK(VW.validate());

  // w' = eps^2 v (x) w - rho(z) sigma(eps)^2 eps v (x) gw generates a
  // 3-dimensional submodule
  std::vector<Scalar> wprime(VW.dim(), K->zero());
  wprime[2 * 2 + 0] = K->one();
  wprime[1 * 2 + 1] = -(rz * se * se);
  auto sub = submodule_generated(VW, {wprime});
  CHECK(sub.module.dim() == 3);
  CHECK(sub.module.validate());

  // closure of a full basis is everything; closure of zero is zero
  std::vector<std::vector<Scalar>> all;
  for (int i = 0; i < VW.dim(); ++i) {
    std::vector<Scalar> e(VW.dim(), K->zero());
    e[i] = K->one();
    all.push_back(std::move(e));
  }
  CHECK(submodule_generated(VW, all).module.dim() == VW.dim());
  CHECK(submodule_generated(VW, {std::vector<Scalar>(VW.dim(), K->zero())}).module.dim() == 0);
}

TEST_CASE("support of sums and tensor squares") {
  auto G = Group::make({Family::Gamma3, {4, 6}});
  const Field* K = &Field::get({0, 6});
  YDModule V = make_V(G, K, K->minus_one(), K->one());
  YDModule W = make_W_eps(G, K, K->zeta() * K->zeta(), K->one(), K->one());
  YDModule U = YDModule::direct_sum(V, W);
  std::vector<Elt> su = U.support();
  for (Elt d : V.support()) CHECK(std::binary_search(su.begin(), su.end(), d));
  for (Elt d : W.support()) CHECK(std::binary_search(su.begin(), su.end(), d));
  CHECK(su.size() == V.support().size() + W.support().size());
}

TEST_CASE("intertwiners detect isomorphism only between matching modules") {
  auto G = Group::make({Family::Gamma3, {4, 6}});
  const Field* K = &Field::get({0, 6});
  YDModule V1 = make_V(G, K, K->minus_one(), K->zeta());
  YDModule V2 = make_V(G, K, K->minus_one(), K->zeta());
  YDModule V3 = make_V(G, K, K->minus_one(), -K->zeta());
  CHECK(graded_isomorphic(V1, V2));
  CHECK_FALSE(graded_isomorphic(V1, V3)); // different central character
}
