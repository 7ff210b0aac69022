#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nichols/group.hpp"

#include <algorithm>

using namespace nichols;

namespace {

std::shared_ptr<const Group> gamma3(unsigned N, unsigned M) {
  return Group::make({Family::Gamma3, {N, M}});
}

} // namespace

TEST_CASE("gamma3 normal-form multiplication") {
  auto g3 = gamma3(4, 6);
  Elt eps = g3->gen_eps(), g = g3->gen_a(), z = g3->gen_b();

  // g . eps = eps^2 g
  CHECK(g3->mul(g, eps) == g3->mul(g3->power(eps, 2), g));
  // eps^3 = 1
  CHECK(g3->power(eps, 3) == g3->one());
  // (eps g)(eps g) = g^2
  Elt eg = g3->mul(eps, g);
  CHECK(g3->mul(eg, eg) == g3->mul(g, g));
  // z central
  CHECK(g3->is_central(z));
  CHECK(g3->order() == 3 * 4 * 6);
}

TEST_CASE("defining relators hold in every family") {
  {
    auto g2 = Group::make({Family::Gamma2, {2, 2}});
    Elt nu = g2->gen_eps(), a = g2->gen_a(), b = g2->gen_b();
    CHECK(g2->mul(b, a) == g2->mul(g2->mul(nu, a), b));       // ba = nu ab
    CHECK(g2->mul(nu, a) == g2->mul(a, g2->inv(nu)));          // nu a = a nu^{-1}
    CHECK(g2->mul(nu, b) == g2->mul(b, nu));                   // nu b = b nu
    CHECK(g2->power(nu, 2) == g2->one());
  }
  {
    auto g4 = Group::make({Family::Gamma4, {2, 4}});
    Elt nu = g4->gen_eps(), a = g4->gen_a(), b = g4->gen_b();
    CHECK(g4->mul(b, a) == g4->mul(g4->mul(nu, a), b));
    CHECK(g4->mul(nu, a) == g4->mul(a, g4->inv(nu)));
    CHECK(g4->mul(nu, b) == g4->mul(b, nu));
    CHECK(g4->power(nu, 4) == g4->one());
    CHECK(g4->element_order(nu) == 4);
  }
  {
    auto t = Group::make({Family::T, {6}});
    Elt x1 = t->generators()[0], x2 = t->generators()[1], c = t->generators()[2];
    CHECK(t->mul(t->mul(x1, x2), x1) == t->mul(t->mul(x2, x1), x2)); // braid
    CHECK(t->power(x1, 3) == t->power(x2, 3));
    CHECK(t->is_central(c));
    CHECK(t->order() == 24 * 6);
  }
}

TEST_CASE("multiplication is associative on exhaustive triples of small quotients") {
  for (auto g : {Group::make({Family::Gamma3, {2, 2}}), Group::make({Family::Gamma2, {2, 2}})}) {
    const int n = g->order();
    REQUIRE(n <= 200);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          CHECK(g->mul(g->mul(static_cast<Elt>(a), static_cast<Elt>(b)), static_cast<Elt>(c)) ==
                g->mul(static_cast<Elt>(a), g->mul(static_cast<Elt>(b), static_cast<Elt>(c))));
  }
}

TEST_CASE("conjugacy classes") {
  auto g3 = gamma3(4, 6);
  Elt eps = g3->gen_eps(), g = g3->gen_a(), z = g3->gen_b();

  auto cg = g3->conjugacy_class(g);
  CHECK(cg.size() == 3);
  CHECK(std::find(cg.begin(), cg.end(), g3->mul(eps, g)) != cg.end());
  CHECK(std::find(cg.begin(), cg.end(), g3->mul(g3->mul(eps, eps), g)) != cg.end());

  auto cez = g3->conjugacy_class(g3->mul(eps, z));
  CHECK(cez.size() == 2);

  CHECK(g3->conjugacy_class(z) == std::vector<Elt>{z});

  // classes partition G and |class| * |centralizer| = |G|
  int total = 0;
  std::vector<bool> seen(g3->order(), false);
  for (int x = 0; x < g3->order(); ++x) {
    if (seen[x]) continue;
    auto cls = g3->conjugacy_class(static_cast<Elt>(x));
    for (Elt e : cls) {
      CHECK(!seen[e]);
      seen[e] = true;
    }
    total += static_cast<int>(cls.size());
    CHECK(cls.size() * g3->centralizer_elements(static_cast<Elt>(x)).size() ==
          static_cast<size_t>(g3->order()));
  }
  CHECK(total == g3->order());
}

TEST_CASE("centralizers match the expected generating sets") {
  auto g3 = gamma3(4, 6);
  Elt eps = g3->gen_eps(), g = g3->gen_a(), z = g3->gen_b();

  // centralizer of g is <g, z>
  auto cg = g3->centralizer_elements(g);
  auto span_gz = g3->subgroup_closure({g, z});
  std::sort(cg.begin(), cg.end());
  CHECK(cg == span_gz);

  // centralizer of eps z is <eps, z, g^2>
  auto cez = g3->centralizer_elements(g3->mul(eps, z));
  auto span2 = g3->subgroup_closure({eps, z, g3->mul(g, g)});
  std::sort(cez.begin(), cez.end());
  CHECK(cez == span2);

  // Gamma2: centralizer of g=a-image is <eps, g, h^2>
  auto g2 = Group::make({Family::Gamma2, {4, 4}});
  Elt nu = g2->gen_eps(), a = g2->gen_a(), b = g2->gen_b();
  auto ca = g2->centralizer_elements(a);
  auto span3 = g2->subgroup_closure({nu, a, g2->mul(b, b)});
  std::sort(ca.begin(), ca.end());
  CHECK(ca == span3);
}

TEST_CASE("center") {
  auto g3 = gamma3(4, 6);
  Elt eps = g3->gen_eps(), g = g3->gen_a(), z = g3->gen_b();
  auto zc = g3->center();
  CHECK(std::find(zc.begin(), zc.end(), z) != zc.end());
  CHECK(std::find(zc.begin(), zc.end(), g3->mul(g, g)) != zc.end());
  CHECK(std::find(zc.begin(), zc.end(), eps) == zc.end());

  CHECK_THROWS(Group::make({Family::Gamma3, {3, 2}})); // odd g-order forces an abelian image
  CHECK_THROWS(Group::make({Family::Gamma2, {3, 2}}));
}

TEST_CASE("quandle extraction and named types") {
  auto g3 = gamma3(2, 2);
  Elt eps = g3->gen_eps(), g = g3->gen_a(), z = g3->gen_b();

  auto q31 = g3->quandle_of_support({g, z});
  CHECK(q31.elements.size() == 4);
  CHECK(q31.type_name() == "Z3^{3,1}");
  CHECK(q31.self_distributive());

  auto q32 = g3->quandle_of_support({g, g3->mul(eps, z)});
  CHECK(q32.elements.size() == 5);
  CHECK(q32.type_name() == "Z3^{3,2}");
  CHECK(q32.self_distributive());

  auto qz = g3->quandle_of_class(z);
  CHECK(qz.elements.size() == 1);
  CHECK(qz.type_name() == "trivial(1)");

  // re-derive the reference tables from *different* quotients
  auto g3b = gamma3(6, 4);
  CHECK(g3b->quandle_of_support({g3b->gen_a(), g3b->gen_b()}).type_name() == "Z3^{3,1}");
  CHECK(g3b->quandle_of_support({g3b->gen_a(), g3b->mul(g3b->gen_eps(), g3b->gen_b())}).type_name() ==
        "Z3^{3,2}");

  auto g2 = Group::make({Family::Gamma2, {4, 2}});
  CHECK(g2->quandle_of_support({g2->gen_a(), g2->gen_b()}).type_name() == "Z2^{2,2}");

  auto g4 = Group::make({Family::Gamma4, {2, 8}});
  CHECK(g4->quandle_of_support({g4->gen_a(), g4->gen_b()}).type_name() == "Z4^{4,2}");

  auto t = Group::make({Family::T, {3}});
  CHECK(t->quandle_of_support({t->generators()[0], t->generators()[2]}).type_name() == "Z_T^{4,1}");

  for (auto q : {q31, q32}) {
    // y <| x is a bijection in y for each x
    for (const auto& row : q.table) {
      std::vector<int> sorted = row;
      std::sort(sorted.begin(), sorted.end());
      for (size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == static_cast<int>(i));
    }
  }
}

TEST_CASE("quandle self-distributivity for all extracted supports") {
  auto g3 = gamma3(4, 2);
  for (Elt x : {g3->gen_a(), g3->mul(g3->gen_eps(), g3->gen_b())})
    CHECK(g3->quandle_of_class(x).self_distributive());
  auto t = Group::make({Family::T, {2}});
  CHECK(t->quandle_of_support({t->generators()[0], t->generators()[2]}).self_distributive());
}

TEST_CASE("word decomposition multiplies back") {
  auto t = Group::make({Family::T, {4}});
  for (int i = 0; i < t->order(); i += 7) {
    Elt x = static_cast<Elt>(i);
    Elt acc = t->one();
    for (int gi : t->word_of(x)) acc = t->mul(acc, t->generators()[gi]);
    CHECK(acc == x);
  }
}

TEST_CASE("element tuple serialization round-trips") {
  auto g4 = Group::make({Family::Gamma4, {2, 4}});
  for (int i = 0; i < g4->order(); ++i)
    CHECK(g4->from_tuple(g4->tuple_of(static_cast<Elt>(i))) == static_cast<Elt>(i));
}
