#include "nichols/weyl.hpp"

#include <stdexcept>

namespace nichols {

namespace {

bool same_object(const SchemeObject& a, const PairState& q, const PairState::Analysis& qa) {
  if (!(a.analysis.cartan.has_value() && qa.cartan.has_value())) return false;
  if (!(*a.analysis.cartan == *qa.cartan)) return false;
  if (a.analysis.cls != PairClass::Unclassified && qa.cls != PairClass::Unclassified)
    return a.analysis.cls == qa.cls;
  return pair_isomorphic(a.pair, q);
}

} // namespace

CartanScheme2 generate_scheme(const PairState& p, const Caps& caps) {
  CartanScheme2 s;
  if (braiding_square_is_identity(p)) {
    s.failure = "braiding square is identity";
    return s;
  }
  SchemeObject base;
  base.pair = p;
  base.analysis = analyze_pair(p, caps);
  if (!base.analysis.cartan.has_value()) {
    s.failure = "Cartan matrix of the base pair is not defined";
    return s;
  }
  s.objects.push_back(std::move(base));

  for (size_t oi = 0; oi < s.objects.size(); ++oi) {
    for (int i = 1; i <= 2; ++i) {
      if (s.objects[oi].next[i - 1] >= 0) continue;
      PairState q;
      try {
        q = reflect(i, s.objects[oi].pair, caps);
      } catch (const std::exception& e) {
        s.failure = e.what();
        return s;
      }
      PairState::Analysis qa = analyze_pair(q, caps);
      if (!qa.cartan.has_value()) {
        s.failure = qa.vw_outcome == ChainOutcome::NotSemisimple ||
                            qa.wv_outcome == ChainOutcome::NotSemisimple
                        ? "reflection undefined at R" + std::to_string(i) + " image"
                        : "Cartan entry unbounded at cap after reflection";
        return s;
      }
      int found = -1;
      for (size_t k = 0; k < s.objects.size(); ++k)
        if (same_object(s.objects[k], q, qa)) {
          found = static_cast<int>(k);
          break;
        }
      if (found < 0) {
        if (static_cast<int>(s.objects.size()) >= caps.objects) {
          s.failure = "not finite within object cap";
          return s;
        }
        SchemeObject o;
        o.pair = std::move(q);
        o.analysis = std::move(qa);
        s.objects.push_back(std::move(o));
        found = static_cast<int>(s.objects.size()) - 1;
      }
      s.objects[oi].next[i - 1] = found;
    }
  }
  s.finite = true;
  return s;
}

bool CartanScheme2::axioms_hold(std::string* why) const {
  if (!finite) {
    if (why) *why = "scheme not finite: " + failure;
    return false;
  }
  for (size_t x = 0; x < objects.size(); ++x)
    for (int i = 0; i < 2; ++i) {
      int y = objects[x].next[i];
      if (y < 0 || objects[y].next[i] != static_cast<int>(x)) {
        if (why) *why = "r_i is not an involution on objects";
        return false;
      }
      const CartanMatrix& ax = *objects[x].analysis.cartan;
      const CartanMatrix& ay = *objects[y].analysis.cartan;
      // row i of A^{r_i(X)} equals row i of A^X (diagonal is constant 2)
      int rowx = i == 0 ? ax.a12 : ax.a21;
      int rowy = i == 0 ? ay.a12 : ay.a21;
      if (rowx != rowy) {
        if (why) *why = "Cartan scheme row condition fails";
        return false;
      }
    }
  return true;
}

bool CartanScheme2::standard() const {
  for (const auto& o : objects)
    if (!(*o.analysis.cartan == *objects[base].analysis.cartan)) return false;
  return true;
}

std::vector<RootExpr> positive_roots(const CartanScheme2& s, int obj, int first, int cap) {
  if (!s.finite) throw std::runtime_error("root system requested on a non-finite scheme");
  std::vector<RootExpr> out;
  out.push_back({{first == 1 ? 1 : 0, first == 1 ? 0 : 1}, {}, first});

  std::vector<int> word;
  for (int step = 1; step <= cap; ++step) {
    word.push_back(step % 2 == 1 ? first : 3 - first);
    int j = 3 - word.back();
    // object path along the word
    std::vector<int> path{obj};
    for (int w : word) path.push_back(s.objects[path.back()].next[w - 1]);
    // evaluate s_{w[0]} ... s_{w[m-1]} (alpha_j) right-to-left
    std::array<long, 2> v{j == 1 ? 1 : 0, j == 1 ? 0 : 1};
    for (int t = static_cast<int>(word.size()); t >= 1; --t) {
      int i = word[t - 1];
      const CartanMatrix& a = *s.objects[path[t]].analysis.cartan;
      long row1 = i == 1 ? 2 : a.a21;
      long row2 = i == 1 ? a.a12 : 2;
      long coef = row1 * v[0] + row2 * v[1];
      v[i - 1] -= coef;
    }
    if (v[0] < 0 || v[1] < 0) throw std::runtime_error("negative root in enumeration");
    RootExpr r{{static_cast<int>(v[0]), static_cast<int>(v[1])}, word, j};
    out.push_back(r);
    if ((v[0] == 1 && v[1] == 0) || (v[0] == 0 && v[1] == 1)) return out;
  }
  throw std::runtime_error("infinite root system (alternation cap reached)");
}

} // namespace nichols
