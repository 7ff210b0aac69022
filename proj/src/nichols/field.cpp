#include "nichols/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace nichols {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Phi_n for the supported orders, coefficient i of x^i.
std::vector<Rational> cyclotomic(unsigned n) {
  switch (n) {
    case 1: return {-1, 1};
    case 2: return {1, 1};
    case 3: return {1, 1, 1};
    case 4: return {1, 0, 1};
    case 6: return {1, -1, 1};
    case 12: return {1, 0, -1, 0, 1};
    default:
      throw std::invalid_argument("cyclotomic order must be one of 1,2,3,4,6,12");
  }
}

Rational mod_p(const Rational& r, unsigned p) {
  // r has denominator coprime to p for everything we construct.
  BigInt num = numerator(r), den = denominator(r);
  BigInt bp = p;
  BigInt n = num % bp;
  if (n < 0) n += bp;
  BigInt d = den % bp;
  if (d < 0) d += bp;
  if (d == 0) throw std::domain_error("denominator divisible by characteristic");
  // invert d mod p by scanning (p <= 7)
  BigInt dinv = 0;
  for (BigInt x = 1; x < bp; ++x)
    if ((d * x) % bp == 1) { dinv = x; break; }
  return Rational((n * dinv) % bp);
}

// Polynomial arithmetic over Q or F_p with coefficient reducer.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  auto red = [&](const Rational& r) { return p ? mod_p(r, p) : r; };
  trim(a);
  while (a.size() >= m.size()) {
    Rational lead = red(a.back() / m.back());
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = red(a[shift + i] - lead * m[i]);
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  if (p)
    for (auto& c : r) c = mod_p(c, p);
  trim(r);
  return r;
}

// In char p, the lexicographically smallest monic degree-d factor of Phi_n.
// Candidates are enumerated by the base-p digits of (a_{d-1},...,a_0).
Poly smallest_factor(const Poly& phi, unsigned p) {
  unsigned d = 1;
  for (;; ++d) {
    unsigned long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long code = 0; code < count; ++code) {
      Poly cand(d + 1, Rational(0));
      cand[d] = 1;
      unsigned long c = code;
      for (unsigned i = 0; i < d; ++i) {
        cand[d - 1 - i] = Rational(c % p);
        c /= p;
      }
      if (poly_mod(phi, cand, p).empty()) return cand;
    }
  }
}

} // namespace

Scalar::Scalar(const Field* f, std::vector<Rational> coeffs) : field_(f), c_(std::move(coeffs)) {}

bool Scalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Scalar::is_one() const { return *this == field_->one(); }

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return c_ == o.c_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  std::vector<Rational> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_->reduce_coeff(r[i] + o.c_[i]);
  return Scalar(field_, std::move(r));
}

Scalar Scalar::operator-(const Scalar& o) const {
  std::vector<Rational> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_->reduce_coeff(r[i] - o.c_[i]);
  return Scalar(field_, std::move(r));
}

Scalar Scalar::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x = field_->reduce_coeff(-x);
  return Scalar(field_, std::move(r));
}

Scalar Scalar::operator*(const Scalar& o) const {
  unsigned p = field_->characteristic();
  Poly prod = poly_mul(c_, o.c_, p);
  prod = poly_mod(std::move(prod), field_->minimal_polynomial(), p);
  prod.resize(field_->degree(), Rational(0));
  return Scalar(field_, std::move(prod));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  unsigned p = field_->characteristic();
  // extended Euclid in K[x]: r0 = minpoly, r1 = this
  Poly r0 = field_->minimal_polynomial(), r1 = c_;
  trim(r1);
  Poly s0 = {}, s1 = {Rational(1)};
  auto red = [&](const Rational& r) { return p ? mod_p(r, p) : r; };
  while (r1.size() > 1) {
    // divide r0 by r1
    Poly q;
    Poly rem = r0;
    trim(rem);
    if (rem.size() >= r1.size()) {
      q.assign(rem.size() - r1.size() + 1, Rational(0));
      while (rem.size() >= r1.size()) {
        Rational lead = red(rem.back() / r1.back());
        size_t shift = rem.size() - r1.size();
        q[shift] = lead;
        for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] = red(rem[shift + i] - lead * r1[i]);
        trim(rem);
      }
    }
    Poly qs1 = poly_mul(q, s1, p);
    Poly s2 = s0;
    s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
    for (size_t i = 0; i < qs1.size(); ++i) s2[i] = red(s2[i] - qs1[i]);
    trim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  if (r1.empty()) throw std::domain_error("element not invertible");
  Rational u = red(Rational(1) / r1[0]);
  Poly inv = s1;
  for (auto& x : inv) x = red(x * u);
  inv = poly_mod(std::move(inv), field_->minimal_polynomial(), p);
  inv.resize(field_->degree(), Rational(0));
  return Scalar(field_, std::move(inv));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc = field_->one(), base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

int Scalar::multiplicative_order() const {
  if (is_zero()) return 0;
  Scalar x = *this;
  for (int k = 1; k <= 48; ++k) {
    if (x.is_one()) return k;
    x = x * *this;
  }
  return 0;
}

std::string Scalar::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << " + ";
    os << c_[i];
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  return os.str();
}

const Field& Field::get(const FieldDescriptor& d) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(d.characteristic, d.cyclotomic_order);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<Field>(new Field(d))).first;
  return *it->second;
}

Field::Field(const FieldDescriptor& d) : desc_(d) {
  unsigned p = d.characteristic;
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("characteristic must be 0 or prime");
  Poly phi = cyclotomic(d.cyclotomic_order);
  if (p != 0) {
    if (d.cyclotomic_order % p == 0)
      throw std::invalid_argument("characteristic divides cyclotomic order");
    for (auto& c : phi) c = mod_p(c, p);
    minpoly_ = smallest_factor(phi, p);
  } else {
    minpoly_ = phi;
  }
  degree_ = static_cast<unsigned>(minpoly_.size() - 1);
}

Rational Field::reduce_coeff(const Rational& r) const {
  return desc_.characteristic ? mod_p(r, desc_.characteristic) : r;
}

Scalar Field::zero() const { return Scalar(this, std::vector<Rational>(degree_, Rational(0))); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long n) const { return from_rational(Rational(n)); }

Scalar Field::from_rational(const Rational& r) const {
  std::vector<Rational> c(degree_, Rational(0));
  c[0] = reduce_coeff(r);
  return Scalar(this, std::move(c));
}

Scalar Field::from_coeffs(std::vector<Rational> c) const {
  c.resize(degree_, Rational(0));
  for (auto& x : c) x = reduce_coeff(x);
  return Scalar(this, std::move(c));
}

Scalar Field::zeta() const {
  if (degree_ == 1) {
    // zeta is the root of the linear minimal polynomial
    return from_rational(reduce_coeff(-minpoly_[0]));
  }
  std::vector<Rational> c(degree_, Rational(0));
  c[1] = 1;
  return Scalar(this, std::move(c));
}

std::vector<Scalar> Field::roots_of_unity(unsigned n) const {
  std::vector<Scalar> torsion;
  if (desc_.characteristic == 0) {
    // torsion units: mu_{2n} = <-zeta> for odd n, mu_n = <zeta> for even n
    Scalar gen = desc_.cyclotomic_order % 2 == 1 ? -zeta() : zeta();
    Scalar x = one();
    for (int i = 0; i < 2 * 12 + 2; ++i) {
      if (std::find(torsion.begin(), torsion.end(), x) != torsion.end()) break;
      torsion.push_back(x);
      x = x * gen;
    }
  } else {
    // finite field: enumerate every element, coefficient-lex order
    unsigned p = desc_.characteristic;
    unsigned long q = 1;
    for (unsigned i = 0; i < degree_; ++i) q *= p;
    for (unsigned long code = 0; code < q; ++code) {
      std::vector<Rational> c(degree_);
      unsigned long t = code;
      for (unsigned i = 0; i < degree_; ++i) {
        c[i] = Rational(t % p);
        t /= p;
      }
      torsion.push_back(Scalar(this, std::move(c)));
    }
  }
  std::vector<Scalar> out;
  for (const auto& x : torsion) {
    if (x.is_zero()) continue;
    if (x.pow(n).is_one() && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

Scalar Field::parse(const std::string& s) const {
  std::vector<Rational> c(degree_, Rational(0));
  std::istringstream is(s);
  std::string term;
  // split on '+' that separates terms (coefficients may carry a leading '-')
  std::vector<std::string> terms;
  {
    std::string cur;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '+' && i > 0 && s[i - 1] == ' ') {
        terms.push_back(cur);
        cur.clear();
      } else {
        cur += s[i];
      }
    }
    terms.push_back(cur);
  }
  for (auto& t : terms) {
    // strip spaces
    std::string u;
    for (char ch : t)
      if (ch != ' ') u += ch;
    if (u.empty()) continue;
    size_t star = u.find('*');
    std::string coeff = star == std::string::npos ? u : u.substr(0, star);
    size_t power = 0;
    if (star != std::string::npos) {
      std::string zpart = u.substr(star + 1);
      if (zpart == "z")
        power = 1;
      else if (zpart.rfind("z^", 0) == 0)
        power = std::stoul(zpart.substr(2));
      else
        throw std::invalid_argument("bad scalar term: " + t);
    }
    if (power >= degree_) throw std::invalid_argument("scalar term degree too large: " + t);
    Rational r(coeff);
    c[power] += r;
  }
  return from_coeffs(std::move(c));
}

Scalar quantum_integer(unsigned n, const Scalar& q) {
  if (n < 1) throw std::invalid_argument("quantum integer needs n >= 1");
  const Field* f = q.field();
  Scalar acc = f->zero(), x = f->one();
  for (unsigned k = 0; k < n; ++k) {
    acc += x;
    x = x * q;
  }
  return acc;
}

Scalar quantum_factorial(unsigned n, const Scalar& q) {
  if (n < 1) throw std::invalid_argument("quantum factorial needs n >= 1");
  const Field* f = q.field();
  Scalar acc = f->one();
  for (unsigned k = 1; k <= n; ++k) acc *= quantum_integer(k, q);
  return acc;
}

} // namespace nichols
