#include "nichols/linalg.hpp"

#include <algorithm>
#include <map>

namespace nichols {

Matrix Matrix::identity(const Field* f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::kronecker(const Matrix& o) const {
  Matrix r(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& x = at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l) {
          const Scalar& y = o.at(k, l);
          if (!y.is_zero()) r.at(i * o.rows_ + k, j * o.cols_ + l) = x * y;
        }
    }
  return r;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

void SparseVec::add(uint32_t i, const Scalar& c) {
  if (c.is_zero()) return;
  t.emplace_back(i, c);
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec r;
  if (c.is_zero()) return r;
  r.t.reserve(t.size());
  for (const auto& [i, x] : t) r.t.emplace_back(i, x * c);
  return r;
}

void SparseVec::accumulate(const SparseVec& o, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : o.t) t.emplace_back(i, x * c);
}

void SparseVec::normalize() {
  if (t.empty()) return;
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<uint32_t, Scalar>> out;
  out.reserve(t.size());
  for (auto& [i, x] : t) {
    if (!out.empty() && out.back().first == i)
      out.back().second += x;
    else
      out.emplace_back(i, x);
  }
  t.clear();
  for (auto& [i, x] : out)
    if (!x.is_zero()) t.emplace_back(i, std::move(x));
}

namespace {

// leading (smallest-index) entry; vector must be normalized
std::pair<uint32_t, Scalar> lead(const SparseVec& v) { return v.t.front(); }

SparseVec axpy(const SparseVec& a, const SparseVec& b, const Scalar& c) {
  SparseVec r = a;
  r.accumulate(b, c);
  r.normalize();
  return r;
}

// strip common rational content from the coefficients (characteristic 0)
void strip_content(SparseVec& v, const Field* f) {
  if (f->characteristic() != 0 || v.t.empty()) return;
  BigInt g = 0, l = 1;
  for (const auto& [i, x] : v.t)
    for (const auto& c : x.coeffs()) {
      if (c == 0) continue;
      BigInt n = numerator(c) < 0 ? BigInt(-numerator(c)) : numerator(c);
      g = g == 0 ? n : gcd(g, n);
      l = lcm(l, denominator(c));
    }
  if (g == 0) return;
  Rational s(l, g);
  if (s == 1) return;
  Scalar sc = f->from_rational(s);
  for (auto& [i, x] : v.t) x = x * sc;
}

} // namespace

bool EchelonBasis::insert(SparseVec v) {
  v.normalize();
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (v.empty()) break;
    auto [li, lc] = lead(v);
    if (li == pivots_[k]) v = axpy(v, rows_[k], -lc);
  }
  if (v.empty()) return false;
  // normalize pivot to 1 and keep rows sorted by pivot for determinism
  Scalar inv = lead(v).second.inverse();
  v = v.scaled(inv);
  uint32_t piv = lead(v).first;
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  // back-substitute so stored rows stay fully reduced
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (k == pos) continue;
    for (const auto& [i, c] : rows_[k].t)
      if (i == piv) {
        rows_[k] = axpy(rows_[k], rows_[pos], -c);
        break;
      }
  }
  return true;
}

bool EchelonBasis::coordinates(SparseVec v, std::vector<Scalar>& coords) const {
  coords.assign(rows_.size(), field_->zero());
  v.normalize();
  for (size_t k = 0; k < rows_.size(); ++k) {
    if (v.empty()) break;
    auto [li, lc] = lead(v);
    if (li == pivots_[k]) {
      coords[k] = lc;
      v = axpy(v, rows_[k], -lc);
    }
  }
  return v.empty();
}

int rank_of(std::vector<SparseVec> rows, const Field* f) {
  for (auto& r : rows) {
    r.normalize();
    strip_content(r, f);
  }
  int rank = 0;
  // first-nonzero pivoting: take the first surviving row, eliminate its
  // leading column from every other row with fraction-free updates
  std::vector<bool> used(rows.size(), false);
  for (size_t pick = 0; pick < rows.size(); ++pick) {
    if (rows[pick].empty()) continue;
    ++rank;
    used[pick] = true;
    const uint32_t col = rows[pick].t.front().first;
    const Scalar p = rows[pick].t.front().second;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty()) continue;
      Scalar c = f->zero();
      for (const auto& [j, x] : rows[i].t)
        if (j == col) {
          c = x;
          break;
        }
      if (c.is_zero()) continue;
      // row_i <- p*row_i - c*row_pick
      SparseVec upd = rows[i].scaled(p);
      upd.accumulate(rows[pick], -c);
      upd.normalize();
      strip_content(upd, f);
      rows[i] = std::move(upd);
    }
  }
  return rank;
}

int rank_of(const Matrix& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    SparseVec v;
    for (int j = 0; j < m.cols(); ++j) v.add(static_cast<uint32_t>(j), m.at(i, j));
    rows.push_back(std::move(v));
  }
  return rank_of(std::move(rows), m.field());
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  const Field* f = m.field();
  // reduced row echelon form, dense
  Matrix a = m;
  int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!a.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(a.at(pr, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (int j = 0; j < cols; ++j) a.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar x = a.at(i, c);
      if (x.is_zero()) continue;
      for (int j = 0; j < cols; ++j) a.at(i, j) -= x * a.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(cols, f->zero());
    v[c] = f->one();
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace nichols
