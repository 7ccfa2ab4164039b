#include "spinor/linalg.hpp"

#include <algorithm>
#include <ostream>

#include "spinor/errors.hpp"

namespace spinor {

namespace {

// Row reduction in place; returns pivot columns (restricted to the first `ncols` columns).
std::vector<std::size_t> row_reduce(DenseMatrix& A, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < A.rows(); ++c) {
    std::size_t p = r;
    while (p < A.rows() && A.at(p, c).is_zero()) ++p;
    if (p == A.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(p, j), A.at(r, j));
    Rational inv = Rational(1) / A.at(r, c);
    for (std::size_t j = c; j < A.cols(); ++j) A.at(r, j) *= inv;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == r || A.at(i, c).is_zero()) continue;
      Rational f = A.at(i, c);
      for (std::size_t j = c; j < A.cols(); ++j)
        if (!A.at(r, j).is_zero()) A.at(i, j) -= f * A.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_unique(DenseMatrix A, std::vector<Rational> b) {
  if (b.size() != A.rows()) throw InputError("solve_unique: size mismatch");
  DenseMatrix M(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.cols()) = b[i];
  }
  auto piv = row_reduce(M, A.cols() + 1);
  if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;  // inconsistent
  if (piv.size() != A.cols()) return std::nullopt;                   // not unique
  std::vector<Rational> x(A.cols(), Rational(0));
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = M.at(k, A.cols());
  return x;
}

std::size_t rank(DenseMatrix A) { return row_reduce(A, A.cols()).size(); }

std::vector<std::size_t> pivot_columns(DenseMatrix A) { return row_reduce(A, A.cols()); }

Rational determinant(DenseMatrix A) {
  if (A.rows() != A.cols()) throw InputError("determinant of non-square matrix");
  std::size_t n = A.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A.at(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A.at(p, j), A.at(c, j));
      det = -det;
    }
    det *= A.at(c, c);
    Rational inv = Rational(1) / A.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (A.at(i, c).is_zero()) continue;
      Rational f = A.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) A.at(i, j) -= f * A.at(c, j);
    }
  }
  return det;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::diagonal(const std::vector<Rational>& d) {
  SparseMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) m.data_[i].emplace_back(i, d[i]);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d.at(i, j).is_zero()) m.data_[i].emplace_back(j, d.at(i, j));
  return m;
}

SparseMatrix SparseMatrix::kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < b.rows_; ++k) {
      SparseVec& out = m.data_[i * b.rows_ + k];
      for (auto& [j, x] : a.data_[i])
        for (auto& [l, y] : b.data_[k]) out.emplace_back(j * b.cols_ + l, x * y);
    }
  return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<std::tuple<std::size_t, std::size_t, Rational>> t) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b) : std::get<1>(a) < std::get<1>(b);
  });
  SparseMatrix m(rows, cols);
  for (std::size_t k = 0; k < t.size();) {
    auto [i, j, q] = t[k];
    if (i >= rows || j >= cols) throw InputError("triplet index out of range");
    for (++k; k < t.size() && std::get<0>(t[k]) == i && std::get<1>(t[k]) == j; ++k) q += std::get<2>(t[k]);
    if (!q.is_zero()) m.data_[i].emplace_back(j, q);
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (auto& r : data_) n += r.size();
  return n;
}

Rational SparseMatrix::get(std::size_t i, std::size_t j) const {
  const SparseVec& r = data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == j) ? it->second : Rational(0);
}

void SparseMatrix::set(std::size_t i, std::size_t j, const Rational& q) {
  if (i >= rows_ || j >= cols_) throw InputError("matrix index out of range");
  SparseVec& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    if (q.is_zero()) r.erase(it);
    else it->second = q;
  } else if (!q.is_zero()) {
    r.emplace(it, j, q);
  }
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rational& q) {
  if (q.is_zero()) return;
  set(i, j, get(i, j) + q);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, q] : data_[i]) t.data_[j].emplace_back(i, q);
  return t;
}

DenseMatrix SparseMatrix::to_dense() const {
  DenseMatrix d(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, q] : data_[i]) d.at(i, j) = q;
  return d;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw InputError("apply: size mismatch");
  std::vector<Rational> y(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, q] : data_[i])
      if (!x[j].is_zero()) y[i] += q * x[j];
  return y;
}

bool SparseMatrix::is_zero() const {
  for (auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

bool SparseMatrix::is_scalar(Rational* q) const {
  if (rows_ != cols_) return false;
  if (rows_ == 0) return true;
  Rational d = data_[0].empty() ? Rational(0) : data_[0][0].second;
  for (std::size_t i = 0; i < rows_; ++i) {
    const SparseVec& r = data_[i];
    if (d.is_zero()) {
      if (!r.empty()) return false;
    } else if (r.size() != 1 || r[0].first != i || !(r[0].second == d)) {
      return false;
    }
  }
  if (q) *q = d;
  return true;
}

bool SparseMatrix::is_identity() const {
  Rational q;
  return is_scalar(&q) && q.is_one();
}

bool SparseMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, q] : data_[i])
      if (j != i) return false;
  return true;
}

SparseMatrix SparseMatrix::operator-() const {
  SparseMatrix m = *this;
  for (auto& r : m.data_)
    for (auto& e : r) e.second = -e.second;
  return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: size mismatch");
  SparseMatrix m(a.rows_, b.cols_);
  std::vector<Rational> acc(b.cols_, Rational(0));
  std::vector<char> mark(b.cols_, 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    touched.clear();
    for (auto& [k, x] : a.data_[i])
      for (auto& [j, y] : b.data_[k]) {
        if (!mark[j]) {
          mark[j] = 1;
          touched.push_back(j);
          acc[j] = x * y;
        } else {
          acc[j] += x * y;
        }
      }
    std::sort(touched.begin(), touched.end());
    SparseVec& out = m.data_[i];
    for (std::size_t j : touched) {
      if (!acc[j].is_zero()) out.emplace_back(j, acc[j]);
      mark[j] = 0;
    }
  }
  return m;
}

SparseVec sparse_axpy(const SparseVec& x, const Rational& a, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, a * y[j].second);
      ++j;
    } else {
      Rational v = x[i].second + a * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum: size mismatch");
  SparseMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) m.data_[i] = sparse_axpy(a.data_[i], 1, b.data_[i]);
  return m;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference: size mismatch");
  SparseMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) m.data_[i] = sparse_axpy(a.data_[i], -1, b.data_[i]);
  return m;
}

SparseMatrix operator*(const Rational& q, const SparseMatrix& a) {
  if (q.is_zero()) return SparseMatrix(a.rows_, a.cols_);
  SparseMatrix m = a;
  for (auto& r : m.data_)
    for (auto& e : r) e.second *= q;
  return m;
}

std::ostream& operator<<(std::ostream& os, const SparseMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.get(i, j);
    os << "]\n";
  }
  return os;
}

SparseEliminator::SparseEliminator(std::size_t nvars)
    : nvars_(nvars), rows_(nvars), is_pivot_(nvars, 0), weight_(nvars, 1) {}

const SparseVec& SparseEliminator::resolved(std::size_t p) {
  SparseVec& row = rows_[p];
  bool stale = false;
  for (auto& [q, c] : row)
    if (is_pivot_[q]) {
      stale = true;
      break;
    }
  if (!stale) return row;
  SparseVec out;
  SparseVec pending;
  for (auto& e : row) {
    if (is_pivot_[e.first]) pending.push_back(e);
    else out.push_back(e);
  }
  for (auto& [q, c] : pending) out = sparse_axpy(out, c, resolved(q));
  row = std::move(out);
  return row;
}

SparseVec SparseEliminator::reduce(SparseVec eq) {
  SparseVec out;
  SparseVec pending;
  for (auto& e : eq) {
    if (is_pivot_[e.first]) pending.push_back(e);
    else out.push_back(e);
  }
  for (auto& [q, c] : pending) out = sparse_axpy(out, c, resolved(q));
  return out;
}

bool SparseEliminator::add(SparseVec eq) {
  for (auto& e : eq)
    if (e.first >= nvars_) throw InputError("equation references unknown variable");
  SparseVec r = reduce(std::move(eq));
  if (r.empty()) return false;
  // pivot on the lightest variable so substitution chains stay shallow
  std::size_t best = 0;
  for (std::size_t k = 1; k < r.size(); ++k)
    if (weight_[r[k].first] < weight_[r[best].first]) best = k;
  std::size_t p = r[best].first;
  Rational scale = -(Rational(1) / r[best].second);
  SparseVec def;
  def.reserve(r.size() - 1);
  for (std::size_t k = 0; k < r.size(); ++k)
    if (k != best) def.emplace_back(r[k].first, r[k].second * scale);
  for (auto& [q, c] : def) weight_[q] += weight_[p];
  rows_[p] = std::move(def);
  is_pivot_[p] = 1;
  ++rank_;
  return true;
}

std::vector<std::size_t> SparseEliminator::free_variables() const {
  std::vector<std::size_t> f;
  for (std::size_t v = 0; v < nvars_; ++v)
    if (!is_pivot_[v]) f.push_back(v);
  return f;
}

std::vector<SparseVec> SparseEliminator::nullspace() {
  std::vector<std::size_t> free = free_variables();
  std::vector<std::size_t> slot(nvars_, 0);
  for (std::size_t k = 0; k < free.size(); ++k) slot[free[k]] = k;
  std::vector<SparseVec> basis(free.size());
  for (std::size_t k = 0; k < free.size(); ++k) basis[k].emplace_back(free[k], Rational(1));
  for (std::size_t p = 0; p < nvars_; ++p) {
    if (!is_pivot_[p]) continue;
    for (auto& [q, c] : resolved(p)) basis[slot[q]].emplace_back(p, c);
  }
  for (auto& b : basis) std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return basis;
}

std::vector<SparseVec> nullspace(std::size_t nvars, const std::vector<SparseVec>& equations) {
  SparseEliminator e(nvars);
  for (auto& eq : equations) e.add(eq);
  return e.nullspace();
}

std::size_t rank(const SparseMatrix& m) {
  SparseEliminator e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add(m.row(i));
  return e.rank();
}

}  // namespace spinor
