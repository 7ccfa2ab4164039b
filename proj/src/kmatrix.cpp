#include "spinor/kmatrix.hpp"

#include <algorithm>

#include "spinor/errors.hpp"

namespace spinor {

KMatrix::KMatrix(Algebra field, std::size_t rows, std::size_t cols, Side side)
    : field_(field), rows_(rows), cols_(cols), side_(side), data_(rows) {
  if (field == Algebra::O) throw InputError("KMatrix: octonion entries are not supported");
}

KMatrix KMatrix::identity(Algebra field, std::size_t n, Side side) {
  return scalar(KElement::one(field), n, side);
}

KMatrix KMatrix::scalar(const KElement& x, std::size_t n, Side side) {
  KMatrix m(x.algebra, n, n, side);
  if (!x.is_zero())
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, x);
  return m;
}

KMatrix KMatrix::from_real(const SparseMatrix& r, Algebra field, Side side) {
  KMatrix m(field, r.rows(), r.cols(), side);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (auto& [j, q] : r.row(i)) m.data_[i].emplace_back(j, KElement::scalar(field, q));
  return m;
}

KMatrix KMatrix::diagonal_signs(Algebra field, const std::vector<int>& signs, Side side) {
  KMatrix m(field, signs.size(), signs.size(), side);
  for (std::size_t i = 0; i < signs.size(); ++i) m.data_[i].emplace_back(i, KElement::scalar(field, signs[i]));
  return m;
}

KMatrix KMatrix::kron(const KMatrix& a, const KMatrix& b) {
  Algebra f;
  Side side;
  if (a.field_ == Algebra::R) {
    f = b.field_;
    side = b.side_;
  } else if (b.field_ == Algebra::R) {
    f = a.field_;
    side = a.side_;
  } else if (a.field_ == Algebra::C && b.field_ == Algebra::C) {
    f = Algebra::C;
    side = a.side_;
  } else {
    throw InputError("kron: needs a real factor or two complex factors");
  }
  auto lift = [f](const KElement& x) {
    if (x.algebra == f) return x;
    return KElement::scalar(f, x.re());
  };
  KMatrix m(f, a.rows_ * b.rows_, a.cols_ * b.cols_, side);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < b.rows_; ++k) {
      Row& out = m.data_[i * b.rows_ + k];
      for (auto& [j, x] : a.data_[i])
        for (auto& [l, y] : b.data_[k]) {
          KElement p = mul(f, lift(x), lift(y));
          if (!p.is_zero()) out.emplace_back(j * b.cols_ + l, p);
        }
    }
  return m;
}

KElement KMatrix::at(std::size_t i, std::size_t j) const {
  const Row& r = data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == j) ? it->second : KElement::zero(field_);
}

void KMatrix::set(std::size_t i, std::size_t j, const KElement& x) {
  if (x.algebra != field_) throw InputError("KMatrix::set: field mismatch");
  if (i >= rows_ || j >= cols_) throw InputError("KMatrix::set: index out of range");
  Row& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    if (x.is_zero()) r.erase(it);
    else it->second = x;
  } else if (!x.is_zero()) {
    r.emplace(it, j, x);
  }
}

KMatrix KMatrix::with_side(Side s) const {
  KMatrix m = *this;
  m.side_ = s;
  return m;
}

KMatrix KMatrix::conj_transpose() const {
  KMatrix t(field_, cols_, rows_, side_ == Side::RightModuleMap ? Side::LeftModuleMap : Side::RightModuleMap);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, x] : data_[i]) t.data_[j].emplace_back(i, conj(x));
  return t;
}

bool KMatrix::is_real() const {
  for (auto& r : data_)
    for (auto& e : r)
      if (!e.second.is_real()) return false;
  return true;
}

SparseMatrix KMatrix::real_part_matrix() const {
  SparseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    SparseVec r;
    for (auto& [j, x] : data_[i])
      if (!x.re().is_zero()) r.emplace_back(j, x.re());
    m.set_row(i, std::move(r));
  }
  return m;
}

SparseMatrix KMatrix::realify() const {
  const std::size_t d = algebra_dim(field_);
  SparseMatrix out(rows_ * d, cols_ * d);
  if (side_ == Side::RightModuleMap) {
    std::vector<SparseVec> acc(rows_ * d);
    for (std::size_t i = 0; i < rows_; ++i)
      for (auto& [j, x] : data_[i]) {
        auto blk = left_mult_matrix(x);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            if (!blk[a * d + b].is_zero()) acc[i * d + a].emplace_back(j * d + b, blk[a * d + b]);
      }
    for (std::size_t r = 0; r < acc.size(); ++r) out.set_row(r, std::move(acc[r]));
  } else {
    // (yA)_j = sum_i y_i A_ij: block (j, i) is right multiplication by A_ij
    std::vector<SparseVec> acc(cols_ * d);
    for (std::size_t i = 0; i < rows_; ++i)
      for (auto& [j, x] : data_[i]) {
        auto blk = right_mult_matrix(x);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            if (!blk[a * d + b].is_zero()) acc[j * d + a].emplace_back(i * d + b, blk[a * d + b]);
      }
    SparseMatrix t(cols_ * d, rows_ * d);
    for (std::size_t r = 0; r < acc.size(); ++r) {
      std::sort(acc[r].begin(), acc[r].end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      t.set_row(r, std::move(acc[r]));
    }
    return t;
  }
  return out;
}

KMatrix KMatrix::operator-() const {
  KMatrix m = *this;
  for (auto& r : m.data_)
    for (auto& e : r) e.second = -e.second;
  return m;
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  if (a.field_ != b.field_ || a.side_ != b.side_) throw InputError("KMatrix product: field/side mismatch");
  if (a.cols_ != b.rows_) throw InputError("KMatrix product: size mismatch");
  KMatrix m(a.field_, a.rows_, b.cols_, a.side_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::vector<std::pair<std::size_t, KElement>> acc;
    for (auto& [k, x] : a.data_[i])
      for (auto& [j, y] : b.data_[k]) acc.emplace_back(j, mul(a.field_, x, y));
    std::sort(acc.begin(), acc.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    KMatrix::Row& out = m.data_[i];
    for (std::size_t t = 0; t < acc.size();) {
      std::size_t j = acc[t].first;
      KElement s = acc[t].second;
      for (++t; t < acc.size() && acc[t].first == j; ++t) s += acc[t].second;
      if (!s.is_zero()) out.emplace_back(j, s);
    }
  }
  return m;
}

static KMatrix combine(const KMatrix& a, const KMatrix& b, int sgn) {
  if (a.field() != b.field() || a.side() != b.side() || a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("KMatrix sum: shape mismatch");
  KMatrix m(a.field(), a.rows(), a.cols(), a.side());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto& ra = a.row(i);
    const auto& rb = b.row(i);
    std::size_t p = 0, q = 0;
    while (p < ra.size() || q < rb.size()) {
      if (q == rb.size() || (p < ra.size() && ra[p].first < rb[q].first)) {
        m.set(i, ra[p].first, ra[p].second);
        ++p;
      } else if (p == ra.size() || rb[q].first < ra[p].first) {
        m.set(i, rb[q].first, sgn > 0 ? rb[q].second : -rb[q].second);
        ++q;
      } else {
        m.set(i, ra[p].first, sgn > 0 ? ra[p].second + rb[q].second : ra[p].second - rb[q].second);
        ++p;
        ++q;
      }
    }
  }
  return m;
}

KMatrix operator+(const KMatrix& a, const KMatrix& b) { return combine(a, b, 1); }
KMatrix operator-(const KMatrix& a, const KMatrix& b) { return combine(a, b, -1); }

KMatrix operator*(const Rational& q, const KMatrix& a) {
  KMatrix m(a.field_, a.rows_, a.cols_, a.side_);
  if (q.is_zero()) return m;
  m.data_ = a.data_;
  for (auto& r : m.data_)
    for (auto& e : r) e.second *= q;
  return m;
}

KMatrix restrict_to_complex(const KMatrix& m) {
  if (m.field() != Algebra::H || m.side() != Side::RightModuleMap)
    throw InputError("restrict_to_complex needs a right-linear quaternion matrix");
  KMatrix c(Algebra::C, 2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto& [j, p] : m.row(i)) {
      KElement p1(Algebra::C, {p[0], p[1]});
      KElement p2(Algebra::C, {p[2], -p[3]});
      c.set(2 * i, 2 * j, p1);
      c.set(2 * i, 2 * j + 1, -conj(p2));
      c.set(2 * i + 1, 2 * j, p2);
      c.set(2 * i + 1, 2 * j + 1, conj(p1));
    }
  return c;
}

SparseMatrix complex_restriction_basis_change(std::size_t hdim) {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < hdim; ++i)
    for (int c = 0; c < 4; ++c) d.push_back(c == 3 ? Rational(-1) : Rational(1));
  return SparseMatrix::diagonal(d);
}

std::vector<SparseMatrix> right_unit_operators(Algebra field, std::size_t kdim) {
  std::vector<SparseMatrix> ops;
  int d = algebra_dim(field);
  for (int u = 1; u < d; ++u) {
    KMatrix m = KMatrix::scalar(KElement::unit(field, u), kdim, Side::LeftModuleMap);
    // y -> y*u acting on each coordinate
    ops.push_back(m.realify());
  }
  return ops;
}

}  // namespace spinor
