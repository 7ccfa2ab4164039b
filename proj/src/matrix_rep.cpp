#include "spinor/matrix_rep.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <tuple>

#include "spinor/errors.hpp"

namespace spinor {

GradedSpace GradedSpace::ungraded(Algebra f, std::size_t dim) {
  GradedSpace g;
  g.field = f;
  g.dim = dim;
  return g;
}

GradedSpace GradedSpace::graded(Algebra f, std::vector<int> signs) {
  GradedSpace g;
  g.field = f;
  g.dim = signs.size();
  for (int s : signs) {
    if (s == 1) ++g.plus;
    else if (s == -1) ++g.minus;
    else throw InputError("grading entries must be +1 or -1");
  }
  g.grading = std::move(signs);
  return g;
}

GradedSpace tensor_module(const GradedSpace& M, const GradedSpace& N, Algebra over, bool graded) {
  Algebra f;
  std::size_t dim;
  std::size_t rep = 1;  // each (alpha, beta) pair occupies `rep` coordinates
  if (over == Algebra::R) {
    if (M.field == Algebra::R) f = N.field;
    else if (N.field == Algebra::R || (M.field == Algebra::C && N.field == Algebra::C)) f = M.field;
    else throw InputError("tensor over R: needs a real factor or two complex factors");
    dim = M.dim * N.dim;
  } else if (over == Algebra::C || over == Algebra::H) {
    if (M.field != over || N.field != over) throw InputError("tensor over K: both factors must be K-modules");
    f = over == Algebra::C ? Algebra::C : Algebra::R;
    dim = M.dim * N.dim * (over == Algebra::H ? 4 : 1);
    rep = over == Algebra::H ? 4 : 1;
  } else {
    throw InputError("tensor over O is not defined");
  }
  if (!graded) return GradedSpace::ungraded(f, dim);
  std::vector<int> g;
  g.reserve(dim);
  for (std::size_t a = 0; a < M.dim; ++a)
    for (std::size_t b = 0; b < N.dim; ++b)
      for (std::size_t c = 0; c < rep; ++c) g.push_back(M.degree(a) * N.degree(b));
  return GradedSpace::graded(f, std::move(g));
}

std::pair<KMatrix, KMatrix> split_by_degree(const KMatrix& op, const std::vector<int>& grading) {
  if (op.rows() != grading.size() || op.cols() != grading.size()) throw InputError("split_by_degree: size mismatch");
  KMatrix even(op.field(), op.rows(), op.cols(), op.side()), odd = even;
  for (std::size_t i = 0; i < op.rows(); ++i)
    for (auto& [j, x] : op.row(i)) (grading[i] == grading[j] ? even : odd).set(i, j, x);
  return {even, odd};
}

namespace {

Degree degree_of(const GradedOperator& T, const GradedSpace& V) {
  if (T.degree) return *T.degree;
  if (V.is_graded()) throw InputError("operator on a graded space needs a declared degree");
  return Degree::Even;
}

KMatrix homogeneous_tensor(const KMatrix& T, const KMatrix& S, bool s_odd, const GradedSpace& M,
                           const GradedSpace& N, Algebra over) {
  KMatrix TD = T;
  if (s_odd && M.is_graded()) TD = T * KMatrix::diagonal_signs(T.field(), *M.grading, T.side());
  if (over == Algebra::R) return KMatrix::kron(TD, S);

  const std::size_t a = M.dim, b = N.dim;
  if (over == Algebra::C) {
    // X -> TD X S with row-major vec is TD (x) S^T (no conjugation)
    KMatrix St(Algebra::C, b, b);
    for (std::size_t i = 0; i < b; ++i)
      for (auto& [j, x] : S.row(i)) St.set(j, i, x);
    return KMatrix::kron(TD, St.with_side(Side::RightModuleMap));
  }
  // over H: apply to each real basis element of the a x b quaternion matrix space
  std::vector<std::vector<std::pair<std::size_t, KElement>>> tdcol(a);
  for (std::size_t i = 0; i < a; ++i)
    for (auto& [j, x] : TD.row(i)) tdcol[j].emplace_back(i, x);
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> trip;
  for (std::size_t g = 0; g < a; ++g)
    for (std::size_t d = 0; d < b; ++d)
      for (int c = 0; c < 4; ++c) {
        const std::size_t col = (g * b + d) * 4 + c;
        KElement u = KElement::unit(Algebra::H, c);
        for (auto& [al, t] : tdcol[g]) {
          KElement tu = mul(Algebra::H, t, u);
          for (auto& [be, s] : S.row(d)) {
            KElement v = mul(Algebra::H, tu, s);
            for (int k = 0; k < 4; ++k)
              if (!v[k].is_zero()) trip.emplace_back((al * b + be) * 4 + k, col, v[k]);
          }
        }
      }
  return KMatrix::from_real(SparseMatrix::from_triplets(4 * a * b, 4 * a * b, std::move(trip)), Algebra::R);
}

}  // namespace

KMatrix graded_tensor_operator(const GradedOperator& T, const GradedOperator& S, const GradedSpace& M,
                               const GradedSpace& N, Algebra over) {
  if (T.op.rows() != M.dim || T.op.cols() != M.dim || S.op.rows() != N.dim || S.op.cols() != N.dim)
    throw InputError("graded_tensor_operator: operator size does not match its space");
  if (over != Algebra::R) {
    if (T.op.field() != over || S.op.field() != over) throw InputError("graded_tensor_operator: field mismatch");
    if (T.op.side() != Side::RightModuleMap || S.op.side() != Side::LeftModuleMap)
      throw InputError("graded_tensor_operator: need a right-module map (x) a left-module map");
  }
  Degree dt = degree_of(T, M);
  Degree ds = degree_of(S, N);
  if (dt == Degree::Mixed) {
    if (!M.is_graded()) throw InputError("mixed degree on an ungraded space");
    auto [e, o] = split_by_degree(T.op, *M.grading);
    return graded_tensor_operator({e, Degree::Even}, S, M, N, over) +
           graded_tensor_operator({o, Degree::Odd}, S, M, N, over);
  }
  if (ds == Degree::Mixed) {
    if (!N.is_graded()) throw InputError("mixed degree on an ungraded space");
    auto [e, o] = split_by_degree(S.op, *N.grading);
    return graded_tensor_operator(T, {e, Degree::Even}, M, N, over) +
           graded_tensor_operator(T, {o, Degree::Odd}, M, N, over);
  }
  return homogeneous_tensor(T.op, S.op, ds == Degree::Odd, M, N, over);
}

// ---------------------------------------------------------------------------
// commutant and its classification

namespace {

std::vector<SparseMatrix> matrices_from_nullspace(const std::vector<SparseVec>& ns, std::size_t r, std::size_t c) {
  std::vector<SparseMatrix> out;
  for (auto& v : ns) {
    std::vector<SparseVec> rows(r);
    for (auto& [idx, q] : v) rows[idx / c].emplace_back(idx % c, q);
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) m.set_row(i, std::move(rows[i]));
    out.push_back(std::move(m));
  }
  return out;
}

// A finite-dimensional algebra given by a basis of real matrices.
struct MatrixAlgebra {
  std::vector<SparseMatrix> basis;
  SparseMatrix unit;
  std::vector<std::pair<std::size_t, std::size_t>> probe;  // positions that separate the basis
  DenseMatrix probe_matrix;                                // probe_matrix(k, j) = basis[j] at probe[k]
  std::vector<std::vector<std::vector<Rational>>> table;   // table[i][j] = coords(B_i B_j)
  std::vector<Rational> unit_coords;
  std::vector<Rational> trace;  // normalized: trace(unit) = 1

  std::size_t dim() const { return basis.size(); }

  static MatrixAlgebra build(std::vector<SparseMatrix> basis, SparseMatrix unit) {
    MatrixAlgebra A;
    A.basis = std::move(basis);
    A.unit = std::move(unit);
    const std::size_t m = A.basis.size();
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (auto& B : A.basis)
      for (std::size_t i = 0; i < B.rows(); ++i)
        for (auto& e : B.row(i)) pos.emplace_back(i, e.first);
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    DenseMatrix all(m, pos.size());
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < pos.size(); ++k) all.at(j, k) = A.basis[j].get(pos[k].first, pos[k].second);
    auto piv = pivot_columns(all);
    if (piv.size() != m) throw StructuralError("algebra basis is not linearly independent");
    A.probe_matrix = DenseMatrix(m, m);
    for (std::size_t k = 0; k < m; ++k) {
      A.probe.push_back(pos[piv[k]]);
      for (std::size_t j = 0; j < m; ++j) A.probe_matrix.at(k, j) = all.at(j, piv[k]);
    }
    A.table.assign(m, std::vector<std::vector<Rational>>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) A.table[i][j] = A.coords(A.basis[i] * A.basis[j]);
    A.unit_coords = A.coords(A.unit);
    Rational tu = 0;
    for (std::size_t i = 0; i < A.unit.rows(); ++i) tu += A.unit.get(i, i);
    for (auto& B : A.basis) {
      Rational t = 0;
      for (std::size_t i = 0; i < B.rows(); ++i) t += B.get(i, i);
      A.trace.push_back(t / tu);
    }
    return A;
  }

  std::vector<Rational> coords(const SparseMatrix& X) const {
    std::vector<Rational> b;
    for (auto& [i, j] : probe) b.push_back(X.get(i, j));
    auto x = solve_unique(probe_matrix, b);
    if (!x) throw StructuralError("element is outside the algebra");
    return *x;
  }

  std::vector<Rational> mul(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    std::vector<Rational> z(dim(), Rational(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        Rational f = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (!table[i][j][k].is_zero()) z[k] += f * table[i][j][k];
      }
    }
    return z;
  }

  Rational tau(const std::vector<Rational>& x) const {
    Rational t = 0;
    for (std::size_t i = 0; i < dim(); ++i) t += x[i] * trace[i];
    return t;
  }

  SparseMatrix matrix(const std::vector<Rational>& x) const {
    SparseMatrix X(unit.rows(), unit.cols());
    for (std::size_t i = 0; i < dim(); ++i)
      if (!x[i].is_zero()) X = X + x[i] * basis[i];
    return X;
  }

  // left multiplication by x in coordinates
  DenseMatrix left_mult(const std::vector<Rational>& x) const {
    DenseMatrix L(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k) L.at(k, j) += x[i] * table[i][j][k];
    }
    return L;
  }
};

std::vector<Rational> axpy(std::vector<Rational> x, const Rational& a, const std::vector<Rational>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += a * y[i];
  return x;
}

// every nonzero probe element must act invertibly by left multiplication
bool sampled_division(const MatrixAlgebra& A) {
  const std::size_t m = A.dim();
  std::vector<std::vector<Rational>> samples;
  for (unsigned mask = 0; mask < (1u << std::min<std::size_t>(m, 4)); ++mask) {
    std::vector<Rational> x(m, Rational(0));
    for (std::size_t j = 0; j < m; ++j) x[j] = (j < 4 && (mask >> j & 1)) ? -1 : 1;
    samples.push_back(x);
  }
  std::vector<Rational> dense(m);
  for (std::size_t j = 0; j < m; ++j) dense[j] = Rational(static_cast<long>(j % 2 ? -(long)(j + 1) : (long)(j + 1)), (long)(j + 2));
  samples.push_back(dense);
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  for (int t = 0; t < 32; ++t) {
    std::vector<Rational> x(m);
    bool nz = false;
    for (auto& c : x) {
      c = Rational(num(rng), den(rng));
      nz = nz || !c.is_zero();
    }
    if (!nz) x[0] = 1;
    samples.push_back(x);
  }
  for (auto& x : samples)
    if (determinant(A.left_mult(x)).is_zero()) return false;
  return true;
}

// leading principal minors of the negated trace form on a subspace
bool negative_definite(const MatrixAlgebra& A, const std::vector<std::vector<Rational>>& vs) {
  const std::size_t k = vs.size();
  DenseMatrix Bm(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto s = axpy(A.mul(vs[i], vs[j]), 1, A.mul(vs[j], vs[i]));
      Bm.at(i, j) = -A.tau(s) / 2;
    }
  for (std::size_t l = 1; l <= k; ++l) {
    DenseMatrix P(l, l);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) P.at(i, j) = Bm.at(i, j);
    if (determinant(P).sign() <= 0) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> independent_subset(const std::vector<std::vector<Rational>>& vs) {
  if (vs.empty()) return {};
  DenseMatrix M(vs[0].size(), vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < vs[j].size(); ++i) M.at(i, j) = vs[j][i];
  std::vector<std::vector<Rational>> out;
  for (auto p : pivot_columns(M)) out.push_back(vs[p]);
  return out;
}

std::vector<std::vector<Rational>> center_basis(const MatrixAlgebra& A) {
  const std::size_t m = A.dim();
  SparseEliminator el(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<std::pair<std::size_t, Rational>> eq;
      for (std::size_t j = 0; j < m; ++j) {
        Rational c = A.table[j][i][k] - A.table[i][j][k];
        if (!c.is_zero()) eq.emplace_back(j, c);
      }
      if (!eq.empty()) el.add(std::move(eq));
    }
  std::vector<std::vector<Rational>> out;
  for (auto& v : el.nullspace()) {
    std::vector<Rational> x(m, Rational(0));
    for (auto& [i, q] : v) x[i] = q;
    out.push_back(x);
  }
  return out;
}

struct Classification {
  std::string structure;
  bool certificate = false;
};

std::string dim_tag(const char* what, std::size_t m) { return std::string(what) + "(" + std::to_string(m) + ")"; }

// square root of an integer, if it is one
std::optional<std::size_t> isqrt(std::size_t m) {
  std::size_t k = 0;
  while (k * k < m) ++k;
  if (k * k == m) return k;
  return std::nullopt;
}

Classification classify(const MatrixAlgebra& A, int depth = 0) {
  const std::size_t m = A.dim();
  if (m == 1) return {"R", true};
  auto center = center_basis(A);
  // w: a central element with trace zero, then w^2 = a + b w; complete the square
  auto central_square = [&](std::vector<Rational> w) -> std::pair<std::vector<Rational>, Rational> {
    auto w2 = A.mul(w, w);
    DenseMatrix M(m, 2);
    for (std::size_t i = 0; i < m; ++i) {
      M.at(i, 0) = A.unit_coords[i];
      M.at(i, 1) = w[i];
    }
    auto ab = solve_unique(M, w2);
    if (!ab) throw StructuralError("center is not closed under squaring");
    Rational a = (*ab)[0], b = (*ab)[1];
    w = axpy(w, -b / 2, A.unit_coords);
    return {w, a + b * b / 4};
  };
  auto trace_free = [&](const std::vector<Rational>& x) { return axpy(x, -A.tau(x), A.unit_coords); };

  if (center.size() == 1) {
    if (m == 4) {
      std::vector<std::vector<Rational>> tf;
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> e(m, Rational(0));
        e[j] = 1;
        tf.push_back(trace_free(e));
      }
      tf = independent_subset(tf);
      if (tf.size() == 3 && negative_definite(A, tf)) return {"H", true};
      return {"M2(R)", false};
    }
    if (auto k = isqrt(m)) return {"M" + std::to_string(*k) + "(R)", false};
    if (m % 4 == 0)
      if (auto k = isqrt(m / 4)) return {"M" + std::to_string(*k) + "(H)", false};
    return {dim_tag("central-simple", m), false};
  }
  if (center.size() == 2) {
    std::vector<Rational> w;
    for (auto& z : center) {
      auto t = trace_free(z);
      if (std::any_of(t.begin(), t.end(), [](const Rational& q) { return !q.is_zero(); })) {
        w = t;
        break;
      }
    }
    if (w.empty()) throw StructuralError("two-dimensional center without a trace-free element");
    auto [wc, delta] = central_square(w);
    if (delta.sign() < 0) {
      if (m == 2) return {"C", true};
      if (auto k = isqrt(m / 2); k && m % 2 == 0) return {"M" + std::to_string(*k) + "(C)", false};
      return {dim_tag("complex-central", m), false};
    }
    if (delta.sign() > 0 && depth < 4) {
      if (delta.is_square()) {
        Rational s = delta.sqrt_exact();
        // idempotent e = (1 + w/s)/2 splits A = Ae + A(1-e)
        auto e = axpy(A.unit_coords, Rational(1) / s, wc);
        for (auto& c : e) c /= 2;
        auto f = axpy(A.unit_coords, -1, e);
        std::string parts[2];
        bool cert = true;
        int idx = 0;
        for (auto* p : {&e, &f}) {
          std::vector<std::vector<Rational>> prods;
          for (std::size_t j = 0; j < m; ++j) {
            std::vector<Rational> b(m, Rational(0));
            b[j] = 1;
            prods.push_back(A.mul(b, *p));
          }
          prods = independent_subset(prods);
          std::vector<SparseMatrix> sb;
          for (auto& v : prods) sb.push_back(A.matrix(v));
          auto sub = MatrixAlgebra::build(std::move(sb), A.matrix(*p));
          auto c = classify(sub, depth + 1);
          parts[idx++] = c.structure;
          cert = cert && c.certificate;
        }
        return {parts[0] + "+" + parts[1], cert};
      }
      return {dim_tag("split", m), false};
    }
    return {dim_tag("non-semisimple", m), false};
  }
  return {dim_tag("algebra", m), false};
}

}  // namespace

std::string Commutant::tag() const {
  switch (division_algebra) {
    case AlgebraKind::R: return "R";
    case AlgebraKind::C: return "C";
    case AlgebraKind::H: return "H";
    default: return "matrix-algebra(" + std::to_string(real_dimension) + ")";
  }
}

std::vector<SparseMatrix> intertwiner_space(const std::vector<SparseMatrix>& A, const std::vector<SparseMatrix>& B) {
  if (A.empty() || A.size() != B.size()) throw InputError("intertwiner_space: need matching nonempty generator lists");
  const std::size_t da = A[0].rows(), db = B[0].rows();
  for (std::size_t g = 0; g < A.size(); ++g)
    if (!A[g].is_square() || !B[g].is_square() || A[g].rows() != da || B[g].rows() != db)
      throw InputError("intertwiner_space: generator sizes differ");
  // X is db x da, unknown index a*da + c. Equation (X A - B X)_{a,b} = 0.
  SparseEliminator el(db * da);
  for (std::size_t g = 0; g < A.size(); ++g) {
    SparseMatrix At = A[g].transpose();
    for (std::size_t a = 0; a < db; ++a)
      for (std::size_t b = 0; b < da; ++b) {
        std::vector<std::pair<std::size_t, Rational>> eq;
        for (auto& [c, v] : At.row(b)) eq.emplace_back(a * da + c, v);            // X[a,c] A[c,b]
        for (auto& [c, v] : B[g].row(a)) eq.emplace_back(c * da + b, -v);         // B[a,c] X[c,b]
        std::sort(eq.begin(), eq.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseVec merged;
        for (auto& [i, q] : eq) {
          if (!merged.empty() && merged.back().first == i) merged.back().second += q;
          else merged.emplace_back(i, q);
        }
        std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
        if (!merged.empty()) el.add(std::move(merged));
      }
  }
  return matrices_from_nullspace(el.nullspace(), db, da);
}

Commutant commutant(const std::vector<SparseMatrix>& generators, std::size_t d) {
  if (generators.empty()) throw InputError("commutant: empty generator list");
  for (auto& g : generators)
    if (g.rows() != d || g.cols() != d) throw InputError("commutant: generator size mismatch");
  Commutant C;
  C.basis = intertwiner_space(generators, generators);
  C.real_dimension = C.basis.size();
  auto A = MatrixAlgebra::build(C.basis, SparseMatrix::identity(d));
  auto cls = classify(A);
  C.structure = cls.structure;
  C.definite_certificate = cls.certificate;
  C.sampled_division_test = sampled_division(A);
  const std::size_t m = C.real_dimension;
  if (m == 1) C.division_algebra = AlgebraKind::R;
  else if (m == 2 && C.structure == "C") C.division_algebra = AlgebraKind::C;
  else if (m == 4 && C.sampled_division_test && C.structure == "H") C.division_algebra = AlgebraKind::H;
  else C.division_algebra = AlgebraKind::MatrixAlgebra;
  return C;
}

std::string CliffordReport::str() const {
  if (pass) return "clifford condition: pass";
  std::ostringstream os;
  os << "clifford condition: FAIL at";
  for (auto& [i, j] : violations) os << " (" << i << "," << j << ")";
  return os.str();
}

CliffordReport verify_clifford_condition(const std::vector<SparseMatrix>& generators, const Signature& sig) {
  CliffordReport rep;
  if (generators.size() != static_cast<std::size_t>(sig.n())) {
    rep.pass = false;
    rep.violations.emplace_back(0, 0);
    return rep;
  }
  const std::size_t d = generators.empty() ? 0 : generators[0].rows();
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i; j < generators.size(); ++j) {
      const auto& a = generators[i];
      const auto& b = generators[j];
      bool ok = a.is_square() && b.is_square() && a.rows() == d && b.rows() == d;
      if (ok) {
        SparseMatrix ac = a * b + b * a;
        Rational q;
        if (i == j) ok = ac.is_scalar(&q) && q == Rational(2 * sig.square(static_cast<int>(i)));
        else ok = ac.is_zero();
      }
      if (!ok) {
        rep.pass = false;
        rep.violations.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
      }
    }
  return rep;
}

GradedSpace grading_from_volume(const SpinorModule& module) {
  SparseMatrix nu = module.volume_operator();
  if (!(nu * nu).is_identity()) throw PreconditionError("volume element does not square to 1 on this module");
  const std::size_t d = module.real_dim;
  SparseMatrix I = SparseMatrix::identity(d);
  SparseMatrix pp = Rational(1, 2) * (I + nu), pm = Rational(1, 2) * (I - nu);
  std::size_t rp = rank(pp), rm = rank(pm);
  if (rp + rm != d) throw StructuralError("volume projector ranks do not add up");
  if (nu.is_diagonal()) {
    std::vector<int> g(d);
    for (std::size_t i = 0; i < d; ++i) g[i] = nu.get(i, i).sign();
    return GradedSpace::graded(Algebra::R, std::move(g));
  }
  GradedSpace gs = GradedSpace::ungraded(Algebra::R, d);
  gs.plus = rp;
  gs.minus = rm;
  return gs;
}

}  // namespace spinor
