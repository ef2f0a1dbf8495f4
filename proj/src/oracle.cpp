#include "sdw/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace sdw::oracle {

namespace {

constexpr int kDegreeCap = 100;
constexpr int kWindow = 60;

void monomials_rec(const PolyRing& P, int var, int left, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == P.num_vars()) {
    if (left == 0) out.push_back(P.make(exps));
    return;
  }
  const int w = P.weights()[var];
  for (int e = 0; e * w <= left && e <= 127; ++e) {
    exps[var] = e;
    monomials_rec(P, var + 1, left - e * w, exps, out);
  }
  exps[var] = 0;
}

std::vector<Monomial> monomials_of_degree(const PolyRing& P, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> exps(P.num_vars(), 0);
  monomials_rec(P, 0, d, exps, out);
  return out;
}

DenseMatrix identity(const PrimeField& F, int n) {
  DenseMatrix I(F, n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Vec mat_vec(const DenseMatrix& A, const Vec& v) {
  const auto& F = A.field();
  Vec out(A.rows(), 0);
  for (int c = 0; c < A.cols(); ++c) {
    if (!v[c]) continue;
    for (int r = 0; r < A.rows(); ++r)
      if (A.at(r, c)) out[r] = F.add(out[r], F.mul(A.at(r, c), v[c]));
  }
  return out;
}

// Row space of a set of vectors in reduced echelon form, with reduction modulo it.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<int> pivots;

  Echelon(const PrimeField& F, const std::vector<Vec>& vecs, int n) {
    if (vecs.empty()) return;
    DenseMatrix A(F, static_cast<int>(vecs.size()), n);
    for (std::size_t r = 0; r < vecs.size(); ++r)
      for (int c = 0; c < n; ++c) A.at(static_cast<int>(r), c) = vecs[r][c];
    pivots = A.row_reduce();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      Vec row(n);
      for (int c = 0; c < n; ++c) row[c] = A.at(static_cast<int>(r), c);
      rows.push_back(std::move(row));
    }
  }
  // v minus its projection onto the pivots.
  Vec reduce(const PrimeField& F, Vec v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto c = v[pivots[r]];
      if (!c) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (rows[r][j]) v[j] = F.sub(v[j], F.mul(c, rows[r][j]));
    }
    return v;
  }
};

int rank_of(const PrimeField& F, const std::vector<Vec>& vecs, int n) {
  if (vecs.empty() || n == 0) return 0;
  return static_cast<int>(Echelon(F, vecs, n).rows.size());
}

struct Labeled {
  FiniteModule module;
  std::vector<std::pair<Monomial, int>> labels;
};

Labeled to_finite_labeled(const PresentedModule& M) {
  const auto& R = M.ring();
  const auto& P = R->poly_ring();
  const auto& Fd = R->field();
  const auto& FM = M.free_module();
  Labeled out;
  out.module.field = Fd;
  out.module.weights = P->weights();
  const int nv = P->num_vars();
  out.module.action.assign(nv, DenseMatrix(Fd, 0, 0));
  if (M.rank() == 0) {
    for (int k = 0; k < nv; ++k) out.module.action[k] = DenseMatrix(Fd, 0, 0);
    return out;
  }
  const auto& dg = M.degrees();
  const int dmin = *std::min_element(dg.begin(), dg.end());
  const int G = *std::max_element(dg.begin(), dg.end());
  const int wmax = *std::max_element(P->weights().begin(), P->weights().end());

  struct Piece {
    std::map<std::pair<std::uint64_t, int>, int> col;
    std::vector<std::pair<Monomial, int>> labels;
    Echelon ech{PrimeField(), {}, 0};
    std::vector<int> free_cols;
    std::vector<int> index_of;  // column -> position among free columns, or -1
  };
  std::map<int, Piece> pieces;
  std::vector<std::pair<Polynomial, int>> ideal;
  for (const auto& g : R->generators()) ideal.push_back({g, *g.homogeneous_degree()});

  int zeros = 0;
  for (int d = dmin;; ++d) {
    if (d > dmin + kDegreeCap) throw std::invalid_argument("module is not of finite length");
    Piece pc;
    for (int i = 0; i < M.rank(); ++i)
      for (const auto& m : monomials_of_degree(*P, d - dg[i])) {
        pc.col[{m.packed(), i}] = static_cast<int>(pc.labels.size());
        pc.labels.push_back({m, i});
      }
    const int n = static_cast<int>(pc.labels.size());
    std::vector<Vec> rows;
    auto add_row = [&](const Monomial& u, const FreeElement& v) {
      Vec row(n, 0);
      for (const auto& t : v) row[pc.col.at({(u * t.mono).packed(), static_cast<int>(t.comp)})] = t.coeff;
      rows.push_back(std::move(row));
    };
    for (const auto& r : M.relations()) {
      int e = *FM.homogeneous_degree(r);
      for (const auto& u : monomials_of_degree(*P, d - e)) add_row(u, r);
    }
    for (const auto& [g, e] : ideal)
      for (int i = 0; i < M.rank(); ++i)
        for (const auto& u : monomials_of_degree(*P, d - e - dg[i])) add_row(u, FM.basis_times(i, g));
    pc.ech = Echelon(Fd, rows, n);
    pc.index_of.assign(n, -1);
    std::vector<bool> piv(n, false);
    for (int p : pc.ech.pivots) piv[p] = true;
    for (int c = 0; c < n; ++c)
      if (!piv[c]) {
        pc.index_of[c] = static_cast<int>(pc.free_cols.size());
        pc.free_cols.push_back(c);
      }
    zeros = pc.free_cols.empty() ? zeros + 1 : 0;
    pieces.emplace(d, std::move(pc));
    if (d >= G && zeros >= wmax) break;
  }

  std::map<int, int> offset;
  for (auto& [d, pc] : pieces) {
    offset[d] = out.module.dim();
    for (int c : pc.free_cols) {
      out.module.degree.push_back(d);
      out.labels.push_back(pc.labels[c]);
    }
  }
  const int N = out.module.dim();
  for (int k = 0; k < nv; ++k) {
    DenseMatrix A(Fd, N, N);
    const int w = P->weights()[k];
    const auto xk = P->var(k);
    for (int b = 0; b < N; ++b) {
      auto it = pieces.find(out.module.degree[b] + w);
      if (it == pieces.end()) continue;
      const auto& pc = it->second;
      Vec v(pc.labels.size(), 0);
      v[pc.col.at({(out.labels[b].first * xk).packed(), out.labels[b].second})] = 1;
      v = pc.ech.reduce(Fd, std::move(v));
      for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] && pc.index_of[c] >= 0) A.at(offset[it->first] + pc.index_of[c], b) = v[c];
    }
    out.module.action[k] = std::move(A);
  }
  return out;
}

// Operator of a monomial.
DenseMatrix monomial_operator(const FiniteModule& M, const PolyRing& P, const Monomial& m) {
  DenseMatrix out = identity(M.field, M.dim());
  auto e = P.exponents(m);
  for (int k = 0; k < P.num_vars(); ++k)
    for (int t = 0; t < e[k]; ++t) out = M.action[k] * out;
  return out;
}

// Quotient of X by the submodule spanned by homogeneous vectors.
FiniteModule quotient(const FiniteModule& X, const std::vector<Vec>& sub) {
  const auto& F = X.field;
  std::map<int, std::vector<int>> coords;  // degree -> coordinates of X
  for (int b = 0; b < X.dim(); ++b) coords[X.degree[b]].push_back(b);
  std::map<int, std::vector<Vec>> by_deg;
  for (const auto& v : sub)
    for (int b = 0; b < X.dim(); ++b)
      if (v[b]) {
        by_deg[X.degree[b]].push_back(v);
        break;
      }
  std::map<int, Echelon> ech;
  std::vector<int> index_of(X.dim(), -1);
  FiniteModule Q;
  Q.field = F;
  Q.weights = X.weights;
  std::vector<int> rep;
  for (const auto& [d, cs] : coords) {
    auto it = ech.emplace(d, Echelon(F, by_deg[d], X.dim())).first;
    std::vector<bool> piv(X.dim(), false);
    for (int p : it->second.pivots) piv[p] = true;
    for (int c : cs)
      if (!piv[c]) {
        index_of[c] = Q.dim();
        Q.degree.push_back(d);
        rep.push_back(c);
      }
  }
  for (std::size_t k = 0; k < X.action.size(); ++k) {
    DenseMatrix A(F, Q.dim(), Q.dim());
    for (int q = 0; q < Q.dim(); ++q) {
      Vec e(X.dim(), 0);
      e[rep[q]] = 1;
      Vec w = X.act(static_cast<int>(k), e);
      int d = Q.degree[q] + X.weights[k];
      auto it = ech.find(d);
      if (it == ech.end()) continue;
      w = it->second.reduce(F, std::move(w));
      for (int c = 0; c < X.dim(); ++c)
        if (w[c] && index_of[c] >= 0) A.at(index_of[c], q) = w[c];
    }
    Q.action.push_back(std::move(A));
  }
  return Q;
}

// Vectors whose classes form a basis of X / (x_1, ..., x_n) X.
std::vector<Vec> minimal_generators(const FiniteModule& X) {
  const auto& F = X.field;
  std::vector<Vec> images;
  for (std::size_t k = 0; k < X.action.size(); ++k)
    for (int b = 0; b < X.dim(); ++b) {
      Vec e(X.dim(), 0);
      e[b] = 1;
      Vec w = X.act(static_cast<int>(k), e);
      if (std::any_of(w.begin(), w.end(), [](auto c) { return c != 0; })) images.push_back(std::move(w));
    }
  Echelon ech(F, images, X.dim());
  std::vector<bool> piv(X.dim(), false);
  for (int p : ech.pivots) piv[p] = true;
  std::vector<Vec> out;
  for (int b = 0; b < X.dim(); ++b)
    if (!piv[b]) {
      Vec e(X.dim(), 0);
      e[b] = 1;
      out.push_back(std::move(e));
    }
  return out;
}

int degree_of(const FiniteModule& X, const Vec& v) {
  for (int b = 0; b < X.dim(); ++b)
    if (v[b]) return X.degree[b];
  throw std::logic_error("degree of the zero vector");
}

FiniteModule free_module(const FiniteAlgebra& A, const std::vector<int>& gens) {
  FiniteModule F;
  F.field = A.regular.field;
  F.weights = A.regular.weights;
  const int a = A.dim();
  for (int g : gens)
    for (int i = 0; i < a; ++i) F.degree.push_back(A.regular.degree[i] + g);
  const int n = F.dim();
  for (const auto& act : A.regular.action) {
    DenseMatrix M(F.field, n, n);
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (int r = 0; r < a; ++r)
        for (int c = 0; c < a; ++c) M.at(static_cast<int>(j) * a + r, static_cast<int>(j) * a + c) = act.at(r, c);
    F.action.push_back(std::move(M));
  }
  return F;
}

}  // namespace

Dims FiniteModule::dims() const {
  Dims d;
  for (int g : degree) ++d[g];
  return d;
}

Vec FiniteModule::act(int var, const Vec& v) const { return mat_vec(action[var], v); }

bool FiniteModule::actions_commute() const {
  for (std::size_t i = 0; i < action.size(); ++i)
    for (std::size_t j = i + 1; j < action.size(); ++j) {
      auto a = action[i] * action[j], b = action[j] * action[i];
      for (int r = 0; r < dim(); ++r)
        for (int c = 0; c < dim(); ++c)
          if (a.at(r, c) != b.at(r, c)) return false;
    }
  return true;
}

bool FiniteAlgebra::is_associative() const {
  const auto& F = regular.field;
  const int n = dim();
  auto mul = [&](const Vec& u, const Vec& v) {
    Vec out(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto c = F.mul(u[i], v[j]);
        if (!c) continue;
        for (int k = 0; k < n; ++k) out[k] = F.add(out[k], F.mul(c, table[i][j][k]));
      }
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec ek(n, 0), ei(n, 0);
        ek[k] = 1;
        ei[i] = 1;
        if (mul(table[i][j], ek) != mul(ei, table[j][k])) return false;
      }
  return true;
}

bool FiniteAlgebra::is_unital() const {
  const int n = dim();
  if (n == 0 || !basis[0].is_one()) return false;
  for (int j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    if (table[0][j] != e || table[j][0] != e) return false;
  }
  return true;
}

bool FiniteAlgebra::kills_ideal(const std::vector<Polynomial>& ideal) const {
  for (const auto& g : ideal)
    if (!evaluate(regular, g).is_zero()) return false;
  return true;
}

FiniteModule to_finite(const PresentedModule& M) { return to_finite_labeled(M).module; }

FiniteAlgebra finite_algebra(const QRingPtr& R) {
  auto L = to_finite_labeled(PresentedModule::ring_module(R));
  FiniteAlgebra A;
  A.ring = R->poly_ring();
  A.regular = std::move(L.module);
  for (const auto& [m, i] : L.labels) A.basis.push_back(m);
  const int n = A.dim();
  A.table.assign(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i) {
    auto op = monomial_operator(A.regular, *A.ring, A.basis[i]);
    for (int j = 0; j < n; ++j) {
      Vec v(n);
      for (int k = 0; k < n; ++k) v[k] = op.at(k, j);
      A.table[i][j] = std::move(v);
    }
  }
  return A;
}

DenseMatrix evaluate(const FiniteModule& M, const Polynomial& f) {
  const auto& F = M.field;
  DenseMatrix out(F, M.dim(), M.dim());
  for (const auto& t : f.terms()) {
    auto op = monomial_operator(M, *f.ring(), t.mono);
    for (int r = 0; r < M.dim(); ++r)
      for (int c = 0; c < M.dim(); ++c)
        if (op.at(r, c)) out.at(r, c) = F.add(out.at(r, c), F.mul(t.coeff, op.at(r, c)));
  }
  return out;
}

std::map<int, std::vector<DenseMatrix>> hom_basis(const FiniteModule& M, const FiniteModule& N) {
  std::map<int, std::vector<DenseMatrix>> out;
  if (M.dim() == 0 || N.dim() == 0) return out;
  const auto& F = M.field;
  auto [mlo, mhi] = std::minmax_element(M.degree.begin(), M.degree.end());
  auto [nlo, nhi] = std::minmax_element(N.degree.begin(), N.degree.end());
  for (int s = *nlo - *mhi; s <= *nhi - *mlo; ++s) {
    std::map<std::pair<int, int>, int> var;  // (row of N, column of M)
    for (int c = 0; c < M.dim(); ++c)
      for (int r = 0; r < N.dim(); ++r)
        if (N.degree[r] == M.degree[c] + s) var.emplace(std::make_pair(r, c), static_cast<int>(var.size()));
    if (var.empty()) continue;
    const int nu = static_cast<int>(var.size());
    std::vector<Vec> eqs;
    for (std::size_t k = 0; k < M.action.size(); ++k) {
      const auto& XM = M.action[k];
      const auto& XN = N.action[k];
      for (int b = 0; b < M.dim(); ++b)
        for (int r2 = 0; r2 < N.dim(); ++r2) {
          if (N.degree[r2] != M.degree[b] + M.weights[k] + s) continue;
          Vec eq(nu, 0);
          bool any = false;
          for (int c = 0; c < M.dim(); ++c)
            if (XM.at(c, b)) {
              int u = var.at({r2, c});
              eq[u] = F.add(eq[u], XM.at(c, b));
              any = true;
            }
          for (int r = 0; r < N.dim(); ++r)
            if (XN.at(r2, r)) {
              auto it = var.find({r, b});
              if (it == var.end()) continue;
              eq[it->second] = F.sub(eq[it->second], XN.at(r2, r));
              any = true;
            }
          if (any) eqs.push_back(std::move(eq));
        }
    }
    std::vector<Vec> sols;
    if (eqs.empty()) {
      for (int u = 0; u < nu; ++u) {
        Vec e(nu, 0);
        e[u] = 1;
        sols.push_back(std::move(e));
      }
    } else {
      DenseMatrix E(F, static_cast<int>(eqs.size()), nu);
      for (std::size_t r = 0; r < eqs.size(); ++r)
        for (int u = 0; u < nu; ++u) E.at(static_cast<int>(r), u) = eqs[r][u];
      sols = E.kernel();
    }
    for (const auto& sol : sols) {
      DenseMatrix phi(F, N.dim(), M.dim());
      for (const auto& [rc, u] : var) phi.at(rc.first, rc.second) = sol[u];
      out[s].push_back(std::move(phi));
    }
  }
  return out;
}

Dims hom_dims(const FiniteModule& M, const FiniteModule& N) {
  Dims d;
  for (const auto& [s, maps] : hom_basis(M, N))
    if (!maps.empty()) d[s] = static_cast<long long>(maps.size());
  return d;
}

Resolution::Resolution(const FiniteAlgebra& A, const FiniteModule& M, int length) : A_(&A) {
  const auto& F = A.regular.field;
  const int a = A.dim();
  std::vector<DenseMatrix> basis_ops;  // on the current module X
  FiniteModule X = M;
  // rows of the current X inside the previous free module (empty for X = M)
  std::vector<Vec> embed;
  for (int i = 0; i <= length; ++i) {
    auto gv = minimal_generators(X);
    std::vector<int> gdeg;
    for (const auto& v : gv) gdeg.push_back(degree_of(X, v));
    gens_.push_back(gdeg);
    if (i > 0) {
      std::vector<Vec> imgs;
      for (const auto& v : gv) {
        Vec w(embed.empty() ? 0 : embed[0].size(), 0);
        for (std::size_t r = 0; r < v.size(); ++r)
          if (v[r])
            for (std::size_t c = 0; c < w.size(); ++c) w[c] = F.add(w[c], F.mul(v[r], embed[r][c]));
        imgs.push_back(std::move(w));
      }
      diffs_.push_back(std::move(imgs));
    }
    if (i == length) break;

    // cover F -> X and its kernel
    FiniteModule Fr = free_module(A, gdeg);
    std::vector<DenseMatrix> ops;
    for (int t = 0; t < a; ++t) ops.push_back(monomial_operator(X, *A.ring, A.basis[t]));
    std::map<int, std::vector<int>> fcols, xrows;
    for (int c = 0; c < Fr.dim(); ++c) fcols[Fr.degree[c]].push_back(c);
    for (int r = 0; r < X.dim(); ++r) xrows[X.degree[r]].push_back(r);
    std::vector<Vec> kernel_rows;
    std::vector<int> kernel_deg;
    for (const auto& [d, cols] : fcols) {
      const auto& rows = xrows[d];
      std::vector<Vec> found;
      if (rows.empty()) {
        for (int c : cols) {
          Vec e(Fr.dim(), 0);
          e[c] = 1;
          found.push_back(std::move(e));
        }
      } else {
        DenseMatrix Pi(F, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
          int j = cols[ci] / a, t = cols[ci] % a;
          Vec img = mat_vec(ops[t], gv[j]);
          for (std::size_t ri = 0; ri < rows.size(); ++ri) Pi.at(static_cast<int>(ri), static_cast<int>(ci)) = img[rows[ri]];
        }
        for (const auto& k : Pi.kernel()) {
          Vec e(Fr.dim(), 0);
          for (std::size_t ci = 0; ci < cols.size(); ++ci) e[cols[ci]] = k[ci];
          found.push_back(std::move(e));
        }
      }
      Echelon ech(F, found, Fr.dim());
      for (auto& r : ech.rows) {
        kernel_rows.push_back(std::move(r));
        kernel_deg.push_back(d);
      }
    }
    // kernel as a module: coordinates are the entries at the pivot columns
    std::vector<int> pivot;
    for (const auto& r : kernel_rows)
      for (int c = 0; c < Fr.dim(); ++c)
        if (r[c]) {
          pivot.push_back(c);
          break;
        }
    FiniteModule K;
    K.field = F;
    K.weights = X.weights;
    K.degree = kernel_deg;
    const int nk = K.dim();
    for (std::size_t k = 0; k < Fr.action.size(); ++k) {
      DenseMatrix Ak(F, nk, nk);
      for (int b = 0; b < nk; ++b) {
        Vec w = Fr.act(static_cast<int>(k), kernel_rows[b]);
        for (int r = 0; r < nk; ++r) Ak.at(r, b) = w[pivot[r]];
      }
      K.action.push_back(std::move(Ak));
    }
    X = std::move(K);
    embed = std::move(kernel_rows);
  }
}

DenseMatrix Resolution::dual_matrix(int i, const FiniteModule& N) const {
  const auto& F = N.field;
  const int a = A_->dim(), n = N.dim();
  const auto& g0 = gens_[i];
  const auto& g1 = gens_[i + 1];
  DenseMatrix D(F, static_cast<int>(g1.size()) * n, static_cast<int>(g0.size()) * n);
  std::vector<DenseMatrix> ops;
  for (int t = 0; t < a; ++t) ops.push_back(monomial_operator(N, *A_->ring, A_->basis[t]));
  for (std::size_t j1 = 0; j1 < g1.size(); ++j1) {
    const auto& img = diffs_[i][j1];
    for (std::size_t j0 = 0; j0 < g0.size(); ++j0)
      for (int t = 0; t < a; ++t) {
        auto c = img[j0 * a + t];
        if (!c) continue;
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s)
            if (ops[t].at(r, s)) {
              auto& e = D.at(static_cast<int>(j1) * n + r, static_cast<int>(j0) * n + s);
              e = F.add(e, F.mul(c, ops[t].at(r, s)));
            }
      }
  }
  return D;
}

Dims ext_dims(const Resolution& res, int i, const FiniteModule& N) {
  if (i < 0 || i + 1 > res.length()) throw std::out_of_range("resolution too short for this Ext");
  const auto& F = N.field;
  const int n = N.dim();
  auto coord_deg = [&](const std::vector<int>& gens) {
    std::vector<int> d;
    for (int g : gens)
      for (int b = 0; b < n; ++b) d.push_back(N.degree[b] - g);
    return d;
  };
  const auto deg_i = coord_deg(res.generators(i));
  const auto next = res.dual_matrix(i, N);
  std::optional<DenseMatrix> prev;
  if (i > 0) prev = res.dual_matrix(i - 1, N);
  std::map<int, std::vector<int>> by_deg;
  for (std::size_t c = 0; c < deg_i.size(); ++c) by_deg[deg_i[c]].push_back(static_cast<int>(c));
  Dims out;
  for (const auto& [s, cols] : by_deg) {
    std::vector<Vec> colvecs;
    for (int c : cols) {
      Vec v(next.rows());
      for (int r = 0; r < next.rows(); ++r) v[r] = next.at(r, c);
      colvecs.push_back(std::move(v));
    }
    long long ker = static_cast<long long>(cols.size()) - rank_of(F, colvecs, next.rows());
    long long im = 0;
    if (prev) {
      std::vector<Vec> rows;
      for (int c : cols) {
        Vec v(prev->cols());
        for (int k = 0; k < prev->cols(); ++k) v[k] = prev->at(c, k);
        rows.push_back(std::move(v));
      }
      im = rank_of(F, rows, prev->cols());
    }
    if (ker - im) out[s] = ker - im;
  }
  return out;
}

FiniteModule transpose(const Resolution& res, const FiniteModule& C) {
  const int n = C.dim();
  FiniteModule H;
  H.field = C.field;
  H.weights = C.weights;
  const auto& g1 = res.generators(1);
  for (int g : g1)
    for (int b = 0; b < n; ++b) H.degree.push_back(C.degree[b] - g);
  for (const auto& act : C.action) {
    DenseMatrix M(C.field, H.dim(), H.dim());
    for (std::size_t j = 0; j < g1.size(); ++j)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) M.at(static_cast<int>(j) * n + r, static_cast<int>(j) * n + c) = act.at(r, c);
    H.action.push_back(std::move(M));
  }
  auto D = res.dual_matrix(0, C);
  std::vector<Vec> image;
  for (int c = 0; c < D.cols(); ++c) {
    Vec v(D.rows());
    bool any = false;
    for (int r = 0; r < D.rows(); ++r) any |= (v[r] = D.at(r, c)) != 0;
    if (any) image.push_back(std::move(v));
  }
  return quotient(H, image);
}

int lambda_kernel_dim(const FiniteModule& M, const FiniteModule& C) {
  std::vector<Vec> rows;
  for (const auto& [s, maps] : hom_basis(M, C))
    for (const auto& phi : maps)
      for (int r = 0; r < phi.rows(); ++r) {
        Vec v(M.dim());
        for (int c = 0; c < M.dim(); ++c) v[c] = phi.at(r, c);
        rows.push_back(std::move(v));
      }
  return M.dim() - rank_of(M.field, rows, M.dim());
}

Dims oracle_hom(const PresentedModule& M, const PresentedModule& N) {
  return hom_dims(to_finite(M), to_finite(N));
}

Dims oracle_ext(int i, const PresentedModule& M, const PresentedModule& N) {
  auto A = finite_algebra(M.ring());
  Resolution res(A, to_finite(M), i + 1);
  return ext_dims(res, i, to_finite(N));
}

std::string dims_string(const Dims& d) {
  if (d.empty()) return "0";
  std::ostringstream s;
  bool first = true;
  for (const auto& [deg, n] : d) {
    s << (first ? "" : " ") << deg << ":" << n;
    first = false;
  }
  return s.str();
}

namespace {

Dims pipeline_dims(const HilbertSeries& h) {
  Dims d;
  auto v = h.values(-kWindow, kWindow);
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i]) d[i - kWindow] = v[i];
  return d;
}

}  // namespace

CheckReport differential_test(const std::vector<Instance>& instances, int i_max) {
  CheckReport rep;
  rep.tool_version = kToolVersion;
  for (const auto& inst : instances) {
    auto start = std::chrono::steady_clock::now();
    auto ms = [&] {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };
    auto A = finite_algebra(inst.ring);
    {
      CheckRecord rec;
      rec.name = "oracle_algebra";
      rec.inputs = {inst.name};
      bool ok = A.is_associative() && A.is_unital() && A.regular.actions_commute() &&
                A.kills_ideal(inst.ring->generators()) &&
                pipeline_dims(inst.ring->hilbert_series()) == A.regular.dims();
      rec.verdict = from_bool(ok);
      rec.witness = "dim " + std::to_string(A.dim()) + ", graded " + dims_string(A.regular.dims());
      rec.timing_ms = ms();
      rep.checks.push_back(std::move(rec));
    }
    std::vector<FiniteModule> fin;
    std::vector<Resolution> res;
    for (const auto& nm : inst.modules) fin.push_back(to_finite(nm.module));
    for (const auto& f : fin) res.emplace_back(A, f, i_max + 1);

    for (std::size_t m = 0; m < inst.modules.size(); ++m)
      for (std::size_t n = 0; n < inst.modules.size(); ++n) {
        start = std::chrono::steady_clock::now();
        const auto& M = inst.modules[m].module;
        const auto& N = inst.modules[n].module;
        CheckRecord rec;
        rec.name = "oracle_hom_ext";
        rec.inputs = {inst.name, inst.modules[m].name, inst.modules[n].name};
        rec.verdict = Verdict::True;
        auto oh = hom_dims(fin[m], fin[n]);
        auto ph = pipeline_dims(HomModule(M, N).module().hilbert_series());
        std::ostringstream w;
        if (oh != ph) {
          rec.verdict = Verdict::False;
          w << "Hom: pipeline " << dims_string(ph) << " oracle " << dims_string(oh) << "; ";
        }
        ExtComputer E(M, N, i_max);
        for (int i = 0; i <= i_max; ++i) {
          auto oe = ext_dims(res[m], i, fin[n]);
          auto pe = pipeline_dims(E.series(i));
          if (oe != pe) {
            rec.verdict = Verdict::False;
            w << "Ext^" << i << ": pipeline " << dims_string(pe) << " oracle " << dims_string(oe) << "; ";
          }
        }
        rec.witness = rec.verdict == Verdict::True ? "agree for Hom and Ext^0..Ext^" + std::to_string(i_max)
                                                   : w.str();
        rec.timing_ms = ms();
        rep.checks.push_back(std::move(rec));
      }

    const auto Rm = PresentedModule::ring_module(inst.ring);
    for (std::size_t m = 0; m < inst.modules.size(); ++m) {
      start = std::chrono::steady_clock::now();
      const auto& M = inst.modules[m].module;
      CheckRecord rec;
      rec.name = "oracle_reflexivity";
      rec.inputs = {inst.name, inst.modules[m].name};
      bool p_inj = is_injective(lambda_map(M, Rm).map);
      bool o_inj = lambda_kernel_dim(fin[m], A.regular) == 0;
      auto tf = is_n_C_torsionfree(M, Rm, 2);
      auto Tr = transpose(res[m], A.regular);
      Resolution rt(A, Tr, 3);
      bool ok = p_inj == o_inj;
      std::ostringstream w;
      w << "lambda injective: pipeline " << p_inj << " oracle " << o_inj;
      for (int i = 1; i <= 2; ++i) {
        bool p0 = tf.ext_series[i - 1].numerator.is_zero();
        bool o0 = ext_dims(rt, i, A.regular).empty();
        ok = ok && p0 == o0;
        w << "; Ext^" << i << "(Tr M,R)=0: pipeline " << p0 << " oracle " << o0;
      }
      rec.verdict = from_bool(ok);
      rec.witness = w.str();
      rec.timing_ms = ms();
      rep.checks.push_back(std::move(rec));
    }
  }
  return rep;
}

}  // namespace sdw::oracle
