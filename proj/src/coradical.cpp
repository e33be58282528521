// Coradical and group-likes via the dual algebra.
//
// A* has product (e^x e^y)(e_k) = coefficient of e_x (x) e_y in Delta(e_k).
// In characteristic zero its Jacobson radical is the radical of the trace
// form tr(L_u L_v) = tr(L_{uv}), and the coradical of A is the annihilator
// of that radical. Group-likes span the largest subcoalgebra of the
// coradical whose dual is commutative; they are then the common eigenvectors
// of the right translations T_x(w) = w_1 x(w_2).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "hopfforge/hopf.hpp"

namespace hopfforge {

Subspace coradical(const HopfData& A) {
  const int d = A.dim;
  std::vector<CycScalar> t(d);
  for (int i = 0; i < d; ++i)
    for (const auto& [p, c] : A.comult[i])
      if (p % d == i) t[p / d] += c;
  // Gram matrix G = sum_k t(k) Delta(e_k), as columns indexed by y
  std::vector<std::vector<SVec::Entry>> cols(d);
  for (int k = 0; k < d; ++k) {
    if (t[k].is_zero()) continue;
    for (const auto& [p, c] : A.comult[k]) cols[p % d].emplace_back(p / d, t[k] * c);
  }
  std::vector<SVec> images;
  images.reserve(d);
  for (auto& c : cols) images.push_back(SVec::from_entries(std::move(c)));
  Subspace rad = kernel_of_columns(d, images);
  return rad.annihilator();
}

bool is_subcoalgebra(const HopfData& A, const Subspace& U) {
  const int d = A.dim;
  for (const auto& u : U.basis()) {
    SVec D = A.delta(u);
    std::map<int, std::vector<SVec::Entry>> by_right;
    std::map<int, std::vector<SVec::Entry>> by_left;
    for (const auto& [p, c] : D) {
      by_right[p % d].emplace_back(p / d, c);
      by_left[p / d].emplace_back(p % d, c);
    }
    for (auto& [b, e] : by_right)
      if (!U.contains(SVec::from_entries(std::move(e)))) return false;
    for (auto& [a, e] : by_left)
      if (!U.contains(SVec::from_entries(std::move(e)))) return false;
  }
  return true;
}

Subspace skew_primitives(const HopfData& A, const SVec& g, const SVec& h) {
  auto grouplike = [&](const SVec& x) {
    SAccum acc;
    for (const auto& [a, c] : x)
      for (const auto& [b, e] : x) acc.add(A.pair(a, b), c * e);
    return A.eps(x).is_one() && A.delta(x) == acc.take();
  };
  if (!grouplike(g)) throw InvalidGroupLike("g is not group-like: " + A.show(g));
  if (!grouplike(h)) throw InvalidGroupLike("h is not group-like: " + A.show(h));
  std::vector<SVec> images;
  for (int i = 0; i < A.dim; ++i) {
    SAccum acc;
    acc.add(A.comult[i]);
    for (const auto& [b, c] : h) acc.add(A.pair(i, b), -c);
    for (const auto& [a, c] : g) acc.add(A.pair(a, i), -c);
    images.push_back(acc.take());
  }
  return kernel_of_columns(A.dim, images);
}

HopfData dual(const HopfData& A) {
  const int d = A.dim;
  HopfData D;
  D.m = A.m;
  D.dim = d;
  for (int i = 0; i < d; ++i) D.labels.push_back("d(" + A.label(i) + ")");
  D.mult.assign(static_cast<std::size_t>(d) * d, SVec());
  {
    std::vector<std::vector<SVec::Entry>> buf(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k)
      for (const auto& [p, c] : A.comult[k]) buf[p].emplace_back(k, c);
    for (std::size_t p = 0; p < buf.size(); ++p) D.mult[p] = SVec::from_entries(std::move(buf[p]));
  }
  D.unit = A.counit;
  D.comult.assign(d, SVec());
  {
    std::vector<std::vector<SVec::Entry>> buf(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (const auto& [k, c] : A.mul_basis(i, j)) buf[k].emplace_back(A.pair(i, j), c);
    for (int k = 0; k < d; ++k) D.comult[k] = SVec::from_entries(std::move(buf[k]));
  }
  D.counit = A.unit;
  D.antipode.assign(d, SVec());
  {
    std::vector<std::vector<SVec::Entry>> buf(d);
    for (int i = 0; i < d; ++i)
      for (const auto& [k, c] : A.antipode[i]) buf[k].emplace_back(i, c);
    for (int k = 0; k < d; ++k) D.antipode[k] = SVec::from_entries(std::move(buf[k]));
  }
  return D;
}

// ---------------------------------------------------------------- group-likes

namespace {

// Small coalgebra given in its own basis: delta[i] over pair index j*n+k.
struct SmallCoalg {
  int n = 0;
  std::vector<SVec> delta;
};

// Structure constants of a subcoalgebra U (RREF basis) of a coalgebra given
// by `delta` on an ambient basis of size amb.
SmallCoalg restrict_coalg(const std::vector<SVec>& ambient_delta, int amb, const Subspace& U) {
  SmallCoalg c;
  c.n = U.dim();
  const auto& piv = U.pivots();
  std::map<int, int> pos;
  for (int j = 0; j < c.n; ++j) pos[piv[j]] = j;
  for (const auto& r : U.basis()) {
    SAccum acc;
    for (const auto& [i, a] : r) acc.add(a, ambient_delta[i]);
    SVec D = acc.take();
    std::vector<SVec::Entry> e;
    for (const auto& [p, v] : D) {
      auto l = pos.find(p / amb);
      auto rr = pos.find(p % amb);
      if (l != pos.end() && rr != pos.end()) e.emplace_back(l->second * c.n + rr->second, v);
    }
    c.delta.push_back(SVec::from_entries(std::move(e)));
  }
  return c;
}

mpq_class rationalize(double x, bool& ok) {
  ok = false;
  for (long q = 1; q <= 5040; ++q) {
    double p = std::round(x * static_cast<double>(q));
    if (std::abs(x * static_cast<double>(q) - p) < 1e-7 * static_cast<double>(q)) {
      ok = true;
      mpq_class r(static_cast<long>(p), q);
      r.canonicalize();
      return r;
    }
  }
  return 0;
}

// Exact eigenvalues of T proposed by numerical eigenvalues under all complex
// embeddings, matched across embeddings and confirmed exactly.
std::vector<CycScalar> exact_eigenvalues(const Mat& T, const CyclotomicField& F) {
  const int s = T.rows();
  const int m = F.m();
  const int phi = F.phi();
  std::vector<int> reps;
  for (int j : F.embedding_exponents())
    if (phi == 1 || 2 * j < m) reps.push_back(j);
  std::vector<std::vector<std::complex<double>>> eig;
  for (int j : reps) {
    Eigen::MatrixXcd M(s, s);
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) M(a, b) = T(a, b).is_zero() ? 0.0 : T(a, b).embed(j);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
    std::vector<std::complex<double>> ev(es.eigenvalues().data(), es.eigenvalues().data() + s);
    eig.push_back(ev);
  }
  // real linear system: rows Re/Im of sum_i c_i zeta^{ij}
  Eigen::MatrixXd V(phi, phi);
  std::vector<int> eq_rep;
  std::vector<bool> eq_im;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    eq_rep.push_back(static_cast<int>(r));
    eq_im.push_back(false);
    if (phi > 1) {
      eq_rep.push_back(static_cast<int>(r));
      eq_im.push_back(true);
    }
  }
  for (int e = 0; e < phi; ++e)
    for (int i = 0; i < phi; ++i) {
      double ang = 2.0 * M_PI * static_cast<double>(i) * reps[eq_rep[e]] / m;
      V(e, i) = eq_im[e] ? std::sin(ang) : std::cos(ang);
    }
  Eigen::MatrixXd Vinv = V.inverse();

  std::vector<CycScalar> found;
  std::vector<int> choice(reps.size(), 0);
  auto try_choice = [&]() -> bool {
    Eigen::VectorXd rhs(phi);
    for (int e = 0; e < phi; ++e) {
      auto z = eig[eq_rep[e]][choice[eq_rep[e]]];
      rhs(e) = eq_im[e] ? z.imag() : z.real();
    }
    Eigen::VectorXd c = Vinv * rhs;
    std::vector<mpq_class> q;
    for (int i = 0; i < phi; ++i) {
      bool ok = false;
      q.push_back(rationalize(c(i), ok));
      if (!ok) return false;
    }
    CycScalar alpha = F.from_coeffs(q);
    for (const auto& f : found)
      if (f == alpha) return true;
    Mat S = T;
    for (int a = 0; a < s; ++a) S(a, a) -= alpha;
    if (kernel(S).dim() == 0) return false;
    found.push_back(alpha);
    return true;
  };
  for (int first = 0; first < s; ++first) {
    choice.assign(reps.size(), 0);
    choice[0] = first;
    // enumerate the remaining choices
    while (true) {
      if (try_choice()) break;
      std::size_t k = 1;
      while (k < reps.size() && ++choice[k] == s) choice[k++] = 0;
      if (k >= reps.size()) break;
    }
  }
  return found;
}

bool svec_less(const SVec& a, const SVec& b) {
  std::size_t n = std::min(a.nnz(), b.nnz());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.entries()[i];
    const auto& y = b.entries()[i];
    if (x.first != y.first) return x.first < y.first;
    if (x.second != y.second) return x.second.pretty() < y.second.pretty();
  }
  return a.nnz() < b.nnz();
}

}  // namespace

std::vector<SVec> group_likes(const HopfData& A) {
  const int d = A.dim;
  const CyclotomicField& F = A.field();
  Subspace C = coradical(A);
  SmallCoalg cc = restrict_coalg(A.comult, d, C);
  const int c = cc.n;

  // product table of C*: (c^j c^k) = sum_i delta_i[j,k] c^i
  std::vector<std::vector<SVec::Entry>> pb(static_cast<std::size_t>(c) * c);
  for (int i = 0; i < c; ++i)
    for (const auto& [p, v] : cc.delta[i]) pb[p].emplace_back(i, v);
  std::vector<SVec> prod;
  for (auto& e : pb) prod.push_back(SVec::from_entries(std::move(e)));
  auto mulC = [&](const SVec& x, const SVec& y) {
    SAccum acc;
    for (const auto& [j, a] : x)
      for (const auto& [k, b] : y) acc.add(a * b, prod[static_cast<std::size_t>(j) * c + k]);
    return acc.take();
  };
  // commutator ideal of C*
  Echelon ech;
  std::vector<SVec> queue;
  for (int j = 0; j < c; ++j)
    for (int k = j + 1; k < c; ++k) {
      SVec v = prod[static_cast<std::size_t>(j) * c + k] - prod[static_cast<std::size_t>(k) * c + j];
      if (ech.insert(v)) queue.push_back(v);
    }
  std::vector<SVec> ideal = queue;
  while (!queue.empty()) {
    SVec v = std::move(queue.back());
    queue.pop_back();
    for (int l = 0; l < c; ++l) {
      SVec e = SVec::unit(l);
      for (SVec p : {mulC(e, v), mulC(v, e)})
        if (ech.insert(p)) {
          ideal.push_back(p);
          queue.push_back(p);
        }
    }
  }
  Subspace W = Subspace::span(c, ideal).annihilator();  // in C coordinates
  SmallCoalg wc = restrict_coalg(cc.delta, c, W);
  const int s = wc.n;
  auto to_A = [&](const SVec& wcoords) {
    SAccum inC;
    for (const auto& [j, a] : wcoords) inC.add(a, W.basis()[j]);
    SAccum inA;
    for (const auto& [i, a] : inC.take()) inA.add(a, C.basis()[i]);
    return inA.take();
  };

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<SVec> result;
  for (int attempt = 0; attempt < 12 && static_cast<int>(result.size()) < s; ++attempt) {
    std::vector<CycScalar> x(s);
    for (auto& v : x) v = dist(rng);
    Mat T(s, s);
    for (int i = 0; i < s; ++i)
      for (const auto& [p, v] : wc.delta[i]) {
        int j = p / s;
        int k = p % s;
        if (!x[k].is_zero()) T(j, i) += v * x[k];
      }
    auto vals = exact_eigenvalues(T, F);
    std::vector<SVec> cand;
    bool clean = true;
    for (const auto& alpha : vals) {
      Mat S = T;
      for (int a = 0; a < s; ++a) S(a, a) -= alpha;
      Subspace k = kernel(S);
      if (k.dim() != 1) {
        clean = false;
        break;
      }
      SVec g = to_A(k.basis()[0]);
      CycScalar e = A.eps(g);
      if (e.is_zero()) {
        clean = false;
        break;
      }
      g *= e.inverse();
      SAccum gg;
      for (const auto& [a, u] : g)
        for (const auto& [b, v] : g) gg.add(A.pair(a, b), u * v);
      if (A.delta(g) != gg.take()) {
        clean = false;
        break;
      }
      cand.push_back(g);
    }
    if (clean && static_cast<int>(cand.size()) == s) result = cand;
  }
  std::sort(result.begin(), result.end(), svec_less);
  return result;
}

}  // namespace hopfforge
