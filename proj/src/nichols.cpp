#include "hopfforge/nichols.hpp"

#include <algorithm>

namespace hopfforge {

namespace {

std::vector<int> elements(std::uint32_t mask) {
  std::vector<int> out;
  for (int a = 0; mask != 0; ++a, mask >>= 1)
    if (mask & 1U) out.push_back(a);
  return out;
}

// sum over pair-index terms of x: f(left, right, coeff)
template <class Fn>
void for_pairs(const SVec& x, int dim, Fn&& f) {
  for (const auto& [p, c] : x) f(p / dim, p % dim, c);
}

}  // namespace

SVec braided_tensor_mul(const NicholsData& B, const SVec& x, const SVec& y) {
  const int D = B.dim;
  const YDModule& Y = B.yd;
  SAccum acc;
  for_pairs(x, D, [&](int a, int b, const CycScalar& cx) {
    for_pairs(y, D, [&](int c, int d, const CycScalar& cy) {
      CycScalar cc = cx * cy;
      for_pairs(Y.coaction[b], D, [&](int h, int b0, const CycScalar& cl) {
        SVec hc = Y.act(h, c);
        if (hc.is_zero()) return;
        SVec left = B.algebra.mul(SVec::unit(a), hc);
        const SVec& right = B.algebra.mul_basis(b0, d);
        for (const auto& [l, lc] : left)
          for (const auto& [r, rc] : right) acc.add(l * D + r, cc * cl * lc * rc);
      });
    });
  });
  return acc.take();
}

NicholsData build_nichols(const YDModule& M0) {
  NicholsData B;
  B.M = change_H_basis(M0, HBasis::Theta);
  const YDModule& M = B.M;
  const int d = M.dim;
  if (d > 16) throw UnsupportedModule("too many generators for an explicit basis");
  B.d = d;
  B.dim = 1 << d;
  const int D = B.dim;

  // braiding scalars, read off c_{M,M}
  Mat C = braiding(M, M);
  B.q.assign(static_cast<std::size_t>(d) * d, CycScalar(0));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      SVec col = C.column(a * d + b);
      if (col.nnz() != 1 || col.leading() != b * d + a)
        throw UnsupportedModule("braiding is not diagonal on " + M.label(a) + "," + M.label(b));
      B.q[a * d + b] = col.at(b * d + a);
    }
  for (int a = 0; a < d; ++a) {
    if (B.q[a * d + a] != CycScalar(-1)) throw UnsupportedModule("c(x (x) x) != -x (x) x for " + M.label(a));
    for (int b = 0; b < d; ++b)
      if (!(B.q[a * d + b] * B.q[b * d + a]).is_one())
        throw UnsupportedModule("braiding is not symmetric on " + M.label(a) + "," + M.label(b));
  }

  for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(D); ++s) B.masks.push_back(s);
  std::sort(B.masks.begin(), B.masks.end(), [](std::uint32_t x, std::uint32_t y) {
    int px = __builtin_popcount(x);
    int py = __builtin_popcount(y);
    if (px != py) return px < py;
    return elements(x) < elements(y);
  });
  for (int i = 0; i < D; ++i) B.index_of[B.masks[i]] = i;

  HopfData& A = B.algebra;
  A.m = M.F->g.m;
  A.dim = D;
  std::vector<int> deg(D);
  for (int i = 0; i < D; ++i) {
    deg[i] = B.degree(i);
    std::string l;
    for (int a : elements(B.masks[i])) l += M.label(a);
    A.labels.push_back(l.empty() ? "1" : l);
  }
  A.grading = deg;
  A.unit = SVec::unit(0);
  A.counit = SVec::unit(0);
  A.mult.assign(static_cast<std::size_t>(D) * D, SVec());
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      std::uint32_t s = B.masks[i];
      std::uint32_t t = B.masks[j];
      if (s & t) continue;
      CycScalar c(1);
      for (int a : elements(s))
        for (int b : elements(t))
          if (a > b) c = c * B.q[a * d + b];
      A.mult[static_cast<std::size_t>(i) * D + j] = SVec::unit(B.index_of.at(s | t), c);
    }

  // B as a YD module, built up from the generators
  const HopfData& H = M.H();
  const int hd = H.dim;
  YDModule& Y = B.yd;
  Y.F = M.F;
  Y.basis = HBasis::Theta;
  Y.dim = D;
  Y.labels = A.labels;
  Y.degrees = deg;
  Y.action.assign(static_cast<std::size_t>(hd) * D, SVec());
  Y.coaction.assign(D, SVec());
  auto from_M = [&](const SVec& v) { return v.reindex([&](int a) { return B.generator(a); }); };
  auto pr_M = [&](const SVec& v) {
    return v.reindex([&](int p) { return (p / d) * D + B.generator(p % d); });
  };
  for (int h = 0; h < hd; ++h) Y.action[static_cast<std::size_t>(h) * D] = SVec::unit(0, H.counit.at(h));
  Y.coaction[0] = H.unit.reindex([D](int h) { return h * D; });
  for (int a = 0; a < d; ++a) {
    int i = B.generator(a);
    for (int h = 0; h < hd; ++h) Y.action[static_cast<std::size_t>(h) * D + i] = from_M(M.act(h, a));
    Y.coaction[i] = pr_M(M.coaction[a]);
  }
  A.comult.assign(D, SVec());
  A.antipode.assign(D, SVec());
  A.comult[0] = SVec::unit(0);
  A.antipode[0] = SVec::unit(0);
  for (int a = 0; a < d; ++a) {
    int i = B.generator(a);
    A.comult[i] = SVec::from_entries({{i * D, 1}, {i, 1}});
    A.antipode[i] = SVec::unit(i, -1);
  }
  for (int i = d + 1; i < D; ++i) {
    auto el = elements(B.masks[i]);
    int x = B.generator(el.front());
    int rest = B.index_of.at(B.masks[i] & ~(1U << el.front()));
    // x_S = x_a x_T with a = min S, coefficient 1
    for (int h = 0; h < hd; ++h) {
      SAccum acc;
      for_pairs(H.comult[h], hd, [&](int h1, int h2, const CycScalar& c) {
        SVec l = Y.act(h1, x);
        if (l.is_zero()) return;
        acc.add(c, A.mul(l, Y.act(h2, rest)));
      });
      Y.action[static_cast<std::size_t>(h) * D + i] = acc.take();
    }
    SAccum co;
    for_pairs(Y.coaction[x], D, [&](int h, int u, const CycScalar& c) {
      for_pairs(Y.coaction[rest], D, [&](int h2, int w, const CycScalar& c2) {
        SVec hh = H.mul_basis(h, h2);
        const SVec& uw = A.mul_basis(u, w);
        for (const auto& [p, pc] : hh)
          for (const auto& [q, qc] : uw) co.add(p * D + q, c * c2 * pc * qc);
      });
    });
    Y.coaction[i] = co.take();
    A.comult[i] = braided_tensor_mul(B, A.comult[x], A.comult[rest]);
    // S(x y) = S(x_(-1) . y) S(x_(0))
    SAccum s;
    for_pairs(Y.coaction[x], D, [&](int h, int u, const CycScalar& c) {
      SVec hy = Y.act(h, rest);
      if (hy.is_zero()) return;
      s.add(c, A.mul(A.S(hy), A.antipode[u]));
    });
    A.antipode[i] = s.take();
  }

  std::vector<SVec> rel;
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) rel.push_back(SVec::unit(a * d + b) + SVec::unit(b * d + a, -B.q[a * d + b]));
  B.relations = Subspace::span(d * d, rel);
  return B;
}

Subspace braided_primitives(const NicholsData& B) {
  const int D = B.dim;
  std::vector<SVec> images;
  for (int i = 0; i < D; ++i) images.push_back(B.algebra.comult[i] - SVec::unit(i * D) - SVec::unit(i));
  return kernel_of_columns(D, images);
}

Report verify_nichols(const NicholsData& B) {
  Report rep;
  rep.title = "nichols";
  const HopfData& A = B.algebra;
  const int D = B.dim;
  rep.add("dim", D == (1 << B.d), {}, std::to_string(D));
  std::string w;
  for (int i = 0; i < D && w.empty(); ++i)
    for (int j = 0; j < D && w.empty(); ++j)
      for (int k = 0; k < D && w.empty(); ++k)
        if (A.mul(A.mul_basis(i, j), SVec::unit(k)) != A.mul(SVec::unit(i), A.mul_basis(j, k)))
          w = A.label(i) + "," + A.label(j) + "," + A.label(k);
  rep.add("associativity", w.empty(), w);
  rep.merge(verify_coalgebra(A), "braided.");
  w.clear();
  for (int i = 0; i < D && w.empty(); ++i)
    for (int j = 0; j < D && w.empty(); ++j)
      if (braided_tensor_mul(B, A.comult[i], A.comult[j]) != A.delta(A.mul_basis(i, j)))
        w = A.label(i) + "," + A.label(j);
  rep.add("braided.multiplicativity", w.empty(), w);
  w.clear();
  for (int i = 0; i < D && w.empty(); ++i) {
    SAccum l;
    SAccum r;
    for_pairs(A.comult[i], D, [&](int a, int b, const CycScalar& c) {
      l.add(c, A.mul(A.antipode[a], SVec::unit(b)));
      r.add(c, A.mul(SVec::unit(a), A.antipode[b]));
    });
    SVec e = SVec::unit(0, A.counit.at(i));
    if (l.take() != e || r.take() != e) w = A.label(i);
  }
  rep.add("braided.antipode", w.empty(), w);
  rep.merge(verify_yd(B.yd), "yd.");
  std::vector<SVec> deg1;
  for (int a = 0; a < B.d; ++a) deg1.push_back(SVec::unit(B.generator(a)));
  Subspace P = braided_primitives(B);
  rep.add("primitives_are_degree_one", P == Subspace::span(D, deg1), {}, "dim P = " + std::to_string(P.dim()));
  return rep;
}

// ------------------------------------------------------------ bosonization

Bosonization bosonize(const NicholsData& B) {
  Bosonization X;
  X.B = B;
  X.F = B.M.F;
  const HopfData& H = X.F->theta;
  const HopfData& Bb = B.algebra;
  const YDModule& Y = B.yd;
  const int hd = H.dim;
  const int D = B.dim;
  const int n = D * hd;
  HopfData& A = X.A;
  A.m = H.m;
  A.dim = n;
  std::vector<int> grading(n);
  for (int b = 0; b < D; ++b)
    for (int t = 0; t < hd; ++t) {
      A.labels.push_back(Bb.label(b) + "#" + H.label(t));
      grading[X.index(b, t)] = B.degree(b);
    }
  A.grading = grading;
  A.unit = H.unit.reindex([&](int t) { return X.index(0, t); });
  {
    SAccum e;
    for (const auto& [t, c] : H.counit) e.add(X.index(0, t), c);
    A.counit = e.take();
  }

  // (g . c) (x) g2 terms, per (g, c)
  struct Term {
    int c;
    int g2;
    CycScalar k;
  };
  std::vector<std::vector<Term>> moved(static_cast<std::size_t>(hd) * D);
  for (int g = 0; g < hd; ++g)
    for (int c = 0; c < D; ++c)
      for_pairs(H.comult[g], hd, [&](int g1, int g2, const CycScalar& k) {
        for (const auto& [c2, kc] : Y.act(g1, c)) moved[static_cast<std::size_t>(g) * D + c].push_back({c2, g2, k * kc});
      });
  A.mult.assign(static_cast<std::size_t>(n) * n, SVec());
  for (int b = 0; b < D; ++b)
    for (int g = 0; g < hd; ++g)
      for (int c = 0; c < D; ++c) {
        const auto& terms = moved[static_cast<std::size_t>(g) * D + c];
        if (terms.empty()) continue;
        for (int h = 0; h < hd; ++h) {
          SAccum acc;
          for (const auto& tm : terms) {
            const SVec& bc = Bb.mul_basis(b, tm.c);
            if (bc.is_zero()) continue;
            const SVec& gh = H.mul_basis(tm.g2, h);
            for (const auto& [u, uc] : bc)
              for (const auto& [v, vc] : gh) acc.add(X.index(u, v), tm.k * uc * vc);
          }
          A.mult[static_cast<std::size_t>(X.index(b, g)) * n + X.index(c, h)] = acc.take();
        }
      }

  // Delta(b # g) = b1 # (b2)_(-1) g1 (x) (b2)_(0) # g2
  A.comult.assign(n, SVec());
  for (int b = 0; b < D; ++b)
    for (int g = 0; g < hd; ++g) {
      SAccum acc;
      for_pairs(Bb.comult[b], D, [&](int b1, int b2, const CycScalar& c) {
        for_pairs(Y.coaction[b2], D, [&](int h, int b0, const CycScalar& c2) {
          for_pairs(H.comult[g], hd, [&](int g1, int g2, const CycScalar& c3) {
            for (const auto& [t, ct] : H.mul_basis(h, g1))
              acc.add(A.pair(X.index(b1, t), X.index(b0, g2)), c * c2 * c3 * ct);
          });
        });
      });
      A.comult[X.index(b, g)] = acc.take();
    }

  // S(b # g) = (1 # S(b_(-1) g)) (S_B(b_(0)) # 1)
  A.antipode.assign(n, SVec());
  for (int b = 0; b < D; ++b)
    for (int g = 0; g < hd; ++g) {
      SAccum acc;
      for_pairs(Y.coaction[b], D, [&](int h, int b0, const CycScalar& c) {
        SVec left = H.S(H.mul_basis(h, g)).reindex([&](int t) { return X.index(0, t); });
        SAccum r;
        for (const auto& [u, uc] : Bb.antipode[b0])
          for (const auto& [t, tc] : H.unit) r.add(X.index(u, t), uc * tc);
        acc.add(c, A.mul(left, r.take()));
      });
      A.antipode[X.index(b, g)] = acc.take();
    }

  X.pi.assign(n, SVec());
  for (int t = 0; t < hd; ++t) X.pi[X.index(0, t)] = SVec::unit(t);
  for (int t = 0; t < hd; ++t) X.iota.push_back(SVec::unit(X.index(0, t)));
  return X;
}

Subspace coinvariants(const HopfData& A, const std::vector<SVec>& pi, const HopfData& H) {
  const int hd = H.dim;
  std::vector<SVec> images;
  for (int a = 0; a < A.dim; ++a) {
    SAccum acc;
    for_pairs(A.comult[a], A.dim, [&](int u, int v, const CycScalar& c) {
      for (const auto& [t, ct] : pi[v]) acc.add(u * hd + t, c * ct);
    });
    for (const auto& [t, ct] : H.unit) acc.add(a * hd + t, -ct);
    images.push_back(acc.take());
  }
  return kernel_of_columns(A.dim, images);
}

Subspace coinvariants(const Bosonization& X) { return coinvariants(X.A, X.pi, X.F->theta); }

Report verify_bosonization(const Bosonization& X) {
  Report rep;
  rep.title = "bosonization";
  const HopfData& A = X.A;
  const HopfData& H = X.F->theta;
  const int hd = H.dim;
  auto pi = [&](const SVec& a) {
    SAccum acc;
    for (const auto& [i, c] : a) acc.add(c, X.pi[i]);
    return acc.take();
  };
  auto iota = [&](const SVec& h) {
    SAccum acc;
    for (const auto& [t, c] : h) acc.add(c, X.iota[t]);
    return acc.take();
  };
  auto tensor_map = [](const SVec& xy, int din, int dout, auto&& f) {
    SAccum acc;
    for (const auto& [p, c] : xy) {
      SVec l = f(SVec::unit(p / din));
      SVec r = f(SVec::unit(p % din));
      for (const auto& [i, a] : l)
        for (const auto& [j, b] : r) acc.add(i * dout + j, c * a * b);
    }
    return acc.take();
  };
  std::string w;
  for (int t = 0; t < hd && w.empty(); ++t)
    if (pi(X.iota[t]) != SVec::unit(t)) w = H.label(t);
  rep.add("pi.iota", w.empty(), w);

  w.clear();
  for (int s = 0; s < hd && w.empty(); ++s) {
    for (int t = 0; t < hd && w.empty(); ++t)
      if (iota(H.mul_basis(s, t)) != A.mul(X.iota[s], X.iota[t])) w = H.label(s) + "," + H.label(t);
    if (w.empty() && tensor_map(H.comult[s], hd, A.dim, iota) != A.delta(X.iota[s])) w = H.label(s);
    if (w.empty() && iota(H.antipode[s]) != A.S(X.iota[s])) w = H.label(s);
    if (w.empty() && A.eps(X.iota[s]) != H.counit.at(s)) w = H.label(s);
  }
  rep.add("iota.hopf_map", w.empty(), w);

  w.clear();
  for (int a = 0; a < A.dim && w.empty(); ++a) {
    if (tensor_map(A.comult[a], A.dim, hd, pi) != H.delta(X.pi[a])) w = A.label(a);
    if (w.empty() && pi(A.antipode[a]) != H.S(X.pi[a])) w = A.label(a);
    if (w.empty() && A.counit.at(a) != H.eps(X.pi[a])) w = A.label(a);
  }
  // multiplicativity of pi on algebra generators suffices
  std::vector<int> gens = algebra_generators(A);
  for (int g : gens)
    for (int a = 0; a < A.dim && w.empty(); ++a)
      if (pi(A.mul_basis(g, a)) != H.mul(X.pi[g], X.pi[a])) w = A.label(g) + "," + A.label(a);
  rep.add("pi.hopf_map", w.empty(), w);

  Subspace co = coinvariants(X);
  std::vector<SVec> b1;
  for (int b = 0; b < X.B.dim; ++b) {
    SAccum acc;
    for (const auto& [t, c] : H.unit) acc.add(X.index(b, t), c);
    b1.push_back(acc.take());
  }
  rep.add("coinvariants", co == Subspace::span(A.dim, b1), {}, "dim " + std::to_string(co.dim()));
  rep.add("coinvariants.dim", co.dim() * hd == A.dim);
  return rep;
}

// ------------------------------------------------------------ M(B)

MBResult compute_MB(int dim, const std::vector<SVec>& mult, const std::vector<int>& plus) {
  MBResult r;
  r.ambient = dim * dim;
  auto mul = [&](int i, int j) -> const SVec& { return mult[static_cast<std::size_t>(i) * dim + j]; };
  std::vector<SVec> rel;
  for (int x : plus)
    for (int y : plus)
      for (int z : plus) {
        SAccum acc;
        for (const auto& [u, c] : mul(x, y)) acc.add(u * dim + z, c);
        for (const auto& [u, c] : mul(y, z)) acc.add(x * dim + u, -c);
        SVec v = acc.take();
        if (!v.is_zero()) rel.push_back(std::move(v));
      }
  r.relations = Subspace::span(r.ambient, rel);
  std::vector<SVec> images;
  std::vector<int> pos;
  for (int x : plus)
    for (int y : plus) {
      images.push_back(mul(x, y));
      pos.push_back(x * dim + y);
    }
  Subspace K = kernel_of_columns(static_cast<int>(images.size()), images);
  std::vector<SVec> ker;
  for (const auto& v : K.basis()) ker.push_back(v.reindex([&](int i) { return pos[i]; }));
  Subspace total = Subspace::span(r.ambient, ker).sum(r.relations);
  r.dim = total.dim() - r.relations.dim();
  Echelon e;
  for (const auto& v : r.relations.basis()) e.insert(v);
  for (const auto& v : total.basis())
    if (e.insert(v)) r.lifted.push_back(v);
  return r;
}

MBResult compute_MB(const NicholsData& B) {
  std::vector<int> plus;
  for (int i = 1; i < B.dim; ++i) plus.push_back(i);
  return compute_MB(B.dim, B.algebra.mult, plus);
}

YDModule mb_module(const NicholsData& B) {
  // R sits in M (x) M, a YD submodule; it maps onto M(B), so equal
  // dimensions make the map an isomorphism of YD modules.
  MBResult mb = compute_MB(B);
  if (mb.dim != B.relations.dim())
    throw DimensionMismatch("M(B) has dimension " + std::to_string(mb.dim) + ", R has " + std::to_string(B.relations.dim()));
  return submodule(tensor_product(B.M, B.M), B.relations, "r");
}

}  // namespace hopfforge
