#include "hopfforge/yd.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hopfforge {

std::shared_ptr<const FunctionAlgebra> function_algebra(const GroupDatum& g) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FunctionAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[g.m];
  if (!slot) slot = std::make_shared<const FunctionAlgebra>(build_function_algebra(g));
  return slot;
}

SVec YDModule::act(const SVec& h, const SVec& v) const {
  SAccum acc;
  for (const auto& [a, c] : h)
    for (const auto& [b, d] : v) acc.add(c * d, act(a, b));
  return acc.take();
}

// ------------------------------------------------------------ index sets

namespace {

// w^e == -1 exactly when e = n mod m
bool is_minus_one(const GroupDatum& g, long e) { return g.mod(e) == g.n; }
bool is_one(const GroupDatum& g, long e) { return g.mod(e) == 0; }

std::string pair_str(IndexPair p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

}  // namespace

bool in_J(const GroupDatum& g, int i, int k) {
  return i >= 1 && i < g.n && k >= 1 && k < g.m && is_minus_one(g, static_cast<long>(i) * k);
}

std::vector<IndexPair> enumerate_J(const GroupDatum& g) {
  std::vector<IndexPair> out;
  for (int i = 1; i < g.n; ++i)
    for (int k = 1; k < g.m; ++k)
      if (in_J(g, i, k)) out.emplace_back(i, k);
  return out;
}

IndexDatumI validate_I(const GroupDatum& g, std::vector<IndexPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t s = 0; s < pairs.size(); ++s)
    if (!in_J(g, pairs[s].first, pairs[s].second))
      throw ValidationError("NotInJ", static_cast<int>(s), -1, pair_str(pairs[s]) + " is not in J");
  for (std::size_t s = 0; s < pairs.size(); ++s)
    for (std::size_t t = s + 1; t < pairs.size(); ++t) {
      long e = static_cast<long>(pairs[s].first) * pairs[t].second + static_cast<long>(pairs[t].first) * pairs[s].second;
      if (!is_one(g, e))
        throw ValidationError("CompatibilityFailed", static_cast<int>(s), static_cast<int>(t),
                              pair_str(pairs[s]) + " and " + pair_str(pairs[t]));
    }
  return {std::move(pairs)};
}

IndexDatumL validate_L(const GroupDatum& g, std::vector<int> ells) {
  std::sort(ells.begin(), ells.end());
  for (std::size_t s = 0; s < ells.size(); ++s) {
    int l = ells[s];
    if (l < 1 || l >= g.n)
      throw ValidationError("EllOutOfRange", static_cast<int>(s), -1, "l=" + std::to_string(l));
    if (l % 2 == 0) throw ValidationError("EllNotOdd", static_cast<int>(s), -1, "l=" + std::to_string(l));
  }
  return {std::move(ells)};
}

IndexDatumK validate_K(const GroupDatum& g, std::vector<IndexPair> pairs, std::vector<int> ells) {
  IndexDatumK K{validate_I(g, std::move(pairs)), validate_L(g, std::move(ells))};
  const auto& P = K.I.pairs;
  for (std::size_t j = 0; j < P.size(); ++j)
    if (P[j].second % 2 == 0)
      throw ValidationError("KNotOdd", static_cast<int>(j), -1, pair_str(P[j]));
  for (std::size_t j = 0; j < P.size(); ++j)
    for (std::size_t t = 0; t < K.L.ells.size(); ++t)
      if (!is_minus_one(g, static_cast<long>(P[j].first) * K.L.ells[t]))
        throw ValidationError("MixedConditionFailed", static_cast<int>(j), static_cast<int>(t),
                              pair_str(P[j]) + " with l=" + std::to_string(K.L.ells[t]));
  return K;
}

namespace {

bool compatible(const GroupDatum& g, IndexPair a, IndexPair b) {
  return is_one(g, static_cast<long>(a.first) * b.second + static_cast<long>(b.first) * a.second);
}

void grow_I(const GroupDatum& g, const std::vector<IndexPair>& J, std::size_t from, int max_rank,
            std::vector<IndexPair>& cur, std::vector<IndexDatumI>& out) {
  if (!cur.empty()) out.push_back({cur});
  if (static_cast<int>(cur.size()) >= max_rank) return;
  for (std::size_t x = from; x < J.size(); ++x) {
    bool ok = std::all_of(cur.begin(), cur.end(), [&](IndexPair p) { return compatible(g, p, J[x]); });
    if (!ok) continue;
    cur.push_back(J[x]);
    grow_I(g, J, x, max_rank, cur, out);
    cur.pop_back();
  }
}

void grow_L(const std::vector<int>& odd, std::size_t from, int max_rank, std::vector<int>& cur,
            std::vector<IndexDatumL>& out) {
  if (!cur.empty()) out.push_back({cur});
  if (static_cast<int>(cur.size()) >= max_rank) return;
  for (std::size_t x = from; x < odd.size(); ++x) {
    cur.push_back(odd[x]);
    grow_L(odd, x, max_rank, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IndexDatumI> enumerate_I(const GroupDatum& g, int max_rank) {
  std::vector<IndexDatumI> out;
  std::vector<IndexPair> cur;
  grow_I(g, enumerate_J(g), 0, max_rank, cur, out);
  return out;
}

std::vector<IndexDatumL> enumerate_L(const GroupDatum& g, int max_rank) {
  std::vector<int> odd;
  for (int l = 1; l < g.n; l += 2) odd.push_back(l);
  std::vector<IndexDatumL> out;
  std::vector<int> cur;
  grow_L(odd, 0, max_rank, cur, out);
  return out;
}

std::vector<IndexDatumK> enumerate_K(const GroupDatum& g, int max_rank) {
  std::vector<IndexDatumK> out;
  if (max_rank < 2) return out;
  for (const auto& I : enumerate_I(g, max_rank - 1))
    for (const auto& L : enumerate_L(g, max_rank - static_cast<int>(I.pairs.size()))) {
      try {
        out.push_back(validate_K(g, I.pairs, L.ells));
      } catch (const ValidationError&) {
      }
    }
  return out;
}

// ------------------------------------------------------------ constructors

namespace {

YDModule empty_module(const GroupDatum& g, int dim) {
  YDModule M;
  M.F = function_algebra(g);
  M.basis = HBasis::Theta;
  M.dim = dim;
  M.action.assign(static_cast<std::size_t>(M.F->dim()) * dim, SVec());
  M.coaction.assign(dim, SVec());
  M.degrees.assign(dim, 1);
  return M;
}

// Two-dimensional module: theta_{0,r} acts by w^{r a1} on v1 and w^{r a2} on
// v2, theta_{1,r} by zero; lambda(v1) = th_{0,-c} v1 + th_{1,c} v2,
// lambda(v2) = th_{1,-c} v1 + th_{0,c} v2.
YDModule two_dim(const GroupDatum& g, long a1, long a2, int c, std::vector<std::string> labels) {
  YDModule M = empty_module(g, 2);
  const auto& ix = M.F->ix;
  const auto& K = g.field();
  for (int r = 0; r < g.m; ++r) {
    int t = ix.idx(0, r);
    M.action[static_cast<std::size_t>(t) * 2 + 0] = SVec::unit(0, K.root_power(r * a1));
    M.action[static_cast<std::size_t>(t) * 2 + 1] = SVec::unit(1, K.root_power(r * a2));
  }
  auto pr = [&](int h, int v) { return h * 2 + v; };
  M.coaction[0] = SVec::from_entries({{pr(ix.idx(0, -c), 0), 1}, {pr(ix.idx(1, c), 1), 1}});
  M.coaction[1] = SVec::from_entries({{pr(ix.idx(1, -c), 0), 1}, {pr(ix.idx(0, c), 1), 1}});
  M.labels = std::move(labels);
  return M;
}

}  // namespace

YDModule build_M_ik(const GroupDatum& g, int i, int k, HBasis basis) {
  if (!in_J(g, i, k)) throw ValidationError("NotInJ", 0, -1, pair_str({i, k}) + " is not in J");
  std::string s = "[" + std::to_string(i) + "," + std::to_string(k) + "]";
  YDModule M = two_dim(g, -i, i, k, {"y1" + s, "y2" + s});
  return basis == HBasis::Theta ? M : change_H_basis(M, basis);
}

YDModule build_M_ell(const GroupDatum& g, int ell, HBasis basis) {
  validate_L(g, {ell});
  std::string s = "[" + std::to_string(ell) + "]";
  YDModule M = two_dim(g, g.n, g.n, ell, {"x1" + s, "x2" + s});
  return basis == HBasis::Theta ? M : change_H_basis(M, basis);
}

YDModule zero_module(const GroupDatum& g, HBasis basis) {
  YDModule M = empty_module(g, 0);
  return basis == HBasis::Theta ? M : change_H_basis(M, basis);
}

YDModule direct_sum(const std::vector<YDModule>& parts) {
  if (parts.empty()) throw DimensionMismatch("direct_sum of no modules");
  const YDModule& f = parts.front();
  int dim = 0;
  for (const auto& p : parts) {
    if (p.F->g.m != f.F->g.m || p.basis != f.basis) throw BaseMismatch("direct_sum over different bases");
    dim += p.dim;
  }
  const int hd = f.hdim();
  YDModule M;
  M.F = f.F;
  M.basis = f.basis;
  M.dim = dim;
  M.action.assign(static_cast<std::size_t>(hd) * dim, SVec());
  M.coaction.assign(dim, SVec());
  std::map<std::string, int> seen;
  int off = 0;
  for (const auto& p : parts) {
    auto shift = [off](int v) { return v + off; };
    for (int h = 0; h < hd; ++h)
      for (int v = 0; v < p.dim; ++v) M.action[static_cast<std::size_t>(h) * dim + off + v] = p.act(h, v).reindex(shift);
    for (int v = 0; v < p.dim; ++v) {
      M.coaction[off + v] = p.coaction[v].reindex([&](int q) { return (q / p.dim) * dim + off + q % p.dim; });
      M.degrees.push_back(p.degrees[v]);
      std::string l = p.label(v);
      int c = seen[l]++;
      M.labels.push_back(c == 0 ? l : l + "#" + std::to_string(c));
    }
    off += p.dim;
  }
  return M;
}

YDModule build_M_I(const GroupDatum& g, const IndexDatumI& I, HBasis basis) {
  validate_I(g, I.pairs);
  if (I.pairs.empty()) return zero_module(g, basis);
  std::vector<YDModule> parts;
  for (auto [i, k] : I.pairs) parts.push_back(build_M_ik(g, i, k, basis));
  return direct_sum(parts);
}

YDModule build_M_L(const GroupDatum& g, const IndexDatumL& L, HBasis basis) {
  validate_L(g, L.ells);
  if (L.ells.empty()) return zero_module(g, basis);
  std::vector<YDModule> parts;
  for (int l : L.ells) parts.push_back(build_M_ell(g, l, basis));
  return direct_sum(parts);
}

YDModule build_M_IL(const GroupDatum& g, const IndexDatumK& K, HBasis basis) {
  validate_K(g, K.I.pairs, K.L.ells);
  std::vector<YDModule> parts;
  for (auto [i, k] : K.I.pairs) parts.push_back(build_M_ik(g, i, k, basis));
  for (int l : K.L.ells) parts.push_back(build_M_ell(g, l, basis));
  if (parts.empty()) return zero_module(g, basis);
  return direct_sum(parts);
}

// ------------------------------------------------------------ basis changes

YDModule change_H_basis(const YDModule& M, HBasis target) {
  if (M.basis == target) return M;
  const FunctionAlgebra& F = *M.F;
  const int hd = F.dim();
  // new basis element p, written in the old basis of H
  auto new_in_old = [&](int p) {
    return target == HBasis::Phi ? F.phi_to_theta(SVec::unit(p)) : F.theta_to_phi(SVec::unit(p));
  };
  auto old_in_new = [&](int t) {
    return target == HBasis::Phi ? F.theta_to_phi(SVec::unit(t)) : F.phi_to_theta(SVec::unit(t));
  };
  YDModule N = M;
  N.basis = target;
  for (int p = 0; p < hd; ++p) {
    SVec h = new_in_old(p);
    for (int v = 0; v < M.dim; ++v) {
      SAccum acc;
      for (const auto& [t, c] : h) acc.add(c, M.act(t, v));
      N.action[static_cast<std::size_t>(p) * M.dim + v] = acc.take();
    }
  }
  std::vector<SVec> conv(hd);
  for (int t = 0; t < hd; ++t) conv[t] = old_in_new(t);
  for (int v = 0; v < M.dim; ++v) {
    SAccum acc;
    for (const auto& [q, c] : M.coaction[v]) {
      int w = q % M.dim;
      for (const auto& [p, d] : conv[q / M.dim]) acc.add(p * M.dim + w, c * d);
    }
    N.coaction[v] = acc.take();
  }
  return N;
}

namespace {

Mat inverse(const Mat& P) {
  const int n = P.rows();
  if (P.cols() != n) throw DimensionMismatch("inverse of a non-square matrix");
  Mat inv(n, n);
  for (int i = 0; i < n; ++i) {
    Vec e(n, CycScalar(0));
    e[i] = 1;
    auto x = solve(P, e);
    if (!x || rank(P) != n) throw NotInvertible("change of basis is singular");
    for (int r = 0; r < n; ++r) inv(r, i) = (*x)[r];
  }
  return inv;
}

SVec mat_apply(const Mat& A, const SVec& v) {
  SAccum acc;
  for (const auto& [j, c] : v) acc.add(c, A.column(j));
  return acc.take();
}

}  // namespace

YDModule change_V_basis(const YDModule& M, const Mat& P, std::vector<std::string> labels) {
  if (P.rows() != M.dim || P.cols() != M.dim) throw DimensionMismatch("change_V_basis");
  Mat Q = inverse(P);
  const int d = M.dim;
  YDModule N = M;
  N.labels = std::move(labels);
  for (int h = 0; h < M.hdim(); ++h)
    for (int j = 0; j < d; ++j) N.action[static_cast<std::size_t>(h) * d + j] = mat_apply(Q, M.act(SVec::unit(h), P.column(j)));
  for (int j = 0; j < d; ++j) {
    SAccum acc;
    for (const auto& [i, c] : P.column(j))
      for (const auto& [q, e] : M.coaction[i]) {
        int h = q / d;
        for (const auto& [w, f] : Q.column(q % d)) acc.add(h * d + w, c * e * f);
      }
    N.coaction[j] = acc.take();
  }
  return N;
}

// ------------------------------------------------------------ axioms

Report verify_yd(const YDModule& M) {
  Report rep;
  rep.title = "yd";
  const HopfData& H = M.H();
  const int hd = H.dim;
  const int d = M.dim;
  std::string w;

  for (int v = 0; v < d && w.empty(); ++v)
    if (M.act(H.unit, SVec::unit(v)) != SVec::unit(v)) w = M.label(v);
  rep.add("module.unit", w.empty(), w);

  w.clear();
  for (int a = 0; a < hd && w.empty(); ++a)
    for (int b = 0; b < hd && w.empty(); ++b)
      for (int v = 0; v < d && w.empty(); ++v)
        if (M.act(H.mul_basis(a, b), SVec::unit(v)) != M.act(SVec::unit(a), M.act(b, v)))
          w = H.label(a) + "," + H.label(b) + "," + M.label(v);
  rep.add("module.associativity", w.empty(), w);

  // (Delta (x) id) lambda = (id (x) lambda) lambda, triple index (a*hd + b)*d + w
  w.clear();
  for (int v = 0; v < d && w.empty(); ++v) {
    SAccum l;
    SAccum r;
    for (const auto& [q, c] : M.coaction[v]) {
      int h = q / d;
      int x = q % d;
      for (const auto& [p, e] : H.comult[h]) l.add(p * d + x, c * e);
      for (const auto& [p, e] : M.coaction[x]) r.add((h * hd + p / d) * d + p % d, c * e);
    }
    if (l.take() != r.take()) w = M.label(v);
  }
  rep.add("comodule.coassociativity", w.empty(), w);

  w.clear();
  for (int v = 0; v < d && w.empty(); ++v) {
    SAccum acc;
    for (const auto& [q, c] : M.coaction[v]) acc.add(q % d, c * H.counit.at(q / d));
    if (acc.take() != SVec::unit(v)) w = M.label(v);
  }
  rep.add("comodule.counit", w.empty(), w);

  // lambda(h.v) = h1 v(-1) S(h3) (x) h2.v(0)
  w.clear();
  for (int h = 0; h < hd && w.empty(); ++h) {
    SVec D2 = H.delta_left(H.comult[h]);
    for (int v = 0; v < d && w.empty(); ++v) {
      SAccum lhs;
      for (const auto& [x, c] : M.act(h, v)) lhs.add(c, M.coaction[x]);
      SAccum rhs;
      for (const auto& [t, c] : D2) {
        int h1 = t / (hd * hd);
        int h2 = (t / hd) % hd;
        int h3 = t % hd;
        SVec s3 = H.antipode[h3];
        for (const auto& [q, e] : M.coaction[v]) {
          SVec y = M.act(h2, q % d);
          if (y.is_zero()) continue;
          SVec x = H.mul(H.mul(SVec::unit(h1), SVec::unit(q / d)), s3);
          for (const auto& [xa, xc] : x)
            for (const auto& [ya, yc] : y) rhs.add(xa * d + ya, c * e * xc * yc);
        }
      }
      if (lhs.take() != rhs.take()) w = H.label(h) + "," + M.label(v);
    }
  }
  rep.add("yd.compatibility", w.empty(), w);
  return rep;
}

namespace {

void same_base(const YDModule& M, const YDModule& N) {
  if (M.F->g.m != N.F->g.m || M.basis != N.basis) throw BaseMismatch("modules over different bases");
}

}  // namespace

Mat braiding(const YDModule& M, const YDModule& N) {
  same_base(M, N);
  const int dm = M.dim;
  const int dn = N.dim;
  Mat C(dn * dm, dm * dn);
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dn; ++j)
      for (const auto& [q, c] : M.coaction[i]) {
        int w = q % dm;
        for (const auto& [a, e] : N.act(q / dm, j)) C(a * dm + w, i * dn + j) += c * e;
      }
  return C;
}

YDModule tensor_product(const YDModule& M, const YDModule& N) {
  same_base(M, N);
  const HopfData& H = M.H();
  const int hd = H.dim;
  const int dm = M.dim;
  const int dn = N.dim;
  const int d = dm * dn;
  YDModule T;
  T.F = M.F;
  T.basis = M.basis;
  T.dim = d;
  T.action.assign(static_cast<std::size_t>(hd) * d, SVec());
  T.coaction.assign(d, SVec());
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dn; ++j) {
      T.labels.push_back(M.label(i) + "*" + N.label(j));
      T.degrees.push_back(M.degrees[i] + N.degrees[j]);
    }
  for (int h = 0; h < hd; ++h)
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j) {
        SAccum acc;
        for (const auto& [p, c] : H.comult[h]) {
          const SVec& x = M.act(p / hd, i);
          if (x.is_zero()) continue;
          const SVec& y = N.act(p % hd, j);
          for (const auto& [a, xc] : x)
            for (const auto& [b, yc] : y) acc.add(a * dn + b, c * xc * yc);
        }
        T.action[static_cast<std::size_t>(h) * d + i * dn + j] = acc.take();
      }
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dn; ++j) {
      SAccum acc;
      for (const auto& [p, c] : M.coaction[i])
        for (const auto& [q, e] : N.coaction[j]) {
          SVec hh = H.mul(SVec::unit(p / dm), SVec::unit(q / dn));
          int v = (p % dm) * dn + q % dn;
          for (const auto& [h, f] : hh) acc.add(h * d + v, c * e * f);
        }
      T.coaction[i * dn + j] = acc.take();
    }
  return T;
}

YDModule submodule(const YDModule& M, const Subspace& U, const std::string& label_prefix) {
  if (U.ambient() != M.dim) throw DimensionMismatch("submodule: ambient dimension");
  const int d = U.dim();
  const int hd = M.hdim();
  const auto& piv = U.pivots();
  auto coords = [&](const SVec& x) {
    if (!U.reduce(x).is_zero()) throw InvalidYDInput("subspace is not a YD submodule");
    SAccum acc;
    for (int r = 0; r < d; ++r) acc.add(r, x.at(piv[r]));
    return acc.take();
  };
  YDModule S;
  S.F = M.F;
  S.basis = M.basis;
  S.dim = d;
  S.action.assign(static_cast<std::size_t>(hd) * d, SVec());
  S.coaction.assign(d, SVec());
  for (int r = 0; r < d; ++r) {
    const SVec& u = U.basis()[r];
    S.labels.push_back(label_prefix + std::to_string(r));
    int deg = M.degrees[u.leading()];
    for (const auto& [i, c] : u)
      if (M.degrees[i] != deg) throw InvalidYDInput("submodule basis vector is not homogeneous");
    S.degrees.push_back(deg);
    for (int h = 0; h < hd; ++h) S.action[static_cast<std::size_t>(h) * d + r] = coords(M.act(SVec::unit(h), u));
    std::map<int, SAccum> by_h;
    for (const auto& [i, c] : u)
      for (const auto& [q, e] : M.coaction[i]) by_h[q / M.dim].add(q % M.dim, c * e);
    SAccum acc;
    for (auto& [h, a] : by_h)
      for (const auto& [s, c] : coords(a.take())) acc.add(h * d + s, c);
    S.coaction[r] = acc.take();
  }
  return S;
}

Subspace yd_hom_space(const YDModule& M0, const YDModule& N0, int ell) {
  if (M0.F->g.m != N0.F->g.m) throw BaseMismatch("modules over different groups");
  YDModule Nc;
  const YDModule& M = M0;
  const YDModule& N = (N0.basis == M0.basis) ? N0 : (Nc = change_H_basis(N0, M0.basis));
  const int dm = M.dim;
  const int dn = N.dim;
  const int hd = M.hdim();
  const int total = dm * dn;
  auto var = [dm](int a, int b) { return a * dm + b; };
  std::vector<SVec> eqs;
  for (int a = 0; a < dn; ++a)
    for (int b = 0; b < dm; ++b)
      if (N.degrees[a] != M.degrees[b] + ell) eqs.push_back(SVec::unit(var(a, b)));
  // f(h.m_b) = h.f(m_b), one equation per (h, b, a)
  for (int h = 0; h < hd; ++h)
    for (int b = 0; b < dm; ++b) {
      std::vector<SAccum> eq(dn);
      for (const auto& [b2, c] : M.act(h, b))
        for (int a = 0; a < dn; ++a) eq[a].add(var(a, b2), c);
      for (int a2 = 0; a2 < dn; ++a2)
        for (const auto& [a, c] : N.act(h, a2)) eq[a].add(var(a2, b), -c);
      for (auto& e : eq) {
        SVec v = e.take();
        if (!v.is_zero()) eqs.push_back(std::move(v));
      }
    }
  // lambda_N(f(m_b)) = (id (x) f) lambda_M(m_b), one equation per (b, h, a)
  for (int b = 0; b < dm; ++b) {
    std::map<int, SAccum> eq;
    for (int a2 = 0; a2 < dn; ++a2)
      for (const auto& [q, c] : N.coaction[a2]) eq[q].add(var(a2, b), c);
    for (const auto& [q, c] : M.coaction[b]) {
      int h = q / dm;
      for (int a = 0; a < dn; ++a) eq[h * dn + a].add(var(a, q % dm), -c);
    }
    for (auto& [k, e] : eq) {
      SVec v = e.take();
      if (!v.is_zero()) eqs.push_back(std::move(v));
    }
  }
  return Subspace::span(total, eqs).annihilator();
}

// ------------------------------------------------------------ group side

namespace {

std::vector<std::string> basis_labels(const char* p, int n) {
  std::vector<std::string> l;
  for (int i = 1; i <= n; ++i) l.push_back(std::string(p) + std::to_string(i));
  return l;
}

Mat power(const Mat& A, int e) {
  Mat r = Mat::identity(A.rows());
  for (int i = 0; i < e; ++i) r = r * A;
  return r;
}

// rho(g^i h^j) for all group elements, index ix.idx(i,j)
std::vector<Mat> all_rho(const DihedralIndex& ix, const GroupYD& G) {
  std::vector<Mat> out(static_cast<std::size_t>(2) * ix.m);
  Mat hp = Mat::identity(G.dim);
  for (int j = 0; j < ix.m; ++j) {
    out[ix.idx(0, j)] = hp;
    out[ix.idx(1, j)] = G.rho_g * hp;
    hp = hp * G.rho_h;
  }
  return out;
}

}  // namespace

GroupYD group_M_ik(const GroupDatum& g, int i, int k) {
  GroupYD G;
  G.m = g.m;
  G.dim = 2;
  G.labels = {"e*1", "g*1"};
  DihedralIndex ix{g.m};
  // e (x) 1 sits in degree h^i, g (x) 1 in g h^i g = h^{-i}
  G.degrees = {ix.norm(0, i), ix.norm(0, -i)};
  G.rho_g = Mat(2, 2);
  G.rho_g(0, 1) = 1;
  G.rho_g(1, 0) = 1;
  G.rho_h = Mat(2, 2);
  G.rho_h(0, 0) = make_root_power(g, k);
  G.rho_h(1, 1) = make_root_power(g, -k);
  return G;
}

GroupYD group_M_ell(const GroupDatum& g, int ell) {
  GroupYD G = group_M_ik(g, g.n, ell);
  G.labels = basis_labels("x", 2);
  return G;
}

GroupYD group_trivial(const GroupDatum& g) {
  GroupYD G;
  G.m = g.m;
  G.dim = 1;
  G.labels = {"1"};
  G.degrees = {DihedralElem{0, 0}};
  G.rho_g = Mat::identity(1);
  G.rho_h = Mat::identity(1);
  return G;
}

YDModule dual_transport(const GroupDatum& g, const GroupYD& G) {
  if (G.m != g.m) throw InvalidYDInput("group-side module over a different group");
  const int d = G.dim;
  if (static_cast<int>(G.degrees.size()) != d || G.rho_g.rows() != d || G.rho_g.cols() != d ||
      G.rho_h.rows() != d || G.rho_h.cols() != d)
    throw InvalidYDInput("group-side module has inconsistent sizes");
  DihedralIndex ix{g.m};
  Mat I = Mat::identity(d);
  if (!(G.rho_g * G.rho_g == I)) throw InvalidYDInput("rho(g)^2 != 1");
  Mat hm = power(G.rho_h, g.m);
  if (!(hm == I)) throw InvalidYDInput("rho(h)^m != 1");
  if (!(G.rho_g * G.rho_h * G.rho_g * G.rho_h == I)) throw InvalidYDInput("rho(g h g h) != 1");
  const DihedralElem gens[2] = {{1, 0}, {0, 1}};
  const Mat* rg[2] = {&G.rho_g, &G.rho_h};
  for (int v = 0; v < d; ++v)
    for (int s = 0; s < 2; ++s) {
      DihedralElem target = ix.mul(ix.mul(gens[s], G.degrees[v]), ix.inv(gens[s]));
      for (const auto& [w, c] : rg[s]->column(v))
        if (!(G.degrees[w] == target)) throw InvalidYDInput("action does not respect the grading");
    }
  auto rho = all_rho(ix, G);
  YDModule M;
  M.F = function_algebra(g);
  M.basis = HBasis::Phi;
  M.dim = d;
  M.labels = G.labels;
  M.degrees.assign(d, 1);
  const int hd = M.F->dim();
  M.action.assign(static_cast<std::size_t>(hd) * d, SVec());
  for (int v = 0; v < d; ++v) {
    DihedralElem x = ix.inv(G.degrees[v]);
    M.action[static_cast<std::size_t>(ix.idx(x.i, x.j)) * d + v] = SVec::unit(v);
  }
  M.coaction.assign(d, SVec());
  for (int v = 0; v < d; ++v) {
    SAccum acc;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < g.m; ++j) {
        DihedralElem xi = ix.inv({i, j});
        int h = ix.idx(xi.i, xi.j);
        for (const auto& [w, c] : rho[ix.idx(i, j)].column(v)) acc.add(h * d + w, c);
      }
    M.coaction[v] = acc.take();
  }
  return M;
}

GroupYD dual_transport_back(const YDModule& M0) {
  YDModule M = change_H_basis(M0, HBasis::Phi);
  const FunctionAlgebra& F = *M.F;
  const DihedralIndex& ix = F.ix;
  const int d = M.dim;
  GroupYD G;
  G.m = F.g.m;
  G.dim = d;
  G.labels = M.labels;
  for (int v = 0; v < d; ++v) {
    int found = -1;
    for (int p = 0; p < F.dim() && found < 0; ++p)
      if (M.act(p, v) == SVec::unit(v)) found = p;
    if (found < 0) throw InvalidYDInput("basis vector " + M.label(v) + " is not homogeneous");
    G.degrees.push_back(ix.inv({found / G.m, found % G.m}));
  }
  // x . v is the coefficient of phi_{x^-1} in lambda(v)
  auto column_at = [&](DihedralElem x, int v) {
    DihedralElem xi = ix.inv(x);
    int h = ix.idx(xi.i, xi.j);
    SAccum acc;
    for (const auto& [q, c] : M.coaction[v])
      if (q / d == h) acc.add(q % d, c);
    return acc.take();
  };
  std::vector<SVec> cg;
  std::vector<SVec> ch;
  for (int v = 0; v < d; ++v) {
    cg.push_back(column_at({1, 0}, v));
    ch.push_back(column_at({0, 1}, v));
  }
  G.rho_g = Mat::from_columns(d, cg);
  G.rho_h = Mat::from_columns(d, ch);
  return G;
}

bool same_structure(const YDModule& a, const YDModule& b) {
  if (a.F->g.m != b.F->g.m || a.dim != b.dim) return false;
  YDModule c = change_H_basis(b, a.basis);
  return a.action == c.action && a.coaction == c.coaction;
}

}  // namespace hopfforge
