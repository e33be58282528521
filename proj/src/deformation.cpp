#include "hopfforge/deformation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "hopfforge/parallel.hpp"

namespace hopfforge {

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
  }
  return '?';
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    default: throw InvalidLiftingData(std::string("unknown family '") + c + "'");
  }
}

// ---------------------------------------------------------------- lifting data

LiftingKeys lifting_keys(Family kind, const IndexDatumI& I, const IndexDatumL& L) {
  LiftingKeys k;
  if (kind != Family::B) {
    std::set<IndexPair> vals(I.pairs.begin(), I.pairs.end());
    for (auto [i, a] : vals)
      for (auto [p, q] : vals)
        if (i == p) k.zeta.push_back({i, a, q});
  }
  if (kind != Family::A) {
    std::set<int> vals(L.ells.begin(), L.ells.end());
    for (int l : vals)
      for (int t : vals) {
        if (l <= t) k.mu.emplace_back(l, t);
        k.tau.emplace_back(l, t);
      }
  }
  return k;
}

namespace {

std::string key_str(const std::array<int, 3>& k) {
  return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
}
std::string key_str(const std::pair<int, int>& k) {
  return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
}

template <class Map, class Keys>
void fill_keys(Map& m, const Keys& keys, const char* name) {
  std::set<typename Map::key_type> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : m)
    if (!allowed.count(k)) throw InvalidLiftingData(std::string(name) + " key " + key_str(k) + " does not match the index data");
  for (const auto& k : keys) m.try_emplace(k, CycScalar(0));
}

}  // namespace

LiftingData validate_lifting(const GroupDatum& g, LiftingData d) {
  if (d.m != g.m) throw InvalidLiftingData("lifting data for m=" + std::to_string(d.m) + " used with m=" + std::to_string(g.m));
  switch (d.kind) {
    case Family::A:
      if (!d.L.ells.empty()) throw InvalidLiftingData("family A takes no L");
      if (d.I.pairs.empty()) throw InvalidLiftingData("family A needs a non-empty I");
      d.I = validate_I(g, d.I.pairs);
      break;
    case Family::B:
      if (!d.I.pairs.empty()) throw InvalidLiftingData("family B takes no I");
      if (d.L.ells.empty()) throw InvalidLiftingData("family B needs a non-empty L");
      d.L = validate_L(g, d.L.ells);
      break;
    case Family::C: {
      if (d.I.pairs.empty() || d.L.ells.empty()) throw InvalidLiftingData("family C needs non-empty I and L");
      IndexDatumK K = validate_K(g, d.I.pairs, d.L.ells);
      d.I = K.I;
      d.L = K.L;
      break;
    }
  }
  LiftingKeys keys = lifting_keys(d.kind, d.I, d.L);
  fill_keys(d.zeta, keys.zeta, "zeta");
  fill_keys(d.mu, keys.mu, "mu");
  fill_keys(d.nu, keys.mu, "nu");
  fill_keys(d.tau, keys.tau, "tau");
  return d;
}

LiftingData zero_lifting(const GroupDatum& g, Family kind, const IndexDatumI& I, const IndexDatumL& L) {
  LiftingData d;
  d.kind = kind;
  d.m = g.m;
  d.I = I;
  d.L = L;
  return validate_lifting(g, d);
}

LiftingData random_lifting(const GroupDatum& g, Family kind, const IndexDatumI& I, const IndexDatumL& L,
                           std::uint64_t seed, int range) {
  LiftingData d = zero_lifting(g, kind, I, L);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-range, range);
  for (auto& [k, v] : d.zeta) v = dist(rng);
  for (auto& [k, v] : d.mu) v = dist(rng);
  for (auto& [k, v] : d.nu) v = dist(rng);
  for (auto& [k, v] : d.tau) v = dist(rng);
  return d;
}

YDModule family_module(const GroupDatum& g, const LiftingData& d) {
  switch (d.kind) {
    case Family::A: return build_M_I(g, d.I);
    case Family::B: return build_M_L(g, d.L);
    case Family::C: return build_M_IL(g, {d.I, d.L});
  }
  throw InvalidLiftingData("unknown family");
}

std::vector<GeneratorInfo> generator_info(const LiftingData& d) {
  std::vector<GeneratorInfo> out;
  if (d.kind != Family::B)
    for (auto [i, k] : d.I.pairs)
      for (int r = 1; r <= 2; ++r) out.push_back({true, r, i, k, 0});
  if (d.kind != Family::A)
    for (int l : d.L.ells)
      for (int r = 1; r <= 2; ++r) out.push_back({false, r, 0, 0, l});
  return out;
}

// ---------------------------------------------------------------- cocycles on B

std::vector<Bilinear> hochschild_cocycle_basis(const NicholsData& B) {
  std::vector<Bilinear> out;
  for (int j = 0; j < B.d; ++j)
    for (int k = j; k < B.d; ++k) {
      Bilinear f(B.dim);
      const int a = B.generator(j);
      const int b = B.generator(k);
      f.rows[a] = SVec::unit(b);
      if (j != k) f.rows[b] = SVec::unit(a);
      out.push_back(std::move(f));
    }
  for (const auto& f : out) {
    Report r = check_hochschild_cocycle(B.algebra, f);
    if (!r.ok()) throw CocycleCheckFailed("symmetric functional is not a Hochschild cocycle: " + r.to_text());
  }
  return out;
}

Report check_hochschild_cocycle(const HopfData& B, const Bilinear& f) {
  Report r;
  r.title = "Hochschild cocycle";
  const int n = B.dim;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        CycScalar v = B.counit.at(a) * f.at(b, c);
        for (const auto& [k, x] : B.mul_basis(a, b)) v -= x * f.at(k, c);
        v += f.eval_right(a, B.mul_basis(b, c));
        v -= f.at(a, b) * B.counit.at(c);
        if (!v.is_zero()) {
          r.add("cocycle", false, B.label(a) + "," + B.label(b) + "," + B.label(c));
          return r;
        }
      }
  r.add("cocycle", true);
  return r;
}

InvarianceResult is_H_invariant(const NicholsData& B, const Bilinear& eta) {
  const YDModule& Y = B.yd;
  const FunctionAlgebra& F = *Y.F;
  const HopfData& H = F.theta;
  const int hd = H.dim;
  for (int p = 0; p < hd; ++p) {
    SVec h = F.phi_to_theta(SVec::unit(p));
    SVec dh = H.delta(h);
    CycScalar eh = H.eps(h);
    for (int x = 0; x < B.dim; ++x)
      for (int y = 0; y < B.dim; ++y) {
        CycScalar v = -(eh * eta.at(x, y));
        for (const auto& [q, c] : dh) {
          const SVec& hx = Y.act(q / hd, x);
          if (hx.is_zero()) continue;
          const SVec& hy = Y.act(q % hd, y);
          if (hy.is_zero()) continue;
          v += c * eta.eval(hx, hy);
        }
        if (!v.is_zero())
          return {false, F.phi.label(p) + "; " + B.label(x) + ", " + B.label(y)};
      }
  }
  return {true, {}};
}

Bilinear lifting_data_to_cocycle(const NicholsData& B, const LiftingData& d) {
  std::vector<GeneratorInfo> gi = generator_info(d);
  if (static_cast<int>(gi.size()) != B.d) throw InvalidLiftingData("lifting data does not match the Nichols algebra");
  const CycScalar half(1, 2);
  auto get = [](const auto& m, const auto& k) {
    auto it = m.find(k);
    return it == m.end() ? CycScalar(0) : it->second;
  };
  Bilinear eta(B.dim);
  for (int a = 0; a < B.d; ++a) {
    SAccum row;
    for (int b = 0; b < B.d; ++b) {
      const GeneratorInfo& u = gi[a];
      const GeneratorInfo& v = gi[b];
      CycScalar c;
      if (u.is_y && v.is_y) {
        if (u.i != v.i || u.r == v.r) continue;
        // eta(y1^{ik}, y2^{iq}) = eta(y2^{iq}, y1^{ik}) = zeta_{i,k,q}/2
        const GeneratorInfo& y1 = u.r == 1 ? u : v;
        const GeneratorInfo& y2 = u.r == 1 ? v : u;
        c = get(d.zeta, std::array<int, 3>{y1.i, y1.k, y2.k});
      } else if (!u.is_y && !v.is_y) {
        std::pair<int, int> sym{std::min(u.ell, v.ell), std::max(u.ell, v.ell)};
        if (u.r == 1 && v.r == 1) c = get(d.mu, sym);
        else if (u.r == 2 && v.r == 2) c = get(d.nu, sym);
        else {
          const GeneratorInfo& x1 = u.r == 1 ? u : v;
          const GeneratorInfo& x2 = u.r == 1 ? v : u;
          c = get(d.tau, std::pair<int, int>{x1.ell, x2.ell});
        }
      } else {
        continue;
      }
      row.add(B.generator(b), half * c);
    }
    eta.rows[B.generator(a)] = row.take();
  }
  return eta;
}

// ---------------------------------------------------------------- cocycles on A

Bilinear extend_to_A(const Bosonization& X, const Bilinear& eta) {
  const HopfData& H = X.F->theta;
  const YDModule& Y = X.B.yd;
  const int hd = H.dim;
  const int D = X.B.dim;
  Bilinear out(X.A.dim);
  for (int b = 0; b < D; ++b) {
    if (eta.rows[b].is_zero()) continue;
    for (int g = 0; g < hd; ++g) {
      SAccum row;
      for (int c = 0; c < D; ++c) {
        CycScalar v = eta.eval_right(b, Y.act(g, c));
        if (v.is_zero()) continue;
        for (const auto& [h, e] : H.counit) row.add(X.index(c, h), v * e);
      }
      out.rows[X.index(b, g)] = row.take();
    }
  }
  return out;
}

namespace {

// sigma - eps (x) eps
Bilinear reduced(const HopfData& A, const Bilinear& s) {
  Bilinear out = s;
  Bilinear e = Bilinear::eps_eps(A);
  e *= CycScalar(-1);
  out += e;
  return out;
}

// out[x*dim+y] = base[x*dim+y] + sum f(x1, y1) base[x2*dim+y2]
std::vector<SVec> twist_left(const HopfData& A, const CoIndex& ci, const Bilinear& f, const std::vector<SVec>& base) {
  const int n = A.dim;
  std::vector<SVec> out(static_cast<std::size_t>(n) * n);
  parallel_for(n, [&](int x) {
    std::vector<SAccum> acc(n);
    for (const auto& [p, c] : A.comult[x]) {
      const int x1 = p / n;
      const int x2 = p % n;
      for (const auto& [y1, v] : f.rows[x1]) {
        CycScalar cv = c * v;
        for (const auto& t : ci.by_left[y1]) acc[t.elem].add(cv * t.c, base[static_cast<std::size_t>(x2) * n + t.other]);
      }
    }
    for (int y = 0; y < n; ++y) {
      acc[y].add(base[static_cast<std::size_t>(x) * n + y]);
      out[static_cast<std::size_t>(x) * n + y] = acc[y].take();
    }
  });
  return out;
}

// out[x*dim+y] = base[x*dim+y] + sum base[x1*dim+y1] f(x2, y2)
std::vector<SVec> twist_right(const HopfData& A, const CoIndex& ci, const Bilinear& f, const std::vector<SVec>& base) {
  const int n = A.dim;
  std::vector<SVec> out(static_cast<std::size_t>(n) * n);
  parallel_for(n, [&](int x) {
    std::vector<SAccum> acc(n);
    for (const auto& [p, c] : A.comult[x]) {
      const int x1 = p / n;
      const int x2 = p % n;
      for (const auto& [y2, v] : f.rows[x2]) {
        CycScalar cv = c * v;
        for (const auto& t : ci.by_right[y2]) acc[t.elem].add(cv * t.c, base[static_cast<std::size_t>(x1) * n + t.other]);
      }
    }
    for (int y = 0; y < n; ++y) {
      acc[y].add(base[static_cast<std::size_t>(x) * n + y]);
      out[static_cast<std::size_t>(x) * n + y] = acc[y].take();
    }
  });
  return out;
}

}  // namespace

Bilinear convolution_exp(const HopfData& A, const Bilinear& f, bool verify) {
  if (f.dim != A.dim) throw DimensionMismatch("bilinear form on a different algebra");
  CoIndex ci(A);
  Bilinear sigma = Bilinear::eps_eps(A);
  Bilinear power = f;
  for (int i = 1; !power.is_zero(); ++i) {
    sigma += power;
    if (i > 2 * A.dim) throw CocycleCheckFailed("convolution powers do not vanish");
    power = convolution(A, ci, power, f);
    power *= CycScalar(1, i + 1);
  }
  if (verify) {
    Report r = check_multiplicative_cocycle(A, sigma);
    if (!r.ok()) throw CocycleCheckFailed(r.to_text());
  }
  return sigma;
}

Report check_multiplicative_cocycle(const HopfData& A, const Bilinear& sigma) {
  Report r;
  r.title = "multiplicative 2-cocycle";
  const int n = A.dim;
  // normalization
  {
    std::string bad;
    for (int a = 0; a < n && bad.empty(); ++a) {
      CycScalar right = sigma.eval_right(a, A.unit);
      CycScalar left;
      for (const auto& [u, c] : A.unit) left += c * sigma.at(u, a);
      if (right != A.counit.at(a) || left != A.counit.at(a)) bad = A.label(a);
    }
    r.add("normalized", bad.empty(), bad);
  }
  CoIndex ci(A);
  Bilinear sp = reduced(A, sigma);
  // l(x,y) = sigma(x1,y1) x2 y2
  std::vector<SVec> l = twist_left(A, ci, sp, A.mult);
  std::vector<SVec> cols = sigma.columns();
  std::vector<std::string> witness(n);
  parallel_for(n, [&](int b) {
    // sigma(b1,c1) sigma(a, b2 c2) as rows over a, then compared with
    // sigma(a1,b1) sigma(a2 b2, c)
    std::vector<SAccum> lhs(n);
    for (int c = 0; c < n; ++c) {
      SAccum col;
      for (const auto& [k, v] : l[static_cast<std::size_t>(b) * n + c]) col.add(v, cols[k]);
      for (const auto& [a, v] : col.take()) lhs[a].add(c, v);
    }
    for (int a = 0; a < n; ++a) {
      SAccum rhs;
      for (const auto& [k, v] : l[static_cast<std::size_t>(a) * n + b]) rhs.add(v, sigma.rows[k]);
      SVec diff = lhs[a].take() - rhs.take();
      if (!diff.is_zero()) {
        witness[b] = A.label(a) + ", " + A.label(b) + ", " + A.label(diff.leading());
        return;
      }
    }
  });
  std::string w;
  for (const auto& s : witness)
    if (!s.empty()) {
      w = s;
      break;
    }
  r.add("cocycle identity on all triples", w.empty(), w);
  return r;
}

HopfData deform(const HopfData& A, const Bilinear& sigma, const Bilinear& sigma_inv, bool verify_cocycle) {
  if (sigma.dim != A.dim || sigma_inv.dim != A.dim) throw DimensionMismatch("bilinear form on a different algebra");
  if (verify_cocycle) {
    Report r = check_multiplicative_cocycle(A, sigma);
    if (!r.ok()) throw NotACocycle(r.to_text());
  }
  const int n = A.dim;
  CoIndex ci(A);
  // x1 y1 sigma^{-1}(x2, y2), then sigma(a1, b1) (...)(a2, b2)
  std::vector<SVec> r = twist_right(A, ci, reduced(A, sigma_inv), A.mult);
  HopfData D = A;
  D.mult = twist_left(A, ci, reduced(A, sigma), r);
  D.grading.reset();

  // S_sigma(a) = U(a1) S(a2) W(a3), U(a) = sigma(a1, S a2), W(a) = sigma^{-1}(S a1, a2)
  std::vector<CycScalar> U(n);
  std::vector<CycScalar> W(n);
  for (int a = 0; a < n; ++a)
    for (const auto& [p, c] : A.comult[a]) {
      const int a1 = p / n;
      const int a2 = p % n;
      U[a] += c * sigma.eval_right(a1, A.antipode[a2]);
      for (const auto& [k, s] : A.antipode[a1]) W[a] += c * s * sigma_inv.at(k, a2);
    }
  std::vector<SVec> V(n);
  for (int x = 0; x < n; ++x) {
    SAccum acc;
    for (const auto& [p, c] : A.comult[x]) acc.add(c * W[p % n], A.antipode[p / n]);
    V[x] = acc.take();
  }
  for (int a = 0; a < n; ++a) {
    SAccum acc;
    for (const auto& [p, c] : A.comult[a]) acc.add(c * U[p / n], V[p % n]);
    D.antipode[a] = acc.take();
  }
  return D;
}

HopfData deform(const HopfData& A, const Bilinear& sigma) {
  Bilinear inv = convolution_inverse(A, sigma);
  return deform(A, sigma, inv, true);
}

Report inverse_via_antipode(const HopfData& A, const Bilinear& sigma, const Bilinear& sigma_inv) {
  Report r;
  r.title = "sigma^{-1}(a,b) = sigma(S(a),b)";
  for (int a = 0; a < A.dim; ++a) {
    SAccum row;
    for (const auto& [k, s] : A.antipode[a]) row.add(s, sigma.rows[k]);
    SVec diff = row.take() - sigma_inv.rows[a];
    if (!diff.is_zero()) {
      r.add("formula", false, A.label(a) + ", " + A.label(diff.leading()));
      return r;
    }
  }
  r.add("formula", true);
  return r;
}

std::vector<SVec> connecting_map(const HopfData& A, const Bilinear& f) {
  CoIndex ci(A);
  std::vector<SVec> right = twist_right(A, ci, f, A.mult);
  std::vector<SVec> left = twist_left(A, ci, f, A.mult);
  for (std::size_t i = 0; i < right.size(); ++i) right[i] -= left[i];
  return right;
}

Report check_valued_hochschild_cocycle(const HopfData& A, const std::vector<SVec>& F) {
  Report r;
  r.title = "A-valued Hochschild cocycle";
  const int n = A.dim;
  auto at = [&](int x, int y) -> const SVec& { return F[static_cast<std::size_t>(x) * n + y]; };
  std::vector<std::string> witness(n);
  parallel_for(n, [&](int a) {
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        SAccum acc;
        for (const auto& [k, v] : at(b, c)) acc.add(v, A.mul_basis(a, k));
        for (const auto& [k, v] : A.mul_basis(a, b)) acc.add(-v, at(k, c));
        for (const auto& [k, v] : A.mul_basis(b, c)) acc.add(v, at(a, k));
        for (const auto& [k, v] : at(a, b)) acc.add(-v, A.mul_basis(k, c));
        if (!acc.take().is_zero()) {
          witness[a] = A.label(a) + ", " + A.label(b) + ", " + A.label(c);
          return;
        }
      }
  });
  std::string w;
  for (const auto& s : witness)
    if (!s.empty()) {
      w = s;
      break;
    }
  r.add("cocycle", w.empty(), w);
  return r;
}

DeformationRun run_deformation(const GroupDatum& g, const LiftingData& d0, bool verify_cocycle) {
  DeformationRun run;
  run.data = validate_lifting(g, d0);
  run.B = build_nichols(family_module(g, run.data));
  run.eta = lifting_data_to_cocycle(run.B, run.data);
  InvarianceResult inv = is_H_invariant(run.B, run.eta);
  run.report.add("eta is H-invariant", inv.ok, inv.witness);
  if (!inv.ok) throw InvalidLiftingData("cocycle is not H-invariant: " + inv.witness);
  run.X = bosonize(run.B);
  run.eta_tilde = extend_to_A(run.X, run.eta);
  run.sigma = convolution_exp(run.X.A, run.eta_tilde, verify_cocycle);
  run.report.add("sigma multiplicative cocycle", true, {}, verify_cocycle ? "checked on all triples" : "not checked");
  Bilinear minus = run.eta_tilde;
  minus *= CycScalar(-1);
  run.sigma_inv = convolution_exp(run.X.A, minus, false);
  bool inverse = convolution(run.X.A, run.sigma, run.sigma_inv) == Bilinear::eps_eps(run.X.A);
  run.report.add("sigma * exp(-eta~) = eps (x) eps", inverse);
  if (!inverse) throw CocycleCheckFailed("exp(-eta~) is not the convolution inverse");
  run.D = deform(run.X.A, run.sigma, run.sigma_inv, false);
  run.D.labels = run.X.A.labels;
  return run;
}

}  // namespace hopfforge
