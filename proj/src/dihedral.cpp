#include "hopfforge/dihedral.hpp"

namespace hopfforge {

namespace {

std::string lab(const char* p, int i, int j) { return std::string(p) + "_" + std::to_string(i) + "_" + std::to_string(j); }

HopfData phi_basis(const GroupDatum& g, const DihedralIndex& ix) {
  const int m = g.m;
  const int d = 2 * m;
  HopfData A;
  A.m = m;
  A.dim = d;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < m; ++j) A.labels.push_back(lab("phi", i, j));
  A.mult.assign(static_cast<std::size_t>(d) * d, SVec());
  for (int x = 0; x < d; ++x) A.mult[static_cast<std::size_t>(x) * d + x] = SVec::unit(x);
  std::vector<SVec::Entry> one;
  for (int x = 0; x < d; ++x) one.emplace_back(x, 1);
  A.unit = SVec::from_entries(one);
  A.counit = SVec::unit(ix.idx(0, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<SVec::Entry> e;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < m; ++l) {
          int left = ix.idx(i + k, ix.sign(k) * (j - l));
          e.emplace_back(A.pair(left, ix.idx(k, l)), 1);
        }
      A.comult.push_back(SVec::from_entries(std::move(e)));
      A.antipode.push_back(SVec::unit(ix.idx(i, ix.sign(i + 1) * j)));
    }
  A.grading = std::vector<int>(d, 0);
  return A;
}

HopfData theta_basis(const GroupDatum& g, const DihedralIndex& ix) {
  const int m = g.m;
  const int d = 2 * m;
  HopfData A;
  A.m = m;
  A.dim = d;
  for (int k = 0; k < 2; ++k)
    for (int r = 0; r < m; ++r) A.labels.push_back(lab("theta", k, r));
  A.mult.assign(static_cast<std::size_t>(d) * d, SVec());
  for (int k = 0; k < 2; ++k)
    for (int r = 0; r < m; ++r)
      for (int s = 0; s < m; ++s) A.mult[static_cast<std::size_t>(ix.idx(k, r)) * d + ix.idx(k, s)] = SVec::unit(ix.idx(k, r + s));
  A.unit = SVec::from_entries({{ix.idx(0, 0), 1}, {ix.idx(1, 0), 1}});
  std::vector<SVec::Entry> ce;
  for (int r = 0; r < m; ++r) ce.emplace_back(ix.idx(0, r), 1);
  A.counit = SVec::from_entries(ce);
  for (int k = 0; k < 2; ++k)
    for (int r = 0; r < m; ++r) {
      std::vector<SVec::Entry> e;
      if (k == 0) {
        e.emplace_back(A.pair(ix.idx(0, r), ix.idx(0, r)), 1);
        e.emplace_back(A.pair(ix.idx(1, -r), ix.idx(1, r)), 1);
        A.antipode.push_back(SVec::unit(ix.idx(0, -r)));
      } else {
        e.emplace_back(A.pair(ix.idx(1, r), ix.idx(0, r)), 1);
        e.emplace_back(A.pair(ix.idx(0, -r), ix.idx(1, r)), 1);
        A.antipode.push_back(SVec::unit(ix.idx(1, r)));
      }
      A.comult.push_back(SVec::from_entries(std::move(e)));
    }
  A.grading = std::vector<int>(d, 0);
  return A;
}

}  // namespace

SVec FunctionAlgebra::theta_to_phi(const SVec& v) const {
  const auto& f = g.field();
  SAccum acc;
  for (const auto& [t, c] : v) {
    int k = t / g.m;
    int r = t % g.m;
    for (int l = 0; l < g.m; ++l) acc.add(ix.idx(k, l), c * f.root_power(static_cast<long>(r) * l));
  }
  return acc.take();
}

SVec FunctionAlgebra::phi_to_theta(const SVec& v) const {
  // phi_{k,l} = (1/m) sum_r w^{-rl} theta_{k,r}
  const auto& f = g.field();
  CycScalar inv_m(1, g.m);
  SAccum acc;
  for (const auto& [p, c] : v) {
    int k = p / g.m;
    int l = p % g.m;
    CycScalar cm = c * inv_m;
    for (int r = 0; r < g.m; ++r) acc.add(ix.idx(k, r), cm * f.root_power(-static_cast<long>(r) * l));
  }
  return acc.take();
}

FunctionAlgebra build_function_algebra(const GroupDatum& g) {
  FunctionAlgebra F;
  F.g = g;
  F.ix = DihedralIndex{g.m};
  F.phi = phi_basis(g, F.ix);
  F.theta = theta_basis(g, F.ix);
  return F;
}

SVec theta(const FunctionAlgebra& F, int k, long r) { return F.theta_to_phi(SVec::unit(F.ix.idx(k, r))); }

int character_value(int idx, int i, int j) {
  switch (idx) {
    case 0: return 1;
    case 1: return i % 2 == 0 ? 1 : -1;
    case 2: return j % 2 == 0 ? 1 : -1;
    case 3: return (i + j) % 2 == 0 ? 1 : -1;
    default: throw DimensionMismatch("character index must be 0..3");
  }
}

SVec character(const FunctionAlgebra& F, int idx) {
  std::vector<SVec::Entry> e;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < F.g.m; ++j) e.emplace_back(F.ix.idx(i, j), character_value(idx, i, j));
  return SVec::from_entries(std::move(e));
}

Report theta_identities(const FunctionAlgebra& F) {
  Report rep;
  rep.title = "theta identities";
  const int m = F.g.m;
  const int n = F.g.n;
  const HopfData& A = F.phi;
  rep.add("1 = theta_0_0 + theta_1_0", theta(F, 0, 0) + theta(F, 1, 0) == A.unit);
  rep.add("alpha1 = theta_0_0 - theta_1_0", theta(F, 0, 0) - theta(F, 1, 0) == character(F, 1));
  rep.add("alpha2 = theta_0_n + theta_1_n", theta(F, 0, n) + theta(F, 1, n) == character(F, 2));
  rep.add("alpha3 = theta_0_n - theta_1_n", theta(F, 0, n) - theta(F, 1, n) == character(F, 3));
  std::string w;
  for (int k = 0; k < 2 && w.empty(); ++k)
    for (int r = 0; r < m; ++r) {
      SVec conj;
      {
        SAccum acc;
        for (const auto& [p, c] : theta(F, k, r)) acc.add(p, c.galois(m - 1));
        conj = acc.take();
      }
      if (theta(F, k, m - r) != conj) {
        w = "k=" + std::to_string(k) + " r=" + std::to_string(r);
        break;
      }
    }
  rep.add("theta_k_(m-r) = conj(theta_k_r)", w.empty(), w);
  w.clear();
  for (int r = 0; r < m && w.empty(); ++r)
    for (int s = 0; s < m; ++s) {
      bool ok = A.mul(theta(F, 0, r), theta(F, 1, s)).is_zero();
      for (int k = 0; k < 2; ++k) ok = ok && A.mul(theta(F, k, r), theta(F, k, s)) == theta(F, k, r + s);
      if (!ok) {
        w = "r=" + std::to_string(r) + " s=" + std::to_string(s);
        break;
      }
    }
  rep.add("theta_0_r theta_1_s = 0, theta_k_r theta_k_s = theta_k_(r+s)", w.empty(), w);
  // the theta-basis Hopf structure is the phi-basis one transported
  w.clear();
  const HopfData& T = F.theta;
  for (int a = 0; a < T.dim && w.empty(); ++a) {
    SVec ta = F.theta_to_phi(SVec::unit(a));
    SAccum dt;
    for (const auto& [p, c] : T.comult[a]) {
      SVec l = F.theta_to_phi(SVec::unit(p / T.dim));
      SVec r = F.theta_to_phi(SVec::unit(p % T.dim));
      for (const auto& [x, u] : l)
        for (const auto& [y, v] : r) dt.add(A.pair(x, y), c * u * v);
    }
    if (A.delta(ta) != dt.take() || A.S(ta) != F.theta_to_phi(T.antipode[a]) || A.eps(ta) != T.counit.at(a))
      w = T.label(a);
  }
  rep.add("theta basis structure matches phi basis", w.empty(), w);
  return rep;
}

Report character_checks(const FunctionAlgebra& F) {
  Report rep;
  rep.title = "linear characters";
  const HopfData& A = F.phi;
  rep.add("alpha0 = 1", character(F, 0) == A.unit);
  for (int i = 1; i < 4; ++i)
    rep.add("alpha" + std::to_string(i) + "^2 = 1", A.mul(character(F, i), character(F, i)) == A.unit);
  bool a23 = A.mul(character(F, 2), character(F, 3)) == character(F, 1);
  rep.add("alpha2 alpha3 = alpha1", a23);
  rep.add("alpha1 != 1", character(F, 1) != A.unit, "",
          "alpha2 alpha3 = alpha1 is not the unit; a reading alpha2 alpha3 = eps does not hold");
  std::string w;
  for (int i = 0; i < 4 && w.empty(); ++i) {
    SVec a = character(F, i);
    SAccum aa;
    for (const auto& [p, c] : a)
      for (const auto& [q, d] : a) aa.add(A.pair(p, q), c * d);
    if (A.delta(a) != aa.take() || !A.eps(a).is_one()) w = "alpha" + std::to_string(i);
  }
  rep.add("characters are group-like", w.empty(), w);
  return rep;
}

HopfData build_group_algebra(const GroupDatum& g) {
  DihedralIndex ix{g.m};
  const int m = g.m;
  const int d = 2 * m;
  HopfData A;
  A.m = m;
  A.dim = d;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < m; ++j) A.labels.push_back(lab("e", i, j));
  A.mult.assign(static_cast<std::size_t>(d) * d, SVec());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < m; ++l) {
          DihedralElem p = ix.mul({i, j}, {k, l});
          A.mult[static_cast<std::size_t>(ix.idx(i, j)) * d + ix.idx(k, l)] = SVec::unit(ix.idx(p.i, p.j));
        }
  A.unit = SVec::unit(0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < m; ++j) {
      int x = ix.idx(i, j);
      A.comult.push_back(SVec::unit(A.pair(x, x)));
      DihedralElem v = ix.inv({i, j});
      A.antipode.push_back(SVec::unit(ix.idx(v.i, v.j)));
    }
  std::vector<SVec::Entry> ce;
  for (int x = 0; x < d; ++x) ce.emplace_back(x, 1);
  A.counit = SVec::from_entries(ce);
  return A;
}

Report verify_dual_is_group_algebra(const FunctionAlgebra& F) {
  Report rep;
  rep.title = "dual of k^D_m";
  HopfData D = dual(F.phi);
  HopfData G = build_group_algebra(F.g);
  const int m = F.g.m;
  // presentation: g^2 = 1 = h^m, gh = h^{-1} g, with g = d(phi_1_0), h = d(phi_0_1)
  SVec g = SVec::unit(F.ix.idx(1, 0));
  SVec h = SVec::unit(F.ix.idx(0, 1));
  rep.add("g^2 = 1", D.mul(g, g) == D.unit);
  SVec hp = D.unit;
  std::vector<SVec> hpow;
  for (int j = 0; j < m; ++j) {
    hpow.push_back(hp);
    hp = D.mul(hp, h);
  }
  rep.add("h^m = 1", hp == D.unit);
  rep.add("gh = h^-1 g", D.mul(g, h) == D.mul(hpow[m - 1], g));
  // g^i h^j lands on the dual basis element of phi_i_j: basis identification
  std::string w;
  for (int i = 0; i < 2 && w.empty(); ++i)
    for (int j = 0; j < m; ++j) {
      SVec word = i == 0 ? hpow[j] : D.mul(g, hpow[j]);
      if (word != SVec::unit(F.ix.idx(i, j))) {
        w = "g^" + std::to_string(i) + " h^" + std::to_string(j);
        break;
      }
    }
  rep.add("g^i h^j = dual basis of phi_i_j", w.empty(), w);
  bool same = D.mult == G.mult && D.unit == G.unit && D.comult == G.comult && D.counit == G.counit &&
              D.antipode == G.antipode;
  rep.add("structure constants equal those of kD_m", same);
  rep.merge(verify_hopf(G), "kD_m: ");
  return rep;
}

}  // namespace hopfforge
