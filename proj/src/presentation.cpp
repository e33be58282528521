#include <algorithm>

#include "hopfforge/deformation.hpp"

namespace hopfforge {

namespace {

using Word = std::vector<int>;
using WordComb = std::map<Word, CycScalar>;
using FreeTensor = std::map<std::pair<FreeKey, FreeKey>, CycScalar>;

void add_to(FreeElem& x, const FreeKey& k, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = x.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

void add_to(FreeTensor& x, const std::pair<FreeKey, FreeKey>& k, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = x.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

std::string word_label(const YDModule& M, const Word& w) {
  std::string s;
  for (int a : w) s += M.label(a);
  return s.empty() ? "1" : s;
}

// Normal forms in T(V) # H modulo the relations: increasing square-free
// words times theta elements, with H moved to the right.
class Rewriter {
 public:
  Rewriter(const PresentedAlgebra& P) : P_(P), H_(P.M.H()), hd_(H_.dim), d_(P.M.dim) {}

  [[nodiscard]] const SVec& anti(int a, int b) const { return P_.anticommutator[static_cast<std::size_t>(a) * d_ + b]; }

  // h . (v1 ... vk) = (h1 . v1) ... (hk . vk)
  const WordComb& act_word(int h, const Word& w) {
    auto key = std::make_pair(h, w);
    auto it = act_memo_.find(key);
    if (it != act_memo_.end()) return it->second;
    WordComb out;
    if (w.empty()) {
      CycScalar e = H_.counit.at(h);
      if (!e.is_zero()) out[w] = e;
    } else {
      Word rest(w.begin() + 1, w.end());
      for (const auto& [p, c] : H_.comult[h]) {
        const SVec& hv = P_.M.act(p / hd_, w[0]);
        if (hv.is_zero()) continue;
        const WordComb& tail = act_word(p % hd_, rest);
        for (const auto& [v, cv] : hv)
          for (const auto& [tw, ct] : tail) {
            Word nw{v};
            nw.insert(nw.end(), tw.begin(), tw.end());
            CycScalar k = c * cv * ct;
            auto [jt, fresh] = out.try_emplace(nw, k);
            if (!fresh) jt->second += k;
          }
      }
      for (auto jt = out.begin(); jt != out.end();) jt = jt->second.is_zero() ? out.erase(jt) : std::next(jt);
    }
    return act_memo_.emplace(key, std::move(out)).first->second;
  }

  // right multiplication of a normal vector by theta_t
  [[nodiscard]] SVec rmul(const SVec& v, int t) const {
    SAccum acc;
    for (const auto& [idx, c] : v)
      for (const auto& [r, x] : H_.mul_basis(idx % hd_, t)) acc.add((idx / hd_) * hd_ + r, c * x);
    return acc.take();
  }

  const SVec& nf_word(const Word& w) {
    auto it = nf_memo_.find(w);
    if (it != nf_memo_.end()) return it->second;
    SVec out;
    int pos = -1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] >= w[i + 1]) {
        pos = static_cast<int>(i);
        break;
      }
    if (pos < 0) {
      std::uint32_t mask = 0;
      for (int a : w) mask |= 1U << a;
      const int u = P_.index_of.at(mask);
      out = H_.unit.reindex([&](int t) { return u * hd_ + t; });
    } else {
      out = apply_rule(w, pos);
    }
    return nf_memo_.emplace(w, std::move(out)).first->second;
  }

  // Rewrite w at (pos, pos+1), then normalise.
  SVec apply_rule(const Word& w, int pos) {
    const int a = w[pos];
    const int b = w[pos + 1];
    Word P(w.begin(), w.begin() + pos);
    Word Q(w.begin() + pos + 2, w.end());
    SAccum acc;
    SVec c = anti(a, b);
    if (a > b) {
      Word sw = w;
      std::swap(sw[pos], sw[pos + 1]);
      acc.add(-1, nf_word(sw));
    } else {
      c *= CycScalar(1, 2);
    }
    acc.add(middle(P, c, Q));
    return acc.take();
  }

  // P h Q = P (h1 . Q) h2
  SVec middle(const Word& P, const SVec& h, const Word& Q) {
    SAccum acc;
    for (const auto& [t, ct] : h)
      for (const auto& [p, c] : H_.comult[t])
        for (const auto& [q, cq] : act_word(p / hd_, Q)) {
          Word w = P;
          w.insert(w.end(), q.begin(), q.end());
          acc.add(ct * c * cq, rmul(nf_word(w), p % hd_));
        }
    return acc.take();
  }

  SVec normal_form(const FreeElem& x) {
    SAccum acc;
    for (const auto& [k, c] : x) acc.add(c, rmul(nf_word(k.first), k.second));
    return acc.take();
  }

  // (w1 h1)(w2 h2) = w1 (h1' . w2) h1'' h2
  FreeElem mul(const FreeElem& x, const FreeElem& y) {
    FreeElem out;
    for (const auto& [kx, cx] : x)
      for (const auto& [ky, cy] : y)
        for (const auto& [p, c] : H_.comult[kx.second]) {
          const SVec& hh = H_.mul_basis(p % hd_, ky.second);
          if (hh.is_zero()) continue;
          for (const auto& [w, cw] : act_word(p / hd_, ky.first)) {
            Word nw = kx.first;
            nw.insert(nw.end(), w.begin(), w.end());
            for (const auto& [t, ct] : hh) add_to(out, {nw, t}, cx * cy * c * cw * ct);
          }
        }
    return out;
  }

  FreeTensor mul(const FreeTensor& x, const FreeTensor& y) {
    FreeTensor out;
    for (const auto& [kx, cx] : x)
      for (const auto& [ky, cy] : y) {
        FreeElem l = mul(FreeElem{{kx.first, 1}}, FreeElem{{ky.first, 1}});
        if (l.empty()) continue;
        FreeElem r = mul(FreeElem{{kx.second, 1}}, FreeElem{{ky.second, 1}});
        for (const auto& [a, ca] : l)
          for (const auto& [b, cb] : r) add_to(out, {a, b}, cx * cy * ca * cb);
      }
    return out;
  }

  [[nodiscard]] FreeElem word_elem(const Word& w) const {
    FreeElem x;
    for (const auto& [t, c] : H_.unit) add_to(x, {w, t}, c);
    return x;
  }
  [[nodiscard]] FreeElem h_elem(const SVec& h) const {
    FreeElem x;
    for (const auto& [t, c] : h) add_to(x, {Word{}, t}, c);
    return x;
  }

 private:
  const PresentedAlgebra& P_;
  const HopfData& H_;
  int hd_;
  int d_;
  std::map<std::pair<int, Word>, WordComb> act_memo_;
  std::map<Word, SVec> nf_memo_;
};

SVec theta_vec(const DihedralIndex& ix, int k, long r, const CycScalar& c) { return SVec::unit(ix.idx(k, r), c); }

// anticommutator of generators a and b as an element of H (theta basis)
SVec anticommutator(const LiftingData& d, const std::vector<GeneratorInfo>& gi, const FunctionAlgebra& F, int a, int b) {
  const GeneratorInfo& u = gi[a];
  const GeneratorInfo& v = gi[b];
  const DihedralIndex& ix = F.ix;
  const SVec& one = F.theta.unit;
  auto get = [](const auto& m, const auto& k) {
    auto it = m.find(k);
    return it == m.end() ? CycScalar(0) : it->second;
  };
  if (u.is_y != v.is_y) return {};
  if (u.is_y) {
    if (u.r == v.r || u.i != v.i) return {};
    const GeneratorInfo& y1 = u.r == 1 ? u : v;
    const GeneratorInfo& y2 = u.r == 1 ? v : u;
    const int i = y1.i;
    const int k = y1.k;
    const int q = y2.k;
    CycScalar z = get(d.zeta, std::array<int, 3>{i, k, q});
    CycScalar zp = get(d.zeta, std::array<int, 3>{i, q, k});
    // zeta_{i,k,q}(1 - theta_{0,q-k}) - zeta_{i,q,k} theta_{1,k-q}
    return z * one - theta_vec(ix, 0, q - k, z) - theta_vec(ix, 1, k - q, zp);
  }
  const int l = u.ell;
  const int t = v.ell;
  std::pair<int, int> sym{std::min(l, t), std::max(l, t)};
  if (u.r == 1 && v.r == 1) {
    CycScalar mu = get(d.mu, sym);
    CycScalar nu = get(d.nu, sym);
    return mu * one - theta_vec(ix, 0, -l - t, mu) - theta_vec(ix, 1, l + t, nu);
  }
  if (u.r == 2 && v.r == 2) {
    CycScalar mu = get(d.mu, sym);
    CycScalar nu = get(d.nu, sym);
    return nu * one - theta_vec(ix, 0, l + t, nu) - theta_vec(ix, 1, -l - t, mu);
  }
  const GeneratorInfo& x1 = u.r == 1 ? u : v;
  const GeneratorInfo& x2 = u.r == 1 ? v : u;
  CycScalar t1 = get(d.tau, std::pair<int, int>{x1.ell, x2.ell});
  CycScalar t2 = get(d.tau, std::pair<int, int>{x2.ell, x1.ell});
  // tau_{l,t}(1 - theta_{0,t-l}) - tau_{t,l} theta_{1,l-t} with x1 of weight l
  return t1 * one - theta_vec(ix, 0, x2.ell - x1.ell, t1) - theta_vec(ix, 1, x1.ell - x2.ell, t2);
}

SVec tensor(int dim, const SVec& x, const SVec& y) {
  SAccum acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) acc.add(i * dim + j, a * b);
  return acc.take();
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

SVec normal_form(const PresentedAlgebra& P, const FreeElem& x) {
  Rewriter rw(P);
  return rw.normal_form(x);
}

PresentedAlgebra build_presented(const GroupDatum& g, const LiftingData& d0) {
  PresentedAlgebra P;
  P.data = validate_lifting(g, d0);
  P.M = family_module(g, P.data);
  NicholsData B = build_nichols(P.M);
  const int d = B.d;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (B.q[a * d + b] != CycScalar(-1))
        throw UnsupportedModule("generators " + P.M.label(a) + ", " + P.M.label(b) + " do not anticommute");
  P.masks = B.masks;
  P.index_of = B.index_of;
  const FunctionAlgebra& F = *P.M.F;
  const HopfData& H = F.theta;
  const int hd = H.dim;
  std::vector<GeneratorInfo> gi = generator_info(P.data);
  P.anticommutator.assign(static_cast<std::size_t>(d) * d, SVec());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) P.anticommutator[static_cast<std::size_t>(a) * d + b] = anticommutator(P.data, gi, F, a, b);

  Rewriter rw(P);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      FreeElem r = rw.word_elem({a, b});
      for (const auto& [k, c] : rw.word_elem({b, a})) add_to(r, k, c);
      for (const auto& [k, c] : rw.h_elem(P.anticommutator[static_cast<std::size_t>(a) * d + b])) add_to(r, k, -c);
      P.relations.push_back(std::move(r));
      P.relation_labels.push_back(P.M.label(a) + P.M.label(b) + " + " + P.M.label(b) + P.M.label(a));
    }

  // overlap ambiguities
  P.confluence.title = "rewriting confluence";
  {
    std::string bad;
    for (int a = 0; a < d && bad.empty(); ++a)
      for (int b = 0; b <= a && bad.empty(); ++b)
        for (int c = 0; c <= b && bad.empty(); ++c) {
          Word w{a, b, c};
          if (rw.apply_rule(w, 0) != rw.apply_rule(w, 1)) bad = word_label(P.M, w);
        }
    P.confluence.add("word overlaps", bad.empty(), bad);
    if (!bad.empty()) throw ConfluenceFailure("overlap " + bad + " has two normal forms");
    for (int t = 0; t < hd && bad.empty(); ++t)
      for (int a = 0; a < d && bad.empty(); ++a)
        for (int b = 0; b <= a && bad.empty(); ++b) {
          FreeElem reduct = rw.h_elem(P.anticommutator[static_cast<std::size_t>(a) * d + b]);
          if (a > b) {
            for (const auto& [k, c] : rw.word_elem({b, a})) add_to(reduct, k, -c);
          } else {
            for (auto& [k, c] : reduct) c *= CycScalar(1, 2);
          }
          FreeElem h{{{Word{}, t}, 1}};
          SVec first = rw.normal_form(rw.mul(h, reduct));
          SVec moved = rw.normal_form(rw.mul(h, rw.word_elem({a, b})));
          if (first != moved) bad = H.label(t) + " " + word_label(P.M, {a, b});
        }
    P.confluence.add("H-commutation overlaps", bad.empty(), bad);
    if (!bad.empty()) throw ConfluenceFailure("overlap " + bad + " has two normal forms");
  }

  HopfData& A = P.A;
  const int nb = static_cast<int>(P.masks.size());
  const int n = nb * hd;
  const long expected = ipow(4, static_cast<int>(P.data.I.pairs.size() + P.data.L.ells.size())) * 2 * g.m;
  if (n != expected) throw DimensionMismatch("presented algebra has dimension " + std::to_string(n));
  A.m = g.m;
  A.dim = n;
  std::vector<Word> words(nb);
  for (int u = 0; u < nb; ++u) {
    for (int a = 0; a < d; ++a)
      if (P.masks[u] & (1U << a)) words[u].push_back(a);
    for (int t = 0; t < hd; ++t) A.labels.push_back(B.algebra.label(u) + "#" + H.label(t));
  }
  A.unit = H.unit;
  A.counit = H.counit;
  A.mult.assign(static_cast<std::size_t>(n) * n, SVec());
  for (int u = 0; u < nb; ++u)
    for (int s = 0; s < hd; ++s)
      for (int v = 0; v < nb; ++v) {
        // (u s)(v t) = u (s1 . v) s2 t
        std::vector<std::pair<SVec, int>> parts;
        for (const auto& [p, c] : H.comult[s])
          for (const auto& [w, cw] : rw.act_word(p / hd, words[v])) {
            Word uw = words[u];
            uw.insert(uw.end(), w.begin(), w.end());
            parts.emplace_back(c * cw * rw.nf_word(uw), p % hd);
          }
        for (int t = 0; t < hd; ++t) {
          SAccum acc;
          for (const auto& [vec, s2] : parts)
            for (const auto& [r, x] : H.mul_basis(s2, t)) acc.add(x, rw.rmul(vec, r));
          A.mult[static_cast<std::size_t>(u * hd + s) * n + v * hd + t] = acc.take();
        }
      }

  // Delta(x) = x (x) 1 + x_(-1) (x) x_(0); S(x) = -S(x_(-1)) x_(0)
  auto gen = [&](int a) { return H.unit.reindex([&](int t) { return (1 + a) * hd + t; }); };
  std::vector<SVec> dgen(d);
  std::vector<SVec> sgen(d);
  for (int a = 0; a < d; ++a) {
    SAccum acc;
    acc.add(tensor(n, gen(a), A.unit));
    SAccum s;
    for (const auto& [p, c] : P.M.coaction[a]) {
      acc.add(c, tensor(n, SVec::unit(p / d), gen(p % d)));
      s.add(-c, A.mul(H.antipode[p / d], gen(p % d)));
    }
    dgen[a] = acc.take();
    sgen[a] = s.take();
  }
  A.comult.assign(n, SVec());
  A.antipode.assign(n, SVec());
  for (int u = 0; u < nb; ++u)
    for (int t = 0; t < hd; ++t) {
      SVec D = tensor(n, A.unit, A.unit);
      for (int a : words[u]) D = A.tensor_mul(D, dgen[a]);
      // S(x_1 ... x_k h) = S(h) S(x_k) ... S(x_1)
      SVec S = H.antipode[t];
      for (auto it = words[u].rbegin(); it != words[u].rend(); ++it) S = A.mul(S, sgen[*it]);
      A.comult[u * hd + t] = A.tensor_mul(D, H.comult[t].reindex([&](int p) { return (p / hd) * n + p % hd; }));
      A.antipode[u * hd + t] = S;
    }
  return P;
}

Report hopf_ideal_check(const PresentedAlgebra& P) {
  Report r;
  r.title = "Hopf ideal";
  Rewriter rw(P);
  const HopfData& H = P.M.H();
  const int hd = H.dim;
  const int d = P.d();
  const int n = P.A.dim;
  std::vector<FreeTensor> dgen(d);
  std::vector<FreeElem> sgen(d);
  for (int a = 0; a < d; ++a) {
    for (const auto& [s, cs] : H.unit)
      for (const auto& [t, ct] : H.unit) add_to(dgen[a], {{Word{a}, s}, {Word{}, t}}, cs * ct);
    for (const auto& [p, c] : P.M.coaction[a])
      for (const auto& [t, ct] : H.unit) add_to(dgen[a], {{Word{}, p / d}, {Word{p % d}, t}}, c * ct);
    FreeElem s;
    for (const auto& [p, c] : P.M.coaction[a]) {
      FreeElem term = rw.mul(rw.h_elem(H.antipode[p / d]), rw.word_elem({p % d}));
      for (const auto& [k, v] : term) add_to(s, k, -c * v);
    }
    sgen[a] = s;
  }
  auto delta = [&](const FreeKey& k) {
    FreeTensor D;
    for (const auto& [s, cs] : H.unit)
      for (const auto& [t, ct] : H.unit) add_to(D, {{Word{}, s}, {Word{}, t}}, cs * ct);
    for (int a : k.first) D = rw.mul(D, dgen[a]);
    FreeTensor Dh;
    for (const auto& [p, c] : H.comult[k.second]) add_to(Dh, {{Word{}, p / hd}, {Word{}, p % hd}}, c);
    return rw.mul(D, Dh);
  };
  auto antipode = [&](const FreeKey& k) {
    FreeElem S = rw.h_elem(H.antipode[k.second]);
    for (auto it = k.first.rbegin(); it != k.first.rend(); ++it) S = rw.mul(S, sgen[*it]);
    return S;
  };
  std::string bad_eps, bad_delta, bad_s, bad_nf;
  for (std::size_t i = 0; i < P.relations.size(); ++i) {
    const FreeElem& rel = P.relations[i];
    CycScalar e;
    FreeTensor D;
    FreeElem S;
    for (const auto& [k, c] : rel) {
      if (k.first.empty()) e += c * H.counit.at(k.second);
      for (const auto& [kk, v] : delta(k)) add_to(D, kk, c * v);
      for (const auto& [kk, v] : antipode(k)) add_to(S, kk, c * v);
    }
    if (!e.is_zero() && bad_eps.empty()) bad_eps = P.relation_labels[i];
    if (!rw.normal_form(rel).is_zero() && bad_nf.empty()) bad_nf = P.relation_labels[i];
    SAccum dd;
    for (const auto& [kk, v] : D)
      dd.add(v, tensor(n, rw.normal_form(FreeElem{{kk.first, 1}}), rw.normal_form(FreeElem{{kk.second, 1}})));
    if (!dd.take().is_zero() && bad_delta.empty()) bad_delta = P.relation_labels[i];
    if (!rw.normal_form(S).is_zero() && bad_s.empty()) bad_s = P.relation_labels[i];
  }
  r.add("relations vanish in the quotient", bad_nf.empty(), bad_nf);
  r.add("eps(J) = 0", bad_eps.empty(), bad_eps);
  r.add("Delta(J) in J (x) A + A (x) J", bad_delta.empty(), bad_delta);
  r.add("S(J) in J", bad_s.empty(), bad_s);
  return r;
}

Report compare_presentation_vs_deformation(const PresentedAlgebra& P, const HopfData& D) {
  Report r;
  r.title = "presentation vs deformation";
  const HopfData& A = P.A;
  const HopfData& H = P.M.H();
  const int hd = H.dim;
  const int d = P.d();
  const int n = A.dim;
  r.add("dimensions agree", A.dim == D.dim, A.dim == D.dim ? "" : std::to_string(A.dim) + " vs " + std::to_string(D.dim));
  if (A.dim != D.dim) return r;
  auto gen = [&](int a) { return H.unit.reindex([&](int t) { return (1 + a) * hd + t; }); };
  // H sits at indices 0..hd-1 on both sides

  // relations of P evaluated in D
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      SVec x = gen(a);
      SVec y = gen(b);
      SVec res = D.mul(x, y) + D.mul(y, x) - P.anticommutator[static_cast<std::size_t>(a) * d + b];
      if (!res.is_zero())
        throw MismatchWitness(P.M.label(a) + P.M.label(b) + " + " + P.M.label(b) + P.M.label(a) +
                              " differs by " + D.show(res));
    }
  for (int s = 0; s < hd; ++s)
    for (int t = 0; t < hd; ++t)
      if (D.mul_basis(s, t) != H.mul_basis(s, t)) throw MismatchWitness("H product " + H.label(s) + H.label(t));
  for (int t = 0; t < hd; ++t)
    for (int a = 0; a < d; ++a) {
      // h x = (h1 . x) h2
      SAccum moved;
      for (const auto& [p, c] : H.comult[t])
        for (const auto& [b, cb] : P.M.act(p / hd, a)) moved.add(c * cb, D.mul(gen(b), SVec::unit(p % hd)));
      if (D.mul(SVec::unit(t), gen(a)) != moved.take())
        throw MismatchWitness("commutation " + H.label(t) + " " + P.M.label(a));
    }
  r.add("relations of P hold in D", true);

  // phi(x_{u1} ... x_{uk} theta_t) = x_{u1} ... x_{uk} theta_t computed in D
  std::vector<SVec> phi(n);
  const int nb = static_cast<int>(P.masks.size());
  for (int u = 0; u < nb; ++u) {
    SVec w = D.unit;
    for (int a = 0; a < d; ++a)
      if (P.masks[u] & (1U << a)) w = D.mul(w, gen(a));
    for (int t = 0; t < hd; ++t) phi[u * hd + t] = D.mul(w, SVec::unit(t));
  }
  auto apply = [&](const SVec& v) {
    SAccum acc;
    for (const auto& [i, c] : v) acc.add(c, phi[i]);
    return acc.take();
  };
  std::string bad;
  std::vector<SVec> gens;
  for (int a = 0; a < d; ++a) gens.push_back(gen(a));
  for (int t = 0; t < hd; ++t) gens.push_back(SVec::unit(t));
  for (const auto& x : gens) {
    for (int e = 0; e < n && bad.empty(); ++e)
      if (apply(A.mul(x, SVec::unit(e))) != D.mul(apply(x), phi[e])) bad = A.show(x) + " * " + A.label(e);
  }
  r.add("phi is multiplicative", bad.empty(), bad);
  bad.clear();
  for (int e = 0; e < n && bad.empty(); ++e) {
    SAccum lhs;
    for (const auto& [p, c] : A.comult[e]) {
      const SVec& l = phi[p / n];
      const SVec& rr = phi[p % n];
      for (const auto& [i, ci] : l)
        for (const auto& [j, cj] : rr) lhs.add(i * n + j, c * ci * cj);
    }
    if (lhs.take() != D.delta(phi[e])) bad = A.label(e);
  }
  r.add("phi is a coalgebra map", bad.empty(), bad);
  bad.clear();
  if (D.counit != A.counit) bad = "counit";
  r.add("phi preserves the counit", bad.empty(), bad);
  Subspace img = Subspace::span(n, phi);
  r.add("phi is bijective", img.dim() == n, img.dim() == n ? "" : "rank " + std::to_string(img.dim()));
  return r;
}

Report coradical_check(const HopfData& D, const FunctionAlgebra& F) {
  Report r;
  r.title = "coradical";
  const int hd = F.dim();
  std::vector<SVec> h;
  for (int t = 0; t < hd; ++t) h.push_back(SVec::unit(t));
  Subspace emb = Subspace::span(D.dim, h);
  Subspace c = coradical(D);
  r.add("coradical equals the embedded k^{D_m}", c == emb, c == emb ? "" : "dim " + std::to_string(c.dim()));
  return r;
}

std::vector<MenuEntry> classify_menu(const GroupDatum& g, int max_rank) {
  std::vector<MenuEntry> out;
  out.push_back({"H", {}, {}, 2L * g.m, 0});
  if (max_rank <= 0) return out;
  auto dim = [&](std::size_t r) { return ipow(4, static_cast<int>(r)) * 2 * g.m; };
  for (const auto& I : enumerate_I(g, max_rank))
    out.push_back({"A", I, {}, dim(I.pairs.size()), lifting_keys(Family::A, I, {}).count()});
  for (const auto& L : enumerate_L(g, max_rank))
    out.push_back({"B", {}, L, dim(L.ells.size()), lifting_keys(Family::B, {}, L).count()});
  for (const auto& K : enumerate_K(g, max_rank))
    out.push_back({"C", K.I, K.L, dim(K.I.pairs.size() + K.L.ells.size()), lifting_keys(Family::C, K.I, K.L).count()});
  return out;
}

}  // namespace hopfforge
