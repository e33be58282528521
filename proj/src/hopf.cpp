#include "hopfforge/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfforge {

// ---------------------------------------------------------------- Report

void Report::merge(const Report& o, const std::string& prefix) {
  for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.pass, c.witness, c.detail});
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title.empty()) os << "== " << title << " ==\n";
  for (const auto& c : checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    if (!c.pass && !c.witness.empty()) os << "\n      witness: " << c.witness;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- HopfData

SVec HopfData::mul(const SVec& x, const SVec& y) const {
  SAccum acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) acc.add(a * b, mul_basis(i, j));
  return acc.take();
}

SVec HopfData::delta(const SVec& x) const {
  SAccum acc;
  for (const auto& [i, a] : x) acc.add(a, comult[i]);
  return acc.take();
}

SVec HopfData::S(const SVec& x) const {
  SAccum acc;
  for (const auto& [i, a] : x) acc.add(a, antipode[i]);
  return acc.take();
}

SVec HopfData::tensor_mul(const SVec& x, const SVec& y) const {
  SAccum acc;
  for (const auto& [p, a] : x) {
    int i1 = p / dim;
    int i2 = p % dim;
    for (const auto& [q, b] : y) {
      int j1 = q / dim;
      int j2 = q % dim;
      const SVec& l = mul_basis(i1, j1);
      const SVec& r = mul_basis(i2, j2);
      if (l.is_zero() || r.is_zero()) continue;
      CycScalar ab = a * b;
      for (const auto& [k1, c1] : l) {
        CycScalar t = ab * c1;
        for (const auto& [k2, c2] : r) acc.add(pair(k1, k2), t * c2);
      }
    }
  }
  return acc.take();
}

SVec HopfData::delta_left(const SVec& xy) const {
  SAccum acc;
  for (const auto& [p, c] : xy) {
    int a = p / dim;
    int b = p % dim;
    for (const auto& [q, d] : comult[a]) acc.add(q * dim + b, c * d);
  }
  return acc.take();
}

SVec HopfData::delta_right(const SVec& xy) const {
  SAccum acc;
  for (const auto& [p, c] : xy) {
    int a = p / dim;
    int b = p % dim;
    for (const auto& [q, d] : comult[b]) acc.add(a * dim * dim + q, c * d);
  }
  return acc.take();
}

std::string HopfData::show(const SVec& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c.pretty() << ")*";
    os << label(i);
  }
  return os.str();
}

std::string HopfData::show_pair(const SVec& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c.pretty() << ")*";
    os << label(p / dim) << "@" << label(p % dim);
  }
  return os.str();
}

CoIndex::CoIndex(const HopfData& A) : by_left(A.dim), by_right(A.dim) {
  for (int e = 0; e < A.dim; ++e)
    for (const auto& [p, c] : A.comult[e]) {
      by_left[p / A.dim].push_back({e, p % A.dim, c});
      by_right[p % A.dim].push_back({e, p / A.dim, c});
    }
}

// ---------------------------------------------------------------- Bilinear

Bilinear Bilinear::eps_eps(const HopfData& A) {
  Bilinear f(A.dim);
  for (const auto& [a, c] : A.counit) f.rows[a] = c * A.counit;
  return f;
}

CycScalar Bilinear::eval(const SVec& x, const SVec& y) const {
  CycScalar s;
  for (const auto& [a, c] : x) {
    CycScalar r = rows[a].dot(y);
    if (!r.is_zero()) s += c * r;
  }
  return s;
}

std::vector<SVec> Bilinear::columns() const {
  std::vector<std::vector<SVec::Entry>> cols(dim);
  for (int a = 0; a < dim; ++a)
    for (const auto& [b, c] : rows[a]) cols[b].emplace_back(a, c);
  std::vector<SVec> out;
  out.reserve(dim);
  for (auto& c : cols) out.push_back(SVec::from_entries(std::move(c)));
  return out;
}

bool Bilinear::is_zero() const {
  return std::all_of(rows.begin(), rows.end(), [](const SVec& r) { return r.is_zero(); });
}

std::size_t Bilinear::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.nnz();
  return n;
}

Bilinear& Bilinear::operator+=(const Bilinear& o) {
  if (o.dim != dim) throw DimensionMismatch("bilinear forms on different spaces");
  for (int a = 0; a < dim; ++a) rows[a] += o.rows[a];
  return *this;
}

Bilinear& Bilinear::operator*=(const CycScalar& c) {
  for (auto& r : rows) r *= c;
  return *this;
}

// ---------------------------------------------------------------- verify

namespace {

std::string triple(const HopfData& A, int i, int j, int k) {
  return "(" + A.label(i) + ", " + A.label(j) + ", " + A.label(k) + ")";
}

SVec vec_times_basis(const HopfData& A, const SVec& x, int k) {
  SAccum acc;
  for (const auto& [i, a] : x) acc.add(a, A.mul_basis(i, k));
  return acc.take();
}

SVec basis_times_vec(const HopfData& A, int i, const SVec& y) {
  SAccum acc;
  for (const auto& [j, b] : y) acc.add(b, A.mul_basis(i, j));
  return acc.take();
}

// m(S (x) id) Delta and m(id (x) S) Delta applied to e_i
std::pair<SVec, SVec> antipode_sides(const HopfData& A, int i) {
  SAccum l;
  SAccum r;
  for (const auto& [p, c] : A.comult[i]) {
    int a = p / A.dim;
    int b = p % A.dim;
    for (const auto& [s, d] : A.antipode[a]) l.add(c * d, A.mul_basis(s, b));
    for (const auto& [s, d] : A.antipode[b]) r.add(c * d, A.mul_basis(a, s));
  }
  return {l.take(), r.take()};
}

Report check_shapes(const HopfData& A) {
  Report r;
  std::string why;
  std::size_t d = static_cast<std::size_t>(A.dim);
  if (A.dim <= 0) why = "dim must be positive";
  else if (A.mult.size() != d * d) why = "mult table has wrong size";
  else if (A.comult.size() != d) why = "comult has wrong size";
  else if (A.antipode.size() != d) why = "antipode has wrong size";
  else if (!A.labels.empty() && A.labels.size() != d) why = "label count differs from dim";
  else if (A.unit.max_index() >= A.dim || A.counit.max_index() >= A.dim) why = "unit/counit index out of range";
  else if (A.grading && A.grading->size() != d) why = "grading length differs from dim";
  else {
    for (const auto& v : A.mult)
      if (v.max_index() >= A.dim) why = "mult entry out of range";
    for (const auto& v : A.comult)
      if (v.max_index() >= A.dim * A.dim) why = "comult entry out of range";
    for (const auto& v : A.antipode)
      if (v.max_index() >= A.dim) why = "antipode entry out of range";
  }
  r.add("shapes", why.empty(), why);
  return r;
}

void check_grading(const HopfData& A, Report& rep) {
  if (!A.grading) return;
  const auto& deg = *A.grading;
  std::string w;
  for (int i = 0; i < A.dim && w.empty(); ++i)
    for (int j = 0; j < A.dim && w.empty(); ++j)
      for (const auto& [k, c] : A.mul_basis(i, j))
        if (deg[k] != deg[i] + deg[j]) {
          w = triple(A, i, j, k);
          break;
        }
  rep.add("grading.mult", w.empty(), w);
  w.clear();
  for (int i = 0; i < A.dim && w.empty(); ++i)
    for (const auto& [p, c] : A.comult[i])
      if (deg[p / A.dim] + deg[p % A.dim] != deg[i]) {
        w = triple(A, i, p / A.dim, p % A.dim);
        break;
      }
  rep.add("grading.comult", w.empty(), w);
  w.clear();
  for (int i = 0; i < A.dim && w.empty(); ++i)
    for (const auto& [k, c] : A.antipode[i])
      if (deg[k] != deg[i]) {
        w = A.label(i);
        break;
      }
  rep.add("grading.antipode", w.empty(), w);
}

}  // namespace

Report verify_coalgebra(const HopfData& A) {
  Report rep;
  rep.title = "coalgebra axioms";
  rep.merge(check_shapes(A));
  if (!rep.ok()) return rep;
  std::string w;
  for (int i = 0; i < A.dim && w.empty(); ++i)
    if (A.delta_left(A.comult[i]) != A.delta_right(A.comult[i])) w = A.label(i);
  rep.add("coassociativity", w.empty(), w);
  w.clear();
  for (int i = 0; i < A.dim && w.empty(); ++i) {
    SAccum l;
    SAccum r;
    for (const auto& [p, c] : A.comult[i]) {
      l.add(p % A.dim, c * A.counit.at(p / A.dim));
      r.add(p / A.dim, c * A.counit.at(p % A.dim));
    }
    SVec e = SVec::unit(i);
    if (l.take() != e || r.take() != e) w = A.label(i);
  }
  rep.add("counit", w.empty(), w);
  return rep;
}

Report verify_hopf(const HopfData& A, const VerifyOptions& opt) {
  Report rep;
  rep.title = "Hopf algebra axioms";
  rep.merge(check_shapes(A));
  if (!rep.ok()) return rep;
  const int d = A.dim;

  std::string w;
  for (int i = 0; i < d && w.empty(); ++i) {
    SVec e = SVec::unit(i);
    if (A.mul(A.unit, e) != e || A.mul(e, A.unit) != e) w = A.label(i);
  }
  rep.add("unit", w.empty(), w);

  bool brute = d <= opt.brute_force_max_dim;
  std::vector<int> gens;
  if (brute) {
    gens.resize(d);
    std::iota(gens.begin(), gens.end(), 0);
  } else {
    gens = algebra_generators(A);
    std::vector<SVec> gv;
    for (int g : gens) gv.push_back(SVec::unit(g));
    bool spans = generated_subalgebra(A, gv).dim() == d;
    rep.add("generators_span", spans, spans ? "" : "greedy generating set does not generate",
            std::to_string(gens.size()) + " generators");
  }
  std::string strategy = brute ? "all basis triples" : "generators x basis x basis";

  // associativity
  w.clear();
  for (int g : gens) {
    for (int y = 0; y < d && w.empty(); ++y) {
      const SVec& gy = A.mul_basis(g, y);
      for (int z = 0; z < d; ++z) {
        if (vec_times_basis(A, gy, z) != basis_times_vec(A, g, A.mul_basis(y, z))) {
          w = triple(A, g, y, z);
          break;
        }
      }
    }
    if (!w.empty()) break;
  }
  rep.add("associativity", w.empty(), w, strategy);

  // elements on which coalgebra-type identities are checked
  std::vector<SVec> pts;
  std::vector<std::string> names;
  pts.push_back(A.unit);
  names.push_back("1");
  for (int g : gens) {
    pts.push_back(SVec::unit(g));
    names.push_back(A.label(g));
  }

  w.clear();
  for (std::size_t t = 0; t < pts.size() && w.empty(); ++t) {
    SVec D = A.delta(pts[t]);
    if (A.delta_left(D) != A.delta_right(D)) w = names[t];
  }
  rep.add("coassociativity", w.empty(), w);

  w.clear();
  for (std::size_t t = 0; t < pts.size() && w.empty(); ++t) {
    SVec D = A.delta(pts[t]);
    SAccum l;
    SAccum r;
    for (const auto& [p, c] : D) {
      l.add(p % d, c * A.counit.at(p / d));
      r.add(p / d, c * A.counit.at(p % d));
    }
    if (l.take() != pts[t] || r.take() != pts[t]) w = names[t];
  }
  rep.add("counit", w.empty(), w);

  SVec one_one = SVec::from_entries({});
  {
    SAccum acc;
    for (const auto& [a, c] : A.unit)
      for (const auto& [b, e] : A.unit) acc.add(A.pair(a, b), c * e);
    one_one = acc.take();
  }
  rep.add("comult.unit", A.delta(A.unit) == one_one, "Delta(1) != 1@1");
  rep.add("counit.unit", A.eps(A.unit).is_one(), "eps(1) != 1");

  w.clear();
  for (int g : gens) {
    for (int y = 0; y < d; ++y) {
      if (A.comult[static_cast<std::size_t>(g)].is_zero() && A.comult[y].is_zero()) continue;
      SVec lhs = A.delta(A.mul_basis(g, y));
      SVec rhs = A.tensor_mul(A.comult[g], A.comult[y]);
      if (lhs != rhs) {
        w = "(" + A.label(g) + ", " + A.label(y) + ")";
        break;
      }
    }
    if (!w.empty()) break;
  }
  rep.add("comult.multiplicative", w.empty(), w);

  w.clear();
  for (int g : gens) {
    for (int y = 0; y < d; ++y)
      if (A.eps(A.mul_basis(g, y)) != A.counit.at(g) * A.counit.at(y)) {
        w = "(" + A.label(g) + ", " + A.label(y) + ")";
        break;
      }
    if (!w.empty()) break;
  }
  rep.add("counit.multiplicative", w.empty(), w);

  if (!brute) {
    w.clear();
    for (int g : gens) {
      for (int y = 0; y < d; ++y)
        if (A.S(A.mul_basis(g, y)) != A.mul(A.antipode[y], A.antipode[g])) {
          w = "(" + A.label(g) + ", " + A.label(y) + ")";
          break;
        }
      if (!w.empty()) break;
    }
    rep.add("antipode.antimultiplicative", w.empty(), w);
  }

  w.clear();
  for (std::size_t t = 0; t < pts.size() && w.empty(); ++t) {
    SAccum l;
    SAccum r;
    for (const auto& [i, c] : pts[t]) {
      auto [a, b] = antipode_sides(A, i);
      l.add(c, a);
      r.add(c, b);
    }
    SVec target = A.eps(pts[t]) * A.unit;
    if (l.take() != target || r.take() != target) w = names[t];
  }
  rep.add("antipode", w.empty(), w);

  check_grading(A, rep);
  return rep;
}

// ---------------------------------------------------------------- generators

namespace {

struct Closure {
  const HopfData& A;
  Echelon ech;
  std::vector<SVec> span;  // actual products, independent
  std::vector<SVec> gens;

  explicit Closure(const HopfData& a) : A(a) {
    if (ech.insert(A.unit)) span.push_back(A.unit);
  }
  [[nodiscard]] bool contains(const SVec& v) const { return ech.contains(v); }

  void add_generator(const SVec& g) {
    gens.push_back(g);
    std::vector<SVec> queue;
    std::size_t existing = span.size();
    for (std::size_t i = 0; i < existing; ++i) {
      SVec p = A.mul(g, span[i]);
      if (ech.insert(p)) {
        span.push_back(p);
        queue.push_back(p);
      }
    }
    while (!queue.empty() && static_cast<int>(ech.rank()) < A.dim) {
      SVec w = std::move(queue.back());
      queue.pop_back();
      for (const auto& h : gens) {
        SVec p = A.mul(h, w);
        if (ech.insert(p)) {
          span.push_back(p);
          queue.push_back(p);
        }
      }
    }
  }
};

}  // namespace

std::vector<int> algebra_generators(const HopfData& A) {
  std::vector<int> order(A.dim);
  std::iota(order.begin(), order.end(), 0);
  if (A.grading) {
    const auto& deg = *A.grading;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });
  }
  Closure cl(A);
  std::vector<int> gens;
  for (int c : order) {
    if (static_cast<int>(cl.ech.rank()) == A.dim) break;
    SVec e = SVec::unit(c);
    if (cl.contains(e)) continue;
    cl.add_generator(e);
    gens.push_back(c);
  }
  return gens;
}

Subspace generated_subalgebra(const HopfData& A, const std::vector<SVec>& gens) {
  Closure cl(A);
  for (const auto& g : gens) cl.add_generator(g);
  return Subspace::span(A.dim, cl.span);
}

// ---------------------------------------------------------------- convolution

SVec convolution(const HopfData& A, const SVec& f, const SVec& g) {
  auto fd = f.to_dense(A.dim);
  auto gd = g.to_dense(A.dim);
  std::vector<SVec::Entry> out;
  for (int a = 0; a < A.dim; ++a) {
    CycScalar s;
    for (const auto& [p, c] : A.comult[a]) {
      const CycScalar& x = fd[p / A.dim];
      const CycScalar& y = gd[p % A.dim];
      if (!x.is_zero() && !y.is_zero()) s += c * x * y;
    }
    if (!s.is_zero()) out.emplace_back(a, s);
  }
  return SVec::from_entries(std::move(out));
}

SVec convolution_inverse(const HopfData& A, const SVec& f) {
  auto fd = f.to_dense(A.dim);
  // unknown g; equation for each a: sum_{terms} c f(u) g(v) = eps(a)
  std::vector<std::vector<SVec::Entry>> cols(A.dim);
  for (int a = 0; a < A.dim; ++a)
    for (const auto& [p, c] : A.comult[a]) {
      const CycScalar& x = fd[p / A.dim];
      if (!x.is_zero()) cols[p % A.dim].emplace_back(a, c * x);
    }
  std::vector<SVec> images;
  for (auto& c : cols) images.push_back(SVec::from_entries(std::move(c)));
  auto sol = solve_columns(images, A.counit);
  if (!sol) throw NotInvertible("functional has no convolution inverse");
  if (convolution(A, *sol, f) != A.counit) throw NotInvertible("one-sided inverse only");
  return *sol;
}

Bilinear convolution(const HopfData& A, const CoIndex& ci, const Bilinear& f, const Bilinear& g) {
  if (f.dim != A.dim || g.dim != A.dim) throw DimensionMismatch("bilinear form on a different algebra");
  Bilinear out(A.dim);
  for (int a = 0; a < A.dim; ++a) {
    SAccum acc;
    for (const auto& [p, c] : A.comult[a]) {
      int a1 = p / A.dim;
      int a2 = p % A.dim;
      if (f.rows[a1].is_zero() || g.rows[a2].is_zero()) continue;
      for (const auto& [b1, v] : f.rows[a1]) {
        CycScalar cv = c * v;
        for (const auto& t : ci.by_left[b1]) {
          const CycScalar* gv = g.rows[a2].find(t.other);
          if (gv) acc.add(t.elem, cv * t.c * *gv);
        }
      }
    }
    out.rows[a] = acc.take();
  }
  return out;
}

Bilinear convolution(const HopfData& A, const Bilinear& f, const Bilinear& g) {
  CoIndex ci(A);
  return convolution(A, ci, f, g);
}

Bilinear convolution_inverse(const HopfData& A, const Bilinear& f) {
  CoIndex ci(A);
  Bilinear ee = Bilinear::eps_eps(A);
  Bilinear n = ee;
  n *= CycScalar(-1);
  n += f;
  n *= CycScalar(-1);  // n = ee - f
  Bilinear sum = ee;
  Bilinear term = ee;
  for (int k = 1; k <= 2 * A.dim + 2; ++k) {
    term = convolution(A, ci, term, n);
    if (term.is_zero()) {
      if (convolution(A, ci, f, sum) != ee) break;
      return sum;
    }
    sum += term;
  }
  throw NotInvertible("eps@eps - f is not convolution nilpotent");
}

Bilinear homogeneous_component(const HopfData& A, const Bilinear& f, int d) {
  if (!A.grading) throw DimensionMismatch("homogeneous component needs a grading");
  const auto& deg = *A.grading;
  Bilinear out(A.dim);
  for (int a = 0; a < A.dim; ++a) {
    std::vector<SVec::Entry> e;
    for (const auto& [b, c] : f.rows[a])
      if (deg[a] + deg[b] == d) e.emplace_back(b, c);
    out.rows[a] = SVec::from_entries(std::move(e));
  }
  return out;
}

}  // namespace hopfforge
