#include "hopfforge/linalg.hpp"

#include <algorithm>

namespace hopfforge {

// ---------------------------------------------------------------- SVec

SVec SVec::from_dense(const std::vector<CycScalar>& d) {
  SVec v;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) v.e_.emplace_back(static_cast<int>(i), d[i]);
  return v;
}

SVec SVec::from_entries(std::vector<Entry> entries) {
  SVec v;
  if (entries.empty()) return v;
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  v.e_.reserve(entries.size());
  for (auto& e : entries) {
    if (!v.e_.empty() && v.e_.back().first == e.first) {
      v.e_.back().second += e.second;
    } else {
      if (!v.e_.empty() && v.e_.back().second.is_zero()) v.e_.pop_back();
      v.e_.push_back(std::move(e));
    }
  }
  if (!v.e_.empty() && v.e_.back().second.is_zero()) v.e_.pop_back();
  return v;
}

CycScalar SVec::at(int i) const {
  const CycScalar* p = find(i);
  return p ? *p : CycScalar();
}

const CycScalar* SVec::find(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& e, int k) { return e.first < k; });
  if (it != e_.end() && it->first == i) return &it->second;
  return nullptr;
}

std::vector<CycScalar> SVec::to_dense(int dim) const {
  std::vector<CycScalar> d(dim);
  for (const auto& [i, c] : e_) {
    if (i >= dim) throw DimensionMismatch("sparse index beyond dense dimension");
    d[i] = c;
  }
  return d;
}

void SVec::axpy(const CycScalar& c, const SVec& o) {
  if (c.is_zero() || o.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + o.e_.size());
  auto a = e_.begin();
  auto b = o.e_.begin();
  bool unit = c.is_one();
  while (a != e_.end() || b != o.e_.end()) {
    if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == e_.end() || b->first < a->first) {
      out.emplace_back(b->first, unit ? b->second : c * b->second);
      ++b;
    } else {
      CycScalar s = a->second + (unit ? b->second : c * b->second);
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

SVec& SVec::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    e_.clear();
  } else if (!c.is_one()) {
    for (auto& e : e_) e.second *= c;
  }
  return *this;
}

bool operator==(const SVec& a, const SVec& b) {
  if (a.e_.size() != b.e_.size()) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i].first != b.e_[i].first || a.e_[i].second != b.e_[i].second) return false;
  return true;
}

CycScalar SVec::dot(const SVec& o) const {
  CycScalar s;
  auto a = e_.begin();
  auto b = o.e_.begin();
  while (a != e_.end() && b != o.e_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

// ---------------------------------------------------------------- Echelon

int Echelon::row_for_pivot(int p) const {
  auto it = std::lower_bound(by_pivot_.begin(), by_pivot_.end(), std::make_pair(p, -1));
  if (it != by_pivot_.end() && it->first == p) return it->second;
  return -1;
}

SVec Echelon::reduce(SVec v, SVec* comb) const {
  if (comb) *comb = SVec();
  std::size_t k = 0;
  while (k < v.nnz()) {
    int idx = v.entries()[k].first;
    int r = row_for_pivot(idx);
    if (r < 0) {
      ++k;
      continue;
    }
    CycScalar c = v.entries()[k].second;
    v.axpy(-c, rows_[r]);
    if (comb && track_) comb->axpy(c, origin_[r]);
  }
  return v;
}

bool Echelon::insert(const SVec& v, int tag, SVec* relation) {
  SVec comb;
  SVec r = reduce(v, track_ ? &comb : nullptr);
  if (r.is_zero()) {
    if (relation && track_) {
      *relation = SVec::unit(tag);
      relation->axpy(-1, comb);
    }
    return false;
  }
  CycScalar inv = r.entries().front().second.inverse();
  r *= inv;
  int p = r.leading();
  if (track_) {
    SVec o = SVec::unit(tag);
    o.axpy(-1, comb);
    o *= inv;
    origin_.push_back(std::move(o));
  }
  rows_.push_back(std::move(r));
  pivot_.push_back(p);
  auto it = std::lower_bound(by_pivot_.begin(), by_pivot_.end(), std::make_pair(p, -1));
  by_pivot_.insert(it, {p, static_cast<int>(rows_.size()) - 1});
  return true;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(int ambient, const std::vector<SVec>& gens) {
  Echelon e;
  for (const auto& g : gens) {
    if (g.max_index() >= ambient) throw DimensionMismatch("generator outside ambient space");
    e.insert(g);
  }
  std::vector<SVec> rows = e.rows();
  std::sort(rows.begin(), rows.end(), [](const SVec& a, const SVec& b) { return a.leading() < b.leading(); });
  std::vector<int> piv;
  for (const auto& r : rows) piv.push_back(r.leading());
  // back substitution, last row first
  for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
    SAccum acc;
    acc.add(rows[i]);
    for (const auto& [j, c] : rows[i]) {
      if (j == piv[i]) continue;
      auto it = std::lower_bound(piv.begin(), piv.end(), j);
      if (it == piv.end() || *it != j) continue;
      acc.add(-c, rows[it - piv.begin()]);
    }
    rows[i] = acc.take();
  }
  Subspace s(ambient);
  s.rows_ = std::move(rows);
  s.pivots_ = std::move(piv);
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<std::vector<CycScalar>>& gens) {
  std::vector<SVec> s;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != ambient) throw DimensionMismatch("generator length differs from ambient");
    s.push_back(SVec::from_dense(g));
  }
  return span(ambient, s);
}

Subspace Subspace::full(int ambient) {
  std::vector<SVec> g;
  for (int i = 0; i < ambient; ++i) g.push_back(SVec::unit(i));
  return span(ambient, g);
}

SVec Subspace::reduce(SVec v) const {
  SAccum acc;
  acc.add(v);
  for (const auto& [j, c] : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), j);
    if (it == pivots_.end() || *it != j) continue;
    acc.add(-c, rows_[it - pivots_.begin()]);
  }
  return acc.take();
}

bool Subspace::contains(const SVec& v) const {
  if (v.max_index() >= ambient_) return false;
  return reduce(v).is_zero();
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambient spaces");
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambient spaces");
  std::vector<SVec> g = rows_;
  g.insert(g.end(), o.rows_.begin(), o.rows_.end());
  return span(ambient_, g);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambient spaces");
  std::vector<SVec> cols = rows_;
  for (const auto& r : o.rows_) cols.push_back(-1 * r);
  Subspace k = kernel_of_columns(static_cast<int>(cols.size()), cols);
  std::vector<SVec> out;
  int r = dim();
  for (const auto& kv : k.basis()) {
    SAccum acc;
    for (const auto& [j, c] : kv)
      if (j < r) acc.add(c, rows_[j]);
    out.push_back(acc.take());
  }
  return span(ambient_, out);
}

Subspace Subspace::annihilator() const {
  std::vector<std::vector<std::pair<int, CycScalar>>> colrows(ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, c] : rows_[i])
      if (j != pivots_[i]) colrows[j].emplace_back(pivots_[i], c);
  std::vector<SVec> out;
  std::size_t p = 0;
  for (int f = 0; f < ambient_; ++f) {
    if (p < pivots_.size() && pivots_[p] == f) {
      ++p;
      continue;
    }
    std::vector<SVec::Entry> e;
    e.emplace_back(f, 1);
    for (auto& [pc, c] : colrows[f]) e.emplace_back(pc, -c);
    out.push_back(SVec::from_entries(std::move(e)));
  }
  return span(ambient_, out);
}

// ---------------------------------------------------------------- Mat

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(int rows, const std::vector<SVec>& cols) {
  Mat m(rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) {
      if (i >= rows) throw DimensionMismatch("column entry beyond row count");
      m(i, static_cast<int>(j)) = c;
    }
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw DimensionMismatch("vector length differs from column count");
  Vec out(r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

SVec Mat::column(int j) const {
  std::vector<SVec::Entry> e;
  for (int i = 0; i < r_; ++i)
    if (!(*this)(i, j).is_zero()) e.emplace_back(i, (*this)(i, j));
  return SVec::from_entries(std::move(e));
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw DimensionMismatch("matrix product shape mismatch");
  Mat p(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const CycScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += x * b(k, j);
    }
  return p;
}

namespace {

// Gauss-Jordan in place; returns pivot columns. Pivot row = smallest height.
std::vector<int> rref(Mat& a, int ncols) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < ncols && row < a.rows(); ++col) {
    int best = -1;
    std::size_t bh = 0;
    for (int r = row; r < a.rows(); ++r) {
      if (a(r, col).is_zero()) continue;
      std::size_t h = a(r, col).height();
      if (best < 0 || h < bh) {
        best = r;
        bh = h;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(best, j), a(row, j));
    CycScalar inv = a(row, col).inverse();
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      CycScalar f = a(r, col);
      for (int j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

}  // namespace

Subspace kernel(const Mat& m) {
  Mat a = m;
  auto piv = rref(a, m.cols());
  std::vector<SVec> out;
  std::size_t p = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (p < piv.size() && piv[p] == f) {
      ++p;
      continue;
    }
    std::vector<SVec::Entry> e;
    e.emplace_back(f, 1);
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (!a(static_cast<int>(r), f).is_zero()) e.emplace_back(piv[r], -a(static_cast<int>(r), f));
    out.push_back(SVec::from_entries(std::move(e)));
  }
  return Subspace::span(m.cols(), out);
}

Subspace image(const Mat& m) {
  std::vector<SVec> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.rows(), cols);
}

int rank(const Mat& m) {
  Mat a = m;
  return static_cast<int>(rref(a, m.cols()).size());
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  Mat a(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    a(i, m.cols()) = b[i];
  }
  auto piv = rref(a, m.cols() + 1);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a(static_cast<int>(r), m.cols());
  return x;
}

Subspace kernel_of_columns(int domain, const std::vector<SVec>& images) {
  if (static_cast<int>(images.size()) != domain) throw DimensionMismatch("one image per domain basis vector expected");
  Echelon e(true);
  std::vector<SVec> rel;
  for (int j = 0; j < domain; ++j) {
    SVec r;
    if (!e.insert(images[j], j, &r)) rel.push_back(std::move(r));
  }
  return Subspace::span(domain, rel);
}

Subspace image_of_columns(int codomain, const std::vector<SVec>& images) { return Subspace::span(codomain, images); }

int rank_of_columns(const std::vector<SVec>& images) {
  Echelon e;
  for (const auto& v : images) e.insert(v);
  return static_cast<int>(e.rank());
}

std::optional<SVec> solve_columns(const std::vector<SVec>& images, const SVec& b) {
  Echelon e(true);
  for (std::size_t j = 0; j < images.size(); ++j) e.insert(images[j], static_cast<int>(j));
  SVec comb;
  SVec r = e.reduce(b, &comb);
  if (!r.is_zero()) return std::nullopt;
  return comb;
}

}  // namespace hopfforge
