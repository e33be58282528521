#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopfforge/scalar.hpp"

namespace hopfforge {

// Sparse vector: strictly increasing indices, no explicit zeros.
class SVec {
 public:
  using Entry = std::pair<int, CycScalar>;

  SVec() = default;
  static SVec unit(int i, CycScalar c = 1) {
    SVec v;
    if (!c.is_zero()) v.e_.emplace_back(i, std::move(c));
    return v;
  }
  static SVec from_dense(const std::vector<CycScalar>& d);
  // Entries may be unsorted and repeated; they are merged.
  static SVec from_entries(std::vector<Entry> entries);

  [[nodiscard]] bool is_zero() const noexcept { return e_.empty(); }
  [[nodiscard]] std::size_t nnz() const noexcept { return e_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return e_; }
  [[nodiscard]] auto begin() const { return e_.begin(); }
  [[nodiscard]] auto end() const { return e_.end(); }
  [[nodiscard]] CycScalar at(int i) const;
  [[nodiscard]] const CycScalar* find(int i) const;
  [[nodiscard]] std::vector<CycScalar> to_dense(int dim) const;
  [[nodiscard]] int leading() const { return e_.empty() ? -1 : e_.front().first; }
  [[nodiscard]] int max_index() const { return e_.empty() ? -1 : e_.back().first; }

  // this += c * o
  void axpy(const CycScalar& c, const SVec& o);
  SVec& operator+=(const SVec& o) {
    axpy(1, o);
    return *this;
  }
  SVec& operator-=(const SVec& o) {
    axpy(-1, o);
    return *this;
  }
  SVec& operator*=(const CycScalar& c);
  friend SVec operator+(SVec a, const SVec& b) { return a += b; }
  friend SVec operator-(SVec a, const SVec& b) { return a -= b; }
  friend SVec operator*(const CycScalar& c, SVec a) { return a *= c; }
  friend bool operator==(const SVec& a, const SVec& b);
  friend bool operator!=(const SVec& a, const SVec& b) { return !(a == b); }

  [[nodiscard]] CycScalar dot(const SVec& o) const;
  // Apply an index map (entries mapped to -1 are dropped).
  template <class F>
  [[nodiscard]] SVec reindex(F&& f) const {
    std::vector<Entry> out;
    out.reserve(e_.size());
    for (const auto& [i, c] : e_) {
      int j = f(i);
      if (j >= 0) out.emplace_back(j, c);
    }
    return from_entries(std::move(out));
  }

 private:
  std::vector<Entry> e_;
};

// Accumulates many scaled sparse vectors and merges once at the end.
class SAccum {
 public:
  void add(int i, const CycScalar& c) {
    if (!c.is_zero()) buf_.emplace_back(i, c);
  }
  void add(const CycScalar& c, const SVec& v) {
    if (c.is_zero()) return;
    for (const auto& [i, x] : v) buf_.emplace_back(i, c.is_one() ? x : c * x);
  }
  void add(const SVec& v) {
    for (const auto& e : v) buf_.push_back(e);
  }
  [[nodiscard]] SVec take() { return SVec::from_entries(std::move(buf_)); }
  [[nodiscard]] bool empty() const { return buf_.empty(); }

 private:
  std::vector<SVec::Entry> buf_;
};

// Incremental semi-echelon basis with leading-index pivots. Optionally tracks,
// for every stored row, its expression in terms of the inserted vectors.
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  // Reduces v against the basis. If comb is given it receives the combination
  // of stored rows' origins that was subtracted (so v_in = residue + used).
  [[nodiscard]] SVec reduce(SVec v, SVec* comb = nullptr) const;
  [[nodiscard]] bool contains(const SVec& v) const { return reduce(v).is_zero(); }

  // Inserts v (with origin label `tag` for tracking). Returns true if v was
  // independent. When dependent and tracking is on, `relation` receives the
  // linear relation among origins that v's dependence witnesses.
  bool insert(const SVec& v, int tag = -1, SVec* relation = nullptr);

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] const std::vector<SVec>& rows() const noexcept { return rows_; }

 private:
  bool track_;
  std::vector<SVec> rows_;
  std::vector<SVec> origin_;
  std::vector<int> pivot_;
  std::vector<std::pair<int, int>> by_pivot_;  // (pivot, row), sorted
  [[nodiscard]] int row_for_pivot(int p) const;
};

// A subspace of k^ambient in canonical reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace span(int ambient, const std::vector<SVec>& gens);
  static Subspace span(int ambient, const std::vector<std::vector<CycScalar>>& gens);
  static Subspace full(int ambient);

  [[nodiscard]] int ambient() const noexcept { return ambient_; }
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(rows_.size()); }
  [[nodiscard]] const std::vector<SVec>& basis() const noexcept { return rows_; }
  [[nodiscard]] const std::vector<int>& pivots() const noexcept { return pivots_; }

  [[nodiscard]] bool contains(const SVec& v) const;
  [[nodiscard]] bool contains(const Subspace& o) const;
  // Residue of v after clearing pivot columns.
  [[nodiscard]] SVec reduce(SVec v) const;

  [[nodiscard]] Subspace sum(const Subspace& o) const;
  [[nodiscard]] Subspace intersect(const Subspace& o) const;
  // {x : <u, x> = 0 for all u in this} under the standard pairing.
  [[nodiscard]] Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_ = 0;
  std::vector<SVec> rows_;
  std::vector<int> pivots_;
};

using Vec = std::vector<CycScalar>;

// Dense matrix, row major.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Mat identity(int n);
  // Columns given as sparse images of basis vectors.
  static Mat from_columns(int rows, const std::vector<SVec>& cols);

  [[nodiscard]] int rows() const noexcept { return r_; }
  [[nodiscard]] int cols() const noexcept { return c_; }
  CycScalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const CycScalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  [[nodiscard]] Vec apply(const Vec& v) const;
  [[nodiscard]] SVec column(int j) const;
  [[nodiscard]] Mat transpose() const;
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<CycScalar> a_;
};

// Dense elimination (pivot: smallest coefficient height in the column).
Subspace kernel(const Mat& m);
Subspace image(const Mat& m);
int rank(const Mat& m);
std::optional<Vec> solve(const Mat& m, const Vec& b);

// Sparse variants for linear maps given by the images of basis vectors.
Subspace kernel_of_columns(int domain, const std::vector<SVec>& images);
Subspace image_of_columns(int codomain, const std::vector<SVec>& images);
int rank_of_columns(const std::vector<SVec>& images);
// Solve sum_j x_j images[j] = b; nullopt if b is not in the span.
std::optional<SVec> solve_columns(const std::vector<SVec>& images, const SVec& b);

}  // namespace hopfforge
