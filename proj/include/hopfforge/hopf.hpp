#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfforge/linalg.hpp"

namespace hopfforge {

// One line of a verification report.
struct Check {
  std::string name;
  bool pass = true;
  std::string witness;  // empty on pass
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string witness = {}, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(witness), std::move(detail)});
  }
  void merge(const Report& o, const std::string& prefix = {});
  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::string to_text() const;
};

// Finite-dimensional Hopf algebra as structure constants.
// Tensor-square vectors use the pair index a*dim + b.
struct HopfData {
  int m = 0;  // order of the coefficient field Q(w); used for serialisation
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<SVec> mult;      // mult[i*dim + j] = e_i e_j
  SVec unit;
  std::vector<SVec> comult;    // comult[i] = Delta(e_i) over pair indices
  SVec counit;                 // counit as a functional: entry i = eps(e_i)
  std::vector<SVec> antipode;  // antipode[i] = S(e_i)
  std::optional<std::vector<int>> grading;

  [[nodiscard]] int pair(int a, int b) const { return a * dim + b; }
  [[nodiscard]] const SVec& mul_basis(int i, int j) const { return mult[static_cast<std::size_t>(i) * dim + j]; }
  [[nodiscard]] SVec mul(const SVec& x, const SVec& y) const;
  [[nodiscard]] SVec delta(const SVec& x) const;
  [[nodiscard]] SVec S(const SVec& x) const;
  [[nodiscard]] CycScalar eps(const SVec& x) const { return counit.dot(x); }
  // Product in A (x) A of pair-indexed vectors.
  [[nodiscard]] SVec tensor_mul(const SVec& x, const SVec& y) const;
  // Delta (x) id and id (x) Delta on a pair vector, giving triple indices.
  [[nodiscard]] SVec delta_left(const SVec& xy) const;
  [[nodiscard]] SVec delta_right(const SVec& xy) const;
  [[nodiscard]] std::string label(int i) const {
    return i >= 0 && i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i);
  }
  [[nodiscard]] std::string show(const SVec& v) const;
  [[nodiscard]] std::string show_pair(const SVec& v) const;
  [[nodiscard]] const CyclotomicField& field() const { return CyclotomicField::get(m > 0 ? m : 1); }
};

// Delta terms grouped by their left or right tensor factor.
struct CoIndex {
  struct Term {
    int elem;   // basis element whose coproduct contains the term
    int other;  // the opposite tensor factor
    CycScalar c;
  };
  std::vector<std::vector<Term>> by_left;   // by_left[u]: Delta(elem) has c u (x) other
  std::vector<std::vector<Term>> by_right;  // by_right[w]: Delta(elem) has c other (x) w
  explicit CoIndex(const HopfData& A);
};

// Scalar bilinear form on A, stored by rows: rows[a] holds b -> f(e_a, e_b).
struct Bilinear {
  int dim = 0;
  std::vector<SVec> rows;

  Bilinear() = default;
  explicit Bilinear(int d) : dim(d), rows(d) {}
  static Bilinear eps_eps(const HopfData& A);
  [[nodiscard]] CycScalar at(int a, int b) const { return rows[a].at(b); }
  // f(e_a, v) for a vector v
  [[nodiscard]] CycScalar eval_right(int a, const SVec& v) const { return rows[a].dot(v); }
  [[nodiscard]] CycScalar eval(const SVec& x, const SVec& y) const;
  [[nodiscard]] std::vector<SVec> columns() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::size_t nnz() const;
  friend bool operator==(const Bilinear& a, const Bilinear& b) { return a.dim == b.dim && a.rows == b.rows; }
  friend bool operator!=(const Bilinear& a, const Bilinear& b) { return !(a == b); }
  Bilinear& operator+=(const Bilinear& o);
  Bilinear& operator*=(const CycScalar& c);
};

struct VerifyOptions {
  // Brute force over all basis triples up to this dimension; above it the
  // axioms are checked on a generating set, which implies them everywhere.
  int brute_force_max_dim = 64;
};

Report verify_hopf(const HopfData& A, const VerifyOptions& opt = {});
// Coalgebra axioms only (coassociativity, counit).
Report verify_coalgebra(const HopfData& A);

// Greedy generating set of A as an algebra (indices of basis elements).
std::vector<int> algebra_generators(const HopfData& A);
// Subalgebra generated by the given elements (with 1).
Subspace generated_subalgebra(const HopfData& A, const std::vector<SVec>& gens);

// Convolution of functionals (vectors of values on the basis).
SVec convolution(const HopfData& A, const SVec& f, const SVec& g);
SVec convolution_inverse(const HopfData& A, const SVec& f);
// Convolution of bilinear forms, using Delta (x) Delta componentwise.
Bilinear convolution(const HopfData& A, const CoIndex& ci, const Bilinear& f, const Bilinear& g);
Bilinear convolution(const HopfData& A, const Bilinear& f, const Bilinear& g);
// Inverse via the geometric series when eps(x)eps - f is convolution
// nilpotent; otherwise NotInvertible.
Bilinear convolution_inverse(const HopfData& A, const Bilinear& f);

std::vector<SVec> group_likes(const HopfData& A);
Subspace skew_primitives(const HopfData& A, const SVec& g, const SVec& h);
Subspace coradical(const HopfData& A);
// Delta(U) inside U (x) A and A (x) U.
bool is_subcoalgebra(const HopfData& A, const Subspace& U);
HopfData dual(const HopfData& A);

// Degree-homogeneous pieces: the component of a bilinear form on
// A_p (x) A_q with p + q = d (requires a grading).
Bilinear homogeneous_component(const HopfData& A, const Bilinear& f, int d);

}  // namespace hopfforge
