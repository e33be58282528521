#pragma once

#include <utility>

#include "hopfforge/hopf.hpp"

namespace hopfforge {

// Element g^i h^j of D_m, i in {0,1}, j mod m.
struct DihedralElem {
  int i = 0;
  int j = 0;
  friend bool operator==(DihedralElem a, DihedralElem b) { return a.i == b.i && a.j == b.j; }
};

// All index arithmetic on D_m goes through here: first index mod 2, second
// mod m, and (i,j)(k,l) = (i+k, (-1)^k j + l).
struct DihedralIndex {
  int m;
  [[nodiscard]] int mod2(long x) const { return static_cast<int>(((x % 2) + 2) % 2); }
  [[nodiscard]] int modm(long x) const { return static_cast<int>(((x % m) + m) % m); }
  [[nodiscard]] int sign(int k) const { return mod2(k) == 0 ? 1 : -1; }
  [[nodiscard]] DihedralElem norm(long i, long j) const { return {mod2(i), modm(j)}; }
  [[nodiscard]] DihedralElem mul(DihedralElem a, DihedralElem b) const {
    return norm(a.i + b.i, sign(b.i) * a.j + b.j);
  }
  [[nodiscard]] DihedralElem inv(DihedralElem a) const { return a.i == 0 ? norm(0, -a.j) : a; }
  // basis index of phi_{i,j} or theta_{i,j}
  [[nodiscard]] int idx(long i, long j) const { return mod2(i) * m + modm(j); }
};

// k^{D_m} in two bases. `phi` uses the dual basis phi_{i,j} of the group
// elements; `theta` uses theta_{k,r} = sum_l w^{rl} phi_{k,l}, in which all
// structure constants have at most two terms.
struct FunctionAlgebra {
  GroupDatum g;
  DihedralIndex ix{12};
  HopfData phi;
  HopfData theta;

  [[nodiscard]] int dim() const { return 2 * g.m; }
  // Coordinate changes between the two bases.
  [[nodiscard]] SVec theta_to_phi(const SVec& v) const;
  [[nodiscard]] SVec phi_to_theta(const SVec& v) const;
};

FunctionAlgebra build_function_algebra(const GroupDatum& g);

// theta_{k,r} and the linear characters alpha_0..alpha_3, in the phi basis.
SVec theta(const FunctionAlgebra& F, int k, long r);
SVec character(const FunctionAlgebra& F, int idx);
// Value of alpha_idx at g^i h^j.
int character_value(int idx, int i, int j);

// Identities among the theta elements and the characters.
Report theta_identities(const FunctionAlgebra& F);
Report character_checks(const FunctionAlgebra& F);
// The dual of k^{D_m} against the group algebra with g^2 = 1 = h^m, gh = h^{-1}g.
Report verify_dual_is_group_algebra(const FunctionAlgebra& F);

// Group algebra kD_m with basis e_{i,j} = g^i h^j (index i*m + j).
HopfData build_group_algebra(const GroupDatum& g);

}  // namespace hopfforge
