#pragma once

#include <cstdint>
#include <map>

#include "hopfforge/yd.hpp"

namespace hopfforge {

// Nichols algebra of a module whose braiding is c(x_a (x) x_b) = q_ab x_b (x) x_a
// with q_aa = -1 and q_ab q_ba = 1: the (quantum) exterior algebra, dim 2^d.
struct NicholsData {
  YDModule M;                   // generators, theta basis of H
  int d = 0;                    // number of generators
  int dim = 0;                  // 2^d
  std::vector<std::uint32_t> masks;  // monomial index -> generator set
  std::map<std::uint32_t, int> index_of;
  std::vector<CycScalar> q;     // q[a*d + b]
  HopfData algebra;             // B with braided comult; antipode = braided antipode
  YDModule yd;                  // B itself as a YD module (degrees = word length)
  Subspace relations;           // R inside M (x) M, index a*d + b

  [[nodiscard]] int generator(int a) const { return 1 + a; }
  [[nodiscard]] int degree(int i) const { return __builtin_popcount(masks[i]); }
  [[nodiscard]] const std::string& label(int i) const { return algebra.labels[i]; }
};

NicholsData build_nichols(const YDModule& M);

// Braided product on B (x) B: (a (x) b)(c (x) d) = a (b_(-1) . c) (x) b_(0) d.
SVec braided_tensor_mul(const NicholsData& B, const SVec& x, const SVec& y);
// Generic checks: associativity, braided coassociativity/counit, braided
// multiplicativity of Delta, antipode, and P(B) = degree 1.
Report verify_nichols(const NicholsData& B);
Subspace braided_primitives(const NicholsData& B);

struct Bosonization {
  NicholsData B;
  std::shared_ptr<const FunctionAlgebra> F;
  HopfData A;                // basis b # theta_t at index b*hdim + t
  std::vector<SVec> pi;      // pi[a] in H (theta basis)
  std::vector<SVec> iota;    // iota[t] in A
  [[nodiscard]] int hdim() const { return F->dim(); }
  [[nodiscard]] int index(int b, int t) const { return b * hdim() + t; }
};

Bosonization bosonize(const NicholsData& B);
// Right coinvariants {a : (id (x) pi) Delta(a) = a (x) 1}.
Subspace coinvariants(const HopfData& A, const std::vector<SVec>& pi, const HopfData& H);
Subspace coinvariants(const Bosonization& X);
// pi o iota = id, both are Hopf maps, coinvariants = B # 1.
Report verify_bosonization(const Bosonization& X);

struct MBResult {
  int dim = 0;
  int ambient = 0;          // basis of B (x) B, index i*dimB + j (only i, j in B+ occur)
  Subspace relations;       // span{xy (x) z - x (x) yz}
  std::vector<SVec> lifted; // representatives of a basis of M(B)
};
// ker(B+ (x)_B B+ -> B+) for an augmented algebra; `plus` lists the basis of B+.
MBResult compute_MB(int dim, const std::vector<SVec>& mult, const std::vector<int>& plus);
MBResult compute_MB(const NicholsData& B);
// M(B) as a YD module, realised on the relation space R (exterior B).
YDModule mb_module(const NicholsData& B);

}  // namespace hopfforge
