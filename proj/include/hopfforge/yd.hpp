#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hopfforge/dihedral.hpp"

namespace hopfforge {

// Shared, immutable k^{D_m} per m.
std::shared_ptr<const FunctionAlgebra> function_algebra(const GroupDatum& g);

enum class HBasis { Theta, Phi };

// Yetter-Drinfeld module over k^{D_m}, expressed in one of the two bases of H.
struct YDModule {
  std::shared_ptr<const FunctionAlgebra> F;
  HBasis basis = HBasis::Theta;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<SVec> action;    // action[h*dim + v] = e_h . v  (vector in V)
  std::vector<SVec> coaction;  // coaction[v] = lambda(v), pair index h*dim + w
  std::vector<int> degrees;

  [[nodiscard]] const HopfData& H() const { return basis == HBasis::Theta ? F->theta : F->phi; }
  [[nodiscard]] int hdim() const { return H().dim; }
  [[nodiscard]] const SVec& act(int h, int v) const { return action[static_cast<std::size_t>(h) * dim + v]; }
  [[nodiscard]] SVec act(const SVec& h, const SVec& v) const;
  [[nodiscard]] std::string label(int i) const { return i < static_cast<int>(labels.size()) ? labels[i] : std::to_string(i); }
};

using IndexPair = std::pair<int, int>;

struct IndexDatumI {
  std::vector<IndexPair> pairs;
};
struct IndexDatumL {
  std::vector<int> ells;
};
struct IndexDatumK {
  IndexDatumI I;
  IndexDatumL L;
};

std::vector<IndexPair> enumerate_J(const GroupDatum& g);
bool in_J(const GroupDatum& g, int i, int k);
// Validators return the (sorted) datum or throw ValidationError.
IndexDatumI validate_I(const GroupDatum& g, std::vector<IndexPair> pairs);
IndexDatumL validate_L(const GroupDatum& g, std::vector<int> ells);
IndexDatumK validate_K(const GroupDatum& g, std::vector<IndexPair> pairs, std::vector<int> ells);
// All valid data of length 1..max_rank (non-decreasing sequences).
std::vector<IndexDatumI> enumerate_I(const GroupDatum& g, int max_rank);
std::vector<IndexDatumL> enumerate_L(const GroupDatum& g, int max_rank);
// Both parts non-empty, total length <= max_rank.
std::vector<IndexDatumK> enumerate_K(const GroupDatum& g, int max_rank);

YDModule build_M_ik(const GroupDatum& g, int i, int k, HBasis basis = HBasis::Theta);
YDModule build_M_ell(const GroupDatum& g, int ell, HBasis basis = HBasis::Theta);
YDModule zero_module(const GroupDatum& g, HBasis basis = HBasis::Theta);
YDModule direct_sum(const std::vector<YDModule>& parts);
YDModule build_M_I(const GroupDatum& g, const IndexDatumI& I, HBasis basis = HBasis::Theta);
YDModule build_M_L(const GroupDatum& g, const IndexDatumL& L, HBasis basis = HBasis::Theta);
YDModule build_M_IL(const GroupDatum& g, const IndexDatumK& K, HBasis basis = HBasis::Theta);

// Re-express the module over the other basis of H.
YDModule change_H_basis(const YDModule& M, HBasis target);
// Change of basis on V: new basis vector j = sum_i P(i,j) old_i (P invertible).
YDModule change_V_basis(const YDModule& M, const Mat& P, std::vector<std::string> labels);

Report verify_yd(const YDModule& M);

// Matrix of c_{M,N}: M (x) N -> N (x) M; index of m_i (x) n_j is i*dimN + j.
Mat braiding(const YDModule& M, const YDModule& N);

YDModule tensor_product(const YDModule& M, const YDModule& N);
// Restriction to a YD submodule given as a subspace (throws InvalidYDInput if
// not stable). Basis: the RREF rows of U.
YDModule submodule(const YDModule& M, const Subspace& U, const std::string& label_prefix);

// Maps f: M -> N commuting with action and coaction with deg f(v) = deg v + ell.
// Returned inside the space of all maps, coordinate a*dimM + b for (N_a, M_b).
Subspace yd_hom_space(const YDModule& M, const YDModule& N, int ell);

// kD_m-side module: homogeneous basis with degrees in D_m, action of the
// generators g and h.
struct GroupYD {
  int m = 12;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<DihedralElem> degrees;
  Mat rho_g;
  Mat rho_h;
};

GroupYD group_M_ik(const GroupDatum& g, int i, int k);
GroupYD group_M_ell(const GroupDatum& g, int ell);
GroupYD group_trivial(const GroupDatum& g);
// f . v = f(S(v_(-1))) v_(0) and lambda(v) = sum_x phi_{x^-1} (x) x . v, in
// the phi basis.
YDModule dual_transport(const GroupDatum& g, const GroupYD& G);
// Back to the group side (module must be in the phi basis or is converted).
GroupYD dual_transport_back(const YDModule& M);
bool same_structure(const YDModule& a, const YDModule& b);

}  // namespace hopfforge
