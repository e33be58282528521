#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "hopfforge/nichols.hpp"

namespace hopfforge {

enum class Family { A, B, C };
char family_char(Family f);
Family family_from_char(char c);

// Lifting data keyed by index values (repeated entries of L share parameters).
struct LiftingData {
  Family kind = Family::A;
  int m = 12;
  IndexDatumI I;
  IndexDatumL L;
  std::map<std::array<int, 3>, CycScalar> zeta;  // (i,k,q)
  std::map<std::pair<int, int>, CycScalar> mu;   // l <= t
  std::map<std::pair<int, int>, CycScalar> nu;   // l <= t
  std::map<std::pair<int, int>, CycScalar> tau;  // all (l,t)
};

// Allowed parameter keys for the given family and index data.
struct LiftingKeys {
  std::vector<std::array<int, 3>> zeta;
  std::vector<std::pair<int, int>> mu;  // also the nu keys
  std::vector<std::pair<int, int>> tau;
  [[nodiscard]] int count() const { return static_cast<int>(zeta.size() + 2 * mu.size() + tau.size()); }
};
LiftingKeys lifting_keys(Family kind, const IndexDatumI& I, const IndexDatumL& L);

// Validates the index data for the family and every key; throws ValidationError
// or InvalidLiftingData. Returns the data with index data normalised.
LiftingData validate_lifting(const GroupDatum& g, LiftingData d);
LiftingData zero_lifting(const GroupDatum& g, Family kind, const IndexDatumI& I, const IndexDatumL& L);
// Parameters drawn uniformly from [-range, range].
LiftingData random_lifting(const GroupDatum& g, Family kind, const IndexDatumI& I, const IndexDatumL& L,
                           std::uint64_t seed, int range = 3);

YDModule family_module(const GroupDatum& g, const LiftingData& d);

struct GeneratorInfo {
  bool is_y = true;
  int r = 1;  // 1 or 2
  int i = 0;  // (i,k) for y generators
  int k = 0;
  int ell = 0;  // for x generators
};
std::vector<GeneratorInfo> generator_info(const LiftingData& d);

// ---------------------------------------------------------------- cocycles on B

std::vector<Bilinear> hochschild_cocycle_basis(const NicholsData& B);
// eps(a) f(b,c) - f(ab,c) + f(a,bc) - f(a,b) eps(c) = 0 on all basis triples.
Report check_hochschild_cocycle(const HopfData& B, const Bilinear& f);

struct InvarianceResult {
  bool ok = true;
  std::string witness;
};
// sum eta(h1 . x, h2 . y) = eps(h) eta(x,y) for every phi-basis h and basis x, y.
InvarianceResult is_H_invariant(const NicholsData& B, const Bilinear& eta);

Bilinear lifting_data_to_cocycle(const NicholsData& B, const LiftingData& d);

// ---------------------------------------------------------------- cocycles on A

// eta~(b # g, c # h) = eta(b, g . c) eps(h)
Bilinear extend_to_A(const Bosonization& X, const Bilinear& eta);

// sigma = sum f^{*i}/i!; throws CocycleCheckFailed unless the result is a
// normalized multiplicative 2-cocycle (skipped when verify is false).
Bilinear convolution_exp(const HopfData& A, const Bilinear& f, bool verify = true);

// Checks sigma(a,1) = eps(a) = sigma(1,a) and the multiplicative cocycle
// identity on all basis triples.
Report check_multiplicative_cocycle(const HopfData& A, const Bilinear& sigma);

HopfData deform(const HopfData& A, const Bilinear& sigma, const Bilinear& sigma_inv, bool verify_cocycle = true);
HopfData deform(const HopfData& A, const Bilinear& sigma);

// Cross-check of the formula sigma^{-1}(a,b) = sigma(S(a),b).
Report inverse_via_antipode(const HopfData& A, const Bilinear& sigma, const Bilinear& sigma_inv);

// A-valued 2-cochain x1 y1 f(x2,y2) - f(x1,y1) x2 y2, index x*dim + y.
std::vector<SVec> connecting_map(const HopfData& A, const Bilinear& f);
// a F(b,c) - F(ab,c) + F(a,bc) - F(a,b) c = 0 on all basis triples.
Report check_valued_hochschild_cocycle(const HopfData& A, const std::vector<SVec>& F);

// Whole cocycle pipeline for one lifting datum.
struct DeformationRun {
  LiftingData data;
  NicholsData B;
  Bosonization X;
  Bilinear eta;
  Bilinear eta_tilde;
  Bilinear sigma;
  Bilinear sigma_inv;
  HopfData D;
  Report report;
};
DeformationRun run_deformation(const GroupDatum& g, const LiftingData& d, bool verify_cocycle = true);

// ---------------------------------------------------------------- presentations

// Element of T(V) # H: (word, theta index) -> coefficient.
using FreeKey = std::pair<std::vector<int>, int>;
using FreeElem = std::map<FreeKey, CycScalar>;

struct PresentedAlgebra {
  LiftingData data;
  YDModule M;                   // generators, theta basis
  std::vector<std::string> relation_labels;
  std::vector<FreeElem> relations;
  std::vector<SVec> anticommutator;  // c(a,b) in H with x_a x_b + x_b x_a = c(a,b), index a*d + b
  std::vector<std::uint32_t> masks;  // normal words, same order as the Nichols basis
  std::map<std::uint32_t, int> index_of;
  HopfData A;
  Report confluence;
  [[nodiscard]] int hdim() const { return M.hdim(); }
  [[nodiscard]] int d() const { return M.dim; }
};

PresentedAlgebra build_presented(const GroupDatum& g, const LiftingData& d);
// Normal form of a free element in the presented algebra.
SVec normal_form(const PresentedAlgebra& P, const FreeElem& x);
// Delta, S and eps of the relations computed in T(V) # H vanish modulo J.
Report hopf_ideal_check(const PresentedAlgebra& P);

// Throws MismatchWitness when a defining relation of P fails in D.
Report compare_presentation_vs_deformation(const PresentedAlgebra& P, const HopfData& D);

// coradical(D) equals the span of the first 2m basis elements (the copy of H).
Report coradical_check(const HopfData& D, const FunctionAlgebra& F);

struct MenuEntry {
  std::string family;  // "H", "A", "B", "C"
  IndexDatumI I;
  IndexDatumL L;
  long dim = 0;
  int parameters = 0;
};
std::vector<MenuEntry> classify_menu(const GroupDatum& g, int max_rank);

}  // namespace hopfforge
