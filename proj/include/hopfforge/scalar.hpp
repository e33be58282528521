#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hopfforge/errors.hpp"

namespace hopfforge {

class CycScalar;

// Q(w) realised as Q[x]/Phi_m(x). One instance per m, shared process-wide.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int m);

  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] int phi() const noexcept { return phi_; }
  // Coefficients of Phi_m, lowest degree first (monic, integral).
  [[nodiscard]] const std::vector<std::int64_t>& cyclotomic_poly() const noexcept { return poly_; }
  // x^e mod Phi_m for 0 <= e < 2*phi, as integer vectors of length phi.
  [[nodiscard]] const std::vector<std::int64_t>& power_reduction(int e) const { return pow_[e]; }

  [[nodiscard]] CycScalar root_power(long e) const;
  [[nodiscard]] CycScalar from_coeffs(const std::vector<mpq_class>& c) const;

  // Complex embeddings w -> exp(2 pi i j / m) with gcd(j, m) = 1.
  [[nodiscard]] const std::vector<int>& embedding_exponents() const noexcept { return units_; }

 private:
  explicit CyclotomicField(int m);
  int m_;
  int phi_;
  std::vector<std::int64_t> poly_;
  std::vector<std::vector<std::int64_t>> pow_;
  std::vector<std::vector<std::int64_t>> roots_;
  std::vector<int> units_;
};

// Element of Q(w). Stored as integer numerators over one positive common
// denominator, trailing zero coefficients trimmed, gcd-normalised. Small
// values live in machine words; overflow promotes to a GMP representation.
// The field pointer may be null for rational constants.
class CycScalar {
 public:
  CycScalar() = default;
  CycScalar(std::int64_t v);  // NOLINT(google-explicit-constructor)
  CycScalar(std::int64_t num, std::int64_t den);
  static CycScalar from_mpq(const mpq_class& q);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_.empty(); }
  [[nodiscard]] bool is_one() const noexcept {
    return !big_ && num_.size() == 1 && num_[0] == 1 && den_ == 1;
  }
  [[nodiscard]] bool is_rational() const noexcept;
  [[nodiscard]] const CyclotomicField* field() const noexcept { return field_; }

  // Coefficient list padded to length phi(m) of the given field.
  [[nodiscard]] std::vector<mpq_class> coeffs(const CyclotomicField& f) const;
  [[nodiscard]] std::vector<mpq_class> coeffs() const;
  [[nodiscard]] std::vector<std::string> to_strings(const CyclotomicField& f) const;
  static CycScalar from_strings(const CyclotomicField& f, const std::vector<std::string>& s);

  // Human readable, e.g. "1/2 - w^2".
  [[nodiscard]] std::string pretty() const;
  [[nodiscard]] std::size_t height() const;
  [[nodiscard]] std::size_t hash() const;

  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o) { return *this *= o.inverse(); }
  [[nodiscard]] CycScalar inverse() const;

  // Image under the automorphism w -> w^j (gcd(j,m)=1). galois(m-1) is
  // complex conjugation.
  [[nodiscard]] CycScalar galois(int j) const;
  [[nodiscard]] std::complex<double> embed(int j) const;

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  // a += b * c without materialising the product's normalisation twice.
  static void fma(CycScalar& acc, const CycScalar& b, const CycScalar& c);

 private:
  friend class CyclotomicField;
  struct Big {
    std::vector<mpz_class> num;
    mpz_class den;
  };
  using Small = boost::container::small_vector<std::int64_t, 8>;

  [[nodiscard]] Big to_big() const;
  void assign_big(Big b);
  void normalize_small();
  static const CyclotomicField* join(const CycScalar& a, const CycScalar& b);

  const CyclotomicField* field_ = nullptr;
  Small num_;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

// Group parameter of D_m. m = 4a with m >= 12 unless explicitly overridden.
struct GroupDatum {
  int m = 12;
  int a = 3;
  int n = 6;

  static GroupDatum make(int m, bool allow_small = false);
  [[nodiscard]] const CyclotomicField& field() const { return CyclotomicField::get(m); }
  [[nodiscard]] int mod(long x) const { return static_cast<int>(((x % m) + m) % m); }
};

CycScalar make_root_power(const GroupDatum& g, long e);

}  // namespace hopfforge
