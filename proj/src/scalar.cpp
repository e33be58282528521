#include "hopfforge/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hopfforge {

namespace {

using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

int bits(i128 v) {
  if (v < 0) v = -v;
  int b = 0;
  while (v != 0) {
    v >>= 1;
    ++b;
  }
  return b;
}

// Integer polynomial division by a monic divisor (exact).
std::vector<std::int64_t> exact_div(std::vector<std::int64_t> a, const std::vector<std::int64_t>& d) {
  int da = static_cast<int>(a.size()) - 1;
  int dd = static_cast<int>(d.size()) - 1;
  std::vector<std::int64_t> q(da - dd + 1, 0);
  for (int i = da; i >= dd; --i) {
    std::int64_t c = a[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) a[i - dd + j] -= c * d[j];
  }
  return q;
}

std::vector<std::int64_t> cyclotomic(int m, std::map<int, std::vector<std::int64_t>>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  std::vector<std::int64_t> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = exact_div(p, cyclotomic(d, memo));
  memo[m] = p;
  return p;
}

}  // namespace

// ---------------------------------------------------------------- field

CyclotomicField::CyclotomicField(int m) : m_(m) {
  std::map<int, std::vector<std::int64_t>> memo;
  poly_ = cyclotomic(m, memo);
  phi_ = static_cast<int>(poly_.size()) - 1;
  // x^e mod Phi for e < max(m, 2 phi)
  int top = std::max(m, 2 * phi_);
  std::vector<std::int64_t> cur(phi_, 0);
  if (phi_ > 0) cur[0] = 1;
  for (int e = 0; e < top; ++e) {
    if (e < 2 * phi_) pow_.push_back(cur);
    if (e < m) roots_.push_back(cur);
    // multiply by x
    std::int64_t carry = cur[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < phi_; ++i) cur[i] -= carry * poly_[i];
  }
  for (int j = 1; j <= m; ++j)
    if (std::gcd(j, m) == 1) units_.push_back(j % m);
}

const CyclotomicField& CyclotomicField::get(int m) {
  if (m < 1) throw InvalidGroupDatum("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot.reset(new CyclotomicField(m));
  return *slot;
}

CycScalar CyclotomicField::root_power(long e) const {
  int r = static_cast<int>(((e % m_) + m_) % m_);
  CycScalar s;
  s.field_ = this;
  s.num_.assign(roots_[r].begin(), roots_[r].end());
  while (!s.num_.empty() && s.num_.back() == 0) s.num_.pop_back();
  return s;
}

CycScalar CyclotomicField::from_coeffs(const std::vector<mpq_class>& c) const {
  if (static_cast<int>(c.size()) > phi_) throw DimensionMismatch("too many coefficients for Q(w)");
  CycScalar acc;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    acc += CycScalar::from_mpq(c[i]) * root_power(static_cast<long>(i));
  }
  acc.field_ = this;
  return acc;
}

// ---------------------------------------------------------------- scalar

CycScalar::CycScalar(std::int64_t v) {
  if (v != 0) num_.push_back(v);
}

CycScalar::CycScalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (num == 0) return;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_.push_back(num / g);
  den_ = den / g;
}

CycScalar CycScalar::from_mpq(const mpq_class& q) {
  Big b;
  b.num.push_back(q.get_num());
  b.den = q.get_den();
  CycScalar s;
  s.assign_big(std::move(b));
  return s;
}

bool CycScalar::is_rational() const noexcept {
  if (big_) return big_->num.size() <= 1;
  return num_.size() <= 1;
}

CycScalar::Big CycScalar::to_big() const {
  if (big_) return *big_;
  Big b;
  b.num.reserve(num_.size());
  for (auto v : num_) b.num.emplace_back(static_cast<long>(v));
  b.den = static_cast<long>(den_);
  return b;
}

// Normalise (trim, sign, gcd) and store, demoting to machine words if possible.
void CycScalar::assign_big(Big b) {
  while (!b.num.empty() && b.num.back() == 0) b.num.pop_back();
  if (b.den == 0) throw DivisionByZero("zero denominator");
  if (b.num.empty()) {
    num_.clear();
    den_ = 1;
    big_.reset();
    return;
  }
  if (b.den < 0) {
    b.den = -b.den;
    for (auto& v : b.num) v = -v;
  }
  mpz_class g = b.den;
  for (const auto& v : b.num) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 1) {
    b.den /= g;
    for (auto& v : b.num) v /= g;
  }
  bool small = b.den.fits_slong_p();
  for (const auto& v : b.num) small = small && v.fits_slong_p() && v.get_si() != std::numeric_limits<long>::min();
  if (small) {
    num_.clear();
    for (const auto& v : b.num) num_.push_back(v.get_si());
    den_ = b.den.get_si();
    big_.reset();
  } else {
    num_.clear();
    den_ = 1;
    big_ = std::make_shared<const Big>(std::move(b));
  }
}

void CycScalar::normalize_small() {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  std::int64_t g = den_;
  for (auto v : num_) {
    if (g == 1) break;
    g = std::gcd(g, v);
  }
  if (g != 1) {
    den_ /= g;
    for (auto& v : num_) v /= g;
  }
}

const CyclotomicField* CycScalar::join(const CycScalar& a, const CycScalar& b) {
  return a.field_ != nullptr ? a.field_ : b.field_;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  if (big_) {
    Big b = *big_;
    for (auto& v : b.num) v = -v;
    r.big_ = std::make_shared<const Big>(std::move(b));
  } else {
    for (auto& v : r.num_) v = -v;
  }
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (o.is_zero()) return *this;
  const CyclotomicField* f = join(*this, o);
  if (is_zero()) {
    *this = o;
    field_ = f;
    return *this;
  }
  field_ = f;
  if (!big_ && !o.big_) {
    std::int64_t g = std::gcd(den_, o.den_);
    i128 fa = o.den_ / g;
    i128 fb = den_ / g;
    i128 den = static_cast<i128>(den_) * fa;
    std::size_t len = std::max(num_.size(), o.num_.size());
    bool ok = fits(den);
    Small out(len, 0);
    for (std::size_t i = 0; ok && i < len; ++i) {
      i128 v = 0;
      if (i < num_.size()) v += static_cast<i128>(num_[i]) * fa;
      if (i < o.num_.size()) v += static_cast<i128>(o.num_[i]) * fb;
      ok = fits(v);
      out[i] = static_cast<std::int64_t>(v);
    }
    if (ok) {
      num_ = std::move(out);
      den_ = static_cast<std::int64_t>(den);
      normalize_small();
      return *this;
    }
  }
  Big a = to_big();
  Big b = o.to_big();
  Big r;
  r.den = a.den * b.den;
  r.num.assign(std::max(a.num.size(), b.num.size()), 0);
  for (std::size_t i = 0; i < a.num.size(); ++i) r.num[i] += a.num[i] * b.den;
  for (std::size_t i = 0; i < b.num.size(); ++i) r.num[i] += b.num[i] * a.den;
  assign_big(std::move(r));
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  CycScalar r;
  if (a.is_zero() || b.is_zero()) return r;
  const CyclotomicField* f = CycScalar::join(a, b);
  r.field_ = f;
  std::size_t la = a.big_ ? a.big_->num.size() : a.num_.size();
  std::size_t lb = b.big_ ? b.big_->num.size() : b.num_.size();
  std::size_t lp = la + lb - 1;
  int phi = f ? f->phi() : 1;
  if (lp > static_cast<std::size_t>(phi) && f == nullptr) throw BaseMismatch("scalar without field");

  if (!a.big_ && !b.big_) {
    std::int64_t ma = 0;
    std::int64_t mb = 0;
    for (auto v : a.num_) ma = std::max<std::int64_t>(ma, v < 0 ? -v : v);
    for (auto v : b.num_) mb = std::max<std::int64_t>(mb, v < 0 ? -v : v);
    // crude bound on every intermediate coefficient
    int budget = bits(ma) + bits(mb) + bits(static_cast<i128>(lp)) + 2;
    if (lp > static_cast<std::size_t>(phi)) budget += 3 + bits(static_cast<i128>(phi));
    i128 den = static_cast<i128>(a.den_) * b.den_;
    if (budget < 120 && fits(den)) {
      boost::container::small_vector<i128, 16> prod(lp, 0);
      for (std::size_t i = 0; i < la; ++i)
        for (std::size_t j = 0; j < lb; ++j) prod[i + j] += static_cast<i128>(a.num_[i]) * b.num_[j];
      bool ok = true;
      if (lp > static_cast<std::size_t>(phi)) {
        boost::container::small_vector<i128, 16> red(phi, 0);
        for (std::size_t k = 0; k < lp; ++k) {
          if (prod[k] == 0) continue;
          if (k < static_cast<std::size_t>(phi)) {
            red[k] += prod[k];
          } else {
            const auto& pw = f->power_reduction(static_cast<int>(k));
            for (int i = 0; i < phi; ++i)
              if (pw[i] != 0) red[i] += prod[k] * pw[i];
          }
        }
        prod.assign(red.begin(), red.end());
      }
      r.num_.resize(prod.size());
      for (std::size_t i = 0; i < prod.size() && ok; ++i) {
        ok = fits(prod[i]);
        r.num_[i] = static_cast<std::int64_t>(prod[i]);
      }
      if (ok) {
        r.den_ = static_cast<std::int64_t>(den);
        r.normalize_small();
        return r;
      }
      r.num_.clear();
      r.den_ = 1;
    }
  }
  CycScalar::Big x = a.to_big();
  CycScalar::Big y = b.to_big();
  std::vector<mpz_class> prod(lp, 0);
  for (std::size_t i = 0; i < la; ++i)
    for (std::size_t j = 0; j < lb; ++j) prod[i + j] += x.num[i] * y.num[j];
  CycScalar::Big out;
  out.den = x.den * y.den;
  if (lp > static_cast<std::size_t>(phi)) {
    out.num.assign(phi, 0);
    for (std::size_t k = 0; k < lp; ++k) {
      if (k < static_cast<std::size_t>(phi)) {
        out.num[k] += prod[k];
      } else {
        const auto& pw = f->power_reduction(static_cast<int>(k));
        for (int i = 0; i < phi; ++i)
          if (pw[i] != 0) out.num[i] += prod[k] * static_cast<long>(pw[i]);
      }
    }
  } else {
    out.num = std::move(prod);
  }
  r.assign_big(std::move(out));
  return r;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  *this = *this * o;
  return *this;
}

void CycScalar::fma(CycScalar& acc, const CycScalar& b, const CycScalar& c) {
  if (b.is_zero() || c.is_zero()) return;
  acc += b * c;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (!a.big_ && !b.big_) return a.den_ == b.den_ && a.num_ == b.num_;
  if (!a.big_ || !b.big_) return false;
  return a.big_->den == b.big_->den && a.big_->num == b.big_->num;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Big b = to_big();
  std::size_t nz = 0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < b.num.size(); ++i)
    if (b.num[i] != 0) {
      ++nz;
      pos = i;
    }
  if (nz == 1) {
    // c w^e  ->  (1/c) w^{-e}
    mpq_class c(b.num[pos], b.den);
    c.canonicalize();
    CycScalar inv = from_mpq(1 / c);
    if (pos == 0) {
      inv.field_ = field_;
      return inv;
    }
    return inv * field_->root_power(-static_cast<long>(pos));
  }
  // Solve (multiplication by *this) x = 1 over Q.
  const CyclotomicField& f = *field_;
  int n = f.phi();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1, 0));
  for (int j = 0; j < n; ++j) {
    auto col = (*this * f.root_power(j)).coeffs(f);
    for (int i = 0; i < n; ++i) a[i][j] = col[i];
  }
  a[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw NotInvertible("singular multiplication matrix");
    std::swap(a[p], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (int k = c; k <= n; ++k) a[c][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class t = a[r][c];
      for (int k = c; k <= n; ++k) a[r][k] -= t * a[c][k];
    }
  }
  std::vector<mpq_class> x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return f.from_coeffs(x);
}

std::vector<mpq_class> CycScalar::coeffs(const CyclotomicField& f) const {
  std::vector<mpq_class> out(f.phi(), 0);
  Big b = to_big();
  if (static_cast<int>(b.num.size()) > f.phi()) throw BaseMismatch("scalar from a larger field");
  for (std::size_t i = 0; i < b.num.size(); ++i) {
    out[i] = mpq_class(b.num[i], b.den);
    out[i].canonicalize();
  }
  return out;
}

std::vector<mpq_class> CycScalar::coeffs() const {
  Big b = to_big();
  std::vector<mpq_class> out;
  for (const auto& v : b.num) {
    out.emplace_back(v, b.den);
    out.back().canonicalize();
  }
  return out;
}

std::vector<std::string> CycScalar::to_strings(const CyclotomicField& f) const {
  std::vector<std::string> out;
  for (const auto& q : coeffs(f)) out.push_back(q.get_num().get_str() + "/" + q.get_den().get_str());
  return out;
}

CycScalar CycScalar::from_strings(const CyclotomicField& f, const std::vector<std::string>& s) {
  if (static_cast<int>(s.size()) != f.phi())
    throw ParseError("expected " + std::to_string(f.phi()) + " coefficients, got " + std::to_string(s.size()));
  std::vector<mpq_class> c;
  for (const auto& t : s) {
    mpq_class q;
    if (q.set_str(t, 10) != 0 || t.empty()) throw ParseError("bad rational '" + t + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + t + "'");
    q.canonicalize();
    c.push_back(q);
  }
  CycScalar r = f.from_coeffs(c);
  r.field_ = &f;
  return r;
}

std::string CycScalar::pretty() const {
  auto c = coeffs();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    mpq_class v = c[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    if (v < 0) v = -v;
    bool unit = v == 1;
    if (!unit || i == 0) os << v.get_str();
    if (i > 0) os << (unit ? "" : "*") << "w" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

std::size_t CycScalar::height() const {
  if (big_) {
    std::size_t h = mpz_sizeinbase(big_->den.get_mpz_t(), 2);
    for (const auto& v : big_->num) h += mpz_sizeinbase(v.get_mpz_t(), 2);
    return h;
  }
  std::size_t h = bits(den_);
  for (auto v : num_) h += bits(v);
  return h;
}

std::size_t CycScalar::hash() const {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 1099511628211ULL; };
  if (big_) {
    for (const auto& v : big_->num) mix(std::hash<std::string>{}(v.get_str(16)));
    mix(std::hash<std::string>{}(big_->den.get_str(16)));
  } else {
    for (auto v : num_) mix(static_cast<std::size_t>(v));
    mix(static_cast<std::size_t>(den_));
  }
  return h;
}

CycScalar CycScalar::galois(int j) const {
  if (is_zero() || is_rational()) return *this;
  const CyclotomicField& f = *field_;
  auto c = coeffs();
  CycScalar acc;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) acc += from_mpq(c[i]) * f.root_power(static_cast<long>(i) * j);
  acc.field_ = field_;
  return acc;
}

std::complex<double> CycScalar::embed(int j) const {
  auto c = coeffs();
  int m = field_ ? field_->m() : 1;
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) z += c[i].get_d() * std::polar(1.0, 2.0 * M_PI * static_cast<double>(i) * j / m);
  return z;
}

// ---------------------------------------------------------------- group datum

GroupDatum GroupDatum::make(int m, bool allow_small) {
  if (!allow_small) {
    if (m % 4 != 0 || m < 12)
      throw InvalidGroupDatum("m must satisfy m = 4a >= 12 (got " + std::to_string(m) + ")");
  } else if (m < 4 || m % 2 != 0) {
    throw InvalidGroupDatum("m must be even and >= 4 (got " + std::to_string(m) + ")");
  }
  GroupDatum g;
  g.m = m;
  g.a = m / 4;
  g.n = m / 2;
  CyclotomicField::get(m);
  return g;
}

CycScalar make_root_power(const GroupDatum& g, long e) { return g.field().root_power(e); }

}  // namespace hopfforge
