#include <random>

#include "doctest.h"
#include "hopfforge/scalar.hpp"

using namespace hopfforge;

namespace {

CycScalar random_scalar(const CyclotomicField& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<mpq_class> c;
  for (int i = 0; i < f.phi(); ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return f.from_coeffs(c);
}

}  // namespace

TEST_CASE("root powers at m=12") {
  auto g = GroupDatum::make(12);
  const auto& f = g.field();
  CHECK(f.phi() == 4);
  CHECK(make_root_power(g, 0).is_one());
  CHECK(make_root_power(g, 6) == CycScalar(-1));
  // Phi_12 = x^4 - x^2 + 1, so w^4 = w^2 - 1
  CHECK(make_root_power(g, 4) == make_root_power(g, 2) - CycScalar(1));
  auto c = make_root_power(g, 4).to_strings(f);
  CHECK(c == std::vector<std::string>{"-1/1", "0/1", "1/1", "0/1"});
  CHECK((make_root_power(g, 3) * make_root_power(g, 9)).is_one());
  CHECK(make_root_power(g, -1) == make_root_power(g, 11));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(CyclotomicField::get(12).cyclotomic_poly() == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(CyclotomicField::get(16).cyclotomic_poly() == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(CyclotomicField::get(20).phi() == 8);
  CHECK(CyclotomicField::get(24).phi() == 8);
}

TEST_CASE("w^m = 1 and w^e w^(m-e) = 1") {
  for (int m : {12, 16, 20, 24}) {
    auto g = GroupDatum::make(m);
    for (int e = 0; e < m; ++e) {
      CycScalar w = make_root_power(g, e);
      CycScalar p = 1;
      for (int i = 0; i < m; ++i) p *= w;
      CHECK(p.is_one());
      CHECK((w * make_root_power(g, m - e)).is_one());
      CHECK(w.inverse() == make_root_power(g, m - e));
    }
  }
}

TEST_CASE("w^(ik) = -1 exactly when ik = m/2 mod m") {
  for (int m : {12, 16}) {
    auto g = GroupDatum::make(m);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) {
        bool pred = (i * k) % m == m / 2;
        CHECK((make_root_power(g, i * k) == CycScalar(-1)) == pred);
      }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (int m : {12, 16}) {
    const auto& f = CyclotomicField::get(m);
    for (int t = 0; t < 200; ++t) {
      CycScalar a = random_scalar(f, rng);
      CycScalar b = random_scalar(f, rng);
      CycScalar c = random_scalar(f, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + b) - b == a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("basic arithmetic and errors") {
  CHECK((CycScalar(1) + CycScalar(-1)).is_zero());
  CHECK(CycScalar(2, 4) == CycScalar(1, 2));
  CHECK_THROWS_AS(CycScalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(CycScalar(1, 0), DivisionByZero);
}

TEST_CASE("overflow promotes to GMP and back") {
  CycScalar big = CycScalar(1LL << 40);
  CycScalar p = big * big * big;  // 2^120
  CHECK(!p.is_zero());
  CycScalar q = p * CycScalar(1, 1LL << 40) * CycScalar(1, 1LL << 40) * CycScalar(1, 1LL << 40);
  CHECK(q.is_one());
  const auto& f = CyclotomicField::get(12);
  CycScalar w = f.root_power(1);
  CycScalar x = w * big * big;
  CHECK(x * CycScalar(1, 1LL << 40) * CycScalar(1, 1LL << 40) == w);
}

TEST_CASE("serialisation round trip and conjugation") {
  const auto& f = CyclotomicField::get(16);
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    CycScalar a = random_scalar(f, rng);
    CHECK(CycScalar::from_strings(f, a.to_strings(f)) == a);
    CHECK(a.galois(15).galois(15) == a);
    CHECK(std::abs(a.galois(15).embed(1) - std::conj(a.embed(1))) < 1e-9);
  }
  CHECK_THROWS_AS(CycScalar::from_strings(f, {"1/2"}), ParseError);
}

TEST_CASE("group datum validation") {
  CHECK_THROWS_AS(GroupDatum::make(10), InvalidGroupDatum);
  CHECK_THROWS_AS(GroupDatum::make(8), InvalidGroupDatum);
  CHECK_NOTHROW(GroupDatum::make(8, true));
  auto g = GroupDatum::make(16);
  CHECK(g.n == 8);
  CHECK(g.a == 4);
}
