#include <doctest.h>

#include <random>

#include "simplexbound/errors.hpp"
#include "simplexbound/exact_arith.hpp"

using namespace simplexbound;

namespace {

SPoly random_spoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  std::vector<Integer> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = coeff(rng);
  // Occasionally push a coefficient far beyond 64 bits.
  if (!c.empty() && coeff(rng) > 900) c.back() *= pow2(200);
  return SPoly(std::move(c));
}

}  // namespace

TEST_CASE("spoly ring operations") {
  SUBCASE("monomial product") {
    const SPoly a{1, 2};
    const SPoly b{0, 3};
    CHECK(a * b == SPoly{0, 3, 6});
    CHECK((a * b).degree() == 2);
  }
  SUBCASE("annihilation") {
    CHECK((SPoly{1, 2} * SPoly{}).is_zero());
    CHECK((SPoly{1, 2} * Integer(0)).is_zero());
  }
  SUBCASE("cancellation normalizes to the empty sequence") {
    const SPoly sum = SPoly{2, 1} + SPoly{-2, -1};
    CHECK(sum.is_zero());
    CHECK(sum.coeffs().empty());
    CHECK(sum.degree() == SPoly::kZeroDegree);
    CHECK(sum.degree() < 0);
  }
  SUBCASE("trailing zeros are trimmed on construction") {
    CHECK(SPoly{3, 0, 0}.degree() == 0);
    CHECK(SPoly{0, 0}.is_zero());
  }
}

TEST_CASE("spoly ring axioms on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const SPoly a = random_spoly(rng), b = random_spoly(rng), c = random_spoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == SPoly{});
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("spoly_mul_by_t") {
  CHECK(spoly_mul_by_t(SPoly{0, -2}) == SPoly{-2});
  CHECK(spoly_mul_by_t(SPoly{0, 3, 6}) == SPoly{3, 6});
  CHECK(spoly_mul_by_t(SPoly{}).is_zero());
  try {
    spoly_mul_by_t(SPoly{1, 1});
    FAIL("expected NonzeroConstantTerm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonzeroConstantTerm);
  }
}

TEST_CASE("shift round trip") {
  std::mt19937_64 rng(11);
  const SPoly s = SPoly::monomial(1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const SPoly a = random_spoly(rng);
    CHECK(spoly_mul_by_t(a * s) == a);
  }
}

TEST_CASE("exact division") {
  SPoly a{4, -8, 12};
  CHECK(a.divide_exact(4));
  CHECK(a == SPoly{1, -2, 3});
  SPoly b{4, 6};
  CHECK_FALSE(b.divide_exact(4));
  CHECK(b == SPoly{4, 6});
}

TEST_CASE("rational compare") {
  CHECK(rational_compare(make_rational(1, 4), make_rational(1, 2)) == std::strong_ordering::less);
  CHECK(rational_compare(make_rational(2, 4), make_rational(1, 2)) == std::strong_ordering::equal);
  CHECK(rational_compare(make_rational(-1, 3), Rational(0)) == std::strong_ordering::less);
  CHECK(rational_compare(make_rational(3, 1), make_rational(5, 2)) == std::strong_ordering::greater);
}

TEST_CASE("rational canonical form") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-500, 500);
  for (int trial = 0; trial < 200; ++trial) {
    const long p = dist(rng);
    long q = dist(rng);
    long c = dist(rng);
    if (q == 0) q = 1;
    if (c == 0) c = -7;
    const Rational a = make_rational(p, q);
    const Rational b = make_rational(Integer(c) * p, Integer(c) * q);
    CHECK(a.get_num() == b.get_num());
    CHECK(a.get_den() == b.get_den());
    CHECK(a.get_den() > 0);
    CHECK(gcd(a.get_num(), a.get_den()) == 1);
  }
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("integer helpers") {
  CHECK(bit_length(Integer(0)) == 0);
  CHECK(bit_length(Integer(1)) == 1);
  CHECK(bit_length(Integer(-8)) == 4);
  CHECK(bit_length(pow2(100)) == 101);
  CHECK(binomial(5, 2) == 10);
  CHECK(ceil_log2_pow(1, 5) == 0);
  CHECK(ceil_log2_pow(2, 3) == 3);
  CHECK(ceil_log2_pow(3, 2) == 4);  // 9 <= 16
  CHECK(ceil_log2_pow(3, 4) == 7);  // 81 <= 128
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(SPoly{0, 3, -6}.to_string() == "3*s - 6*s^2");
}
