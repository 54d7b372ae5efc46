#include <doctest.h>

#include <random>

#include "simplexbound/errors.hpp"
#include "simplexbound/multipoly.hpp"
#include "simplexbound/random_instances.hpp"

using namespace simplexbound;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> x(k);
  for (auto& v : x) v = make_rational(num(rng), den(rng));
  return x;
}

}  // namespace

TEST_CASE("parse examples") {
  const MultiPoly p = parse_poly("2*X1^2 - 2*X1 + 1");
  CHECK(p.nvars() == 1);
  CHECK(p.terms().size() == 3);
  CHECK(p.coeff({2}) == 2);
  CHECK(p.coeff({1}) == -2);
  CHECK(p.coeff({0}) == 1);

  const MultiPoly q = parse_poly("X1 + X2", 3);
  CHECK(q.nvars() == 3);
  CHECK(q.terms().size() == 2);
  CHECK(q.coeff({1, 0, 0}) == 1);
  CHECK(q.coeff({0, 1, 0}) == 1);

  const MultiPoly z = parse_poly("X1^2 + 0*X2");
  CHECK(z.nvars() == 2);
  CHECK(z.terms().size() == 1);
  CHECK(z.terms().count({0, 1}) == 0);
}

TEST_CASE("parse variants") {
  CHECK(parse_poly("-X1*X2^3 + 12345678901234567890123") ==
        parse_poly("12345678901234567890123 - X2^3*X1"));
  CHECK(parse_poly("  3 * X1 ^ 2 ") == parse_poly("3*X1^2"));
  CHECK(parse_poly("X1*X1") == parse_poly("X1^2"));
  CHECK(parse_poly("7").is_constant());
  CHECK(parse_poly("X1 - X1").is_zero());
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_poly("2.5*X1"); }) == ErrorCode::NonIntegerCoefficient);
  CHECK(code_of([] { parse_poly("1/2*X1"); }) == ErrorCode::NonIntegerCoefficient);
  CHECK(code_of([] { parse_poly("X1 +"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_poly("Y1"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_poly("X0"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_poly("X3", 2); }) == ErrorCode::DimensionMismatch);
  try {
    parse_poly("X1 + $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("format and reparse") {
  const MultiPoly p = parse_poly("4*X1^2 - 4*X1 + 1 + X1^4");
  CHECK(format_poly(p) == "X1^4 + 4*X1^2 - 4*X1 + 1");
  CHECK(format_poly(parse_poly("0")) == "0");

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const MultiPoly q = random_poly(rng, k, 1 + trial % 4, 1 + trial % 6);
    CHECK(parse_poly(format_poly(q), k) == q);
  }
}

TEST_CASE("degree and bitsize") {
  CHECK(total_degree(parse_poly("2*X1^2 - 2*X1 + 1")) == 2);
  CHECK(total_degree(parse_poly("7")) == 0);
  const MultiPoly x = MultiPoly::variable(1, 1);
  const MultiPoly expanded = (Integer(2) * x - MultiPoly::constant(1, 1)).pow(2) + x.pow(4);
  CHECK(total_degree(expanded) == 4);
  CHECK(expanded == parse_poly("X1^4 + 4*X1^2 - 4*X1 + 1"));

  CHECK(bitsize(parse_poly("2*X1^2 - 2*X1 + 1")) == 2);
  CHECK(bitsize(parse_poly("1")) == 1);
  CHECK(bitsize(parse_poly("-8")) == 4);
  CHECK(code_of([] { bitsize(MultiPoly(1)); }) == ErrorCode::ZeroPolynomial);

  const ProblemInstance inst = make_instance(parse_poly("X1*X2^2 + 5"));
  CHECK(inst.k == 2);
  CHECK(inst.d == 3);
  CHECK(inst.tau == 3);
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(parse_poly("2*X1^2 - 2*X1 + 1"), 1) == parse_poly("4*X1 - 2"));
  CHECK(partial_derivative(parse_poly("X1^2", 2), 2).is_zero());
  CHECK(partial_derivative(parse_poly("X1*X2 + X1^3"), 1) == parse_poly("X2 + 3*X1^2", 2));
  CHECK(code_of([] { partial_derivative(parse_poly("X1"), 2); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("evaluation") {
  const std::vector<Rational> half{make_rational(1, 2)};
  CHECK(eval_rational(parse_poly("2*X1^2 - 2*X1 + 1"), half) == make_rational(1, 2));
  const MultiPoly p = parse_poly("X1*X2 - 3*X2 + 11");
  const std::vector<Rational> origin{0, 0};
  CHECK(eval_rational(p, origin) == p.constant_term());
  const std::vector<Rational> third{make_rational(1, 3), make_rational(1, 3)};
  CHECK(eval_rational(parse_poly("X1 + X2"), third) == make_rational(2, 3));
  CHECK(code_of([&] { eval_rational(p, half); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("restriction to a coordinate face") {
  CHECK(restrict_zero(parse_poly("X1*X2 + X2 + 3"), 1) == parse_poly("X1 + 3"));
  const MultiPoly c = restrict_zero(parse_poly("2*X1^2 - 2*X1 + 1"), 1);
  CHECK(c.nvars() == 0);
  CHECK(c == MultiPoly::constant(0, 1));
  CHECK(restrict_zero(parse_poly("X1 + X2"), 2) == parse_poly("X1"));
}

TEST_CASE("hyperplane substitution") {
  CHECK(substitute_simplex_hyperplane(parse_poly("X1 + X2")) == MultiPoly::constant(1, 1));
  CHECK(substitute_simplex_hyperplane(parse_poly("X1^2")) == MultiPoly::constant(0, 1));
  CHECK(substitute_simplex_hyperplane(parse_poly("X2^2")) == parse_poly("1 - 2*X1 + X1^2"));

  // Agreement with evaluation at points of the hyperplane.
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 2 + trial % 2;
    const MultiPoly p = random_poly(rng, k, 1 + trial % 4, 4);
    const MultiPoly q = substitute_simplex_hyperplane(p);
    const std::vector<Rational> y = random_point(rng, k - 1);
    std::vector<Rational> x = y;
    Rational last = 1;
    for (const auto& v : y) last -= v;
    x.push_back(last);
    CHECK(eval_rational(q, y) == eval_rational(p, x));
    const unsigned d = total_degree(p);
    if (!q.is_zero()) CHECK(total_degree(q) <= d);
    if (!q.is_zero()) CHECK(bitsize(q) <= hyperplane_bitsize_limit(k, d, bitsize(p)));
  }
}

TEST_CASE("restriction keeps degree and bitsize") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 2 + trial % 2;
    const MultiPoly p = random_poly(rng, k, 1 + trial % 4, 1 + trial % 5);
    for (std::size_t i = 1; i <= k; ++i) {
      const MultiPoly r = restrict_zero(p, i);
      CHECK(r.nvars() == k - 1);
      if (r.is_zero()) continue;
      CHECK(total_degree(r) <= total_degree(p));
      CHECK(bitsize(r) <= bitsize(p));
    }
  }
}

TEST_CASE("build_R") {
  CHECK(build_R(parse_poly("2*X1^2 - 2*X1 + 1"), 2) == parse_poly("-2*X1 + 2"));
  CHECK(build_R(parse_poly("X1^2 + 1"), 2) == parse_poly("2", 1));
  CHECK(build_R(parse_poly("5"), 0).is_zero());
  CHECK(code_of([] { build_R(parse_poly("X1^3"), 2); }) == ErrorCode::DegreeTooSmall);
}

TEST_CASE("build_R agrees with the Euler form") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const unsigned d = 1 + trial % 4;
    const MultiPoly p = random_poly(rng, k, d, 1 + trial % 5);
    MultiPoly euler = Integer(d) * p;
    for (std::size_t i = 1; i <= k; ++i) euler -= MultiPoly::variable(k, i) * partial_derivative(p, i);
    const MultiPoly r = build_R(p, d);
    CHECK(r == euler);
    if (!r.is_zero()) CHECK(total_degree(r) <= d - 1);

    Integer sum = 0;
    for (const auto& [e, c] : r.terms()) sum += abs(c);
    CHECK(sum <= pow2(bitsize(p)) * binomial(d + k, k + 1));
  }
}
