#include "simplexbound/random_instances.hpp"

#include "simplexbound/errors.hpp"

namespace simplexbound {

namespace {

void all_exponents(std::size_t k, unsigned max_deg, Exponent& cur, std::size_t var,
                   unsigned used, std::vector<Exponent>& out) {
  if (var == k) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e + used <= max_deg; ++e) {
    cur[var] = e;
    all_exponents(k, max_deg, cur, var + 1, used + e, out);
  }
  cur[var] = 0;
}

std::vector<Exponent> exponents_up_to(std::size_t k, unsigned max_deg) {
  std::vector<Exponent> out;
  Exponent cur(k, 0);
  all_exponents(k, max_deg, cur, 0, 0, out);
  return out;
}

long nonzero(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> mag(1, bound);
  std::bernoulli_distribution neg(0.5);
  const long v = mag(rng);
  return neg(rng) ? -v : v;
}

}  // namespace

MultiPoly random_poly(std::mt19937_64& rng, std::size_t k, unsigned d, unsigned long tau) {
  if (k < 1 || d < 1 || tau < 1 || tau > 62) {
    throw Error(ErrorCode::InvalidArgument, "random_poly needs k, d >= 1 and 1 <= tau <= 62");
  }
  const long bound = (1l << tau) - 1;
  std::bernoulli_distribution keep(0.6);
  MultiPoly p(k);
  std::vector<Exponent> top;
  for (const auto& e : exponents_up_to(k, d)) {
    if (total_degree(e) == d) top.push_back(e);
    if (keep(rng)) p.add_term(e, nonzero(rng, bound));
  }
  if (total_degree(p) < d) {
    std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
    p.add_term(top[pick(rng)], nonzero(rng, bound));
  }
  return p;
}

MultiPoly random_positive_poly(std::mt19937_64& rng, std::size_t k, unsigned q_deg, long q_coeff,
                               long c_max) {
  MultiPoly q(k);
  std::bernoulli_distribution keep(0.7);
  std::vector<Exponent> top;
  for (const auto& e : exponents_up_to(k, q_deg)) {
    if (total_degree(e) == q_deg) top.push_back(e);
    if (keep(rng)) q.add_term(e, nonzero(rng, q_coeff));
  }
  if (total_degree(q) < q_deg) {
    std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
    q.add_term(top[pick(rng)], nonzero(rng, q_coeff));
  }
  std::uniform_int_distribution<long> c(1, c_max);
  return q * q + MultiPoly::constant(k, c(rng));
}

}  // namespace simplexbound
