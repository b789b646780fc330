#include <random>

#include "doctest.h"
#include "omega/groebner.hpp"

using namespace omega;

namespace {

using Poly = MultivariatePolynomial;

Poly var(std::size_t i, std::size_t n = 3) { return Poly::variable(n, i); }
Poly c(const Scalar& s, std::size_t n = 3) { return Poly::constant(n, s); }

// Reference bases computed once with sympy (tests/oracles/groebner_oracle.py).
struct Oracle {
  std::vector<Poly> gens;
  std::vector<Poly> basis;  // increasing leading monomial
};

Oracle inconsistent() { return {{var(0) - c(1), var(0) - c(2)}, {c(1)}}; }
Oracle irreducible() { return {{var(0) * var(0) + c(1)}, {var(0) * var(0) + c(1)}}; }
Oracle swap_squares() {
  const Poly p0 = var(0), p1 = var(1);
  return {{p0 * p0 - p1, p1 * p1 - p0}, {p1 * p1 - p0, p0 * p0 - p1}};
}
Oracle cyclic3() {
  const Poly p0 = var(0), p1 = var(1), p2 = var(2);
  return {{p0 + p1 + p2, p0 * p1 + p1 * p2 + p2 * p0, p0 * p1 * p2 - c(1)},
          {p0 + p1 + p2, p1 * p1 + p1 * p2 + p2 * p2, p2 * p2 * p2 - c(1)}};
}

Poly random_poly(std::mt19937& rng, std::size_t n, int max_deg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::vector<Term> terms;
  for (int t = 0; t < 4; ++t) {
    std::vector<std::uint32_t> e(n);
    int budget = max_deg;
    for (auto& x : e) {
      const int d = std::min(exp(rng), budget);
      x = static_cast<std::uint32_t>(d);
      budget -= d;
    }
    terms.push_back({Monomial(std::span<const std::uint32_t>(e)), Scalar(coef(rng))});
  }
  return Poly(n, MonomialOrder::DegRevLex, std::move(terms));
}

}  // namespace

TEST_CASE("monomial orders") {
  const Poly p0 = var(0), p1 = var(1), p2 = var(2);
  // degrevlex puts p1^2 above p0*p2, lex the other way round
  const Poly f = p0 * p2 + p1 * p1;
  CHECK(f.leading_monomial() == (p1 * p1).leading_monomial());
  const Poly g = f.with_order(MonomialOrder::Lex);
  CHECK(g.leading_monomial() == (p0 * p2).leading_monomial());
  CHECK((p0 * p1 * p2).total_degree() == 3);
}

TEST_CASE("polynomial arithmetic") {
  const Poly p0 = var(0), p1 = var(1);
  const Poly sq = (p0 + p1) * (p0 + p1);
  CHECK(sq == p0 * p0 + c(2) * p0 * p1 + p1 * p1);
  CHECK((sq - sq).is_zero());
  CHECK(c(Scalar(Rational(1, 2))).is_unit());
  const std::vector<Scalar> at{Scalar(2), Scalar(-1), Scalar(0)};
  CHECK(sq.evaluate(at) == Scalar(1));
  CHECK(sq.substitute(1, Scalar(1)) == p0 * p0 + c(2) * p0 + c(1));
  CHECK((c(2) * p0 + c(4)).monic() == p0 + c(2));
  CHECK(p0.involves(0));
  CHECK_FALSE(p0.involves(1));
  CHECK((p0 * p0 - p1).to_string() == "p0^2 - p1");
}

TEST_CASE("reduce examples") {
  const Poly p0 = var(0), p1 = var(1);
  const std::vector<Poly> b0{p0};
  CHECK(reduce(p0, b0).is_zero());
  CHECK(reduce(p0 * p0, b0).is_zero());
  CHECK(reduce(p0 * p1 + c(1), b0) == c(1));
  CHECK(reduce(p1 + c(3), b0) == p1 + c(3));
  CHECK(reduce(Poly(3), b0).is_zero());
}

TEST_CASE("reduce is idempotent and stays in the coset") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<Poly> basis{random_poly(rng, 3, 2), random_poly(rng, 3, 2)};
    const Poly f = random_poly(rng, 3, 3);
    const Poly r = reduce(f, basis);
    CHECK(reduce(r, basis) == r);
    for (const auto& t : r.terms())
      for (const auto& b : basis)
        if (!b.is_zero()) CHECK_FALSE(b.leading_monomial().divides(t.monomial));
  }
}

TEST_CASE("buchberger matches the oracle") {
  for (const auto& o : {inconsistent(), irreducible(), swap_squares(), cyclic3()}) {
    const GroebnerResult r = buchberger(o.gens);
    REQUIRE_FALSE(r.cap_exceeded);
    CHECK(r.basis == o.basis);
    CHECK(satisfies_buchberger_criterion(r.basis));
    for (const auto& g : o.gens) CHECK(reduce(g, r.basis).is_zero());
  }
  CHECK(contains_one(buchberger(inconsistent().gens)) == true);
  CHECK(contains_one(buchberger(irreducible().gens)) == false);
  CHECK(contains_one(buchberger(swap_squares().gens)) == false);
}

TEST_CASE("swap-squares has four solutions over the closure") {
  // Lex basis is triangular: p1^4 - p1 gives the four p1 values, each with a unique p0.
  const Oracle o = swap_squares();
  std::vector<Poly> lex;
  for (const auto& g : o.gens) lex.push_back(g.with_order(MonomialOrder::Lex));
  const GroebnerResult r = buchberger(lex, MonomialOrder::Lex);
  REQUIRE(r.basis.size() == 2);
  const Poly p1 = Poly::variable(3, 1, MonomialOrder::Lex);
  const Poly p0 = Poly::variable(3, 0, MonomialOrder::Lex);
  CHECK(r.basis[0] == p1 * p1 * p1 * p1 - p1);
  CHECK(r.basis[1] == p0 - p1 * p1);
}

TEST_CASE("contains_one") {
  GroebnerResult unit;
  unit.basis = {c(1)};
  CHECK(contains_one(unit) == true);
  GroebnerResult lin;
  lin.basis = {var(0)};
  CHECK(contains_one(lin) == false);
  GroebnerResult capped;
  capped.cap_exceeded = true;
  CHECK_FALSE(contains_one(capped).has_value());
}

TEST_CASE("degree cap") {
  const GroebnerResult r = buchberger(cyclic3().gens, MonomialOrder::DegRevLex, 2);
  CHECK(r.cap_exceeded);
  CHECK_FALSE(contains_one(r).has_value());
  const GroebnerResult ok = buchberger(cyclic3().gens, MonomialOrder::DegRevLex, 6);
  CHECK_FALSE(ok.cap_exceeded);
  CHECK(ok.stats.max_degree <= 6);
  CHECK(ok.stats.pairs_processed > 0);
}

TEST_CASE("determinism and criterion on random ideals") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const std::vector<Poly> gens{random_poly(rng, 3, 2), random_poly(rng, 3, 2), random_poly(rng, 3, 1)};
    const GroebnerResult a = buchberger(gens, MonomialOrder::DegRevLex, 8);
    const GroebnerResult b = buchberger(gens, MonomialOrder::DegRevLex, 8);
    CHECK(a.cap_exceeded == b.cap_exceeded);
    if (a.cap_exceeded) continue;
    CHECK(a.basis == b.basis);
    CHECK(satisfies_buchberger_criterion(a.basis));
    for (const auto& g : gens) CHECK(reduce(g, a.basis).is_zero());
    for (std::size_t i = 0; i < a.basis.size(); ++i) {
      CHECK(a.basis[i].leading_coefficient() == Scalar(1));
      for (std::size_t j = 0; j < a.basis.size(); ++j)
        if (i != j) CHECK_FALSE(a.basis[j].leading_monomial().divides(a.basis[i].leading_monomial()));
    }
  }
}

TEST_CASE("coefficients in Q(alpha)") {
  const std::size_t n = 2;
  const Poly p0 = var(0, n), p1 = var(1, n);
  const Scalar a = Scalar::alpha();
  // p0 - alpha, p0*p1 - 1 => p1 = 1/alpha
  const std::vector<Poly> gens{p0 - c(a, n), p0 * p1 - c(Scalar(1), n)};
  const GroebnerResult r = buchberger(gens);
  REQUIRE(r.basis.size() == 2);
  CHECK(r.basis[0] == p1 - c(Scalar(1) / a, n));
  CHECK(r.basis[1] == p0 - c(a, n));
  // alpha*p0 = 1 and p0 = 0
  const std::vector<Poly> bad{c(a, n) * p0 - c(Scalar(1), n), p0};
  CHECK(contains_one(buchberger(bad)) == true);
}

TEST_CASE("s-polynomial") {
  const Poly p0 = var(0), p1 = var(1);
  const Poly s = s_polynomial(p0 * p0 - p1, p0 * p1 - c(1));
  // p1*(p0^2 - p1) - p0*(p0*p1 - 1) = p0 - p1^2
  CHECK(s == p0 - p1 * p1);
}
