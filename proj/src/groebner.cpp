#include "omega/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace omega {

MultivariatePolynomial reduce(const MultivariatePolynomial& f, std::span<const MultivariatePolynomial> basis) {
  MultivariatePolynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const MultivariatePolynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && g.leading_monomial().divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    if (divisor == nullptr) {
      remainder.push_back(p.pop_leading());
      continue;
    }
    const Scalar factor = lt.coefficient / divisor->leading_coefficient();
    const Monomial shift = lt.monomial.quotient(divisor->leading_monomial());
    p.subtract_scaled(factor, shift, *divisor);
  }
  return MultivariatePolynomial::from_sorted(f.nvars(), f.order(), std::move(remainder));
}

MultivariatePolynomial s_polynomial(const MultivariatePolynomial& f, const MultivariatePolynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.mul_term(l.quotient(f.leading_monomial()), f.leading_coefficient().inverse()) -
         g.mul_term(l.quotient(g.leading_monomial()), g.leading_coefficient().inverse());
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t degree;
  std::size_t seq;
};

std::vector<MultivariatePolynomial> reduced_basis(std::vector<MultivariatePolynomial> g, MonomialOrder order) {
  // Drop elements whose leading monomial is divisible by another's; for equal
  // leading monomials keep the earliest.
  std::vector<MultivariatePolynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const bool divides = g[b].leading_monomial().divides(g[a].leading_monomial());
      const bool equal = g[b].leading_monomial() == g[a].leading_monomial();
      redundant = divides && (!equal || b < a);
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<MultivariatePolynomial> out;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<MultivariatePolynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    out.push_back(reduce(minimal[a], others).monic());
  }
  std::sort(out.begin(), out.end(), [order](const auto& x, const auto& y) {
    return compare(x.leading_monomial(), y.leading_monomial(), order) < 0;
  });
  return out;
}

}  // namespace

GroebnerResult buchberger(std::span<const MultivariatePolynomial> generators, MonomialOrder order, unsigned degree_cap) {
  GroebnerResult result;
  std::vector<MultivariatePolynomial> g;
  std::size_t nvars = 0;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    if (!g.empty() && f.nvars() != nvars) throw std::invalid_argument("buchberger: generators over different rings");
    nvars = f.nvars();
    g.push_back(f.with_order(order).monic());
  }
  auto unit_ideal = [&] {
    result.basis = {MultivariatePolynomial::constant(nvars, Scalar(1), order)};
    return result;
  };
  if (std::any_of(g.begin(), g.end(), [](const auto& f) { return f.is_unit(); })) return unit_ideal();

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  std::size_t seq = 0;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = g[i].leading_monomial().lcm(g[k].leading_monomial());
      const auto d = l.degree();
      pending.push_back(Pair{i, k, std::move(l), d, seq++});
      pending_keys.emplace(i, k);
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) add_pairs_for(k);

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      return a.degree != b.degree ? a.degree < b.degree : a.seq < b.seq;
    });
    const Pair pair = *best;
    pending.erase(best);
    pending_keys.erase({pair.i, pair.j});

    if (g[pair.i].leading_monomial().coprime(g[pair.j].leading_monomial())) {
      ++result.stats.pairs_skipped;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!g[k].leading_monomial().divides(pair.lcm)) continue;
      const auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending_keys.contains(key(pair.i, k)) && !pending_keys.contains(key(pair.j, k));
    }
    if (chain) {
      ++result.stats.pairs_skipped;
      continue;
    }
    if (pair.degree > degree_cap) {
      result.cap_exceeded = true;
      result.basis.clear();
      return result;
    }
    ++result.stats.pairs_processed;
    result.stats.max_degree = std::max(result.stats.max_degree, pair.degree);
    MultivariatePolynomial h = reduce(s_polynomial(g[pair.i], g[pair.j]), g);
    if (h.is_zero()) continue;
    if (h.is_unit()) return unit_ideal();
    g.push_back(h.monic());
    add_pairs_for(g.size() - 1);
  }
  result.basis = reduced_basis(std::move(g), order);
  return result;
}

std::optional<bool> contains_one(const GroebnerResult& r) {
  if (r.cap_exceeded) return std::nullopt;
  return r.basis.size() == 1 && r.basis.front().is_unit();
}

bool satisfies_buchberger_criterion(std::span<const MultivariatePolynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

}  // namespace omega
