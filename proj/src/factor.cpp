#include "braidsplice/exactalg.hpp"

namespace bsp {

PoolFactorization factor_against_pool(const Polynomial& p, const std::vector<Polynomial>& pool) {
  PoolFactorization out;
  out.pool_exponents.assign(pool.size(), 0);
  out.unit = 1;
  if (p.is_zero()) {
    out.remainder = Polynomial();
    return out;
  }
  Polynomial r = p;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i].is_constant()) continue;
    while (!r.is_constant()) {
      auto q = divide_exact(r, pool[i]);
      if (!q) break;
      r = std::move(*q);
      ++out.pool_exponents[i];
    }
  }
  Monomial m = r.monomial_content();
  for (auto& [v, e] : m.factors()) out.vars.push_back({v, e});
  if (!m.is_one()) r = r.div_monomial(m);
  out.unit = r.leading_coefficient();
  out.remainder = r.is_constant() ? Polynomial(1) : r.monic();
  return out;
}

}  // namespace bsp
