#pragma once

#include <random>

#include "braidsplice/exactalg.hpp"

namespace bsp::testing {

inline Rational small_rational(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  return Rational(num(rng), den(rng));
}

inline Rational small_nonzero(std::mt19937_64& rng, int span = 9) {
  for (;;) {
    Rational r = small_rational(rng, span);
    if (!r.is_zero()) return r;
  }
}

inline Polynomial random_poly(std::mt19937_64& rng, unsigned nvars, unsigned terms, unsigned maxdeg) {
  std::uniform_int_distribution<unsigned> var(1, nvars), deg(0, maxdeg);
  std::vector<Term> t;
  for (unsigned i = 0; i < terms; ++i) {
    std::vector<Monomial::Factor> f;
    unsigned d = deg(rng);
    for (unsigned j = 0; j < d; ++j) f.push_back({make_var('z', var(rng)), 1});
    t.push_back({Monomial(f), small_nonzero(rng)});
  }
  return Polynomial::from_terms(t);
}

inline Assignment random_point(std::mt19937_64& rng, unsigned nvars, char family = 'z') {
  Assignment a;
  for (unsigned i = 1; i <= nvars; ++i) a[make_var(family, i)] = small_rational(rng);
  return a;
}

}  // namespace bsp::testing
