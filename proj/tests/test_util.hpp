#pragma once

#include "hessloci/field.hpp"
#include "hessloci/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testutil {

inline std::vector<std::uint32_t> random_point(std::mt19937_64& rng, int n, std::uint32_t p) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

inline hessloci::Polynomial<hessloci::PrimeField> random_form(std::mt19937_64& rng, const hessloci::PrimeField& F,
                                                              int nvars, int deg, int density_percent = 100) {
  hessloci::Polynomial<hessloci::PrimeField> f(F, nvars);
  for (const auto& m : hessloci::monomials_of_degree(nvars, deg))
    if (static_cast<int>(rng() % 100) < density_percent) f.add_term(m, static_cast<std::uint32_t>(rng() % F.modulus()));
  return f;
}

}  // namespace testutil
