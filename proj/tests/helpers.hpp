#pragma once

#include <random>

#include "reflex/operator_space.hpp"

namespace reflex::testing {

inline GaussianRational q(long num, long den = 1) { return GaussianRational::ratio(num, den); }

inline GaussianRational random_scalar(std::mt19937_64& rng, long bound = 5) {
  auto draw = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  mpq_class re(draw(-bound, bound), draw(1, bound));
  mpq_class im(draw(-bound, bound), draw(1, bound));
  re.canonicalize();
  im.canonicalize();
  return GaussianRational(re, im);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng);
  return m;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& e : v) e = random_scalar(rng);
  return v;
}

inline Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient) {
  const std::size_t k = rng() % (ambient + 1);
  std::vector<Vector> vectors;
  for (std::size_t i = 0; i < k; ++i) vectors.push_back(random_vector(rng, ambient));
  return Subspace::span(ambient, vectors);
}

inline OperatorSpace random_operator_space(std::mt19937_64& rng, std::size_t h1, std::size_t h2) {
  const std::size_t k = 1 + rng() % (h1 * h2);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_matrix(rng, h2, h1));
  return OperatorSpace::span(h1, h2, gens);
}

}  // namespace reflex::testing
