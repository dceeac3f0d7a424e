#include "sl3/random.hpp"

#include <vector>

namespace sl3::gen {

std::mt19937_64 engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

Rat rat(std::mt19937_64& rng, int max_abs, int max_den) {
  const long num = std::uniform_int_distribution<long>(-max_abs, max_abs)(rng);
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  return make_rat(num, den);
}

Poly poly(std::mt19937_64& rng, int max_degree, int max_abs, int max_den) {
  const int deg = std::uniform_int_distribution<int>(-1, max_degree)(rng);
  std::vector<Rat> cs;
  for (int k = 0; k <= deg; ++k) cs.push_back(rat(rng, max_abs, max_den));
  return Poly(std::move(cs));
}

Unipotent unipotent(std::mt19937_64& rng, int max_degree) {
  Poly x = poly(rng, max_degree);
  Poly y = poly(rng, max_degree);
  Poly z = poly(rng, max_degree);
  return {std::move(x), std::move(y), std::move(z)};
}

Unipotent congruence_element(std::mt19937_64& rng, int n, int extra_degree) {
  const Poly shift = Poly::monomial(1, n + 1);
  Poly x = shift * poly(rng, extra_degree);
  Poly y = shift * poly(rng, extra_degree);
  Poly z = shift * poly(rng, extra_degree);
  return {std::move(x), std::move(y), std::move(z)};
}

}  // namespace sl3::gen
