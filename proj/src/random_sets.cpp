#include "locc/random_sets.hpp"

#include <cmath>

namespace locc {

StateSet random_orthogonal_set(std::mt19937_64& rng, const std::vector<int>& dims,
                               int num_states) {
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw input_error("random_orthogonal_set: bad dimension");
    total *= d;
  }
  if (num_states < 1 || num_states > total)
    throw input_error("random_orthogonal_set: num_states must be in [1, total dim]");

  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<cx>> states;
  while (static_cast<int>(states.size()) < num_states) {
    std::vector<cx> v(total);
    for (cx& z : v) z = cx(gauss(rng), gauss(rng));
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : states) {
        const cx c = vec_inner(u, v);
        for (long i = 0; i < total; ++i) v[i] -= c * u[i];
      }
    const double nrm = vec_norm(v);
    if (nrm < 1e-6) continue;  // essentially dependent draw, retry
    for (cx& z : v) z *= cx(1.0 / nrm, 0.0);
    states.push_back(std::move(v));
  }
  return StateSet::make(dims, std::move(states));
}

}  // namespace locc
