// Benchmarks the OpenMP kernels against the serial reference implementation
// on synthetic random orthogonal sets and verifies that both paths produce
// bitwise identical results.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locc/gamma_delta.hpp"
#include "locc/ntop.hpp"
#include "locc/random_sets.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double best_of_ms(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

bool bitwise_equal(const locc::CMatrix& a, const locc::CMatrix& b) {
  return a.dim() == b.dim() && a.data() == b.data();
}

bool family_equal(const locc::GammaDeltaFamily& a, const locc::GammaDeltaFamily& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t k = 0; k < a.pairs.size(); ++k)
    if (!bitwise_equal(a.pairs[k].gamma.matrix(), b.pairs[k].gamma.matrix()) ||
        !bitwise_equal(a.pairs[k].delta.matrix(), b.pairs[k].delta.matrix()))
      return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  int local_dim = 16;
  int parties = 3;
  int num_states = 24;
  int reps = 5;
  std::uint64_t seed = 42;
  app.add_option("--local-dim", local_dim, "dimension of each party (default 16)");
  app.add_option("--parties", parties, "number of parties (default 3)");
  app.add_option("--states", num_states, "number of orthogonal states (default 24)");
  app.add_option("--reps", reps, "repetitions, best time wins (default 5)");
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not enabled; parallel path falls back to serial\n";
#endif

  std::mt19937_64 rng(seed);
  const std::vector<int> dims(parties, local_dim);
  std::cout << "building " << num_states << " random orthogonal states on dims [";
  for (int p = 0; p < parties; ++p) std::cout << local_dim << (p + 1 < parties ? "," : "");
  std::cout << "] ..." << std::endl;
  const locc::StateSet set = locc::random_orthogonal_set(rng, dims, num_states);

  std::cout << std::left << std::setw(28) << "kernel" << std::setw(14) << "serial ms"
            << std::setw(14) << "parallel ms" << std::setw(10) << "speedup"
            << "identical\n";

  {
    locc::CMatrix rs, rp;
    const double ts = best_of_ms(reps, [&] { rs = locc::reduced_cross(set, 0, 1, 0, locc::Exec::serial); });
    const double tp = best_of_ms(reps, [&] { rp = locc::reduced_cross(set, 0, 1, 0, locc::Exec::parallel); });
    std::cout << std::setw(28) << "reduced_cross (one pair)" << std::setw(14) << ts
              << std::setw(14) << tp << std::setw(10) << ts / tp
              << (bitwise_equal(rs, rp) ? "yes" : "NO") << "\n";
  }
  {
    locc::GammaDeltaFamily fs, fp;
    const double ts = best_of_ms(reps, [&] { fs = locc::gamma_delta(set, 0, locc::Exec::serial); });
    const double tp = best_of_ms(reps, [&] { fp = locc::gamma_delta(set, 0, locc::Exec::parallel); });
    std::cout << std::setw(28) << "gamma_delta (all pairs)" << std::setw(14) << ts
              << std::setw(14) << tp << std::setw(10) << ts / tp
              << (family_equal(fs, fp) ? "yes" : "NO") << "\n";
  }
  {
    locc::OrthogonalityReport os, op;
    const double ts =
        best_of_ms(reps, [&] { os = locc::check_mutual_orthogonality(set, 1e-9, locc::Exec::serial); });
    const double tp =
        best_of_ms(reps, [&] { op = locc::check_mutual_orthogonality(set, 1e-9, locc::Exec::parallel); });
    std::cout << std::setw(28) << "orthogonality gram" << std::setw(14) << ts << std::setw(14)
              << tp << std::setw(10) << ts / tp
              << (os.worst_overlap == op.worst_overlap ? "yes" : "NO") << "\n";
  }
  {
    locc::NtopReport ns, np;
    const double ts =
        best_of_ms(reps, [&] { ns = locc::ntop_check(set, 0, 1e-9, locc::Exec::serial); });
    const double tp =
        best_of_ms(reps, [&] { np = locc::ntop_check(set, 0, 1e-9, locc::Exec::parallel); });
    std::cout << std::setw(28) << "ntop_check (end to end)" << std::setw(14) << ts
              << std::setw(14) << tp << std::setw(10) << ts / tp
              << (ns.t == np.t ? "yes" : "NO") << "\n";
  }
  return 0;
}
