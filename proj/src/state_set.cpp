#include "locc/state_set.hpp"

#include <cmath>
#include <string>

namespace locc {

namespace {
constexpr long kMaxTotalDim = 1L << 22;
}

StateSet StateSet::make(std::vector<int> dims, std::vector<std::vector<cx>> states,
                        std::vector<std::string> names) {
  if (dims.empty()) throw input_error("StateSet: dims must not be empty");
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw input_error("StateSet: local dimensions must be positive");
    total *= d;
    if (total > kMaxTotalDim) throw input_error("StateSet: total dimension too large");
  }
  if (states.empty()) throw input_error("StateSet: at least one state is required");
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != static_cast<std::size_t>(total))
      throw input_error("StateSet: state " + std::to_string(i) +
                        " has wrong amplitude count (expected " + std::to_string(total) + ")");
    for (const cx& z : states[i])
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw input_error("StateSet: state " + std::to_string(i) + " has non-finite amplitudes");
  }
  if (!names.empty() && names.size() != states.size())
    throw input_error("StateSet: name count does not match state count");
  if (names.empty()) {
    names.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) names.push_back("state" + std::to_string(i));
  }
  StateSet s;
  s.dims_ = std::move(dims);
  s.states_ = std::move(states);
  s.names_ = std::move(names);
  s.total_ = total;
  return s;
}

int StateSet::local_dim(int party) const {
  if (party < 0 || party >= num_parties()) throw input_error("StateSet: party index out of range");
  return dims_[party];
}

long amplitude_index(const std::vector<int>& multi, const std::vector<int>& dims) {
  if (multi.size() != dims.size()) throw input_error("amplitude_index: rank mismatch");
  long idx = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (multi[p] < 0 || multi[p] >= dims[p])
      throw input_error("amplitude_index: local index out of range");
    idx = idx * dims[p] + multi[p];
  }
  return idx;
}

std::vector<int> amplitude_unflatten(long index, const std::vector<int>& dims) {
  long total = 1;
  for (int d : dims) total *= d;
  if (index < 0 || index >= total) throw input_error("amplitude_unflatten: index out of range");
  std::vector<int> multi(dims.size());
  for (std::size_t p = dims.size(); p-- > 0;) {
    multi[p] = static_cast<int>(index % dims[p]);
    index /= dims[p];
  }
  return multi;
}

OrthogonalityReport check_mutual_orthogonality(const StateSet& set, double tol, Exec exec) {
  const int n = set.num_states();
  std::vector<double> norms(n);
  for (int i = 0; i < n; ++i) norms[i] = vec_norm(set.state(i));

  struct Pair {
    int i, j;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});

  std::vector<double> rel(pairs.size(), 0.0);
  const long long np = static_cast<long long>(pairs.size());
#ifdef LOCC_HAS_OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && np > 1)
#endif
  for (long long k = 0; k < np; ++k) {
    const auto [i, j] = pairs[static_cast<std::size_t>(k)];
    const double ov = std::abs(vec_inner(set.state(i), set.state(j)));
    rel[static_cast<std::size_t>(k)] = ov / std::max(1.0, norms[i] * norms[j]);
  }
  (void)exec;

  OrthogonalityReport rep;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (rel[k] > rep.worst_overlap) {
      rep.worst_overlap = rel[k];
      rep.worst_i = pairs[k].i;
      rep.worst_j = pairs[k].j;
    }
  rep.ok = rep.worst_overlap <= tol;
  return rep;
}

}  // namespace locc
