#pragma once

#include <string>
#include <vector>

#include "locc/matrix.hpp"

namespace locc {

/// Kernel execution policy. Parallel kernels partition work so that every
/// output entry is produced by the same summation order as the serial
/// reference; results are bitwise identical.
enum class Exec { serial, parallel };

/// A set of (possibly unnormalized) pure states on a multipartite system.
class StateSet {
 public:
  /// Empty placeholder; every populated instance comes from make().
  StateSet() = default;

  static StateSet make(std::vector<int> dims, std::vector<std::vector<cx>> states,
                       std::vector<std::string> names = {});

  const std::vector<int>& dims() const { return dims_; }
  int num_parties() const { return static_cast<int>(dims_.size()); }
  int local_dim(int party) const;
  long total_dim() const { return total_; }
  int num_states() const { return static_cast<int>(states_.size()); }
  const std::vector<cx>& state(int i) const { return states_.at(i); }
  const std::vector<std::vector<cx>>& states() const { return states_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<int> dims_;
  std::vector<std::vector<cx>> states_;
  std::vector<std::string> names_;
  long total_ = 0;
};

/// Row-major flattening with party 0 most significant.
long amplitude_index(const std::vector<int>& multi, const std::vector<int>& dims);
std::vector<int> amplitude_unflatten(long index, const std::vector<int>& dims);

struct OrthogonalityReport {
  bool ok = true;
  int worst_i = -1;
  int worst_j = -1;
  // |<phi_i|phi_j>| / max(1, ||phi_i|| ||phi_j||) for the worst pair.
  double worst_overlap = 0.0;
};

OrthogonalityReport check_mutual_orthogonality(const StateSet& set, double tol = kDefaultTol,
                                               Exec exec = Exec::parallel);

}  // namespace locc
