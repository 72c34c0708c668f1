#include "locc/gamma_delta.hpp"

#include <string>

namespace locc {

namespace {

struct PartyStrides {
  int d;
  long left;
  long right;
};

PartyStrides strides_for(const std::vector<int>& dims, int party) {
  if (party < 0 || party >= static_cast<int>(dims.size()))
    throw input_error("party index out of range");
  PartyStrides s{dims[party], 1, 1};
  for (int p = 0; p < party; ++p) s.left *= dims[p];
  for (int p = party + 1; p < static_cast<int>(dims.size()); ++p) s.right *= dims[p];
  return s;
}

// One output entry of the partial trace; identical summation order for the
// serial and the parallel kernel, so results match bitwise.
cx reduced_cross_entry(const cx* sm, const cx* sn, const PartyStrides& st, int a, int b) {
  cx acc(0.0, 0.0);
  for (long l = 0; l < st.left; ++l) {
    const cx* pm = sm + (l * st.d + a) * st.right;
    const cx* pn = sn + (l * st.d + b) * st.right;
    for (long r = 0; r < st.right; ++r) acc += pm[r] * std::conj(pn[r]);
  }
  return acc;
}

CMatrix reduced_cross_kernel(const cx* sm, const cx* sn, const PartyStrides& st, Exec exec) {
  CMatrix out(st.d);
  const int d = st.d;
  if (exec == Exec::parallel) {
#ifdef LOCC_HAS_OPENMP
#pragma omp parallel for collapse(2) schedule(static)
#endif
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) out(a, b) = reduced_cross_entry(sm, sn, st, a, b);
  } else {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) out(a, b) = reduced_cross_entry(sm, sn, st, a, b);
  }
  return out;
}

}  // namespace

CMatrix reduced_cross(const StateSet& set, int m, int n, int party, Exec exec) {
  if (m < 0 || m >= set.num_states() || n < 0 || n >= set.num_states())
    throw input_error("reduced_cross: state index out of range");
  const PartyStrides st = strides_for(set.dims(), party);
  return reduced_cross_kernel(set.state(m).data(), set.state(n).data(), st, exec);
}

const GammaDeltaPair& GammaDeltaFamily::find(int i, int j) const {
  for (const auto& p : pairs)
    if (p.i == i && p.j == j) return p;
  throw input_error("GammaDeltaFamily: pair (" + std::to_string(i) + "," + std::to_string(j) +
                    ") not present (use i < j)");
}

GammaDeltaFamily gamma_delta(const StateSet& set, int party, Exec exec) {
  const PartyStrides st = strides_for(set.dims(), party);
  const int n = set.num_states();

  struct IJ {
    int i, j;
  };
  std::vector<IJ> ij;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ij.push_back({i, j});

  // Parallelism lives at the pair level; each pair runs the serial kernel.
  std::vector<CMatrix> reduced(ij.size());
  const long long np = static_cast<long long>(ij.size());
#ifdef LOCC_HAS_OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && np > 1)
#endif
  for (long long k = 0; k < np; ++k) {
    const auto [i, j] = ij[static_cast<std::size_t>(k)];
    reduced[static_cast<std::size_t>(k)] =
        reduced_cross_kernel(set.state(i).data(), set.state(j).data(), st, Exec::serial);
  }
  (void)exec;

  GammaDeltaFamily fam;
  fam.party = party;
  fam.dim = st.d;
  fam.pairs.reserve(ij.size());
  for (std::size_t k = 0; k < ij.size(); ++k) {
    const CMatrix& r = reduced[k];
    const CMatrix radj = r.adjoint();
    fam.pairs.push_back(GammaDeltaPair{ij[k].i, ij[k].j, HermitianOp::from(r + radj),
                                       HermitianOp::from(cx(0.0, 1.0) * (r - radj))});
  }
  return fam;
}

std::vector<cx> apply_on_party(const std::vector<cx>& state, const std::vector<int>& dims,
                               int party, const CMatrix& m) {
  const PartyStrides st = strides_for(dims, party);
  if (m.dim() != st.d) throw input_error("apply_on_party: operator dimension mismatch");
  long total = 1;
  for (int d : dims) total *= d;
  if (state.size() != static_cast<std::size_t>(total))
    throw input_error("apply_on_party: state length mismatch");

  std::vector<cx> out(state.size(), cx(0.0, 0.0));
  for (long l = 0; l < st.left; ++l)
    for (int a = 0; a < st.d; ++a) {
      cx* po = out.data() + (l * st.d + a) * st.right;
      for (int b = 0; b < st.d; ++b) {
        const cx coeff = m(a, b);
        if (coeff == cx(0.0, 0.0)) continue;
        const cx* pi = state.data() + (l * st.d + b) * st.right;
        for (long r = 0; r < st.right; ++r) po[r] += coeff * pi[r];
      }
    }
  return out;
}

}  // namespace locc
