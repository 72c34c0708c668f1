#include "locc/ntop.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "locc/eig.hpp"

namespace locc {

namespace {

void require_orthogonal(const StateSet& set, double tol, Exec exec) {
  const OrthogonalityReport rep = check_mutual_orthogonality(set, tol, exec);
  if (!rep.ok)
    throw orthogonality_error("states " + std::to_string(rep.worst_i) + " and " +
                              std::to_string(rep.worst_j) +
                              " are not orthogonal (scaled overlap " +
                              std::to_string(rep.worst_overlap) + ")");
}

std::vector<HermitianOp> family_operators(const GammaDeltaFamily& fam) {
  std::vector<HermitianOp> ops;
  ops.reserve(2 * fam.pairs.size());
  for (const auto& p : fam.pairs) {
    ops.push_back(p.gamma);
    ops.push_back(p.delta);
  }
  return ops;
}

}  // namespace

LocalMeasurement LocalMeasurement::make(int party, std::vector<HermitianOp> elements,
                                        std::vector<CMatrix> kraus, double tol) {
  if (party < 0) throw input_error("LocalMeasurement: negative party index");
  if (elements.empty()) throw input_error("LocalMeasurement: no elements");
  const int d = elements.front().dim();
  CMatrix sum(d);
  for (const auto& e : elements) {
    if (e.dim() != d) throw input_error("LocalMeasurement: mixed element dimensions");
    sum += e.matrix();
    const double scale = std::max(1.0, e.matrix().max_abs());
    if (min_eigenvalue(e) < -kPsdTol * scale)
      throw input_error("LocalMeasurement: element is not positive semidefinite");
  }
  if (max_abs_diff(sum, CMatrix::identity(d)) > 10 * tol)
    throw input_error("LocalMeasurement: completeness equation violated (sum != identity)");
  if (!kraus.empty()) {
    if (kraus.size() != elements.size())
      throw input_error("LocalMeasurement: Kraus count does not match element count");
    for (std::size_t m = 0; m < kraus.size(); ++m) {
      if (kraus[m].dim() != d) throw input_error("LocalMeasurement: Kraus dimension mismatch");
      if (max_abs_diff(kraus[m].adjoint() * kraus[m], elements[m].matrix()) > 100 * tol)
        throw input_error("LocalMeasurement: A^dagger A does not reproduce element " +
                          std::to_string(m));
    }
  }
  LocalMeasurement out;
  out.party_ = party;
  out.elements_ = std::move(elements);
  out.kraus_ = std::move(kraus);
  return out;
}

LocalMeasurement LocalMeasurement::identity(int party, int dim) {
  const CMatrix i = CMatrix::identity(dim);
  return make(party, {HermitianOp::from(i)}, {i});
}

CMatrix LocalMeasurement::kraus_for(int m) const {
  if (m < 0 || m >= num_outcomes()) throw input_error("kraus_for: outcome index out of range");
  if (!kraus_.empty()) return kraus_[m];
  return sqrt_psd(elements_[m]);
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::locc_indistinguishable:
      return "locc-indistinguishable";
    case Conclusion::one_way_distinguishable:
      return "one-way-distinguishable";
    case Conclusion::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

NtopReport ntop_check(const StateSet& set, int party, double tol, Exec exec) {
  require_orthogonal(set, tol, exec);
  const GammaDeltaFamily fam = gamma_delta(set, party, exec);
  NtopReport rep;
  rep.party = party;
  rep.d = set.local_dim(party);
  rep.lambda_basis = gram_schmidt_hs(family_operators(fam), tol);
  rep.t = static_cast<int>(rep.lambda_basis.size());
  rep.r = rep.d * rep.d - 1 - rep.t;
  rep.feasible = rep.t < rep.d * rep.d - 1;
  if (rep.r > 0) rep.complement = complete_to_generator_basis(rep.lambda_basis, rep.d, tol);
  return rep;
}

CheckSummary ntop_check_all(const StateSet& set, double tol, Exec exec) {
  CheckSummary summary;
  for (int p = 0; p < set.num_parties(); ++p) {
    summary.reports.push_back(ntop_check(set, p, tol, exec));
    if (summary.reports.back().feasible) summary.feasible_parties.push_back(p);
  }
  summary.conclusion = summary.feasible_parties.empty() ? Conclusion::locc_indistinguishable
                                                        : Conclusion::inconclusive;
  return summary;
}

LocalMeasurement construct_ntop_povm(const NtopReport& report,
                                     const std::vector<double>& direction) {
  if (!report.feasible)
    throw infeasible_error("party " + std::to_string(report.party) +
                           " admits no NTOP measurement (t = d^2 - 1)");
  if (static_cast<int>(direction.size()) != report.r)
    throw input_error("construct_ntop_povm: direction length must equal r");
  double norm = 0.0;
  for (double c : direction) norm += c * c;
  norm = std::sqrt(norm);
  if (norm <= 0.0 || !std::isfinite(norm))
    throw input_error("construct_ntop_povm: direction must be nonzero");

  const int d = report.d;
  // Largest coefficient ball that keeps both elements positive.
  const double s = std::sqrt(2.0 / (static_cast<double>(d) * d - d));
  CMatrix combo(d);
  for (int n = 0; n < report.r; ++n)
    combo += cx(s * direction[n] / norm, 0.0) * report.complement[n].matrix();

  const CMatrix half_id = cx(0.5, 0.0) * CMatrix::identity(d);
  const CMatrix e1 = half_id + cx(0.25 * d, 0.0) * combo;
  const CMatrix e2 = half_id - cx(0.25 * d, 0.0) * combo;
  const HermitianOp h1 = HermitianOp::from(e1);
  const HermitianOp h2 = HermitianOp::from(e2);
  return LocalMeasurement::make(report.party, {h1, h2}, {sqrt_psd(h1), sqrt_psd(h2)});
}

LocalMeasurement construct_ntop_povm(const NtopReport& report) {
  std::vector<double> dir(report.feasible ? report.r : 0, 0.0);
  if (!dir.empty()) dir[0] = 1.0;
  return construct_ntop_povm(report, dir);
}

bool is_rank_one(const std::vector<double>& b, const std::vector<HermitianOp>& complement,
                 int d, double tol) {
  if (b.size() != complement.size()) throw input_error("is_rank_one: length mismatch");
  CMatrix rho = cx(1.0 / d, 0.0) * CMatrix::identity(d);
  for (std::size_t n = 0; n < b.size(); ++n) {
    if (complement[n].dim() != d) throw input_error("is_rank_one: dimension mismatch");
    rho += cx(0.5 * b[n], 0.0) * complement[n].matrix();
  }
  return max_abs_diff(rho * rho, rho) <= tol;
}

LocalMeasurement projective_ntop_qubit(const NtopReport& report) {
  if (report.d != 2) throw input_error("projective_ntop_qubit: party dimension must be 2");
  if (!report.feasible)
    throw infeasible_error("party " + std::to_string(report.party) +
                           " admits no NTOP measurement (t = d^2 - 1)");
  // b = unit vector along the first complement generator; for a qubit this
  // yields two rank-one orthogonal projectors.
  const CMatrix& lam = report.complement.front().matrix();
  const CMatrix half_id = cx(0.5, 0.0) * CMatrix::identity(2);
  const CMatrix p1 = half_id + cx(0.5, 0.0) * lam;
  const CMatrix p2 = half_id - cx(0.5, 0.0) * lam;
  return LocalMeasurement::make(report.party, {HermitianOp::from(p1), HermitianOp::from(p2)},
                                {p1, p2});
}

PreservationReport verify_orthogonality_preserving(const LocalMeasurement& meas,
                                                   const StateSet& set, double tol) {
  if (meas.party() >= set.num_parties())
    throw input_error("verify_orthogonality_preserving: party index out of range");
  if (meas.dim() != set.local_dim(meas.party()))
    throw input_error("verify_orthogonality_preserving: element dimension mismatch");

  const int n = set.num_states();
  std::vector<double> norms(n);
  for (int i = 0; i < n; ++i) norms[i] = vec_norm(set.state(i));

  PreservationReport rep;
  rep.trivial = true;
  for (int e = 0; e < meas.num_outcomes(); ++e) {
    const HermitianOp& el = meas.elements()[e];
    const double id_coeff = el.trace() / el.dim();
    const CMatrix dev = el.matrix() - cx(id_coeff, 0.0) * CMatrix::identity(el.dim());
    if (dev.hs_norm() > tol * std::max(1.0, el.hs_norm())) rep.trivial = false;

    std::vector<std::vector<cx>> mapped(n);
    for (int j = 0; j < n; ++j)
      mapped[j] = apply_on_party(set.state(j), set.dims(), meas.party(), el.matrix());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double ov = std::abs(vec_inner(set.state(i), mapped[j]));
        const double scaled = ov / std::max(1.0, norms[i] * norms[j]);
        if (scaled > rep.worst) {
          rep.worst = scaled;
          rep.worst_element = e;
          rep.worst_i = i;
          rep.worst_j = j;
        }
      }
  }
  rep.ok = rep.worst <= tol;
  return rep;
}

bool ntop_oracle(const StateSet& set, int party, double tol) {
  require_orthogonal(set, tol, Exec::serial);
  const GammaDeltaFamily fam = gamma_delta(set, party, Exec::serial);
  const int d = set.local_dim(party);
  const int cols = d * d;  // real coordinates of Hermitian X

  // One row per constraint Tr(X G) = 0: variables are the d diagonal
  // entries, then (Re X_jk, Im X_jk) for j < k.
  std::vector<std::vector<double>> rows;
  for (const auto& p : fam.pairs)
    for (const HermitianOp* op : {&p.gamma, &p.delta}) {
      std::vector<double> row(cols, 0.0);
      int c = 0;
      for (int j = 0; j < d; ++j) row[c++] = op->matrix()(j, j).real();
      for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
          row[c++] = 2.0 * op->matrix()(j, k).real();
          row[c++] = 2.0 * op->matrix()(j, k).imag();
        }
      rows.push_back(std::move(row));
    }

  double scale = 1.0;
  for (const auto& row : rows)
    for (double v : row) scale = std::max(scale, std::abs(v));
  const double thresh = tol * scale;

  // Row reduction with partial pivoting; the rank equals the number of
  // accepted pivots.
  int rank = 0;
  const int nrows = static_cast<int>(rows.size());
  for (int col = 0; col < cols && rank < nrows; ++col) {
    int pivot = -1;
    double best = thresh;
    for (int r = rank; r < nrows; ++r)
      if (std::abs(rows[r][col]) > best) {
        best = std::abs(rows[r][col]);
        pivot = r;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const double inv = 1.0 / rows[rank][col];
    for (int r = rank + 1; r < nrows; ++r) {
      const double f = rows[r][col] * inv;
      if (f == 0.0) continue;
      for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }

  // The identity always solves the system; a nontrivial measurement needs a
  // second independent solution.
  return cols - rank >= 2;
}

}  // namespace locc
