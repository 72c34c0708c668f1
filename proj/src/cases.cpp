#include "locc/cases.hpp"

#include <cmath>

namespace locc {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<cx> kron(const std::vector<std::vector<cx>>& locals) {
  std::vector<cx> out{cx(1.0, 0.0)};
  for (const auto& v : locals) {
    std::vector<cx> next;
    next.reserve(out.size() * v.size());
    for (const cx& a : out)
      for (const cx& b : v) next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

// Qubit kets.
const std::vector<cx> k0{cx(1, 0), cx(0, 0)};
const std::vector<cx> k1{cx(0, 0), cx(1, 0)};
const std::vector<cx> kp{cx(kInvSqrt2, 0), cx(kInvSqrt2, 0)};
const std::vector<cx> km{cx(kInvSqrt2, 0), cx(-kInvSqrt2, 0)};

// Qutrit kets |i> and (|i> +- |j>)/sqrt(2).
std::vector<cx> q(int i) {
  std::vector<cx> v(3, cx(0, 0));
  v[i] = cx(1, 0);
  return v;
}
std::vector<cx> q2(int i, int j, double sign) {
  std::vector<cx> v(3, cx(0, 0));
  v[i] = cx(kInvSqrt2, 0);
  v[j] = cx(sign * kInvSqrt2, 0);
  return v;
}

std::vector<cx> lincomb(cx a, const std::vector<cx>& u, cx b, const std::vector<cx>& v) {
  std::vector<cx> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = a * u[i] + b * v[i];
  return out;
}

}  // namespace

StateSet case_bennett9() {
  std::vector<std::vector<cx>> states{
      kron({q(1), q(1)}),        kron({q(0), q2(0, 1, +1)}), kron({q(0), q2(0, 1, -1)}),
      kron({q(2), q2(1, 2, +1)}), kron({q(2), q2(1, 2, -1)}), kron({q2(1, 2, +1), q(0)}),
      kron({q2(1, 2, -1), q(0)}), kron({q2(0, 1, +1), q(2)}), kron({q2(0, 1, -1), q(2)})};
  std::vector<std::string> names;
  for (int i = 1; i <= 9; ++i) names.push_back("psi" + std::to_string(i));
  return StateSet::make({3, 3}, std::move(states), std::move(names));
}

StateSet case_upb4() {
  std::vector<std::vector<cx>> states{kron({k0, k1, kp}), kron({k1, kp, k0}),
                                      kron({kp, k0, k1}), kron({km, km, km})};
  return StateSet::make({2, 2, 2}, std::move(states), {"phi1", "phi2", "phi3", "phi4"});
}

StateSet case_upb4_variation() {
  const StateSet base = case_upb4();
  const double r2 = std::sqrt(2.0);
  std::vector<std::vector<cx>> states{
      base.state(0), lincomb(cx(r2, 0), base.state(1), cx(1, 0), base.state(3)), base.state(2),
      lincomb(cx(1, 0), base.state(1), cx(-r2, 0), base.state(3))};
  return StateSet::make({2, 2, 2}, std::move(states),
                        {"phi1bar", "phi2bar", "phi3bar", "phi4bar"});
}

StateSet case_ghz3(const GhzFamilyParams& p) {
  std::vector<cx> phi1(8, cx(0, 0)), phi2(8, cx(0, 0)), phi3(8, cx(0, 0));
  phi1[0] = p.s;                // |000>
  phi1[7] = p.t;                // |111>
  phi2[0] = std::conj(p.t);
  phi2[7] = -std::conj(p.s);
  phi3[4] = p.x[0];             // |100>
  phi3[3] = p.x[1];             // |011>
  phi3[2] = p.x[2];             // |010>
  phi3[5] = p.x[3];             // |101>
  phi3[1] = p.x[4];             // |001>
  phi3[6] = p.x[5];             // |110>
  return StateSet::make({2, 2, 2}, {phi1, phi2, phi3}, {"phi1", "phi2", "phi3"});
}

GhzFamilyParams default_ghz_params() {
  return GhzFamilyParams::make(cx(kInvSqrt2, 0), cx(kInvSqrt2, 0),
                               {cx(0, 0), cx(0, 0), cx(1, 0), cx(0, 0), cx(0, 0), cx(0, 0)});
}

StateSet case_bells(int k) {
  if (k < 2 || k > 4) throw input_error("case_bells: k must be in 2..4");
  const double h = kInvSqrt2;
  std::vector<std::vector<cx>> all{
      {cx(h, 0), cx(0, 0), cx(0, 0), cx(h, 0)},    // Phi+
      {cx(h, 0), cx(0, 0), cx(0, 0), cx(-h, 0)},   // Phi-
      {cx(0, 0), cx(h, 0), cx(h, 0), cx(0, 0)},    // Psi+
      {cx(0, 0), cx(h, 0), cx(-h, 0), cx(0, 0)}};  // Psi-
  std::vector<std::string> names{"phi+", "phi-", "psi+", "psi-"};
  all.resize(k);
  names.resize(k);
  return StateSet::make({2, 2}, std::move(all), std::move(names));
}

}  // namespace locc
