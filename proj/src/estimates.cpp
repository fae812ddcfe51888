#include "spinflow/estimates.hpp"

#include <stdexcept>

namespace spinflow {

void SpinorProfile::validate() const {
  if (w0 < 0 || wm < 0 || w0 + wm != 1)
    throw std::invalid_argument("profile weights must be nonnegative and sum to one");
}

PiValue upper_bound_general(const PiValue& alpha, const Rational& beta, int n,
                            const Rational& omega_sq_avg, const Rational& xi_omega_avg) {
  if (n < 1) throw std::invalid_argument("codimension must be at least 1");
  if (omega_sq_avg < 0)
    throw std::invalid_argument("the rotation term is a squared norm and cannot be negative");
  PiValue r = alpha * alpha;
  r += PiValue(Rational(n) * n * beta * beta + omega_sq_avg / 4);
  r += alpha * xi_omega_avg;
  return r;
}

PiValue upper_bound_sasakian(const PiValue& alpha, const Rational& beta, int m,
                             const SpinorProfile& profile) {
  if (m < 1) throw std::invalid_argument("transversal dimension parameter must be at least 1");
  profile.validate();
  if (beta != 0 && !alpha.is_zero())
    throw std::invalid_argument("Sasakian flow constants satisfy alpha*beta = 0");
  // the rotation acts on the two extremal components with squared norm m^2,
  // and pairs with the flow direction as -m and (-1)^m m respectively
  Rational omega_sq_avg = Rational(m) * m;
  Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
  Rational xi_omega_avg = Rational(m) * (sign * profile.wm - profile.w0);
  return upper_bound_general(alpha, beta, 2 * m, omega_sq_avg, xi_omega_avg);
}

PiValue remark_bound(const PiValue& alpha, const Rational& beta, int m) {
  if (m < 1) throw std::invalid_argument("transversal dimension parameter must be at least 1");
  PiValue best;
  for (int r = 0; r <= m; ++r) {
    Rational shift = rat(2 * r - m, 2) * ((r % 2) ? -1 : 1);
    PiValue edge = alpha + PiValue(shift);
    PiValue cand = edge * edge;
    if (r == 0 || cand > best) best = cand;
  }
  return best + PiValue(Rational(4) * m * m * beta * beta);
}

PiValue upper_bound_3d(const PiValue& alpha, const Rational& beta, const Rational& b) {
  return upper_3d_expr(alpha, PiValue(beta), PiValue(b));
}

PiValue upper_bound_3d_averaged(const PiValue& alpha, const Rational& beta,
                                const std::vector<std::pair<Rational, Rational>>& b_samples) {
  Rational total(0);
  PiValue sum;
  for (const auto& [b, weight] : b_samples) {
    if (weight < 0) throw std::invalid_argument("volume weights cannot be negative");
    PiValue edge = PiValue(b / 2) - alpha;
    sum += edge * edge * weight;
    total += weight;
  }
  if (total == 0) throw std::invalid_argument("volume weights must have positive total");
  return sum * (1 / total) + PiValue(Rational(4) * beta * beta);
}

PiValue friedrich_bound(int dim, const PiValue& inf_scal) {
  if (dim < 2) throw std::invalid_argument("the curvature bound needs dimension at least 2");
  return inf_scal * rat(dim, 4 * (dim - 1));
}

EnergyMomentum emomentum_3d(const PiValue& alpha, const Rational& beta, const Rational& b) {
  auto frame = emomentum_3d_expr(alpha, PiValue(beta), PiValue(b));
  EnergyMomentum e;
  e.matrix.assign(3, std::vector<PiValue>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e.matrix[i][j] = frame[i][j];
  e.frobenius_sq = frobenius_expr(frame);
  return e;
}

PiValue hijazi_bound_3d(const PiValue& alpha, const Rational& beta, const Rational& b) {
  PiValue scal = scal_from_flow(FlowData{1, alpha, beta, b});
  return scal * rat(1, 4) + emomentum_3d(alpha, beta, b).frobenius_sq;
}

SasakianMomentum emomentum_sasakian(const PiValue& alpha, int m, const SpinorProfile& profile) {
  if (m < 1) throw std::invalid_argument("transversal dimension parameter must be at least 1");
  profile.validate();
  SasakianMomentum out;
  if (m % 2 == 0 && profile.mixed()) {
    // the flow derivative fixes opposite constants on the two components
    out.status = MomentumStatus::NotASolution;
    return out;
  }
  bool top = (m % 2 == 0) && profile.w0 == 0;
  PiValue e00 = -(alpha + PiValue(top ? rat(-m, 2) : rat(m, 2)));
  Rational diag = top ? rat(-1, 2) : rat(1, 2);

  EnergyMomentum e;
  int dim = 2 * m + 1;
  e.matrix.assign(dim, std::vector<PiValue>(dim));
  e.matrix[0][0] = e00;
  for (int j = 1; j < dim; ++j) e.matrix[j][j] = PiValue(diag);
  e.frobenius_sq = e00 * e00 + PiValue(Rational(2 * m) * diag * diag);
  out.tensor = std::move(e);
  return out;
}

DeformedConstants deform_constants(const PiValue& alpha, const Rational& beta, const Rational& t) {
  if (t <= 0) throw std::invalid_argument("deformation parameter must be positive");
  return {alpha * (1 / t), beta * beta / t};
}

PiValue deformed_eigenvalue(int m, const PiValue& alpha, const Rational& t, Branch branch) {
  if (m < 1) throw std::invalid_argument("transversal dimension parameter must be at least 1");
  if (t <= 0) throw std::invalid_argument("deformation parameter must be positive");
  PiValue shift = alpha * (1 / t);
  PiValue edge = PiValue(rat(m, 2));
  if (branch == Branch::Sigma0)
    edge -= shift;
  else
    edge += (m % 2 == 0) ? shift : -shift;
  return edge * edge;
}

std::optional<Rational> harmonic_t(int m, const Rational& alpha, Branch branch) {
  if (m < 1) throw std::invalid_argument("transversal dimension parameter must be at least 1");
  Rational sign = (branch == Branch::Sigma0 || m % 2 == 1) ? Rational(1) : Rational(-1);
  if (sign * alpha <= 0) return std::nullopt;
  return sign * 2 * alpha / m;
}

BoundReport equality_report(const ModelInstance& model, const FlowData& flow,
                            const SpinorProfile& profile) {
  model.validate();
  profile.validate();
  bool sphere_kind =
      model.kind == ModelKind::RoundSphere || model.kind == ModelKind::DeformedSphere;
  if (flow.m != (sphere_kind ? model.m : 1))
    throw std::invalid_argument("flow data and model disagree on the transversal dimension");

  Lambda1Result l1 = lambda1(model);

  BoundReport rep;
  rep.model = kind_name(model.kind);
  rep.lambda1 = l1.value;
  rep.provenance = l1.provenance;

  const int m = flow.m;
  const bool sasaki = flow.b == 1 && (flow.beta == 0 || flow.alpha.is_zero());

  if (m == 1) rep.upper.emplace_back("dim3", upper_bound_3d(flow.alpha, flow.beta, flow.b));
  if (sasaki) {
    rep.upper.emplace_back("sasakian", upper_bound_sasakian(flow.alpha, flow.beta, m, profile));
    rep.upper.emplace_back("remark", remark_bound(flow.alpha, flow.beta, m));
  }

  if (m == 1) {
    rep.scal = scal_from_flow(flow);
  } else if (model.kind == ModelKind::RoundSphere) {
    rep.scal = PiValue(Rational(2 * m) * (2 * m + 1));
  }
  if (rep.scal) rep.lower.emplace_back("friedrich", friedrich_bound(2 * m + 1, *rep.scal));
  if (m == 1) rep.lower.emplace_back("hijazi", hijazi_bound_3d(flow.alpha, flow.beta, flow.b));

  for (const auto& [name, value] : rep.upper) rep.flags.emplace_back(name, value == rep.lambda1);
  for (const auto& [name, value] : rep.lower) rep.flags.emplace_back(name, value == rep.lambda1);
  if (m == 1)
    rep.flags.emplace_back("hijazi_equals_dim3",
                           rep.upper.front().second == rep.lower.back().second);
  return rep;
}

}  // namespace spinflow
