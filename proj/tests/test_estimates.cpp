#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinflow/estimates.hpp"
#include "spinflow/spinor_calculus.hpp"

using namespace spinflow;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 10);
  return rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("Sasakian upper bound at the canonical sphere constants") {
  for (int m = 1; m <= 5; ++m) {
    PiValue alpha(rat(-(m + 1), 2));
    PiValue expect(rat((2 * m + 1) * (2 * m + 1), 4));
    CHECK(upper_bound_sasakian(alpha, Rational(0), m, SpinorProfile::sigma0()) == expect);
  }
  for (int m = 1; m <= 4; ++m) {
    PiValue balanced = upper_bound_sasakian(PiValue(), Rational(0), m,
                                            SpinorProfile::mixture(rat(1, 2), rat(1, 2)));
    CHECK(balanced == PiValue(rat(m * m, 4)));
  }
  CHECK(upper_bound_sasakian(PiValue(), Rational(0), 1, SpinorProfile::sigma0()) ==
        PiValue(rat(1, 4)));
}

TEST_CASE("Sasakian upper bound on the first branch collapses to a square") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 1 + int(trial % 4);
    PiValue alpha(random_rational(rng));
    PiValue direct = upper_bound_sasakian(alpha, Rational(0), m, SpinorProfile::sigma0());
    PiValue edge = PiValue(rat(m, 2)) - alpha;
    CHECK(direct == edge * edge);
    CHECK(direct == deformed_eigenvalue(m, alpha, Rational(1), Branch::Sigma0));
  }
}

TEST_CASE("profile-independent bound dominates every profile") {
  CHECK(remark_bound(PiValue(), Rational(0), 1) == PiValue(rat(1, 4)));
  CHECK(remark_bound(PiValue(rat(-3, 2)), Rational(0), 2) == PiValue(rat(25, 4)));
  CHECK(remark_bound(PiValue(), rat(1, 2), 1) == PiValue(rat(5, 4)));

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + int(trial % 5);
    PiValue alpha(random_rational(rng));
    Rational w0 = rat(std::uniform_int_distribution<long>(0, 8)(rng), 8);
    SpinorProfile profile = SpinorProfile::mixture(w0, 1 - w0);
    CHECK(remark_bound(alpha, Rational(0), m) >=
          upper_bound_sasakian(alpha, Rational(0), m, profile));
  }
}

TEST_CASE("3-dimensional upper bound values") {
  CHECK(upper_bound_3d(PiValue(Rational(-1)), Rational(0), Rational(1)) == PiValue(rat(9, 4)));
  CHECK(upper_bound_3d(PiValue(), rat(1, 2), Rational(0)) == PiValue(Rational(1)));
  CHECK(upper_bound_3d(PiValue(), rat(-1, 2), Rational(0)) == PiValue(Rational(1)));
  CHECK(upper_bound_3d(PiValue(), Rational(0), Rational(1)) == PiValue(rat(1, 4)));
}

TEST_CASE("weighted non-constant rotation scalar") {
  PiValue alpha(rat(1, 2));
  std::vector<std::pair<Rational, Rational>> constant = {{Rational(1), Rational(3)}};
  CHECK(upper_bound_3d_averaged(alpha, rat(1, 3), constant) ==
        upper_bound_3d(alpha, rat(1, 3), Rational(1)));

  // average of (b/2 - 1/2)^2 over b = 1 (weight 1) and b = 3 (weight 3)
  std::vector<std::pair<Rational, Rational>> mixed = {{Rational(1), Rational(1)},
                                                      {Rational(3), Rational(3)}};
  CHECK(upper_bound_3d_averaged(alpha, Rational(0), mixed) == PiValue(rat(3, 4)));

  CHECK_THROWS_AS(
      upper_bound_3d_averaged(alpha, Rational(0), {{Rational(1), Rational(-1)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(upper_bound_3d_averaged(alpha, Rational(0), {}), std::invalid_argument);
}

TEST_CASE("curvature lower bound") {
  CHECK(friedrich_bound(3, PiValue(Rational(-2))) == PiValue(rat(-3, 4)));
  CHECK(friedrich_bound(3, PiValue(Rational(6))) == PiValue(rat(9, 4)));
  CHECK(friedrich_bound(7, PiValue()).is_zero());
  CHECK_THROWS_AS(friedrich_bound(1, PiValue(Rational(1))), std::invalid_argument);
}

TEST_CASE("energy-momentum tensor in dimension 3") {
  EnergyMomentum skew = emomentum_3d(PiValue(), rat(1, 2), Rational(0));
  CHECK(skew.matrix[0][0].is_zero());
  CHECK(skew.matrix[1][2] == PiValue(rat(1, 2)));
  CHECK(skew.matrix[2][1] == PiValue(rat(-1, 2)));
  CHECK(skew.matrix[1][1].is_zero());
  CHECK(skew.frobenius_sq == PiValue(rat(1, 2)));

  EnergyMomentum pure = emomentum_3d(PiValue(Rational(2)), Rational(0), Rational(0));
  CHECK(pure.matrix[0][0] == PiValue(Rational(-2)));
  CHECK(pure.frobenius_sq == PiValue(Rational(4)));

  EnergyMomentum sphere = emomentum_3d(PiValue(Rational(-1)), Rational(0), Rational(1));
  CHECK(sphere.frobenius_sq == PiValue(rat(3, 4)));

  // stored squared norm always equals the recomputed sum of squares
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    EnergyMomentum e =
        emomentum_3d(PiValue(random_rational(rng)), random_rational(rng), random_rational(rng));
    PiValue sum;
    for (const auto& row : e.matrix)
      for (const PiValue& entry : row) sum += entry * entry;
    CHECK(sum == e.frobenius_sq);
  }
}

TEST_CASE("energy-momentum lower bound matches the paper's model values") {
  CHECK(hijazi_bound_3d(PiValue(Rational(-1)), Rational(0), Rational(1)) == PiValue(rat(9, 4)));
  CHECK(hijazi_bound_3d(PiValue(), Rational(0), Rational(1)) == PiValue(rat(1, 4)));
  CHECK(hijazi_bound_3d(PiValue(), rat(1, 2), Rational(0)) == PiValue(Rational(1)));
}

TEST_CASE("lower and upper 3-dimensional bounds coincide as polynomials") {
  Poly alpha = Poly::var(kAlphaVar);
  Poly beta = Poly::var(kBetaVar);
  Poly b = Poly::var(omega_var(1, 2));
  CHECK(hijazi_3d_expr(alpha, beta, b) == upper_3d_expr(alpha, beta, b));

  // and the gap to the curvature bound is the explicit sum of squares
  // (alpha + b)^2 + beta^2, hence never negative
  Poly gap = hijazi_3d_expr(alpha, beta, b) - scal_flow_expr(alpha, beta, b) * rat(3, 8);
  Poly expect = (alpha + b) * (alpha + b) + beta * beta;
  CHECK(gap == expect);
}

TEST_CASE("3-dimensional formulas agree with their exact-number twins") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    Rational a = random_rational(rng), beta = random_rational(rng), b = random_rational(rng);
    FlowData flow{1, PiValue(a), beta, b};
    CHECK(scal_from_flow(flow) == scal_flow_expr(PiValue(a), PiValue(beta), PiValue(b)));
    CHECK(hijazi_bound_3d(PiValue(a), beta, b) == upper_bound_3d(PiValue(a), beta, b));
    CHECK(friedrich_bound(3, scal_from_flow(flow)) <= hijazi_bound_3d(PiValue(a), beta, b));
  }
}

TEST_CASE("Sasakian energy-momentum branches") {
  SasakianMomentum odd = emomentum_sasakian(PiValue(Rational(-1)), 1, SpinorProfile::sigma0());
  REQUIRE(odd.status == MomentumStatus::Valid);
  CHECK(odd.tensor->matrix[0][0] == PiValue(rat(1, 2)));
  CHECK(odd.tensor->matrix[1][1] == PiValue(rat(1, 2)));
  CHECK(odd.tensor->matrix[2][2] == PiValue(rat(1, 2)));
  CHECK(odd.tensor->frobenius_sq == PiValue(rat(3, 4)));

  PiValue a(rat(3, 2));
  SasakianMomentum even0 = emomentum_sasakian(a, 2, SpinorProfile::sigma0());
  REQUIRE(even0.status == MomentumStatus::Valid);
  CHECK(even0.tensor->matrix.size() == 5);
  CHECK(even0.tensor->matrix[0][0] == -(a + PiValue(Rational(1))));
  for (int j = 1; j < 5; ++j) CHECK(even0.tensor->matrix[j][j] == PiValue(rat(1, 2)));

  SasakianMomentum evenm = emomentum_sasakian(a, 2, SpinorProfile::sigmam());
  REQUIRE(evenm.status == MomentumStatus::Valid);
  CHECK(evenm.tensor->matrix[0][0] == -(a - PiValue(Rational(1))));
  for (int j = 1; j < 5; ++j) CHECK(evenm.tensor->matrix[j][j] == PiValue(rat(-1, 2)));

  SasakianMomentum bad = emomentum_sasakian(a, 2, SpinorProfile::mixture(rat(1, 2), rat(1, 2)));
  CHECK(bad.status == MomentumStatus::NotASolution);
  CHECK_FALSE(bad.tensor);

  SasakianMomentum mixedOdd =
      emomentum_sasakian(a, 3, SpinorProfile::mixture(rat(1, 4), rat(3, 4)));
  REQUIRE(mixedOdd.status == MomentumStatus::Valid);
  CHECK(mixedOdd.tensor->matrix[0][0] == -(a + PiValue(rat(3, 2))));
  CHECK(mixedOdd.tensor->frobenius_sq ==
        (a + PiValue(rat(3, 2))) * (a + PiValue(rat(3, 2))) + PiValue(rat(3, 2)));
}

TEST_CASE("metric deformation along the flow") {
  PiValue alpha(Rational(3));
  DeformedConstants same = deform_constants(alpha, rat(1, 2), Rational(1));
  CHECK(same.alpha == alpha);
  CHECK(same.beta_sq == rat(1, 4));

  // t = 2 alpha / m sends the first constant to m/2
  DeformedConstants tuned = deform_constants(alpha, Rational(0), Rational(3));
  CHECK(tuned.alpha == PiValue(Rational(1)));

  DeformedConstants sphere = deform_constants(PiValue(Rational(-2)), Rational(0), Rational(4));
  CHECK(sphere.alpha == PiValue(rat(-1, 2)));

  CHECK_THROWS_AS(deform_constants(alpha, Rational(0), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(deform_constants(alpha, Rational(0), Rational(-2)), std::invalid_argument);
}

TEST_CASE("deformed eigenvalue formula") {
  // canonical sphere constants: (m/2 + (m+1)/(2t))^2 on the first branch
  for (int m = 1; m <= 3; ++m) {
    for (long tnum : {1L, 2L, 5L}) {
      Rational t(tnum, 2);
      t.canonicalize();
      PiValue alpha(rat(-(m + 1), 2));
      PiValue expect_edge = PiValue(rat(m, 2)) + PiValue(rat(m + 1, 2) / t);
      CHECK(deformed_eigenvalue(m, alpha, t, Branch::Sigma0) == expect_edge * expect_edge);
    }
  }
  // at the harmonic parameter the branch eigenvalue vanishes
  CHECK(deformed_eigenvalue(2, PiValue(Rational(3)), Rational(3), Branch::Sigma0).is_zero());
  // a vanishing first constant pins both branches at m^2/4 for every t
  for (long t = 1; t <= 4; ++t) {
    CHECK(deformed_eigenvalue(3, PiValue(), Rational(t), Branch::Sigma0) == PiValue(rat(9, 4)));
    CHECK(deformed_eigenvalue(3, PiValue(), Rational(t), Branch::SigmaM) == PiValue(rat(9, 4)));
  }
  CHECK_THROWS_AS(deformed_eigenvalue(2, PiValue(Rational(1)), Rational(0), Branch::Sigma0),
                  std::invalid_argument);
}

TEST_CASE("harmonic deformation parameter sign rules") {
  CHECK(harmonic_t(2, Rational(3), Branch::Sigma0) == Rational(3));
  CHECK_FALSE(harmonic_t(2, Rational(3), Branch::SigmaM));
  CHECK(harmonic_t(2, Rational(-3), Branch::SigmaM) == Rational(3));
  CHECK(harmonic_t(1, Rational(3), Branch::SigmaM) == Rational(6));
  CHECK_FALSE(harmonic_t(1, Rational(0), Branch::Sigma0));
  CHECK_FALSE(harmonic_t(1, Rational(0), Branch::SigmaM));
  CHECK_FALSE(harmonic_t(3, Rational(-2), Branch::Sigma0));
  CHECK(harmonic_t(3, Rational(2), Branch::SigmaM) == rat(4, 3));
}

TEST_CASE("equality report for the nilmanifold") {
  const CatalogEntry& e = catalog_entry("heisenberg");
  BoundReport rep = equality_report(e.model, *e.flow);
  CHECK(rep.lambda1 == PiValue(rat(1, 4)));
  CHECK(rep.scal == PiValue(Rational(-2)));

  std::map<std::string, PiValue> upper(rep.upper.begin(), rep.upper.end());
  std::map<std::string, PiValue> lower(rep.lower.begin(), rep.lower.end());
  CHECK(upper.at("dim3") == PiValue(rat(1, 4)));
  CHECK(upper.at("sasakian") == PiValue(rat(1, 4)));
  CHECK(lower.at("friedrich") == PiValue(rat(-3, 4)));
  CHECK(lower.at("hijazi") == PiValue(rat(1, 4)));

  std::map<std::string, bool> flags(rep.flags.begin(), rep.flags.end());
  CHECK(flags.at("dim3"));
  CHECK(flags.at("hijazi"));
  CHECK_FALSE(flags.at("friedrich"));
  CHECK(flags.at("hijazi_equals_dim3"));
}

TEST_CASE("equality report across the catalog") {
  auto flag = [](const BoundReport& rep, const std::string& name) {
    for (const auto& [key, value] : rep.flags)
      if (key == name) return value;
    throw std::out_of_range(name);
  };

  const CatalogEntry& quot = catalog_entry("sphere_quotient");
  BoundReport q = equality_report(quot.model, *quot.flow);
  CHECK(q.lambda1 == PiValue(rat(9, 4)));
  CHECK(flag(q, "dim3"));
  CHECK(flag(q, "friedrich"));
  CHECK(flag(q, "hijazi"));

  const CatalogEntry& prod = catalog_entry("product_s1_s2");
  BoundReport p = equality_report(prod.model, *prod.flow);
  CHECK(p.lambda1 == PiValue(Rational(1)));
  CHECK(flag(p, "dim3"));
  CHECK_FALSE(flag(p, "friedrich"));
  CHECK(flag(p, "hijazi"));
  // the product flow is not a unit rotation, so no Sasakian row appears
  for (const auto& [key, value] : p.upper) CHECK(key != "sasakian");

  const CatalogEntry& torus = catalog_entry("torus_trivial_spin");
  BoundReport t = equality_report(torus.model, *torus.flow);
  CHECK(t.lambda1.is_zero());
  CHECK_FALSE(flag(t, "dim3"));
  CHECK(t.provenance == "enumeration");

  const CatalogEntry& sphere = catalog_entry("round_sphere");
  BoundReport s = equality_report(sphere.model, *sphere.flow);
  CHECK(flag(s, "dim3"));
  CHECK(flag(s, "sasakian"));
  CHECK(flag(s, "remark"));
  CHECK(flag(s, "friedrich"));
  CHECK(flag(s, "hijazi"));
}

TEST_CASE("equality report rejects models it cannot judge") {
  const CatalogEntry& psl = catalog_entry("psl2r_quotient");
  CHECK_THROWS_AS(equality_report(psl.model, *psl.flow), CapabilityError);

  const CatalogEntry& def = catalog_entry("deformed_sphere");
  CHECK_THROWS_AS(equality_report(def.model, *def.flow), CapabilityError);

  const CatalogEntry& heis = catalog_entry("heisenberg");
  FlowData wrong = *heis.flow;
  wrong.m = 2;
  CHECK_THROWS_AS(equality_report(heis.model, wrong), std::invalid_argument);
}

TEST_CASE("input validation for the bound evaluators") {
  CHECK_THROWS_AS(upper_bound_general(PiValue(), Rational(0), 0, Rational(1), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(upper_bound_general(PiValue(), Rational(0), 2, Rational(-1), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      upper_bound_sasakian(PiValue(Rational(1)), Rational(1), 1, SpinorProfile::sigma0()),
      std::invalid_argument);
  CHECK_THROWS_AS(
      upper_bound_sasakian(PiValue(Rational(1)), Rational(0), 1,
                           SpinorProfile::mixture(rat(1, 2), Rational(1))),
      std::invalid_argument);
  CHECK_THROWS_AS(
      upper_bound_sasakian(PiValue(Rational(1)), Rational(0), 1,
                           SpinorProfile::mixture(rat(3, 2), rat(-1, 2))),
      std::invalid_argument);
  CHECK_THROWS_AS(emomentum_sasakian(PiValue(), 0, SpinorProfile::sigma0()),
                  std::invalid_argument);
}
