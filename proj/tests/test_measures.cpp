#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wpd/error.hpp"
#include "wpd/measures.hpp"
#include "wpd/random.hpp"

using namespace wpd;

namespace {

ComplexMatrix ket_density(std::size_t n, std::size_t k) {
  ComplexMatrix rho(n);
  rho(k, k) = 1.0;
  return rho;
}

ComplexMatrix plus_density() { return ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}; }

WwmBlocks identity_blocks(std::size_t n) {
  const auto id = ComplexMatrix::identity(n);
  return {n, id, id, id, id};
}

InterferometerInstance pure_instance(Rng& rng, std::size_t n, bool general) {
  InterferometerInstance inst;
  inst.prep.s = rng.uniform() < 0.5 ? 1.0 : -1.0;
  inst.phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  inst.blocks = general ? from_global_unitary(haar_random_unitary(2 * n, rng))
                        : from_unitary_pair(haar_random_unitary(n, rng), haar_random_unitary(n, rng));
  inst.rho_d0 = random_density(n, 1, rng);
  return inst;
}

}  // namespace

TEST_CASE("distinguishability") {
  Rng rng(1);
  const ComplexMatrix rho = random_density(3, 2, rng);
  CHECK(std::abs(distinguishability(0.8, rho, 0.2, rho) - 0.6) <= 1e-12);
  CHECK(std::abs(distinguishability(0.5, ket_density(2, 0), 0.5, ket_density(2, 1)) - 1.0) <= 1e-15);
  CHECK(std::abs(distinguishability(1.0, ket_density(2, 0), 0.0, plus_density()) - 1.0) <= 1e-15);
  CHECK_THROWS_AS(distinguishability(0.5, pauli::z(), 0.5, ket_density(2, 0)), DualityError);
  CHECK_THROWS_AS(distinguishability(0.7, rho, 0.7, rho), DualityError);
}

TEST_CASE("quality") {
  CHECK(quality(plus_density(), plus_density()) == 0.0);
  CHECK(std::abs(quality(ket_density(2, 0), ket_density(2, 1)) - 1.0) <= 1e-15);
  const double q = quality(ket_density(2, 0), plus_density());
  CHECK(std::abs(q - oracle::bloch_trace_distance(ket_density(2, 0), plus_density())) <= 1e-15);
  CHECK(std::abs(q - 1.0 / std::numbers::sqrt2) <= 1e-15);

  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_density(2, 2, rng);
    const auto b = random_density(2, 1 + rng.integer(0, 1), rng);
    CHECK(std::abs(quality(a, b) - oracle::bloch_trace_distance(a, b)) <= 1e-12);
  }
  CHECK_THROWS_AS(quality(ket_density(2, 0), ket_density(3, 0)), DualityError);
}

TEST_CASE("xi") {
  CHECK(xi(0.0, 0.37) == doctest::Approx(0.37).epsilon(1e-15));
  CHECK(xi(1.0, 0.3) == 1.0);
  // sqrt(0.7399), cross-checked through 1 - (1 - p^2)(1 - q^2)
  CHECK(std::abs(xi(0.7, 0.7) - 0.8601744009211155) <= 1e-15);
  CHECK(std::abs(xi(0.7, 0.7) - std::sqrt(1.0 - (1.0 - 0.49) * (1.0 - 0.49))) <= 1e-15);
  CHECK_THROWS_AS(xi(-0.1, 0.5), DualityError);
  CHECK_THROWS_AS(xi(0.5, 1.1), DualityError);

  for (int i = 0; i <= 100; ++i)
    for (int j = 0; j <= 100; ++j) {
      const double p = i / 100.0;
      const double q = j / 100.0;
      const double x = xi(p, q);
      REQUIRE(x == xi(q, p));
      REQUIRE(x >= std::max({p, q, p * q}) - 1e-12);
      REQUIRE(x <= 1.0);
    }
}

TEST_CASE("r_measure and d_two_level") {
  Rng rng(3);
  const auto pure = random_density(2, 1, rng);
  CHECK(r_measure(0.5, pure, 0.5, pure, 0.0) <= 1e-12);
  // Delta = diag(1/2, -1/2): tr(Delta^2) = 1/2, R = 1
  CHECK(std::abs(r_measure(0.5, ket_density(2, 0), 0.5, ket_density(2, 1), 0.0) - 1.0) <= 1e-15);
  CHECK_THROWS_AS(r_measure(0.5, ket_density(3, 0), 0.5, ket_density(3, 1), 0.0), DualityError);

  CHECK(d_two_level(0.9, 0.3) == 0.9);
  CHECK(d_two_level(0.0, 0.5) == 0.5);

  for (int t = 0; t < 200; ++t) {
    const auto a = random_density(2, 1 + rng.integer(0, 1), rng);
    const auto b = random_density(2, 1 + rng.integer(0, 1), rng);
    const double w = rng.uniform();
    const double p = std::abs(2.0 * w - 1.0);
    const double d = distinguishability(w, a, 1.0 - w, b);
    CHECK(std::abs(d_two_level(p, r_measure(w, a, 1.0 - w, b, p)) - d) <= 1e-10);
  }
}

TEST_CASE("chi_closed_form") {
  CHECK(chi_closed_form(1.0, 0.0, 0.4, 0.6) == 1.0);
  CHECK(chi_closed_form(0.3, 0.7, 0.0, 0.6) == 1.0);
  const double p = 1.0 / std::numbers::sqrt2;
  const double x = std::sqrt(0.75);
  CHECK(std::abs(chi_closed_form(0.5, 0.5, p, x) - 1.0 / 3.0) <= 1e-15);
  CHECK_THROWS_AS(chi_closed_form(0.5, 0.5, 0.2, 0.0), DualityError);
  CHECK(chi_closed_form(0.5, 0.5, 0.0, 0.0) == 1.0);
  CHECK_THROWS_AS(chi_closed_form(0.6, 0.6, 0.2, 0.5), DualityError);
}

TEST_CASE("hierarchy_report: full coherence") {
  Rng rng(4);
  const InterferometerInstance inst{{1.0}, identity_blocks(2), random_density(2, 2, rng), 0.3};
  const DualityReport rep = hierarchy_report(inst);
  CHECK(std::abs(rep.v - 1.0) <= 1e-15);
  for (double x : {rep.p, rep.q, rep.d, rep.xi}) CHECK(std::abs(x) <= 1e-10);
  for (const auto& [name, value] : rep.slacks) CHECK(std::abs(value) <= 1e-10);
  CHECK(rep.stringency_class);
  REQUIRE(rep.r);
  CHECK(*rep.r <= 1e-10);
}

TEST_CASE("hierarchy_report: orthogonal conditionals") {
  const InterferometerInstance inst{
      {0.0}, from_unitary_pair(ComplexMatrix::identity(2), pauli::x()), ket_density(2, 0), 0.0};
  const DualityReport rep = hierarchy_report(inst);
  CHECK(std::abs(rep.q - 1.0) <= 1e-12);
  CHECK(std::abs(rep.d - 1.0) <= 1e-12);
  CHECK(std::abs(rep.xi - 1.0) <= 1e-12);
  CHECK(rep.v <= 1e-12);
  CHECK(std::abs(rep.v_bound_d) <= 1e-6);
  CHECK_FALSE(rep.stringency_class);  // s = 0
  CHECK(rep.slacks.count(slack::stringency) == 0);
}

TEST_CASE("hierarchy_report: pure preparations saturate") {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng.integer(0, 2);
    const auto inst = pure_instance(rng, n, t % 2 == 0);
    const DualityReport rep = hierarchy_report(inst);
    CHECK(std::abs(rep.v * rep.v + rep.xi * rep.xi - 1.0) <= 1e-10);
    CHECK(std::abs(rep.v * rep.v + rep.d * rep.d - 1.0) <= 1e-10);
    CHECK(std::abs(rep.d - rep.xi) <= 1e-10);
  }
}

TEST_CASE("hierarchy_report: inequalities on random instances") {
  Rng rng(6);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 2 + rng.integer(0, 2);
    InterferometerInstance inst;
    inst.prep.s = rng.uniform(-1.0, 1.0);
    inst.phi = rng.uniform(0.0, 6.0);
    inst.blocks = from_global_unitary(haar_random_unitary(2 * n, rng));
    inst.rho_d0 = random_density(n, 1 + rng.integer(0, n - 1), rng);
    const DualityReport rep = hierarchy_report(inst);
    for (const auto& [name, value] : rep.slacks) CHECK(value >= -kSlackTol);
    CHECK(rep.d >= rep.p - 1e-10);
    CHECK(rep.xi >= std::max(rep.p, rep.q) - 1e-10);
    CHECK(rep.xi >= rep.p * rep.q - 1e-10);
    for (double x : {rep.v, rep.p, rep.q, rep.d, rep.xi}) {
      CHECK(x >= 0.0);
      CHECK(x <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("balanced interferometers collapse D and Xi onto Q") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.integer(0, 2);
    InterferometerInstance inst;
    inst.prep.s = rng.uniform(-1.0, 1.0);
    inst.blocks = from_unitary_pair(haar_random_unitary(n, rng), haar_random_unitary(n, rng));
    inst.rho_d0 = random_density(n, 1 + rng.integer(0, n - 1), rng);
    const DualityReport rep = hierarchy_report(inst);
    REQUIRE(rep.p <= 1e-12);
    CHECK(std::abs(rep.d - rep.q) <= 1e-9);
    CHECK(std::abs(rep.xi - rep.q) <= 1e-9);
  }
}

TEST_CASE("stringency class: chain of visibility bounds and closed-form chi") {
  for (std::uint64_t k = 0; k < 300; ++k) {
    const auto inst = oracle::stringency_instance(11, k);
    const DualityReport rep = hierarchy_report(inst);
    REQUIRE(rep.stringency_class);
    CHECK(rep.v <= rep.v_bound_xi + 1e-9);
    CHECK(rep.v_bound_xi <= rep.v_bound_d + 2e-9);
    CHECK(rep.slacks.at(slack::stringency) >= -kSlackTol);
    REQUIRE(rep.chi);
    REQUIRE(rep.chi_closed_form);
    CHECK(std::abs(*rep.chi - *rep.chi_closed_form) <= 1e-9);
  }
}

TEST_CASE("stringency class membership") {
  Rng rng(8);
  // unitary pairs at |s| = 1 have way operators I/2
  InterferometerInstance inst{{-1.0},
                              from_unitary_pair(haar_random_unitary(2, rng), haar_random_unitary(2, rng)),
                              random_density(2, 2, rng), 0.0};
  CHECK(in_stringency_class(inst));
  inst.prep.s = 0.5;
  CHECK_FALSE(in_stringency_class(inst));
  inst.prep.s = 1.0;
  inst.blocks = from_global_unitary(haar_random_unitary(4, rng));
  CHECK_FALSE(in_stringency_class(inst));
  inst.blocks = from_unitary_pair(haar_random_unitary(3, rng), haar_random_unitary(3, rng));
  inst.rho_d0 = random_density(3, 2, rng);
  CHECK_FALSE(in_stringency_class(inst));
}

TEST_CASE("pure_state_identity_check") {
  SUBCASE("orthogonal images") {
    const InterferometerInstance inst{
        {1.0}, from_unitary_pair(ComplexMatrix::identity(2), pauli::x()), ket_density(2, 0), 0.0};
    const auto chk = pure_state_identity_check(inst);
    CHECK(std::abs(chk.quality - 1.0) <= 1e-12);
    CHECK(std::abs(chk.coherence) <= 1e-15);
    CHECK(chk.residual <= 1e-12);
  }
  SUBCASE("full coherence") {
    const InterferometerInstance inst{{1.0}, identity_blocks(2), ket_density(2, 1), 0.0};
    const auto chk = pure_state_identity_check(inst);
    CHECK(chk.quality <= 1e-12);
    CHECK(std::abs(std::abs(chk.coherence) - 1.0) <= 1e-15);
    CHECK(chk.predictability <= 1e-15);
    CHECK(chk.residual <= 1e-12);
  }
  SUBCASE("random sweep, both branches") {
    Rng rng(9);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = 2 + rng.integer(0, 2);
      const auto inst = pure_instance(rng, n, t % 2 == 0);
      const auto chk = pure_state_identity_check(inst);
      worst = std::max(worst, chk.residual);
      CHECK(chk.gamma_asymmetry <= 1e-10);
      CHECK(chk.gamma_quality_residual <= 1e-10);
      CHECK(chk.cross_term_residual <= 1e-10);
    }
    CHECK(worst <= 1e-9);
  }
  SUBCASE("errors") {
    Rng rng(10);
    InterferometerInstance inst{{1.0}, identity_blocks(2), random_density(2, 2, rng), 0.0};
    CHECK_THROWS_AS(pure_state_identity_check(inst), DualityError);
    inst.rho_d0 = ket_density(2, 0);
    inst.prep.s = 0.5;
    CHECK_THROWS_AS(pure_state_identity_check(inst), DualityError);
  }
}

TEST_CASE("mixed_state_bound_check") {
  SUBCASE("pure marker reduces to the identity") {
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
      const auto inst = pure_instance(rng, 3, true);
      CHECK(std::abs(mixed_state_bound_check(inst).slack) <= 1e-9);
    }
  }
  SUBCASE("maximally mixed marker with orthogonal images") {
    // Both spectral components map to orthogonal pairs (Q_k = 1, C_k = 0), but
    // the mixtures coincide: rho+ = rho- = I/2, so Q = 0 and the slack is 1.
    const InterferometerInstance inst{{1.0},
                                      from_unitary_pair(ComplexMatrix::identity(2), pauli::x()),
                                      ComplexMatrix::identity(2) * 0.5, 0.0};
    const auto chk = mixed_state_bound_check(inst);
    CHECK(std::abs(chk.slack - 1.0) <= 1e-12);
    CHECK(std::abs(chk.triangle_slack - 1.0) <= 1e-12);
    for (const auto& c : chk.coherences) CHECK(std::abs(c) <= 1e-15);
    for (double th : chk.thetas) CHECK(th <= 1e-15);
    CHECK(chk.recomposition_residual <= 1e-15);
  }
  SUBCASE("random mixed sweep") {
    Rng rng(13);
    double min_slack = 1.0;
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = 2 + rng.integer(0, 2);
      InterferometerInstance inst = pure_instance(rng, n, t % 2 == 0);
      inst.rho_d0 = random_density(n, 1 + rng.integer(0, n - 1), rng);
      const auto chk = mixed_state_bound_check(inst);
      min_slack = std::min(min_slack, chk.slack);
      CHECK(chk.recomposition_residual <= 1e-10);
      CHECK(chk.triangle_slack >= -1e-9);
      for (double th : chk.thetas) {
        CHECK(th >= 0.0);
        CHECK(th <= 1.0 + 1e-10);
      }
    }
    CHECK(min_slack >= -1e-9);
  }
}
