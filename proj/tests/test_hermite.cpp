#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "wavepack/hermite.hpp"
#include "wavepack/oracle.hpp"

using namespace wavepack;
using cd = std::complex<double>;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_SUITE("hermite") {

TEST_CASE("basis values and orthonormality") {
  CHECK(hermite_basis(0, 0) == doctest::Approx(std::pow(kPi, -0.25)));
  CHECK(hermite_basis(1, 0) == doctest::Approx(0.0));
  CHECK(hermite_basis(2, 1.3) == doctest::Approx((4 * 1.69 - 2) * std::exp(-0.845) / std::sqrt(8 * std::sqrt(kPi))));
  // large n stays finite where H_n(x) alone would overflow
  double v = hermite_basis(3000, 10.0);
  CHECK(std::isfinite(v));
  CHECK(std::fabs(v) < 1.0);
}

TEST_CASE("complex hermite polynomial") {
  const cd z(0.4, -1.1);
  CHECK(testing::rel_err(hermite_H(3, z), 8.0 * z * z * z - 12.0 * z) < 1e-14);
  CHECK(testing::rel_err(hermite_H(0, z), cd(1, 0)) < 1e-15);
  auto big = hermite_H(5000, cd(3, 0.5));
  CHECK(std::isfinite(big.log_mag));
  CHECK(big.log_mag > 700);
}

TEST_CASE("fourier transform of hermite polynomials") {
  CHECK(testing::rel_err(hermite_H_fourier(0, cd(0.7, 0.1), cd(1.3, 0)), std::exp(-cd(0.7, 0.1) * 1.69 / 2.0)) < 1e-14);
  CHECK(testing::rel_err(hermite_H_fourier(3, cd(0.5, 0), cd(2, 0)), cd(0, -8 * std::exp(-1.0))) < 1e-14);
}

TEST_CASE("closed form against extended-precision references") {
  struct Ref {
    double alpha, x0, omega;
    long n;
    double value;
  };
  const Ref refs[] = {
      {2, 1, 10, 0, -3.7283609126870978827e-6},   {2, 1, 10, 5, -0.00013998685192262319832},
      {2, 1, 10, 50, -0.15814862575360313903},    {0.5, 1, 8, 20, 0.0056909003437842909574},
      {0.25, 2, 6, 30, 0.030434764025718411062},
  };
  for (const auto& r : refs) {
    CAPTURE(r.n);
    auto s = hermite_coefficients(WavePacket(r.alpha, r.x0, r.omega), r.n, r.n);
    CHECK(s.method == Method::ClosedForm);
    CHECK(testing::rel_err(s.at(r.n), cd(r.value, 0)) < 1e-13);
  }
}

TEST_CASE("closed form sweep matches the oracle") {
  const WavePacket wp(2, 1, 10);
  auto cf = hermite_coefficients(wp, 0, 50);
  auto orc = oracle_series(wp, BasisId::hermite(), 0, 50);
  for (long n = 0; n <= 50; ++n) {
    CAPTURE(n);
    CHECK(testing::rel_err(cf.at(n), orc.at(n).to_complex()) < 1e-9);
  }
}

TEST_CASE("regime split agrees with the single recurrence") {
  for (auto wp : {WavePacket(2, 1, 30), WavePacket(0.3, -1, 12), WavePacket(0.5, 0.5, 9)}) {
    auto a = hermite_coefficients(wp, 0, 300);
    auto b = hermite_coefficients_unified(wp, 0, 300);
    for (long n = 0; n <= 300; ++n) {
      double scale = std::max(a.at(n).abs(), 1e-300);
      CHECK(std::abs(a.at(n).to_complex() - b.at(n).to_complex()) <= 1e-10 * scale + 1e-300);
    }
  }
}

TEST_CASE("alpha one half") {
  const WavePacket wp(0.5, 0, 30);
  for (long n = 1; n < 40; n += 2) CHECK(hermite_alpha_half(wp, n).is_zero());
  auto a0 = hermite_alpha_half(wp, 0);
  // -97.58 is quoted to two decimals; the exact value is -97.5918
  CHECK(std::fabs(a0.log10_abs() + 97.58) < 0.015);
  CHECK(a0.log_mag == doctest::Approx(0.25 * std::log(kPi) - 225).epsilon(1e-14));
  CHECK_THROWS_AS(hermite_alpha_half(WavePacket(0.6, 0, 1), 0), DomainError);
}

TEST_CASE("continuity across alpha one half") {
  const WavePacket mid(0.5, 0.8, 7);
  for (double da : {-1e-6, 1e-6}) {
    auto s = hermite_coefficients(WavePacket(0.5 + da, 0.8, 7), 0, 40);
    for (long n = 0; n <= 40; ++n) {
      auto exact = hermite_alpha_half(mid, n);
      if (exact.abs() < 1e-14) continue;
      CHECK(testing::rel_err(s.at(n), exact.to_complex()) < 1e-4);
    }
  }
}

TEST_CASE("regime data") {
  CHECK(hermite_closed_form(WavePacket(2, 1, 10)).regime == HermiteRegime::AlphaAboveHalf);
  CHECK(hermite_closed_form(WavePacket(0.5, 1, 10)).regime == HermiteRegime::AlphaHalf);
  CHECK(hermite_closed_form(WavePacket(0.25, 1, 10)).regime == HermiteRegime::AlphaBelowHalf);
  CHECK_THROWS_AS(hermite_coefficients(WavePacket(2, 1, 10), -1, 3), DomainError);
}

TEST_CASE("counts above thresholds") {
  const WavePacket wp(2, 1, 100);
  auto d = hermite_count_detail(wp, 1e-20);
  CHECK(std::fabs(d.count - 3691.0) <= 0.02 * 3691);
  CHECK(d.argmax >= 4900);
  CHECK(d.argmax <= 5100);
  CHECK(d.first >= 0);
  CHECK(d.last >= d.first + d.count - 1);
  CHECK(std::fabs(hermite_count(wp, 1e-30) - 4584.0) <= 0.02 * 4584);
  CHECK(std::fabs(hermite_count(wp, 1e-40) - 5316.0) <= 0.02 * 5316);
  CHECK_THROWS_AS(hermite_count(wp, 0.0), DomainError);
  CHECK_THROWS_AS(hermite_count(wp, 1.5), DomainError);
}

TEST_CASE("critical line") {
  CHECK(hermite_critical_c(0.25) == doctest::Approx(2.0 / 3.0));
  CHECK(hermite_critical_c(0.25) * 900 == doctest::Approx(600));
  CHECK_THROWS_AS(hermite_critical_c(0.5), DomainError);
  HermiteEstimateOptions crit;
  crit.branch = HermiteBranch::Critical;
  auto e = hermite_estimate(WavePacket(0.25, 2, 30), 600, crit);
  CHECK(std::isfinite(e.envelope.log_mag));
  CHECK(e.valid);
  HermiteEstimateOptions nc;
  nc.branch = HermiteBranch::NonCritical;
  CHECK_THROWS_AS(hermite_estimate(WavePacket(0.25, 2, 30), 600, nc), RegimeError);
  CHECK_NOTHROW(hermite_estimate(WavePacket(0.25, 2, 30), 601, nc));
  CHECK_THROWS_AS(hermite_estimate(WavePacket(0.25, 0, 30), 600, crit), RegimeError);
}

TEST_CASE("estimate envelope tracks the coefficients above one half") {
  const WavePacket wp(2, 1, 100);
  auto exact = hermite_complex_coefficients(wp, 3400, 7000);
  for (long n = 3400; n <= 7000; n += 200) {
    auto e = hermite_estimate(wp, n);
    CHECK(e.valid);
    double ratio = exact.at(n).abs() / e.envelope.abs();
    CAPTURE(n);
    CHECK(ratio > 0.5);
    CHECK(ratio < 2.0);
  }
}

TEST_CASE("estimate preconditions") {
  CHECK_THROWS_AS(hermite_estimate(WavePacket(2, 1, 100), 0), DomainError);
  CHECK_THROWS_AS(hermite_estimate(WavePacket(2, 1, 0), 10), DomainError);
  CHECK_FALSE(hermite_estimate(WavePacket(2, 1, 100), 5).valid);
  CHECK_FALSE(hermite_estimate(WavePacket(2, 1, 5), 50).valid);
}

TEST_CASE("saddle of the hermite phase") {
  auto s = hermite_saddle(400, cd(1.7, 0.2));
  CHECK(s.residual < 1e-12);
  CHECK(std::abs(s.w_star) <= std::abs(s.w_plus) + 1e-15);
  CHECK(std::abs(s.w_star) <= std::abs(s.w_minus) + 1e-15);
  // one saddle captures H_n well away from the turning points
  auto approx = hermite_saddle_Hn(s, 400);
  auto exact = hermite_H(400, s.nu * s.zeta);
  CHECK(std::fabs(approx.log_mag - exact.log_mag) < 0.01 * std::fabs(exact.log_mag));
}

}
