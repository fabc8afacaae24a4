#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "wavepack/core.hpp"
#include "wavepack/oracle.hpp"

using namespace wavepack;

TEST_SUITE("core") {

TEST_CASE("wave packet evaluation") {
  CHECK(eval_wavepacket(WavePacket(1, 0, 0), 0.0) == doctest::Approx(1.0));
  const double w = 3.14159265358979323846 / 4;  // cos(w * 2) = 0
  CHECK(std::fabs(eval_wavepacket(WavePacket(1, 2, w), 2.0)) < 1e-15);
  CHECK(eval_wavepacket(WavePacket(1, 0, 50), 1.0) == doctest::Approx(std::exp(-1.0) * std::cos(50.0)).epsilon(1e-14));
  CHECK(eval_wavepacket(WavePacket(1, 0, 50), 1.0) == doctest::Approx(0.3547).epsilon(1e-3));
}

TEST_CASE("alpha must be positive") {
  CHECK_THROWS_AS(WavePacket(0, 0, 1), DomainError);
  CHECK_THROWS_AS(WavePacket(-1, 0, 1), DomainError);
  CHECK_THROWS_AS(WavePacket(std::nan(""), 0, 1), DomainError);
}

TEST_CASE("norm squared closed form") {
  CHECK(norm_squared(WavePacket(1, 0, 0)) == doctest::Approx(std::sqrt(3.14159265358979323846 / 2)).epsilon(1e-15));
  CHECK(norm_squared(WavePacket(1, 0, 50)) == doctest::Approx(0.62666).epsilon(1e-5));
  CHECK(norm_squared(WavePacket(2, 1, 100)) == doctest::Approx(0.44311).epsilon(1e-5));
  for (auto wp : {WavePacket(1, 0, 50), WavePacket(2, 1, 100), WavePacket(0.3, -0.7, 2.5)})
    CHECK(norm_squared(wp) == doctest::Approx(oracle_norm_squared(wp)).epsilon(1e-13));
}

TEST_CASE("log-magnitude arithmetic") {
  const std::complex<double> a(1.5, -2.0), b(-0.25, 0.75);
  auto A = LogMagPhase::from_complex(a), B = LogMagPhase::from_complex(b);
  CHECK(testing::rel_err(A * B, a * b) < 1e-15);
  CHECK(testing::rel_err(A / B, a / b) < 1e-15);
  CHECK(testing::rel_err(A + B, a + b) < 1e-15);
  CHECK(testing::rel_err(A - B, a - b) < 1e-15);
  CHECK(testing::rel_err(A.conj(), std::conj(a)) < 1e-15);
  CHECK(testing::rel_err(A.real_part(), std::complex<double>(a.real(), 0)) < 1e-15);
  CHECK(testing::rel_err(-A, -a) < 1e-15);
}

TEST_CASE("magnitudes far below the double range") {
  auto tiny = LogMagPhase(-5000.0, 0.3);
  CHECK(tiny.to_complex() == std::complex<double>(0, 0));
  CHECK_FALSE(tiny.is_zero());
  CHECK(tiny.log10_abs() == doctest::Approx(-5000.0 / std::log(10.0)));
  auto sum = tiny + LogMagPhase(-5000.0, 0.3);
  CHECK(sum.log_mag == doctest::Approx(-5000.0 + std::log(2.0)));
  auto w = LogMagPhase::from_log({-2000.0, 7.0});
  CHECK(w.log_mag == -2000.0);
  CHECK(w.phase == doctest::Approx(wrap_phase(7.0)));
}

TEST_CASE("zero and cancellation") {
  CHECK(LogMagPhase::zero().is_zero());
  CHECK(LogMagPhase::from_real(0.0).is_zero());
  auto x = LogMagPhase::from_real(2.5);
  CHECK((x - x).is_zero());
  CHECK((x * LogMagPhase::zero()).is_zero());
  CHECK(LogMagPhase::from_real(-3.0).to_complex().real() == doctest::Approx(-3.0));
}

TEST_CASE("phase wrapping") {
  const double pi = 3.14159265358979323846;
  CHECK(wrap_phase(0.0) == 0.0);
  CHECK(wrap_phase(pi) == doctest::Approx(pi));
  CHECK(wrap_phase(-pi) == doctest::Approx(pi));
  CHECK(wrap_phase(3 * pi / 2) == doctest::Approx(-pi / 2));
  CHECK(wrap_phase(1e6) == doctest::Approx(std::remainder(1e6, 2 * pi)).epsilon(1e-9));
}

TEST_CASE("series indexing") {
  CoeffSeries s;
  s.n_min = -2;
  s.values.assign(5, LogMagPhase::from_real(1.0));
  CHECK(s.n_max() == 2);
  CHECK(s.contains(-2));
  CHECK_FALSE(s.contains(3));
  CHECK_THROWS_AS(s.at(3), DomainError);
}

}
