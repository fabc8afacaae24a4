#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "wavepack/oracle.hpp"
#include "wavepack/stretched_fourier.hpp"

using namespace wavepack;
using cd = std::complex<double>;

TEST_SUITE("stretched_fourier") {

TEST_CASE("basis values") {
  CHECK(std::abs(sf_basis(0, 2, 0) - cd(0.5, 0)) < 1e-15);
  CHECK(sf_basis(3, 1, 1.5) == cd(0, 0));
  CHECK(std::abs(sf_basis(1, 1, 0.5) - cd(0, std::sqrt(0.5))) < 1e-15);
}

TEST_CASE("optimal lambda") {
  CHECK(lambda_optimal(1, 0, 1e-20) == doctest::Approx(6.7861).epsilon(5e-4 / 6.7861));
  CHECK(lambda_optimal(1, 0, 1e-40) == doctest::Approx(9.5971).epsilon(5e-4 / 9.5971));
  CHECK(lambda_optimal(4, 2, 1) == doctest::Approx(2.0));
  CHECK_THROWS_AS(lambda_optimal(1, 0, 0), DomainError);
  CHECK_THROWS_AS(lambda_optimal(0, 0, 0.5), DomainError);
}

TEST_CASE("fft coefficients against extended-precision references") {
  SFParams p;
  p.lambda = 6.7861;
  p.n_modes = 256;
  auto s = sf_coefficients(WavePacket(1, 0, 5), p, -10, 10);
  CHECK(s.method == Method::FFT);
  CHECK(testing::rel_err(s.at(0), cd(0.00092877239553406167871, 0)) < 1e-12);
  CHECK(testing::rel_err(s.at(7), cd(0.11095268942943639414, 0)) < 1e-12);
  auto t = sf_coefficients(WavePacket(1, 0.5, 5), p, -10, 10);
  CHECK(testing::rel_err(t.at(-4), cd(-0.00006873634153736351409, -0.020189479704305259588)) < 1e-12);
}

TEST_CASE("gaussian mode zero") {
  SFParams p;
  p.lambda = 6;
  auto s = sf_coefficients(WavePacket(1, 0, 0), p, 0, 0);
  CHECK(s.at(0).abs() == doctest::Approx(0.51166).epsilon(1e-5));
}

TEST_CASE("centred packet gives an even sequence") {
  SFParams p;
  p.lambda = 5;
  auto s = sf_coefficients(WavePacket(1.5, 0, 12), p, -40, 40);
  for (long n = 1; n <= 40; ++n) CHECK(std::abs(s.at(n).to_complex() - s.at(-n).to_complex()) < 1e-15);
}

TEST_CASE("real packet gives conjugate-symmetric coefficients") {
  SFParams p;
  p.lambda = 6;
  auto s = sf_coefficients(WavePacket(1, 0.7, 12), p, -40, 40);
  for (long n = 1; n <= 40; ++n)
    CHECK(std::abs(s.at(n).to_complex() - std::conj(s.at(-n).to_complex())) < 1e-15);
}

TEST_CASE("extended precision agrees with double") {
  SFParams p;
  p.lambda = lambda_optimal(1, 0, 1e-20);
  p.n_modes = 512;
  const WavePacket wp(1, 0, 50);
  auto d = sf_coefficients(wp, p, -200, 200);
  auto q = sf_coefficients(wp, p, -200, 200, Precision::Extended);
  for (long n = -200; n <= 200; ++n) CHECK(std::abs(d.at(n).to_complex() - q.at(n).to_complex()) < 1e-15);
  // the centre mode sits at the epsilon level of the brim
  CHECK(q.at(0).abs() < 1e-20);
}

TEST_CASE("default range is symmetric") {
  SFParams p;
  p.n_modes = 64;
  p.lambda = 4;
  auto s = sf_coefficients(WavePacket(1, 0, 3), p);
  CHECK(s.n_min == -32);
  CHECK(s.n_max() == 31);
}

TEST_CASE("parameter checks") {
  SFParams p;
  p.n_modes = 100;
  CHECK_THROWS_AS(sf_coefficients(WavePacket(1, 0, 1), p, 0, 1), DomainError);
  p.n_modes = 64;
  CHECK_THROWS_AS(sf_coefficients(WavePacket(1, 0, 1), p, -33, 0), DomainError);
  p.lambda = 10;
  CHECK_THROWS_AS(sf_coefficients(WavePacket(1, 0, 200), p, 0, 10), UnderResolved);
}

TEST_CASE("bound dominates the coefficients") {
  const WavePacket wp(1, 0.5, 20);
  SFParams p;
  p.lambda = lambda_optimal(1, 0.5, 1e-14);
  p.n_modes = 512;
  auto s = sf_coefficients(wp, p, -256, 255);
  for (long n = -256; n <= 255; ++n) CHECK(s.at(n).abs() <= sf_bound(wp, p.lambda, n) + 1e-13);
}

TEST_CASE("bound values") {
  const double lam = 6.7861;
  CHECK(sf_bound(WavePacket(1, 0, 50), lam, 0) == doctest::Approx(4.81e-21).epsilon(1e-2));
  // at the exact peak pi n = lambda omega the first exponential is 1
  const double w = 3.14159265358979323846 * 20 / lam;
  CHECK(sf_bound(WavePacket(1, 0, w), lam, 20) ==
        doctest::Approx(std::sqrt(3.14159265358979323846 / (2 * lam)) * (1 + std::exp(-lam * lam))));
  CHECK_THROWS_AS(sf_bound(WavePacket(1, 3, 5), 2.0, 0), DomainError);
}

TEST_CASE("count prediction") {
  auto p = sf_count_predict(1, 0, 50, 1e-20);
  CHECK(p.max_n > 50 / 3.14159265358979323846 * 6.7861);
  SFParams sp;
  sp.lambda = 6.7861;
  sp.n_modes = 1024;
  auto s = sf_coefficients(WavePacket(1, 0, 50), sp, 0, 511, Precision::Extended);
  long last = 0;
  for (long n = 0; n <= 511; ++n)
    if (s.at(n).abs() > 1e-20) last = n;
  CHECK(std::fabs(p.max_n - last) <= 0.2 * last);
  auto tiny = sf_count_predict(2, 0, 0, 1 - 1e-12);
  CHECK(tiny.count_width < 1e-3);
  CHECK(tiny.max_n < 1e-3);
}

TEST_CASE("black-box functions") {
  SFParams p;
  p.lambda = 6;
  p.n_modes = 128;
  RealFunction f = as_real_function(WavePacket(1, 0.3, 4));
  auto a = sf_coefficients(f, p, -20, 20);
  auto b = sf_coefficients(WavePacket(1, 0.3, 4), p, -20, 20);
  for (long n = -20; n <= 20; ++n) CHECK(std::abs(a.at(n).to_complex() - b.at(n).to_complex()) < 1e-15);
}

}
