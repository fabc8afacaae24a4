#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "wavepack/mt.hpp"
#include "wavepack/oracle.hpp"

using namespace wavepack;
using cd = std::complex<double>;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_SUITE("mt") {

TEST_CASE("basis forms agree") {
  CHECK(std::abs(mt_basis(0, 0) - cd(std::sqrt(2 / kPi), 0)) < 1e-15);
  for (long n : {-7L, -1L, 0L, 3L, 40L})
    for (double x : {-3.0, -0.2, 0.0, 0.9, 25.0}) {
      double th = 2 * std::atan(2 * x);
      CHECK(std::abs(mt_basis(n, x) - mt_basis_theta(n, th)) < 1e-14);
    }
}

TEST_CASE("fft coefficients against extended-precision references") {
  struct Ref {
    double alpha, x0, omega;
    long n;
    cd value;
  };
  const Ref refs[] = {
      {1, 0, 10, 0, {0.010843291909628478745, 0}},
      {1, 0, 10, 5, {0, 0.21469717981190835411}},
      {1, 0, 10, -3, {0, -0.26566065178951675193}},
      {2, 1, 20, 10, {-0.059624661390935850603, -0.036654752056315529933}},
      {0.5, -1, 15, 4, {0.19995202877034723174, -0.014716824377741679299}},
  };
  for (const auto& r : refs) {
    const WavePacket wp(r.alpha, r.x0, r.omega);
    auto s = mt_transform(wp, -8, 12, mt_fft_size(wp));
    CAPTURE(r.n);
    CHECK(testing::rel_err(s.at(r.n), r.value) < 1e-13);
    auto q = mt_transform(wp, -8, 12, mt_fft_size(wp), Precision::Extended);
    CHECK(testing::rel_err(q.at(r.n), r.value) < 1e-15);
  }
}

TEST_CASE("transform sizes and ranges") {
  CHECK(mt_fft_size(WavePacket(1, 0, 0)) >= 1024);
  long M = mt_fft_size(WavePacket(1, 0, 100));
  CHECK((M & (M - 1)) == 0);
  CHECK_THROWS_AS(mt_transform(WavePacket(1, 0, 100), 0, 10, 100), DomainError);
  CHECK_THROWS_AS(mt_transform(WavePacket(1, 0, 100), 0, 600, 1024), DomainError);
  CHECK_THROWS_AS(mt_transform(WavePacket(1, 0, 100), 0, 200, 512), UnderResolved);
}

TEST_CASE("slow decay is rejected on a coarse grid") {
  RealFunction f{[](double x) { return 1 / (1 + x * x * x * x); }, Decay::algebraic(4)};
  CHECK_THROWS_AS(mt_transform(f, -10, 10, 1024), UnderResolved);
  CHECK_NOTHROW(mt_transform(f, -10, 10, 1L << 20));
}

namespace {

double fitted_ratio(const CoeffSeries& s, long lo, long hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, k = 0;
  for (long n = lo; n <= hi; ++n) {
    double y = std::log(s.at(n).abs());
    sx += n;
    sy += y;
    sxx += double(n) * n;
    sxy += n * y;
    ++k;
  }
  return std::exp((k * sxy - sx * sy) / (k * sxx - sx * sx));
}

}  // namespace

TEST_CASE("geometric decay for rational functions") {
  // The poles e^{i pi/4} and e^{3 i pi/4} map to |(1+2ix)/(1-2ix)| = (5 - 2 sqrt 2)/sqrt 17.
  RealFunction f{[](double x) { return 1 / (1 + x * x * x * x); }, Decay::algebraic(4)};
  auto s = mt_transform(f, 0, 60, 1L << 20);
  CHECK(fitted_ratio(s, 10, 40) == doctest::Approx((5 - 2 * std::sqrt(2.0)) / std::sqrt(17.0)).epsilon(0.02));
  // With x scaled by 2 the poles move to |z| = 1/2 and the ratio becomes 1/(1 + sqrt 2).
  RealFunction g{[](double x) { return 1 / (1 + 16 * x * x * x * x); }, Decay::algebraic(4)};
  auto t = mt_transform(g, 0, 60, 1L << 20);
  CHECK(fitted_ratio(t, 10, 40) == doctest::Approx(1 / (1 + std::sqrt(2.0))).epsilon(0.02));
}

TEST_CASE("symmetry between the two halves") {
  const WavePacket wp(1.2, 0.6, 8);
  const WavePacket flipped(1.2, -0.6, 8);
  for (long n : {0L, 1L, 4L, 7L}) {
    auto sym = mt_symmetry_reduce(-(n + 1), -1);
    CHECK(sym.base_n == n);
    CHECK(sym.omega_sign == 1);
    CHECK(sym.flips_x0);
    auto lhs = oracle_b(wp, BasisId::mt(), -(n + 1), -1).to_complex();
    auto rhs = sym.phase * oracle_b(flipped, BasisId::mt(), n, 1).to_complex();
    CAPTURE(n);
    CHECK(testing::rel_err(lhs, rhs) < 1e-13);
  }
  CHECK(mt_symmetry_reduce(-1, -1).phase == cd(0, 1));
}

TEST_CASE("laguerre bound") {
  CHECK(mt_laguerre_bound(1, 0) == doctest::Approx(0.39583).epsilon(1e-4));
  CHECK(mt_laguerre_bound(1, 10) == doctest::Approx(5.50e-12).epsilon(2e-3));
  for (double w : {0.0, 5.0, 10.0})
    for (long n = -5; n <= -1; ++n)
      CHECK(oracle_b(WavePacket(1, 0.5, w), BasisId::mt(), n, 1).abs() <= mt_laguerre_bound(1, w));
}

TEST_CASE("cardano roots solve the saddle cubic") {
  for (long n : {30L, 100L, 500L, 2000L}) {
    const WavePacket wp(1.5, 0.7, 100);
    auto sd = mt_saddles(wp, n);
    for (int k = 0; k < 3; ++k) {
      CHECK(sd.residual[k] < 1e-9);
      CHECK(std::abs(mt_cubic(wp, n, sd.z[k])) < 1e-9 * (1 + std::pow(std::abs(sd.z[k]), 3)));
      MTPhase ph{wp, n};
      CHECK(std::abs(ph.g1(sd.z[k])) < 1e-8 * (1 + std::abs(ph.g2(sd.z[k]))));
    }
    CHECK(sd.z[0].imag() >= sd.z[1].imag());
    CHECK(sd.z[0].imag() >= sd.z[2].imag());
    CHECK(sd.z[1].real() >= sd.z[2].real());
  }
}

TEST_CASE("spurious root at the branch point") {
  auto sd = mt_saddles(WavePacket(1, 0, 10), 0);
  bool flagged = false;
  for (int k = 0; k < 3; ++k)
    if (sd.at_branch_point[k]) {
      flagged = true;
      CHECK(std::abs(sd.z[k] - cd(0, -0.5)) < 1e-9);
      CHECK(std::isnan(sd.g_at[k].real()));
    }
  CHECK(flagged);
}

TEST_CASE("near-degenerate pair is flagged") {
  const WavePacket wp(1, 0, 100);
  auto sd = mt_saddles(wp, 24);
  CHECK(sd.near_degenerate);
  auto ex = mt_saddle_expansion(wp, 24);
  CHECK(std::fabs(ex[1].real()) < 0.2);
  CHECK_THROWS_AS(mt_estimate(wp, 24), OutOfRegime);
}

TEST_CASE("root expansions converge at second order") {
  const double x0 = 0.5, alpha = 1.0, c = 2.0;
  double e1 = 0, e2 = 0;
  for (double w : {200.0, 800.0}) {
    const WavePacket wp(alpha, x0, w);
    long n = static_cast<long>(std::lround(c * w - 0.5));
    auto sd = mt_saddles(wp, n);
    auto ex = mt_saddle_expansion(wp, n);
    double err = 0;
    for (int k = 0; k < 3; ++k) err = std::max(err, std::abs(sd.z[k] - ex[k]));
    (w == 200.0 ? e1 : e2) = err;
  }
  double slope = std::log(e1 / e2) / std::log(4.0);
  CHECK(slope == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("sweep keeps roots on continuous branches") {
  auto sw = mt_saddle_sweep(WavePacket(1, 0.3, 60), 20, 200);
  CHECK(sw.size() == 181);
  for (size_t i = 1; i < sw.size(); ++i)
    for (int k = 0; k < 3; ++k) CHECK(std::abs(sw[i].z[k] - sw[i - 1].z[k]) < 0.2);
}

TEST_CASE("steepest descent contour keeps its level") {
  const WavePacket wp(1, 0, 30);
  const long n = 30;
  auto sd = mt_saddles(wp, n);
  auto tr = trace_contour(wp, n, sd.z[1]);
  CHECK(tr.points.size() > 100);
  CHECK(tr.reached_far_field);
  auto lv = mt_im_g_along(wp, n, tr.points, tr.saddle_index);
  for (double v : lv) CHECK(std::fabs(v - tr.im_g_level) < 1e-8);
  // Re g decreases away from the saddle
  MTPhase ph{wp, n};
  double top = ph.g(sd.z[1]).real();
  CHECK(ph.g(tr.points.front()).real() < top);
  CHECK(ph.g(tr.points.back()).real() < top);
}

TEST_CASE("estimate matches the transform near its peak") {
  const WavePacket wp(1, 0, 100);
  auto s = mt_transform(wp, 0, 1000, mt_fft_size(wp));
  for (long n : {60L, 200L, 500L}) {
    auto e = mt_estimate_detail(wp, n);
    CHECK(e.c == doctest::Approx((n + 0.5) / 100));
    CHECK(e.bound.log_mag == doctest::Approx(e.term2.log_mag).epsilon(0.05));
    double best = 0;
    for (long m = n - 3; m <= n + 3; ++m) best = std::max(best, s.at(m).abs());
    double ratio = best / e.est.envelope.abs();
    CAPTURE(n);
    CHECK(ratio > 0.5);
    CHECK(ratio < 2.0);
  }
  CHECK_THROWS_AS(mt_estimate(WavePacket(1, 0, 0), 10), OutOfRegime);
  CHECK_THROWS_AS(mt_estimate(wp, 10), OutOfRegime);
  CHECK_THROWS_AS(mt_estimate(wp, 6000), OutOfRegime);
}

TEST_CASE("negative indices reflect through the symmetry") {
  const WavePacket wp(1, 0.4, 80);
  auto s = mt_transform(wp, -400, 400, mt_fft_size(wp));
  for (long n : {-100L, -150L}) {
    auto e = mt_estimate(wp, n);
    double best = 0;
    for (long m = n - 3; m <= n + 3; ++m) best = std::max(best, s.at(m).abs());
    CHECK(best / e.envelope.abs() > 0.3);
    CHECK(best / e.envelope.abs() < 3.0);
  }
}

TEST_CASE("peak and count predictions") {
  CHECK(mt_peak_predict(WavePacket(1, 0, 100)) == doctest::Approx(24.5));
  CHECK(mt_count_predict(WavePacket(1, 2, 50), 1.0, 1.0) == doctest::Approx(mt_peak_predict(WavePacket(1, 2, 50))));
  double pred = mt_count_predict(WavePacket(1, 0, 100), 1e-10, 1.0);
  CHECK(pred == doctest::Approx(2327).epsilon(1e-3));
  const WavePacket wp(1, 0, 100);
  auto s = mt_transform(wp, 0, 4000, mt_fft_size(wp));
  long last = 0;
  for (long n = 0; n <= 4000; ++n)
    if (s.at(n).abs() > 1e-10) last = n;
  CHECK(std::fabs(last - pred) <= 0.15 * pred);
  CHECK_THROWS_AS(mt_count_predict(wp, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(mt_count_predict(wp, 0.0, 1.0), DomainError);
}

}
