#include "wavepack/mt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fft.hpp"

namespace wavepack {

using detail::CQ;
using detail::Q;
using cd = std::complex<double>;
using cld = std::complex<long double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailTol = 1e-14;
constexpr double kBandTol = 1e-13;
const cd kI(0.0, 1.0);

bool is_pow2(long v) { return v > 0 && (v & (v - 1)) == 0; }

// i^k for any integer k.
cd ipow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

void check_range(long n_min, long n_max, long M) {
  if (!is_pow2(M) || M < 8) throw DomainError("mt_transform: fft_size must be a power of two >= 8");
  if (n_min > n_max || n_min < -M / 2 || n_max > M / 2 - 1)
    throw DomainError("mt_transform: index range must lie in [-M/2, M/2-1]");
}

void check_tail(double first, double last) {
  if (first > kTailTol || last > kTailTol)
    throw UnderResolved("mt_transform: integrand is " + std::to_string(std::max(first, last)) +
                        " next to theta = +-pi; f does not decay fast enough for this fft_size");
}

template <class C>
CoeffSeries assemble(std::vector<C>& data, long n_min, long n_max, double band_tol) {
  using R = detail::real_of<C>;
  detail::dft_forward(data);
  const long M = static_cast<long>(data.size());
  if (band_tol > 0) {
    // a resolved transform leaves the outer eighth of the spectrum empty
    R peak = 0, outer = 0;
    for (long j = 0; j < M; ++j) {
      long k = j < M / 2 ? j : j - M;
      R m = abs(data[j]);
      peak = std::max(peak, m);
      if (std::labs(k) >= 3 * M / 8) outer = std::max(outer, m);
    }
    if (outer > R(band_tol) * peak)
      throw UnderResolved("mt_transform: spectrum reaches the outer band; raise fft_size");
  }
  R pi = R(kPi);
  if constexpr (std::is_same_v<C, CQ>) pi = detail::q_pi();
  R scale = (2 * pi / R(M)) / (2 * sqrt(2 * pi));
  CoeffSeries s;
  s.basis = BasisId::mt();
  s.n_min = n_min;
  s.method = Method::FFT;
  s.values.reserve(n_max - n_min + 1);
  for (long n = n_min; n <= n_max; ++n) {
    C v = data[((n % M) + M) % M] * scale;
    // (-i)^n from the basis and (-1)^n from the grid origin at -pi
    cd ph = ipow(-n) * ((n % 2) ? -1.0 : 1.0);
    v = C(R(ph.real()) * v.real() - R(ph.imag()) * v.imag(),
          R(ph.real()) * v.imag() + R(ph.imag()) * v.real());
    if constexpr (std::is_same_v<C, CQ>)
      s.values.push_back(detail::to_lmp(v));
    else
      s.values.push_back(LogMagPhase::from_complex(v));
  }
  return s;
}

// Index range holding everything above ~1e-16 of the peak for a wave packet.
double resolution_demand(const WavePacket& wp) {
  double reach = std::fabs(wp.x0) + std::sqrt(37.0 / wp.alpha);
  return std::fabs(wp.omega) * (0.25 + reach * reach) + 4.0 * reach * reach;
}

// Double samples carry the rounding of cos(omega x), about u |omega x|
// relative, which spreads over the whole spectrum.
double double_band_tol(const WavePacket& wp) {
  double xmax = std::fabs(wp.x0) + std::sqrt(37.0 / wp.alpha);
  return std::max(kBandTol, 8 * std::numeric_limits<double>::epsilon() * (1 + std::fabs(wp.omega) * xmax));
}

}  // namespace

long mt_fft_size(const WavePacket& wp) {
  long M = 1024;
  while (M < 4 * resolution_demand(wp)) M *= 2;
  return M;
}

cd mt_basis(long n, double x) {
  cd a(1.0, 2.0 * x), b(1.0, -2.0 * x);
  // |(1+2ix)/(1-2ix)| = 1, so raise the unit ratio by its argument
  double t = std::arg(a / b);
  double ang = std::fmod(static_cast<double>(n) * t, 2.0 * kPi);
  return ipow(n) * std::sqrt(2.0 / kPi) * std::polar(1.0, ang) / b;
}

cd mt_basis_theta(long n, double theta) {
  double ang = std::fmod((static_cast<double>(n) + 0.5) * theta, 2.0 * kPi);
  return ipow(n) * std::sqrt(2.0 / kPi) * std::cos(theta / 2) * std::polar(1.0, ang);
}

CoeffSeries mt_transform(const WavePacket& wp, long n_min, long n_max, long fft_size,
                         Precision prec) {
  const long M = fft_size;
  check_range(n_min, n_max, M);
  if (static_cast<double>(M) / 2 < resolution_demand(wp))
    throw UnderResolved("mt_transform: fft_size " + std::to_string(M) + " below the resolution demand " +
                        std::to_string(2 * resolution_demand(wp)));
  if (prec == Precision::Extended) {
    const Q a = wp.alpha, x0 = wp.x0, w = wp.omega, pi = detail::q_pi();
    std::vector<CQ> data(M, CQ(0));
    for (long k = 1; k < M; ++k) {
      Q th = -pi + 2 * pi * Q(k) / Q(M);
      Q h = th / 2, x = tan(h) / 2, d = x - x0;
      Q v = exp(-a * d * d) * cos(w * x) / cos(h);
      data[k] = CQ(v * cos(h), -v * sin(h));
    }
    check_tail(static_cast<double>(abs(data[1])), static_cast<double>(abs(data[M - 1])));
    return assemble(data, n_min, n_max, kBandTol);
  }
  std::vector<cd> data(M, cd(0));
  for (long k = 1; k < M; ++k) {
    double h = -kPi / 2 + kPi * static_cast<double>(k) / M;
    double v = eval_wavepacket(wp, std::tan(h) / 2) / std::cos(h);
    data[k] = cd(v * std::cos(h), -v * std::sin(h));
  }
  check_tail(std::abs(data[1]), std::abs(data[M - 1]));
  return assemble(data, n_min, n_max, double_band_tol(wp));
}

CoeffSeries mt_transform(const RealFunction& f, long n_min, long n_max, long fft_size) {
  const long M = fft_size;
  check_range(n_min, n_max, M);
  std::vector<cd> data(M, cd(0));
  for (long k = 1; k < M; ++k) {
    double h = -kPi / 2 + kPi * static_cast<double>(k) / M;
    double v = f(std::tan(h) / 2) / std::cos(h);
    data[k] = cd(v * std::cos(h), -v * std::sin(h));
  }
  check_tail(std::abs(data[1]), std::abs(data[M - 1]));
  return assemble(data, n_min, n_max, 0.0);
}

// ---- phase function and saddles ----

namespace {

void check_branch(cd z) {
  if (std::abs(z - kI * 0.5) < 1e-12 || std::abs(z + kI * 0.5) < 1e-12)
    throw BranchPoint("mt: z within 1e-12 of a branch point +-i/2");
}

}  // namespace

cd MTPhase::g(cd z) const {
  check_branch(z);
  cd d = z - wp.x0;
  double nn = static_cast<double>(n);
  return -wp.alpha * d * d + kI * wp.omega * z + nn * std::log(1.0 - 2.0 * kI * z) -
         (nn + 1) * std::log(1.0 + 2.0 * kI * z);
}

cd MTPhase::g1(cd z) const {
  check_branch(z);
  double nn = static_cast<double>(n);
  return -2.0 * wp.alpha * (z - wp.x0) + kI * wp.omega - 2.0 * kI * nn / (1.0 - 2.0 * kI * z) -
         2.0 * kI * (nn + 1) / (1.0 + 2.0 * kI * z);
}

cd MTPhase::g2(cd z) const {
  check_branch(z);
  double nn = static_cast<double>(n);
  cd a = 1.0 - 2.0 * kI * z, b = 1.0 + 2.0 * kI * z;
  return -2.0 * wp.alpha + 4.0 * nn / (a * a) - 4.0 * (nn + 1) / (b * b);
}

namespace {

struct CubicCoeffs {
  cld b, c, d;  // z^3 + b z^2 + c z + d
};

CubicCoeffs cubic_coeffs(const WavePacket& wp, long n) {
  long double a = wp.alpha, x0 = wp.x0, w = wp.omega, nn = static_cast<long double>(n);
  cld i(0, 1);
  CubicCoeffs k;
  k.b = -(x0 + i * w / (2 * a));
  k.c = cld(0.25L + 1 / (2 * a));
  k.d = (i / (2 * a)) * (0.5L + nn + i * x0 * a / 2.0L - w / 4);
  return k;
}

cld eval_cubic(const CubicCoeffs& k, cld z) { return ((z + k.b) * z + k.c) * z + k.d; }

cld polish(const CubicCoeffs& k, cld z) {
  for (int it = 0; it < 6; ++it) {
    cld f = eval_cubic(k, z);
    cld df = (3.0L * z + 2.0L * k.b) * z + k.c;
    if (std::abs(df) == 0) break;
    cld step = f / df;
    z -= step;
    if (std::abs(step) <= 1e-18L * (1 + std::abs(z))) break;
  }
  return z;
}

// Closed-form Cardano roots in the labelled order of mt_saddles.
std::array<cd, 3> cardano(const WavePacket& wp, long n, cd& lam_out, cd& p_out) {
  const double a = wp.alpha, x0 = wp.x0, w = wp.omega, nn = static_cast<double>(n);
  cd B = (3 - 4 * x0 * x0) * a * a + w * w + a * (6.0 - 4.0 * kI * x0 * w);
  cd p = -B / (12 * a * a);
  cd A = 2.0 * kI * x0 * a * a * a * (9 + 4 * x0 * x0) + w * w * w + 3 * a * w * (3.0 - 2.0 * kI * x0 * w) +
         3 * a * a * (9 + 18 * nn - 3 * w - 2 * x0 * (3.0 * kI + 2 * x0 * w));
  cd disc = std::sqrt(A * A - B * B * B);
  // the larger of A +- sqrt keeps the cube root away from cancellation
  cd lam = std::abs(A + disc) >= std::abs(A - disc) ? A + disc : A - disc;
  double scale = std::max(std::norm(A), std::abs(B * B * B));
  if (lam == 0.0 || std::abs(A * A - B * B * B) <= 1e-30 * scale)
    throw DegenerateCubic("mt_saddles: discriminant underflows, saddles coincide");
  cd l3 = std::pow(lam, 1.0 / 3.0);
  const double s3 = std::sqrt(3.0);
  cd z1 = kI * (l3 / (6 * a) - 2 * a * p / l3 + w / (6 * a)) + x0 / 3;
  cd mid = kI * (-l3 / (12 * a) + p * a / l3 + w / (6 * a)) + x0 / 3;
  cd off = s3 * (l3 / (12 * a) + p * a / l3);
  lam_out = lam;
  p_out = p;
  return {z1, mid + off, mid - off};
}

}  // namespace

cd mt_cubic(const WavePacket& wp, long n, cd z) {
  auto k = cubic_coeffs(wp, n);
  cld r = eval_cubic(k, cld(z.real(), z.imag()));
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

SaddleData mt_saddles(const WavePacket& wp, long n, const SaddleData* prev) {
  if (!(wp.alpha > 0)) throw DomainError("mt_saddles: alpha must be > 0");
  SaddleData s;
  auto raw = cardano(wp, n, s.lambda_cardano, s.p_cardano);
  auto k = cubic_coeffs(wp, n);
  std::array<cd, 3> r;
  for (int j = 0; j < 3; ++j) {
    cld z = polish(k, cld(raw[j].real(), raw[j].imag()));
    r[j] = cd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  if (prev) {
    // nearest-neighbour pairing over the six permutations
    std::array<int, 3> perm{0, 1, 2}, best = perm;
    double best_d = 1e300;
    do {
      double d = 0;
      for (int j = 0; j < 3; ++j) d += std::abs(r[perm[j]] - prev->z[j]);
      if (d < best_d) best_d = d, best = perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int j = 0; j < 3; ++j) s.z[j] = r[best[j]];
  } else {
    int top = 0;
    for (int j = 1; j < 3; ++j)
      if (r[j].imag() > r[top].imag()) top = j;
    cd u = r[(top + 1) % 3], v = r[(top + 2) % 3];
    bool same_re = std::fabs(u.real() - v.real()) <= 1e-9 * (1 + std::abs(u) + std::abs(v));
    bool u_first = same_re ? u.imag() >= v.imag() : u.real() > v.real();
    s.z = {r[top], u_first ? u : v, u_first ? v : u};
  }
  MTPhase ph{wp, n};
  for (int j = 0; j < 3; ++j) {
    cld z(s.z[j].real(), s.z[j].imag());
    s.residual[j] = static_cast<double>(std::abs(eval_cubic(k, z)) / (1 + std::pow(std::abs(z), 3)));
    // n = 0 and n = -1 make one root the removable point -+i/2 itself
    if (std::abs(s.z[j] - kI * 0.5) < 1e-9 || std::abs(s.z[j] + kI * 0.5) < 1e-9) {
      s.at_branch_point[j] = true;
      s.g_at[j] = s.g2_at[j] = cd(std::nan(""), std::nan(""));
      continue;
    }
    s.g_at[j] = ph.g(s.z[j]);
    s.g2_at[j] = ph.g2(s.z[j]);
  }
  if (wp.omega != 0) {
    double c = (static_cast<double>(n) + 0.5) / std::fabs(wp.omega);
    s.near_degenerate = std::fabs(c - 0.25) < 0.01;
  }
  return s;
}

std::vector<SaddleData> mt_saddle_sweep(const WavePacket& wp, long n_min, long n_max) {
  std::vector<SaddleData> out;
  if (n_max < n_min) return out;
  out.reserve(n_max - n_min + 1);
  out.push_back(mt_saddles(wp, n_min));
  for (long n = n_min + 1; n <= n_max; ++n) out.push_back(mt_saddles(wp, n, &out.back()));
  return out;
}

std::array<cd, 3> mt_saddle_expansion(const WavePacket& wp, long n) {
  if (wp.omega == 0) throw DomainError("mt_saddle_expansion: omega must be nonzero");
  const double a = wp.alpha, x0 = wp.x0, w = wp.omega;
  double c = (static_cast<double>(n) + 0.5) / w;
  cd r = std::sqrt(cd(4 * c - 1));
  cd z1 = x0 + kI * w / (2 * a) + kI * (1 + 2 * a * c) / w;
  cd z2 = r / 2.0 - kI * (1.0 + 2 * a * c * (1.0 - 2 * x0 / r)) / (2 * w);
  cd z3 = -r / 2.0 - kI * (1.0 + 2 * a * c * (1.0 + 2 * x0 / r)) / (2 * w);
  return {z1, z2, z3};
}

// ---- level function and contour tracing ----

double mt_im_g(const WavePacket& wp, long n, cd z) {
  check_branch(z);
  double x = z.real(), y = z.imag();
  double t1 = std::atan(4 * x / (1 - 4 * x * x - 4 * y * y));
  double t2 = std::atan(8 * x * y / (1 + 4 * x * x - 4 * y * y));
  if (std::isnan(t1)) t1 = 0;
  if (std::isnan(t2)) t2 = 0;
  return -2 * wp.alpha * y * (x - wp.x0) + wp.omega * x - (static_cast<double>(n) + 0.5) * t1 - 0.5 * t2;
}

namespace {

// Im g with both angles carried continuously from the previous point.
struct LevelTracker {
  const WavePacket& wp;
  double nh;  // n + 1/2
  double a1 = 0, a2 = 0;

  static double unwrap(double raw, double ref) {
    return raw + 2 * kPi * std::round((ref - raw) / (2 * kPi));
  }
  static double angle1(cd z) {
    double x = z.real(), y = z.imag();
    return std::atan2(4 * x, 1 - 4 * x * x - 4 * y * y);
  }
  static double angle2(cd z) {
    double x = z.real(), y = z.imag();
    return std::atan2(8 * x * y, 1 + 4 * x * x - 4 * y * y);
  }
  void anchor(cd z) {
    a1 = angle1(z);
    a2 = angle2(z);
  }
  double value_at(cd z, double b1, double b2) const {
    double x = z.real(), y = z.imag();
    return -2 * wp.alpha * y * (x - wp.x0) + wp.omega * x - nh * b1 - 0.5 * b2;
  }
  // Value at z continuing from the stored angles; commit stores them.
  double peek(cd z, double* b1 = nullptr, double* b2 = nullptr) const {
    double u1 = unwrap(angle1(z), a1), u2 = unwrap(angle2(z), a2);
    if (b1) *b1 = u1;
    if (b2) *b2 = u2;
    return value_at(z, u1, u2);
  }
  double commit(cd z) {
    double u1, u2;
    double v = peek(z, &u1, &u2);
    a1 = u1;
    a2 = u2;
    return v;
  }
};

std::vector<cd> trace_branch(const WavePacket& wp, long n, cd saddle, cd dir0, double level,
                             const TraceOptions& opt, bool& far) {
  MTPhase ph{wp, n};
  LevelTracker lt{wp, static_cast<double>(n) + 0.5};
  lt.anchor(saddle);
  std::vector<cd> pts;
  cd z = saddle;
  cd dir = dir0;
  const cd bp(0, 0.5);
  for (long step = 0; step < opt.max_steps; ++step) {
    cd zn = z + opt.step * dir;
    for (int it = 0; it < 20; ++it) {
      cd d1 = ph.g1(zn);
      double m = std::abs(d1);
      if (m == 0) break;
      cd u = kI * std::conj(d1) / m;  // direction of steepest increase of Im g
      double err = lt.peek(zn) - level;
      zn -= (err / m) * u;
      if (std::fabs(err) < 1e-12 * std::max(1.0, std::fabs(level))) break;
    }
    lt.commit(zn);
    pts.push_back(zn);
    z = zn;
    if (std::fabs(z.real()) >= opt.x_stop) {
      far = true;
      break;
    }
    if (std::abs(z - bp) < 2 * opt.step || std::abs(z + bp) < 2 * opt.step) break;
    cd d1 = ph.g1(z);
    if (std::abs(d1) < 1e-10) break;  // ran into another saddle
    cd next = -std::conj(d1) / std::abs(d1);
    // keep going forward if the gradient flips near a turning region
    if (std::real(next * std::conj(dir)) < 0) break;
    dir = next;
  }
  return pts;
}

}  // namespace

ContourTrace trace_contour(const WavePacket& wp, long n, cd saddle, const TraceOptions& opt) {
  MTPhase ph{wp, n};
  LevelTracker lt{wp, static_cast<double>(n) + 0.5};
  lt.anchor(saddle);
  ContourTrace t;
  t.im_g_level = lt.peek(saddle);
  double theta = (kPi - std::arg(ph.g2(saddle))) / 2;
  cd d0 = std::polar(1.0, theta);
  bool far_a = false, far_b = false;
  auto a = trace_branch(wp, n, saddle, -d0, t.im_g_level, opt, far_a);
  auto b = trace_branch(wp, n, saddle, d0, t.im_g_level, opt, far_b);
  t.points.assign(a.rbegin(), a.rend());
  t.points.push_back(saddle);
  t.points.insert(t.points.end(), b.begin(), b.end());
  t.saddle_index = static_cast<long>(a.size());
  t.reached_far_field = far_a || far_b;
  return t;
}

std::vector<double> mt_im_g_along(const WavePacket& wp, long n, const std::vector<cd>& path,
                                  long anchor) {
  std::vector<double> out(path.size());
  if (path.empty()) return out;
  if (anchor < 0 || anchor >= static_cast<long>(path.size()))
    throw DomainError("mt_im_g_along: anchor outside the path");
  for (const cd& z : path) check_branch(z);
  LevelTracker fwd{wp, static_cast<double>(n) + 0.5};
  fwd.anchor(path[anchor]);
  LevelTracker back = fwd;
  for (long k = anchor; k < static_cast<long>(path.size()); ++k) out[k] = fwd.commit(path[k]);
  for (long k = anchor; k >= 0; --k) out[k] = back.commit(path[k]);
  return out;
}

// ---- estimates ----

double mt_laguerre_bound(double alpha, double omega) {
  if (!(alpha > 0)) throw DomainError("mt_laguerre_bound: alpha must be > 0");
  if (omega < 0) throw DomainError("mt_laguerre_bound: omega must be >= 0");
  return std::pow(kPi, 0.25) * std::pow(2.0, -1.75) * std::pow(alpha, -0.25) *
         std::exp(-omega * omega / (4 * alpha));
}

MTSymmetry mt_symmetry_reduce(long n, int omega_sign) {
  if (omega_sign != 1 && omega_sign != -1) throw DomainError("mt_symmetry_reduce: sign must be +-1");
  MTSymmetry s;
  s.base_n = -(n + 1);
  s.omega_sign = -omega_sign;
  s.phase = kI * ((s.base_n % 2) ? -1.0 : 1.0);
  return s;
}

MTEstimate mt_estimate_detail(const WavePacket& wp, long n, const MTEstimateOptions& opt) {
  const double w = std::fabs(wp.omega);
  if (w == 0) throw OutOfRegime("mt_estimate: omega must be nonzero");
  // a_n is even in omega; n >= 0 takes its saddle half from b_n(omega), n <= -1
  // from b_n(-omega) = phase * b_m(omega; -x0) with m = -(n+1)
  long m = n;
  double x0 = wp.x0;
  cd outer(1.0, 0.0);
  if (n < 0) {
    auto sym = mt_symmetry_reduce(n, -1);
    m = sym.base_n;
    x0 = -x0;
    outer = sym.phase;
  }
  const double a = wp.alpha;
  double c = (static_cast<double>(m) + 0.5) / w;
  if (c < 0.25 + opt.margin)
    throw OutOfRegime("mt_estimate: c = " + std::to_string(c) + " is below 1/4 + margin");
  if (c > opt.c_max) throw OutOfRegime("mt_estimate: c = " + std::to_string(c) + " exceeds c_max");

  cd r = std::sqrt(cd(4 * c - 1));
  cd osc = kI * w / 2.0 * (r - 4 * c * std::atan(r));
  cd lead = std::log(1 / (2 * std::sqrt(c)));
  cd g2 = -a / 4 * (r - 2 * x0) * (r - 2 * x0) + lead + osc;
  cd g3 = -a / 4 * (r + 2 * x0) * (r + 2 * x0) + lead - osc;
  cd h2 = -8 * a + (1.0 + 4 * c * (a - 1 + 2 * a * x0 * (3 * c - 1) / r)) / (2 * c * c) + kI * w * r / c;
  cd h3 = -8 * a + (1.0 + 4 * c * (-1 + a + 2 * a * x0 * (1 - 3 * c) / r)) / (2 * c * c) - kI * w * r / c;

  MTEstimate e;
  e.c = c;
  LogMagPhase rot = LogMagPhase::from_complex(outer * ipow(-m));
  e.term2 = rot * LogMagPhase::from_log(g2 - 0.5 * std::log(-h2));
  e.term3 = rot * LogMagPhase::from_log(g3 - 0.5 * std::log(-h3));

  cd s = std::sqrt(cd(c - 0.25));
  cd den = 8 * a * c - 1 / (2 * c) - 2.0 * (-1 + a + 3 * a * x0 * (c - 1.0 / 3) / s) - 2.0 * kI * w * s;
  cd gauss = -a * (s - x0) * (s - x0);
  e.bound = LogMagPhase(gauss.real() - std::log(2 * std::abs(std::sqrt(den))), 0.0);
  e.simple = LogMagPhase(gauss.real() - std::log(2 * std::sqrt(c)) - 0.5 * std::log(std::abs(h2)), 0.0);

  e.est.value = e.term2 + e.term3;
  e.est.envelope = LogMagPhase(e.term2.log_mag, 0.0) + LogMagPhase(e.term3.log_mag, 0.0);
  e.reflected_log_bound = std::log(mt_laguerre_bound(a, w));
  if (e.reflected_log_bound > e.est.envelope.log_mag + std::log(1e-16)) {
    e.est.envelope = e.est.envelope + LogMagPhase(e.reflected_log_bound, 0.0);
    e.reflected_in_envelope = true;
    e.est.note = "reflected half only bounded, adds " + std::to_string(e.reflected_log_bound) +
                 " (log) to the envelope";
  }
  if (c < 0.25 + 0.01) {
    e.est.valid = false;
    if (!e.est.note.empty()) e.est.note += "; ";
    e.est.note += "within 0.01 of the turning point c = 1/4";
  }
  return e;
}

EstimateValue mt_estimate(const WavePacket& wp, long n, const MTEstimateOptions& opt) {
  return mt_estimate_detail(wp, n, opt).est;
}

double mt_peak_predict(const WavePacket& wp) {
  return std::fabs(wp.omega) * (0.25 + wp.x0 * wp.x0) - 0.5;
}

double mt_count_predict(const WavePacket& wp, double epsilon, double calib_C) {
  if (!(epsilon > 0 && calib_C > 0 && epsilon <= calib_C))
    throw DomainError("mt_count_predict: need 0 < epsilon <= calib_C");
  double reach = wp.x0 + std::sqrt(-std::log(epsilon / calib_C) / wp.alpha);
  return std::fabs(wp.omega) * (0.25 + reach * reach) - 0.5;
}

}  // namespace wavepack
