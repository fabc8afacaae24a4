#include "wavepack/oracle.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "quad.hpp"

namespace wavepack {

using detail::ComplexKahan;
using detail::CQ;
using detail::Q;
using detail::q_pi;

namespace {

struct Rule {
  std::vector<Q> x;
  std::vector<Q> w;
};

template <unsigned N>
Rule make_rule() {
  using G = boost::math::quadrature::gauss<Q, N>;
  const auto& a = G::abscissa();
  const auto& w = G::weights();
  Rule r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.x.push_back(a[i]);
    r.w.push_back(w[i]);
    if (a[i] != 0) {
      r.x.push_back(-a[i]);
      r.w.push_back(w[i]);
    }
  }
  return r;
}

const Rule& gl_rule(int order) {
  switch (order) {
    case 16: { static const Rule r = make_rule<16>(); return r; }
    case 20: { static const Rule r = make_rule<20>(); return r; }
    case 32: { static const Rule r = make_rule<32>(); return r; }
    case 48: { static const Rule r = make_rule<48>(); return r; }
    case 64: { static const Rule r = make_rule<64>(); return r; }
    default:
      throw DomainError("QuadConfig: unsupported panel_order " + std::to_string(order));
  }
}

void check_config(const QuadConfig& cfg) {
  if (cfg.points_per_period < 10) throw DomainError("QuadConfig: points_per_period must be >= 10");
  if (!(cfg.truncation_log_tol < 0)) throw DomainError("QuadConfig: truncation_log_tol must be < 0");
  gl_rule(cfg.panel_order);
}

// Visit every Gauss node of a uniform panel partition of [a, b].
template <class Fn>
long for_each_node(Q a, Q b, double width, const QuadConfig& cfg, Fn&& fn) {
  if (!(b > a)) return 0;
  const Rule& rule = gl_rule(cfg.panel_order);
  long panels = std::max(1L, static_cast<long>(std::ceil(static_cast<double>(b - a) / width)));
  Q h = (b - a) / panels;
  Q half = h / 2;
  for (long p = 0; p < panels; ++p) {
    Q mid = a + h * p + half;
    for (std::size_t j = 0; j < rule.x.size(); ++j) fn(mid + half * rule.x[j], half * rule.w[j]);
  }
  return panels * static_cast<long>(rule.x.size());
}

// Same with a panel width that may vary along [a, b].
template <class W, class Fn>
long for_each_node_adaptive(Q a, Q b, W&& width_at, const QuadConfig& cfg, Fn&& fn) {
  const Rule& rule = gl_rule(cfg.panel_order);
  long count = 0;
  Q left = a;
  while (left < b) {
    Q h = Q(width_at(static_cast<double>(left)));
    // do not outrun a narrower requirement at the far end of the panel
    h = std::min(h, Q(width_at(static_cast<double>(left + h))));
    Q right = std::min(b, left + h);
    Q half = (right - left) / 2, mid = left + half;
    for (std::size_t j = 0; j < rule.x.size(); ++j) fn(mid + half * rule.x[j], half * rule.w[j]);
    count += static_cast<long>(rule.x.size());
    left = right;
  }
  return count;
}

double panel_width(const QuadConfig& cfg, double scale, double freq) {
  double period = 2.0 * std::numbers::pi / std::max(freq, 1.0);
  return static_cast<double>(cfg.panel_order) / cfg.points_per_period * std::min(scale, period);
}

// Frequency and length scale of the basis functions for indices up to nabs.
double basis_freq(const BasisId& b, long nabs) {
  switch (b.kind) {
    case Basis::StretchedFourier: return std::numbers::pi * nabs / b.lambda;
    case Basis::Hermite: return std::sqrt(2.0 * nabs + 1.0);
    case Basis::MalmquistTakenaka: return 4.0 * nabs + 2.0;
  }
  return 0.0;
}

double basis_scale(const BasisId& b) {
  switch (b.kind) {
    case Basis::StretchedFourier: return 1e300;
    case Basis::Hermite: return 1.0;
    case Basis::MalmquistTakenaka: return 0.5;  // poles at +-i/2
  }
  return 1.0;
}

// Streams conj(phi_n(x)) for n = n_min..n_max at one node.
class ConjBasis {
 public:
  ConjBasis(const BasisId& b, long n_min, long n_max) : b_(b), n_min_(n_min), n_max_(n_max) {
    if (b.kind == Basis::StretchedFourier && !(b.lambda > 0))
      throw DomainError("stretched Fourier basis needs lambda > 0");
    if (b.kind == Basis::Hermite) {
      if (n_min < 0) throw DomainError("Hermite index must be >= 0");
      c1_.resize(n_max + 2);
      c2_.resize(n_max + 2);
      for (long k = 0; k <= n_max; ++k) {
        c1_[k] = sqrt(Q(2) / Q(k + 1));
        c2_[k] = sqrt(Q(k) / Q(k + 1));
      }
    }
    values_.resize(n_max - n_min + 1);
  }

  const std::vector<CQ>& at(Q x) {
    switch (b_.kind) {
      case Basis::StretchedFourier: sf(x); break;
      case Basis::Hermite: hermite(x); break;
      case Basis::MalmquistTakenaka: mt(x); break;
    }
    return values_;
  }

 private:
  static CQ cis(Q t) { return CQ(cos(t), sin(t)); }

  void sf(Q x) {
    Q lam = b_.lambda;
    if (fabs(x) > lam) {
      std::fill(values_.begin(), values_.end(), CQ(0));
      return;
    }
    Q norm = 1 / sqrt(2 * lam);
    Q t = -q_pi() * x / lam;
    CQ v = cis(t * n_min_) * norm;
    CQ step = cis(t);
    for (auto& out : values_) {
      out = v;
      v *= step;
    }
  }

  void hermite(Q x) {
    Q prev = 0;
    Q cur = exp(-x * x / 2) / sqrt(sqrt(q_pi()));
    for (long k = 0; k <= n_max_; ++k) {
      if (k >= n_min_) values_[k - n_min_] = CQ(cur);
      Q next = x * c1_[k] * cur - c2_[k] * prev;
      prev = cur;
      cur = next;
    }
  }

  void mt(Q x) {
    // conj(phi_n) = (-i)^n sqrt(2/pi) (1-2ix)^n / (1+2ix)^(n+1)
    CQ a(Q(1), -2 * x), b(Q(1), 2 * x);
    CQ base = sqrt(2 / q_pi()) / b;
    CQ ratio = CQ(Q(0), Q(-1)) * a / b;
    CQ v = base * ipow(ratio, n_min_);
    for (auto& out : values_) {
      out = v;
      v *= ratio;
    }
  }

  static CQ ipow(CQ z, long n) {
    // |z| = 1 here, so negative powers are conjugate powers
    if (n < 0) {
      z = CQ(z.real(), -z.imag());
      n = -n;
    }
    CQ r(Q(1));
    while (n) {
      if (n & 1) r *= z;
      z *= z;
      n >>= 1;
    }
    return r;
  }

  BasisId b_;
  long n_min_, n_max_;
  std::vector<Q> c1_, c2_;
  std::vector<CQ> values_;
};

struct Interval {
  Q a, b;
};

Interval gaussian_interval(double alpha, double center, const QuadConfig& cfg, const BasisId& basis) {
  Q L = sqrt(Q(-cfg.truncation_log_tol) / alpha);
  Interval iv{center - L, center + L};
  if (basis.kind == Basis::StretchedFourier) {
    iv.a = std::max(iv.a, Q(-basis.lambda));
    iv.b = std::min(iv.b, Q(basis.lambda));
  }
  return iv;
}

// Generic a_n sweep: g(x) returns f(x) (complex allowed) in binary128.
template <class G>
std::vector<LogMagPhase> sweep(const BasisId& basis, long n_min, long n_max, Interval iv,
                               double width, const QuadConfig& cfg, G&& g, long* nodes = nullptr) {
  ConjBasis phi(basis, n_min, n_max);
  std::vector<ComplexKahan<Q>> acc(n_max - n_min + 1);
  long count = for_each_node(iv.a, iv.b, width, cfg, [&](Q x, Q w) {
    CQ fx = g(x) * w;
    const auto& ph = phi.at(x);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i].add(fx * ph[i]);
  });
  if (nodes) *nodes = count;
  std::vector<LogMagPhase> out;
  out.reserve(acc.size());
  for (auto& a : acc) out.push_back(detail::to_lmp(CQ(a.real(), a.imag())));
  return out;
}

// Theta-domain MT coefficient of a wave packet (second, independent route).
LogMagPhase mt_theta_coefficient(const WavePacket& wp, long n, int sign_b, const QuadConfig& cfg) {
  Q L = sqrt(Q(-cfg.truncation_log_tol) / wp.alpha);
  Q xa = wp.x0 - L, xb = wp.x0 + L;
  Q ta = 2 * atan(2 * xa), tb = 2 * atan(2 * xb);
  double xmax = static_cast<double>(std::max(fabs(xa), fabs(xb)));
  double stretch = (1.0 + 4.0 * xmax * xmax) / 4.0;  // max dx/dtheta
  double freq = std::fabs(wp.omega) * stretch + std::fabs(static_cast<double>(n)) + 1.0;
  double width = panel_width(cfg, 1.0 / (std::sqrt(wp.alpha) * stretch), freq);
  ComplexKahan<Q> acc;
  for_each_node(ta, tb, width, cfg, [&](Q th, Q w) {
    Q x = tan(th / 2) / 2;
    Q d = x - wp.x0;
    Q env = exp(-wp.alpha * d * d);
    CQ fx = sign_b == 0 ? CQ(env * cos(Q(wp.omega) * x))
                        : CQ(env * cos(sign_b * Q(wp.omega) * x), env * sin(sign_b * Q(wp.omega) * x)) / 2;
    Q ph = -(Q(n) + Q(0.5)) * th;
    acc.add(fx / cos(th / 2) * CQ(cos(ph), sin(ph)) * w);
  });
  // (-i)^n / (2 sqrt(2 pi))
  long m = ((n % 4) + 4) % 4;
  CQ rot = m == 0 ? CQ(1) : m == 1 ? CQ(Q(0), Q(-1)) : m == 2 ? CQ(-1) : CQ(Q(0), Q(1));
  CQ val = rot * CQ(acc.real(), acc.imag()) / (2 * sqrt(2 * q_pi()));
  return detail::to_lmp(val);
}

// b_n(s omega) for Hermite functions along the line Im x = y. Hermite
// functions are entire, so every y gives the same value; the line through the
// saddle of the Gaussian factor, y = s omega / (2 alpha + 1), removes the
// cancellation that hides e^{-omega^2 / (2 (2 alpha + 1))} on the real axis.
// mass collects the absolute sum of the quadrature terms.
struct LineSweep {
  std::vector<CQ> value;
  std::vector<Q> mass;
};

LineSweep hermite_line(const WavePacket& wp, long n_min, long n_max, int s, Q y, Interval iv,
                       double width, const QuadConfig& cfg) {
  std::vector<Q> c1(n_max + 1), c2(n_max + 1);
  for (long k = 0; k <= n_max; ++k) {
    c1[k] = sqrt(Q(2) / Q(k + 1));
    c2[k] = sqrt(Q(k) / Q(k + 1));
  }
  const size_t m = static_cast<size_t>(n_max - n_min + 1);
  std::vector<ComplexKahan<Q>> acc(m);
  std::vector<Q> mass(m, Q(0));
  const Q a = wp.alpha, x0 = wp.x0, w = s * Q(wp.omega);
  const CQ I(Q(0), Q(1));
  const Q qpi4 = sqrt(sqrt(q_pi()));
  for_each_node(iv.a, iv.b, width, cfg, [&](Q t, Q wt) {
    CQ z(t, y);
    CQ d = z - x0;
    // f part times the Gaussian of h_0 in one exponent
    CQ e = exp(-a * d * d + I * w * z - z * z / 2) * (wt / (2 * qpi4));
    CQ prev(0), cur(1);
    for (long k = 0; k <= n_max; ++k) {
      if (k >= n_min) {
        CQ term = e * cur;
        acc[k - n_min].add(term);
        mass[k - n_min] += abs(term);
      }
      CQ next = z * c1[k] * cur - c2[k] * prev;
      prev = cur;
      cur = next;
    }
  });
  LineSweep r;
  r.mass = std::move(mass);
  for (auto& x : acc) r.value.push_back(CQ(x.real(), x.imag()));
  return r;
}

std::vector<LogMagPhase> hermite_sweep(const WavePacket& wp, long n_min, long n_max, int sign_b, Interval iv,
                                       double width, const QuadConfig& cfg) {
  if (n_min < 0) throw DomainError("Hermite index must be >= 0");
  const int s = sign_b == 0 ? 1 : sign_b;
  LineSweep real = hermite_line(wp, n_min, n_max, s, Q(0), iv, width, cfg);
  LineSweep shifted;
  if (wp.omega != 0) {
    Q y = s * Q(wp.omega) / (2 * Q(wp.alpha) + 1);
    shifted = hermite_line(wp, n_min, n_max, s, y, iv, width, cfg);
  }
  std::vector<LogMagPhase> out;
  for (size_t i = 0; i < real.value.size(); ++i) {
    CQ v = real.value[i];
    if (!shifted.value.empty()) {
      const CQ& u = shifted.value[i];
      bool finite = isfinite(u.real()) && isfinite(u.imag()) && isfinite(shifted.mass[i]);
      if (finite && shifted.mass[i] < real.mass[i]) v = u;
    }
    // h_n is real on the real axis, so a_n = b_n(omega) + conj(b_n(omega))
    if (sign_b == 0) v = CQ(2 * v.real(), Q(0));
    out.push_back(detail::to_lmp(v));
  }
  return out;
}

// b_n(s omega) for MT functions along Im z = y. The continued factor
// (-i)^n sqrt(2/pi) (1-2iz)^n / (1+2iz)^(n+1) has its only pole at i/2 when
// n >= 0 and at -i/2 when n < 0, so every line on the far side of the pole
// gives the real-axis value. Far from the peak the coefficients fall below
// the rounding level of the real-axis sum; a line near the saddle of the
// integrand keeps them.
LineSweep mt_line(const WavePacket& wp, long n_min, long n_max, int s, Q y, const QuadConfig& cfg) {
  const size_t m = static_cast<size_t>(n_max - n_min + 1);
  std::vector<ComplexKahan<Q>> acc(m);
  std::vector<Q> mass(m, Q(0));
  const Q a = wp.alpha, x0 = wp.x0, w = s * Q(wp.omega);
  const CQ I(Q(0), Q(1));
  // wide enough that the growth exp(alpha y^2) along the line is covered
  Q L = sqrt(Q(-2 * cfg.truncation_log_tol) / a) + fabs(y);
  const Q norm = sqrt(2 / q_pi()) / 2;
  // Panels follow the local frequency |omega| + 2 alpha |y| + 4 |n| / |1 + 4 z^2|
  // and stay shorter than the distance to the poles at +-i/2, which sets the
  // convergence rate of each Gauss panel.
  const double nabs = static_cast<double>(std::max(std::labs(n_min), std::labs(n_max)));
  const double yd = static_cast<double>(y);
  const double per = static_cast<double>(cfg.panel_order) / cfg.points_per_period;
  auto local_width = [&](double t) {
    std::complex<double> z(t, yd);
    double freq = std::fabs(wp.omega) + 2 * wp.alpha * std::fabs(yd) + 4 * nabs / std::abs(1.0 + 4.0 * z * z);
    // i/2 is a pole for n >= 0 and -i/2 for n < 0; the other point is a zero
    double dist = 1e300;
    if (n_max >= 0) dist = std::abs(z - std::complex<double>(0, 0.5));
    if (n_min < 0) dist = std::min(dist, std::abs(z + std::complex<double>(0, 0.5)));
    return std::max(1e-3, std::min(per * std::min(1 / std::sqrt(wp.alpha), 2 * std::numbers::pi / freq), 0.75 * dist));
  };
  for_each_node_adaptive(x0 - L, x0 + L, local_width, cfg, [&](Q t, Q wt) {
    CQ z(t, y);
    CQ d = z - x0;
    CQ p = CQ(Q(1), Q(0)) - 2 * I * z, q = CQ(Q(1), Q(0)) + 2 * I * z;
    CQ ratio = -I * p / q;
    CQ r = ratio;
    long k = n_min;
    if (k < 0) {
      r = CQ(Q(1), Q(0)) / ratio;
      k = -k;
    }
    CQ pw(Q(1), Q(0));
    while (k) {
      if (k & 1) pw *= r;
      r *= r;
      k >>= 1;
    }
    CQ v = exp(-a * d * d + I * w * z) * (norm * wt) / q * pw;
    for (size_t i = 0; i < m; ++i) {
      acc[i].add(v);
      mass[i] += fabs(v.real()) + fabs(v.imag());
      v *= ratio;
    }
  });
  LineSweep out;
  out.mass = std::move(mass);
  for (auto& x : acc) out.value.push_back(CQ(x.real(), x.imag()));
  return out;
}

// Replaces the real-axis values of b_n(s omega) by shifted-line values where
// need[i] holds and the real-axis sum lost more than 20 digits.
void mt_refine(const WavePacket& wp, long n_min, int s, LineSweep& best, const std::vector<bool>& need,
               const QuadConfig& cfg) {
  const long n_max = n_min + static_cast<long>(best.value.size()) - 1;
  auto cancelled = [&](size_t i) { return need[i] && abs(best.value[i]) < best.mass[i] * Q(1e-20); };
  for (int side : {1, -1}) {
    // n >= 0 may move down (side 1), n < 0 up (side -1)
    long lo = side == 1 ? std::max(n_min, 0L) : n_min;
    long hi = side == 1 ? n_max : std::min(n_max, -1L);
    long first = 0, last = -1;
    for (long n = lo; n <= hi; ++n)
      if (cancelled(n - n_min)) {
        if (last < first) first = n;
        last = n;
      }
    if (last < first) continue;
    double nabs = static_cast<double>(std::max(std::labs(first), std::labs(last)) + 1);
    double Y = std::max(std::fabs(wp.omega) / (2 * wp.alpha), std::cbrt(nabs / (2 * wp.alpha))) +
               std::fabs(wp.x0) + 1;
    double step = std::max(0.5, Y / 16);
    // one line between the axis and the pole, the rest away from it
    std::vector<double> heights{0.25 * side};
    for (double depth = step; depth <= Y + step; depth += step) heights.push_back(-side * depth);
    for (double h : heights) {
      LineSweep line = mt_line(wp, first, last, s, Q(h), cfg);
      for (long n = first; n <= last; ++n) {
        size_t i = n - n_min, j = n - first;
        const CQ& u = line.value[j];
        bool finite = isfinite(u.real()) && isfinite(u.imag()) && isfinite(line.mass[j]);
        if (finite && line.mass[j] < best.mass[i]) {
          best.value[i] = u;
          best.mass[i] = line.mass[j];
        }
      }
    }
  }
}

std::vector<LogMagPhase> wavepacket_sweep(const WavePacket& wp, const BasisId& basis, long n_min,
                                          long n_max, int sign_b, const QuadConfig& cfg) {
  check_config(cfg);
  if (n_max < n_min) throw DomainError("oracle: empty index range");
  if (basis.kind == Basis::MalmquistTakenaka && cfg.mt_eval == MTEval::Theta) {
    std::vector<LogMagPhase> out;
    for (long n = n_min; n <= n_max; ++n) out.push_back(mt_theta_coefficient(wp, n, sign_b, cfg));
    return out;
  }
  Interval iv = gaussian_interval(wp.alpha, wp.x0, cfg, basis);
  long nabs = std::max(std::labs(n_min), std::labs(n_max));
  double width = panel_width(cfg, std::min(1.0 / std::sqrt(wp.alpha), basis_scale(basis)),
                             std::fabs(wp.omega) + basis_freq(basis, nabs));
  if (basis.kind == Basis::Hermite) return hermite_sweep(wp, n_min, n_max, sign_b, iv, width, cfg);
  if (basis.kind == Basis::MalmquistTakenaka) {
    // b_n(-omega) = b_n(omega) when omega = 0
    std::vector<int> signs;
    if (sign_b != 0) signs = {sign_b};
    else if (wp.omega == 0) signs = {1};
    else signs = {1, -1};
    std::vector<LineSweep> halves;
    for (int s : signs) halves.push_back(mt_line(wp, n_min, n_max, s, Q(0), cfg));
    const size_t m = halves[0].value.size();
    std::vector<bool> need(m);
    for (size_t i = 0; i < m; ++i) {
      CQ v(0);
      Q mass(0);
      for (const auto& h : halves) {
        v += h.value[i];
        mass += h.mass[i];
      }
      need[i] = abs(v) < mass * Q(1e-20);
    }
    std::vector<LogMagPhase> out;
    for (size_t k = 0; k < signs.size(); ++k) mt_refine(wp, n_min, signs[k], halves[k], need, cfg);
    for (size_t i = 0; i < m; ++i) {
      CQ v(0);
      for (const auto& h : halves) v += h.value[i];
      if (sign_b == 0 && wp.omega == 0) v *= 2;
      out.push_back(detail::to_lmp(v));
    }
    return out;
  }
  const Q a = wp.alpha, x0 = wp.x0, w = wp.omega;
  if (sign_b == 0) {
    return sweep(basis, n_min, n_max, iv, width, cfg, [&](Q x) {
      Q d = x - x0;
      return CQ(exp(-a * d * d) * cos(w * x));
    });
  }
  return sweep(basis, n_min, n_max, iv, width, cfg, [&](Q x) {
    Q d = x - x0;
    Q e = exp(-a * d * d) / 2;
    Q t = sign_b * w * x;
    return CQ(e * cos(t), e * sin(t));
  });
}

}  // namespace

LogMagPhase oracle_coefficient(const WavePacket& wp, const BasisId& basis, long n,
                               const QuadConfig& cfg) {
  return wavepacket_sweep(wp, basis, n, n, 0, cfg).front();
}

LogMagPhase oracle_b(const WavePacket& wp, const BasisId& basis, long n, int sign,
                     const QuadConfig& cfg) {
  if (sign != 1 && sign != -1) throw DomainError("oracle_b: sign must be +1 or -1");
  return wavepacket_sweep(wp, basis, n, n, sign, cfg).front();
}

CoeffSeries oracle_series(const WavePacket& wp, const BasisId& basis, long n_min, long n_max,
                          const QuadConfig& cfg) {
  CoeffSeries s;
  s.basis = basis;
  s.n_min = n_min;
  s.method = Method::Oracle;
  s.values = wavepacket_sweep(wp, basis, n_min, n_max, 0, cfg);
  return s;
}

OracleResult oracle_coefficient_detail(const RealFunction& f, const BasisId& basis, long n,
                                       const QuadConfig& cfg) {
  check_config(cfg);
  Interval iv;
  double scale, freq = cfg.omega_hint + basis_freq(basis, std::labs(n));
  double tail = 0.0;
  switch (f.decay.kind) {
    case Decay::Kind::Unknown:
      throw TruncationUnreliable("oracle: RealFunction has no envelope metadata");
    case Decay::Kind::Gaussian: {
      if (!(f.decay.param > 0)) throw DomainError("oracle: Gaussian decay needs alpha > 0");
      iv = gaussian_interval(f.decay.param, f.decay.center, cfg, basis);
      scale = 1.0 / std::sqrt(f.decay.param);
      tail = std::exp(cfg.truncation_log_tol);
      break;
    }
    case Decay::Kind::Algebraic: {
      double p = f.decay.param;
      if (!(p > 1)) throw TruncationUnreliable("oracle: algebraic decay must be faster than 1/|x|");
      double L = std::min(std::exp(-cfg.truncation_log_tol / p), cfg.max_half_width);
      // tail of C/|x|^p against a basis bounded by 1, C = 1 assumed
      tail = 2.0 * std::pow(L, 1.0 - p) / (p - 1.0);
      if (tail > std::exp(cfg.truncation_log_tol) && !cfg.accept_loose_tail)
        throw TruncationUnreliable("oracle: algebraic tail bound " + std::to_string(tail) +
                                   " exceeds tolerance; set accept_loose_tail to proceed");
      iv = {Q(-L), Q(L)};
      if (basis.kind == Basis::StretchedFourier) {
        iv.a = std::max(iv.a, Q(-basis.lambda));
        iv.b = std::min(iv.b, Q(basis.lambda));
      }
      scale = 1.0;
      break;
    }
  }
  double width = panel_width(cfg, std::min(scale, basis_scale(basis)), freq);
  OracleResult r;
  r.value = sweep(basis, n, n, iv, width, cfg, [&](Q x) { return CQ(Q(f(static_cast<double>(x)))); },
                  &r.nodes)
                .front();
  r.tail_bound = tail;
  return r;
}

LogMagPhase oracle_coefficient(const RealFunction& f, const BasisId& basis, long n,
                               const QuadConfig& cfg) {
  return oracle_coefficient_detail(f, basis, n, cfg).value;
}

std::complex<double> oracle_basis_inner(const BasisId& basis, long m, long n, const QuadConfig& cfg) {
  check_config(cfg);
  ComplexKahan<Q> acc;
  if (basis.kind == Basis::MalmquistTakenaka) {
    // |phi_m phi_n| ~ 1/x^2 has no usable x-domain truncation; integrate in theta.
    // phi_m conj(phi_n) dx = i^(m-n) e^{i(m-n)theta} dtheta / (2 pi)
    double width = panel_width(cfg, 1.0, std::fabs(static_cast<double>(m - n)) + 1.0);
    for_each_node(-q_pi(), q_pi(), width, cfg, [&](Q th, Q w) {
      Q t = (m - n) * th;
      acc.add(CQ(cos(t), sin(t)) * w);
    });
    long d = (((m - n) % 4) + 4) % 4;
    CQ rot = d == 0 ? CQ(1) : d == 1 ? CQ(Q(0), Q(1)) : d == 2 ? CQ(-1) : CQ(Q(0), Q(-1));
    CQ v = rot * CQ(acc.real(), acc.imag()) / (2 * q_pi());
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
  }
  long lo = std::min(m, n), hi = std::max(m, n);
  Interval iv;
  double width;
  if (basis.kind == Basis::StretchedFourier) {
    iv = {Q(-basis.lambda), Q(basis.lambda)};
    width = panel_width(cfg, basis.lambda, basis_freq(basis, std::max(std::labs(m), std::labs(n))));
  } else {
    // Hermite functions are below e^-80 beyond sqrt(2n+1) + 13
    Q L = sqrt(Q(2 * hi + 1)) + 13;
    iv = {-L, L};
    width = panel_width(cfg, 1.0, basis_freq(basis, hi));
  }
  ConjBasis phi(basis, lo, hi);
  for_each_node(iv.a, iv.b, width, cfg, [&](Q x, Q w) {
    const auto& v = phi.at(x);
    CQ pm = v[m - lo], pn = v[n - lo];
    // v holds conjugates: phi_m = conj(v[m])
    acc.add(CQ(pm.real(), -pm.imag()) * pn * w);
  });
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double oracle_norm_squared(const WavePacket& wp, const QuadConfig& cfg) {
  check_config(cfg);
  Q L = sqrt(Q(-cfg.truncation_log_tol) / (2 * wp.alpha));
  double width = panel_width(cfg, 1.0 / std::sqrt(2 * wp.alpha), 2 * std::fabs(wp.omega));
  detail::KahanSum<Q> acc;
  const Q a = wp.alpha, x0 = wp.x0, w = wp.omega;
  for_each_node(x0 - L, x0 + L, width, cfg, [&](Q x, Q wt) {
    Q d = x - x0;
    Q f = exp(-a * d * d) * cos(w * x);
    acc.add(f * f * wt);
  });
  return static_cast<double>(acc.value());
}

LogMagPhase oracle_hermite_fourier(long n, std::complex<double> c, std::complex<double> p,
                                   const QuadConfig& cfg) {
  check_config(cfg);
  if (n < 0) throw DomainError("oracle_hermite_fourier: n must be >= 0");
  if (!(c.real() > 0)) throw DomainError("oracle_hermite_fourier: Re c must be > 0");
  CQ cq(Q(c.real()), Q(c.imag())), pq(Q(p.real()), Q(p.imag()));
  CQ inv2c = CQ(Q(1)) / (2 * cq);
  double r = static_cast<double>(inv2c.real());
  if (!(r > 0)) throw DomainError("oracle_hermite_fourier: Re(1/c) must be > 0");
  // smallest L where the integrand bound drops 100 e-folds below its peak
  auto logbound = [&](double x) {
    return -r * x * x + std::fabs(p.imag()) * x + n * std::log(2.0 * x + 2.0);
  };
  double peak = 0.0;
  for (double x = 0.0; x < 1e4; x += 0.25) peak = std::max(peak, logbound(x));
  double L = 1.0;
  while (logbound(L) > peak - 100.0) L += 0.25;
  double width = panel_width(cfg, 1.0 / std::sqrt(r), std::fabs(p.real()) + std::sqrt(2.0 * n + 1.0));
  ComplexKahan<Q> acc;
  for_each_node(Q(-L), Q(L), width, cfg, [&](Q x, Q w) {
    Q h0 = 1, h1 = 2 * x;
    Q hn = n == 0 ? h0 : h1;
    for (long k = 1; k < n; ++k) {
      Q h2 = 2 * x * h1 - 2 * k * h0;
      h0 = h1;
      h1 = h2;
      hn = h2;
    }
    CQ e = exp(-x * x * inv2c + CQ(Q(0), Q(1)) * pq * x);
    acc.add(e * hn * w);
  });
  CQ v = CQ(acc.real(), acc.imag()) / sqrt(2 * q_pi() * cq);
  return detail::to_lmp(v);
}

}  // namespace wavepack
