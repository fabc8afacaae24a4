#include "wavepack/hermite.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "quad.hpp"

namespace wavepack {

using detail::CQ;
using detail::Q;
using detail::q_pi;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfTol = 1e-14;

bool is_half(double alpha) { return std::fabs(alpha - 0.5) <= kHalfTol; }

// Streams q_n = s^n H_n(Z) / sqrt(2^n n!) from sz = s Z and s2 = s^2:
//   q_{n+1} = sz sqrt(2/(n+1)) q_n - s2 sqrt(n/(n+1)) q_{n-1}.
// The true value is q() * exp(log_scale()).
class ScaledHermite {
 public:
  ScaledHermite(CQ sz, CQ s2) : sz_(sz), s2_(s2) {}

  long index() const { return n_; }
  const CQ& q() const { return cur_; }
  const Q& log_scale() const { return scale_; }

  void advance() {
    Q n = n_;
    CQ next = sz_ * sqrt(2 / (n + 1)) * cur_ - s2_ * sqrt(n / (n + 1)) * prev_;
    prev_ = cur_;
    cur_ = next;
    ++n_;
    Q m = std::max(abs(cur_), abs(prev_));
    if (m > kBig || (m < kSmall && m > 0)) {
      cur_ /= m;
      prev_ /= m;
      scale_ += log(m);
    }
  }

 private:
  static inline const Q kBig = Q(1e300);
  static inline const Q kSmall = Q(1e-300);
  CQ sz_, s2_;
  CQ prev_ = CQ(0), cur_ = CQ(1);
  Q scale_ = 0;
  long n_ = 0;
};

// exp(i t) with t reduced in binary128.
CQ cis(Q t) {
  t = detail::q_wrap(t);
  return CQ(cos(t), sin(t));
}

// Coefficient stream a_n = exp(log_pre) Re[exp(i phase_pre) q_n exp(scale)].
class CoefficientStream {
 public:
  CoefficientStream(CQ sz, CQ s2, Q log_pre, Q phase_pre)
      : rec_(sz, s2), log_pre_(log_pre), rot_(cis(phase_pre)) {}

  long index() const { return rec_.index(); }

  LogMagPhase value() const {
    Q re = (rot_ * rec_.q()).real();
    return detail::real_to_lmp(re, log_pre_ + rec_.log_scale());
  }

  // The complex quantity whose real part is a_n.
  LogMagPhase complex_value() const { return detail::to_lmp(rot_ * rec_.q(), log_pre_ + rec_.log_scale()); }

  void advance() { rec_.advance(); }

 private:
  ScaledHermite rec_;
  Q log_pre_;
  CQ rot_;
};

// Regime-split parameters: s and Z with s Z = i c p and s^2 = 1 - 2c.
CoefficientStream regime_stream(const WavePacket& wp) {
  Q a = wp.alpha, x0 = wp.x0, w = wp.omega;
  Q k = sqrt(fabs(4 * a * a - 1));
  Q X = 2 * a * x0 / k, Y = w / k;
  CQ s, Z;
  if (a > Q(0.5)) {
    s = CQ(sqrt((2 * a - 1) / (2 * a + 1)));
    Z = CQ(X, Y);
  } else {
    s = CQ(Q(0), sqrt((1 - 2 * a) / (1 + 2 * a)));
    Z = CQ(Y, -X);
  }
  // prefactor pi^(1/4) sqrt(2/(1+2a)) exp(-(a x0^2 + w^2/2)/(1+2a)), phase 2 a w x0/(1+2a)
  Q log_pre = log(q_pi()) / 4 + log(2 / (1 + 2 * a)) / 2 - (a * x0 * x0 + w * w / 2) / (1 + 2 * a);
  Q phase = 2 * a * w * x0 / (1 + 2 * a);
  return CoefficientStream(s * Z, s * s, log_pre, phase);
}

CoefficientStream unified_stream(const WavePacket& wp) {
  Q a = wp.alpha;
  CQ c = CQ(1 / (1 + 2 * a));
  CQ p(Q(wp.omega), -2 * a * Q(wp.x0));
  CQ e = -c * p * p / 2;
  Q log_pre = -log(q_pi()) / 4 + log(2 * q_pi() / (1 + 2 * a)) / 2 - a * Q(wp.x0) * Q(wp.x0) + e.real();
  return CoefficientStream(CQ(Q(0), Q(1)) * c * p, 1 - 2 * c, log_pre, e.imag());
}

CoeffSeries collect(CoefficientStream st, long n_min, long n_max, bool complex_part = false) {
  if (n_min < 0 || n_max < n_min) throw DomainError("hermite: need 0 <= n_min <= n_max");
  CoeffSeries s;
  s.basis = BasisId::hermite();
  s.n_min = n_min;
  s.method = Method::ClosedForm;
  s.values.reserve(n_max - n_min + 1);
  while (st.index() < n_min) st.advance();
  for (long n = n_min; n <= n_max; ++n) {
    s.values.push_back(complex_part ? st.complex_value() : st.value());
    if (n < n_max) st.advance();
  }
  return s;
}

double log_abs_ratio(double a) { return std::log(std::fabs((2 * a - 1) / (2 * a + 1))); }

}  // namespace

HermiteClosedForm hermite_closed_form(const WavePacket& wp) {
  HermiteClosedForm f;
  double a = wp.alpha;
  f.regime = is_half(a) ? HermiteRegime::AlphaHalf
             : a > 0.5  ? HermiteRegime::AlphaAboveHalf
                        : HermiteRegime::AlphaBelowHalf;
  if (f.regime != HermiteRegime::AlphaHalf) {
    double k = std::sqrt(std::fabs(4 * a * a - 1));
    f.X = 2 * a * wp.x0 / k;
    f.Y = wp.omega / k;
  }
  double lp = 0.25 * std::log(kPi) + 0.5 * std::log(2 / (1 + 2 * a)) -
              (a * wp.x0 * wp.x0 + wp.omega * wp.omega / 2) / (1 + 2 * a);
  f.prefactor = LogMagPhase(lp, 2 * a * wp.omega * wp.x0 / (1 + 2 * a));
  return f;
}

double hermite_basis(long n, double x) {
  if (n < 0) throw DomainError("hermite_basis: n must be >= 0");
  // scaled recurrence so exp(-x^2/2) underflow does not zero large-n values
  double log_scale = -x * x / 2 - 0.25 * std::log(kPi);
  double prev = 0.0, cur = 1.0;
  for (long k = 0; k < n; ++k) {
    double next = x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
    double m = std::max(std::fabs(cur), std::fabs(prev));
    if (m > 1e100) {
      cur /= m;
      prev /= m;
      log_scale += std::log(m);
    }
  }
  return cur * std::exp(log_scale);
}

LogMagPhase hermite_H(long n, cd z) {
  if (n < 0) throw DomainError("hermite_H: n must be >= 0");
  ScaledHermite rec(CQ(Q(z.real()), Q(z.imag())), CQ(1));
  while (rec.index() < n) rec.advance();
  Q lognorm = (Q(n) * log(Q(2)) + lgamma(Q(n + 1))) / 2;
  return detail::to_lmp(rec.q(), rec.log_scale() + lognorm);
}

LogMagPhase hermite_H_fourier(long n, cd c, cd p) {
  if (n < 0) throw DomainError("hermite_H_fourier: n must be >= 0");
  if (!(c.real() > 0)) throw DomainError("hermite_H_fourier: Re c must be > 0");
  CQ cq(Q(c.real()), Q(c.imag())), pq(Q(p.real()), Q(p.imag()));
  CQ iu(Q(0), Q(1));
  if (std::abs(c - 0.5) <= kHalfTol) {
    if (n > 0 && p == 0.0) return LogMagPhase::zero();
    CQ lg = -pq * pq / 4 + (n > 0 ? CQ(Q(n)) * log(iu * pq) : CQ(0));
    Q ph = detail::q_wrap(lg.imag());
    return LogMagPhase(static_cast<double>(lg.real()), static_cast<double>(ph));
  }
  ScaledHermite rec(iu * cq * pq, 1 - 2 * cq);
  while (rec.index() < n) rec.advance();
  CQ e = -cq * pq * pq / 2;
  Q lognorm = (Q(n) * log(Q(2)) + lgamma(Q(n + 1))) / 2;
  CQ v = rec.q() * cis(e.imag());
  return detail::to_lmp(v, rec.log_scale() + lognorm + e.real());
}

LogMagPhase hermite_alpha_half(const WavePacket& wp, long n) {
  if (!is_half(wp.alpha)) throw DomainError("hermite_alpha_half: alpha must be 1/2");
  if (n < 0) throw DomainError("hermite_alpha_half: n must be >= 0");
  Q x0 = wp.x0, w = wp.omega;
  Q r2 = x0 * x0 + w * w;
  if (n > 0 && r2 == 0) return LogMagPhase::zero();
  // atan2 keeps the quadrant when x0 < 0; the printed arctan(omega/x0) does not
  Q c;
  if (x0 == 0) {
    // theta = n pi / 2 exactly, so odd n vanish
    static const int quarter[4] = {1, 0, -1, 0};
    c = quarter[n % 4];
  } else {
    Q theta = w * x0 / 2 + Q(n) * atan2(w, x0);
    c = cos(detail::q_wrap(theta));
  }
  if (c == 0) return LogMagPhase::zero();
  Q lm = log(q_pi()) / 4 - (Q(n) * log(Q(2)) + lgamma(Q(n + 1))) / 2 - r2 / 4;
  if (n > 0) lm += Q(n) * log(r2) / 2;
  return detail::real_to_lmp(c, lm);
}

CoeffSeries hermite_coefficients(const WavePacket& wp, long n_min, long n_max) {
  if (is_half(wp.alpha)) {
    if (n_min < 0 || n_max < n_min) throw DomainError("hermite: need 0 <= n_min <= n_max");
    CoeffSeries s;
    s.basis = BasisId::hermite();
    s.n_min = n_min;
    s.method = Method::ClosedForm;
    for (long n = n_min; n <= n_max; ++n) s.values.push_back(hermite_alpha_half(wp, n));
    return s;
  }
  return collect(regime_stream(wp), n_min, n_max);
}

CoeffSeries hermite_coefficients_unified(const WavePacket& wp, long n_min, long n_max) {
  return collect(unified_stream(wp), n_min, n_max);
}

CoeffSeries hermite_complex_coefficients(const WavePacket& wp, long n_min, long n_max) {
  if (is_half(wp.alpha)) {
    if (n_min < 0 || n_max < n_min) throw DomainError("hermite: need 0 <= n_min <= n_max");
    CoeffSeries s;
    s.basis = BasisId::hermite();
    s.n_min = n_min;
    s.method = Method::ClosedForm;
    Q x0 = wp.x0, w = wp.omega, r2 = x0 * x0 + w * w;
    for (long n = n_min; n <= n_max; ++n) {
      if (n > 0 && r2 == 0) {
        s.values.push_back(LogMagPhase::zero());
        continue;
      }
      Q lm = log(q_pi()) / 4 - (Q(n) * log(Q(2)) + lgamma(Q(n + 1))) / 2 - r2 / 4;
      if (n > 0) lm += Q(n) * log(r2) / 2;
      Q theta = detail::q_wrap(w * x0 / 2 + Q(n) * atan2(w, x0));
      s.values.emplace_back(static_cast<double>(lm), static_cast<double>(theta));
    }
    return s;
  }
  return collect(regime_stream(wp), n_min, n_max, true);
}

HermiteSaddle hermite_saddle(long n, cd zeta) {
  if (n < 0) throw DomainError("hermite_saddle: n must be >= 0");
  HermiteSaddle s;
  s.nu = std::sqrt(2.0 * n + 1.0);
  s.zeta = zeta;
  cd root = cd(0, 1) * std::sqrt(1.0 - zeta * zeta);
  s.w_plus = 0.5 * (zeta + root);
  s.w_minus = 0.5 * (zeta - root);
  s.w_star = std::abs(s.w_minus) <= std::abs(s.w_plus) ? s.w_minus : s.w_plus;
  const cd w = s.w_star;
  s.phi_at = w * w - 2.0 * zeta * w + 0.5 * std::log(w);
  s.phi2_at = 2.0 - 1.0 / (2.0 * w * w);
  s.residual = std::abs(2.0 * w - 2.0 * zeta + 1.0 / (2.0 * w));
  return s;
}

HermiteSaddle hermite_saddle(const WavePacket& wp, long n) {
  if (is_half(wp.alpha)) throw DomainError("hermite_saddle: X, Y undefined at alpha = 1/2");
  HermiteClosedForm f = hermite_closed_form(wp);
  double nu = std::sqrt(2.0 * n + 1.0);
  cd zeta = f.regime == HermiteRegime::AlphaAboveHalf ? cd(f.X, f.Y) / nu : cd(f.Y, -f.X) / nu;
  return hermite_saddle(n, zeta);
}

LogMagPhase hermite_saddle_Hn(const HermiteSaddle& s, long n) {
  // n!/nu^(n+1) (2 pi i)^(-1) exp(-nu^2 phi) w^(-1/2) (2 pi / phi'')^(1/2)
  const double nu = s.nu;
  cd lg = std::lgamma(n + 1.0) - (n + 1.0) * std::log(nu) - std::log(2.0 * kPi * cd(0, 1)) -
          nu * nu * s.phi_at - 0.5 * std::log(s.w_star) + 0.5 * std::log(2.0 * kPi / s.phi2_at);
  return LogMagPhase::from_log(lg);
}

double hermite_critical_c(double alpha) {
  if (!(alpha > 0 && alpha < 0.5)) throw DomainError("hermite_critical_c: needs 0 < alpha < 1/2");
  return 1.0 / (2.0 * (1.0 - 4.0 * alpha * alpha));
}

namespace {

EstimateValue above_half(double a, double x0, double w, long n) {
  const double c = n / (w * w), K = 4 * a * a - 1, S = std::sqrt(1 + 2 * c * K);
  double core = -0.5 * std::log(w * (2 * a + 1)) + 0.25 * std::log(K / (1 + 2 * c * K)) +
                n * std::log((1 + S) / (std::sqrt(2 * c) * (2 * a + 1))) +
                0.5 * std::log((1 + S) / std::sqrt(2 * c * K)) - w * w / (2 * (2 * a + 1)) +
                n / (1 + S) + a * x0 * x0 / K * (1 - 2 * a / S);
  cd mod = 1.0 + cd(0, 1) * a * x0 / (w * (1 + 2 * c * K));
  double theta = std::fmod(static_cast<double>(n % 4) * kPi / 2, 2 * kPi) -
                 2 * a * x0 * w * (-2 * a + S) / K +
                 x0 * a * (-3 + 6 * c + 8 * c * a * a * (x0 * x0 - 3)) / (3 * w * S * S * S);
  EstimateValue e;
  e.envelope = LogMagPhase(core + std::log(std::abs(mod)), 0.0);
  e.value = (LogMagPhase(core, 0.0) * LogMagPhase::from_complex(mod) * LogMagPhase(0.0, theta)).real_part();
  return e;
}

EstimateValue below_half_noncritical(double a, double x0, double w, long n) {
  const double c = n / (w * w), K = std::fabs(1 - 4 * a * a);
  const cd I(0, 1);
  const cd D = 2 * c * K - 1;
  const cd sD = std::sqrt(D);
  const cd s1 = std::sqrt(cd(1 - 2 * c * K));
  cd lv = -0.5 * std::log(w * (1 + 2 * a)) + (n / 2.0) * log_abs_ratio(a) + 0.25 * std::log(K / D) +
          std::log(1.0 - I * a * x0 / (w * D)) +
          (n + 0.5) * std::log((1.0 + s1) / std::sqrt(2 * c * K)) +
          a / K * (w * w - x0 * x0 + 2 * x0 * w * sD) +
          a * x0 * (8 * a * a * x0 * x0 * c + 6 * c * K - 3) / (3 * w * D * sD) +
          I * (std::fmod((n + 0.5) * kPi / 2, 2 * kPi) - 4 * a * a * x0 * w / K +
               w * w / (2 * K) * sD + 2 * a * a * x0 * x0 / (K * sD));
  EstimateValue e;
  e.envelope = LogMagPhase(lv.real(), 0.0);
  e.value = (-LogMagPhase::from_log(lv)).real_part();
  return e;
}

EstimateValue below_half_critical(double a, double x0, double w, long n) {
  if (x0 == 0.0) throw RegimeError("hermite_estimate: critical branch is singular at x0 = 0");
  const double K = std::fabs(1 - 4 * a * a);
  const cd I(0, 1);
  const cd ax = a * x0;  // complex so negative x0 takes principal powers
  const cd i74 = std::polar(1.0, 7 * kPi / 8), i12 = std::polar(1.0, kPi / 4),
           i32 = std::polar(1.0, 3 * kPi / 4);
  cd lpre = I * kPi + 0.25 * std::log(2.0 * n) - 0.5 * std::log(1 + 2 * a) +
            (n / 2.0) * log_abs_ratio(a) + std::log(i74 * K / std::sqrt(2.0)) - 0.25 * std::log(ax) -
            0.75 * std::log(w) + std::log(1.0 - (4 * a * a * x0 * x0 + K) / (16.0 * I * ax * w));
  cd ex = I * kPi / 4.0 - a * x0 * x0 / K + (I * kPi + 4 * a) * w * w / (4 * K) -
          4.0 * I * a * a * x0 * w / K + 8.0 * i12 * std::pow(ax, 1.5) * std::sqrt(w) / (3 * K) -
          i32 / (5 * std::sqrt(w)) * (5.0 * std::sqrt(ax) + 4.0 * std::pow(ax, 2.5) / K);
  cd lv = lpre + ex;
  lv = cd(lv.real(), wrap_phase(lv.imag()));
  EstimateValue e;
  e.envelope = LogMagPhase(lv.real(), 0.0);
  e.value = LogMagPhase::from_log(lv).real_part();
  return e;
}

}  // namespace

EstimateValue hermite_estimate(const WavePacket& wp, long n, const HermiteEstimateOptions& opt) {
  if (n < 1) throw DomainError("hermite_estimate: n must be >= 1");
  if (wp.omega == 0.0) throw DomainError("hermite_estimate: omega must be nonzero");
  const double a = wp.alpha, x0 = wp.x0, w = std::fabs(wp.omega);
  EstimateValue e;
  if (is_half(a)) {
    LogMagPhase v = hermite_alpha_half(WavePacket(a, x0, w), n);
    double r2 = x0 * x0 + w * w;
    double lm = 0.25 * std::log(kPi) - 0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0)) +
                0.5 * n * std::log(r2) - r2 / 4;
    e.envelope = LogMagPhase(lm, 0.0);
    e.value = v;
    e.note = "alpha = 1/2: exact closed form";
  } else if (a > 0.5) {
    e = above_half(a, x0, w, n);
  } else {
    const double c = n / (w * w), cstar = hermite_critical_c(a);
    const double K = 1 - 4 * a * a;
    const double rel = std::fabs(c / cstar - 1);
    HermiteBranch br = opt.branch;
    if (br == HermiteBranch::Auto) br = rel < opt.critical_band ? HermiteBranch::Critical : HermiteBranch::NonCritical;
    if (br == HermiteBranch::NonCritical) {
      if (opt.branch == HermiteBranch::NonCritical && c * K <= 0.5)
        throw RegimeError("hermite_estimate: non-critical branch needs c|1-4a^2| > 1/2");
      e = below_half_noncritical(a, x0, w, n);
      if (c * K < 0.5) e.note = "continued below c* on principal branches";
      if (rel < 2 * opt.critical_band) {
        e.valid = false;
        std::ostringstream os;
        os << "near c*: critical branch log10 envelope ";
        try {
          os << below_half_critical(a, x0, w, n).envelope.log10_abs();
        } catch (const Error&) {
          os << "unavailable";
        }
        e.note = os.str();
      }
    } else {
      e = below_half_critical(a, x0, w, n);
      e.note = "critical branch";
      if (rel >= opt.critical_band) e.valid = false;
    }
  }
  if (n < 10 || w < 10) {
    e.valid = false;
    if (e.note.empty()) e.note = "n < 10 or omega < 10";
  }
  return e;
}

HermiteCount hermite_count_detail(const WavePacket& wp, double epsilon) {
  if (!(epsilon > 0 && epsilon < 1)) throw DomainError("hermite_count: epsilon must be in (0, 1)");
  const double leps = std::log(epsilon);
  const double w = std::fabs(wp.omega);
  const long run_needed = static_cast<long>(std::max(100.0, w));
  double n_peak = w * w / 2;
  if (!is_half(wp.alpha) && wp.alpha < 0.5) n_peak = std::max(n_peak, hermite_critical_c(wp.alpha) * w * w);
  const long cap = 10'000'000;

  HermiteCount r;
  double best = -std::numeric_limits<double>::infinity();
  long run = 0;
  auto visit = [&](long n, const LogMagPhase& v) {
    r.scanned = n + 1;
    if (!v.is_zero() && v.log_mag > best) {
      best = v.log_mag;
      r.argmax = n;
    }
    if (!v.is_zero() && v.log_mag > leps) {
      ++r.count;
      if (r.first < 0) r.first = n;
      r.last = n;
      run = 0;
    } else {
      ++run;
    }
  };
  auto done = [&](long n) {
    if (n <= n_peak || run < run_needed) return false;
    if (w < 10 || n < 10) return true;
    try {
      EstimateValue e = hermite_estimate(wp, n);
      return e.envelope.log_mag < leps;
    } catch (const Error&) {
      return true;
    }
  };

  if (is_half(wp.alpha)) {
    for (long n = 0; n < cap; ++n) {
      visit(n, hermite_alpha_half(wp, n));
      if (done(n)) break;
    }
    return r;
  }
  CoefficientStream st = regime_stream(wp);
  for (long n = 0; n < cap; ++n) {
    visit(n, st.value());
    if (done(n)) break;
    st.advance();
  }
  return r;
}

long hermite_count(const WavePacket& wp, double epsilon) { return hermite_count_detail(wp, epsilon).count; }

double hermite_crude_count(const WavePacket& wp, double epsilon, double c_n_omega, double D, double C) {
  const double a = wp.alpha, K = 4 * a * a - 1;
  const double S = std::sqrt(1 + 2 * c_n_omega * K);
  return D * (std::log(std::fabs(epsilon)) +
              std::log(std::fabs(std::sqrt(2 * a + 1) / (C * std::pow(c_n_omega, 0.25)))) -
              std::fabs(a * wp.x0 * wp.x0 / K * (1 - 2 * a / S)));
}

}  // namespace wavepack
