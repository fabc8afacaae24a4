#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include "wavepack/hermite.hpp"
#include "wavepack/mt.hpp"
#include "wavepack/oracle.hpp"
#include "wavepack/stretched_fourier.hpp"

namespace wavepack::cli {

namespace {

using nlohmann::json;

constexpr double kDefaultEpsilon = 1e-20;
constexpr double kPi = 3.14159265358979323846;

// A table whose cells are numbers, strings or null. CSV and JSON are both
// rendered from it so the two formats never drift apart.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.get<std::string>();
}

// nlohmann writes NaN and infinities as null, which loses the sign of -inf.
json num(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

void write_csv(const Table& t, std::ostream& os) {
  for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& r : t.rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
    os << '\n';
  }
}

json table_records(const Table& t) {
  json arr = json::array();
  for (const auto& r : t.rows) {
    json o = json::object();
    for (size_t i = 0; i < r.size(); ++i) o[t.columns[i]] = r[i];
    arr.push_back(std::move(o));
  }
  return arr;
}

long pow2_at_least(double v) {
  long p = 1;
  while (static_cast<double>(p) < v) p *= 2;
  return p;
}

void parallel_for(long count, const std::function<void(long)>& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(thread_cap(), static_cast<unsigned>(std::max(1L, count))));
  if (workers == 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (long i = next++; i < count && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

Basis parse_basis(const std::string& s) {
  if (s == "sf") return Basis::StretchedFourier;
  if (s == "hermite") return Basis::Hermite;
  if (s == "mt") return Basis::MalmquistTakenaka;
  throw UsageError("unknown basis '" + s + "' (expected sf, hermite or mt)");
}

std::string basis_key(Basis b) {
  switch (b) {
    case Basis::StretchedFourier: return "sf";
    case Basis::Hermite: return "hermite";
    default: return "mt";
  }
}

Method parse_method(const std::string& s, Basis b) {
  if (s.empty()) return b == Basis::Hermite ? Method::ClosedForm : Method::FFT;
  Method m;
  if (s == "fft")
    m = Method::FFT;
  else if (s == "closed-form")
    m = Method::ClosedForm;
  else if (s == "oracle")
    m = Method::Oracle;
  else if (s == "estimate")
    m = Method::Estimate;
  else
    throw UsageError("unknown method '" + s + "'");
  if (b == Basis::Hermite && m == Method::FFT) throw UsageError("hermite has no fft method; use closed-form");
  if (b != Basis::Hermite && m == Method::ClosedForm)
    throw UsageError("closed-form is only available for hermite");
  return m;
}

std::string method_key(Method m) {
  switch (m) {
    case Method::FFT: return "fft";
    case Method::ClosedForm: return "closed-form";
    case Method::Oracle: return "oracle";
    default: return "estimate";
  }
}

double epsilon_of(const RunConfig& c) {
  double e = c.epsilon.value_or(kDefaultEpsilon);
  if (!(e > 0 && e < 1)) throw UsageError("--epsilon must lie in (0, 1)");
  return e;
}

void check_common(const RunConfig& c) {
  if (!(c.alpha > 0) || !std::isfinite(c.alpha)) throw UsageError("--alpha must be positive");
  if (!std::isfinite(c.x0) || !std::isfinite(c.omega)) throw UsageError("--x0 and --omega must be finite");
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
  if (c.lambda && !(*c.lambda > 0)) throw UsageError("--lambda must be positive");
  if (c.fft_size && (*c.fft_size < 8 || (*c.fft_size & (*c.fft_size - 1))))
    throw UsageError("--fft-size must be a power of two >= 8");
  if (c.n_min && c.n_max && *c.n_min > *c.n_max) throw UsageError("--nmin exceeds --nmax");
  if (!(c.calib_c > 0)) throw UsageError("--calib-c must be positive");
}

// One coefficient row. value is the coefficient itself, or the estimate when
// envelope is set.
struct Coef {
  long n = 0;
  LogMagPhase value;
  std::optional<LogMagPhase> envelope;
  std::string flag;
};

struct Series {
  std::vector<Coef> coefs;
  Method method = Method::FFT;
  json meta = json::object();
};

Series from_coeffs(const CoeffSeries& s) {
  Series out;
  out.method = s.method;
  for (long n = s.n_min; n <= s.n_max(); ++n) {
    Coef c;
    c.n = n;
    c.value = s.at(n);
    size_t i = static_cast<size_t>(n - s.n_min);
    if (i < s.flagged.size() && s.flagged[i]) c.flag = "flagged";
    out.coefs.push_back(c);
  }
  return out;
}

Precision precision_of(const RunConfig& c) { return c.extended ? Precision::Extended : Precision::Double; }

// Stretched Fourier set-up shared by coeffs, compare and the figures.
struct SFPlan {
  SFParams params;
  long n_min = 0, n_max = 0;
};

SFPlan plan_sf(const RunConfig& c, const WavePacket& wp, double eps) {
  SFPlan p;
  p.params.lambda = c.lambda ? *c.lambda : lambda_optimal(c.alpha, c.x0, eps);
  if (c.fft_size) {
    p.params.n_modes = static_cast<int>(*c.fft_size);
    p.n_min = c.n_min.value_or(-*c.fft_size / 2);
    p.n_max = c.n_max.value_or(*c.fft_size / 2 - 1);
    return p;
  }
  auto pred = sf_count_predict(c.alpha, c.x0, c.omega, eps);
  long K = static_cast<long>(std::ceil(1.25 * pred.max_n)) + 32;
  p.n_min = c.n_min.value_or(-K);
  p.n_max = c.n_max.value_or(K);
  long reach = std::max(std::labs(p.n_min), std::labs(p.n_max) + 1);
  long N = pow2_at_least(std::max<double>(256, 2.0 * reach));
  // keep at least four samples per period of cos(omega x)
  const double h_max = (2 * kPi / std::max(std::fabs(wp.omega), 1e-300)) / 4;
  while (2.0 * p.params.lambda / (p.params.oversample * static_cast<double>(N)) > h_max) N *= 2;
  p.params.n_modes = static_cast<int>(N);
  return p;
}

struct MTPlan {
  long M = 0, n_min = 0, n_max = 0;
};

MTPlan plan_mt(const RunConfig& c, const WavePacket& wp, double eps) {
  MTPlan p;
  p.M = c.fft_size ? *c.fft_size : mt_fft_size(wp);
  long upper = std::max(256L, static_cast<long>(std::ceil(mt_count_predict(wp, eps, 1.0))) + 64);
  p.n_min = c.n_min.value_or(0);
  p.n_max = c.n_max.value_or(std::min(upper, p.M / 2 - 1));
  if (!c.fft_size)
    while (p.n_min < -p.M / 2 || p.n_max > p.M / 2 - 1) p.M *= 2;
  return p;
}

long hermite_default_nmax(const WavePacket& wp, double eps) {
  auto d = hermite_count_detail(wp, eps);
  return std::max(100L, d.last + 100);
}

Series oracle_rows(const WavePacket& wp, const BasisId& id, long n_min, long n_max) {
  return from_coeffs(oracle_series(wp, id, n_min, n_max));
}

// Per-index estimates. Errors that mean "outside the formula's window" become
// flagged rows; anything else propagates.
Series estimate_rows(long n_min, long n_max, const std::function<EstimateValue(long)>& f) {
  Series s;
  s.method = Method::Estimate;
  s.coefs.resize(static_cast<size_t>(n_max - n_min + 1));
  parallel_for(n_max - n_min + 1, [&](long i) {
    Coef& c = s.coefs[static_cast<size_t>(i)];
    c.n = n_min + i;
    try {
      EstimateValue e = f(c.n);
      c.value = e.value;
      c.envelope = e.envelope;
      if (!e.valid) c.flag = "invalid";
    } catch (const OutOfRegime&) {
      c.value = LogMagPhase(std::nan(""), 0.0);
      c.envelope = c.value;
      c.flag = "out_of_regime";
    } catch (const RegimeError&) {
      c.value = LogMagPhase(std::nan(""), 0.0);
      c.envelope = c.value;
      c.flag = "regime_error";
    }
  });
  return s;
}

Series compute(const RunConfig& c, Basis b, Method m) {
  const WavePacket wp(c.alpha, c.x0, c.omega);
  const double eps = epsilon_of(c);
  Series s;
  json meta = json::object();
  switch (b) {
    case Basis::StretchedFourier: {
      SFPlan p = plan_sf(c, wp, eps);
      meta["lambda"] = p.params.lambda;
      meta["n_modes"] = p.params.n_modes;
      if (m == Method::FFT)
        s = from_coeffs(sf_coefficients(wp, p.params, p.n_min, p.n_max, precision_of(c)));
      else if (m == Method::Oracle)
        s = oracle_rows(wp, BasisId::stretched_fourier(p.params.lambda), p.n_min, p.n_max);
      else
        s = estimate_rows(p.n_min, p.n_max, [&](long n) {
          double v = sf_bound(wp, p.params.lambda, n);
          EstimateValue e;
          e.envelope = LogMagPhase::from_real(v);
          e.value = e.envelope;
          return e;
        });
      break;
    }
    case Basis::Hermite: {
      long lo = c.n_min.value_or(m == Method::Estimate ? 10 : 0);
      long hi = c.n_max ? *c.n_max : hermite_default_nmax(wp, eps);
      if (lo < 0) throw UsageError("hermite indices start at 0");
      if (lo > hi) throw UsageError("empty index range");
      if (m == Method::ClosedForm)
        s = from_coeffs(hermite_coefficients(wp, lo, hi));
      else if (m == Method::Oracle)
        s = oracle_rows(wp, BasisId::hermite(), lo, hi);
      else
        s = estimate_rows(lo, hi, [&](long n) { return hermite_estimate(wp, n); });
      break;
    }
    case Basis::MalmquistTakenaka: {
      MTPlan p = plan_mt(c, wp, eps);
      if (m == Method::Estimate && !c.n_min)
        p.n_min = std::min(p.n_max, static_cast<long>(std::ceil(0.27 * std::fabs(c.omega))));
      if (p.n_min > p.n_max) throw UsageError("empty index range");
      meta["fft_size"] = p.M;
      if (m == Method::FFT)
        s = from_coeffs(mt_transform(wp, p.n_min, p.n_max, p.M, precision_of(c)));
      else if (m == Method::Oracle)
        s = oracle_rows(wp, BasisId::mt(), p.n_min, p.n_max);
      else
        s = estimate_rows(p.n_min, p.n_max, [&](long n) { return mt_estimate(wp, n); });
      break;
    }
  }
  s.method = m;
  s.meta = meta;
  return s;
}

void append_rows(Table& t, const Series& s, const std::string& series_name, bool with_envelope) {
  for (const auto& c : s.coefs) {
    std::vector<json> r;
    if (!series_name.empty()) r.push_back(series_name);
    auto z = c.value.to_complex();
    r.push_back(c.n);
    r.push_back(num(z.real()));
    r.push_back(num(z.imag()));
    r.push_back(num(c.value.log10_abs()));
    r.push_back(method_key(s.method));
    r.push_back(c.flag);
    if (with_envelope) r.push_back(c.envelope ? num(c.envelope->log10_abs()) : json(nullptr));
    t.rows.push_back(std::move(r));
  }
}

Table coeff_table(bool with_series, bool with_envelope) {
  Table t;
  if (with_series) t.columns.push_back("series");
  for (const char* k : {"n", "re", "im", "log10_abs", "method", "flag"}) t.columns.push_back(k);
  if (with_envelope) t.columns.push_back("log10_envelope");
  return t;
}

void require_unflagged(const Table& t, const RunConfig& c) {
  if (c.allow_flagged) return;
  auto it = std::find(t.columns.begin(), t.columns.end(), "flag");
  if (it == t.columns.end()) return;
  size_t col = static_cast<size_t>(it - t.columns.begin());
  long count = 0;
  for (const auto& r : t.rows)
    if (!r[col].get<std::string>().empty()) ++count;
  if (count)
    throw FlaggedError(std::to_string(count) + " row(s) are flagged; pass --allow-flagged to emit them");
}

void emit_table(const Table& t, const RunConfig& c, std::ostream& out) {
  if (c.format == "json")
    out << table_records(t).dump(1) << '\n';
  else
    write_csv(t, out);
}

// Coefficient statistics over the computed range, as reported by compare.
struct Stats {
  long count = 0;
  long peak_n = 0;
  double peak_log10 = -std::numeric_limits<double>::infinity();
};

Stats stats_of(const Series& s, double eps) {
  Stats st;
  const double leps = std::log10(eps);
  for (const auto& c : s.coefs) {
    if (c.n < 0) continue;
    double l = c.value.log10_abs();
    if (l > leps) ++st.count;
    if (l > st.peak_log10) {
      st.peak_log10 = l;
      st.peak_n = c.n;
    }
  }
  return st;
}

// Below this relative level FFT output is rounding noise.
double relative_noise(Method m, bool extended) {
  if (m != Method::FFT) return 0.0;
  return extended ? 1e-31 : 1e-15;
}

json predict_json(const RunConfig& c, Basis b) {
  const WavePacket wp(c.alpha, c.x0, c.omega);
  const double eps = epsilon_of(c);
  json j = json::object();
  j["basis"] = basis_key(b);
  j["epsilon"] = eps;
  switch (b) {
    case Basis::StretchedFourier: {
      double lam = c.lambda ? *c.lambda : lambda_optimal(c.alpha, c.x0, eps);
      auto p = sf_count_predict(c.alpha, c.x0, c.omega, eps);
      j["lambda"] = lam;
      j["lambda_optimal"] = lambda_optimal(c.alpha, c.x0, eps);
      j["predicted_count"] = p.count_width;
      j["predicted_max_n"] = p.max_n;
      j["predicted_peak"] = std::fabs(c.omega) * lam / kPi;
      break;
    }
    case Basis::Hermite:
      j["predicted_count"] = nullptr;
      j["predicted_peak"] = c.omega * c.omega / 2;
      if (c.alpha < 0.5 && std::fabs(c.alpha - 0.5) > 1e-15) {
        double cs = hermite_critical_c(c.alpha);
        j["critical_c"] = cs;
        j["critical_n"] = cs * c.omega * c.omega;
      }
      break;
    case Basis::MalmquistTakenaka:
      j["predicted_count"] = mt_count_predict(wp, eps, c.calib_c);
      j["predicted_peak"] = mt_peak_predict(wp);
      j["calib_c"] = c.calib_c;
      j["fft_size"] = mt_fft_size(wp);
      break;
  }
  return j;
}

int cmd_predict(const RunConfig& c, std::ostream& out) {
  json j = predict_json(c, parse_basis(c.basis));
  if (c.format == "json") {
    out << j.dump(1) << '\n';
  } else {
    out << "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << ',' << csv_cell(it.value()) << '\n';
  }
  return kOk;
}

int cmd_compare_bases(const RunConfig& c, std::ostream& out) {
  const double eps = epsilon_of(c);
  const std::vector<Basis> bases = {Basis::StretchedFourier, Basis::Hermite, Basis::MalmquistTakenaka};
  std::vector<json> results(bases.size());
  parallel_for(static_cast<long>(bases.size()), [&](long i) {
    Basis b = bases[static_cast<size_t>(i)];
    RunConfig sub = c;
    sub.basis = basis_key(b);
    // thresholds below double resolution need binary128 transforms
    if (eps < 1e-13) sub.extended = true;
    if (b == Basis::MalmquistTakenaka && !c.n_min) {
      const WavePacket wp(c.alpha, c.x0, c.omega);
      long M = c.fft_size ? *c.fft_size : mt_fft_size(wp);
      sub.n_min = 0;
      if (!c.n_max) sub.n_max = M / 2 - 1;
    }
    Series s = compute(sub, b, parse_method("", b));
    Stats st = stats_of(s, eps);
    json p = predict_json(sub, b);
    json r = json::object();
    r["basis"] = basis_key(b);
    r["method"] = method_key(s.method);
    r["n_min"] = s.coefs.empty() ? 0 : s.coefs.front().n;
    r["n_max"] = s.coefs.empty() ? -1 : s.coefs.back().n;
    r["count"] = st.count;
    r["peak_index"] = st.peak_n;
    r["peak_log10_abs"] = num(st.peak_log10);
    double noise = relative_noise(s.method, sub.extended);
    double floor_log10 = noise > 0 ? st.peak_log10 + std::log10(noise) : -std::numeric_limits<double>::infinity();
    r["noise_floor_log10"] = num(floor_log10);
    r["count_reliable"] = std::log10(eps) > floor_log10;
    r["predicted_count"] = p["predicted_count"];
    r["predicted_peak"] = p["predicted_peak"];
    for (auto it = s.meta.begin(); it != s.meta.end(); ++it) r[it.key()] = it.value();
    results[static_cast<size_t>(i)] = r;
  });
  json j = json::object();
  j["alpha"] = c.alpha;
  j["x0"] = c.x0;
  j["omega"] = c.omega;
  j["epsilon"] = eps;
  j["bases"] = results;
  if (c.format == "json") {
    out << j.dump(1) << '\n';
  } else {
    Table t;
    t.columns = {"basis", "method", "n_min", "n_max", "count", "peak_index", "peak_log10_abs",
                 "predicted_count", "predicted_peak", "noise_floor_log10", "count_reliable"};
    for (const auto& r : results) {
      std::vector<json> row;
      for (const auto& k : t.columns) row.push_back(r[k]);
      t.rows.push_back(std::move(row));
    }
    write_csv(t, out);
  }
  return kOk;
}

// Figure recipes. Each returns the table and a metadata object.
struct Figure {
  std::string id;
  std::string description;
  std::function<void(Table&, json&)> build;
};

Series sf_series(const WavePacket& wp, double lambda, int N) {
  SFParams p;
  p.lambda = lambda;
  p.n_modes = N;
  return from_coeffs(sf_coefficients(wp, p, -N / 2, N / 2 - 1));
}

RealFunction algebraic(std::function<double(double)> f) { return {std::move(f), Decay::algebraic(4.0)}; }

const std::vector<Figure>& figures() {
  static const std::vector<Figure> all = {
      {"1.3",
       "Hermite coefficients of the wave packet alpha=2, x0=1, omega=100 for n = 0..8200 from the "
       "log-domain closed form, with the counts of |a_n| above 1e-20, 1e-30 and 1e-40.",
       [](Table& t, json& meta) {
         const WavePacket wp(2, 1, 100);
         Series s = from_coeffs(hermite_coefficients(wp, 0, 8200));
         s.method = Method::ClosedForm;
         append_rows(t, s, "hermite", false);
         const std::pair<const char*, double> levels[] = {{"1e-20", 1e-20}, {"1e-30", 1e-30}, {"1e-40", 1e-40}};
         for (auto [label, e] : levels) meta[std::string("count_") + label] = stats_of(s, e).count;
         meta["peak_index"] = stats_of(s, 1e-20).peak_n;
       }},
      {"2.1",
       "Stretched Fourier coefficients of alpha=1, x0=0, omega=50 with lambda = lambda_optimal(1e-40) "
       "(about 9.5971) and N = 1024 modes, showing the crown and brim of the sombrero.",
       [](Table& t, json& meta) {
         const WavePacket wp(1, 0, 50);
         double lam = lambda_optimal(1, 0, 1e-40);
         meta["lambda"] = lam;
         meta["n_modes"] = 1024;
         append_rows(t, sf_series(wp, lam, 1024), "lambda_opt", false);
       }},
      {"2.3",
       "Stretched Fourier coefficients of alpha=1, x0=0, omega=50 for lambda = lambda_optimal(1e-20) "
       "(about 6.7861), 1.5 times it and 0.7 times it, N = 1024 modes each.",
       [](Table& t, json& meta) {
         const WavePacket wp(1, 0, 50);
         double lam = lambda_optimal(1, 0, 1e-20);
         meta["lambda_optimal"] = lam;
         const std::pair<const char*, double> cases[] = {
             {"lambda_opt", 1.0}, {"1.5lambda_opt", 1.5}, {"0.7lambda_opt", 0.7}};
         for (auto [name, f] : cases) append_rows(t, sf_series(wp, f * lam, 1024), name, false);
       }},
      {"3.4",
       "Hermite peak index and last index with |a_n| > 1e-20 against omega = 10..100 for alpha=2, "
       "x0=2, next to the laws n = omega^2/2 and n = (omega + 18.5)^2 / 2.",
       [](Table& t, json& meta) {
         t.columns = {"omega", "peak_index", "last_index", "peak_law", "last_law"};
         meta["epsilon"] = 1e-20;
         std::vector<std::vector<json>> rows(10);
         parallel_for(10, [&](long i) {
           double w = 10.0 * static_cast<double>(i + 1);
           auto d = hermite_count_detail(WavePacket(2, 2, w), 1e-20);
           rows[static_cast<size_t>(i)] = {w, d.argmax, d.last, w * w / 2, (w + 18.5) * (w + 18.5) / 2};
         });
         t.rows = std::move(rows);
       }},
      {"4.1",
       "MT coefficients of 1/(1+x^4) and sin(x)/(1+x^4) for n = -2000..2000 from one FFT of size 2^20.",
       [](Table& t, json& meta) {
         const long M = 1L << 20;
         meta["fft_size"] = M;
         auto a = mt_transform(algebraic([](double x) { return 1 / (1 + x * x * x * x); }), -2000, 2000, M);
         auto b = mt_transform(algebraic([](double x) { return std::sin(x) / (1 + x * x * x * x); }), -2000,
                               2000, M);
         append_rows(t, from_coeffs(a), "inv_quartic", false);
         append_rows(t, from_coeffs(b), "sin_inv_quartic", false);
       }},
      {"4.2",
       "MT coefficients of the wave packet exp(-x^2) cos(50 x) and of the Gaussian exp(-x^2) for "
       "n = -2000..2000.",
       [](Table& t, json& meta) {
         const WavePacket packet(1, 0, 50), gauss(1, 0, 0);
         long M = std::max(mt_fft_size(packet), 8192L);
         meta["fft_size"] = M;
         append_rows(t, from_coeffs(mt_transform(packet, -2000, 2000, M)), "wave_packet", false);
         append_rows(t, from_coeffs(mt_transform(gauss, -2000, 2000, M)), "gaussian", false);
       }},
  };
  return all;
}

const Figure& find_figure(const std::string& id) {
  for (const auto& f : figures())
    if (f.id == id) return f;
  throw UsageError("unknown figure '" + id + "' (expected 1.3, 2.1, 2.3, 3.4, 4.1 or 4.2)");
}

int cmd_figure(const RunConfig& c, std::ostream& out) {
  const Figure& f = find_figure(c.figure);
  Table t = coeff_table(true, false);
  json meta = json::object();
  f.build(t, meta);
  require_unflagged(t, c);
  if (c.format == "json") {
    json j = json::object();
    j["figure"] = f.id;
    j["description"] = f.description;
    j["meta"] = meta;
    j["rows"] = table_records(t);
    out << j.dump(1) << '\n';
  } else {
    write_csv(t, out);
  }
  return kOk;
}

int cmd_coeffs(const RunConfig& c, std::ostream& out, bool estimate_only) {
  Basis b = parse_basis(c.basis);
  Method m = parse_method(estimate_only && c.method.empty() ? "estimate" : c.method, b);
  if (estimate_only && m != Method::Estimate) throw UsageError("estimate only supports --method estimate");
  Series s = compute(c, b, m);
  Table t = coeff_table(false, m == Method::Estimate);
  append_rows(t, s, "", m == Method::Estimate);
  require_unflagged(t, c);
  emit_table(t, c, out);
  return kOk;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  if (c.describe) {
    json j = json::object();
    j["config"] = to_json(c);
    if (!c.figure.empty()) j["figure"] = describe_figure(c.figure);
    out << j.dump(1) << '\n';
    return kOk;
  }
  if (!c.figure.empty()) {
    if (c.command != "compare") throw UsageError("--figure is a compare option");
    return cmd_figure(c, out);
  }
  if (c.command == "coeffs") return cmd_coeffs(c, out, false);
  if (c.command == "estimate") return cmd_coeffs(c, out, true);
  if (c.command == "predict") return cmd_predict(c, out);
  if (c.command == "compare") return cmd_compare_bases(c, out);
  throw UsageError("unknown command '" + c.command + "'");
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string describe_figure(const std::string& id) {
  if (id.empty()) {
    std::string all;
    for (const auto& f : figures()) all += f.id + ": " + f.description + "\n";
    return all;
  }
  return find_figure(id).description;
}

unsigned thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WAVEPACK_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return hw;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check_common(cfg);
    std::ostringstream buf;
    int code = dispatch(cfg, buf);
    // output is written once, and only when the command succeeded
    if (cfg.out.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw UsageError("cannot open '" + cfg.out + "' for writing");
      f << buf.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FlaggedError& e) {
    err << "flagged: " << e.what() << '\n';
    return kFlagged;
  } catch (const Error& e) {
    // UnderResolved, OutOfRegime, RegimeError and the other regime failures
    err << "flagged: " << e.what() << '\n';
    return kFlagged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wavepack::cli
