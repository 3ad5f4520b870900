#include "qdual/engine.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "qdual/contour.hpp"
#include "qdual/duality.hpp"
#include "qdual/grassmann.hpp"
#include "qdual/residue.hpp"

namespace qdual {

namespace {

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int width = std::min(jobs, count);
  pool.reserve(static_cast<size_t>(width));
  for (int t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string window_message(int n, int r, int l) {
  return "level l=" + std::to_string(l) + " is out of range for n=" + std::to_string(n) +
         ", r=" + std::to_string(r) + ": the interior window is 1-r <= l <= n-r-1 (" +
         std::to_string(1 - r) + " <= l <= " + std::to_string(n - r - 1) +
         "); boundary levels are l = -r = " + std::to_string(-r) +
         " (lower) and l = n-r = " + std::to_string(n - r) + " (upper)";
}

void validate_shape(const RunConfig& cfg) {
  if (cfg.n < 2) throw ConfigError("need n >= 2");
  if (cfg.r < 1 || cfg.r >= cfg.n) throw ConfigError("need 1 <= r <= n-1");
  if (cfg.d < 0) throw ConfigError("need d >= 0");
  if (cfg.trials < 1) throw ConfigError("need trials >= 1");
  if (cfg.jobs < 1) throw ConfigError("need jobs >= 1");
}

FieldSelector parse_field(const RunConfig& cfg) {
  try {
    return FieldSelector::parse(cfg.field);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

template <FieldScalar T>
using SampleFn = std::function<ParameterPoint<T>(int, int, std::uint64_t)>;

SampleFn<Rational> rational_sampler() {
  return [](int n, int k, std::uint64_t s) { return sample_rational_point(n, k, s); };
}

SampleFn<PrimeField> prime_sampler(std::uint64_t p) {
  return [p](int n, int k, std::uint64_t s) { return sample_prime_point(n, k, s, p); };
}

template <FieldScalar T>
PointWitness witness_of(const ParameterPoint<T>& pt) {
  PointWitness w;
  w.q = scalar_to_string(pt.q);
  w.x.reserve(pt.x.size());
  for (const T& xi : pt.x) w.x.push_back(scalar_to_string(xi));
  return w;
}

template <FieldScalar T>
struct CheckResult {
  std::string at;
  bool equal = false;
  T lhs{};
  T rhs{};
};

// Runs `trials` independent points; a trial passes iff every check on its
// point holds. Pole errors mean a guard failed, so the trial resamples with a
// derived sub-seed (deterministic) a few times before giving up.
template <FieldScalar T>
void run_trials(VerificationReport& report, const RunConfig& cfg, int n, int guard_depth,
                const SampleFn<T>& sample,
                const std::function<std::vector<CheckResult<T>>(const ParameterPoint<T>&)>& checks) {
  report.trials = cfg.trials;
  std::vector<char> ok(static_cast<size_t>(cfg.trials), 0);
  std::vector<std::vector<FailureWitness>> fails(static_cast<size_t>(cfg.trials));
  parallel_for(cfg.trials, cfg.jobs, [&](int t) {
    ParameterPoint<T> pt;
    std::vector<CheckResult<T>> results;
    std::uint64_t trial_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
    for (int retry = 0;; ++retry) {
      pt = sample(n, guard_depth, trial_seed);
      try {
        results = checks(pt);
        break;
      } catch (const PoleError&) {
        if (retry >= 3) throw;
        trial_seed = derive_seed(trial_seed, 1000 + static_cast<std::uint64_t>(retry));
      }
    }
    bool all_ok = true;
    for (const auto& res : results) {
      if (res.equal) continue;
      all_ok = false;
      FailureWitness fw;
      fw.point = witness_of(pt);
      fw.lhs = scalar_to_string(res.lhs);
      fw.rhs = scalar_to_string(res.rhs);
      fw.at = res.at;
      fails[static_cast<size_t>(t)].push_back(std::move(fw));
    }
    ok[static_cast<size_t>(t)] = all_ok ? 1 : 0;
  });
  for (int t = 0; t < cfg.trials; ++t) {
    if (ok[static_cast<size_t>(t)]) ++report.passed;
    for (auto& fw : fails[static_cast<size_t>(t)]) report.failures.push_back(std::move(fw));
  }
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), t0_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    if (!enabled_) return 0;
    auto dt = std::chrono::steady_clock::now() - t0_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point t0_;
};

template <FieldScalar T>
VerificationReport verify_typed(const RunConfig& cfg, const FieldSelector& sel,
                                const SampleFn<T>& sample) {
  const LevelSpec level = LevelSpec::classify(cfg.n, cfg.r, cfg.l);
  VerificationReport report;
  report.case_ = {cfg.n, cfg.r, cfg.d, cfg.l, to_string(level.regime)};
  report.field = sel.name();
  report.seed = cfg.seed;
  Stopwatch sw(!cfg.no_timing);
  auto checks = [&](const ParameterPoint<T>& pt) {
    DualityCase<T> dc = make_duality_case(pt, IndexSubset::prefix(cfg.n, cfg.r), cfg.d, cfg.l);
    Verdict<T> v;
    switch (level.regime) {
      case LevelRegime::interior: v = verify_interior(dc); break;
      case LevelRegime::upper_boundary: v = verify_upper_boundary(dc); break;
      default: v = verify_lower_boundary(dc); break;
    }
    return std::vector<CheckResult<T>>{{"", v.equal, v.lhs, v.rhs}};
  };
  run_trials<T>(report, cfg, cfg.n, cfg.d + cfg.n, sample, checks);
  report.elapsed_ms = sw.elapsed_ms();
  return report;
}

template <FieldScalar T>
VerificationReport residue_typed(const RunConfig& cfg, const FieldSelector& sel,
                                 const SampleFn<T>& sample) {
  VerificationReport report;
  report.case_ = {cfg.n, cfg.r, cfg.d, cfg.l,
                  to_string(LevelSpec::classify(cfg.n, cfg.r, cfg.l).regime)};
  report.field = sel.name();
  report.seed = cfg.seed;
  Stopwatch sw(!cfg.no_timing);
  auto checks = [&](const ParameterPoint<T>& pt) {
    IntegrandSpec<T> spec{pt, cfg.r, cfg.d, cfg.l};
    const IndexSubset I = IndexSubset::prefix(cfg.n, cfg.r);
    std::vector<CheckResult<T>> out;
    T lhs = assemble_E(spec);
    T rhs = a_sum(pt, I, cfg.l, cfg.d);
    out.push_back({"assemble_E vs a_sum", lhs == rhs, lhs, rhs});
    T sign = one_like(pt.q);
    if (cfg.d % 2 != 0) sign = -sign;
    lhs = sign * assemble_F(spec);
    rhs = b_sum(pt, I.complement(), -cfg.l, cfg.d);
    out.push_back({"(-1)^d assemble_F vs b_sum", lhs == rhs, lhs, rhs});
    return out;
  };
  run_trials<T>(report, cfg, cfg.n, cfg.d + cfg.n, sample, checks);

  if (cfg.numeric) {
    // deterministic float point inside the rho window
    SplitMix64 g(derive_seed(cfg.seed, 0xC0117));
    auto u01 = [&] { return static_cast<double>(g.next() >> 11) * 0x1.0p-53; };
    IntegrandSpec<std::complex<double>> spec;
    spec.point.n = cfg.n;
    spec.point.guard_depth = cfg.d + 1;
    spec.point.q = {0.25 + 0.35 * u01(), 0.0};
    spec.point.x.reserve(static_cast<size_t>(cfg.n));
    for (int i = 0; i < cfg.n; ++i) {
      double base = cfg.n == 1 ? 1.0 : 0.85 + 0.35 * i / (cfg.n - 1);
      spec.point.x.emplace_back(base + 0.01 * u01(), 0.0);
    }
    spec.r = cfg.r;
    spec.d = cfg.d;
    spec.l = cfg.l;
    ContourConfig cc;
    cc.grid = cfg.grid;
    std::complex<double> exact = assemble_E(spec);
    NumericSummary ns;
    ns.grid = cfg.grid;
    ns.rho = default_rho(spec);
    ns.rel_err = std::abs(contour_integral_numeric(spec, cc) - exact) / std::abs(exact);
    cc.grid = cfg.grid / 2;
    ns.rel_err_half =
        std::abs(contour_integral_numeric(spec, cc) - exact) / std::abs(exact);
    report.numeric = ns;
    // the numeric comparison counts as one extra trial; it gates pass/fail
    // only for d <= 2
    report.trials += 1;
    if (cfg.d > 2 || ns.rel_err < 1e-8) {
      report.passed += 1;
    } else {
      FailureWitness fw;
      fw.point = witness_of(spec.point);
      fw.lhs = std::to_string(ns.rel_err);
      fw.rhs = "< 1e-8";
      fw.at = "numeric quadrature relative error";
      report.failures.push_back(std::move(fw));
    }
  }
  report.elapsed_ms = sw.elapsed_ms();
  return report;
}

template <FieldScalar T>
VerificationReport unity_typed(const RunConfig& cfg, const FieldSelector& sel,
                               const SampleFn<T>& sample) {
  VerificationReport report;
  report.case_ = {3, 2, cfg.d, 0, "interior"};
  report.field = sel.name();
  report.seed = cfg.seed;
  Stopwatch sw(!cfg.no_timing);
  auto checks = [&](const ParameterPoint<T>& pt) {
    Verdict<T> v = corollary_unity(pt, cfg.d);
    return std::vector<CheckResult<T>>{{"unity sum", v.equal, v.lhs, v.rhs}};
  };
  run_trials<T>(report, cfg, 3, cfg.d + 3, sample, checks);
  report.elapsed_ms = sw.elapsed_ms();
  return report;
}

template <FieldScalar T>
VerificationReport ifunction_typed(const RunConfig& cfg, const FieldSelector& sel,
                                   const SampleFn<T>& sample) {
  const LevelSpec level = LevelSpec::classify(cfg.n, cfg.r, cfg.l);
  VerificationReport report;
  report.case_ = {cfg.n, cfg.r, cfg.d, cfg.l, to_string(level.regime)};
  report.field = sel.name();
  report.seed = cfg.seed;
  Stopwatch sw(!cfg.no_timing);
  auto checks = [&](const ParameterPoint<T>& pt) {
    GrassmannCase<T> gc = make_grassmann_case(pt, cfg.r, cfg.d, cfg.l);
    std::vector<CheckResult<T>> out;
    for (auto& v : verify_level_correspondence(gc))
      out.push_back({"fixed point I=" + v.subset.to_string(), v.equal, v.lhs, v.rhs});
    return out;
  };
  run_trials<T>(report, cfg, cfg.n, cfg.d + cfg.n, sample, checks);
  report.elapsed_ms = sw.elapsed_ms();
  return report;
}

}  // namespace

VerificationReport run_verify(const RunConfig& cfg) {
  validate_shape(cfg);
  if (LevelSpec::classify(cfg.n, cfg.r, cfg.l).regime == LevelRegime::out_of_range)
    throw ConfigError(window_message(cfg.n, cfg.r, cfg.l));
  FieldSelector sel = parse_field(cfg);
  return sel.kind == FieldSelector::Kind::rational
             ? verify_typed<Rational>(cfg, sel, rational_sampler())
             : verify_typed<PrimeField>(cfg, sel, prime_sampler(sel.prime));
}

std::vector<VerificationReport> run_sweep(const RunConfig& cfg) {
  if (cfg.n_max < 2) throw ConfigError("need n_max >= 2");
  if (cfg.d_max < 0) throw ConfigError("need d_max >= 0");
  if (cfg.trials < 1) throw ConfigError("need trials >= 1");
  std::vector<RunConfig> cases;
  for (int n = 2; n <= cfg.n_max; ++n)
    for (int r = 1; r < n; ++r)
      for (int d = 0; d <= cfg.d_max; ++d)
        for (int l = -r; l <= n - r; ++l) {
          RunConfig c = cfg;
          c.n = n;
          c.r = r;
          c.d = d;
          c.l = l;
          c.jobs = 1;  // parallelism is over cases
          cases.push_back(c);
        }
  std::vector<VerificationReport> reports(cases.size());
  parallel_for(static_cast<int>(cases.size()), cfg.jobs, [&](int i) {
    reports[static_cast<size_t>(i)] = run_verify(cases[static_cast<size_t>(i)]);
  });
  return reports;
}

VerificationReport run_residue(const RunConfig& cfg) {
  validate_shape(cfg);
  if (cfg.numeric) {
    if (cfg.d > 3) throw ConfigError("numeric contour refused for d > 3 (cost N^d)");
    if (cfg.d < 1) throw ConfigError("numeric contour needs d >= 1");
    if (cfg.grid < 128 || (cfg.grid & (cfg.grid - 1)) != 0)
      throw ConfigError("numeric grid must be a power of two >= 128 (half-grid must stay >= 64)");
    if (cfg.l < 1 - cfg.r)
      throw ConfigError("numeric contour needs l >= 1-r (integrand analytic at w = 0)");
  }
  FieldSelector sel = parse_field(cfg);
  return sel.kind == FieldSelector::Kind::rational
             ? residue_typed<Rational>(cfg, sel, rational_sampler())
             : residue_typed<PrimeField>(cfg, sel, prime_sampler(sel.prime));
}

VerificationReport run_unity(const RunConfig& cfg) {
  if (cfg.n != 3) throw ConfigError("unity identity is the n = 3 case; pass --n 3");
  if (cfg.d < 1) throw ConfigError("need d >= 1");
  if (cfg.trials < 1) throw ConfigError("need trials >= 1");
  FieldSelector sel = parse_field(cfg);
  return sel.kind == FieldSelector::Kind::rational
             ? unity_typed<Rational>(cfg, sel, rational_sampler())
             : unity_typed<PrimeField>(cfg, sel, prime_sampler(sel.prime));
}

VerificationReport run_ifunction(const RunConfig& cfg) {
  validate_shape(cfg);
  if (LevelSpec::classify(cfg.n, cfg.r, cfg.l).regime == LevelRegime::out_of_range)
    throw ConfigError(window_message(cfg.n, cfg.r, cfg.l));
  FieldSelector sel = parse_field(cfg);
  return sel.kind == FieldSelector::Kind::rational
             ? ifunction_typed<Rational>(cfg, sel, rational_sampler())
             : ifunction_typed<PrimeField>(cfg, sel, prime_sampler(sel.prime));
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.all_passed()) return false;
  return true;
}

}  // namespace qdual
