#include "zforge/qplane/plot.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>

#include <json.hpp>

#include "zforge/errors.hpp"
#include "zforge/exact/zeta_special.hpp"
#include "zforge/numeric/series.hpp"
#include "zforge/numeric/special.hpp"

namespace zforge::qplane {

using cd = std::complex<double>;

namespace {

constexpr double kEps = 1e-17;

// sum_n n^p q^n / (1 - q^n) in doubles.
bool lambert_double(long p, cd q, long max_terms, cd& out) {
  const double r = std::abs(q);
  out = 0.0;
  if (r == 0.0) return true;
  const double log_r = std::log(r);
  const double log_den = std::log1p(-r);
  double scale = 0.0;
  cd q_pow = 1.0;
  for (long n = 1; n <= max_terms; ++n) {
    q_pow *= q;
    const cd t = q_pow / (1.0 - q_pow) * std::pow(static_cast<double>(n), static_cast<double>(p));
    out += t;
    scale += std::abs(t);
    if (numeric::log_power_geometric_tail(-p, log_r, n) - log_den < std::log(kEps * std::max(scale, 1e-300))) {
      return true;
    }
  }
  return false;
}

double zeta_double(long s) {
  if (s <= 0) return exact::zeta_negative(-s).to_double();
  return numeric::zeta_real(s, numeric::PrecisionContext(20, 5)).to_double();
}

struct Rgb {
  unsigned char r, g, b;
};

constexpr Rgb kWhite{255, 255, 255};
constexpr Rgb kMagenta{255, 0, 255};

Rgb phase_color(double arg) {
  if (arg >= 0.0) return {0, 0, 0};
  const double t = std::min(1.0, -arg / std::numbers::pi);
  return {static_cast<unsigned char>(std::lround(96.0 + 159.0 * std::sqrt(t))), 0, 0};
}

// Negative is black; positive runs blue, green, red with magnitude.
Rgb signed_color(double v, double unit) {
  if (v < 0.0) return {0, 0, 0};
  const double t = 1.0 - std::exp(-v / unit);
  const double level = 3.0 * t;
  const auto ramp = [](double x) { return static_cast<unsigned char>(std::lround(64.0 + 191.0 * x)); };
  if (level < 1.0) return {0, 0, ramp(level)};
  if (level < 2.0) return {0, ramp(level - 1.0), 0};
  return {ramp(std::min(1.0, level - 2.0)), 0, 0};
}

void validate(const PlotSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0) throw DomainError("plot size must be positive");
  if (!(spec.r_max > 0.0 && spec.r_max < 1.0)) throw DomainError("r_max must lie in (0, 1)");
  if (spec.max_terms <= 0) throw DomainError("max_terms must be positive");
  if (spec.function == PlotFunction::P && spec.series_index == 1) throw PoleError("P_1 diverges");
}

}  // namespace

std::string PlotDiagnostics::to_json() const {
  return nlohmann::json{{"pixels_in_disk", pixels_in_disk}, {"truncation_failures", truncation_failures}}.dump();
}

cd pixel_q(const PlotSpec& spec, int i, int j) {
  const double x = (2.0 * i + 1.0) / spec.width - 1.0;
  const double y = 1.0 - (2.0 * j + 1.0) / spec.height;
  return cd(x, y) * spec.r_max;
}

bool P_double(long s, cd q, long max_terms, cd& out) {
  cd series;
  const bool ok = lambert_double(-s, q, max_terms, series);
  out = -zeta_double(s) - series;
  return ok;
}

bool g3_double(cd q, long max_terms, cd& out) {
  cd series;
  const bool ok = lambert_double(5, q, max_terms, series);
  out = 8.0 * std::pow(std::numbers::pi, 6) / 27.0 * (1.0 - 504.0 * series);
  return ok;
}

PlotResult render_plot(const PlotSpec& spec) {
  validate(spec);
  const std::size_t pixels = static_cast<std::size_t>(spec.width) * static_cast<std::size_t>(spec.height);
  PlotResult out;
  out.values.assign(pixels, std::numeric_limits<double>::quiet_NaN());
  std::vector<Rgb> colors(pixels, kWhite);
  std::vector<unsigned char> failed(pixels, 0);
  const double zeta_s = spec.function == PlotFunction::P ? zeta_double(spec.series_index) : 0.0;
  const double g3_unit = 504.0 * 8.0 * std::pow(std::numbers::pi, 6) / 27.0;

  std::atomic<int> next_row{0};
  auto worker = [&] {
    for (int j = next_row++; j < spec.height; j = next_row++) {
      for (int i = 0; i < spec.width; ++i) {
        const std::size_t idx = static_cast<std::size_t>(j) * spec.width + i;
        const cd q = pixel_q(spec, i, j);
        if (std::abs(q) > spec.r_max) continue;
        cd value;
        bool ok = false;
        if (spec.function == PlotFunction::P) {
          cd series;
          ok = lambert_double(-spec.series_index, q, spec.max_terms, series);
          value = -zeta_s - series;
        } else {
          ok = g3_double(q, spec.max_terms, value);
        }
        if (!ok || !std::isfinite(value.real()) || !std::isfinite(value.imag())) {
          colors[idx] = kMagenta;
          failed[idx] = 1;
          continue;
        }
        const double v = spec.color_map == ColorMap::PhaseBwRed ? std::arg(value) : value.imag();
        out.values[idx] = v;
        colors[idx] = spec.color_map == ColorMap::PhaseBwRed ? phase_color(v) : signed_color(v, g3_unit);
      }
    }
  };
  unsigned threads = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(spec.height));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  for (int j = 0; j < spec.height; ++j) {
    for (int i = 0; i < spec.width; ++i) {
      const std::size_t idx = static_cast<std::size_t>(j) * spec.width + i;
      if (std::abs(pixel_q(spec, i, j)) <= spec.r_max) ++out.diagnostics.pixels_in_disk;
      out.diagnostics.truncation_failures += failed[idx];
    }
  }
  out.ppm = "P6\n" + std::to_string(spec.width) + " " + std::to_string(spec.height) + " 255\n";
  out.ppm.reserve(out.ppm.size() + 3 * pixels);
  for (const Rgb& c : colors) {
    out.ppm.push_back(static_cast<char>(c.r));
    out.ppm.push_back(static_cast<char>(c.g));
    out.ppm.push_back(static_cast<char>(c.b));
  }
  return out;
}

double fraction_below(const PlotSpec& spec, const PlotResult& result, double radius, double threshold) {
  long total = 0;
  long below = 0;
  for (int j = 0; j < spec.height; ++j) {
    for (int i = 0; i < spec.width; ++i) {
      if (std::abs(pixel_q(spec, i, j)) > radius) continue;
      ++total;
      const double v = result.values[static_cast<std::size_t>(j) * spec.width + i];
      if (std::isfinite(v) && std::fabs(v) < threshold) ++below;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(below) / static_cast<double>(total);
}

long winding_number(long s, double r, long samples, const PrecisionContext& ctx) {
  if (!(r > 0.0 && r < kDefaultRMax)) throw DomainError("winding_number requires 0 < r < r_max");
  if (samples < 4) throw DomainError("winding_number needs at least 4 samples");
  const mpfr_prec_t bits = ctx.bits();
  const numeric::Real radius(r, bits);
  const numeric::Real two_pi = numeric::Real::pi(bits) * 2L;
  auto phase_at = [&](const numeric::Real& theta) {
    const Complex q(radius * numeric::cos(theta), radius * numeric::sin(theta));
    const Complex v = P_q(s, q, ctx);
    if (v.is_zero()) throw PrecisionError("P_s vanishes on the winding circle");
    return numeric::arg(v).to_double();
  };
  auto wrap = [](double d) { return std::remainder(d, 2.0 * std::numbers::pi); };

  constexpr int kMaxDepth = 24;
  double total = 0.0;
  // (t0, phase0) -> (t1, phase1) with t in units of the full turn
  std::function<void(double, double, double, double, int)> step = [&](double t0, double p0, double t1, double p1,
                                                                       int depth) {
    const double d = wrap(p1 - p0);
    if (std::fabs(d) < std::numbers::pi / 2) {
      total += d;
      return;
    }
    if (depth >= kMaxDepth) throw PrecisionError("winding_number refinement limit exceeded");
    const double tm = 0.5 * (t0 + t1);
    const double pm = phase_at(two_pi * numeric::Real(tm, bits));
    step(t0, p0, tm, pm, depth + 1);
    step(tm, pm, t1, p1, depth + 1);
  };
  const double p_start = phase_at(numeric::Real(bits));
  double prev = p_start;
  for (long i = 1; i <= samples; ++i) {
    const double t1 = static_cast<double>(i) / static_cast<double>(samples);
    const double p1 = i == samples ? p_start : phase_at(two_pi * numeric::Real(t1, bits));
    step(static_cast<double>(i - 1) / static_cast<double>(samples), prev, t1, p1, 0);
    prev = p1;
  }
  return std::lround(total / (2.0 * std::numbers::pi));
}

}  // namespace zforge::qplane
