#pragma once

#include <complex>
#include <string>
#include <vector>

#include "zforge/qplane/qseries.hpp"

namespace zforge::qplane {

enum class PlotFunction { P, G3 };
enum class ColorMap { PhaseBwRed, SignedImag };

struct PlotSpec {
  int width = 512;
  int height = 512;
  PlotFunction function = PlotFunction::P;
  long series_index = -1;
  long max_terms = 100'000;
  double r_max = 0.98;
  ColorMap color_map = ColorMap::PhaseBwRed;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

struct PlotDiagnostics {
  long pixels_in_disk = 0;
  long truncation_failures = 0;

  std::string to_json() const;
};

struct PlotResult {
  /// Binary P6 image.
  std::string ppm;
  /// Per pixel, row-major: arg P_s(q) or Im g3(q); NaN outside the disk or on failure.
  std::vector<double> values;
  PlotDiagnostics diagnostics;
};

/// q at the centre of pixel (i, j), origin top-left.
std::complex<double> pixel_q(const PlotSpec& spec, int i, int j);

/// P_s(q) in double precision from the Lambert form; false when max_terms is
/// reached before the tail bound.
bool P_double(long s, std::complex<double> q, long max_terms, std::complex<double>& out);
bool g3_double(std::complex<double> q, long max_terms, std::complex<double>& out);

/// DomainError for an invalid spec. Output is identical for every thread count.
PlotResult render_plot(const PlotSpec& spec);

/// Fraction of pixels with |q| <= radius whose |value| is below threshold.
double fraction_below(const PlotSpec& spec, const PlotResult& result, double radius, double threshold);

/// Winding number of P_s around |q| = r, starting from `samples` equal steps
/// and bisecting any step whose phase change reaches pi/2. PrecisionError
/// when refinement runs out or the curve passes through a zero.
long winding_number(long s, double r, long samples, const PrecisionContext& ctx);

}  // namespace zforge::qplane
