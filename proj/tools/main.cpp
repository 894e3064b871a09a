#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zforge/errors.hpp"
#include "zforge/exact/bernoulli.hpp"
#include "zforge/identities/bernoulli_identities.hpp"
#include "zforge/identities/classical.hpp"
#include "zforge/identities/families.hpp"
#include "zforge/identities/serialize.hpp"
#include "zforge/identities/verify.hpp"
#include "zforge/numeric/evaluate.hpp"
#include "zforge/numeric/mellin.hpp"
#include "zforge/numeric/special.hpp"
#include "zforge/numeric/sums.hpp"
#include "zforge/qplane/plot.hpp"
#include "zforge/suite.hpp"
#include "zforge/symbolic/argument.hpp"

using namespace zforge;
using json = nlohmann::json;
using numeric::Complex;
using numeric::PrecisionContext;
using numeric::Real;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  int precision = 50;
  int guard = 10;
  unsigned threads = 0;
  std::string format = "text";

  long n = 0;
  bool bernoulli_check = false;
  long m_max = 50;

  std::string sum = "S";
  long s = 3;
  std::string x;
  std::string x_float;

  std::string family;
  std::string classical;
  std::string file;
  long m = 1;
  long k = 3;
  long p = 2;
  long q = 1;
  long entry_n = 1;
  std::string alpha = "pi";

  std::string level = "quick";

  long series = -1;
  std::string function = "P";
  int size = 512;
  double r_max = 0.98;
  long max_terms = 100'000;
  std::string color_map;
  std::string out;

  double u = 1.0;
  double c = 2.0;
  double H = 40.0;
};

json result_json(const identities::VerifyResult& r) {
  return {{"name", r.name},
          {"pass", r.pass},
          {"log10_residual", r.log10_residual()},
          {"log10_tolerance", r.log10_tolerance},
          {"residual", r.residual.to_string(6)}};
}

// Exit 1 with a report on stdout when anything failed.
int report(const std::vector<identities::VerifyResult>& results, const std::string& format) {
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(result_json(r));
    std::cout << json{{"pass", all}, {"results", arr}}.dump(2) << "\n";
    return all ? kExitOk : kExitFail;
  }
  for (const auto& r : results) {
    std::printf("%s %s log10|res| = %.2f tolerance = %.2f\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.log10_residual(), r.log10_tolerance);
  }
  if (!all) {
    json failures = json::array();
    for (const auto& r : results) {
      if (!r.pass) failures.push_back(result_json(r));
    }
    std::cout << json{{"pass", false}, {"failures", failures}}.dump(2) << "\n";
  }
  return all ? kExitOk : kExitFail;
}

int cmd_bernoulli(const Options& o) {
  if (o.bernoulli_check) {
    json failures = json::array();
    for (long m = 1; m <= o.m_max; ++m) {
      if (!identities::cor5(m).is_zero()) failures.push_back({{"identity", "cor5"}, {"m", m}});
      if (!identities::thm10(m).is_zero()) failures.push_back({{"identity", "thm10"}, {"m", m}});
      const auto [lhs, rhs] = identities::thm11(m);
      if (lhs != rhs) failures.push_back({{"identity", "thm11"}, {"m", m}});
    }
    if (!failures.empty()) {
      std::cout << json{{"pass", false}, {"failures", failures}}.dump(2) << "\n";
      return kExitFail;
    }
    std::cout << "PASS bernoulli identities m = 1.." << o.m_max << "\n";
    return kExitOk;
  }
  if (o.n < 0) throw DomainError("--n must be >= 0");
  const std::string value = exact::bernoulli(o.n).to_string();
  if (o.format == "json") std::cout << json{{"n", o.n}, {"B", value}}.dump() << "\n";
  else std::cout << value << "\n";
  return kExitOk;
}

Complex parse_float_argument(const std::string& text, mpfr_prec_t bits) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return Complex(Real::parse(text, bits));
  return Complex(Real::parse(text.substr(0, comma), bits), Real::parse(text.substr(comma + 1), bits));
}

int cmd_eval(const Options& o, const PrecisionContext& ctx) {
  if (o.x.empty() == o.x_float.empty()) throw DomainError("exactly one of --x and --x-float is required");
  const Complex x = o.x.empty() ? parse_float_argument(o.x_float, ctx.bits())
                                : numeric::to_complex(symbolic::parse_argument(o.x), ctx.bits()) *
                                      (Real::pi(ctx.bits()) * 2L);
  Complex value;
  if (o.sum == "S") value = numeric::sum_S(o.s, x, ctx);
  else if (o.sum == "T") value = numeric::sum_T(o.s, x, ctx);
  else if (o.sum == "I") value = numeric::numeric_I(o.s, x, ctx);
  else throw DomainError("--sum must be S, T or I");
  if (o.format == "json") {
    std::cout << json{{"sum", o.sum}, {"s", o.s}, {"x", o.x.empty() ? o.x_float : o.x}, {"re", value.re().to_string(ctx.digits())},
                      {"im", value.im().to_string(ctx.digits())}}
                     .dump()
              << "\n";
  } else {
    std::cout << value.to_string(ctx.digits()) << "\n";
  }
  return kExitOk;
}

identities::Identity selected_identity(const Options& o) {
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw DomainError("cannot read " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return identities::parse_identity_json(buf.str());
  }
  if (o.family.empty()) throw DomainError("--family or --file is required");
  return identities::generate(identities::family_from_name(o.family), {o.m, o.k, o.p, o.q});
}

int cmd_identity_list(const Options& o) {
  const std::vector<std::pair<std::string, std::string>> families = {
      {"zeta4m-1", "zeta(4m-1) from S at 2 pi; --m >= 1"},
      {"pq", "zeta(k) from S at 2 pi p/q and 2 pi q/p; --k = 3 mod 4, --p, --q coprime"},
      {"surd", "zeta(k) from S at 2 pi sqrt(p); --k odd >= 3, --p not a square"},
      {"zeta4m+1", "zeta(4m+1) from S and T at 2 pi; --m >= 1"},
      {"pi-power", "pi^(4m-1) from S at pi, 2 pi, 4 pi; --m >= 1"},
      {"log2", "S_1(2 pi) + T_1(2 pi) = pi/6 - (3/4) log 2"},
  };
  const std::vector<std::string> classical = {"letter", "glaisher", "apostol", "entry13", "entry21", "entry8", "zucker"};
  if (o.format == "json") {
    json fam = json::array();
    for (const auto& [name, help] : families) fam.push_back({{"name", name}, {"description", help}});
    std::cout << json{{"families", fam}, {"classical", classical}}.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& [name, help] : families) std::cout << name << "\t" << help << "\n";
  for (const auto& name : classical) std::cout << name << "\tclassical sum (identity verify --classical)\n";
  return kExitOk;
}

int cmd_identity_show(const Options& o) {
  const auto id = selected_identity(o);
  std::cout << identities::emit(id, o.format == "json" ? identities::Format::Json : identities::Format::Text) << "\n";
  return kExitOk;
}

int cmd_identity_verify(const Options& o, const PrecisionContext& ctx) {
  if (!o.classical.empty()) {
    identities::ClassicalParams params;
    params.k = o.k;
    params.n = o.entry_n;
    params.alpha = identities::parse_scale(o.alpha);
    return report(identities::verify_classical(identities::classical_from_name(o.classical), params, ctx), o.format);
  }
  return report({identities::verify(selected_identity(o), ctx)}, o.format);
}

int cmd_verify_suite(const Options& o, const PrecisionContext& ctx) {
  const auto results = suite::run(suite::level_from_name(o.level), ctx, o.threads);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (o.format == "json") {
    std::cout << suite::to_json(results) << "\n";
    return all ? kExitOk : kExitFail;
  }
  std::vector<suite::CheckResult> failures;
  for (const auto& r : results) {
    if (r.title == r.id) std::printf("%s %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str());
    else std::printf("%s %s %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(), r.seconds);
    for (const auto& d : r.details) {
      std::printf("    %s %s: %s\n", d.pass ? "ok  " : "FAIL", d.label.c_str(), d.value.c_str());
    }
    if (!r.pass) failures.push_back(r);
  }
  if (!all) std::cout << suite::to_json(failures) << "\n";
  return all ? kExitOk : kExitFail;
}

int cmd_plot(const Options& o) {
  qplane::PlotSpec spec;
  spec.width = spec.height = o.size;
  spec.series_index = o.series;
  spec.max_terms = o.max_terms;
  spec.r_max = o.r_max;
  spec.threads = o.threads;
  if (o.function == "g3") spec.function = qplane::PlotFunction::G3;
  else if (o.function != "P") throw DomainError("--function must be P or g3");
  const std::string map = o.color_map.empty() ? (o.function == "g3" ? "signed-imag" : "phase") : o.color_map;
  if (map == "phase") spec.color_map = qplane::ColorMap::PhaseBwRed;
  else if (map == "signed-imag") spec.color_map = qplane::ColorMap::SignedImag;
  else throw DomainError("--color-map must be phase or signed-imag");
  if (o.out.empty()) throw DomainError("--out is required");

  const auto result = qplane::render_plot(spec);
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw DomainError("cannot write " + o.out);
  file.write(result.ppm.data(), static_cast<std::streamsize>(result.ppm.size()));
  std::cout << result.diagnostics.to_json() << "\n";
  if (result.diagnostics.truncation_failures > 0) {
    std::cerr << result.diagnostics.truncation_failures << " pixels hit the term limit\n";
    return kExitFail;
  }
  return kExitOk;
}

int cmd_mellin(const Options& o, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  if (!(o.u > 0.0)) throw DomainError("--u must be positive");
  const Real u(o.u, bits);
  const auto q = numeric::mellin_barnes_check(o.s, u, Real(o.c, bits), Real(o.H, bits), ctx);
  const Complex series = numeric::polylog_series(o.s, Complex(numeric::exp(-u)), ctx);
  const double diff = numeric::abs(Complex(q.value) - series).log10_abs();
  // The quadrature carries the truncated-line tail on top of 10^-(P-G).
  const double tolerance = std::max<double>(-ctx.verify_digits(), q.log10_tail_bound + 1.0);
  const bool pass = diff <= tolerance;
  const json out = {{"s", o.s},
                    {"u", o.u},
                    {"quadrature", q.value.to_string(ctx.digits())},
                    {"series", series.re().to_string(ctx.digits())},
                    {"log10_difference", diff},
                    {"log10_tolerance", tolerance},
                    {"log10_tail_bound", q.log10_tail_bound},
                    {"step", q.step},
                    {"nodes", q.nodes},
                    {"pass", pass}};
  std::cout << out.dump(2) << "\n";
  return pass ? kExitOk : kExitFail;
}

int run(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact and high-precision tools for Ramanujan-type zeta identities"};
  app.require_subcommand(1);
  app.fallthrough();
  if (const char* env = std::getenv("ZFORGE_PRECISION")) {
    try {
      o.precision = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "ZFORGE_PRECISION is not an integer: " << env << "\n";
      return kExitUsage;
    }
  }
  app.add_option("-P,--precision", o.precision, "decimal digits P")->check(CLI::Range(10, 10000));
  app.add_option("--guard", o.guard, "guard digits G")->check(CLI::Range(2, 100));
  app.add_option("--threads", o.threads, "worker threads, 0 = all cores");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* bern = app.add_subcommand("bernoulli", "exact Bernoulli numbers");
  bern->add_option("--n", o.n, "index");
  bern->add_flag("--check-identities", o.bernoulli_check, "check the Bernoulli convolution identities");
  bern->add_option("--m-max", o.m_max, "largest m for --check-identities")->check(CLI::Range(1L, 1000L));

  auto* eval = app.add_subcommand("eval", "evaluate S_s(x), T_s(x) or I_k(x)");
  eval->add_option("--sum", o.sum, "S, T or I")->check(CLI::IsMember({"S", "T", "I"}));
  eval->add_option("--s", o.s, "series index");
  eval->add_option("--x", o.x, "exact argument, e.g. 2pi, pi*sqrt(3), 2pi*(1+i)");
  eval->add_option("--x-float", o.x_float, "decimal argument re[,im]");

  auto* identity = app.add_subcommand("identity", "generate and verify identities");
  identity->require_subcommand(1);
  auto add_family_options = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "family name, see identity list");
    sub->add_option("--file", o.file, "identity JSON as written by show --format json");
    sub->add_option("--m", o.m, "family index m");
    sub->add_option("--k", o.k, "weight k");
    sub->add_option("--p", o.p, "p");
    sub->add_option("--q", o.q, "q");
  };
  identity->add_subcommand("list", "list families");
  auto* show = identity->add_subcommand("show", "print an identity");
  add_family_options(show);
  auto* verify = identity->add_subcommand("verify", "verify an identity numerically");
  add_family_options(verify);
  verify->add_option("--classical", o.classical, "classical sum name");
  verify->add_option("--n", o.entry_n, "n for entry21");
  verify->add_option("--alpha", o.alpha, "alpha (or x for zucker): pi, 2pi, pi/2, 3/2");

  auto* vs = app.add_subcommand("verify-suite", "run the verification suite");
  vs->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  auto* plot = app.add_subcommand("plot", "render a q-disk plot as binary PPM");
  plot->add_option("--series", o.series, "s in P_s");
  plot->add_option("--function", o.function, "P or g3")->check(CLI::IsMember({"P", "g3"}));
  plot->add_option("--size", o.size, "width and height")->check(CLI::Range(1, 8192));
  plot->add_option("--r-max", o.r_max, "disk radius")->check(CLI::Range(0.01, 0.995));
  plot->add_option("--max-terms", o.max_terms, "per-pixel term limit")->check(CLI::PositiveNumber);
  plot->add_option("--color-map", o.color_map, "phase or signed-imag")->check(CLI::IsMember({"phase", "signed-imag"}));
  plot->add_option("--out", o.out, "output file")->required();

  auto* mellin = app.add_subcommand("mellin-check", "Mellin-Barnes quadrature against the polylogarithm");
  mellin->add_option("--s", o.s, "s >= 2");
  mellin->add_option("--u", o.u, "u > 0");
  mellin->add_option("--c", o.c, "abscissa c > 1");
  mellin->add_option("--H", o.H, "half height of the line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (o.precision < PrecisionContext::kMinDigits || o.precision > PrecisionContext::kMaxDigits) {
    std::cerr << "error: precision must lie in [10, 10000]\n" << app.help();
    return kExitUsage;
  }

  try {
    const PrecisionContext ctx(o.precision, o.guard);
    if (*bern) {
      if (bern->count("--n") == 0 && !o.bernoulli_check) throw DomainError("--n or --check-identities is required");
      return cmd_bernoulli(o);
    }
    if (*eval) return cmd_eval(o, ctx);
    if (*identity) {
      if (*show) return cmd_identity_show(o);
      if (*verify) return cmd_identity_verify(o, ctx);
      return cmd_identity_list(o);
    }
    if (*vs) return cmd_verify_suite(o, ctx);
    if (*plot) return cmd_plot(o);
    return cmd_mellin(o, ctx);
  } catch (const PrecisionError& e) {
    std::cout << json{{"pass", false}, {"error", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (...) {
    std::cerr << "error: unexpected failure\n";
    return kExitUsage;
  }
}
