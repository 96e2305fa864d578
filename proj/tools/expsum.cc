// expsum: command-line frontend for the certified stability-region library.
//
// Subcommands: tables, slices, trace, radial, zeros, szego-contours, verify.
// Exit codes: 0 ok, 1 check failure, 2 budget/precision exhausted, 3 usage.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "expsum/complexzeros.hpp"
#include "expsum/errors.hpp"
#include "expsum/extremal.hpp"
#include "expsum/families.hpp"
#include "expsum/interval.hpp"
#include "expsum/lambertw.hpp"
#include "expsum/region.hpp"
#include "expsum/serialize.hpp"
#include "expsum/szego.hpp"
#include "expsum/verify.hpp"

namespace {

using namespace expsum;

struct GlobalOpts {
  int precision_bits = 256;
  std::string tol = "1/1000000";
  std::string cache_dir;
  std::string format = "csv";
  unsigned jobs = 1;
  std::uint64_t budget = 80'000'000;
  std::string output = "-";
  int digits = 4;  // display column decimals for tables
};

// "1..12", "3,4,8", or a mix "1..4,8"
std::vector<unsigned> parse_n_list(const std::string& s) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(static_cast<unsigned>(std::stoul(item)));
    } else {
      unsigned a = static_cast<unsigned>(std::stoul(item.substr(0, dots)));
      unsigned b = static_cast<unsigned>(std::stoul(item.substr(dots + 2)));
      if (b < a) throw CLI::ValidationError("range must be ascending: " + item);
      for (unsigned n = a; n <= b; ++n) out.push_back(n);
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty n-list");
  return out;
}

// Accepts "p/q", an integer, a decimal, or scientific notation; exact.
BigRat parse_rat(const std::string& s) {
  if (s.find('/') != std::string::npos) {
    BigRat q(s);
    q.canonicalize();
    if (q <= 0) throw CLI::ValidationError("tolerance must be positive");
    return q;
  }
  std::string digits;
  long exp10 = 0;
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  bool seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw CLI::ValidationError("bad number: " + s);
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      exp10 += std::stol(s.substr(i + 1));
      break;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (seen_dot) --exp10;
    } else {
      throw CLI::ValidationError("bad number: " + s);
    }
  }
  if (digits.empty()) throw CLI::ValidationError("bad number: " + s);
  BigInt num;
  if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
    throw CLI::ValidationError("bad number: " + s);
  if (neg) num = -num;
  BigRat q(num);
  BigInt p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  if (exp10 >= 0)
    q *= BigRat(p10);
  else
    q /= BigRat(p10);
  q.canonicalize();
  if (q <= 0) throw CLI::ValidationError("tolerance must be positive");
  return q;
}

void parse_range(const std::string& s, double& a, double& b) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("expected a..b, got " + s);
  a = std::stod(s.substr(0, dots));
  b = std::stod(s.substr(dots + 2));
}

void emit(const GlobalOpts& g, const std::string& content) {
  if (g.output == "-")
    std::cout << content;
  else
    write_file_atomic(g.output, content);
}

// Fixed-point decimal rendering of (sign-correct) v rounded toward the
// stated table convention: up for the radius tables, down for the
// inscribed-semi-disk table.
std::string display_round(const BigRat& v, int digits, bool up) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt r = up ? detail::ceil_scaled(v, scale) : detail::floor_scaled(v, scale);
  bool neg = sgn(r) < 0;
  std::string d = BigInt(abs(r)).get_str();
  if (static_cast<int>(d.size()) <= digits)
    d = std::string(digits + 1 - d.size(), '0') + d;
  d.insert(d.size() - digits, ".");
  return (neg ? "-" : "") + d;
}

// run fn(i) for i in [0, count) on `jobs` workers; results land by index
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// --- tables ------------------------------------------------------------------

int cmd_tables(const GlobalOpts& g, const std::string& mode_s,
               const std::string& nlist) {
  RadiusMode mode = mode_from_str(mode_s);
  std::vector<unsigned> ns = parse_n_list(nlist);
  BigRat tol = parse_rat(g.tol);
  CertificateCache cache(g.cache_dir);

  struct Row {
    unsigned n;
    std::optional<RadiusCertificate> cert;
    bool none = false;       // semidisk: no inscribed semi-disk exists
    bool exhausted = false;  // budget ran out; cert holds best-so-far
  };
  std::vector<Row> rows(ns.size());

  bool any_exhausted = false;
  parallel_for(ns.size(), g.jobs, [&](std::size_t i) {
    Row& row = rows[i];
    row.n = ns[i];
    Json key{{"command", "tables"},
             {"mode", mode_s},
             {"n", row.n},
             {"tol", rat_str(tol)},
             {"precision_bits", g.precision_bits}};
    if (auto hit = cache.get(key)) {
      if (hit->contains("none") && (*hit)["none"].get<bool>())
        row.none = true;
      else
        row.cert = certificate_from_json(*hit);
      return;
    }
    try {
      if (mode == RadiusMode::InnerSemiDisk) {
        auto c = inner_semidisk_radius(row.n, tol, g.budget);
        if (c)
          row.cert = *c;
        else
          row.none = true;
      } else {
        row.cert = max_modulus(row.n, mode == RadiusMode::LeftHalf, tol,
                               g.budget);
      }
    } catch (const BudgetExhaustedWithCertificate& e) {
      row.cert = e.best_so_far;
      row.exhausted = true;
      any_exhausted = true;
      return;  // partial results are not cached
    }
    cache.put(key, row.none ? Json{{"none", true}}
                            : certificate_to_json(*row.cert, tol));
  });

  bool round_up = mode != RadiusMode::InnerSemiDisk;
  if (g.format == "json") {
    Json out = Json::array();
    for (const Row& r : rows) {
      if (r.none) {
        out.push_back({{"n", r.n}, {"mode", mode_s}, {"none", true}});
        continue;
      }
      Json j = certificate_to_json(*r.cert, tol);
      j["display"] = display_round(round_up ? r.cert->hi : r.cert->lo,
                                   g.digits, round_up);
      if (r.exhausted) j["status"] = "budget-exhausted";
      out.push_back(std::move(j));
    }
    emit(g, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "n,mode,lo,hi,display,scaled_display,status\n";
    for (const Row& r : rows) {
      if (r.none) {
        os << r.n << ',' << mode_s << ",,,,,none\n";
        continue;
      }
      os << r.n << ',' << mode_s << ',' << rat_decimal(r.cert->lo, 15, false)
         << ',' << rat_decimal(r.cert->hi, 15, true) << ','
         << display_round(round_up ? r.cert->hi : r.cert->lo, g.digits,
                          round_up)
         << ',';
      if (mode == RadiusMode::InnerSemiDisk)
        os << display_round(r.cert->lo * static_cast<long>(r.n), g.digits,
                            false);
      os << ',' << (r.exhausted ? "budget-exhausted" : "ok") << '\n';
    }
    emit(g, os.str());
  }
  return any_exhausted ? 2 : 0;
}

// --- slices ------------------------------------------------------------------

// isolation boxes refined enough that CSV endpoints carry real digits
SliceDecomposition refined_slices(unsigned n) {
  SliceDecomposition d = v_plus(n);
  IntPoly sf = squarefree_part(e_polynomial(n));
  BigRat w = dyadic(BigInt(1), -30);
  for (auto& iv : d.intervals) {
    if (!iv.lo.is_point()) iv.lo = refine_root_sf(iv.lo, sf, w);
    if (!iv.hi.is_point()) iv.hi = refine_root_sf(iv.hi, sf, w);
  }
  return d;
}

std::string slices_svg(const std::vector<SliceDecomposition>& decs,
                       bool overlay_o3) {
  const double colw = 14.0, pad = 30.0, plot_h = 420.0;
  double maxy = 0.0;
  for (const auto& d : decs)
    for (const auto& iv : d.intervals) maxy = std::max(maxy, iv.hi.hi.get_d());
  maxy = std::max(maxy * 1.05, 1.0);
  double w = 2 * pad + colw * static_cast<double>(decs.size());
  double h = 2 * pad + plot_h;
  SvgBuilder svg(w, h);
  auto X = [&](std::size_t i) { return pad + colw * static_cast<double>(i); };
  auto Y = [&](double v) { return pad + plot_h * (1.0 - v / maxy); };
  std::vector<std::pair<double, double>> maxline;
  for (std::size_t i = 0; i < decs.size(); ++i) {
    double top = 0.0;
    for (const auto& iv : decs[i].intervals) {
      double lo = iv.lo.lo.get_d(), hi = iv.hi.hi.get_d();
      top = std::max(top, hi);
      if (iv.degenerate)
        svg.rect(X(i) + 2, Y(hi) - 1, colw - 4, 2, "#444444");
      else
        svg.rect(X(i) + 2, Y(hi), colw - 4, Y(lo) - Y(hi), "#7799cc");
    }
    maxline.emplace_back(X(i) + colw / 2, Y(top));
  }
  svg.polyline(maxline, "#cc3333");
  if (overlay_o3) {
    std::vector<std::pair<double, double>> o3;
    for (std::size_t i = 0; i < decs.size(); ++i) {
      double n = static_cast<double>(decs[i].n);
      double v = n / 2.718281828459045 +
                 std::log(n) / (2 * 2.718281828459045) + 1.2604;
      if (v <= maxy) o3.emplace_back(X(i) + colw / 2, Y(v));
    }
    svg.polyline(o3, "#33aa55");
  }
  svg.line(pad, Y(0), w - pad, Y(0), "#000000");
  return svg.finish();
}

int cmd_slices(const GlobalOpts& g, const std::string& nlist, bool overlay_o3) {
  std::vector<unsigned> ns = parse_n_list(nlist);
  std::vector<SliceDecomposition> decs(ns.size());
  parallel_for(ns.size(), g.jobs,
               [&](std::size_t i) { decs[i] = refined_slices(ns[i]); });
  if (g.format == "svg") {
    emit(g, slices_svg(decs, overlay_o3));
  } else if (g.format == "json") {
    Json out = Json::array();
    for (const auto& d : decs) {
      Json iv = Json::array();
      for (const auto& s : d.intervals)
        iv.push_back({{"lo", rat_str(s.lo.lo)},
                      {"hi", rat_str(s.hi.hi)},
                      {"degenerate", s.degenerate}});
      out.push_back({{"n", d.n}, {"intervals", iv}});
    }
    emit(g, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    write_slices_csv(os, decs);
    emit(g, os.str());
  }
  return 0;
}

// --- trace -------------------------------------------------------------------

std::string trace_svg(const BoundaryTrace& tr, double y0, double y1) {
  const double pad = 30.0, plot_w = 640.0, plot_h = 360.0;
  double w = 2 * pad + plot_w, h = 2 * pad + plot_h;
  SvgBuilder svg(w, h);
  auto X = [&](double y) { return pad + plot_w * (y - y0) / (y1 - y0); };
  // inverse logarithmic scale: v = -sign(x)/log10|x|, so +-1e-16 maps to
  // +-1/16 and the whole axis stays bounded
  double vmax = 0.30;
  auto Y = [&](double v) {
    v = std::clamp(v, -vmax, vmax);
    return pad + plot_h * (1.0 - (v + vmax) / (2 * vmax));
  };
  svg.line(X(y0), Y(0), X(y1), Y(0), "#000000");
  svg.line(X(y0), Y(1.0 / 16), X(y1), Y(1.0 / 16), "#bbbbbb", "4,3");
  svg.line(X(y0), Y(-1.0 / 16), X(y1), Y(-1.0 / 16), "#bbbbbb", "4,3");
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : tr.samples) {
    double v = 0.0;
    if (s.has_root && !s.root_is_zero && s.log10_abs_x < 0.0)
      v = -static_cast<double>(s.sign) / s.log10_abs_x;
    pts.emplace_back(X(s.y.get_d()), Y(v));
  }
  svg.polyline(pts, "#2244aa");
  return svg.finish();
}

int cmd_trace(const GlobalOpts& g, unsigned n, const std::string& yrange,
              double step) {
  double y0, y1;
  parse_range(yrange, y0, y1);
  if (step <= 0 || y1 < y0 || y0 < 0)
    throw CLI::ValidationError("trace: need 0 <= y0 <= y1 and step > 0");
  // snap every sample to a dyadic grid point so the slice polynomials in x
  // have exact rational coefficients
  std::vector<BigRat> ys;
  for (double y = y0; y <= y1 + step * 0.5; y += step) {
    double snapped = std::round(std::min(y, y1) * 1099511627776.0);
    BigRat q = dyadic(BigInt(snapped), -40);
    if (q < 0) q = 0;
    if (ys.empty() || q != ys.back()) ys.push_back(q);
  }
  BoundaryTrace tr = boundary_trace(n, ys);
  if (g.format == "svg") {
    emit(g, trace_svg(tr, y0, y1));
  } else if (g.format == "json") {
    Json out = Json::array();
    for (const auto& s : tr.samples) {
      Json j{{"y", rat_str(s.y)}, {"has_root", s.has_root}};
      if (s.has_root && !s.root_is_zero) {
        j["sign"] = s.sign;
        j["log10_abs_x"] = s.log10_abs_x;
      }
      out.push_back(std::move(j));
    }
    emit(g, Json{{"n", n}, {"samples", out}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    write_trace_csv(os, tr);
    emit(g, os.str());
  }
  return 0;
}

// --- radial ------------------------------------------------------------------

// nearest rational tangent-half-angle direction: continued-fraction
// convergents of tan(phi/2) until the angle error drops below 1e-6
BigRat snap_direction(double phi) {
  double target = std::tan(phi / 2);
  double x = target;
  BigInt p0(0), q0(1), p1(1), q1(0);
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(x);
    BigInt ai(a);
    BigInt p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    BigRat t(p1, q1);
    t.canonicalize();
    if (std::fabs(2 * std::atan(t.get_d()) - phi) < 1e-6) return t;
    double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  BigRat t(p1, q1);
  t.canonicalize();
  return t;
}

int cmd_radial(const GlobalOpts& g, unsigned n, unsigned directions) {
  if (directions < 2) throw CLI::ValidationError("radial: directions >= 2");
  RatPoly2 gpoly = membership_poly(n, /*scaled=*/true);
  const double pi = 3.14159265358979323846;
  BigRat w = dyadic(BigInt(1), -30);

  struct Row {
    double phi;
    std::string t;  // "inf" on the negative real axis
    bool zero_only;
    double comp_max, glob_max;
  };
  std::vector<Row> rows(directions);
  parallel_for(directions, g.jobs, [&](std::size_t j) {
    double phi = pi / 2 + (pi / 2) * static_cast<double>(j) /
                              static_cast<double>(directions - 1);
    Row& row = rows[j];
    row.phi = phi;
    RadialSlice rs;
    IntPoly q;
    if (j + 1 == directions) {  // exactly phi = pi
      row.t = "inf";
      q = ray_restrict_neg_real(gpoly);
      rs = radial_slice_max_neg_real(n, gpoly);
    } else {
      BigRat t = snap_direction(phi);
      row.t = rat_str(t);
      row.phi = 2 * std::atan(t.get_d());
      q = ray_restrict(gpoly, t);
      rs = radial_slice_max(n, gpoly, t);
    }
    IntPoly sf = squarefree_part(q);
    auto val = [&](RootBox b) {
      if (!b.is_point()) b = refine_root_sf(b, sf, w);
      return (b.lo.get_d() + b.hi.get_d()) / 2;
    };
    row.zero_only = rs.zero_only;
    row.comp_max = rs.component_of_zero_max ? val(*rs.component_of_zero_max)
                                            : 0.0;
    row.glob_max = rs.global_max ? val(*rs.global_max) : 0.0;
  });

  if (g.format == "svg") {
    const double pad = 30.0, plot_w = 560.0, plot_h = 360.0;
    SvgBuilder svg(2 * pad + plot_w, 2 * pad + plot_h);
    double vmax = 0.0;
    for (const Row& r : rows) vmax = std::max(vmax, r.glob_max);
    vmax = std::max(vmax * 1.1, 0.5);
    auto X = [&](double phi) {
      return pad + plot_w * (phi - pi / 2) / (pi / 2);
    };
    auto Y = [&](double v) { return pad + plot_h * (1.0 - v / vmax); };
    svg.line(X(pi / 2), Y(0), X(pi), Y(0), "#000000");
    double inv_e = 0.36787944117144233;
    svg.line(X(pi / 2), Y(inv_e), X(pi), Y(inv_e), "#cc3333", "5,4");
    std::vector<std::pair<double, double>> glob, comp;
    for (const Row& r : rows) {
      glob.emplace_back(X(r.phi), Y(r.glob_max));
      comp.emplace_back(X(r.phi), Y(r.comp_max));
    }
    svg.polyline(glob, "#2244aa");
    svg.polyline(comp, "#88aadd");
    emit(g, svg.finish());
  } else if (g.format == "json") {
    Json out = Json::array();
    for (const Row& r : rows)
      out.push_back({{"phi", r.phi},
                     {"t", r.t},
                     {"zero_only", r.zero_only},
                     {"component_max", r.comp_max},
                     {"global_max", r.glob_max}});
    emit(g, Json{{"n", n}, {"directions", out}}.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "phi,t,zero_only,component_max,global_max\n";
    char buf[64];
    for (const Row& r : rows) {
      std::snprintf(buf, sizeof buf, "%.10f", r.phi);
      os << buf << ',' << r.t << ',' << (r.zero_only ? 1 : 0) << ',';
      std::snprintf(buf, sizeof buf, "%.12g,%.12g", r.comp_max, r.glob_max);
      os << buf << '\n';
    }
    emit(g, os.str());
  }
  return 0;
}

// --- zeros -------------------------------------------------------------------

int cmd_zeros(const GlobalOpts& g, const std::string& family, unsigned n) {
  IntPoly p;
  if (family == "psum")
    p = partial_sum(n);
  else if (family == "scaled")
    p = scaled_partial_sum(n);
  else if (family == "f")
    p = f_m_polynomial(n);
  else if (family == "e")
    p = e_polynomial(n);
  else
    throw CLI::ValidationError("zeros: family must be psum|scaled|f|e");
  auto zs = complex_zeros(p);
  if (g.format == "json") {
    Json out = Json::array();
    for (const auto& z : zs) out.push_back({z.real(), z.imag()});
    emit(g, Json{{"n", n}, {"family", family}, {"zeros", out}}.dump(2) + "\n");
  } else if (g.format == "svg") {
    const double pad = 30.0, plot = 480.0;
    double r = 0.1;
    for (const auto& z : zs) r = std::max(r, std::abs(z));
    r *= 1.1;
    SvgBuilder svg(2 * pad + plot, 2 * pad + plot);
    auto X = [&](double v) { return pad + plot * (v + r) / (2 * r); };
    auto Y = [&](double v) { return pad + plot * (r - v) / (2 * r); };
    svg.line(X(-r), Y(0), X(r), Y(0), "#cccccc");
    svg.line(X(0), Y(-r), X(0), Y(r), "#cccccc");
    for (const auto& z : zs)
      svg.rect(X(z.real()) - 1.5, Y(z.imag()) - 1.5, 3, 3, "#2244aa");
    emit(g, svg.finish());
  } else {
    std::ostringstream os;
    write_zeros_csv(os, zs);
    emit(g, os.str());
  }
  return 0;
}

// --- szego-contours ----------------------------------------------------------

int cmd_szego_contours(const GlobalOpts& g, const std::string& xrange,
                       const std::string& yrange, unsigned nx, unsigned ny) {
  double x0, x1, y0, y1;
  parse_range(xrange, x0, x1);
  parse_range(yrange, y0, y1);
  auto grid = szego_contour_grid(x0, x1, y0, y1, nx, ny);
  if (g.format == "json") {
    Json out = Json::array();
    for (const auto& s : grid) out.push_back({s.x, s.y, s.level});
    emit(g, Json{{"samples", out}}.dump(2) + "\n");
  } else if (g.format == "svg") {
    const double pad = 20.0, plot_w = 560.0, plot_h = 420.0;
    SvgBuilder svg(2 * pad + plot_w, 2 * pad + plot_h);
    auto X = [&](double v) { return pad + plot_w * (v - x0) / (x1 - x0); };
    auto Y = [&](double v) { return pad + plot_h * (y1 - v) / (y1 - y0); };
    double cw = plot_w / static_cast<double>(nx),
           ch = plot_h / static_cast<double>(ny);
    for (const auto& s : grid) {
      if (s.level <= 1.0 && s.x * s.x + s.y * s.y <= 1.0)
        svg.rect(X(s.x) - cw / 2, Y(s.y) - ch / 2, cw, ch, "#aac4e4");
      else if (std::fabs(s.level - 1.0) < 0.02)
        svg.rect(X(s.x) - cw / 2, Y(s.y) - ch / 2, cw, ch, "#cc3333");
    }
    svg.line(X(x0), Y(0), X(x1), Y(0), "#888888");
    emit(g, svg.finish());
  } else {
    std::ostringstream os;
    write_contours_csv(os, grid);
    emit(g, os.str());
  }
  return 0;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(const GlobalOpts& g, const std::string& profile_s,
               const std::string& report_path) {
  Profile profile = profile_s == "full" ? Profile::Full : Profile::Quick;
  auto results = run_all(profile, g.jobs);
  Json rep = report_json(results, profile);
  std::string text = rep.dump(2) + "\n";
  if (!report_path.empty()) write_file_atomic(report_path, text);
  if (report_path.empty() || g.output != "-") emit(g, text);
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified stability regions of the exponential partial sums"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--precision-bits", g.precision_bits, "precision cap in bits")
      ->check(CLI::Range(64, 1 << 20));
  app.add_option("--tol", g.tol, "tolerance (rational p/q or decimal)");
  app.add_option("--cache-dir", g.cache_dir, "certificate cache directory");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--budget", g.budget, "box budget for branch-and-bound");
  app.add_option("-o,--output", g.output, "output path ('-' for stdout)");
  app.add_option("--digits", g.digits, "display column decimals")
      ->check(CLI::Range(1, 12));

  std::string mode = "full", nlist = "1..12", yrange = "0..4";
  std::string family = "psum", profile = "quick", report_path;
  std::string xrange = "-1..2", cyrange = "-1.5..1.5";
  unsigned n = 1, directions = 64, nx = 121, ny = 121;
  double step = 0.0625;
  bool overlay_o3 = false;

  auto add_sub = [&](const char* name, const char* desc) {
    CLI::App* sc = app.add_subcommand(name, desc);
    sc->fallthrough();
    return sc;
  };

  auto* tables = add_sub("tables", "extremal radius tables");
  tables->add_option("--mode", mode)->check(CLI::IsMember({"full", "left", "semidisk"}));
  tables->add_option("--n", nlist, "n-list, e.g. 1..12 or 3,4,8");

  auto* slices = add_sub("slices", "imaginary-axis interval structure");
  slices->add_option("--n", nlist);
  slices->add_flag("--overlay-o3", overlay_o3, "draw the max-growth curve (svg)");

  auto* trace = add_sub("trace", "near-axis boundary trace");
  trace->add_option("--n", n)->required();
  trace->add_option("--y", yrange, "y-range a..b");
  trace->add_option("--step", step);

  auto* radial = add_sub("radial", "angular extent over [pi/2, pi]");
  radial->add_option("--n", n)->required();
  radial->add_option("--directions", directions);

  auto* zeros = add_sub("zeros", "float-grade complex zeros");
  zeros->add_option("--family", family, "psum|scaled|f|e");
  zeros->add_option("--n", n)->required();

  auto* contours = add_sub("szego-contours", "|z e^{1-z}| level grid");
  contours->add_option("--xrange", xrange);
  contours->add_option("--yrange", cyrange);
  contours->add_option("--nx", nx);
  contours->add_option("--ny", ny);

  auto* verify = add_sub("verify", "run the verification suite");
  verify->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--report", report_path, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 3;
  }

  try {
    if (*tables) return cmd_tables(g, mode, nlist);
    if (*slices) return cmd_slices(g, nlist, overlay_o3);
    if (*trace) return cmd_trace(g, n, yrange, step);
    if (*radial) return cmd_radial(g, n, directions);
    if (*zeros) return cmd_zeros(g, family, n);
    if (*contours) return cmd_szego_contours(g, xrange, cyrange, nx, ny);
    if (*verify) return cmd_verify(g, profile, report_path);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}
