#pragma once

#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "expsum/bigrat.hpp"
#include "expsum/errors.hpp"
#include "expsum/extremal.hpp"
#include "expsum/intpoly.hpp"
#include "expsum/interval.hpp"
#include "expsum/region.hpp"
#include "expsum/szego.hpp"

namespace expsum {

using Json = nlohmann::json;

// Bumped whenever a change can alter any cached numeric result.
inline constexpr const char* kCodeVersion = "expsum-1";

// --- rational <-> string helpers --------------------------------------------

inline std::string rat_str(const BigRat& q) { return q.get_str(); }

inline BigRat rat_from_str(const std::string& s) {
  BigRat q(s);
  q.canonicalize();
  return q;
}

// Decimal rendering of an exact rational with directed rounding; used for
// CSV output where exact num/den strings would be unwieldy.
inline std::string rat_decimal(const BigRat& q, int digits, bool round_up) {
  Interval v = Interval::from_rat(q, 256);
  char* s = nullptr;
  int rc = round_up ? mpfr_asprintf(&s, "%.*RUg", digits, v.hi_raw())
                    : mpfr_asprintf(&s, "%.*RDg", digits, v.lo_raw());
  if (rc < 0) throw DomainError("rat_decimal: formatting failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

// --- polynomial JSON ---------------------------------------------------------

inline Json poly_to_json(const IntPoly& p, unsigned n,
                         const std::string& family) {
  Json coeffs = Json::array();
  for (std::size_t k = 0; k <= (p.is_zero() ? 0 : p.degree()); ++k) {
    BigRat c = p.rat_coeff(k);
    coeffs.push_back({BigInt(c.get_num()).get_str(),
                      BigInt(c.get_den()).get_str()});
  }
  return Json{{"n", n}, {"family", family}, {"coeffs", coeffs}};
}

inline IntPoly poly_from_json(const Json& j) {
  std::vector<BigRat> q;
  for (const auto& pair : j.at("coeffs")) {
    BigRat c(BigInt(pair.at(0).get<std::string>()),
             BigInt(pair.at(1).get<std::string>()));
    c.canonicalize();
    q.push_back(c);
  }
  return IntPoly::from_rat_coeffs(q);
}

// --- radius certificate JSON -------------------------------------------------

inline std::string mode_str(RadiusMode m) {
  switch (m) {
    case RadiusMode::Full: return "full";
    case RadiusMode::LeftHalf: return "left";
    default: return "semidisk";
  }
}

inline RadiusMode mode_from_str(const std::string& s) {
  if (s == "full") return RadiusMode::Full;
  if (s == "left") return RadiusMode::LeftHalf;
  if (s == "semidisk") return RadiusMode::InnerSemiDisk;
  throw DomainError("mode_from_str: unknown mode " + s);
}

inline Json certificate_to_json(const RadiusCertificate& c, const BigRat& tol) {
  return Json{{"n", c.n},
              {"mode", mode_str(c.mode)},
              {"lo", rat_str(c.lo)},
              {"hi", rat_str(c.hi)},
              {"witness", {{"re", rat_str(c.witness_x)},
                           {"im", rat_str(c.witness_y)}}},
              {"tol", rat_str(tol)}};
}

inline RadiusCertificate certificate_from_json(const Json& j) {
  RadiusCertificate c;
  c.n = j.at("n").get<unsigned>();
  c.mode = mode_from_str(j.at("mode").get<std::string>());
  c.lo = rat_from_str(j.at("lo").get<std::string>());
  c.hi = rat_from_str(j.at("hi").get<std::string>());
  c.witness_x = rat_from_str(j.at("witness").at("re").get<std::string>());
  c.witness_y = rat_from_str(j.at("witness").at("im").get<std::string>());
  return c;
}

// --- CSV writers -------------------------------------------------------------

inline void write_slices_csv(std::ostream& os,
                             const std::vector<SliceDecomposition>& decs) {
  os << "n,k,lo,hi,degenerate\n";
  for (const auto& d : decs) {
    unsigned k = 1;
    for (const auto& iv : d.intervals) {
      os << d.n << ',' << k++ << ',' << rat_decimal(iv.lo.lo, 15, false) << ','
         << rat_decimal(iv.hi.hi, 15, true) << ',' << (iv.degenerate ? 1 : 0)
         << '\n';
    }
  }
}

inline void write_trace_csv(std::ostream& os, const BoundaryTrace& tr) {
  os << "n,y,sign,log10_abs_x\n";
  char buf[64];
  for (const auto& s : tr.samples) {
    std::snprintf(buf, sizeof buf, "%.6f", s.log10_abs_x);
    os << tr.n << ',' << rat_decimal(s.y, 15, false) << ','
       << (s.root_is_zero ? 0 : s.sign) << ',' << (s.has_root ? buf : "")
       << '\n';
  }
}

inline void write_zeros_csv(std::ostream& os,
                            const std::vector<std::complex<double>>& zs) {
  os << "re,im\n";
  char buf[96];
  for (const auto& z : zs) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
    os << buf << '\n';
  }
}

inline void write_contours_csv(std::ostream& os,
                               const std::vector<ContourSample>& samples) {
  os << "x,y,level\n";
  char buf[112];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g", s.x, s.y, s.level);
    os << buf << '\n';
  }
}

// --- minimal deterministic SVG builder ---------------------------------------

class SvgBuilder {
 public:
  SvgBuilder(double w, double h) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                  "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  w, h, w, h);
    body_ = buf;
  }

  void rect(double x, double y, double w, double h, const std::string& fill) {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.4f\" y=\"%.4f\" width=\"%.4f\" height=\"%.4f\" "
                  "fill=\"%s\"/>\n",
                  x, y, w, h, fill.c_str());
    body_ += buf;
  }

  void line(double x1, double y1, double x2, double y2,
            const std::string& stroke, const std::string& dash = "") {
    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\" "
                  "stroke=\"%s\" stroke-width=\"1\"%s%s%s/>\n",
                  x1, y1, x2, y2, stroke.c_str(),
                  dash.empty() ? "" : " stroke-dasharray=\"",
                  dash.c_str(), dash.empty() ? "" : "\"");
    body_ += buf;
  }

  void polyline(const std::vector<std::pair<double, double>>& pts,
                const std::string& stroke) {
    body_ += "<polyline fill=\"none\" stroke=\"" + stroke +
             "\" stroke-width=\"1\" points=\"";
    char buf[64];
    for (const auto& [x, y] : pts) {
      std::snprintf(buf, sizeof buf, "%.4f,%.4f ", x, y);
      body_ += buf;
    }
    body_ += "\"/>\n";
  }

  std::string finish() const { return body_ + "</svg>\n"; }

 private:
  std::string body_;
};

// --- atomic file output ------------------------------------------------------

inline void write_file_atomic(const std::filesystem::path& path,
                              const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw DomainError("write_file_atomic: cannot open " + tmp.string());
    os << content;
  }
  std::filesystem::rename(tmp, path);
}

// --- content-addressed certificate cache -------------------------------------

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace detail

class CertificateCache {
 public:
  explicit CertificateCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  bool enabled() const { return !dir_.empty(); }

  // Key = (command, params, code version, precision cap), content-addressed.
  std::filesystem::path path_for(const Json& key) const {
    Json full = key;
    full["code_version"] = kCodeVersion;
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(detail::fnv1a(full.dump())));
    return dir_ / (std::string(buf) + ".json");
  }

  std::optional<Json> get(const Json& key) const {
    if (!enabled()) return std::nullopt;
    std::filesystem::path p = path_for(key);
    std::ifstream is(p, std::ios::binary);
    if (!is) return std::nullopt;
    Json j = Json::parse(is, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return std::nullopt;
    return j;
  }

  void put(const Json& key, const Json& value) const {
    if (!enabled()) return;
    write_file_atomic(path_for(key), value.dump(2) + "\n");
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace expsum
