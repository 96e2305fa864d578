#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "expsum/families.hpp"
#include "expsum/region.hpp"
#include "expsum/serialize.hpp"

using namespace expsum;

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("expsum-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("polynomial JSON roundtrip preserves every coefficient") {
  for (unsigned n : {1u, 6u, 11u}) {
    IntPoly p = e_polynomial(n);
    Json j = poly_to_json(p, n, "E");
    CHECK(j.at("family") == "E");
    IntPoly q = poly_from_json(j);
    CHECK(p == q);
  }
}

TEST_CASE("certificate JSON roundtrip") {
  RadiusCertificate c;
  c.n = 8;
  c.mode = RadiusMode::LeftHalf;
  c.lo = BigRat(54578, 100000);
  c.lo.canonicalize();
  c.hi = c.lo + BigRat(1, 1000000);
  c.hi.canonicalize();
  c.witness_x = BigRat(-1, 3);
  c.witness_y = BigRat(2, 5);
  Json j = certificate_to_json(c, BigRat(1, 1000000));
  RadiusCertificate d = certificate_from_json(j);
  CHECK(d.n == c.n);
  CHECK(d.mode == c.mode);
  CHECK(d.lo == c.lo);
  CHECK(d.hi == c.hi);
  CHECK(d.witness_x == c.witness_x);
  CHECK(d.witness_y == c.witness_y);
  CHECK(j.at("tol") == "1/1000000");
}

TEST_CASE("decimal rendering rounds in the requested direction") {
  BigRat third(1, 3);
  std::string down = rat_decimal(third, 6, false);
  std::string up = rat_decimal(third, 6, true);
  CHECK(down == "0.333333");
  CHECK(up == "0.333334");
  CHECK(rat_decimal(BigRat(1, 2), 6, false) == "0.5");
}

TEST_CASE("CSV writers emit the documented headers") {
  std::ostringstream s1;
  write_slices_csv(s1, {v_plus(5)});
  CHECK(s1.str().rfind("n,k,lo,hi,degenerate\n", 0) == 0);

  std::ostringstream s2;
  write_trace_csv(s2, boundary_trace(1, {BigRat(1, 2)}));
  CHECK(s2.str().rfind("n,y,sign,log10_abs_x\n", 0) == 0);

  std::ostringstream s3;
  write_zeros_csv(s3, {{0.5, -1.25}});
  CHECK(s3.str() == "re,im\n0.5,-1.25\n");

  std::ostringstream s4;
  write_contours_csv(s4, {{0.0, 1.0, 0.5}});
  CHECK(s4.str().rfind("x,y,level\n", 0) == 0);
}

TEST_CASE("atomic write leaves no temp file and replaces content") {
  TempDir tmp;
  fs::path f = tmp.path / "out.txt";
  write_file_atomic(f, "first");
  write_file_atomic(f, "second");
  std::ifstream is(f);
  std::string got((std::istreambuf_iterator<char>(is)),
                  std::istreambuf_iterator<char>());
  CHECK(got == "second");
  CHECK(!fs::exists(f.string() + ".tmp"));
}

TEST_CASE("cache: hit after put, miss on different key, stable addressing") {
  TempDir tmp;
  CertificateCache cache(tmp.path);
  Json key{{"command", "tables"}, {"mode", "full"}, {"n", 4}};
  CHECK(!cache.get(key).has_value());
  cache.put(key, Json{{"lo", "1/2"}});
  auto hit = cache.get(key);
  REQUIRE(hit.has_value());
  CHECK(hit->at("lo") == "1/2");
  Json other = key;
  other["n"] = 5;
  CHECK(!cache.get(other).has_value());
  CHECK(cache.path_for(key) == cache.path_for(key));
  CHECK(cache.path_for(key) != cache.path_for(other));
}

TEST_CASE("disabled cache never stores") {
  CertificateCache cache{std::filesystem::path()};
  CHECK(!cache.enabled());
  cache.put(Json{{"k", 1}}, Json{{"v", 2}});
  CHECK(!cache.get(Json{{"k", 1}}).has_value());
}

TEST_CASE("svg builder output is deterministic") {
  auto make = [] {
    SvgBuilder svg(100, 50);
    svg.rect(1, 2, 3, 4, "#000000");
    svg.line(0, 0, 10, 10, "#ff0000", "2,2");
    svg.polyline({{0, 0}, {5, 2.5}}, "#00ff00");
    return svg.finish();
  };
  std::string a = make(), b = make();
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("stroke-dasharray=\"2,2\"") != std::string::npos);
}
