// Control field ansatz: envelope behaviour, frozen point values, parameter
// packing, sampling and the text fixture round trip.

#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "qocsim/errors.hpp"
#include "qocsim/field.hpp"

using namespace qocsim;

namespace {

ControlField cosine_example() {
  ControlField f;
  f.kind = FieldKind::cosine_comb;
  f.total_time = 10.0;
  f.envelope_exponent = 2.0;
  f.base_frequency = {0.5};
  f.amplitude = {2.0};
  f.detuning = {0.1};
  f.phase = {0.2};
  return f;
}

ControlField gaussian_example() {
  ControlField f;
  f.kind = FieldKind::gaussian_comb;
  f.total_time = 10.0;
  f.envelope_exponent = 2.0;
  f.amplitude = {1.5};
  f.center = {0.3};
  f.width = {0.1};
  return f;
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("cosine comb reproduces frozen point values") {
  ControlField f = cosine_example();
  // sqrt(sin(pi/4)) * 2 cos(0.6 * 2.5 - 0.2)
  CHECK(f.value(2.5) == doctest::Approx(0.44987761214996641).epsilon(1e-14));

  f.base_frequency.push_back(1.2);
  f.amplitude.push_back(-0.5);
  f.detuning.push_back(0.0);
  f.phase.push_back(-0.4);
  CHECK(f.value(7.5) == doctest::Approx(-0.25374202637667304).epsilon(1e-14));
}

TEST_CASE("gaussian comb reproduces frozen point value") {
  const ControlField f = gaussian_example();
  // sqrt(sin(0.4 pi)) * 1.5 exp(-1)
  CHECK(f.value(4.0) == doctest::Approx(0.53814578114612144).epsilon(1e-14));
}

TEST_CASE("envelope switches the field on and off") {
  ControlField f = cosine_example();
  // Constant unit carrier isolates the envelope.
  f.base_frequency = {0.0};
  f.amplitude = {1.0};
  f.detuning = {0.0};
  f.phase = {0.0};

  CHECK(f.value(0.0) == 0.0);
  CHECK(std::abs(f.value(f.total_time)) < 1e-7);
  // Arguments outside [0, T] clamp onto the envelope endpoints.
  CHECK(f.value(-3.0) == 0.0);
  CHECK(std::abs(f.value(25.0)) < 1e-7);

  // At the midpoint the envelope is exactly one for any exponent.
  for (const double e : {1.0, 2.0, 3.0}) {
    f.envelope_exponent = e;
    CHECK(f.value(5.0) == doctest::Approx(1.0).epsilon(1e-15));
  }

  // exponent 1 gives the plain half sine, exponent 2 its square root.
  f.envelope_exponent = 1.0;
  const double quarter = std::sin(std::acos(-1.0) * 0.25);
  CHECK(f.value(2.5) == doctest::Approx(quarter).epsilon(1e-14));
  f.envelope_exponent = 2.0;
  CHECK(f.value(2.5) == doctest::Approx(std::sqrt(quarter)).epsilon(1e-14));
}

TEST_CASE("parameter vector packs and restores both field kinds") {
  ControlField c = cosine_example();
  c.base_frequency = {0.5, 1.5};
  c.amplitude = {2.0, -1.0};
  c.detuning = {0.1, -0.2};
  c.phase = {0.2, 0.3};
  const std::vector<double> theta = c.parameters();
  REQUIRE(theta.size() == 6);
  CHECK(theta == std::vector<double>{2.0, -1.0, 0.1, -0.2, 0.2, 0.3});

  std::vector<double> moved = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  c.set_parameters(moved);
  CHECK(c.amplitude == std::vector<double>{1.0, 2.0});
  CHECK(c.detuning == std::vector<double>{3.0, 4.0});
  CHECK(c.phase == std::vector<double>{5.0, 6.0});
  CHECK(c.base_frequency == std::vector<double>{0.5, 1.5});

  ControlField g = gaussian_example();
  const std::vector<double> gt = g.parameters();
  CHECK(gt == std::vector<double>{1.5, 0.3, 0.1});
  g.set_parameters(std::vector<double>{0.7, 0.6, 0.2});
  CHECK(g.amplitude == std::vector<double>{0.7});
  CHECK(g.center == std::vector<double>{0.6});
  CHECK(g.width == std::vector<double>{0.2});

  CHECK_THROWS_AS(c.set_parameters(std::vector<double>{1.0, 2.0}),
                  invariant_error);
}

TEST_CASE("component array invariants are enforced") {
  ControlField f = cosine_example();
  f.detuning.push_back(0.0);
  CHECK_THROWS_AS(f.value(1.0), invariant_error);
  CHECK_THROWS_AS(f.parameters(), invariant_error);

  ControlField g = gaussian_example();
  g.width.clear();
  CHECK_THROWS_AS(g.value(1.0), invariant_error);

  ControlField t = cosine_example();
  t.total_time = 0.0;
  CHECK_THROWS_AS(t.value(1.0), invariant_error);
}

TEST_CASE("sample_field evaluates left endpoints or midpoints") {
  const ControlField f = cosine_example();
  const std::vector<double> left = sample_field(f, 2.5, 4, false);
  REQUIRE(left.size() == 4);
  CHECK(left[0] == 0.0);
  CHECK(left[1] == doctest::Approx(f.value(2.5)).epsilon(1e-15));
  CHECK(left[3] == doctest::Approx(f.value(7.5)).epsilon(1e-15));

  const std::vector<double> mid = sample_field(f, 2.5, 4, true);
  REQUIRE(mid.size() == 4);
  CHECK(mid[0] == doctest::Approx(f.value(1.25)).epsilon(1e-15));
  CHECK(mid[3] == doctest::Approx(f.value(8.75)).epsilon(1e-15));
}

TEST_CASE("field fixtures round trip through the text format") {
  ControlField c = cosine_example();
  c.base_frequency = {0.5, 1.2};
  c.amplitude = {2.0, -0.5};
  c.detuning = {0.1, 0.0};
  c.phase = {0.2, -0.4};
  const std::string cpath = temp_path("qocsim_field_cos.txt");
  save_field(c, cpath);
  const ControlField cr = load_field(cpath);
  CHECK(cr.kind == FieldKind::cosine_comb);
  CHECK(cr.total_time == c.total_time);
  CHECK(cr.envelope_exponent == c.envelope_exponent);
  CHECK(cr.base_frequency == c.base_frequency);
  CHECK(cr.amplitude == c.amplitude);
  CHECK(cr.detuning == c.detuning);
  CHECK(cr.phase == c.phase);

  const ControlField g = gaussian_example();
  const std::string gpath = temp_path("qocsim_field_gauss.txt");
  save_field(g, gpath);
  const ControlField gr = load_field(gpath);
  CHECK(gr.kind == FieldKind::gaussian_comb);
  CHECK(gr.amplitude == g.amplitude);
  CHECK(gr.center == g.center);
  CHECK(gr.width == g.width);

  std::remove(cpath.c_str());
  std::remove(gpath.c_str());
}

TEST_CASE("field fixture loader rejects malformed input") {
  CHECK_THROWS_AS(load_field(temp_path("qocsim_no_such_fixture.txt")),
                  config_error);

  const std::string path = temp_path("qocsim_field_bad.txt");
  auto write_file = [&path](const std::string& text) {
    std::ofstream out(path);
    out << text;
  };

  write_file("kind = cosine_comb\ntotal_time = 1\n");
  CHECK_THROWS_AS(load_field(path), config_error); // missing keys

  write_file("kind = square_comb\ntotal_time = 1\nenvelope_exponent = 2\n"
             "amplitude = 1\n");
  CHECK_THROWS_AS(load_field(path), config_error); // unknown kind

  write_file("kind = gaussian_comb\ntotal_time = 1\nenvelope_exponent = 2\n"
             "amplitude = 1 nope\ncenter = 0.5 0.5\nwidth = 0.1 0.1\n");
  CHECK_THROWS_AS(load_field(path), config_error); // bad number

  // Comments and blank lines are ignored; inline comments are stripped.
  write_file("# header\n\nkind = gaussian_comb # trailing\n"
             "total_time = 2\nenvelope_exponent = 2\n"
             "amplitude = 0.25\ncenter = 0.5\nwidth = 0.125\n");
  const ControlField f = load_field(path);
  CHECK(f.kind == FieldKind::gaussian_comb);
  CHECK(f.total_time == 2.0);
  CHECK(f.amplitude == std::vector<double>{0.25});
  std::remove(path.c_str());
}
