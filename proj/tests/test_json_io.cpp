#include <doctest.h>

#include <random>

#include "polarmap/json_io.hpp"
#include "test_support.hpp"

using namespace polarmap;
using nlohmann::json;

TEST_CASE("parse identity jones document") {
  const json doc = json::parse(R"({"kind":"jones","data":[[[1,0],[0,0]],[[0,0],[1,0]]]})");
  const MatrixDocument parsed = parse_matrix(doc);
  CHECK(parsed.kind == DocKind::jones);
  CHECK(max_abs_diff(std::get<JonesMatrix>(parsed.value).t, CMat2::identity()) == 0.0);
}

TEST_CASE("parse singlet density document") {
  const MatrixDocument parsed = parse_matrix(serialize(singlet_state()));
  const auto& rho = std::get<DensityMatrix2>(parsed.value);
  CHECK(rho.r.trace().real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(max_abs_diff(rho.r, singlet_state().r) == 0.0);
}

TEST_CASE("shape and content validation") {
  CHECK_THROWS_AS(parse_matrix(json::parse(
                      R"({"kind":"mueller_real","data":[[1,0,0],[0,1,0],[0,0,1]]})")),
                  ValidationError);
  CHECK_THROWS_AS(parse_matrix(json::parse(R"({"kind":"nope","data":[]})")), ValidationError);
  CHECK_THROWS_AS(parse_matrix(json::parse(R"({"data":[]})")), ValidationError);

  // imaginary residue on a real kind
  json real_doc = serialize(MuellerReal::identity());
  real_doc["data"][0][0] = json::array({1.0, 0.5});
  CHECK_THROWS_AS(parse_matrix(real_doc), ValidationError);
  real_doc["data"][0][0] = json::array({1.0, 1e-14});  // inside tolerance
  CHECK(parse_matrix(real_doc).kind == DocKind::mueller_real);

  // non-finite entries
  json jones_doc = serialize(JonesMatrix::identity());
  jones_doc["data"][0][0] = json::array({std::numeric_limits<double>::infinity(), 0.0});
  CHECK_THROWS_AS(parse_matrix(jones_doc), ValidationError);

  // density kinds are validated as states
  json bad_density = serialize(DensityMatrix1::maximally_mixed());
  bad_density["data"][0][0] = json::array({2.0, 0.0});
  CHECK_THROWS_AS(parse_matrix(bad_density), ValidationError);
}

TEST_CASE("serialize/parse roundtrips are lossless") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const JonesMatrix t = testing::random_jones(rng);
    const auto back = std::get<JonesMatrix>(parse_matrix(serialize(t)).value);
    CHECK(back.t == t.t);  // bit-exact through shortest-roundtrip decimals

    const MuellerForms f = mueller_from_ensemble(testing::random_ensemble(rng));
    const auto ms = std::get<MuellerStd>(parse_matrix(serialize(f.std_form)).value);
    CHECK(ms.m == f.std_form.m);
    const auto mr = std::get<MuellerReal>(parse_matrix(serialize(f.real_form)).value);
    CHECK(mr.m.a == f.real_form.m.a);

    const DensityMatrix2 rho{testing::random_density<4>(rng)};
    const auto rho_back = std::get<DensityMatrix2>(parse_matrix(serialize(rho)).value);
    CHECK(rho_back.r == rho.r);
  }
}

TEST_CASE("format_double emits shortest roundtrip decimals") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1.0");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  const double v = 0.1 + 0.2;
  CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("missing files raise a dedicated error") {
  CHECK_THROWS_AS(parse_matrix_file("/definitely/not/here.json"), FileNotFoundError);
}
