#include <doctest.h>

#include "orbit/json_io.hpp"

using namespace orbit;

TEST_CASE("matrix JSON layout")
{
    ComplexMatrix m(1, 2);
    m << Complex(1.0, -2.0), Complex(0.5, 0.0);
    const io::Json j = io::to_json(m);
    CHECK(j.dump() == R"({"cols":2,"entries":[[1.0,-2.0],[0.5,0.0]],"rows":1})");
    CHECK(io::matrix_from_json(j) == m);
}

TEST_CASE("round trips preserve every value exactly")
{
    Rng rng(1);
    const Polarization pol(3);
    const SymplecticElement a = random_symplectic(rng, pol);
    const SymplecticElement a2 = io::symplectic_from_json(io::parse(io::to_json(a).dump()));
    CHECK(a2.g == a.g);
    CHECK(a2.h == a.h);

    const SpAlgebraElement x = random_sp_algebra(rng, pol, 1.0);
    const SpAlgebraElement x2 = io::algebra_from_json(io::to_json(x));
    CHECK(x2.a1 == x.a1);
    CHECK(x2.a2 == x.a2);

    const SiegelPoint z = random_disc_point(rng, pol);
    CHECK(io::siegel_from_json(io::to_json(z)).z == z.z);
    const SiegelTangent v = random_tangent(rng, pol);
    CHECK(io::tangent_from_json(io::to_json(v)).v == v.v);

    const ExtendedPredual m = orbit_point(a, 1.5);
    const ExtendedPredual m2 = io::predual_from_json(io::parse(io::to_json(m).dump(2)));
    CHECK(m2.mu.op.distance(m.mu.op) == 0.0);
    CHECK(m2.gamma == m.gamma);
    CHECK(io::to_json(m2).dump() == io::to_json(m).dump());
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(io::parse("{not json"), ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(io::parse(R"({"rows":1,"cols":2,"entries":[[1,0]]})")), ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(io::parse(R"({"rows":1,"cols":1,"entries":[[1]]})")), ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(io::parse(R"({"rows":-1,"cols":1,"entries":[]})")), ParseError);
    CHECK_THROWS_AS(io::symplectic_from_json(io::parse(R"({"n":1,"g":{"rows":1,"cols":1,"entries":[[1,0]]}})")),
                    ParseError);
    CHECK_THROWS_AS(io::symplectic_from_json(io::parse(
                        R"({"n":2,"g":{"rows":1,"cols":1,"entries":[[1,0]]},"h":{"rows":1,"cols":1,"entries":[[0,0]]}})")),
                    ParseError);
    CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), ParseError);
    CHECK_THROWS_AS(io::complex_from_json(io::parse("[1, 2, 3]")), ParseError);
}
