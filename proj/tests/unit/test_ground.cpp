#include <doctest.h>

#include "catgr/error.hpp"
#include "catgr/ground.hpp"

#include <random>

using namespace catgr;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (int v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

LinearMap map_on(const GroundRing& ring, const Matrix& m) {
    return LinearMap(FreeModule::of_rank(ring, m.cols()), FreeModule::of_rank(ring, m.rows()), m);
}

}  // namespace

TEST_SUITE("ground") {
TEST_CASE("ring kinds and normalization") {
    const auto z = GroundRing::integers();
    const auto q = GroundRing::rationals();
    const auto f5 = GroundRing::prime_field(5);
    CHECK(z.name() == "Z");
    CHECK(q.name() == "Q");
    CHECK(f5.name() == "GF(5)");
    CHECK(GroundRing::from_name("GF(7)") == GroundRing::prime_field(7));
    CHECK_THROWS_AS(GroundRing::prime_field(4), Error);
    CHECK_THROWS_AS(GroundRing::from_name("R"), Error);

    CHECK(f5.normalize(-1) == 4);
    CHECK(f5.normalize(Scalar(1, 2)) == 3);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.inverse(2) == Scalar(3));
    CHECK_FALSE(f5.inverse(0).has_value());
    CHECK(q.inverse(Scalar(-2, 3)) == Scalar(-3, 2));
    CHECK(z.is_unit(-1));
    CHECK_FALSE(z.is_unit(2));
    CHECK(z.fraction_field() == q);

    try {
        z.normalize(Scalar(1, 2));
        FAIL("expected NotInRing");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInRing);
    }
    CHECK_THROWS_AS(GroundRing::prime_field(5).normalize(Scalar(1, 5)), Error);
}

TEST_CASE("parse and format are inverse on canonical text") {
    const auto q = GroundRing::rationals();
    CHECK(q.parse("-3/6") == Scalar(-1, 2));
    CHECK(q.format(Scalar(-1, 2)) == "-1/2");
    CHECK(q.format(4) == "4");
    CHECK(GroundRing::prime_field(3).parse("5") == 2);
    CHECK_THROWS_AS(q.parse("1/0"), Error);
    CHECK_THROWS_AS(q.parse("0.5"), Error);
    CHECK_THROWS_AS(q.parse(""), Error);
    try {
        q.parse("x");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("compose_linear") {
    const auto z = GroundRing::integers();
    const auto f = map_on(z, mat({{1, 0}, {1, 1}}));
    const auto g = map_on(z, mat({{1, 1}, {0, 1}}));
    CHECK(compose_linear(identity_map(f.cod()), f) == f);
    CHECK(compose_linear(g, f).matrix() == mat({{2, 1}, {1, 1}}));

    const auto f2 = GroundRing::prime_field(2);
    const auto h = map_on(f2, mat({{1, 1}, {0, 1}}));
    CHECK(compose_linear(h, h).matrix() == Matrix::identity(2));

    try {
        compose_linear(map_on(z, mat({{1, 2, 3}})), f);
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
    try {
        compose_linear(map_on(GroundRing::rationals(), mat({{1, 0}, {0, 1}})), f);
        FAIL("expected RingMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RingMismatch);
    }
}

TEST_CASE("invert_linear") {
    const auto z = GroundRing::integers();
    const auto q = GroundRing::rationals();
    CHECK(invert_linear(identity_map(FreeModule::of_rank(z, 3))).matrix() == Matrix::identity(3));

    Matrix two(1, 1);
    two(0, 0) = 2;
    Matrix half(1, 1);
    half(0, 0) = Scalar(1, 2);
    CHECK(invert_linear(map_on(q, two)).matrix() == half);
    try {
        invert_linear(map_on(z, two));
        FAIL("expected NotInvertible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInvertible);
    }
    try {
        invert_linear(map_on(q, mat({{1, 2}})));
        FAIL("expected NotSquare");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSquare);
    }

    // det = 1 over Z: invertible, and the inverse is two-sided
    const auto f = map_on(z, mat({{2, 1}, {1, 1}}));
    const auto g = invert_linear(f);
    CHECK(compose_linear(g, f).matrix().is_identity());
    CHECK(compose_linear(f, g).matrix().is_identity());
    CHECK(g.matrix() == mat({{1, -1}, {-1, 2}}));

    // singular over GF(3): det = 2·2 − 1·1 = 3 = 0
    CHECK_THROWS_AS(invert_linear(map_on(GroundRing::prime_field(3), mat({{2, 1}, {1, 2}}))), Error);
}

TEST_CASE("direct_sum") {
    const auto q = GroundRing::rationals();
    const std::vector<FreeModule> none;
    CHECK(direct_sum(q, none).module.rank() == 0);

    const std::vector<FreeModule> mods = {FreeModule(q, {"a", "b"}), FreeModule(q, {"c", "d", "e"})};
    const auto s = direct_sum(q, mods);
    CHECK(s.module.rank() == 5);
    CHECK(s.module.labels() == std::vector<std::string>{"0|a", "0|b", "1|c", "1|d", "1|e"});
    for (std::size_t k = 0; k < 5; ++k) {
        auto [summand, local] = s.local_index(k);
        CHECK(s.global_index(summand, local) == k);
    }

    const std::vector<FreeModule> swapped = {mods[1], mods[0]};
    const auto t = direct_sum(q, swapped);
    CHECK(t.module.rank() == 5);
    CHECK(t.global_index(1, 0) == 3);
    CHECK(s.global_index(1, 0) == 2);

    const std::vector<std::string> tags = {"x", "y"};
    CHECK(direct_sum(q, mods, tags).module.label(2) == "y|c");
    CHECK_THROWS_AS(FreeModule(q, {"a", "a"}), Error);

    const std::vector<FreeModule> mixed = {FreeModule(q, {"a"}), FreeModule(GroundRing::integers(), {"b"})};
    CHECK_THROWS_AS(direct_sum(q, mixed), Error);
}

TEST_CASE("solve and rank") {
    const auto q = GroundRing::rationals();
    const Matrix a = mat({{1, 2}, {2, 4}});
    CHECK(rank(q, a) == 1);
    auto sol = solve(q, a, {3, 6});
    REQUIRE(sol.has_value());
    CHECK(sol->nullity == 1);
    CHECK(apply(q, a, sol->particular) == Vec{3, 6});
    CHECK_FALSE(solve(q, a, {1, 0}).has_value());
    CHECK(rank(GroundRing::prime_field(2), mat({{1, 1}, {1, 1}})) == 1);
    CHECK(rank(q, Matrix(0, 3)) == 0);
}

TEST_CASE("matrix product is associative on random integer matrices") {
    const auto z = GroundRing::integers();
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix f(2, 3), g(4, 2), h(1, 4);
        for (auto* m : {&f, &g, &h})
            for (std::size_t r = 0; r < m->rows(); ++r)
                for (std::size_t c = 0; c < m->cols(); ++c) (*m)(r, c) = d(gen);
        CHECK(multiply(z, multiply(z, h, g), f) == multiply(z, h, multiply(z, g, f)));
    }
}
}
