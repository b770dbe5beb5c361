#include <doctest.h>

#include "catgr/error.hpp"
#include "catgr/fincat.hpp"

#include "fixtures.hpp"

using namespace catgr;

TEST_SUITE("fincat") {
TEST_CASE("terminal category validates") {
    FiniteCategory one({"o"}, {{"1_o", 0, 0}}, {0}, {0});
    CHECK(validate_category(one).ok());
    CHECK(hom_set(one, "o", "o") == std::vector<std::string>{"1_o"});
    const auto t = path_category({{"v"}, {}});
    CHECK(t.object_count() == 1);
    CHECK(t.morphism_count() == 1);
}

TEST_CASE("path categories of linear quivers") {
    const auto a2 = fixtures::a_n(2);
    CHECK(a2.object_count() == 2);
    CHECK(a2.morphism_count() == 3);
    CHECK(hom_set(a2, "1", "2") == std::vector<std::string>{"α"});
    CHECK(hom_set(a2, "2", "1").empty());
    CHECK(validate_category(fixtures::a_n(3)).ok());

    const auto a4 = fixtures::a_n(4);
    CHECK(a4.morphism_count() == 10);
    std::vector<std::string> ids;
    for (const auto& m : a4.morphisms()) ids.push_back(m.id);
    CHECK(ids == std::vector<std::string>{"1_1", "1_2", "1_3", "1_4", "α", "β", "γ", "β∘α", "γ∘β", "γ∘β∘α"});
    for (std::size_t i = 0; i < a4.object_count(); ++i) {
        const auto h = a4.hom(i, i);
        CHECK(std::find(h.begin(), h.end(), a4.identity(i)) != h.end());
    }
    for (std::size_t n = 1; n <= 6; ++n) CHECK(fixtures::a_n(n).morphism_count() == n * (n + 1) / 2);
}

TEST_CASE("path category composition is concatenation") {
    const auto a4 = fixtures::a_n(4);
    const auto al = a4.find_morphism("α"), be = a4.find_morphism("β"), ga = a4.find_morphism("γ");
    CHECK(a4.id(a4.compose(be, al)) == "β∘α");
    CHECK(a4.id(a4.compose(ga, a4.compose(be, al))) == "γ∘β∘α");
    CHECK(a4.compose(al, be) == FiniteCategory::npos);
}

TEST_CASE("cyclic quivers are rejected") {
    Quiver q{{"a", "b"}, {{"f", "a", "b"}, {"g", "b", "a"}}};
    try {
        path_category(q);
        FAIL("expected CyclicQuiver");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CyclicQuiver);
    }
    CHECK_THROWS_AS(path_category({{"a"}, {{"loop", "a", "a"}}}), Error);
    CHECK_THROWS_AS(path_category({{"a"}, {{"f", "a", "zz"}}}), Error);
}

TEST_CASE("broken tables are reported") {
    // A3 with β∘α redirected to β, which has the wrong domain
    const auto a3 = fixtures::a_n(3);
    auto table = a3.table();
    const std::size_t m = a3.morphism_count();
    const auto al = a3.find_morphism("α"), be = a3.find_morphism("β");
    table[be * m + al] = be;
    FiniteCategory bad(a3.objects(), a3.morphisms(), {a3.identity(0), a3.identity(1), a3.identity(2)}, table);
    auto report = validate_category(bad);
    CHECK_FALSE(report.ok());
    bool named = false;
    for (const auto& f : report.findings()) named = named || f.location.find("(β,α)") != std::string::npos;
    CHECK(named);

    table = a3.table();
    table[be * m + al] = FiniteCategory::npos;
    FiniteCategory missing(a3.objects(), a3.morphisms(), {a3.identity(0), a3.identity(1), a3.identity(2)}, table);
    CHECK(validate_category(missing).has_check("composite-missing"));
}

TEST_CASE("unknown names") {
    const auto a2 = fixtures::a_n(2);
    try {
        hom_set(a2, "1", "9");
        FAIL("expected UnknownObject");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownObject);
    }
    CHECK_THROWS_AS(a2.find_morphism("nope"), Error);
}

TEST_CASE("cyclic groups") {
    const auto z3 = cyclic_group(3);
    CHECK(validate_category(z3).ok());
    CHECK(z3.id(z3.compose(1, 2)) == "e");
    CHECK(z3.id(z3.compose(1, 1)) == "g^2");
}

TEST_CASE("random acyclic quivers give valid categories") {
    fixtures::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto q = fixtures::random_quiver(rng, 6);
        const auto c = path_category(q);
        CHECK(validate_category(c).ok());
        CHECK(c.morphism_count() >= q.vertices.size() + q.arrows.size());
    }
}
}
