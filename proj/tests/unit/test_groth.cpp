#include <doctest.h>

#include "catgr/groth.hpp"

#include "fixtures.hpp"

#include <set>

using namespace catgr;

namespace {

GrothendieckPtr gr_of(const std::string& file) { return grothendieck_construction(fixtures::load_rep(file)); }

Vec dense(std::initializer_list<int> xs) {
    Vec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

// s² = p·e + q·s has a nontrivial idempotent a·e + b·s (b ≠ 0) iff
// a = 1/2, b² = 1/(q² + 4p) with q² + 4p a nonzero rational square.
bool quadratic_has_idempotent(const Scalar& p, const Scalar& q) {
    const Scalar disc = q * q + 4 * p;
    if (disc <= 0) return false;
    const Integer n = numerator(disc), d = denominator(disc);
    const Integer rn = sqrt(n), rd = sqrt(d);
    return rn * rn == n && rd * rd == d;
}

}  // namespace

TEST_SUITE("groth") {
TEST_CASE("A2 constant: hom ranks and identities") {
    const auto gr = gr_of("a2_constant.json");
    const auto& cat = gr->category();
    REQUIRE(gr->object_count() == 2);
    CHECK(gr->object_label(0) == "1:*");
    CHECK(gr->object_label(1) == "2:*");
    CHECK(cat.hom_rank(0, 0) == 1);
    CHECK(cat.hom_rank(0, 1) == 1);
    CHECK(cat.hom_rank(1, 0) == 0);
    CHECK(cat.hom_rank(1, 1) == 1);
    CHECK(validate_linear_category(cat).ok());

    const auto& r = gr->rep();
    for (std::size_t k = 0; k < 2; ++k) {
        const auto id = gr_identity(r, gr->object(k));
        REQUIRE(id.parts.size() == 1);
        const auto one = r.base().identity(gr->object(k).base);
        CHECK(id.parts.at(one) == r.eta(gr->object(k).base).forward.at(0));
        CHECK(gr->to_element(id) == cat.identity(k));
    }
    const auto alpha = gr->basis_morphism(0, 1, 0);
    CHECK(gr_compose(r, gr_identity(r, gr->object(1)), alpha) == alpha);
    CHECK(gr_compose(r, alpha, gr_identity(r, gr->object(0))) == alpha);
    CHECK_THROWS_AS(gr_compose(r, alpha, alpha), Error);
}

TEST_CASE("identity carries η when σ(1,1) ≠ 1") {
    const auto g = cyclic_group(2, {"e", "s"});
    const auto r = fixtures::share(twisted_group_representation(g, fixtures::Q(), coboundary(g, fixtures::Q(), {3, 1})));
    const auto gr = grothendieck_construction(r);
    const auto id = gr_identity(*r, gr->object(0));
    CHECK(id.parts.at(0).coeffs == Vec{Scalar(1, 3)});
    CHECK(validate_linear_category(gr->category()).ok());
    CHECK(check_algebra_laws(pseudoskew_algebra(gr).algebra).ok());
}

TEST_CASE("twisted Z/2: s ∘ s = -1 at e") {
    const auto gr = gr_of("z2_twisted.json");
    const auto& r = gr->rep();
    const auto e = r.base().find_morphism("e"), s = r.base().find_morphism("s");
    const auto ss = gr->basis_morphism(0, 0, gr->global_index(0, 0, s, 0));
    const auto prod = gr_compose(r, ss, ss);
    REQUIRE(prod.parts.size() == 1);
    CHECK(prod.parts.at(e).coeffs == Vec{-1});

    const auto alg = pseudoskew_algebra(gr).algebra;
    REQUIRE(alg.dimension() == 2);
    CHECK(alg.label(0) == "e|*:*|*:*|1");
    CHECK(alg.label(1) == "s|*:*|*:*|1");
    CHECK(alg.product_dense(1, 1) == dense({-1, 0}));
    CHECK(alg.unit() == dense({1, 0}));
}

TEST_CASE("R[C] of A_n is the path algebra") {
    static const std::vector<std::string> greek = {"α", "β", "γ", "δ", "ε"};
    for (std::size_t n = 2; n <= 5; ++n) {
        CAPTURE(n);
        const auto r = fixtures::share(constant_representation(fixtures::a_n(n), fixtures::Q()));
        const auto alg = pseudoskew_algebra(r).algebra;
        const auto paths = fixtures::linear_paths(n, greek);
        REQUIRE(alg.dimension() == n * (n + 1) / 2);
        REQUIRE(alg.dimension() == paths.size());

        std::map<std::string, std::size_t> index;
        for (std::size_t k = 0; k < alg.dimension(); ++k) index[fixtures::morphism_of(alg.label(k))] = k;
        std::map<std::string, const fixtures::Path*> by_name;
        for (const auto& p : paths) by_name[p.name()] = &p;
        REQUIRE(index.size() == paths.size());
        for (const auto& [name, k] : index) REQUIRE(by_name.count(name) == 1);

        for (std::size_t u = 0; u < alg.dimension(); ++u)
            for (std::size_t v = 0; v < alg.dimension(); ++v) {
                const auto& pu = *by_name.at(fixtures::morphism_of(alg.label(u)));
                const auto& pv = *by_name.at(fixtures::morphism_of(alg.label(v)));
                Vec expect = zero_vector(alg.dimension());
                if (auto c = fixtures::concat(pu, pv)) expect[index.at(c->name())] = 1;
                CHECK(alg.product_dense(u, v) == expect);
            }
        Vec unit = zero_vector(alg.dimension());
        for (std::size_t i = 1; i <= n; ++i) unit[index.at("1_" + std::to_string(i))] = 1;
        CHECK(alg.unit() == unit);
        CHECK(check_algebra_laws(alg).ok());
    }
}

TEST_CASE("skew group algebra of Z/2 acting on K×K by swapping") {
    const auto alg = pseudoskew_algebra(gr_of("z2_swap_skew.json"));
    const auto& a = alg.algebra;
    REQUIRE(a.basis() == std::vector<std::string>{"e|*:*|*:*|e1", "e|*:*|*:*|e2", "s|*:*|*:*|e1", "s|*:*|*:*|e2"});
    enum { E1, E2, S1, S2 };
    std::map<std::pair<int, int>, int> table = {{{E1, E1}, E1}, {{E1, S1}, S1}, {{E2, E2}, E2}, {{E2, S2}, S2},
                                                {{S1, E2}, S1}, {{S1, S2}, E1}, {{S2, E1}, S2}, {{S2, S1}, E2}};
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            Vec expect = zero_vector(4);
            if (auto it = table.find({u, v}); it != table.end()) expect[it->second] = 1;
            CAPTURE(u);
            CAPTURE(v);
            CHECK(a.product_dense(u, v) == expect);
        }
    CHECK(a.unit() == dense({1, 1, 0, 0}));
    CHECK(skew_specialization_oracle(alg).ok());

    const auto summary = algebra_report(a);
    CHECK(summary.laws.ok());
    CHECK_FALSE(summary.commutative);
    CHECK(summary.center_dimension == 1);
}

TEST_CASE("skew oracle preconditions") {
    try {
        skew_specialization_oracle(pseudoskew_algebra(gr_of("z2_twisted.json")));
        FAIL("expected NotStrict");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotStrict);
    }
    const auto fiber = linearize(path_category(linear_quiver(2)), fixtures::Q());
    const auto r = fixtures::share(twisted_constant_representation(fixtures::a_n(2), fiber, {}));
    try {
        skew_specialization_oracle(pseudoskew_algebra(r));
        FAIL("expected NotRingValued");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotRingValued);
    }
    CHECK(skew_specialization_oracle(pseudoskew_algebra(gr_of("z2_trivial.json"))).ok());
    CHECK(skew_specialization_oracle(pseudoskew_algebra(gr_of("a3_constant.json"))).ok());
}

TEST_CASE("algebra summaries") {
    const auto a2 = algebra_report(pseudoskew_algebra(gr_of("a2_constant.json")).algebra);
    CHECK(a2.dimension == 3);
    CHECK(a2.associativity_checked);
    CHECK(a2.laws.ok());
    CHECK_FALSE(a2.commutative);
    CHECK(a2.center_dimension == 1);

    const auto tw = algebra_report(pseudoskew_algebra(gr_of("z2_twisted.json")).algebra);
    CHECK(tw.commutative);
    CHECK(tw.center_dimension == 2);

    const auto fast = algebra_report(pseudoskew_algebra(gr_of("a4_constant.json")).algebra, false);
    CHECK(fast.dimension == 10);
    CHECK_FALSE(fast.associativity_checked);

    const auto empty = pseudoskew_algebra(fixtures::share(constant_representation(FiniteCategory(), fixtures::Q())));
    CHECK(empty.algebra.dimension() == 0);
    CHECK(empty.algebra.unit().empty());
    CHECK(check_algebra_laws(empty.algebra).ok());
}

TEST_CASE("idempotents distinguish the trivial and twisted Z/2 algebras") {
    for (const auto* file : {"z2_trivial.json", "z2_twisted.json"}) {
        CAPTURE(file);
        const auto a = pseudoskew_algebra(gr_of(file)).algebra;
        REQUIRE(a.dimension() == 2);
        REQUIRE(a.unit() == dense({1, 0}));
        const Vec s2 = a.product_dense(1, 1);
        const bool predicted = quadratic_has_idempotent(s2[0], s2[1]);
        CHECK(predicted == (std::string(file) == "z2_trivial.json"));

        // search a·e + b·s with small a, b
        bool found = false;
        static const std::vector<Scalar> pool = {0, 1, -1, Scalar(1, 2), Scalar(-1, 2), 2};
        for (const auto& x : pool)
            for (const auto& y : pool) {
                const Vec v{x, y};
                if (y == 0) continue;
                if (a.multiply(v, v) == v) found = true;
            }
        CHECK(found == predicted);
    }
}

TEST_CASE("incoherent representations") {
    const auto r = fixtures::load_rep("a4_broken_mu.json");
    try {
        grothendieck_construction(r);
        FAIL("expected InvalidRepresentation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidRepresentation);
    }
    CHECK_THROWS_AS(pseudoskew_algebra(r), Error);
    const auto gr = grothendieck_construction(r, false);
    CHECK_FALSE(validate_linear_category(gr->category()).ok());
    const auto laws = check_algebra_laws(pseudoskew_algebra(gr).algebra);
    CHECK(laws.has_check("associativity"));
    CHECK_FALSE(laws.has_check("unit-left"));
}

TEST_CASE("basis bookkeeping") {
    const auto gr = gr_of("a3_constant.json");
    const auto alg = pseudoskew_algebra(gr);
    std::set<std::size_t> seen;
    for (std::size_t s = 0; s < gr->object_count(); ++s)
        for (std::size_t d = 0; d < gr->object_count(); ++d)
            for (std::size_t g = 0; g < gr->category().hom_rank(s, d); ++g) {
                const auto ref = gr->basis_ref(s, d, g);
                CHECK(gr->global_index(s, d, ref.morphism, ref.local) == g);
                CHECK(gr->to_element(gr->basis_morphism(s, d, g)) == gr->category().basis(s, d, g));
                seen.insert(alg.index(s, d, g));
            }
    CHECK(seen.size() == alg.algebra.dimension());
    CHECK_THROWS_AS(gr->index_of({7, 0}), Error);
}
}
