#include <doctest.h>

#include "catgr/error.hpp"
#include "catgr/lincat.hpp"

#include "fixtures.hpp"

using namespace catgr;

namespace {

// Q[t]/(t^2 - 2) on basis {1, t}.
LinearCategoryPtr quadratic() {
    const auto q = GroundRing::rationals();
    return one_object_category(q, {"1", "t"}, {1, 0}, [](std::size_t a, std::size_t b) -> Vec {
        if (a == 0) return unit_vector(2, b);
        if (b == 0) return unit_vector(2, a);
        return {2, 0};
    });
}

}  // namespace

TEST_SUITE("lincat") {
TEST_CASE("unital rings as one-object categories") {
    CHECK(validate_linear_category(*quadratic()).ok());
    CHECK(validate_linear_category(*ground_category(GroundRing::integers())).ok());
}

TEST_CASE("broken unit law names the basis element") {
    const auto q = GroundRing::rationals();
    auto bad = one_object_category(q, {"1", "t"}, {1, 0}, [](std::size_t a, std::size_t b) -> Vec {
        if (a == 0 && b == 1) return {0, 2};  // 1·t = 2t
        if (a == 0) return unit_vector(2, b);
        if (b == 0) return unit_vector(2, a);
        return {0, 0};
    });
    auto report = validate_linear_category(*bad);
    CHECK(report.has_check("unit-left"));
    bool named = false;
    for (const auto& f : report.findings()) named = named || f.location.find("t") != std::string::npos;
    CHECK(named);
}

TEST_CASE("linearize") {
    const auto q = GroundRing::rationals();
    const auto a2 = linearize(fixtures::a_n(2), q);
    CHECK(a2->hom_rank(0, 1) == 1);
    CHECK(a2->hom_rank(1, 0) == 0);
    CHECK(validate_linear_category(*a2).ok());

    const auto a3c = fixtures::a_n(3);
    const auto a3 = linearize(a3c, q);
    CHECK(validate_linear_category(*a3).ok());
    const auto al = a3->basis(0, 1, 0), be = a3->basis(1, 2, 0);
    const auto ba = a3->compose(be, al);
    CHECK(a3->hom(0, 2).label(0) == "β∘α");
    CHECK(ba.coeffs == Vec{1});

    const auto t = linearize(path_category({{"v"}, {}}), GroundRing::integers());
    CHECK(t->object_count() == 1);
    CHECK(t->hom_rank(0, 0) == 1);
    CHECK_FALSE(*t == *ground_category(GroundRing::integers()));  // object named "v", not "*"
}

TEST_CASE("compose_hom") {
    const auto a3 = linearize(fixtures::a_n(3), GroundRing::rationals());
    const auto f = a3->scale(3, a3->basis(0, 1, 0));
    CHECK(a3->compose(a3->identity(1), f) == f);
    CHECK(a3->compose(a3->basis(1, 2, 0), a3->zero(0, 1)) == a3->zero(0, 2));
    try {
        a3->compose(f, f);
        FAIL("expected ObjectMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ObjectMismatch);
    }
    CHECK(a3->format(f) == "3*α");
    CHECK(a3->format(a3->zero(0, 2)) == "0");
}

TEST_CASE("functors") {
    const auto a = quadratic();
    const auto id = identity_functor(a);
    CHECK(is_identity_functor(id));
    CHECK(validate_functor(id).ok());

    // the conjugation t ↦ −t is a ring automorphism
    Matrix conj(2, 2);
    conj(0, 0) = 1;
    conj(1, 1) = -1;
    AdditiveFunctor c(a, a, {0}, {conj});
    CHECK(validate_functor(c).ok());
    CHECK(compose_functors(id, c) == c);
    CHECK(compose_functors(c, c) == id);
    const HomElem v{0, 0, {5, 7}};
    CHECK(apply_functor(id, v) == v);
    CHECK(c(v) == HomElem{0, 0, {5, -7}});

    // t ↦ 2t does not respect t·t = 2
    Matrix dbl(2, 2);
    dbl(0, 0) = 1;
    dbl(1, 1) = 2;
    CHECK(validate_functor(AdditiveFunctor(a, a, {0}, {dbl})).has_check("functor-composition"));

    const auto other = ground_category(GroundRing::rationals());
    try {
        compose_functors(c, identity_functor(other));
        FAIL("expected CategoryMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CategoryMismatch);
    }
}

TEST_CASE("natural isomorphisms") {
    const auto a = quadratic();
    const auto id = identity_functor(a);
    CHECK(check_nat_iso(identity_iso(id)).ok());
    CHECK(whisker(id, identity_transform(id)) == identity_transform(id));
    CHECK(whisker(identity_transform(id), id) == identity_transform(id));

    // scaling by 2 over Z without fixing the inverse
    const auto z = ground_category(GroundRing::integers());
    const auto idz = identity_functor(z);
    NatTransform two(idz, idz, {z->scale(2, z->identity(0))});
    auto report = check_nat_iso({two, identity_transform(idz)});
    CHECK(report.has_check("inverse"));
    CHECK_THROWS_AS(nat_iso_from_forward(two), Error);

    // over Q it inverts
    const auto q = ground_category(GroundRing::rationals());
    const auto idq = identity_functor(q);
    const auto iso = nat_iso_from_forward(NatTransform(idq, idq, {q->scale(2, q->identity(0))}));
    CHECK(iso.backward.at(0).coeffs == Vec{Scalar(1, 2)});
    CHECK(check_nat_iso(iso).ok());

    // t is invertible in Q[t]/(t^2 - 2): t^{-1} = t/2, but multiplication by t
    // is natural for the identity functor only because the ring is commutative
    auto inv = invert_hom(*a, HomElem{0, 0, {0, 1}});
    REQUIRE(inv.has_value());
    CHECK(inv->coeffs == Vec{0, Scalar(1, 2)});
    CHECK(check_naturality(NatTransform(id, id, {HomElem{0, 0, {0, 1}}})).ok());
}

TEST_CASE("whiskering") {
    const auto a = quadratic();
    const auto id = identity_functor(a);
    Matrix conj(2, 2);
    conj(0, 0) = 1;
    conj(1, 1) = -1;
    AdditiveFunctor c(a, a, {0}, {conj});
    NatTransform t(id, id, {HomElem{0, 0, {1, 1}}});
    const auto left = whisker(c, t);
    CHECK(left.at(0) == c(t.at(0)));
    CHECK(vcompose(identity_transform(id), t) == t);
}
}
