#include "catgr/rep.hpp"

#include "catgr/error.hpp"

namespace catgr {

Representation::Representation(FiniteCategory base, std::vector<LinearCategoryPtr> fibers,
                               std::vector<AdditiveFunctor> act, std::vector<NatIso> eta,
                               std::vector<std::optional<NatIso>> theta)
    : base_(std::move(base)),
      fibers_(std::move(fibers)),
      act_(std::move(act)),
      eta_(std::move(eta)),
      theta_(std::move(theta)) {
    const std::size_t n = base_.object_count();
    const std::size_t m = base_.morphism_count();
    if (fibers_.size() != n) throw Error(ErrorCode::InvalidRepresentation, "need one fiber per object");
    if (act_.size() != m) throw Error(ErrorCode::InvalidRepresentation, "need one functor per morphism");
    if (eta_.size() != n) throw Error(ErrorCode::InvalidRepresentation, "need one η per object");
    if (theta_.size() != m * m) throw Error(ErrorCode::InvalidRepresentation, "θ table must be m x m");
    for (const auto& f : fibers_)
        if (!f) throw Error(ErrorCode::InvalidRepresentation, "null fiber");
    if (n > 0) ring_ = fibers_[0]->ring();
    for (const auto& f : fibers_)
        if (f->ring() != ring_) throw Error(ErrorCode::InvalidRepresentation, "fibers over different rings");
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t a = 0; a < m; ++a)
            if (base_.composable(b, a) != theta_[b * m + a].has_value())
                throw Error(ErrorCode::InvalidRepresentation,
                            "θ must be given exactly on composable pairs; offending pair (" + base_.id(b) + "," +
                                base_.id(a) + ")");
}

const NatIso& Representation::theta(std::size_t b, std::size_t a) const {
    const auto& t = theta_.at(b * base_.morphism_count() + a);
    if (!t) throw Error(ErrorCode::InvalidArgument, "(" + base_.id(b) + "," + base_.id(a) + ") is not composable");
    return *t;
}

std::pair<HomElem, HomElem> rep1_legs(const Representation& r, std::size_t c, std::size_t b, std::size_t a,
                                      std::size_t x) {
    const auto& cat = r.base();
    const std::size_t ba = cat.compose(b, a);
    const std::size_t cb = cat.compose(c, b);
    const auto& target = r.fiber(cat.cod(c));
    HomElem left = target.compose(r.mu(c, ba).at(x), r.act(c)(r.mu(b, a).at(x)));
    HomElem right = target.compose(r.mu(cb, a).at(x), r.mu(c, b).at(r.act(a).obj(x)));
    return {std::move(left), std::move(right)};
}

std::pair<HomElem, HomElem> rep2_legs(const Representation& r, std::size_t a, std::size_t x) {
    const auto& cat = r.base();
    const std::size_t i = cat.dom(a), j = cat.cod(a);
    const auto& target = r.fiber(j);
    HomElem left = target.compose(r.mu(a, cat.identity(i)).at(x), r.act(a)(r.delta(i).at(x)));
    HomElem right = target.compose(r.mu(cat.identity(j), a).at(x), r.delta(j).at(r.act(a).obj(x)));
    return {std::move(left), std::move(right)};
}

ValidationReport validate_representation(const Representation& r) {
    ValidationReport report;
    const auto& cat = r.base();
    report.merge(validate_category(cat), "category");
    if (!report.ok()) return report;

    for (std::size_t i = 0; i < cat.object_count(); ++i)
        report.merge(validate_linear_category(r.fiber(i)), "fiber/" + cat.object(i));

    bool typed = true;
    for (std::size_t a = 0; a < cat.morphism_count(); ++a) {
        const auto& f = r.act(a);
        if (!same_category(f.dom(), r.fiber_ptr(cat.dom(a))) || !same_category(f.cod(), r.fiber_ptr(cat.cod(a)))) {
            report.add("typing", "act/" + cat.id(a), "R(a) is not a functor R(dom a) → R(cod a)");
            typed = false;
            continue;
        }
        report.merge(validate_functor(f), "act/" + cat.id(a));
    }
    if (!typed) return report;

    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        const auto& e = r.eta(i);
        const std::string where = "eta/" + cat.object(i);
        if (!(e.forward.source() == r.act(cat.identity(i))) || !(e.forward.target() == identity_functor(r.fiber_ptr(i)))) {
            report.add("typing", where, "η_i is not a transformation R(1_i) ⇒ Id");
            typed = false;
            continue;
        }
        report.merge(check_nat_iso(e), where);
    }
    for (std::size_t b = 0; b < cat.morphism_count(); ++b)
        for (std::size_t a = 0; a < cat.morphism_count(); ++a) {
            if (!cat.composable(b, a)) continue;
            const auto& t = r.theta(b, a);
            const std::string where = "theta/(" + cat.id(b) + "," + cat.id(a) + ")";
            if (!(t.forward.source() == r.act(cat.compose(b, a))) ||
                !(t.forward.target() == compose_functors(r.act(b), r.act(a)))) {
                report.add("typing", where, "θ_{b,a} is not a transformation R(ba) ⇒ R(b)R(a)");
                typed = false;
                continue;
            }
            report.merge(check_nat_iso(t), where);
        }
    if (!typed) return report;

    for (std::size_t a = 0; a < cat.morphism_count(); ++a)
        for (std::size_t b = 0; b < cat.morphism_count(); ++b) {
            if (!cat.composable(b, a)) continue;
            for (std::size_t c = 0; c < cat.morphism_count(); ++c) {
                if (!cat.composable(c, b)) continue;
                const auto& fiber = r.fiber(cat.dom(a));
                for (std::size_t x = 0; x < fiber.object_count(); ++x) {
                    auto [left, right] = rep1_legs(r, c, b, a, x);
                    if (left != right) {
                        const auto& ring = r.ring();
                        report.add("rep1",
                                   "rep1/(" + cat.id(c) + "," + cat.id(b) + "," + cat.id(a) + ")/x=" + fiber.object(x),
                                   "left leg " + format_vector(ring, left.coeffs) + ", right leg " +
                                       format_vector(ring, right.coeffs));
                    }
                }
            }
        }

    for (std::size_t a = 0; a < cat.morphism_count(); ++a) {
        const auto& fiber = r.fiber(cat.dom(a));
        const auto& target = r.fiber(cat.cod(a));
        for (std::size_t x = 0; x < fiber.object_count(); ++x) {
            auto [left, right] = rep2_legs(r, a, x);
            const HomElem id = target.identity(r.act(a).obj(x));
            const std::string where = "rep2/" + cat.id(a) + "/x=" + fiber.object(x);
            if (left != id)
                report.add("rep2", where + "/left",
                           "μ_{a,1}∘R(a)δ = " + format_vector(r.ring(), left.coeffs) + ", identity is " +
                               format_vector(r.ring(), id.coeffs));
            if (right != id)
                report.add("rep2", where + "/right",
                           "μ_{1,a}∘δR(a) = " + format_vector(r.ring(), right.coeffs) + ", identity is " +
                               format_vector(r.ring(), id.coeffs));
        }
    }
    return report;
}

bool is_strict(const Representation& r) {
    const auto& cat = r.base();
    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        if (!is_identity_functor(r.act(cat.identity(i)))) return false;
        if (!is_identity_transform(r.eta(i).forward) || !is_identity_transform(r.eta(i).backward)) return false;
    }
    for (std::size_t b = 0; b < cat.morphism_count(); ++b)
        for (std::size_t a = 0; a < cat.morphism_count(); ++a) {
            if (!cat.composable(b, a)) continue;
            if (!(r.act(cat.compose(b, a)) == compose_functors(r.act(b), r.act(a)))) return false;
            if (!is_identity_transform(r.theta(b, a).forward) || !is_identity_transform(r.theta(b, a).backward))
                return false;
        }
    return true;
}

namespace {

NatTransform scalar_transform(const AdditiveFunctor& f, const Scalar& s) {
    const auto& cod = *f.cod();
    std::vector<HomElem> comps;
    for (std::size_t x = 0; x < f.dom()->object_count(); ++x) comps.push_back(cod.scale(s, cod.identity(f.obj(x))));
    return NatTransform(f, f, std::move(comps));
}

Scalar cocycle_value(const Cocycle& sigma, std::size_t b, std::size_t a) {
    auto it = sigma.find({b, a});
    return it == sigma.end() ? Scalar(1) : it->second;
}

}  // namespace

Representation constant_representation(const FiniteCategory& c, const GroundRing& ring) {
    return twisted_constant_representation(c, ground_category(ring), {});
}

Representation twisted_constant_representation(const FiniteCategory& c, const LinearCategoryPtr& fiber,
                                               const Cocycle& sigma) {
    const auto& ring = fiber->ring();
    const std::size_t n = c.object_count();
    const std::size_t m = c.morphism_count();
    const AdditiveFunctor id = identity_functor(fiber);

    auto twist = [&](std::size_t b, std::size_t a) {
        Scalar s = ring.normalize(cocycle_value(sigma, b, a));
        auto inv = ring.inverse(s);
        if (!inv)
            throw Error(ErrorCode::NotAUnit, "σ(" + c.id(b) + "," + c.id(a) + ") = " + ring.format(s) +
                                                 " is not a unit in " + ring.name());
        return std::pair{s, *inv};
    };

    std::vector<NatIso> eta;
    for (std::size_t i = 0; i < n; ++i) {
        auto [s, inv] = twist(c.identity(i), c.identity(i));
        eta.push_back({scalar_transform(id, inv), scalar_transform(id, s)});
    }
    std::vector<std::optional<NatIso>> theta(m * m);
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t a = 0; a < m; ++a) {
            if (!c.composable(b, a)) continue;
            auto [s, inv] = twist(b, a);
            theta[b * m + a] = NatIso{scalar_transform(id, s), scalar_transform(id, inv)};
        }
    return Representation(c, std::vector<LinearCategoryPtr>(n, fiber), std::vector<AdditiveFunctor>(m, id),
                          std::move(eta), std::move(theta));
}

Representation twisted_group_representation(const FiniteCategory& g, const GroundRing& ring, const Cocycle& sigma) {
    return twisted_constant_representation(g, ground_category(ring), sigma);
}

Cocycle coboundary(const FiniteCategory& c, const GroundRing& ring, const std::vector<Scalar>& lambda) {
    if (lambda.size() != c.morphism_count()) throw Error(ErrorCode::InvalidArgument, "one λ value per morphism required");
    Cocycle sigma;
    for (std::size_t b = 0; b < c.morphism_count(); ++b)
        for (std::size_t a = 0; a < c.morphism_count(); ++a) {
            if (!c.composable(b, a)) continue;
            if (c.compose(b, a) == FiniteCategory::npos)
                throw Error(ErrorCode::InvalidArgument, "composite " + c.id(b) + "∘" + c.id(a) + " is undefined");
            auto inv = ring.inverse(ring.normalize(lambda[c.compose(b, a)]));
            if (!inv) throw Error(ErrorCode::NotAUnit, "λ(" + c.id(c.compose(b, a)) + ") is not a unit");
            sigma[{b, a}] = ring.mul(ring.mul(ring.normalize(lambda[b]), ring.normalize(lambda[a])), *inv);
        }
    return sigma;
}

bool is_cocycle(const FiniteCategory& c, const GroundRing& ring, const Cocycle& sigma) {
    const std::size_t m = c.morphism_count();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (!c.composable(b, a)) continue;
            for (std::size_t cc = 0; cc < m; ++cc) {
                if (!c.composable(cc, b)) continue;
                Scalar lhs = ring.mul(cocycle_value(sigma, b, a), cocycle_value(sigma, cc, c.compose(b, a)));
                Scalar rhs = ring.mul(cocycle_value(sigma, cc, b), cocycle_value(sigma, c.compose(cc, b), a));
                if (ring.normalize(lhs) != ring.normalize(rhs)) return false;
            }
        }
    return true;
}

// ------------------------------------------------------------ fiber modules

FiberModule::FiberModule(LinearCategoryPtr cat, std::vector<FreeModule> values, std::vector<std::vector<Matrix>> actions)
    : cat_(std::move(cat)), values_(std::move(values)), actions_(std::move(actions)) {
    if (!cat_) throw Error(ErrorCode::CategoryMismatch, "module needs a category");
    const std::size_t n = cat_->object_count();
    if (values_.size() != n) throw Error(ErrorCode::DimensionMismatch, "need one value per object");
    if (actions_.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "need actions for every object pair");
    for (const auto& v : values_)
        if (v.ring() != cat_->ring()) throw Error(ErrorCode::RingMismatch, "module value over a different ring");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto& acts = actions_[x * n + y];
            if (acts.size() != cat_->hom_rank(x, y))
                throw Error(ErrorCode::DimensionMismatch, "need one matrix per basis element");
            for (const auto& m : acts)
                if (m.rows() != values_[x].rank() || m.cols() != values_[y].rank())
                    throw Error(ErrorCode::DimensionMismatch, "action matrix for " + cat_->object(x) + "->" +
                                                                  cat_->object(y) + " has the wrong shape");
        }
}

Matrix FiberModule::apply(const HomElem& g) const {
    Matrix out(values_.at(g.src).rank(), values_.at(g.dst).rank());
    for (std::size_t p = 0; p < g.coeffs.size(); ++p)
        if (g.coeffs[p] != 0) axpy(cat_->ring(), out, g.coeffs[p], basis_action(g.src, g.dst, p));
    return out;
}

ValidationReport validate_fiber_module(const FiberModule& n) {
    ValidationReport report;
    const auto& a = *n.cat();
    const std::size_t k = a.object_count();
    for (std::size_t x = 0; x < k; ++x)
        if (!n.apply(a.identity(x)).is_identity()) report.add("module-identity", a.object(x), "N(id) is not the identity");
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t z = 0; z < k; ++z)
                for (std::size_t p = 0; p < a.hom_rank(x, y); ++p)
                    for (std::size_t q = 0; q < a.hom_rank(y, z); ++q) {
                        Matrix lhs = n.apply(a.compose(a.basis(y, z, q), a.basis(x, y, p)));
                        Matrix rhs = multiply(a.ring(), n.basis_action(x, y, p), n.basis_action(y, z, q));
                        if (lhs != rhs)
                            report.add("module-composition",
                                       "(" + a.hom(y, z).label(q) + "," + a.hom(x, y).label(p) + ")",
                                       "N(g∘f) = " + format_matrix(a.ring(), lhs) + ", N(f)∘N(g) = " +
                                           format_matrix(a.ring(), rhs));
                    }
    return report;
}

FiberModule restrict_module(const Representation& r, std::size_t a, const FiberModule& n) {
    const auto& cat = r.base();
    const auto& f = r.act(a);
    if (!same_category(n.cat(), r.fiber_ptr(cat.cod(a))))
        throw Error(ErrorCode::CategoryMismatch, "module is not over R(cod a)");
    const auto& src = r.fiber(cat.dom(a));
    const std::size_t k = src.object_count();
    std::vector<FreeModule> values;
    for (std::size_t x = 0; x < k; ++x) values.push_back(n.value(f.obj(x)));
    std::vector<std::vector<Matrix>> actions(k * k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t p = 0; p < src.hom_rank(x, y); ++p) actions[x * k + y].push_back(n.apply(f(src.basis(x, y, p))));
    return FiberModule(r.fiber_ptr(cat.dom(a)), std::move(values), std::move(actions));
}

}  // namespace catgr
