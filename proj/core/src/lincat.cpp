#include "catgr/lincat.hpp"

#include "catgr/error.hpp"

namespace catgr {

// ----------------------------------------------------------- LinearCategory

LinearCategory::LinearCategory(GroundRing ring, std::vector<std::string> objects, std::vector<FreeModule> homs,
                               std::vector<Vec> identities, const StructureFn& structure)
    : ring_(std::move(ring)), objects_(std::move(objects)), homs_(std::move(homs)), identities_(std::move(identities)) {
    const std::size_t n = objects_.size();
    if (homs_.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "need one hom module per object pair");
    if (identities_.size() != n) throw Error(ErrorCode::DimensionMismatch, "need one identity per object");
    for (const auto& h : homs_)
        if (h.ring() != ring_) throw Error(ErrorCode::RingMismatch, "hom module over a different ring");
    for (std::size_t x = 0; x < n; ++x)
        if (identities_[x].size() != hom_rank(x, x))
            throw Error(ErrorCode::DimensionMismatch, "identity of '" + objects_[x] + "' has the wrong length");
    structure_.resize(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                auto& block = structure_[(x * n + y) * n + z];
                const std::size_t rf = hom_rank(x, y);
                const std::size_t rg = hom_rank(y, z);
                block.reserve(rg * rf);
                for (std::size_t q = 0; q < rg; ++q)
                    for (std::size_t p = 0; p < rf; ++p) {
                        Vec v = structure(x, y, z, q, p);
                        if (v.size() != hom_rank(x, z))
                            throw Error(ErrorCode::DimensionMismatch, "structure constant has the wrong length");
                        for (auto& s : v) s = ring_.normalize(s);
                        block.push_back(std::move(v));
                    }
            }
}

std::size_t LinearCategory::find_object(std::string_view name) const {
    for (std::size_t x = 0; x < objects_.size(); ++x)
        if (objects_[x] == name) return x;
    throw Error(ErrorCode::UnknownObject, "no object '" + std::string(name) + "'");
}

const Vec& LinearCategory::structure(std::size_t x, std::size_t y, std::size_t z, std::size_t q,
                                     std::size_t p) const {
    const std::size_t n = objects_.size();
    return structure_.at((x * n + y) * n + z).at(q * hom_rank(x, y) + p);
}

HomElem LinearCategory::compose(const HomElem& g, const HomElem& f) const {
    if (f.dst != g.src)
        throw Error(ErrorCode::ObjectMismatch, "cannot compose: f ends at '" + object(f.dst) + "', g starts at '" +
                                                   object(g.src) + "'");
    const std::size_t x = f.src, y = f.dst, z = g.dst;
    HomElem out = zero(x, z);
    for (std::size_t q = 0; q < g.coeffs.size(); ++q) {
        if (g.coeffs[q] == 0) continue;
        for (std::size_t p = 0; p < f.coeffs.size(); ++p) {
            if (f.coeffs[p] == 0) continue;
            axpy(ring_, out.coeffs, ring_.mul(g.coeffs[q], f.coeffs[p]), structure(x, y, z, q, p));
        }
    }
    return out;
}

HomElem LinearCategory::add(const HomElem& a, const HomElem& b) const {
    if (a.src != b.src || a.dst != b.dst) throw Error(ErrorCode::ObjectMismatch, "cannot add elements of different homs");
    return {a.src, a.dst, catgr::add(ring_, a.coeffs, b.coeffs)};
}

HomElem LinearCategory::scale(const Scalar& c, const HomElem& a) const {
    return {a.src, a.dst, catgr::scale(ring_, c, a.coeffs)};
}

std::string LinearCategory::format(const HomElem& e) const {
    const auto& module = hom(e.src, e.dst);
    std::string s;
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
        if (e.coeffs[k] == 0) continue;
        if (!s.empty()) s += " + ";
        if (e.coeffs[k] != 1) s += ring_.format(e.coeffs[k]) + "*";
        s += module.label(k);
    }
    return s.empty() ? "0" : s;
}

bool same_category(const LinearCategoryPtr& a, const LinearCategoryPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

ValidationReport validate_linear_category(const LinearCategory& a, bool check_associativity) {
    ValidationReport report;
    const std::size_t n = a.object_count();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t p = 0; p < a.hom_rank(x, y); ++p) {
                HomElem f = a.basis(x, y, p);
                HomElem left = a.compose(a.identity(y), f);
                HomElem right = a.compose(f, a.identity(x));
                const std::string where = a.object(x) + "->" + a.object(y) + "/" + a.hom(x, y).label(p);
                if (left != f) report.add("unit-left", where, "id∘f = " + a.format(left));
                if (right != f) report.add("unit-right", where, "f∘id = " + a.format(right));
            }
    if (!check_associativity) return report;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w)
                    for (std::size_t p = 0; p < a.hom_rank(x, y); ++p)
                        for (std::size_t q = 0; q < a.hom_rank(y, z); ++q) {
                            HomElem gf = a.compose(a.basis(y, z, q), a.basis(x, y, p));
                            for (std::size_t r = 0; r < a.hom_rank(z, w); ++r) {
                                HomElem h = a.basis(z, w, r);
                                HomElem lhs = a.compose(h, gf);
                                HomElem rhs = a.compose(a.compose(h, a.basis(y, z, q)), a.basis(x, y, p));
                                if (lhs != rhs)
                                    report.add("associativity",
                                               "(" + a.hom(z, w).label(r) + "," + a.hom(y, z).label(q) + "," +
                                                   a.hom(x, y).label(p) + ")@" + a.object(x) + "->" + a.object(y) +
                                                   "->" + a.object(z) + "->" + a.object(w),
                                               "h∘(g∘f) = " + a.format(lhs) + ", (h∘g)∘f = " + a.format(rhs));
                            }
                        }
    return report;
}

LinearCategoryPtr linearize(const FiniteCategory& c, const GroundRing& ring) {
    const std::size_t n = c.object_count();
    std::vector<FreeModule> homs;
    // position of each morphism within its hom set
    std::vector<std::size_t> position(c.morphism_count());
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<std::string> labels;
            auto h = c.hom(x, y);
            for (std::size_t k = 0; k < h.size(); ++k) {
                position[h[k]] = k;
                labels.push_back(c.id(h[k]));
            }
            homs.emplace_back(ring, std::move(labels));
        }
    std::vector<Vec> identities;
    for (std::size_t x = 0; x < n; ++x)
        identities.push_back(unit_vector(c.hom(x, x).size(), position[c.identity(x)]));
    auto structure = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t q, std::size_t p) {
        std::size_t a = c.hom(x, y)[p];
        std::size_t b = c.hom(y, z)[q];
        std::size_t ba = c.compose(b, a);
        if (ba == FiniteCategory::npos || c.dom(ba) != x || c.cod(ba) != z)
            throw Error(ErrorCode::InvalidArgument, "composite of (" + c.id(b) + "," + c.id(a) + ") is missing or mistyped");
        return unit_vector(c.hom(x, z).size(), position[ba]);
    };
    return std::make_shared<const LinearCategory>(ring, c.objects(), std::move(homs), std::move(identities), structure);
}

LinearCategoryPtr one_object_category(const GroundRing& ring, std::vector<std::string> basis, Vec unit,
                                      const std::function<Vec(std::size_t, std::size_t)>& products) {
    std::vector<FreeModule> homs{FreeModule(ring, std::move(basis))};
    for (auto& s : unit) s = ring.normalize(s);
    return std::make_shared<const LinearCategory>(
        ring, std::vector<std::string>{"*"}, std::move(homs), std::vector<Vec>{std::move(unit)},
        [&](std::size_t, std::size_t, std::size_t, std::size_t q, std::size_t p) { return products(q, p); });
}

LinearCategoryPtr ground_category(const GroundRing& ring) {
    return one_object_category(ring, {"1"}, Vec{Scalar(1)}, [](std::size_t, std::size_t) { return Vec{Scalar(1)}; });
}

// ----------------------------------------------------------------- functors

AdditiveFunctor::AdditiveFunctor(LinearCategoryPtr dom, LinearCategoryPtr cod, std::vector<std::size_t> obj_map,
                                 std::vector<Matrix> hom_map)
    : dom_(std::move(dom)), cod_(std::move(cod)), obj_map_(std::move(obj_map)), hom_map_(std::move(hom_map)) {
    if (!dom_ || !cod_) throw Error(ErrorCode::CategoryMismatch, "functor needs both categories");
    if (dom_->ring() != cod_->ring()) throw Error(ErrorCode::RingMismatch, "functor between categories over different rings");
    const std::size_t n = dom_->object_count();
    if (obj_map_.size() != n) throw Error(ErrorCode::DimensionMismatch, "object map has the wrong length");
    for (std::size_t y : obj_map_)
        if (y >= cod_->object_count()) throw Error(ErrorCode::UnknownObject, "object map leaves the codomain");
    if (hom_map_.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "need one matrix per object pair");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Matrix& m = hom_map_[x * n + y];
            if (m.cols() != dom_->hom_rank(x, y) || m.rows() != cod_->hom_rank(obj_map_[x], obj_map_[y]))
                throw Error(ErrorCode::DimensionMismatch,
                            "hom matrix for " + dom_->object(x) + "->" + dom_->object(y) + " has the wrong shape");
        }
}

HomElem AdditiveFunctor::operator()(const HomElem& e) const {
    return {obj(e.src), obj(e.dst), apply(dom_->ring(), hom_matrix(e.src, e.dst), e.coeffs)};
}

AdditiveFunctor identity_functor(const LinearCategoryPtr& a) {
    const std::size_t n = a->object_count();
    std::vector<std::size_t> objs(n);
    std::vector<Matrix> homs;
    for (std::size_t x = 0; x < n; ++x) objs[x] = x;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) homs.push_back(Matrix::identity(a->hom_rank(x, y)));
    return AdditiveFunctor(a, a, std::move(objs), std::move(homs));
}

AdditiveFunctor compose_functors(const AdditiveFunctor& g, const AdditiveFunctor& f) {
    if (!same_category(f.cod(), g.dom())) throw Error(ErrorCode::CategoryMismatch, "cod(F) differs from dom(G)");
    const std::size_t n = f.dom()->object_count();
    std::vector<std::size_t> objs(n);
    for (std::size_t x = 0; x < n; ++x) objs[x] = g.obj(f.obj(x));
    std::vector<Matrix> homs;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            homs.push_back(multiply(f.dom()->ring(), g.hom_matrix(f.obj(x), f.obj(y)), f.hom_matrix(x, y)));
    return AdditiveFunctor(f.dom(), g.cod(), std::move(objs), std::move(homs));
}

bool is_identity_functor(const AdditiveFunctor& f) {
    if (!same_category(f.dom(), f.cod())) return false;
    for (std::size_t x = 0; x < f.obj_map().size(); ++x)
        if (f.obj(x) != x) return false;
    for (const auto& m : f.hom_map())
        if (!m.is_identity()) return false;
    return true;
}

ValidationReport validate_functor(const AdditiveFunctor& f) {
    ValidationReport report;
    const auto& a = *f.dom();
    const auto& b = *f.cod();
    const std::size_t n = a.object_count();
    for (std::size_t x = 0; x < n; ++x) {
        HomElem img = f(a.identity(x));
        if (img != b.identity(f.obj(x)))
            report.add("functor-identity", a.object(x), "F(id) = " + b.format(img));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t p = 0; p < a.hom_rank(x, y); ++p)
                    for (std::size_t q = 0; q < a.hom_rank(y, z); ++q) {
                        HomElem fg = a.basis(x, y, p);
                        HomElem gg = a.basis(y, z, q);
                        HomElem lhs = f(a.compose(gg, fg));
                        HomElem rhs = b.compose(f(gg), f(fg));
                        if (lhs != rhs)
                            report.add("functor-composition",
                                       "(" + a.hom(y, z).label(q) + "," + a.hom(x, y).label(p) + ")",
                                       "F(g∘f) = " + b.format(lhs) + ", F(g)∘F(f) = " + b.format(rhs));
                    }
    return report;
}

// --------------------------------------------------- natural transformations

NatTransform::NatTransform(AdditiveFunctor source, AdditiveFunctor target, std::vector<HomElem> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    if (!same_category(source_.dom(), target_.dom()) || !same_category(source_.cod(), target_.cod()))
        throw Error(ErrorCode::CategoryMismatch, "source and target functors are not parallel");
    const std::size_t n = source_.dom()->object_count();
    if (components_.size() != n) throw Error(ErrorCode::DimensionMismatch, "need one component per object");
    const auto& cod = *source_.cod();
    for (std::size_t x = 0; x < n; ++x) {
        const auto& c = components_[x];
        if (c.src != source_.obj(x) || c.dst != target_.obj(x) || c.coeffs.size() != cod.hom_rank(c.src, c.dst))
            throw Error(ErrorCode::ObjectMismatch,
                        "component at '" + source_.dom()->object(x) + "' does not lie in hom(S x, T x)");
    }
}

NatTransform identity_transform(const AdditiveFunctor& f) {
    std::vector<HomElem> comps;
    for (std::size_t x = 0; x < f.dom()->object_count(); ++x) comps.push_back(f.cod()->identity(f.obj(x)));
    return NatTransform(f, f, std::move(comps));
}

NatTransform vcompose(const NatTransform& beta, const NatTransform& alpha) {
    if (!(alpha.target() == beta.source())) throw Error(ErrorCode::CategoryMismatch, "target(α) differs from source(β)");
    std::vector<HomElem> comps;
    for (std::size_t x = 0; x < alpha.components().size(); ++x)
        comps.push_back(alpha.source().cod()->compose(beta.at(x), alpha.at(x)));
    return NatTransform(alpha.source(), beta.target(), std::move(comps));
}

NatTransform whisker(const AdditiveFunctor& f, const NatTransform& alpha) {
    std::vector<HomElem> comps;
    for (const auto& c : alpha.components()) comps.push_back(f(c));
    return NatTransform(compose_functors(f, alpha.source()), compose_functors(f, alpha.target()), std::move(comps));
}

NatTransform whisker(const NatTransform& alpha, const AdditiveFunctor& f) {
    std::vector<HomElem> comps;
    for (std::size_t z = 0; z < f.dom()->object_count(); ++z) comps.push_back(alpha.at(f.obj(z)));
    return NatTransform(compose_functors(alpha.source(), f), compose_functors(alpha.target(), f), std::move(comps));
}

bool is_identity_transform(const NatTransform& alpha) {
    if (!(alpha.source() == alpha.target())) return false;
    for (std::size_t x = 0; x < alpha.components().size(); ++x)
        if (alpha.at(x) != alpha.source().cod()->identity(alpha.source().obj(x))) return false;
    return true;
}

NatIso identity_iso(const AdditiveFunctor& f) { return {identity_transform(f), identity_transform(f)}; }

ValidationReport check_naturality(const NatTransform& alpha) {
    ValidationReport report;
    const auto& a = *alpha.source().dom();
    const auto& b = *alpha.source().cod();
    for (std::size_t x = 0; x < a.object_count(); ++x)
        for (std::size_t y = 0; y < a.object_count(); ++y)
            for (std::size_t p = 0; p < a.hom_rank(x, y); ++p) {
                HomElem f = a.basis(x, y, p);
                HomElem lhs = b.compose(alpha.at(y), alpha.source()(f));
                HomElem rhs = b.compose(alpha.target()(f), alpha.at(x));
                if (lhs != rhs)
                    report.add("naturality", a.hom(x, y).label(p) + "@" + a.object(x) + "->" + a.object(y),
                               "α_y∘S(f) = " + b.format(lhs) + ", T(f)∘α_x = " + b.format(rhs));
            }
    return report;
}

ValidationReport check_nat_iso(const NatIso& iso) {
    ValidationReport report;
    if (!(iso.forward.source() == iso.backward.target()) || !(iso.forward.target() == iso.backward.source())) {
        report.add("iso-typing", "", "backward is not parallel-opposite to forward");
        return report;
    }
    report.merge(check_naturality(iso.forward), "forward");
    report.merge(check_naturality(iso.backward), "backward");
    const auto& a = *iso.forward.source().dom();
    const auto& b = *iso.forward.source().cod();
    for (std::size_t x = 0; x < a.object_count(); ++x) {
        HomElem bf = b.compose(iso.backward.at(x), iso.forward.at(x));
        HomElem fb = b.compose(iso.forward.at(x), iso.backward.at(x));
        if (bf != b.identity(bf.src)) report.add("inverse", "backward∘forward@" + a.object(x), "= " + b.format(bf));
        if (fb != b.identity(fb.src)) report.add("inverse", "forward∘backward@" + a.object(x), "= " + b.format(fb));
    }
    return report;
}

std::optional<HomElem> invert_hom(const LinearCategory& a, const HomElem& f) {
    const std::size_t x = f.src, y = f.dst;
    const std::size_t r = a.hom_rank(y, x);
    const std::size_t ry = a.hom_rank(y, y), rx = a.hom_rank(x, x);
    // unknown g ∈ hom(y,x): f∘g = id_y and g∘f = id_x, stacked
    Matrix system(ry + rx, r);
    for (std::size_t p = 0; p < r; ++p) {
        HomElem g = a.basis(y, x, p);
        Vec fg = a.compose(f, g).coeffs;
        Vec gf = a.compose(g, f).coeffs;
        for (std::size_t k = 0; k < ry; ++k) system(k, p) = fg[k];
        for (std::size_t k = 0; k < rx; ++k) system(ry + k, p) = gf[k];
    }
    Vec rhs = a.identity(y).coeffs;
    const Vec idx = a.identity(x).coeffs;
    rhs.insert(rhs.end(), idx.begin(), idx.end());
    auto sol = solve(a.ring(), system, rhs);
    if (!sol) return std::nullopt;
    for (const auto& s : sol->particular)
        if (!a.ring().contains(s)) return std::nullopt;
    return HomElem{y, x, sol->particular};
}

NatIso nat_iso_from_forward(const NatTransform& forward) {
    const auto& b = *forward.source().cod();
    std::vector<HomElem> comps;
    for (std::size_t x = 0; x < forward.components().size(); ++x) {
        auto inv = invert_hom(b, forward.at(x));
        if (!inv)
            throw Error(ErrorCode::NotInvertible,
                        "component at '" + forward.source().dom()->object(x) + "' has no inverse");
        comps.push_back(std::move(*inv));
    }
    return {forward, NatTransform(forward.target(), forward.source(), std::move(comps))};
}

}  // namespace catgr
