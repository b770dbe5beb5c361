#include "catgr/groth.hpp"

#include "catgr/error.hpp"

#include <algorithm>

namespace catgr {

GrMorphism gr_compose(const Representation& r, const GrMorphism& g, const GrMorphism& f) {
    if (!(f.dst == g.src)) throw Error(ErrorCode::ObjectMismatch, "Gr morphisms do not chain");
    const auto& cat = r.base();
    const std::size_t x = f.src.fiber_obj;
    const auto& target = r.fiber(g.dst.base);
    GrMorphism out{f.src, g.dst, {}};
    for (const auto& [a, fa] : f.parts)
        for (const auto& [b, gb] : g.parts) {
            const std::size_t c = cat.compose(b, a);
            HomElem summand = target.compose(gb, target.compose(r.act(b)(fa), r.theta_fwd(b, a).at(x)));
            auto it = out.parts.find(c);
            if (it == out.parts.end())
                out.parts.emplace(c, std::move(summand));
            else
                it->second = target.add(it->second, summand);
        }
    std::erase_if(out.parts, [](const auto& kv) { return is_zero(kv.second.coeffs); });
    return out;
}

GrMorphism gr_identity(const Representation& r, const GrObject& obj) {
    GrMorphism id{obj, obj, {}};
    HomElem eta = r.eta(obj.base).forward.at(obj.fiber_obj);
    if (!is_zero(eta.coeffs)) id.parts.emplace(r.base().identity(obj.base), std::move(eta));
    return id;
}

// ------------------------------------------------------ GrothendieckCategory

GrothendieckCategory::GrothendieckCategory(RepresentationPtr r) : rep_(std::move(r)) {
    const auto& cat = rep_->base();
    for (std::size_t i = 0; i < cat.object_count(); ++i)
        for (std::size_t x = 0; x < rep_->fiber(i).object_count(); ++x) {
            index_.emplace(GrObject{i, x}, objects_.size());
            objects_.push_back({i, x});
        }
    const std::size_t n = objects_.size();
    std::vector<FreeModule> homs;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back(object_label(k));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d) {
            const auto [i, x] = objects_[s];
            const auto [j, y] = objects_[d];
            HomLayout lay;
            std::vector<FreeModule> summands;
            std::vector<std::string> tags;
            for (std::size_t a : cat.hom(i, j)) {
                lay.morphisms.push_back(a);
                summands.push_back(rep_->fiber(j).hom(rep_->act(a).obj(x), y));
                tags.push_back(cat.id(a));
            }
            lay.sum = direct_sum(rep_->ring(), summands, tags);
            homs.push_back(lay.sum.module);
            layouts_.push_back(std::move(lay));
        }
    std::vector<Vec> identities;
    for (std::size_t s = 0; s < n; ++s) identities.push_back(to_element(gr_identity(*rep_, objects_[s])).coeffs);
    category_ = std::make_shared<const LinearCategory>(
        rep_->ring(), std::move(labels), std::move(homs), std::move(identities),
        [this](std::size_t x, std::size_t y, std::size_t z, std::size_t q, std::size_t p) {
            // category_ is not set yet, so basis morphisms come from the layouts
            const HomElem g{y, z, unit_vector(layout(y, z).sum.module.rank(), q)};
            const HomElem f{x, y, unit_vector(layout(x, y).sum.module.rank(), p)};
            return to_element(gr_compose(*rep_, to_morphism(g), to_morphism(f))).coeffs;
        });
}

std::size_t GrothendieckCategory::index_of(const GrObject& obj) const {
    auto it = index_.find(obj);
    if (it == index_.end()) throw Error(ErrorCode::UnknownObject, "no such Gr(R) object");
    return it->second;
}

std::string GrothendieckCategory::object_label(std::size_t k) const {
    const auto& o = objects_.at(k);
    return rep_->base().object(o.base) + ":" + rep_->fiber(o.base).object(o.fiber_obj);
}

GrothendieckCategory::BasisRef GrothendieckCategory::basis_ref(std::size_t s, std::size_t d, std::size_t global) const {
    const auto& lay = layout(s, d);
    auto [summand, local] = lay.sum.local_index(global);
    return {lay.morphisms[summand], local};
}

std::size_t GrothendieckCategory::global_index(std::size_t s, std::size_t d, std::size_t morphism,
                                               std::size_t local) const {
    const auto& lay = layout(s, d);
    auto it = std::find(lay.morphisms.begin(), lay.morphisms.end(), morphism);
    if (it == lay.morphisms.end()) throw Error(ErrorCode::InvalidArgument, "morphism does not index this hom");
    return lay.sum.global_index(static_cast<std::size_t>(it - lay.morphisms.begin()), local);
}

GrMorphism GrothendieckCategory::to_morphism(const HomElem& e) const {
    const auto& lay = layout(e.src, e.dst);
    if (e.coeffs.size() != lay.sum.module.rank()) throw Error(ErrorCode::DimensionMismatch, "element of the wrong hom");
    GrMorphism out{objects_[e.src], objects_[e.dst], {}};
    const auto& fiber = rep_->fiber(objects_[e.dst].base);
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
        if (e.coeffs[k] == 0) continue;
        auto [summand, local] = lay.sum.local_index(k);
        const std::size_t a = lay.morphisms[summand];
        auto it = out.parts.find(a);
        if (it == out.parts.end())
            it = out.parts
                     .emplace(a, fiber.zero(rep_->act(a).obj(objects_[e.src].fiber_obj), objects_[e.dst].fiber_obj))
                     .first;
        it->second.coeffs[local] = e.coeffs[k];
    }
    return out;
}

HomElem GrothendieckCategory::to_element(const GrMorphism& f) const {
    const std::size_t s = index_of(f.src), d = index_of(f.dst);
    const auto& lay = layout(s, d);
    HomElem out{s, d, zero_vector(lay.sum.module.rank())};
    for (const auto& [a, part] : f.parts) {
        auto it = std::find(lay.morphisms.begin(), lay.morphisms.end(), a);
        if (it == lay.morphisms.end()) throw Error(ErrorCode::ObjectMismatch, "part indexed by a morphism outside C(i,j)");
        const std::size_t summand = static_cast<std::size_t>(it - lay.morphisms.begin());
        if (part.coeffs.size() != lay.sum.summand_rank(summand))
            throw Error(ErrorCode::DimensionMismatch, "part lives in the wrong fiber hom");
        for (std::size_t p = 0; p < part.coeffs.size(); ++p) out.coeffs[lay.sum.global_index(summand, p)] = part.coeffs[p];
    }
    return out;
}

GrothendieckPtr grothendieck_construction(RepresentationPtr r, bool require_valid) {
    if (require_valid) {
        auto report = validate_representation(*r);
        if (!report.ok())
            throw Error(ErrorCode::InvalidRepresentation, std::to_string(report.size()) + " coherence findings, first: " +
                                                              report.findings().front().location);
    }
    return std::make_shared<const GrothendieckCategory>(std::move(r));
}

// -------------------------------------------------------------- StructAlgebra

StructAlgebra::StructAlgebra(GroundRing ring, std::vector<std::string> basis, std::vector<SparseVec> mult, Vec unit)
    : ring_(std::move(ring)), basis_(std::move(basis)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const std::size_t d = basis_.size();
    if (mult_.size() != d * d) throw Error(ErrorCode::DimensionMismatch, "need one product per basis pair");
    if (unit_.size() != d) throw Error(ErrorCode::DimensionMismatch, "unit has the wrong length");
    for (auto& sv : mult_) {
        std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [k, c] : sv)
            if (k >= d) throw Error(ErrorCode::DimensionMismatch, "product coefficient out of range");
        std::erase_if(sv, [](const auto& kv) { return kv.second == 0; });
    }
}

Vec StructAlgebra::product_dense(std::size_t u, std::size_t v) const {
    Vec out = zero_vector(dimension());
    for (const auto& [k, c] : product(u, v)) out[k] = c;
    return out;
}

Vec StructAlgebra::multiply(const Vec& x, const Vec& y) const {
    const std::size_t d = dimension();
    if (x.size() != d || y.size() != d) throw Error(ErrorCode::DimensionMismatch, "algebra element of the wrong length");
    Vec out = zero_vector(d);
    for (std::size_t u = 0; u < d; ++u) {
        if (x[u] == 0) continue;
        for (std::size_t v = 0; v < d; ++v) {
            if (y[v] == 0) continue;
            const Scalar c = ring_.mul(x[u], y[v]);
            for (const auto& [k, s] : product(u, v)) out[k] = ring_.add(out[k], ring_.mul(c, s));
        }
    }
    return out;
}

ValidationReport check_algebra_laws(const StructAlgebra& a, bool check_associativity) {
    ValidationReport report;
    const std::size_t d = a.dimension();
    for (std::size_t u = 0; u < d; ++u) {
        const Vec e = unit_vector(d, u);
        if (a.multiply(a.unit(), e) != e) report.add("unit-left", a.label(u));
        if (a.multiply(e, a.unit()) != e) report.add("unit-right", a.label(u));
    }
    if (!check_associativity) return report;
    // (u∗v)∗w vs u∗(v∗w) on basis triples, via the sparse products
    const auto& ring = a.ring();
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            const auto& uv = a.product(u, v);
            for (std::size_t w = 0; w < d; ++w) {
                const auto& vw = a.product(v, w);
                if (uv.empty() && vw.empty()) continue;
                Vec lhs = zero_vector(d), rhs = zero_vector(d);
                for (const auto& [k, c] : uv)
                    for (const auto& [l, s] : a.product(k, w)) lhs[l] = ring.add(lhs[l], ring.mul(c, s));
                for (const auto& [k, c] : vw)
                    for (const auto& [l, s] : a.product(u, k)) rhs[l] = ring.add(rhs[l], ring.mul(c, s));
                if (lhs != rhs)
                    report.add("associativity", "(" + a.label(u) + "," + a.label(v) + "," + a.label(w) + ")",
                               "(u∗v)∗w = " + format_vector(ring, lhs) + ", u∗(v∗w) = " + format_vector(ring, rhs));
            }
        }
    return report;
}

PseudoskewAlgebra pseudoskew_algebra(const GrothendieckPtr& gr) {
    const auto& g = gr->category();
    const auto& cat = gr->rep().base();
    const std::size_t n = gr->object_count();
    PseudoskewAlgebra out;
    out.gr = gr;
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d) {
            out.block_offsets.push_back(labels.size());
            const auto& fiber = gr->rep().fiber(gr->object(d).base);
            for (std::size_t k = 0; k < g.hom_rank(s, d); ++k) {
                auto ref = gr->basis_ref(s, d, k);
                const std::size_t rax = gr->rep().act(ref.morphism).obj(gr->object(s).fiber_obj);
                labels.push_back(cat.id(ref.morphism) + "|" + gr->object_label(s) + "|" + gr->object_label(d) + "|" +
                                 fiber.hom(rax, gr->object(d).fiber_obj).label(ref.local));
            }
        }
    const std::size_t dim = labels.size();
    // owner block of every basis vector
    std::vector<std::pair<std::size_t, std::size_t>> owner(dim);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t k = 0; k < g.hom_rank(s, d); ++k) owner[out.index(s, d, k)] = {s, d};

    std::vector<SparseVec> mult(dim * dim);
    for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t v = 0; v < dim; ++v) {
            const auto [gs, gd] = owner[u];
            const auto [fs, fd] = owner[v];
            if (fd != gs) continue;  // objects do not chain: product is 0
            const Vec& c = g.structure(fs, fd, gd, u - out.index(gs, gd, 0), v - out.index(fs, fd, 0));
            auto& sv = mult[u * dim + v];
            for (std::size_t k = 0; k < c.size(); ++k)
                if (c[k] != 0) sv.emplace_back(out.index(fs, gd, k), c[k]);
        }
    Vec unit = zero_vector(dim);
    for (std::size_t s = 0; s < n; ++s) {
        const Vec id = g.identity(s).coeffs;
        for (std::size_t k = 0; k < id.size(); ++k) unit[out.index(s, s, k)] = id[k];
    }
    out.algebra = StructAlgebra(gr->rep().ring(), std::move(labels), std::move(mult), std::move(unit));
    return out;
}

PseudoskewAlgebra pseudoskew_algebra(const RepresentationPtr& r) { return pseudoskew_algebra(grothendieck_construction(r)); }

ValidationReport skew_specialization_oracle(const PseudoskewAlgebra& alg) {
    const auto& gr = *alg.gr;
    const auto& r = gr.rep();
    const auto& cat = r.base();
    if (!is_strict(r)) throw Error(ErrorCode::NotStrict, "representation is not strict");
    for (std::size_t i = 0; i < cat.object_count(); ++i)
        if (r.fiber(i).object_count() != 1)
            throw Error(ErrorCode::NotRingValued, "fiber at '" + cat.object(i) + "' is not a one-object category");

    ValidationReport report;
    const auto& ring = r.ring();
    const std::size_t n = cat.object_count();  // Gr objects are (i, *) in object order
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < gr.category().hom_rank(i, j); ++k)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t t = 0; t < n; ++t)
                        for (std::size_t l = 0; l < gr.category().hom_rank(s, t); ++l) {
                            // g = r_b : s → t, f = r'_a : i → j
                            const std::size_t u = alg.index(s, t, l);
                            const std::size_t v = alg.index(i, j, k);
                            Vec expected = zero_vector(alg.algebra.dimension());
                            if (j == s) {
                                auto fa = gr.basis_ref(i, j, k);
                                auto gb = gr.basis_ref(s, t, l);
                                const auto& rt = r.fiber(t);
                                const auto& rj = r.fiber(j);
                                HomElem rr = rt.basis(0, 0, gb.local);
                                HomElem rp = rj.basis(0, 0, fa.local);
                                HomElem prod = rt.compose(rr, r.act(gb.morphism)(rp));
                                const std::size_t ba = cat.compose(gb.morphism, fa.morphism);
                                for (std::size_t p = 0; p < prod.coeffs.size(); ++p)
                                    expected[alg.index(i, t, gr.global_index(i, t, ba, p))] = prod.coeffs[p];
                            }
                            Vec actual = alg.algebra.product_dense(u, v);
                            if (actual != expected)
                                report.add("skew-product",
                                           "(" + alg.algebra.label(u) + "," + alg.algebra.label(v) + ")",
                                           "pseudoskew = " + format_vector(ring, actual) +
                                               ", skew rule = " + format_vector(ring, expected));
                        }
    return report;
}

AlgebraSummary algebra_report(const StructAlgebra& a, bool exhaustive) {
    AlgebraSummary out;
    const std::size_t d = a.dimension();
    out.dimension = d;
    out.unit = a.unit();
    out.associativity_checked = exhaustive;
    out.laws = check_algebra_laws(a, exhaustive);
    for (std::size_t u = 0; u < d && out.commutative; ++u)
        for (std::size_t v = u + 1; v < d; ++v)
            if (a.product(u, v) != a.product(v, u)) {
                out.commutative = false;
                break;
            }
    // z is central iff z∗b_k - b_k∗z = 0 for every basis vector b_k
    Matrix system(d * d, d);
    const auto& ring = a.ring();
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t k = 0; k < d; ++k) {
            for (const auto& [l, c] : a.product(m, k)) system(k * d + l, m) = ring.add(system(k * d + l, m), c);
            for (const auto& [l, c] : a.product(k, m)) system(k * d + l, m) = ring.sub(system(k * d + l, m), c);
        }
    out.center_dimension = d - rank(ring, std::move(system));
    return out;
}

}  // namespace catgr
