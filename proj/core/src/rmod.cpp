#include "catgr/rmod.hpp"

#include "catgr/error.hpp"

#include <string>

namespace catgr {

namespace {

std::string at_obj(const Representation& r, std::size_t i, std::size_t x) {
    return r.base().object(i) + ":" + r.fiber(i).object(x);
}

Matrix fiber_action(const RModule& m, std::size_t i, const HomElem& g) { return m.value(i).apply(g); }

void typing(const RModule& m, ValidationReport& report) {
    const auto& r = m.rep();
    const auto& cat = r.base();
    for (std::size_t i = 0; i < cat.object_count(); ++i)
        if (!same_category(m.value(i).cat(), r.fiber_ptr(i)))
            report.add("module-typing", "values/" + cat.object(i), "value is not a module over R(i)");
    if (!report.ok()) return;
    for (std::size_t a = 0; a < cat.morphism_count(); ++a) {
        const std::size_t i = cat.dom(a), j = cat.cod(a);
        const auto& f = r.act(a);
        if (m.actions()[a].size() != r.fiber(i).object_count()) {
            report.add("module-typing", "action/" + cat.id(a), "need one component per object of R(dom a)");
            continue;
        }
        for (std::size_t x = 0; x < r.fiber(i).object_count(); ++x) {
            const Matrix& c = m.action(a, x);
            if (c.rows() != m.value(i).value(x).rank() || c.cols() != m.value(j).value(f.obj(x)).rank())
                report.add("module-typing", "action/" + cat.id(a) + "/x=" + r.fiber(i).object(x),
                           "component has shape " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()));
        }
    }
}

void compare_modules(const RModule& got, const RModule& want, ValidationReport& report) {
    const auto& r = want.rep();
    const auto& cat = r.base();
    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        const auto& a = got.value(i);
        const auto& b = want.value(i);
        const auto& fib = r.fiber(i);
        for (std::size_t x = 0; x < fib.object_count(); ++x)
            if (!(a.value(x) == b.value(x)))
                report.add("roundtrip-module", "values/" + at_obj(r, i, x), "object value differs");
        for (std::size_t x = 0; x < fib.object_count(); ++x)
            for (std::size_t y = 0; y < fib.object_count(); ++y)
                for (std::size_t p = 0; p < fib.hom_rank(x, y); ++p)
                    if (a.basis_action(x, y, p) != b.basis_action(x, y, p))
                        report.add("roundtrip-module", "values/" + cat.object(i) + "/" + fib.hom(x, y).label(p),
                                   "got " + format_matrix(r.ring(), a.basis_action(x, y, p)) + ", expected " +
                                       format_matrix(r.ring(), b.basis_action(x, y, p)));
    }
    for (std::size_t a = 0; a < cat.morphism_count(); ++a)
        for (std::size_t x = 0; x < r.fiber(cat.dom(a)).object_count(); ++x)
            if (got.action(a, x) != want.action(a, x))
                report.add("roundtrip-module", "action/" + cat.id(a) + "/x=" + r.fiber(cat.dom(a)).object(x),
                           "got " + format_matrix(r.ring(), got.action(a, x)) + ", expected " +
                               format_matrix(r.ring(), want.action(a, x)));
}

// Dense matrix of every component of a transformation G ⇒ G, one per Gr object.
using Components = std::vector<Matrix>;

}  // namespace

// -------------------------------------------------------------------- RModule

RModule::RModule(RepresentationPtr rep, std::vector<FiberModule> values, std::vector<std::vector<Matrix>> action)
    : rep_(std::move(rep)), values_(std::move(values)), action_(std::move(action)) {
    if (!rep_) throw Error(ErrorCode::InvalidModule, "module needs a representation");
    if (values_.size() != rep_->base().object_count())
        throw Error(ErrorCode::InvalidModule, "need one value per object of C");
    if (action_.size() != rep_->base().morphism_count())
        throw Error(ErrorCode::InvalidModule, "need one action per morphism of C");
}

ValidationReport validate_module(const RModule& m) {
    ValidationReport report;
    typing(m, report);
    if (!report.ok()) return report;

    const auto& r = m.rep();
    const auto& cat = r.base();
    const auto& ring = r.ring();
    for (std::size_t i = 0; i < cat.object_count(); ++i)
        report.merge(validate_fiber_module(m.value(i)), "values/" + cat.object(i));

    // M(a)_x ∘ M_j(R(a)g) = M_i(g) ∘ M(a)_{x'} for basis g : x → x'
    for (std::size_t a = 0; a < cat.morphism_count(); ++a) {
        const std::size_t i = cat.dom(a), j = cat.cod(a);
        const auto& src = r.fiber(i);
        for (std::size_t x = 0; x < src.object_count(); ++x)
            for (std::size_t y = 0; y < src.object_count(); ++y)
                for (std::size_t p = 0; p < src.hom_rank(x, y); ++p) {
                    const HomElem g = src.basis(x, y, p);
                    Matrix lhs = multiply(ring, m.action(a, x), fiber_action(m, j, r.act(a)(g)));
                    Matrix rhs = multiply(ring, fiber_action(m, i, g), m.action(a, y));
                    if (lhs != rhs)
                        report.add("naturality", "naturality/" + cat.id(a) + "/" + src.hom(x, y).label(p),
                                   "M(a)∘M(R(a)g) = " + format_matrix(ring, lhs) +
                                       ", M(g)∘M(a) = " + format_matrix(ring, rhs));
                }
    }

    // M(a)_x ∘ M(b)_{R(a)x} = M(ba)_x ∘ M_k(θ_{b,a} x)
    for (std::size_t a = 0; a < cat.morphism_count(); ++a)
        for (std::size_t b = 0; b < cat.morphism_count(); ++b) {
            if (!cat.composable(b, a)) continue;
            const std::size_t i = cat.dom(a), k = cat.cod(b), ba = cat.compose(b, a);
            for (std::size_t x = 0; x < r.fiber(i).object_count(); ++x) {
                Matrix lhs = multiply(ring, m.action(a, x), m.action(b, r.act(a).obj(x)));
                Matrix rhs = multiply(ring, m.action(ba, x), fiber_action(m, k, r.theta_fwd(b, a).at(x)));
                if (lhs != rhs)
                    report.add("mod1", "mod1/(" + cat.id(b) + "," + cat.id(a) + ")/x=" + r.fiber(i).object(x),
                               "M(a)∘M(b) = " + format_matrix(ring, lhs) + ", M(ba)∘M(θ) = " + format_matrix(ring, rhs));
            }
        }

    // M(1_i)_x = M_i(δ_i x)
    for (std::size_t i = 0; i < cat.object_count(); ++i)
        for (std::size_t x = 0; x < r.fiber(i).object_count(); ++x) {
            const Matrix& lhs = m.action(cat.identity(i), x);
            Matrix rhs = fiber_action(m, i, r.delta(i).at(x));
            if (lhs != rhs)
                report.add("mod2", "mod2/" + at_obj(r, i, x),
                           "M(1)_x = " + format_matrix(ring, lhs) + ", M(δx) = " + format_matrix(ring, rhs));
        }
    return report;
}

RModule zero_module(const RepresentationPtr& r) {
    const auto& cat = r->base();
    std::vector<FiberModule> values;
    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        const auto& fib = r->fiber(i);
        const std::size_t n = fib.object_count();
        std::vector<std::vector<Matrix>> acts(n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) acts[x * n + y].assign(fib.hom_rank(x, y), Matrix(0, 0));
        values.emplace_back(r->fiber_ptr(i), std::vector<FreeModule>(n, FreeModule(r->ring(), {})), std::move(acts));
    }
    std::vector<std::vector<Matrix>> action;
    for (std::size_t a = 0; a < cat.morphism_count(); ++a)
        action.emplace_back(r->fiber(cat.dom(a)).object_count(), Matrix(0, 0));
    return RModule(r, std::move(values), std::move(action));
}

RModule complete_module(const RepresentationPtr& r, std::vector<FiberModule> values,
                        std::vector<std::optional<std::vector<Matrix>>> action) {
    const auto& cat = r->base();
    const auto& ring = r->ring();
    if (values.size() != cat.object_count()) throw Error(ErrorCode::InvalidModule, "need one value per object of C");
    if (action.size() != cat.morphism_count()) throw Error(ErrorCode::InvalidModule, "need one slot per morphism of C");
    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        const std::size_t id = cat.identity(i);
        if (action[id]) continue;
        std::vector<Matrix> comps;
        for (std::size_t x = 0; x < r->fiber(i).object_count(); ++x) comps.push_back(values[i].apply(r->delta(i).at(x)));
        action[id] = std::move(comps);
    }
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t c = 0; c < cat.morphism_count(); ++c) {
            if (action[c]) continue;
            for (std::size_t a = 0; a < cat.morphism_count() && !action[c]; ++a)
                for (std::size_t b = 0; b < cat.morphism_count(); ++b) {
                    if (cat.is_identity(a) || cat.is_identity(b) || !cat.composable(b, a) || cat.compose(b, a) != c ||
                        !action[a] || !action[b])
                        continue;
                    const std::size_t k = cat.cod(b);
                    std::vector<Matrix> comps;
                    for (std::size_t x = 0; x < r->fiber(cat.dom(a)).object_count(); ++x) {
                        Matrix ab = multiply(ring, action[a]->at(x), action[b]->at(r->act(a).obj(x)));
                        comps.push_back(multiply(ring, ab, values[k].apply(r->mu(b, a).at(x))));
                    }
                    action[c] = std::move(comps);
                    progress = true;
                    break;
                }
        }
    }
    std::vector<std::vector<Matrix>> out;
    for (std::size_t a = 0; a < cat.morphism_count(); ++a) {
        if (!action[a]) throw Error(ErrorCode::InvalidModule, "no action given or derivable for '" + cat.id(a) + "'");
        out.push_back(std::move(*action[a]));
    }
    return RModule(r, std::move(values), std::move(out));
}

// ------------------------------------------------------------------ GrFunctor

ValidationReport validate_gr_functor(const GrFunctor& f) {
    ValidationReport report;
    if (!f.gr || !same_category(f.functor.cat(), f.gr->category_ptr())) {
        report.add("functor-typing", "functor", "functor is not defined on Gr(R)");
        return report;
    }
    report.merge(validate_fiber_module(f.functor), "functor");
    return report;
}

GrFunctor module_to_functor(const GrothendieckPtr& gr, const RModule& m) {
    auto report = validate_module(m);
    if (!report.ok())
        throw Error(ErrorCode::InvalidModule, std::to_string(report.size()) + " module findings, first: " +
                                                  report.findings().front().location);
    const auto& r = gr->rep();
    const auto& g = gr->category();
    const auto& ring = r.ring();
    const std::size_t n = gr->object_count();
    std::vector<FreeModule> values;
    for (const auto& o : gr->objects()) values.push_back(m.value(o.base).value(o.fiber_obj));
    std::vector<std::vector<Matrix>> acts(n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d) {
            const auto [i, x] = gr->object(s);
            const auto [j, y] = gr->object(d);
            for (std::size_t k = 0; k < g.hom_rank(s, d); ++k) {
                auto ref = gr->basis_ref(s, d, k);
                const HomElem f = r.fiber(j).basis(r.act(ref.morphism).obj(x), y, ref.local);
                acts[s * n + d].push_back(multiply(ring, m.action(ref.morphism, x), m.value(j).apply(f)));
            }
        }
    return {gr, FiberModule(gr->category_ptr(), std::move(values), std::move(acts))};
}

RModule functor_to_module(const GrFunctor& f) {
    auto report = validate_gr_functor(f);
    if (!report.ok())
        throw Error(ErrorCode::InvalidFunctor, std::to_string(report.size()) + " functor findings, first: " +
                                                   report.findings().front().location);
    const auto& gr = *f.gr;
    const auto& r = gr.rep();
    const auto& cat = r.base();
    std::vector<FiberModule> values;
    for (std::size_t i = 0; i < cat.object_count(); ++i) {
        const auto& fib = r.fiber(i);
        const std::size_t n = fib.object_count();
        const std::size_t id = cat.identity(i);
        std::vector<FreeModule> vals;
        for (std::size_t x = 0; x < n; ++x) vals.push_back(f.value(gr.index_of({i, x})));
        std::vector<std::vector<Matrix>> acts(n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t p = 0; p < fib.hom_rank(x, y); ++p) {
                    GrMorphism g{{i, x}, {i, y}, {}};
                    g.parts.emplace(id, fib.compose(fib.basis(x, y, p), r.eta(i).forward.at(x)));
                    acts[x * n + y].push_back(f.apply(gr.to_element(g)));
                }
        values.emplace_back(r.fiber_ptr(i), std::move(vals), std::move(acts));
    }
    std::vector<std::vector<Matrix>> action;
    for (std::size_t a = 0; a < cat.morphism_count(); ++a) {
        const std::size_t i = cat.dom(a), j = cat.cod(a);
        std::vector<Matrix> comps;
        for (std::size_t x = 0; x < r.fiber(i).object_count(); ++x) {
            const std::size_t rax = r.act(a).obj(x);
            GrMorphism g{{i, x}, {j, rax}, {}};
            g.parts.emplace(a, r.fiber(j).identity(rax));
            comps.push_back(f.apply(gr.to_element(g)));
        }
        action.push_back(std::move(comps));
    }
    return RModule(gr.rep_ptr(), std::move(values), std::move(action));
}

ValidationReport roundtrip_module(const GrothendieckPtr& gr, const RModule& m) {
    ValidationReport report;
    compare_modules(functor_to_module(module_to_functor(gr, m)), m, report);
    return report;
}

ValidationReport roundtrip_functor(const GrFunctor& f) {
    ValidationReport report;
    const GrFunctor back = module_to_functor(f.gr, functor_to_module(f));
    const auto& g = f.gr->category();
    const auto& ring = g.ring();
    const std::size_t n = f.gr->object_count();
    for (std::size_t s = 0; s < n; ++s)
        if (!(back.value(s) == f.value(s)))
            report.add("roundtrip-functor", "values/" + f.gr->object_label(s), "object value differs");
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t k = 0; k < g.hom_rank(s, d); ++k) {
                const Matrix& got = back.functor.basis_action(s, d, k);
                const Matrix& want = f.functor.basis_action(s, d, k);
                if (got != want)
                    report.add("roundtrip-functor",
                               "homs/" + f.gr->object_label(s) + "/" + f.gr->object_label(d) + "/" + g.hom(s, d).label(k),
                               "got " + format_matrix(ring, got) + ", expected " + format_matrix(ring, want));
            }
    return report;
}

// ------------------------------------------------------------ representables

namespace {

// ⊕_{t ∈ targets} Hom(-, t), precomposition action.
GrFunctor yoneda_sum(const GrothendieckPtr& gr, const std::vector<std::size_t>& targets) {
    const auto& g = gr->category();
    const auto& ring = g.ring();
    const std::size_t n = gr->object_count();
    std::vector<DirectSum> sums;
    for (std::size_t w = 0; w < n; ++w) {
        std::vector<FreeModule> parts;
        std::vector<std::string> tags;
        for (std::size_t t : targets) {
            parts.push_back(g.hom(w, t));
            tags.push_back(gr->object_label(t));
        }
        sums.push_back(direct_sum(ring, parts, tags));
    }
    std::vector<FreeModule> values;
    for (std::size_t w = 0; w < n; ++w) values.push_back(targets.size() == 1 ? g.hom(w, targets[0]) : sums[w].module);
    std::vector<std::vector<Matrix>> acts(n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t p = 0; p < g.hom_rank(s, d); ++p) {
                // u ∈ Hom(d, t) ↦ u ∘ h ∈ Hom(s, t)
                Matrix m(sums[s].module.rank(), sums[d].module.rank());
                for (std::size_t k = 0; k < targets.size(); ++k) {
                    const std::size_t t = targets[k];
                    for (std::size_t q = 0; q < g.hom_rank(d, t); ++q) {
                        const Vec& c = g.structure(s, d, t, q, p);
                        for (std::size_t l = 0; l < c.size(); ++l)
                            m(sums[s].global_index(k, l), sums[d].global_index(k, q)) = c[l];
                    }
                }
                acts[s * n + d].push_back(std::move(m));
            }
    return {gr, FiberModule(gr->category_ptr(), std::move(values), std::move(acts))};
}

}  // namespace

GrFunctor representable_functor(const GrothendieckPtr& gr, std::size_t t) {
    if (t >= gr->object_count()) throw Error(ErrorCode::UnknownObject, "no such Gr(R) object");
    return yoneda_sum(gr, {t});
}

GrFunctor projective_generator(const GrothendieckPtr& gr) {
    std::vector<std::size_t> all(gr->object_count());
    for (std::size_t t = 0; t < all.size(); ++t) all[t] = t;
    return yoneda_sum(gr, all);
}

ValidationReport endomorphism_algebra_check(const GrothendieckPtr& gr) {
    ValidationReport report;
    const auto psa = pseudoskew_algebra(gr);
    const auto& alg = psa.algebra;
    const auto& g = gr->category();
    const auto& ring = g.ring();
    const std::size_t n = gr->object_count();
    const std::size_t dim = alg.dimension();
    const GrFunctor gen = projective_generator(gr);

    // G(w) = ⊕_t Gr(w, t): offsets of the t-block inside G(w)
    std::vector<std::vector<std::size_t>> offset(n, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t t = 0; t < n; ++t) offset[w][t + 1] = offset[w][t] + g.hom_rank(w, t);

    // τ_f = f ∘ - for f a basis element of Gr(s, d)
    std::vector<Components> tau;
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t k = 0; k < g.hom_rank(s, d); ++k) {
                Components comps;
                for (std::size_t w = 0; w < n; ++w) {
                    Matrix m(offset[w][n], offset[w][n]);
                    for (std::size_t p = 0; p < g.hom_rank(w, s); ++p) {
                        const Vec& c = g.structure(w, s, d, k, p);
                        for (std::size_t l = 0; l < c.size(); ++l) m(offset[w][d] + l, offset[w][s] + p) = c[l];
                    }
                    comps.push_back(std::move(m));
                }
                tau.push_back(std::move(comps));
            }

    // each τ_f commutes with G(h) for every basis morphism h : w → w'
    for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t p = 0; p < g.hom_rank(w, v); ++p) {
                    const Matrix& gh = gen.functor.basis_action(w, v, p);
                    if (multiply(ring, tau[u][w], gh) != multiply(ring, gh, tau[u][v]))
                        report.add("endo-naturality", alg.label(u) + "/" + g.hom(w, v).label(p),
                                   "postcomposition is not natural");
                }

    auto yoneda = [&](const Components& t) {
        Vec e = zero_vector(dim);
        for (std::size_t w = 0; w < n; ++w) {
            Vec id = zero_vector(offset[w][n]);
            const Vec one = g.identity(w).coeffs;
            for (std::size_t l = 0; l < one.size(); ++l) id[offset[w][w] + l] = one[l];
            const Vec img = apply(ring, t[w], id);
            for (std::size_t d = 0; d < n; ++d)
                for (std::size_t l = 0; l < g.hom_rank(w, d); ++l)
                    e[psa.index(w, d, l)] = ring.add(e[psa.index(w, d, l)], img[offset[w][d] + l]);
        }
        return e;
    };
    auto from_element = [&](const Vec& e) {
        Components out;
        for (std::size_t w = 0; w < n; ++w) out.emplace_back(offset[w][n], offset[w][n]);
        for (std::size_t u = 0; u < dim; ++u)
            if (e[u] != 0)
                for (std::size_t w = 0; w < n; ++w) axpy(ring, out[w], e[u], tau[u][w]);
        return out;
    };

    // identity of G ↔ unit of R[C]
    Components ident;
    for (std::size_t w = 0; w < n; ++w) ident.push_back(Matrix::identity(offset[w][n]));
    const Vec unit = yoneda(ident);
    if (unit != alg.unit())
        report.add("endo-unit", "unit",
                   "End(G) unit = " + format_vector(ring, unit) + ", R[C] unit = " + format_vector(ring, alg.unit()));
    if (from_element(alg.unit()) != ident) report.add("endo-unit", "unit", "τ of the unit is not the identity of G");

    for (std::size_t u = 0; u < dim; ++u) {
        if (yoneda(tau[u]) != unit_vector(dim, u))
            report.add("endo-basis", alg.label(u), "τ_f at the identity does not recover f");
        for (std::size_t v = 0; v < dim; ++v) {
            Components comp;
            for (std::size_t w = 0; w < n; ++w) comp.push_back(multiply(ring, tau[u][w], tau[v][w]));
            const Vec e = yoneda(comp);
            const Vec want = alg.product_dense(u, v);
            if (e != want)
                report.add("endo-product", "(" + alg.label(u) + "," + alg.label(v) + ")",
                           "End(G) = " + format_vector(ring, e) + ", R[C] = " + format_vector(ring, want));
            else if (from_element(e) != comp)
                report.add("endo-product", "(" + alg.label(u) + "," + alg.label(v) + ")",
                           "composite is not determined by its value at identities");
        }
    }
    return report;
}

// ------------------------------------------------------------ module over R[C]

AlgebraModule module_over_algebra(const PseudoskewAlgebra& alg, const GrFunctor& f) {
    auto report = validate_gr_functor(f);
    if (!report.ok())
        throw Error(ErrorCode::InvalidFunctor, std::to_string(report.size()) + " functor findings, first: " +
                                                   report.findings().front().location);
    if (!same_category(f.gr->category_ptr(), alg.gr->category_ptr()))
        throw Error(ErrorCode::InvalidFunctor, "functor and algebra come from different Gr(R)");
    const auto& g = alg.gr->category();
    const std::size_t n = alg.gr->object_count();
    std::vector<std::string> tags;
    for (std::size_t k = 0; k < n; ++k) tags.push_back(alg.gr->object_label(k));
    AlgebraModule out;
    const DirectSum sum = direct_sum(g.ring(), f.functor.values(), tags);
    out.module = sum.module;
    const std::size_t total = sum.module.rank();
    out.action.assign(alg.algebra.dimension(), Matrix(total, total));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t k = 0; k < g.hom_rank(s, d); ++k) {
                const Matrix& m = f.functor.basis_action(s, d, k);
                Matrix& a = out.action[alg.index(s, d, k)];
                for (std::size_t r = 0; r < m.rows(); ++r)
                    for (std::size_t c = 0; c < m.cols(); ++c) a(sum.offsets[s] + r, sum.offsets[d] + c) = m(r, c);
            }
    return out;
}

ValidationReport check_algebra_module(const StructAlgebra& a, const AlgebraModule& m) {
    ValidationReport report;
    const auto& ring = a.ring();
    const std::size_t dim = a.dimension();
    const std::size_t total = m.module.rank();
    if (m.action.size() != dim) {
        report.add("algebra-module-typing", "action", "need one matrix per basis element");
        return report;
    }
    auto combine = [&](const Vec& e) {
        Matrix out(total, total);
        for (std::size_t u = 0; u < dim; ++u)
            if (e[u] != 0) axpy(ring, out, e[u], m.action[u]);
        return out;
    };
    if (!combine(a.unit()).is_identity()) report.add("algebra-module-unit", "unit", "unit does not act as identity");
    for (std::size_t u = 0; u < dim; ++u)
        for (std::size_t v = 0; v < dim; ++v) {
            Matrix lhs = combine(a.product_dense(u, v));
            Matrix rhs = multiply(ring, m.action[v], m.action[u]);
            if (lhs != rhs)
                report.add("algebra-module-associativity", "(" + a.label(u) + "," + a.label(v) + ")",
                           "m·(u∗v) = " + format_matrix(ring, lhs) + ", (m·u)·v = " + format_matrix(ring, rhs));
        }
    return report;
}

}  // namespace catgr
