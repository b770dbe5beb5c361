#include "instance.hpp"

#include "catgr/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace catgr::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "at " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, "missing key '" + key + "'");
    return *it;
}

const json* optional_member(const json& j, const std::string& key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::size_t as_count(const json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        fail(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_string(j[k], path + "/" + std::to_string(k)));
    return out;
}

Scalar scalar(const GroundRing& ring, const json& j, const std::string& path) {
    try {
        if (j.is_string()) return ring.parse(j.get<std::string>());
        if (j.is_number_integer()) return ring.normalize(Scalar(j.get<long long>()));
    } catch (const Error& e) {
        fail(path, e.message());
    }
    fail(path, "expected a scalar (decimal string or integer)");
}

// Sparse {label: scalar}, or a bare scalar when the module has rank 1.
Vec element(const GroundRing& ring, const FreeModule& m, const json& j, const std::string& path) {
    Vec v = zero_vector(m.rank());
    if (j.is_object()) {
        for (const auto& [label, c] : j.items()) {
            auto k = m.find(label);
            if (!k) fail(path, "no basis element '" + label + "' here");
            v[*k] = scalar(ring, c, path + "/" + label);
        }
        return v;
    }
    if (m.rank() != 1) fail(path, "a bare scalar needs a rank-1 hom; use {label: scalar}");
    v[0] = scalar(ring, j, path);
    return v;
}

Matrix matrix(const GroundRing& ring, const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a matrix (array of rows)");
    if (j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        const std::string rp = path + "/" + std::to_string(r);
        if (!row.is_array() || row.size() != cols)
            fail(rp, "expected a row of " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(ring, row[c], rp + "/" + std::to_string(c));
    }
    return m;
}

std::size_t lookup_object(const FiniteCategory& c, const std::string& name, const std::string& path) {
    try {
        return c.find_object(name);
    } catch (const Error&) {
        fail(path, "unknown object '" + name + "'");
    }
}

std::size_t lookup_morphism(const FiniteCategory& c, const std::string& name, const std::string& path) {
    try {
        return c.find_morphism(name);
    } catch (const Error&) {
        fail(path, "unknown morphism '" + name + "'");
    }
}

std::size_t lookup_object(const LinearCategory& c, const std::string& name, const std::string& path) {
    try {
        return c.find_object(name);
    } catch (const Error&) {
        fail(path, "unknown fiber object '" + name + "'");
    }
}

FiniteCategory parse_category(const json& j, const std::string& path) {
    if (auto q = optional_member(j, "path_category")) {
        const std::string qp = path + "/path_category";
        Quiver quiver;
        quiver.vertices = string_list(member(*q, "vertices", qp), qp + "/vertices");
        const auto& arrows = member(*q, "arrows", qp);
        if (!arrows.is_array()) fail(qp + "/arrows", "expected an array");
        for (std::size_t k = 0; k < arrows.size(); ++k) {
            const std::string ap = qp + "/arrows/" + std::to_string(k);
            quiver.arrows.push_back({as_string(member(arrows[k], "id", ap), ap + "/id"),
                                     as_string(member(arrows[k], "source", ap), ap + "/source"),
                                     as_string(member(arrows[k], "target", ap), ap + "/target")});
        }
        try {
            return path_category(quiver);
        } catch (const Error& e) {
            fail(qp, e.message());
        }
    }
    if (auto g = optional_member(j, "cyclic_group")) {
        const std::string gp = path + "/cyclic_group";
        const std::size_t n = as_count(member(*g, "order", gp), gp + "/order");
        std::vector<std::string> names;
        if (auto e = optional_member(*g, "elements")) names = string_list(*e, gp + "/elements");
        if (n == 0) fail(gp + "/order", "order must be positive");
        if (!names.empty() && names.size() != n) fail(gp + "/elements", "need one name per element");
        return cyclic_group(n, names);
    }

    const auto objects = string_list(member(j, "objects", path), path + "/objects");
    std::map<std::string, std::size_t> obj_index;
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (!obj_index.emplace(objects[i], i).second) fail(path + "/objects", "duplicate object '" + objects[i] + "'");
    auto obj = [&](const json& v, const std::string& p) {
        auto it = obj_index.find(as_string(v, p));
        if (it == obj_index.end()) fail(p, "unknown object '" + v.get<std::string>() + "'");
        return it->second;
    };

    const auto& ms = member(j, "morphisms", path);
    if (!ms.is_array()) fail(path + "/morphisms", "expected an array");
    std::vector<Morphism> morphisms;
    std::map<std::string, std::size_t> mor_index;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        const std::string mp = path + "/morphisms/" + std::to_string(k);
        Morphism m{as_string(member(ms[k], "id", mp), mp + "/id"), obj(member(ms[k], "dom", mp), mp + "/dom"),
                   obj(member(ms[k], "cod", mp), mp + "/cod")};
        if (!mor_index.emplace(m.id, k).second) fail(mp + "/id", "duplicate morphism '" + m.id + "'");
        morphisms.push_back(std::move(m));
    }
    auto mor = [&](const json& v, const std::string& p) {
        auto it = mor_index.find(as_string(v, p));
        if (it == mor_index.end()) fail(p, "unknown morphism '" + v.get<std::string>() + "'");
        return it->second;
    };

    std::vector<std::size_t> identities(objects.size(), FiniteCategory::npos);
    const json* ids = optional_member(j, "identities");
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (ids && ids->contains(objects[i]))
            identities[i] = mor((*ids)[objects[i]], path + "/identities/" + objects[i]);
        else if (auto it = mor_index.find("1_" + objects[i]); it != mor_index.end())
            identities[i] = it->second;
        else
            fail(path + "/identities", "no identity for object '" + objects[i] + "'");
    }

    const std::size_t m = morphisms.size();
    std::vector<std::size_t> table(m * m, FiniteCategory::npos);
    // identity composites may be left implicit
    for (std::size_t a = 0; a < m; ++a) {
        table[identities[morphisms[a].cod] * m + a] = a;
        table[a * m + identities[morphisms[a].dom]] = a;
    }
    if (auto comp = optional_member(j, "composition")) {
        if (!comp->is_array()) fail(path + "/composition", "expected an array of [b, a, b∘a]");
        for (std::size_t k = 0; k < comp->size(); ++k) {
            const std::string cp = path + "/composition/" + std::to_string(k);
            const auto& e = (*comp)[k];
            if (!e.is_array() || e.size() != 3) fail(cp, "expected [b, a, b∘a]");
            table[mor(e[0], cp + "/0") * m + mor(e[1], cp + "/1")] = mor(e[2], cp + "/2");
        }
    }
    return FiniteCategory(objects, std::move(morphisms), std::move(identities), std::move(table));
}

LinearCategoryPtr parse_fiber(const GroundRing& ring, const json& j, const std::string& path,
                              const LinearCategoryPtr& ground) {
    if (j.is_string()) {
        if (j.get<std::string>() != "K") fail(path, "unknown fiber '" + j.get<std::string>() + "'");
        return ground;
    }
    if (auto c = optional_member(j, "linearize")) return linearize(parse_category(*c, path + "/linearize"), ring);
    if (auto r = optional_member(j, "ring")) {
        const std::string rp = path + "/ring";
        auto basis = string_list(member(*r, "basis", rp), rp + "/basis");
        FreeModule m(ring, basis);
        Vec unit = element(ring, m, member(*r, "unit", rp), rp + "/unit");
        std::vector<Vec> table(basis.size() * basis.size(), zero_vector(basis.size()));
        if (auto prods = optional_member(*r, "products")) {
            if (!prods->is_array()) fail(rp + "/products", "expected an array of [q, p, q*p]");
            for (std::size_t k = 0; k < prods->size(); ++k) {
                const std::string pp = rp + "/products/" + std::to_string(k);
                const auto& e = (*prods)[k];
                if (!e.is_array() || e.size() != 3) fail(pp, "expected [q, p, q*p]");
                auto q = m.find(as_string(e[0], pp + "/0"));
                auto p = m.find(as_string(e[1], pp + "/1"));
                if (!q || !p) fail(pp, "unknown basis element");
                table[*q * basis.size() + *p] = element(ring, m, e[2], pp + "/2");
            }
        }
        const std::size_t d = basis.size();
        return one_object_category(ring, basis, unit, [&](std::size_t q, std::size_t p) { return table[q * d + p]; });
    }
    fail(path, "expected \"K\", {\"linearize\": ...} or {\"ring\": ...}");
}

// Basis element of some hom(x, y) of `cat` by label; labels must be unambiguous.
struct BasisPos {
    std::size_t x, y, p;
};

std::optional<BasisPos> find_basis(const LinearCategory& cat, const std::string& label, const std::string& path) {
    std::optional<BasisPos> found;
    const std::size_t n = cat.object_count();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (auto p = cat.hom(x, y).find(label)) {
                if (found) fail(path, "basis label '" + label + "' is ambiguous");
                found = BasisPos{x, y, *p};
            }
    return found;
}

AdditiveFunctor parse_functor(const GroundRing& ring, const LinearCategoryPtr& dom, const LinearCategoryPtr& cod,
                              const json* j, const std::string& path) {
    const std::size_t n = dom->object_count();
    std::vector<std::size_t> obj_map(n);
    for (std::size_t x = 0; x < n; ++x) {
        const json* o = j ? optional_member(*j, "objects") : nullptr;
        const std::string name = o && o->contains(dom->object(x)) ? as_string((*o)[dom->object(x)], path + "/objects")
                                                                  : dom->object(x);
        obj_map[x] = lookup_object(*cod, name, path + "/objects/" + dom->object(x));
    }
    const json* homs = j ? optional_member(*j, "homs") : nullptr;
    if (homs)
        for (const auto& [label, v] : homs->items())
            if (!find_basis(*dom, label, path + "/homs")) fail(path + "/homs/" + label, "no such basis element");
    std::vector<Matrix> hom_map;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const FreeModule& src = dom->hom(x, y);
            const FreeModule& tgt = cod->hom(obj_map[x], obj_map[y]);
            std::vector<Vec> cols;
            for (std::size_t p = 0; p < src.rank(); ++p) {
                const std::string& label = src.label(p);
                if (homs && homs->contains(label)) {
                    cols.push_back(element(ring, tgt, (*homs)[label], path + "/homs/" + label));
                } else if (auto q = tgt.find(label)) {
                    // unspecified basis elements map to the same label
                    cols.push_back(unit_vector(tgt.rank(), *q));
                } else {
                    fail(path + "/homs", "no image given for basis element '" + label + "'");
                }
            }
            hom_map.push_back(Matrix::from_columns(tgt.rank(), cols));
        }
    return AdditiveFunctor(dom, cod, std::move(obj_map), std::move(hom_map));
}

Scalar cocycle_at(const Cocycle& sigma, std::size_t b, std::size_t a) {
    auto it = sigma.find({b, a});
    return it == sigma.end() ? Scalar(1) : it->second;
}

// Components per fiber object: override where given, default elsewhere.
std::vector<HomElem> components(const GroundRing& ring, const LinearCategory& cat, const json* spec,
                                const std::string& path, const std::vector<std::size_t>& src,
                                const std::vector<std::size_t>& dst,
                                const std::function<std::optional<HomElem>(std::size_t)>& fallback) {
    std::vector<HomElem> out;
    for (std::size_t x = 0; x < src.size(); ++x) {
        const std::string& name = cat.object(x);
        if (spec && spec->contains(name)) {
            out.push_back({src[x], dst[x], element(ring, cat.hom(src[x], dst[x]), (*spec)[name], path + "/" + name)});
        } else if (auto d = fallback(x)) {
            out.push_back(*d);
        } else {
            fail(path, "component at '" + name + "' is required");
        }
    }
    return out;
}

// Builds a NatIso from an override entry with "forward" and/or "backward".
NatIso make_iso(const GroundRing& ring, const AdditiveFunctor& source, const AdditiveFunctor& target,
                const json* spec, const std::string& path,
                const std::function<std::optional<HomElem>(std::size_t)>& default_forward) {
    const auto& cat = *source.cod();
    const std::size_t n = source.dom()->object_count();
    std::vector<std::size_t> s(n), t(n);
    for (std::size_t x = 0; x < n; ++x) {
        s[x] = source.obj(x);
        t[x] = target.obj(x);
    }
    const json* fwd = spec ? optional_member(*spec, "forward") : nullptr;
    const json* bwd = spec ? optional_member(*spec, "backward") : nullptr;
    auto invert = [&](const HomElem& h, const std::string& where) {
        auto inv = invert_hom(cat, h);
        if (!inv) fail(where, "component is not invertible; give both directions");
        return *inv;
    };
    if (bwd && !fwd) {
        auto back = components(ring, cat, bwd, path + "/backward", t, s, [&](std::size_t x) -> std::optional<HomElem> {
            auto d = default_forward(x);
            if (!d) return std::nullopt;
            return invert(*d, path);
        });
        std::vector<HomElem> forward;
        for (const auto& h : back) forward.push_back(invert(h, path + "/backward"));
        return {NatTransform(source, target, std::move(forward)), NatTransform(target, source, std::move(back))};
    }
    auto forward = components(ring, cat, fwd, path + "/forward", s, t, default_forward);
    std::vector<HomElem> back;
    if (bwd) {
        back = components(ring, cat, bwd, path + "/backward", t, s,
                          [&](std::size_t x) -> std::optional<HomElem> { return invert(forward[x], path); });
    } else {
        for (const auto& h : forward) back.push_back(invert(h, path + "/forward"));
    }
    return {NatTransform(source, target, std::move(forward)), NatTransform(target, source, std::move(back))};
}

}  // namespace

// ------------------------------------------------------------------ loading

Instance parse_instance(std::string_view text, std::string name, const std::optional<std::string>& ring) {
    Instance inst;
    inst.name = std::move(name);
    try {
        inst.doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    if (!inst.doc.is_object()) fail("", "expected a top-level object");
    std::string ring_name = ring ? *ring : as_string(member(inst.doc, "ring", ""), "/ring");
    try {
        inst.ring = GroundRing::from_name(ring_name);
    } catch (const Error& e) {
        fail("/ring", e.message());
    }
    inst.category = parse_category(member(inst.doc, "category", ""), "/category");
    return inst;
}

Instance load_instance(const std::filesystem::path& file, const std::optional<std::string>& ring) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + file.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_instance(text.str(), file.filename().string(), ring);
}

RepresentationPtr build_representation(const Instance& inst) {
    const auto& ring = inst.ring;
    const auto& c = inst.category;
    static const json empty = json::object();
    const json* spec = optional_member(inst.doc, "representation");
    if (!spec) spec = &empty;
    const std::string rp = "/representation";

    const auto ground = ground_category(ring);
    std::vector<LinearCategoryPtr> fibers;
    const json* fs = optional_member(*spec, "fibers");
    const json* fdefault = fs ? optional_member(*fs, "default") : nullptr;
    if (fs)
        for (const auto& [key, v] : fs->items())
            if (key != "default") lookup_object(c, key, rp + "/fibers/" + key);
    LinearCategoryPtr shared_default;
    for (std::size_t i = 0; i < c.object_count(); ++i) {
        const std::string& o = c.object(i);
        if (fs && fs->contains(o)) {
            fibers.push_back(parse_fiber(ring, (*fs)[o], rp + "/fibers/" + o, ground));
        } else if (fdefault) {
            if (!shared_default) shared_default = parse_fiber(ring, *fdefault, rp + "/fibers/default", ground);
            fibers.push_back(shared_default);
        } else {
            fibers.push_back(ground);
        }
    }

    const json* fun = optional_member(*spec, "functors");
    if (fun)
        for (const auto& [key, v] : fun->items()) lookup_morphism(c, key, rp + "/functors/" + key);
    std::vector<AdditiveFunctor> act;
    for (std::size_t a = 0; a < c.morphism_count(); ++a) {
        const json* f = fun && fun->contains(c.id(a)) ? &(*fun)[c.id(a)] : nullptr;
        act.push_back(parse_functor(ring, fibers[c.dom(a)], fibers[c.cod(a)], f, rp + "/functors/" + c.id(a)));
    }

    Cocycle sigma;
    if (auto cs = optional_member(*spec, "cocycle")) {
        if (!cs->is_array()) fail(rp + "/cocycle", "expected an array of {b, a, value}");
        for (std::size_t k = 0; k < cs->size(); ++k) {
            const std::string cp = rp + "/cocycle/" + std::to_string(k);
            const auto& e = (*cs)[k];
            const std::size_t b = lookup_morphism(c, as_string(member(e, "b", cp), cp + "/b"), cp + "/b");
            const std::size_t a = lookup_morphism(c, as_string(member(e, "a", cp), cp + "/a"), cp + "/a");
            if (!c.composable(b, a)) fail(cp, "pair is not composable");
            const Scalar v = scalar(ring, member(e, "value", cp), cp + "/value");
            if (!ring.is_unit(v)) fail(cp + "/value", "cocycle values must be units");
            sigma[{b, a}] = v;
        }
    }

    const json* eta_spec = optional_member(*spec, "eta");
    std::vector<NatIso> eta;
    for (std::size_t i = 0; i < c.object_count(); ++i) {
        const std::size_t id = c.identity(i);
        const auto& fib = *fibers[i];
        const Scalar s = *ring.inverse(cocycle_at(sigma, id, id));
        const AdditiveFunctor target = identity_functor(fibers[i]);
        const json* e = eta_spec && eta_spec->contains(c.object(i)) ? &(*eta_spec)[c.object(i)] : nullptr;
        eta.push_back(make_iso(ring, act[id], target, e, rp + "/eta/" + c.object(i),
                               [&](std::size_t x) -> std::optional<HomElem> {
                                   if (act[id].obj(x) != x) return std::nullopt;
                                   return fib.scale(s, fib.identity(x));
                               }));
    }

    std::map<std::pair<std::size_t, std::size_t>, const json*> theta_spec;
    if (auto ts = optional_member(*spec, "theta")) {
        if (!ts->is_array()) fail(rp + "/theta", "expected an array of {b, a, forward|backward}");
        for (std::size_t k = 0; k < ts->size(); ++k) {
            const std::string tp = rp + "/theta/" + std::to_string(k);
            const auto& e = (*ts)[k];
            const std::size_t b = lookup_morphism(c, as_string(member(e, "b", tp), tp + "/b"), tp + "/b");
            const std::size_t a = lookup_morphism(c, as_string(member(e, "a", tp), tp + "/a"), tp + "/a");
            if (!c.composable(b, a)) fail(tp, "pair is not composable");
            theta_spec[{b, a}] = &e;
        }
    }
    const std::size_t m = c.morphism_count();
    std::vector<std::optional<NatIso>> theta(m * m);
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t a = 0; a < m; ++a) {
            if (!c.composable(b, a)) continue;
            const std::size_t ba = c.compose(b, a);
            if (ba == FiniteCategory::npos) continue;  // reported by category validation
            const auto& fib = *fibers[c.cod(b)];
            const Scalar s = cocycle_at(sigma, b, a);
            const AdditiveFunctor target = compose_functors(act[b], act[a]);
            auto it = theta_spec.find({b, a});
            theta[b * m + a] = make_iso(ring, act[ba], target, it == theta_spec.end() ? nullptr : it->second,
                                        rp + "/theta/(" + c.id(b) + "," + c.id(a) + ")",
                                        [&](std::size_t x) -> std::optional<HomElem> {
                                            if (act[ba].obj(x) != target.obj(x)) return std::nullopt;
                                            return fib.scale(s, fib.identity(act[ba].obj(x)));
                                        });
        }
    return std::make_shared<const Representation>(c, std::move(fibers), std::move(act), std::move(eta),
                                                  std::move(theta));
}

bool has_module(const Instance& inst) { return optional_member(inst.doc, "module") != nullptr; }
bool has_functor(const Instance& inst) { return optional_member(inst.doc, "functor") != nullptr; }

RModule build_module(const Instance& inst, const RepresentationPtr& rep) {
    if (!has_module(inst)) throw Error(ErrorCode::MissingSpec, inst.name + " has no module section");
    const auto& ring = inst.ring;
    const auto& c = rep->base();
    const json& spec = inst.doc["module"];
    const std::string mp = "/module";
    const json& vals = member(spec, "values", mp);
    for (const auto& [key, v] : vals.items()) lookup_object(c, key, mp + "/values/" + key);

    std::vector<FiberModule> values;
    for (std::size_t i = 0; i < c.object_count(); ++i) {
        const std::string vp = mp + "/values/" + c.object(i);
        const auto& fib = rep->fiber(i);
        const std::size_t n = fib.object_count();
        const json& v = member(vals, c.object(i), mp + "/values");
        std::vector<std::size_t> ranks(n);
        const json* homs = nullptr;
        if (v.is_number()) {
            ranks.assign(n, as_count(v, vp));
        } else {
            const json& rs = member(v, "ranks", vp);
            for (std::size_t x = 0; x < n; ++x)
                ranks[x] = rs.is_number() ? as_count(rs, vp + "/ranks")
                                          : as_count(member(rs, fib.object(x), vp + "/ranks"), vp + "/ranks/" + fib.object(x));
            homs = optional_member(v, "homs");
            if (homs)
                for (const auto& [label, mat] : homs->items())
                    if (!find_basis(fib, label, vp + "/homs")) fail(vp + "/homs/" + label, "no such basis element");
        }
        std::vector<FreeModule> mods;
        for (std::size_t x = 0; x < n; ++x) mods.push_back(FreeModule::of_rank(ring, ranks[x], "m"));
        std::vector<std::vector<Matrix>> acts(n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t p = 0; p < fib.hom_rank(x, y); ++p) {
                    const std::string& label = fib.hom(x, y).label(p);
                    if (homs && homs->contains(label))
                        acts[x * n + y].push_back(matrix(ring, (*homs)[label], ranks[x], ranks[y], vp + "/homs/" + label));
                    else if (x == y && fib.identity(x).coeffs == unit_vector(fib.hom_rank(x, x), p))
                        acts[x * n + y].push_back(Matrix::identity(ranks[x]));
                    else
                        fail(vp + "/homs", "no matrix given for basis element '" + label + "'");
                }
        values.emplace_back(rep->fiber_ptr(i), std::move(mods), std::move(acts));
    }

    std::vector<std::optional<std::vector<Matrix>>> action(c.morphism_count());
    if (auto as = optional_member(spec, "actions")) {
        for (const auto& [key, comps] : as->items()) {
            const std::string ap = mp + "/actions/" + key;
            const std::size_t a = lookup_morphism(c, key, ap);
            const std::size_t i = c.dom(a), j = c.cod(a);
            const auto& src = rep->fiber(i);
            std::vector<Matrix> out;
            for (std::size_t x = 0; x < src.object_count(); ++x) {
                const std::size_t rax = rep->act(a).obj(x);
                const json& mj = member(comps, src.object(x), ap);
                out.push_back(matrix(ring, mj, values[i].value(x).rank(), values[j].value(rax).rank(),
                                     ap + "/" + src.object(x)));
            }
            action[a] = std::move(out);
        }
    }
    try {
        return complete_module(rep, std::move(values), std::move(action));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidModule) fail(mp + "/actions", e.message());
        throw;
    }
}

std::string qualified_label(const GrothendieckCategory& gr, std::size_t s, std::size_t d, std::size_t k) {
    const auto ref = gr.basis_ref(s, d, k);
    const auto& r = gr.rep();
    const std::size_t rax = r.act(ref.morphism).obj(gr.object(s).fiber_obj);
    return r.base().id(ref.morphism) + "|" + gr.object_label(s) + "|" + gr.object_label(d) + "|" +
           r.fiber(gr.object(d).base).hom(rax, gr.object(d).fiber_obj).label(ref.local);
}

GrFunctor build_functor(const Instance& inst, const GrothendieckPtr& gr, const RModule* module) {
    if (!has_functor(inst)) throw Error(ErrorCode::MissingSpec, inst.name + " has no functor section");
    const json& spec = inst.doc["functor"];
    const std::string fp = "/functor";
    const std::string kind = as_string(member(spec, "kind", fp), fp + "/kind");
    const std::size_t n = gr->object_count();
    auto gr_object = [&](const std::string& label, const std::string& path) {
        for (std::size_t k = 0; k < n; ++k)
            if (gr->object_label(k) == label) return k;
        fail(path, "unknown Gr(R) object '" + label + "'");
    };
    if (kind == "representable")
        return representable_functor(gr, gr_object(as_string(member(spec, "object", fp), fp + "/object"), fp + "/object"));
    if (kind == "generator") return projective_generator(gr);
    if (kind == "from_module") {
        if (!module) throw Error(ErrorCode::MissingSpec, inst.name + ": functor from_module needs a module section");
        try {
            return module_to_functor(gr, *module);
        } catch (const Error& e) {
            fail(fp, e.message());
        }
    }
    if (kind != "explicit") fail(fp + "/kind", "expected representable, generator, from_module or explicit");

    const auto& g = gr->category();
    const auto& ring = g.ring();
    const json& vals = member(spec, "values", fp);
    std::vector<std::size_t> ranks(n);
    std::vector<FreeModule> values;
    for (std::size_t k = 0; k < n; ++k) {
        ranks[k] = as_count(member(vals, gr->object_label(k), fp + "/values"), fp + "/values/" + gr->object_label(k));
        values.push_back(FreeModule::of_rank(ring, ranks[k], "m"));
    }
    for (const auto& [key, v] : vals.items()) gr_object(key, fp + "/values/" + key);
    static const json empty = json::object();
    const json* homs = optional_member(spec, "homs");
    if (!homs) homs = &empty;
    std::map<std::string, bool> used;
    for (const auto& [key, v] : homs->items()) used[key] = false;
    std::vector<std::vector<Matrix>> acts(n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t k = 0; k < g.hom_rank(s, d); ++k) {
                const std::string label = qualified_label(*gr, s, d, k);
                if (homs->contains(label)) {
                    used[label] = true;
                    acts[s * n + d].push_back(matrix(ring, (*homs)[label], ranks[s], ranks[d], fp + "/homs/" + label));
                } else if (s == d && g.identity(s).coeffs == unit_vector(g.hom_rank(s, s), k)) {
                    acts[s * n + d].push_back(Matrix::identity(ranks[s]));
                } else {
                    fail(fp + "/homs", "no matrix given for '" + label + "'");
                }
            }
    for (const auto& [key, u] : used)
        if (!u) fail(fp + "/homs/" + key, "no such Gr(R) basis element");
    return {gr, FiberModule(gr->category_ptr(), std::move(values), std::move(acts))};
}

// ------------------------------------------------------------ serialization

ordered_json matrix_to_json(const GroundRing& ring, const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(ring.format(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json module_to_json(const RModule& m) {
    const auto& r = m.rep();
    const auto& c = r.base();
    const auto& ring = r.ring();
    ordered_json values = ordered_json::object();
    for (std::size_t i = 0; i < c.object_count(); ++i) {
        const auto& fib = r.fiber(i);
        ordered_json ranks = ordered_json::object(), homs = ordered_json::object();
        for (std::size_t x = 0; x < fib.object_count(); ++x) ranks[fib.object(x)] = m.value(i).value(x).rank();
        for (std::size_t x = 0; x < fib.object_count(); ++x)
            for (std::size_t y = 0; y < fib.object_count(); ++y)
                for (std::size_t p = 0; p < fib.hom_rank(x, y); ++p)
                    homs[fib.hom(x, y).label(p)] = matrix_to_json(ring, m.value(i).basis_action(x, y, p));
        values[c.object(i)] = {{"ranks", ranks}, {"homs", homs}};
    }
    ordered_json actions = ordered_json::object();
    for (std::size_t a = 0; a < c.morphism_count(); ++a) {
        ordered_json comps = ordered_json::object();
        for (std::size_t x = 0; x < r.fiber(c.dom(a)).object_count(); ++x)
            comps[r.fiber(c.dom(a)).object(x)] = matrix_to_json(ring, m.action(a, x));
        actions[c.id(a)] = std::move(comps);
    }
    return {{"values", values}, {"actions", actions}};
}

ordered_json functor_to_json(const GrFunctor& f) {
    const auto& gr = *f.gr;
    const auto& g = gr.category();
    const std::size_t n = gr.object_count();
    ordered_json values = ordered_json::object(), homs = ordered_json::object();
    for (std::size_t k = 0; k < n; ++k) values[gr.object_label(k)] = f.value(k).rank();
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t k = 0; k < g.hom_rank(s, d); ++k)
                homs[qualified_label(gr, s, d, k)] = matrix_to_json(g.ring(), f.functor.basis_action(s, d, k));
    return {{"kind", "explicit"}, {"values", values}, {"homs", homs}};
}

}  // namespace catgr::cli
