#include "catgr/fincat.hpp"

#include "catgr/error.hpp"

#include <algorithm>
#include <map>

namespace catgr {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<std::size_t> identities, std::vector<std::size_t> table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      table_(std::move(table)) {
    const std::size_t n = objects_.size();
    const std::size_t m = morphisms_.size();
    if (identities_.size() != n) throw Error(ErrorCode::InvalidArgument, "one identity per object required");
    if (table_.size() != m * m) throw Error(ErrorCode::InvalidArgument, "composition table must be m x m");
    for (std::size_t i = 0; i < n; ++i)
        if (!object_index_.emplace(objects_[i], i).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate object '" + objects_[i] + "'");
    for (std::size_t a = 0; a < m; ++a) {
        if (morphisms_[a].dom >= n || morphisms_[a].cod >= n)
            throw Error(ErrorCode::UnknownObject, "morphism '" + morphisms_[a].id + "' has an undeclared endpoint");
        if (!morphism_index_.emplace(morphisms_[a].id, a).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate morphism '" + morphisms_[a].id + "'");
    }
    for (std::size_t id : identities_)
        if (id >= m) throw Error(ErrorCode::UnknownMorphism, "identity index out of range");
    for (std::size_t c : table_)
        if (c != npos && c >= m) throw Error(ErrorCode::UnknownMorphism, "composite index out of range");
    homs_.assign(n * n, {});
    for (std::size_t a = 0; a < m; ++a) homs_[morphisms_[a].dom * n + morphisms_[a].cod].push_back(a);
}

std::span<const std::size_t> FiniteCategory::hom(std::size_t i, std::size_t j) const {
    if (i >= objects_.size() || j >= objects_.size()) throw Error(ErrorCode::UnknownObject, "object index out of range");
    return homs_[i * objects_.size() + j];
}

std::size_t FiniteCategory::find_object(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) throw Error(ErrorCode::UnknownObject, "no object '" + std::string(name) + "'");
    return it->second;
}

std::size_t FiniteCategory::find_morphism(std::string_view id) const {
    auto it = morphism_index_.find(std::string(id));
    if (it == morphism_index_.end()) throw Error(ErrorCode::UnknownMorphism, "no morphism '" + std::string(id) + "'");
    return it->second;
}

ValidationReport validate_category(const FiniteCategory& c) {
    ValidationReport report;
    const std::size_t m = c.morphism_count();
    auto pair_name = [&](std::size_t b, std::size_t a) { return "(" + c.id(b) + "," + c.id(a) + ")"; };

    for (std::size_t i = 0; i < c.object_count(); ++i) {
        std::size_t id = c.identity(i);
        if (c.dom(id) != i || c.cod(id) != i)
            report.add("identity-typing", "object/" + c.object(i), "identity '" + c.id(id) + "' is not an endomorphism");
    }

    // A composite is usable below only if it is well typed.
    std::vector<char> good(m * m, 0);
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t a = 0; a < m; ++a) {
            std::size_t ba = c.compose(b, a);
            if (!c.composable(b, a)) {
                if (ba != FiniteCategory::npos)
                    report.add("composite-defined", "comp/" + pair_name(b, a), "composite given for a non-composable pair");
                continue;
            }
            if (ba == FiniteCategory::npos) {
                report.add("composite-missing", "comp/" + pair_name(b, a));
                continue;
            }
            if (c.dom(ba) != c.dom(a) || c.cod(ba) != c.cod(b)) {
                report.add("composite-typing", "comp/" + pair_name(b, a),
                           "'" + c.id(ba) + "' is " + c.object(c.dom(ba)) + "->" + c.object(c.cod(ba)) + ", expected " +
                               c.object(c.dom(a)) + "->" + c.object(c.cod(b)));
                continue;
            }
            good[b * m + a] = 1;
        }

    for (std::size_t a = 0; a < m; ++a) {
        std::size_t left = c.identity(c.cod(a));
        std::size_t right = c.identity(c.dom(a));
        if (good[left * m + a] && c.compose(left, a) != a)
            report.add("identity-law", "left/" + c.id(a), "1∘a = '" + c.id(c.compose(left, a)) + "'");
        if (good[a * m + right] && c.compose(a, right) != a)
            report.add("identity-law", "right/" + c.id(a), "a∘1 = '" + c.id(c.compose(a, right)) + "'");
    }

    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            if (!good[b * m + a]) continue;
            std::size_t ba = c.compose(b, a);
            for (std::size_t cc = 0; cc < m; ++cc) {
                if (!good[cc * m + b]) continue;
                std::size_t cb = c.compose(cc, b);
                if (!good[cc * m + ba] || !good[cb * m + a]) continue;
                std::size_t lhs = c.compose(cc, ba);
                std::size_t rhs = c.compose(cb, a);
                if (lhs != rhs)
                    report.add("associativity", "(" + c.id(cc) + "," + c.id(b) + "," + c.id(a) + ")",
                               "c∘(b∘a) = '" + c.id(lhs) + "', (c∘b)∘a = '" + c.id(rhs) + "'");
            }
        }
    return report;
}

std::vector<std::string> hom_set(const FiniteCategory& c, std::string_view i, std::string_view j) {
    std::vector<std::string> out;
    for (std::size_t a : c.hom(c.find_object(i), c.find_object(j))) out.push_back(c.id(a));
    return out;
}

FiniteCategory path_category(const Quiver& q) {
    const std::size_t n = q.vertices.size();
    std::map<std::string, std::size_t> vindex;
    for (std::size_t v = 0; v < n; ++v)
        if (!vindex.emplace(q.vertices[v], v).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate vertex '" + q.vertices[v] + "'");
    struct Edge {
        std::size_t s, t;
    };
    std::vector<Edge> edges;
    for (const auto& arr : q.arrows) {
        auto s = vindex.find(arr.source);
        auto t = vindex.find(arr.target);
        if (s == vindex.end() || t == vindex.end())
            throw Error(ErrorCode::UnknownObject, "arrow '" + arr.id + "' has an undeclared endpoint");
        edges.push_back({s->second, t->second});
    }

    // Kahn's algorithm; anything left over lies on a cycle.
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& e : edges) ++indeg[e.t];
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& e : edges)
            if (e.s == queue[head] && --indeg[e.t] == 0) queue.push_back(e.t);
    if (queue.size() != n) throw Error(ErrorCode::CyclicQuiver, "quiver has a directed cycle");

    // Enumerate nonempty paths as arrow sequences (first arrow first).
    std::vector<std::vector<std::size_t>> paths;
    std::vector<std::size_t> current;
    auto extend = [&](auto&& self, std::size_t at) -> void {
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (edges[k].s != at) continue;
            current.push_back(k);
            paths.push_back(current);
            self(self, edges[k].t);
            current.pop_back();
        }
    };
    for (std::size_t v = 0; v < n; ++v) extend(extend, v);
    std::sort(paths.begin(), paths.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });

    std::vector<Morphism> morphisms;
    std::vector<std::size_t> identities;
    std::map<std::vector<std::size_t>, std::size_t> path_index;
    for (std::size_t v = 0; v < n; ++v) {
        identities.push_back(morphisms.size());
        morphisms.push_back({"1_" + q.vertices[v], v, v});
    }
    for (const auto& p : paths) {
        std::string id;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            if (!id.empty()) id += "∘";
            id += q.arrows[*it].id;
        }
        path_index[p] = morphisms.size();
        morphisms.push_back({id, edges[p.front()].s, edges[p.back()].t});
    }

    const std::size_t m = morphisms.size();
    std::vector<std::size_t> table(m * m, FiniteCategory::npos);
    auto seq = [&](std::size_t a) -> std::vector<std::size_t> {
        if (a < n) return {};
        return paths[a - n];
    };
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t a = 0; a < m; ++a) {
            if (morphisms[a].cod != morphisms[b].dom) continue;
            if (a < n) {
                table[b * m + a] = b;
            } else if (b < n) {
                table[b * m + a] = a;
            } else {
                auto s = seq(a);
                auto t = seq(b);
                s.insert(s.end(), t.begin(), t.end());
                table[b * m + a] = path_index.at(s);
            }
        }
    return FiniteCategory(q.vertices, std::move(morphisms), std::move(identities), std::move(table));
}

Quiver linear_quiver(std::size_t n, std::vector<std::string> arrow_names) {
    Quiver q;
    for (std::size_t v = 1; v <= n; ++v) q.vertices.push_back(std::to_string(v));
    for (std::size_t v = 1; v < n; ++v) {
        std::string id = arrow_names.size() >= v ? arrow_names[v - 1] : "a" + std::to_string(v);
        q.arrows.push_back({id, std::to_string(v), std::to_string(v + 1)});
    }
    return q;
}

FiniteCategory cyclic_group(std::size_t n, std::vector<std::string> names) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group of order 0");
    if (names.empty()) {
        names.push_back("e");
        for (std::size_t k = 1; k < n; ++k) names.push_back(k == 1 ? "g" : "g^" + std::to_string(k));
    }
    if (names.size() != n) throw Error(ErrorCode::InvalidArgument, "one name per group element required");
    std::vector<Morphism> morphisms;
    for (auto& name : names) morphisms.push_back({name, 0, 0});
    std::vector<std::size_t> table(n * n);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a) table[b * n + a] = (a + b) % n;
    return FiniteCategory({"*"}, std::move(morphisms), {0}, std::move(table));
}

}  // namespace catgr
