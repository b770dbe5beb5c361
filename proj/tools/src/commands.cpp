#include "commands.hpp"

#include "instance.hpp"

#include "catgr/error.hpp"

#include <sstream>

namespace catgr::cli {

using nlohmann::ordered_json;

namespace {

ordered_json findings_json(const ValidationReport& r) {
    ordered_json out = ordered_json::array();
    for (const auto& f : r.findings())
        out.push_back({{"check", f.check}, {"location", f.location}, {"detail", f.detail}});
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string findings_csv(const ValidationReport& r) {
    std::string out = "check,location,detail\n";
    for (const auto& f : r.findings())
        out += csv_field(f.check) + "," + csv_field(f.location) + "," + csv_field(f.detail) + "\n";
    return out;
}

ordered_json header(const Options& opts, const Instance& inst, const ValidationReport& report) {
    return {{"command", opts.command},
            {"file", inst.name},
            {"ring", inst.ring.name()},
            {"status", report.ok() ? "pass" : "fail"}};
}

std::string dense(const GroundRing& ring, const Vec& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + ring.format(v[k]);
    return out;
}

std::string sparse(const GroundRing& ring, const std::vector<std::string>& labels, const Vec& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        const bool negative = v[k] < 0;
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        const Scalar c = negative ? Scalar(-v[k]) : v[k];
        if (c != 1) out += ring.format(c) + "*";
        out += labels[k];
    }
    return out.empty() ? "0" : out;
}

Outcome finish(const Options& opts, ordered_json doc, const ValidationReport& report, std::string csv = {}) {
    Outcome o;
    o.exit_code = report.ok() ? 0 : 1;
    if (opts.emit == Emit::Csv) {
        o.out = csv.empty() ? findings_csv(report) : std::move(csv);
    } else {
        doc["findings"] = findings_json(report);
        o.out = doc.dump(2) + "\n";
    }
    return o;
}

// Validation of R, guarded so representation typing errors become findings.
ValidationReport check_rep(const Instance& inst, RepresentationPtr& rep) {
    ValidationReport report;
    report.merge(validate_category(inst.category), "category");
    if (!report.ok()) return report;
    rep = build_representation(inst);
    report.merge(validate_representation(*rep), "representation");
    return report;
}

// Gr(R) even when coherence fails, so the downstream sweeps can show the damage.
GrothendieckPtr build_gr(const RepresentationPtr& rep, ValidationReport& report) {
    try {
        return grothendieck_construction(rep, false);
    } catch (const Error& e) {
        report.add("gr-construction", "gr", e.what());
        return nullptr;
    }
}

bool coherence_only(const ValidationReport& r) {
    for (const auto& f : r.findings())
        if (f.check != "rep1" && f.check != "rep2") return false;
    return true;
}

Outcome cmd_validate(const Options& opts, const Instance& inst) {
    RepresentationPtr rep;
    ValidationReport report = check_rep(inst, rep);
    ordered_json checked = ordered_json::array({"category"});
    if (rep) checked.push_back("representation");
    if (rep && report.ok()) {
        std::optional<RModule> module;
        if (has_module(inst)) {
            module = build_module(inst, rep);
            report.merge(validate_module(*module), "module");
            checked.push_back("module");
        }
        if (has_functor(inst)) {
            auto gr = grothendieck_construction(rep, false);
            if (module || inst.doc["functor"].value("kind", "") != "from_module") {
                report.merge(validate_gr_functor(build_functor(inst, gr, module ? &*module : nullptr)), "functor");
                checked.push_back("functor");
            }
        }
    }
    ordered_json doc = header(opts, inst, report);
    doc["checked"] = checked;
    return finish(opts, std::move(doc), report);
}

Outcome cmd_gr(const Options& opts, const Instance& inst) {
    RepresentationPtr rep;
    ValidationReport report = check_rep(inst, rep);
    GrothendieckPtr gr = rep && coherence_only(report) ? build_gr(rep, report) : nullptr;
    if (gr) report.merge(validate_linear_category(gr->category(), opts.exhaustive), "gr");
    ordered_json doc = header(opts, inst, report);
    if (!gr) return finish(opts, std::move(doc), report);

    const auto& g = gr->category();
    const auto& ring = g.ring();
    const std::size_t n = gr->object_count();
    ordered_json objects = ordered_json::array(), ranks = ordered_json::array(), homs = ordered_json::array();
    for (std::size_t k = 0; k < n; ++k) objects.push_back(gr->object_label(k));
    for (std::size_t s = 0; s < n; ++s) {
        ordered_json row = ordered_json::array();
        for (std::size_t d = 0; d < n; ++d) {
            row.push_back(g.hom_rank(s, d));
            if (g.hom_rank(s, d) == 0) continue;
            homs.push_back({{"src", gr->object_label(s)}, {"dst", gr->object_label(d)}, {"basis", g.hom(s, d).labels()}});
        }
        ranks.push_back(std::move(row));
    }
    ordered_json comp = ordered_json::array();
    std::string csv = "row_basis,col_basis,product_coefficients\n";
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t q = 0; q < g.hom_rank(y, z); ++q)
                    for (std::size_t p = 0; p < g.hom_rank(x, y); ++p) {
                        const Vec& c = g.structure(x, y, z, q, p);
                        const std::string gl = qualified_label(*gr, y, z, q), fl = qualified_label(*gr, x, y, p);
                        csv += csv_field(gl) + "," + csv_field(fl) + "," + csv_field(dense(ring, c)) + "\n";
                        if (is_zero(c)) continue;
                        comp.push_back({{"g", gl}, {"f", fl}, {"product", g.format({x, z, c})}});
                    }
    doc["objects"] = objects;
    doc["hom_ranks"] = ranks;
    doc["homs"] = homs;
    doc["composition"] = comp;
    return finish(opts, std::move(doc), report, opts.emit == Emit::Csv ? csv : std::string());
}

Outcome cmd_algebra(const Options& opts, const Instance& inst) {
    RepresentationPtr rep;
    ValidationReport report = check_rep(inst, rep);
    GrothendieckPtr gr = rep && coherence_only(report) ? build_gr(rep, report) : nullptr;
    ordered_json doc = header(opts, inst, report);
    if (!gr) return finish(opts, std::move(doc), report);

    const auto psa = pseudoskew_algebra(gr);
    const auto& alg = psa.algebra;
    const auto& ring = alg.ring();
    const auto summary = algebra_report(alg, opts.exhaustive);
    report.merge(summary.laws, "algebra");

    std::string skew = "not-applicable";
    bool one_object = true;
    for (std::size_t i = 0; i < rep->base().object_count(); ++i) one_object = one_object && rep->fiber(i).object_count() == 1;
    if (is_strict(*rep) && one_object) {
        auto oracle = skew_specialization_oracle(psa);
        skew = oracle.ok() ? "pass" : "fail";
        report.merge(oracle, "skew-oracle");
    }

    doc = header(opts, inst, report);
    doc["dimension"] = alg.dimension();
    doc["basis"] = alg.basis();
    doc["unit"] = sparse(ring, alg.basis(), alg.unit());
    doc["associativity"] = opts.exhaustive ? (summary.laws.has_check("associativity") ? "fail" : "pass") : "skipped";
    doc["commutative"] = summary.commutative;
    doc["center_rank"] = summary.center_dimension;
    doc["skew_oracle"] = skew;
    ordered_json table = ordered_json::array();
    std::string csv = "row_basis,col_basis,product_coefficients\n";
    for (std::size_t u = 0; u < alg.dimension(); ++u) {
        ordered_json row = ordered_json::array();
        for (std::size_t v = 0; v < alg.dimension(); ++v) {
            const Vec p = alg.product_dense(u, v);
            row.push_back(sparse(ring, alg.basis(), p));
            csv += csv_field(alg.label(u)) + "," + csv_field(alg.label(v)) + "," + csv_field(dense(ring, p)) + "\n";
        }
        table.push_back({{"row", alg.label(u)}, {"products", std::move(row)}});
    }
    doc["table"] = table;
    return finish(opts, std::move(doc), report, opts.emit == Emit::Csv ? csv : std::string());
}

Outcome cmd_equiv(const Options& opts, const Instance& inst) {
    const std::string& dir = opts.direction;
    if (dir != "m2f" && dir != "f2m" && dir != "roundtrip" && dir != "endo")
        throw Error(ErrorCode::InvalidArgument, "direction must be m2f, f2m, roundtrip or endo");
    if (dir == "m2f" && !has_module(inst)) throw Error(ErrorCode::MissingSpec, inst.name + " has no module section");
    if (dir == "f2m" && !has_functor(inst)) throw Error(ErrorCode::MissingSpec, inst.name + " has no functor section");
    if (dir == "roundtrip" && !has_module(inst) && !has_functor(inst))
        throw Error(ErrorCode::MissingSpec, inst.name + " has neither a module nor a functor section");

    RepresentationPtr rep;
    ValidationReport report = check_rep(inst, rep);
    ordered_json doc = header(opts, inst, report);
    doc["direction"] = dir;
    if (!report.ok()) return finish(opts, std::move(doc), report);
    auto gr = grothendieck_construction(rep);

    std::optional<RModule> module;
    if (has_module(inst)) {
        module = build_module(inst, rep);
        report.merge(validate_module(*module), "module");
    }
    std::optional<GrFunctor> functor;
    if (has_functor(inst) && (dir != "m2f") && report.ok()) {
        functor = build_functor(inst, gr, module ? &*module : nullptr);
        report.merge(validate_gr_functor(*functor), "functor");
    }
    if (!report.ok()) {
        doc = header(opts, inst, report);
        doc["direction"] = dir;
        return finish(opts, std::move(doc), report);
    }

    ordered_json result = ordered_json::object();
    if (dir == "m2f") {
        const GrFunctor f = module_to_functor(gr, *module);
        report.merge(validate_gr_functor(f), "m2f");
        result["functor"] = functor_to_json(f);
    } else if (dir == "f2m") {
        const RModule m = functor_to_module(*functor);
        report.merge(validate_module(m), "f2m");
        result["module"] = module_to_json(m);
    } else if (dir == "roundtrip") {
        if (module) {
            auto r = roundtrip_module(gr, *module);
            result["module_roundtrip"] = r.ok() ? "pass" : "fail";
            report.merge(r, "module-roundtrip");
        }
        if (functor) {
            auto r = roundtrip_functor(*functor);
            result["functor_roundtrip"] = r.ok() ? "pass" : "fail";
            report.merge(r, "functor-roundtrip");
        }
    } else {
        auto r = endomorphism_algebra_check(gr);
        const std::size_t dim = pseudoskew_algebra(gr).algebra.dimension();
        result["dimension"] = dim;
        result["product_comparisons"] = dim * dim;
        result["endomorphism_check"] = r.ok() ? "pass" : "fail";
        report.merge(r, "endo");
        const auto psa = pseudoskew_algebra(gr);
        const GrFunctor f = functor ? *functor : projective_generator(gr);
        auto am = module_over_algebra(psa, f);
        auto ar = check_algebra_module(psa.algebra, am);
        result["algebra_module"] = {{"functor", functor ? "instance" : "generator"},
                                    {"rank", am.module.rank()},
                                    {"laws", ar.ok() ? "pass" : "fail"}};
        report.merge(ar, "algebra-module");
    }
    doc = header(opts, inst, report);
    doc["direction"] = dir;
    for (auto& [k, v] : result.items()) doc[k] = v;
    return finish(opts, std::move(doc), report);
}

}  // namespace

Outcome run_command(const Options& opts) {
    try {
        const Instance inst = load_instance(opts.file, opts.ring);
        if (opts.command == "validate") return cmd_validate(opts, inst);
        if (opts.command == "gr") return cmd_gr(opts, inst);
        if (opts.command == "algebra") return cmd_algebra(opts, inst);
        if (opts.command == "equiv") return cmd_equiv(opts, inst);
        throw Error(ErrorCode::InvalidArgument, "unknown command '" + opts.command + "'");
    } catch (const Error& e) {
        return {2, {}, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace catgr::cli
