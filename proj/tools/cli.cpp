#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "qaff/checks.hpp"
#include "qaff/errors.hpp"

namespace qaff {

namespace {

using json = nlohmann::json;

struct Options {
    std::vector<int> ns{2};
    std::vector<int> ells{1, 2};
    std::string backend = "symbolic";
    std::uint64_t seed = 1;
    std::string segments;
    bool has_segments = false;
    std::vector<std::string> module_files;
    bool as_json = false;
    bool allow_large_ell = false;
    std::string check_id;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--n", o.ns, "rank n of sl_{n+1}; comma-separated list for check")->delimiter(',');
    sub->add_option("--ell", o.ells, "number of tensor factors; comma-separated list for check")->delimiter(',');
    sub->add_option("--backend", o.backend, "symbolic | rational:<t0>");
    sub->add_option("--seed", o.seed, "seed for randomized steps");
    sub->add_option("--segments", o.segments, "segment list c@e:k,... (center c*q^(e/2), length k)");
    sub->add_option("--module-file", o.module_files, "module descriptor JSON (repeatable)");
    sub->add_flag("--json", o.as_json, "machine-readable output");
    sub->add_flag("--allow-large-ell", o.allow_large_ell, "run l <= n statements outside that range");
}

int single(const std::vector<int>& v, const char* what) {
    if (v.size() != 1) throw UsageError(std::string("this command takes a single --") + what);
    return v.front();
}

ScalarContext context_for(const Options& o) { return ScalarContext::from_backend_string(single(o.ns, "n"), o.backend); }

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open module file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("module file '" + path + "' is not valid JSON: " + e.what());
    }
}

// A module read from a file or built from segments: either over a Hecke algebra or over U_q.
struct Loaded {
    std::optional<RightModule> hecke;
    std::optional<UqModule> quantum;
};

Loaded load_file(const std::string& path) {
    json j = read_json(path);
    if (j.contains("hecke")) j = j["hecke"];  // output of `build`
    if (!j.contains("algebra")) throw UsageError("module file '" + path + "' has no \"algebra\" field");
    std::string alg = j["algebra"].get<std::string>();
    Loaded l;
    try {
        if (alg == "H" || alg == "Hhat")
            l.hecke = RightModule::from_json(j);
        else if (alg == "Uq" || alg == "Uqhat")
            l.quantum = UqModule::from_json(j);
        else
            throw UsageError("unknown algebra '" + alg + "' in '" + path + "'");
    } catch (const json::exception& e) {
        throw UsageError("malformed module descriptor '" + path + "': " + e.what());
    }
    return l;
}

SegmentList segments_of(const Options& o) {
    if (!o.has_segments) throw UsageError("--segments is required");
    return parse_segments(o.segments);
}

// The module named on the command line: --module-file, --segments (V_a) or M_a with random a.
Loaded load_input(const Options& o) {
    if (!o.module_files.empty()) {
        if (o.module_files.size() != 1) throw UsageError("expected one --module-file");
        return load_file(o.module_files.front());
    }
    ScalarContext ctx = context_for(o);
    Loaded l;
    if (o.has_segments) {
        l.hecke = irreducible_V_a(segments_of(o), ctx).module;
    } else {
        l.hecke = universal_module(ctx, random_parameters(o.seed, single(o.ells, "ell")));
    }
    return l;
}

// Push a Hecke module through F (affine) or J (finite).
UqModule quantum_of(const Loaded& l) {
    if (l.quantum) return *l.quantum;
    const RightModule& m = *l.hecke;
    if (m.affine()) return functor_F(m).module;
    for (const auto& r : verify_hecke_relations(m))
        if (!r.pass) throw MathError("module fails the Hecke relation '" + r.relation + "'");
    return jimbo_J(m, m.ctx.n()).module;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_relations(const Options& o, std::ostream& out) {
    UqModule w = quantum_of(load_input(o));
    std::vector<RelationResult> rs = w.affine ? verify_affine_relations(w) : verify_quantum_relations(w);
    bool ok = all_pass(rs);
    if (o.as_json) {
        emit(out, {{"algebra", w.affine ? "Uqhat" : "Uq"},
                   {"n", w.n()},
                   {"dim", w.dim},
                   {"relations", relations_to_json(rs)},
                   {"pass", ok}});
    } else {
        out << (w.affine ? "Uq(sl^_" : "Uq(sl_") << w.n() + 1 << ") module of dimension " << w.dim << "\n";
        for (const auto& r : rs) out << "  [" << (r.pass ? "ok" : "FAIL") << "] " << r.relation << "\n";
        out << rs.size() << " relations, " << (ok ? "all pass" : "some FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_build(const Options& o, std::ostream& out) {
    ScalarContext ctx = context_for(o);
    SegmentList s = segments_of(o);
    IrreducibleResult v = irreducible_V_a(s, ctx);
    FunctorResult f = functor_F(v.module);
    json j;
    j["segments"] = s.str();
    j["n"] = ctx.n();
    if (s.total_length() <= ctx.n()) {
        PolyTuple pt = drinfeld_polys(s, ctx);
        j["drinfeld"] = {{"polys", pt.to_json(ctx)}, {"degrees", pt.degrees()}, {"factored", drinfeld_factored(s, ctx)}};
    }
    j["hecke"] = v.module.to_json();
    j["quantum"] = f.module.to_json();
    emit(out, j);
    return 0;
}

int cmd_drinfeld(const Options& o, std::ostream& out) {
    ScalarContext ctx = context_for(o);
    SegmentList s = segments_of(o);
    PolyTuple pt = drinfeld_polys(s, ctx);
    auto fac = drinfeld_factored(s, ctx);
    if (o.as_json) {
        emit(out, {{"segments", s.str()}, {"n", ctx.n()}, {"polys", pt.to_json(ctx)}, {"degrees", pt.degrees()}, {"factored", fac}});
    } else {
        for (std::size_t i = 0; i < fac.size(); ++i) out << "P_" << i + 1 << "(u) = " << fac[i] << "\n";
    }
    return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
    const auto& ids = check_ids();
    if (o.check_id != "all" && std::find(ids.begin(), ids.end(), o.check_id) == ids.end()) {
        std::string known;
        for (const auto& id : ids) known += " " + id;
        throw UsageError("unknown check '" + o.check_id + "'; known:" + known + " all");
    }
    CheckParams p;
    p.ns = o.ns;
    p.ells = o.ells;
    p.backend = o.backend;
    p.seed = o.seed;
    p.allow_large_ell = o.allow_large_ell;
    if (o.has_segments) p.segments = parse_segments(o.segments);
    ScalarContext::from_backend_string(1, o.backend);  // reject a bad backend before any work
    std::vector<CheckReport> reports = run_checks(o.check_id, p);
    bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass(); });
    if (o.as_json) {
        json j = json::array();
        for (const auto& r : reports) j.push_back(r.to_json());
        emit(out, {{"checks", j}, {"pass", ok}});
    } else {
        for (const auto& r : reports) out << r.text();
        if (reports.size() > 1) {
            long failed = std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.pass(); });
            out << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size() << " checks pass\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_character(const Options& o, std::ostream& out) {
    UqModule w = quantum_of(load_input(o));
    auto ch = character(w);
    auto hw = highest_weight_vectors(w);
    if (o.as_json) {
        json c = json::array(), h = json::array();
        for (const auto& [wt, m] : ch) c.push_back({{"weight", wt}, {"multiplicity", m}});
        for (const auto& [wt, vs] : hw) h.push_back({{"weight", wt}, {"multiplicity", vs.size()}});
        emit(out, {{"n", w.n()}, {"dim", w.dim}, {"character", c}, {"highest_weights", h}});
    } else {
        out << "dimension " << w.dim << "\n";
        for (const auto& [wt, m] : ch) out << "  " << weight_str(wt) << " x " << m << "\n";
        out << "highest weights:";
        for (const auto& [wt, vs] : hw) out << " " << weight_str(wt) << " x " << vs.size();
        out << "\n";
    }
    return 0;
}

int cmd_isomorphic(const Options& o, std::ostream& out) {
    if (o.module_files.size() != 2) throw UsageError("isomorphic needs exactly two --module-file arguments");
    Loaded a = load_file(o.module_files[0]);
    Loaded b = load_file(o.module_files[1]);
    IsoResult iso;
    if (a.hecke && b.hecke) {
        if (a.hecke->ell != b.hecke->ell || a.hecke->kind != b.hecke->kind)
            throw UsageError("modules are over different Hecke algebras");
        if (!a.hecke->ctx.same_field(b.hecke->ctx)) throw UsageError("modules are over different fields");
        iso = generic_isomorphism(a.hecke->operators(), b.hecke->operators(), o.seed);
    } else {
        UqModule x = quantum_of(a), y = quantum_of(b);
        if (!x.ctx.same_field(y.ctx)) throw UsageError("modules are over different fields");
        if (x.affine != y.affine) throw UsageError("one module is affine and the other is not");
        iso = uq_isomorphism(x, y, o.seed);
    }
    if (o.as_json)
        emit(out, {{"isomorphic", iso.isomorphic}, {"reason", iso.reason}});
    else
        out << (iso.isomorphic ? "isomorphic" : "not isomorphic") << (iso.reason.empty() ? "" : ": " + iso.reason)
            << "\n";
    return iso.isomorphic ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Affine Hecke modules and quantum affine sl_{n+1} modules, exactly"};
    app.name("qaffine");
    app.require_subcommand(1);
    Options o;
    CLI::App* relations = app.add_subcommand("relations", "build F(M) and verify every defining relation");
    CLI::App* build = app.add_subcommand("build", "emit descriptors of V_a and F(V_a) for --segments");
    CLI::App* drinfeld = app.add_subcommand("drinfeld", "Drinfeld polynomials of --segments");
    CLI::App* check = app.add_subcommand("check", "run a registered check (or all)");
    CLI::App* character = app.add_subcommand("character", "weight multiplicities and highest weights");
    CLI::App* isomorphic = app.add_subcommand("isomorphic", "decide isomorphism of two module files");
    for (CLI::App* s : {relations, build, drinfeld, check, character, isomorphic}) add_common(s, o);
    check->add_option("id", o.check_id, "check id, or all")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    for (CLI::App* s : {relations, build, drinfeld, check, character, isomorphic})
        if (s->parsed()) o.has_segments = s->count("--segments") > 0;

    try {
        if (relations->parsed()) return cmd_relations(o, out);
        if (build->parsed()) return cmd_build(o, out);
        if (drinfeld->parsed()) return cmd_drinfeld(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (character->parsed()) return cmd_character(o, out);
        return cmd_isomorphic(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qaff
