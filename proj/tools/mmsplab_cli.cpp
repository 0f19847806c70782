// SPDX-License-Identifier: MIT
// Command-line front end: verify, construct, simulate, audit, rate, crosscheck and fixtures.
//
// Exit codes: 0 success, 1 failed verification or audit, 2 invalid input,
// 3 enumeration exceeds the desk-scale budget.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mmsplab/classical.hpp"
#include "mmsplab/constructions.hpp"
#include "mmsplab/fixtures.hpp"
#include "mmsplab/json_io.hpp"
#include "mmsplab/quantum/protocols.hpp"

using namespace mmsplab;
using io::Json;

namespace {

enum Exit : int { kOk = 0, kFailed = 1, kInvalid = 2, kTooLarge = 3 };

struct Outcome {
    int code = kOk;
    Json report;
};

/* ---------------------------- output ---------------------------- */

void render_text(const Json& j, std::ostream& os, const std::string& indent = "")
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (v.is_structured() && !(v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); }))) {
                os << indent << it.key() << ":\n";
                render_text(v, os, indent + "  ");
            } else {
                os << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() && v.contains("name") && v.contains("ok") && v["ok"].is_boolean()) {
                os << indent << "- [" << (v["ok"].get<bool>() ? "PASS" : "FAIL") << "] " << v["name"].get<std::string>() << "\n";
                Json rest = v;
                rest.erase("name");
                rest.erase("ok");
                render_text(rest, os, indent + "    ");
            } else if (v.is_structured()) {
                os << indent << "-\n";
                render_text(v, os, indent + "  ");
            } else {
                os << indent << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

/** Removes enumeration counters unless MMSPLAB_VERBOSE is set. */
Json for_display(Json j)
{
    const char* v = std::getenv("MMSPLAB_VERBOSE");
    if (v && *v && std::string(v) != "0") return j;
    if (j.is_object()) {
        j.erase("cases");
        for (auto& [k, x] : j.items()) x = for_display(x);
    } else if (j.is_array()) {
        for (auto& x : j) x = for_display(x);
    }
    return j;
}

void emit(const Outcome& o, const std::string& format)
{
    if (format == "json") {
        std::cout << o.report.dump(2) << "\n";
    } else {
        render_text(for_display(o.report), std::cout);
    }
}

/* ---------------------------- argument helpers ---------------------------- */

std::vector<int64_t> parse_ints(const std::string& s, char sep = ',')
{
    std::vector<int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        if (tok.empty()) continue;
        try {
            size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            require(used == tok.size(), Errc::ParseError, "bad integer '" + tok + "'");
        } catch (const std::logic_error&) {
            fail(Errc::ParseError, "bad integer '" + tok + "'");
        }
    }
    return out;
}

Subset parse_subset(const std::string& s, int n)
{
    std::vector<int> players;
    for (auto v : parse_ints(s)) {
        require(v >= 1 && v <= n, Errc::IndexOutOfRange, "player " + std::to_string(v) + " outside [1, n]");
        players.push_back(static_cast<int>(v));
    }
    return subset_from_players(players);
}

VecGF parse_vector(const FieldPtr& ctx, const std::string& s, size_t len, const std::string& what)
{
    Json arr = Json::array();
    for (auto v : parse_ints(s)) arr.push_back(v);
    VecGF v = io::vector_from_json(ctx, arr);
    require(v.size() == len, Errc::DimensionMismatch, what + " must have " + std::to_string(len) + " entries");
    return v;
}

struct Loaded {
    MmspBundle bundle;
    AccessStructure structure;
};

Loaded load_bundle(const std::string& bundle_path, const std::string& structure_path)
{
    Json j = io::read_file(bundle_path);
    Loaded l;
    l.bundle = io::bundle_from_json(j);
    std::optional<AccessStructure> fs;
    if (!structure_path.empty()) {
        fs = io::structure_from_json(io::read_file(structure_path));
    } else {
        fs = io::bundle_structure(j);
        if (!fs && l.bundle.r > 0) fs = make_threshold(l.bundle.r, l.bundle.t, l.bundle.n);
    }
    require(fs.has_value(), Errc::ParseError, "no access structure: pass --structure or embed one in the bundle");
    l.structure = *fs;
    return l;
}

Json subset_json(Subset s, int n) { return io::witness_to_json(s, n); }

/* ---------------------------- verify ---------------------------- */

Outcome cmd_verify(const std::string& bundle_path, const std::string& structure_path)
{
    Loaded l = load_bundle(bundle_path, structure_path);
    const MmspBundle& b = l.bundle;
    Json rep;
    rep["schema"] = io::kSchema;
    rep["kind"] = "verify";
    rep["class"] = class_name(b.cls);
    rep["field"] = b.F.ctx()->describe();
    std::string diag;
    const bool valid = validate(l.structure, &diag);
    Json preds = Json::array();
    preds.push_back(Json{{"name", "access structure monotone and disjoint"}, {"ok", valid}});
    if (!valid) preds.back()["detail"] = diag;
    ClassVerdict v = classify_report(b, l.structure);
    for (const auto& inv : v.invariants) preds.push_back(Json{{"name", inv.name}, {"ok", inv.ok}});
    bool all = valid && v.structural_ok;
    if (v.structural_ok) {
        const AccessStructure s = classification_structure(b, l.structure);
        const int np = b.cls == BundleClass::Plain ? 0 : b.n;
        Json acc{{"name", "every accept set recovers F"}, {"ok", true}}, rej{{"name", "every reject set learns nothing"}, {"ok", true}};
        for (auto A : s.accept_check_sets())
            if (!accepts_one(b.G(), b.F, A)) {
                acc["ok"] = false;
                acc["counterexample"] = subset_json(A, np);
                break;
            }
        for (auto B : s.reject_check_sets())
            if (!rejects_one(b.G(), b.F, B)) {
                rej["ok"] = false;
                rej["counterexample"] = subset_json(B, np);
                break;
            }
        all = all && acc["ok"].get<bool>() && rej["ok"].get<bool>();
        preds.push_back(acc);
        preds.push_back(rej);
    }
    rep["predicates"] = preds;
    rep["verdict"] = all;
    return {all ? kOk : kFailed, rep};
}

/* ---------------------------- construct ---------------------------- */

Outcome cmd_construct(const std::string& cls, const std::vector<std::string>& params, int y1, const std::string& mode, int degree,
                      uint64_t seed, const std::string& out)
{
    std::vector<int64_t> v;
    for (const auto& s : params) {
        auto x = parse_ints(s);
        require(x.size() == 1, Errc::ParseError, "bad parameter '" + s + "'");
        v.push_back(x[0]);
    }
    ConstructOptions opt;
    opt.mode = field_mode_from_name(mode);
    opt.degree = degree;
    opt.seed = seed;
    Json rep;
    rep["schema"] = io::kSchema;
    rep["kind"] = "construct";
    rep["class"] = cls;
    MmspBundle b;
    ConstructionReport cr;
    try {
        if (cls == "qqmds") {
            require(v.size() == 3, Errc::ParseError, "qqmds takes r n p");
            auto res = construct_qqmds(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<uint32_t>(v[2]), opt);
            b.cls = BundleClass::QQ;
            b.G1 = res.G1;
            b.G2 = MatGF::empty(res.G1.ctx(), res.G1.rows(), 0);
            b.F = res.F;
            b.n = static_cast<int>(v[1]);
            b.r = static_cast<int>(v[0]);
            b.t = b.n - b.r;
            cr = res.report;
        } else {
            require(v.size() == 4, Errc::ParseError, cls + " takes r t n p");
            const int r = static_cast<int>(v[0]), t = static_cast<int>(v[1]), n = static_cast<int>(v[2]);
            const auto p = static_cast<uint32_t>(v[3]);
            Construction c;
            if (cls == "ea") {
                require(y1 > 0, Errc::ParseError, "ea needs --y1");
                c = construct_eammsp(r, t, n, y1, p, opt);
            } else if (cls == "cq") {
                c = construct_cqmmsp(r, t, n, p, opt);
            } else if (cls == "qq") {
                c = construct_qqmmsp(r, t, n, p, opt);
            } else if (cls == "css") {
                auto ctx = field_build(p, degree > 0 ? degree : 1);
                auto [G, F] = construct_css_threshold(r, t, n, ctx);
                c.bundle.cls = BundleClass::Plain;
                c.bundle.G1 = G;
                c.bundle.G2 = MatGF::empty(ctx, G.rows(), 0);
                c.bundle.F = F;
                c.bundle.n = n;
                c.bundle.r = r;
                c.bundle.t = t;
                c.report.what = "css";
                c.report.field = ctx->describe();
                c.report.field_mode = "vandermonde";
                c.report.attempts = 1;
                c.report.add("threshold MMSP", is_mmsp(G, F, make_threshold(r, t, n)));
            } else {
                fail(Errc::ParseError, "unknown class '" + cls + "' (ea, cq, qq, qqmds, css)");
            }
            b = c.bundle;
            cr = c.report;
        }
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError || e.code() == Errc::TooLarge) throw;
        rep["ok"] = false;
        rep["violated"] = e.what();
        rep["error"] = errc_name(e.code());
        return {kFailed, rep};
    }
    const AccessStructure fs = make_threshold(b.r, b.t, b.n);
    rep["report"] = io::construction_to_json(cr);
    rep["ok"] = cr.ok();
    Json bj = io::bundle_to_json(b, fs);
    if (!out.empty()) {
        std::ofstream os(out);
        require(os.good(), Errc::ParseError, "cannot write '" + out + "'");
        os << bj.dump(2) << "\n";
        rep["written"] = out;
    } else {
        rep["bundle"] = bj;
    }
    return {cr.ok() ? kOk : kFailed, rep};
}

/* ---------------------------- audit ---------------------------- */

int players_of(const MmspBundle& b) { return b.cls == BundleClass::Plain ? 0 : b.n; }

Outcome cmd_audit(const std::string& protocol, const std::string& bundle_path, const std::string& structure_path,
                  const std::string& backend_name, int files)
{
    Loaded l = load_bundle(bundle_path, structure_path);
    const MmspBundle& b = l.bundle;
    const auto backend = quantum::backend_from_name(backend_name);
    AuditReport rep;
    try {
        if (protocol == "css") {
            rep = css_audit(make_css(b.G(), b.F, classification_structure(b, l.structure)));
        } else if (protocol == "cspir") {
            rep = spir_audit(make_spir(b.G(), b.F, files, classification_structure(b, l.structure)));
        } else if (protocol == "qqss") {
            rep = quantum::qq_audit_bundle(b, l.structure);
        } else if (protocol == "feass") {
            rep = quantum::ea_audit(quantum::make_feass(b.G(), b.F, l.structure), backend);
        } else if (protocol == "eass") {
            rep = quantum::ea_audit(quantum::make_eass(b, l.structure), backend);
        } else if (protocol == "modified-eass") {
            rep = quantum::ea_audit(quantum::make_modified_eass(b, l.structure), backend);
        } else if (protocol == "cqss") {
            rep = quantum::ea_audit(quantum::make_cqss(b, l.structure), backend);
        } else if (protocol == "cqspir") {
            rep = quantum::qspir_audit(quantum::make_cqspir(b, files, l.structure));
        } else if (protocol == "easpir") {
            rep = quantum::qspir_audit(quantum::make_easpir(b, files, l.structure));
        } else if (protocol == "feaspir") {
            rep = quantum::qspir_audit(quantum::make_feaspir(b.G(), b.F, files, l.structure));
        } else if (protocol == "converted-eass") {
            rep = quantum::ea_audit(quantum::convert_flow5(quantum::make_easpir(b, 1, l.structure)), backend);
        } else {
            fail(Errc::ParseError, "unknown protocol '" + protocol + "'");
        }
    } catch (const Error& e) {
        switch (e.code()) {
        case Errc::ClassMismatch:
        case Errc::NotSelfOrthogonal:
        case Errc::RankDeficient:
        case Errc::ClassInvariantViolated: {
            Json j{{"schema", io::kSchema}, {"kind", "audit"}, {"protocol", protocol}, {"secure", false}};
            j["items"] = Json::array({Json{{"name", "class invariants"}, {"ok", false}, {"detail", e.what()}}});
            return {kFailed, j};
        }
        default: throw;
        }
    }
    Json j = io::audit_to_json(rep, players_of(b));
    j["backend"] = backend_name;
    return {rep.secure() ? kOk : kFailed, j};
}

/* ---------------------------- simulate ---------------------------- */

Outcome cmd_simulate(const std::string& protocol, const std::string& bundle_path, const std::string& structure_path,
                     const std::string& message, const std::string& files_arg, int k, const std::string& subset,
                     const std::string& backend_name, uint64_t seed)
{
    Loaded l = load_bundle(bundle_path, structure_path);
    const MmspBundle& b = l.bundle;
    const FieldPtr& ctx = b.F.ctx();
    const auto backend = quantum::backend_from_name(backend_name);
    require(!subset.empty(), Errc::ParseError, "--subset is required");
    const Subset A = parse_subset(subset, b.n);
    Transcript t;
    Json extra;
    auto read_files = [&]() {
        std::vector<VecGF> fl;
        std::stringstream ss(files_arg);
        std::string part;
        while (std::getline(ss, part, ';'))
            if (!part.empty()) fl.push_back(parse_vector(ctx, part, b.x(), "each file"));
        require(!fl.empty(), Errc::ParseError, "--files is required for SPIR protocols");
        return fl;
    };
    if (protocol == "css") {
        auto p = make_css(b.G(), b.F, classification_structure(b, l.structure));
        const Subset rows = b.cls == BundleClass::Plain ? A : symplectify(A, b.n);
        t = css_transcript(p, parse_vector(ctx, message, b.x(), "--message"), rows, seed);
    } else if (protocol == "cspir") {
        auto fl = read_files();
        auto p = make_spir(b.G(), b.F, static_cast<int>(fl.size()), classification_structure(b, l.structure));
        const Subset rows = b.cls == BundleClass::Plain ? A : symplectify(A, b.n);
        t = spir_transcript(p, k, fl, rows, seed);
    } else if (protocol == "feass") {
        t = quantum::run_feass(quantum::make_feass(b.G(), b.F, l.structure), parse_vector(ctx, message, b.x(), "--message"), A, seed, backend);
    } else if (protocol == "eass") {
        t = quantum::run_eass(quantum::make_eass(b, l.structure), parse_vector(ctx, message, b.x(), "--message"), A, seed, backend);
    } else if (protocol == "modified-eass") {
        t = quantum::run_modified_eass(quantum::make_modified_eass(b, l.structure), parse_vector(ctx, message, b.x(), "--message"), A, seed);
    } else if (protocol == "cqss") {
        t = quantum::run_cqss(quantum::make_cqss(b, l.structure), parse_vector(ctx, message, b.x(), "--message"), A, seed, backend);
    } else if (protocol == "qqss") {
        auto s = quantum::make_qqss(b, l.structure);
        const int q = quantum::dense_q(ctx);
        quantum::Layout in(q, static_cast<int>(s.k()));
        std::vector<int> digits;
        for (auto v : parse_vector(ctx, message, s.k(), "--message (basis input)").to_ints()) digits.push_back(static_cast<int>(v));
        const auto idx = static_cast<Eigen::Index>(in.index(digits));
        quantum::Mat rho = quantum::Mat::Zero(static_cast<Eigen::Index>(in.dim()), static_cast<Eigen::Index>(in.dim()));
        rho(idx, idx) = 1.0;
        auto r = quantum::run_qqss(s, rho, A, seed);
        t = r.transcript;
        extra["recovered_trace_distance"] = quantum::trace_distance(r.recovered, rho) < quantum::kTolProtocol ? 0.0 : quantum::trace_distance(r.recovered, rho);
    } else if (protocol == "cqspir" || protocol == "easpir" || protocol == "feaspir") {
        auto fl = read_files();
        const int f = static_cast<int>(fl.size());
        quantum::QSpirScheme s = protocol == "cqspir"   ? quantum::make_cqspir(b, f, l.structure)
                                 : protocol == "easpir" ? quantum::make_easpir(b, f, l.structure)
                                                        : quantum::make_feaspir(b.G(), b.F, f, l.structure);
        t = quantum::run_qspir(s, fl, k, A, seed, backend);
    } else {
        fail(Errc::ParseError, "unknown protocol '" + protocol + "'");
    }
    Json j = io::transcript_to_json(t);
    j["backend"] = backend_name;
    for (auto& [key, v] : extra.items()) j[key] = v;
    return {t.success ? kOk : kFailed, j};
}

/* ---------------------------- rate ---------------------------- */

Outcome cmd_rate(const std::string& kind, int r, int t, int n, const std::string& bundle_path)
{
    const RateKind k = rate_kind_from_name(kind);
    Json j{{"schema", io::kSchema}, {"kind", "rate"}, {"protocol", kind}, {"r", r}, {"t", t}, {"n", n}};
    if (!rate_admissible(k, r, t, n)) {
        j["admissible"] = false;
        return {kFailed, j};
    }
    const Rational R = rate(k, r, t, n);
    j["rate"] = R.str();
    int code = kOk;
    if (!bundle_path.empty()) {
        const Rational real = realized_rate(k, io::bundle_from_json(io::read_file(bundle_path)));
        j["realized"] = real.str();
        j["matches"] = real == R;
        if (!(real == R)) code = kFailed;
    }
    return {code, j};
}

/* ---------------------------- crosscheck ---------------------------- */

/** Dense vs symplectic outcome distributions for every message, every
    randomness value and every nonempty player set, plus agreement of the
    dense audit, the symplectic audit, the classical audit on the
    symplectified structure and the MMSP verdict. */
Json crosscheck_bundle(const MmspBundle& b, const AccessStructure& fs, bool& ok)
{
    using namespace quantum;
    Json j;
    EaScheme s = make_ea_scheme("eass", b.G1, b.G2, b.F, fs);
    DenseEaEngine eng(s.G1);
    const FieldPtr& ctx = b.F.ctx();
    const u128 cm = count_vectors(*ctx, s.x(), kAuditBudget, "crosscheck"), cu = count_vectors(*ctx, s.G2.cols(), kAuditBudget, "crosscheck");
    uint64_t cases = 0;
    bool dist_ok = true;
    Json mismatch;
    for (u128 im = 0; im < cm && dist_ok; ++im)
        for (u128 iu = 0; iu < cu && dist_ok; ++iu) {
            VecGF x = s.F * vector_from_index(ctx, s.x(), im);
            if (s.G2.cols()) x = x + s.G2 * vector_from_index(ctx, s.G2.cols(), iu);
            for (Subset A = 1; A < (Subset(1) << b.n); ++A) {
                ++cases;
                auto dd = eng.outcome_distribution(A, {x});
                auto dt = track_distribution(symp_track(s.G1, x, A, b.n));
                if (distribution_distance(dd, dt) > kTolProtocol) {
                    dist_ok = false;
                    mismatch = Json{{"displacement", x.to_ints()}, {"subset", io::subset_to_json(A)}};
                    break;
                }
            }
        }
    Json dist{{"name", "dense and symplectic outcome distributions agree"}, {"ok", dist_ok}, {"cases", cases}};
    if (!dist_ok) dist["counterexample"] = mismatch;
    const bool mmsp = is_mmsp(s.G(), s.F, symplectify_structure(fs));
    const bool dense = ea_audit(s, Backend::Dense).secure();
    const bool sympl = ea_audit(s, Backend::Symplectic).secure();
    const bool classical = css_audit(make_css(s.G(), s.F, symplectify_structure(fs))).secure();
    const bool eq_ok = dense == mmsp && sympl == mmsp && classical == mmsp;
    Json eq{{"name", "quantum audits, classical audit and MMSP verdict agree"}, {"ok", eq_ok}};
    eq["mmsp"] = mmsp;
    eq["dense_audit"] = dense;
    eq["symplectic_audit"] = sympl;
    eq["classical_audit"] = classical;
    j["checks"] = Json::array({dist, eq});
    ok = dist_ok && eq_ok;
    j["ok"] = ok;
    return j;
}

Outcome cmd_crosscheck(const std::string& fixture, const std::string& bundle_path, const std::string& structure_path)
{
    Json rep{{"schema", io::kSchema}, {"kind", "crosscheck"}};
    std::vector<std::pair<std::string, Loaded>> targets;
    if (!bundle_path.empty()) {
        targets.push_back({bundle_path, load_bundle(bundle_path, structure_path)});
    } else {
        std::vector<Fixture> fx;
        if (fixture.empty() || fixture == "all")
            fx = {fixtures::example1(), fixtures::example2(), fixtures::example2_variant(), fixtures::example3()};
        else if (fixture == "example1")
            fx = {fixtures::example1()};
        else if (fixture == "example2")
            fx = {fixtures::example2()};
        else if (fixture == "example2-variant")
            fx = {fixtures::example2_variant()};
        else if (fixture == "example3")
            fx = {fixtures::example3()};
        else
            fail(Errc::ParseError, "unknown fixture '" + fixture + "'");
        for (auto& f : fx) targets.push_back({f.name, Loaded{f.bundle, f.structure}});
    }
    bool all = true;
    Json results = Json::array();
    for (const auto& [name, l] : targets) {
        bool ok = false;
        Json r = crosscheck_bundle(l.bundle, l.structure, ok);
        r["target"] = name;
        results.push_back(r);
        all = all && ok;
    }
    rep["results"] = results;
    rep["ok"] = all;
    return {all ? kOk : kFailed, rep};
}

/* ---------------------------- fixtures ---------------------------- */

Outcome cmd_fixtures(const std::string& name, const std::string& out_dir)
{
    std::vector<Fixture> fx{fixtures::example1(), fixtures::example2(), fixtures::example2_variant(), fixtures::example3()};
    Json rep{{"schema", io::kSchema}, {"kind", "fixtures"}};
    Json list = Json::array();
    bool found = false;
    for (const auto& f : fx) {
        if (!name.empty() && name != f.name) continue;
        found = true;
        Json bj = io::bundle_to_json(f.bundle, f.structure);
        bj["name"] = f.name;
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            const std::string path = (std::filesystem::path(out_dir) / (f.name + ".json")).string();
            std::ofstream os(path);
            require(os.good(), Errc::ParseError, "cannot write '" + path + "'");
            os << bj.dump(2) << "\n";
            list.push_back(Json{{"name", f.name}, {"written", path}});
        } else {
            list.push_back(bj);
        }
    }
    require(found, Errc::ParseError, "unknown fixture '" + name + "'");
    rep["fixtures"] = list;
    return {kOk, rep};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mmsplab: multi-target monotone span programs and linear secret sharing / SPIR protocols"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string bundle, structure, backend = "dense", message, files, subset, fixture, out, out_dir, mode = "auto", protocol;
    int k = 1, y1 = 0, degree = 0, nfiles = 2, r = 0, t = 0, n = 0;
    uint64_t seed = 1;
    std::vector<std::string> params;
    auto backend_opt = [&](CLI::App* c) {
        c->add_option("--backend", backend, "Simulation backend")->check(CLI::IsMember({"dense", "symplectic"}));
    };

    auto* verify = app.add_subcommand("verify", "Check class invariants and the MMSP conditions of a bundle");
    verify->add_option("--bundle", bundle, "Bundle JSON")->required();
    verify->add_option("--structure", structure, "Access structure JSON (players)");

    auto* construct = app.add_subcommand("construct", "Construct an MMSP bundle: <class> r t n p (qqmds: r n p)");
    construct->add_option("params", params, "class followed by its parameters")->required()->expected(-1);
    construct->add_option("--y1", y1, "Isotropic dimension y1 for the ea class");
    construct->add_option("--mode", mode, "Field selection")->check(CLI::IsMember({"auto", "tower", "generic", "search"}));
    construct->add_option("--degree", degree, "Extension degree for generic/search (css: field degree)");
    construct->add_option("--seed", seed, "First seed for generic/search");
    construct->add_option("--out", out, "Write the bundle JSON here");

    auto* simulate = app.add_subcommand("simulate", "Run one seeded protocol execution");
    simulate->add_option("--protocol", protocol, "Protocol")
        ->required()
        ->check(CLI::IsMember({"css", "cspir", "cqss", "qqss", "feass", "eass", "modified-eass", "cqspir", "feaspir", "easpir"}));
    simulate->add_option("--bundle", bundle, "Bundle JSON")->required();
    simulate->add_option("--structure", structure, "Access structure JSON (players)");
    simulate->add_option("--message", message, "Message entries, comma separated");
    simulate->add_option("--files", files, "Files for SPIR, ';' between files, ',' between entries");
    simulate->add_option("--k", k, "Requested file (1-based)");
    simulate->add_option("--subset", subset, "Decoding players, comma separated")->required();
    simulate->add_option("--seed", seed, "Sampling seed")->required();
    backend_opt(simulate);

    auto* audit = app.add_subcommand("audit", "Exhaustive correctness and secrecy audit");
    audit->add_option("protocol", protocol, "Protocol")
        ->required()
        ->check(CLI::IsMember({"css", "cspir", "cqss", "qqss", "feass", "eass", "modified-eass", "cqspir", "feaspir", "easpir",
                               "converted-eass"}));
    audit->add_option("--bundle", bundle, "Bundle JSON")->required();
    audit->add_option("--structure", structure, "Access structure JSON (players)");
    audit->add_option("--files", nfiles, "Number of files for SPIR audits");
    backend_opt(audit);

    auto* rate_cmd = app.add_subcommand("rate", "Closed-form rate: <kind> r t n");
    rate_cmd->add_option("kind", protocol, "css, cqss, qqss, eass, cqspir, easpir")->required();
    rate_cmd->add_option("r", r)->required();
    rate_cmd->add_option("t", t)->required();
    rate_cmd->add_option("n", n)->required();
    rate_cmd->add_option("--bundle", bundle, "Also compare with the realized rate of this bundle");

    auto* cross = app.add_subcommand("crosscheck", "Dense vs symplectic and classical vs quantum agreement sweeps");
    cross->add_option("--fixture", fixture, "example1, example2, example2-variant, example3 or all");
    cross->add_option("--bundle", bundle, "Bundle JSON instead of a fixture");
    cross->add_option("--structure", structure, "Access structure JSON (players)");

    auto* fx = app.add_subcommand("fixtures", "Emit the embedded worked examples");
    fx->add_option("--name", fixture, "Only this fixture");
    fx->add_option("--out-dir", out_dir, "Write one JSON file per fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        Outcome o;
        if (*verify)
            o = cmd_verify(bundle, structure);
        else if (*construct) {
            require(!params.empty(), Errc::ParseError, "missing class");
            o = cmd_construct(params[0], std::vector<std::string>(params.begin() + 1, params.end()), y1, mode, degree, seed, out);
        } else if (*simulate)
            o = cmd_simulate(protocol, bundle, structure, message, files, k, subset, backend, seed);
        else if (*audit)
            o = cmd_audit(protocol, bundle, structure, backend, nfiles);
        else if (*rate_cmd)
            o = cmd_rate(protocol, r, t, n, bundle);
        else if (*cross)
            o = cmd_crosscheck(fixture, bundle, structure);
        else
            o = cmd_fixtures(fixture, out_dir);
        emit(o, format);
        return o.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::TooLarge ? kTooLarge : kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
