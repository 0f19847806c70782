/**@file
 *****************************************************************************
 JSON serialization of fields, matrices, bundles, access structures, audit
 reports, construction reports and transcripts (schema "mmsplab/1").
 Field elements are stored by their index in the polynomial basis, so a
 bundle over GF(p^r) round-trips together with its modulus.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_JSON_IO_HPP_
#define MMSPLAB_JSON_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmsplab/access.hpp"
#include "mmsplab/classical.hpp"
#include "mmsplab/constructions.hpp"
#include "mmsplab/mmsp.hpp"

namespace mmsplab::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "mmsplab/1";

/** Runs fn and converts any JSON library exception into ParseError. */
template <class Fn>
inline auto guarded(const std::string& what, Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, what + ": " + e.what());
    }
}

inline Json parse_text(const std::string& text, const std::string& what = "input")
{
    return guarded(what, [&] { return Json::parse(text); });
}

inline Json read_file(const std::string& path)
{
    std::ifstream in(path);
    require(in.good(), Errc::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

/* ---------------------------- fields and matrices ---------------------------- */

inline Json field_to_json(const FieldPtr& ctx)
{
    Json j;
    j["p"] = ctx->p();
    j["r"] = ctx->r();
    Json mod = Json::array();
    for (auto c : ctx->modulus()) mod.push_back(c);
    j["modulus"] = mod;
    return j;
}

inline FieldPtr field_from_json(const Json& j)
{
    return guarded("field", [&] {
        const auto p = j.at("p").get<uint32_t>();
        const auto r = j.at("r").get<int>();
        if (j.contains("modulus") && r > 1) return field_build(p, r, j.at("modulus").get<nt::Poly>());
        return field_build(p, r);
    });
}

inline Json matrix_to_json(const MatGF& M)
{
    Json j;
    j["rows"] = M.rows();
    j["cols"] = M.cols();
    j["entries"] = M.to_ints();
    return j;
}

inline MatGF matrix_from_json(const FieldPtr& ctx, const Json& j)
{
    return guarded("matrix", [&] {
        const auto rows = j.at("rows").get<size_t>(), cols = j.at("cols").get<size_t>();
        const auto& e = j.at("entries");
        require(e.is_array() && e.size() == rows, Errc::ParseError, "matrix entries do not match the row count");
        MatGF M(ctx, rows, cols);
        const auto q = ctx->order();
        for (size_t i = 0; i < rows; ++i) {
            require(e[i].is_array() && e[i].size() == cols, Errc::ParseError, "matrix row " + std::to_string(i + 1) + " has the wrong length");
            for (size_t k = 0; k < cols; ++k) {
                const auto v = e[i][k].get<int64_t>();
                require(v >= 0 && (!q || static_cast<u128>(v) < *q), Errc::ParseError, "matrix entry outside the field");
                M.at(i, k) = ctx->from_index(static_cast<u128>(v));
            }
        }
        return M;
    });
}

inline Json vector_to_json(const VecGF& v) { return v.to_ints(); }

inline VecGF vector_from_json(const FieldPtr& ctx, const Json& j)
{
    return guarded("vector", [&] {
        require(j.is_array(), Errc::ParseError, "vector must be an array");
        VecGF v(ctx, j.size());
        const auto q = ctx->order();
        for (size_t i = 0; i < j.size(); ++i) {
            const auto x = j[i].get<int64_t>();
            require(x >= 0 && (!q || static_cast<u128>(x) < *q), Errc::ParseError, "vector entry outside the field");
            v[i] = ctx->from_index(static_cast<u128>(x));
        }
        return v;
    });
}

/* ---------------------------- access structures ---------------------------- */

inline Json subset_to_json(Subset s)
{
    Json a = Json::array();
    for (int p : subset_players(s)) a.push_back(p);
    return a;
}

inline Subset subset_from_json(const Json& j, int n)
{
    return guarded("subset", [&] {
        require(j.is_array(), Errc::ParseError, "subset must be an array of player indices");
        std::vector<int> players = j.get<std::vector<int>>();
        for (int p : players) require(p >= 1 && p <= n, Errc::IndexOutOfRange, "player " + std::to_string(p) + " outside [1, n]");
        return subset_from_players(players);
    });
}

/** Structures over players only; symplectified structures are derived. */
inline Json structure_to_json(const AccessStructure& fs)
{
    require(!fs.symplectified(), Errc::OutOfRange, "serialize the player structure, not its symplectification");
    Json j;
    j["n"] = fs.n;
    auto side = [](const std::optional<int>& thr, const std::vector<Subset>& list) {
        if (thr) return Json{{"threshold", *thr}};
        Json a = Json::array();
        for (auto s : list) a.push_back(subset_to_json(s));
        return a;
    };
    j["accept"] = side(fs.accept_threshold, fs.accept);
    j["reject"] = side(fs.reject_threshold, fs.reject);
    return j;
}

inline AccessStructure structure_from_json(const Json& j)
{
    return guarded("access structure", [&] {
        const int n = j.at("n").get<int>();
        const Json &acc = j.at("accept"), &rej = j.at("reject");
        if (acc.is_object() && rej.is_object()) return make_threshold(acc.at("threshold").get<int>(), rej.at("threshold").get<int>(), n);
        require(acc.is_array() && rej.is_array(), Errc::ParseError, "mixed threshold and explicit sides are not supported");
        std::vector<Subset> a, r;
        for (const auto& s : acc) a.push_back(subset_from_json(s, n));
        for (const auto& s : rej) r.push_back(subset_from_json(s, n));
        return make_explicit(n, a, r);
    });
}

/* ---------------------------- bundles ---------------------------- */

inline Json bundle_to_json(const MmspBundle& b, const std::optional<AccessStructure>& fs = std::nullopt)
{
    Json j;
    j["schema"] = kSchema;
    j["kind"] = "bundle";
    j["class"] = class_name(b.cls);
    j["field"] = field_to_json(b.F.ctx());
    j["n"] = b.n;
    j["r"] = b.r;
    j["t"] = b.t;
    j["G1"] = matrix_to_json(b.G1);
    j["G2"] = matrix_to_json(b.G2);
    j["F"] = matrix_to_json(b.F);
    if (fs) j["structure"] = structure_to_json(*fs);
    return j;
}

inline MmspBundle bundle_from_json(const Json& j)
{
    return guarded("bundle", [&] {
        if (j.contains("schema")) require(j.at("schema").get<std::string>() == kSchema, Errc::ParseError, "unsupported schema");
        MmspBundle b;
        b.cls = class_from_name(j.at("class").get<std::string>());
        auto ctx = field_from_json(j.at("field"));
        b.F = matrix_from_json(ctx, j.at("F"));
        b.G1 = j.contains("G1") ? matrix_from_json(ctx, j.at("G1")) : MatGF::empty(ctx, b.F.rows(), 0);
        b.G2 = j.contains("G2") ? matrix_from_json(ctx, j.at("G2")) : MatGF::empty(ctx, b.F.rows(), 0);
        b.n = j.value("n", b.cls == BundleClass::Plain ? static_cast<int>(b.F.rows()) : static_cast<int>(b.F.rows() / 2));
        b.r = j.value("r", 0);
        b.t = j.value("t", 0);
        return b;
    });
}

inline std::optional<AccessStructure> bundle_structure(const Json& j)
{
    if (!j.contains("structure")) return std::nullopt;
    return structure_from_json(j.at("structure"));
}

/* ---------------------------- reports ---------------------------- */

/** Players of a witness subset; symplectified witnesses are folded to [n]. */
inline Json witness_to_json(Subset s, int n_players)
{
    if (n_players > 0) s &= (Subset(1) << n_players) - 1;
    return subset_to_json(s);
}

inline Json audit_to_json(const AuditReport& rep, int n_players = 0)
{
    Json j;
    j["schema"] = kSchema;
    j["kind"] = "audit";
    j["protocol"] = rep.protocol;
    Json items = Json::array();
    for (const auto& it : rep.items) {
        Json x;
        x["name"] = it.name;
        x["ok"] = it.ok;
        if (it.has_witness) x["counterexample"] = witness_to_json(it.witness, n_players);
        if (!it.detail.empty()) x["detail"] = it.detail;
        items.push_back(x);
    }
    j["items"] = items;
    j["secure"] = rep.secure();
    j["mmsp"] = rep.mmsp;
    j["agrees_with_mmsp"] = rep.crosscheck_ok();
    j["cases"] = rep.cases;
    return j;
}

inline Json construction_to_json(const ConstructionReport& rep)
{
    Json j;
    j["what"] = rep.what;
    j["field"] = rep.field;
    j["field_mode"] = rep.field_mode;
    j["seed"] = rep.seed;
    j["attempts"] = rep.attempts;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json x;
        x["name"] = c.name;
        x["applicable"] = c.applicable;
        x["ok"] = c.ok;
        x["required"] = c.required;
        checks.push_back(x);
    }
    j["checks"] = checks;
    j["ok"] = rep.ok();
    return j;
}

inline Json transcript_to_json(const Transcript& t)
{
    Json j;
    j["schema"] = kSchema;
    j["kind"] = "transcript";
    j["protocol"] = t.protocol;
    j["seed"] = t.seed;
    Json es = Json::array();
    for (const auto& e : t.entries) es.push_back(Json{{"role", e.role}, {"label", e.label}, {"values", e.values}});
    j["entries"] = es;
    j["success"] = t.success;
    return j;
}

} // namespace mmsplab::io

#endif // MMSPLAB_JSON_IO_HPP_
