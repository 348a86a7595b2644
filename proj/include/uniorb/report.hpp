#pragma once

// Fan file format and analysis report serialization (JSON and text).

#include "uniorb/catalog.hpp"
#include "uniorb/cox_sim.hpp"
#include "uniorb/orbit_engine.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

namespace uniorb {

using Json = nlohmann::ordered_json;

namespace detail {

// Integers beyond 2^53 - 1 in magnitude are written as decimal strings.
inline Json to_json(const BigInt& x) {
    static const BigInt limit = (BigInt(1) << 53) - 1;
    if (boost::multiprecision::abs(x) <= limit)
        return Json(x.convert_to<std::int64_t>());
    return Json(x.str());
}

inline Json to_json(const IntVec& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

inline Json to_json(const RaySet& s) {
    Json out = Json::array();
    for (std::size_t r : s)
        out.push_back(r);
    return out;
}

inline BigInt integer_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_number_unsigned())
        return BigInt(j.get<std::uint64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t i = !s.empty() && s[0] == '-' ? 1 : 0;
        bool digits = i < s.size();
        for (std::size_t k = i; k < s.size(); ++k)
            digits = digits && s[k] >= '0' && s[k] <= '9';
        if (digits)
            return BigInt(s);
    }
    throw Error(ErrorKind::InvalidInput, where + " must be an integer");
}

} // namespace detail

/// Raw fan file contents before semantic validation.
struct FanFile {
    std::size_t dim = 0;
    std::vector<IntVec> rays;
    std::vector<std::vector<std::size_t>> max_cones;
};

/// Parses `{"dim": n, "rays": [[...], ...], "max_cones": [[...], ...]}`.
inline FanFile parse_fan_file(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object())
        throw Error(ErrorKind::InvalidInput, "fan file must be a JSON object");
    for (const char* key : {"dim", "rays", "max_cones"})
        if (!j.contains(key))
            throw Error(ErrorKind::InvalidInput, std::string("missing key '") + key + "'");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "dim" && it.key() != "rays" && it.key() != "max_cones")
            throw Error(ErrorKind::InvalidInput, "unknown key '" + it.key() + "'");

    FanFile f;
    if (!j["dim"].is_number_unsigned() && !(j["dim"].is_number_integer() && j["dim"].get<std::int64_t>() >= 0))
        throw Error(ErrorKind::InvalidInput, "dim must be a nonnegative integer");
    f.dim = j["dim"].get<std::size_t>();
    if (!j["rays"].is_array())
        throw Error(ErrorKind::InvalidInput, "rays must be an array");
    for (std::size_t i = 0; i < j["rays"].size(); ++i) {
        const Json& r = j["rays"][i];
        if (!r.is_array())
            throw Error(ErrorKind::InvalidInput, "ray " + std::to_string(i) + " must be an array");
        IntVec v;
        for (const auto& x : r)
            v.push_back(detail::integer_from_json(x, "ray " + std::to_string(i) + " entry"));
        f.rays.push_back(std::move(v));
    }
    if (!j["max_cones"].is_array())
        throw Error(ErrorKind::InvalidInput, "max_cones must be an array");
    for (std::size_t c = 0; c < j["max_cones"].size(); ++c) {
        const Json& cone = j["max_cones"][c];
        if (!cone.is_array())
            throw Error(ErrorKind::InvalidInput, "cone " + std::to_string(c) + " must be an array");
        std::vector<std::size_t> idx;
        for (const auto& x : cone) {
            if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
                throw Error(ErrorKind::InvalidInput,
                            "cone " + std::to_string(c) + " entries must be nonnegative integers");
            idx.push_back(x.get<std::size_t>());
        }
        f.max_cones.push_back(std::move(idx));
    }
    return f;
}

inline Fan load_fan(const std::string& text, Completeness completeness = Completeness::Required) {
    FanFile f = parse_fan_file(text);
    return validate_fan(f.dim, std::move(f.rays), std::move(f.max_cones), completeness);
}

/// Single-line fan file in the canonical layout.
inline std::string write_fan_file(const Fan& fan) {
    std::ostringstream os;
    os << "{\"dim\": " << fan.dim() << ", \"rays\": [";
    for (std::size_t r = 0; r < fan.ray_count(); ++r) {
        os << (r ? "," : "") << detail::to_json(fan.ray(r)).dump();
    }
    os << "], \"max_cones\": [";
    for (std::size_t c = 0; c < fan.max_cones().size(); ++c)
        os << (c ? "," : "") << detail::to_json(fan.max_cones()[c].rays).dump();
    os << "]}\n";
    return os.str();
}

struct ReportOptions {
    bool orbits = false;
    bool roots = false;
    bool check = false;
    std::uint64_t seed = 1;
    std::size_t oracle_samples = 20;
};

inline const char* kind_name(RootKind k) {
    return k == RootKind::Semisimple ? "semisimple" : "unipotent";
}

inline Json report_json(const Analysis& a, const ReportOptions& opt) {
    using detail::to_json;
    Json out = Json::object();

    Json fan = Json::object();
    fan["dim"] = a.fan.dim();
    fan["rays"] = Json::array();
    for (const auto& r : a.fan.rays())
        fan["rays"].push_back(to_json(r));
    fan["max_cones"] = Json::array();
    for (const auto& c : a.fan.max_cones())
        fan["max_cones"].push_back(to_json(c.rays));
    fan["cone_count"] = a.fan.cones().size();
    fan["complete"] = true;
    fan["simplicial"] = true;
    out["fan"] = fan;

    Json cl = Json::object();
    cl["free_rank"] = a.class_group.free_rank;
    cl["torsion"] = to_json(a.class_group.torsion_invariants);
    out["class_group"] = cl;

    if (a.bilateral) {
        Json b = Json::object();
        b["positive"] = to_json(a.bilateral->positive);
        b["negative"] = to_json(a.bilateral->negative);
        b["dual_basis"] = Json::array();
        for (std::size_t i = 0; i < a.bilateral->dual_basis.rows(); ++i)
            b["dual_basis"].push_back(to_json(a.bilateral->dual_basis.row(i)));
        out["bilateral"] = b;
    } else {
        out["bilateral"] = nullptr;
    }

    if (a.classes) {
        Json c = Json::array();
        for (const auto& v : a.classes->class_of)
            c.push_back(to_json(v));
        out["classes"] = c;
    } else {
        out["classes"] = nullptr;
    }

    Json roots = Json::object();
    std::size_t ss = 0, in_u = 0;
    for (const auto& r : a.roots) {
        ss += r.kind == RootKind::Semisimple;
        in_u += r.in_u;
    }
    roots["total"] = a.roots.size();
    roots["semisimple"] = ss;
    roots["unipotent"] = a.roots.size() - ss;
    roots["in_u"] = a.unipotent ? Json(in_u) : Json(nullptr);
    if (opt.roots) {
        Json list = Json::array();
        for (const auto& r : a.roots) {
            Json item = Json::object();
            item["e"] = to_json(r.e);
            item["ray"] = r.distinguished_ray;
            item["kind"] = kind_name(r.kind);
            item["in_u"] = a.unipotent ? Json(r.in_u) : Json(nullptr);
            list.push_back(item);
        }
        roots["list"] = list;
    }
    out["roots"] = roots;

    if (a.unipotent) {
        Json v = Json::object();
        v["vector"] = to_json(a.unipotent->v);
        v["basis_coordinates"] = to_json(a.unipotent->basis_coordinates);
        v["c"] = to_json(a.unipotent->c);
        out["v"] = v;
    } else {
        out["v"] = nullptr;
    }

    Json prec = Json::array();
    if (a.precedence)
        for (const auto& [lo, hi] : a.precedence->pairs)
            prec.push_back(Json::array({lo, hi}));
    out["precedence"] = prec;

    Json verdict = Json::object();
    if (a.verdict.finite()) {
        verdict["status"] = "finite";
        verdict["count"] = a.verdict.count;
    } else {
        verdict["status"] = "infinite";
        Json witness = Json::object();
        if (a.verdict.reason == Verdict::Reason::NotRadiant) {
            verdict["reason"] = "not_radiant";
            witness["bilateral_candidates_checked"] = "all";
        } else {
            verdict["reason"] = "non_free_monoid";
            witness["cone"] = to_json(a.verdict.witness_cone->rays);
            Json irr = Json::array();
            for (const auto& g : a.verdict.witness_irreducibles)
                irr.push_back(to_json(g));
            witness["irreducibles"] = irr;
        }
        verdict["witness"] = witness;
    }
    out["verdict"] = verdict;
    out["basic_subset_count"] = a.classes ? Json(a.basic_subsets.size()) : Json(nullptr);

    if (opt.orbits && a.verdict.finite()) {
        Json orbits = Json::array();
        for (const auto& o : a.orbits) {
            Json rec = Json::object();
            rec["A"] = to_json(o.basic.rays);
            rec["hat"] = to_json(o.basic.hat);
            rec["dimension"] = o.dimension;
            rec["dimension_derived"] = true;
            Json cones = Json::array();
            for (const auto& c : o.t_orbit_cones)
                cones.push_back(to_json(c.rays));
            rec["t_orbit_cones"] = cones;
            orbits.push_back(rec);
        }
        out["orbits"] = orbits;
    }

    if (opt.check) {
        Json check = Json::object();
        try {
            CheckReport cr = cross_check(a);
            check["status"] = cr.agrees() ? "agree" : "disagree";
            Json outcomes = Json::array();
            for (const auto& o : cr.outcomes) {
                Json item = Json::object();
                item["recognizer"] = o.recognizer;
                item["predicted"] = o.predicted_finite ? "finite" : "infinite";
                item["agrees"] = o.agrees;
                item["detail"] = o.detail;
                outcomes.push_back(item);
            }
            check["recognizers"] = outcomes;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotApplicable)
                throw;
            check["status"] = "not_applicable";
            check["recognizers"] = Json::array();
        }
        out["cross_check"] = check;

        OracleReport oracle = run_oracle(a, opt.seed, opt.oracle_samples);
        Json o = Json::object();
        o["seed"] = opt.seed;
        o["checks"] = oracle.checks;
        o["failures"] = oracle.failures;
        out["oracle"] = o;
    }
    return out;
}

namespace detail {

inline std::string ray_label(const Analysis& a, std::size_t r) {
    if (a.bilateral) {
        if (auto p = a.bilateral->position(r))
            return "eps" + std::to_string(*p + 1);
        if (auto t = a.bilateral->negative_index(r))
            return "tau" + std::to_string(*t + 1);
    }
    return "r" + std::to_string(r);
}

inline std::string labels(const Analysis& a, const RaySet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + ray_label(a, s[i]);
    return out + "}";
}

} // namespace detail

inline std::string report_text(const Analysis& a, const ReportOptions& opt) {
    std::ostringstream os;
    os << "fan: dim " << a.fan.dim() << ", " << a.fan.ray_count() << " rays, " << a.fan.max_cones().size()
       << " maximal cones, " << a.fan.cones().size() << " cones\n";
    for (std::size_t r = 0; r < a.fan.ray_count(); ++r)
        os << "  ray " << r << " " << detail::ray_label(a, r) << " " << to_string(a.fan.ray(r)) << "\n";
    os << "class group: Z^" << a.class_group.free_rank;
    for (const auto& t : a.class_group.torsion_invariants)
        os << " + Z/" << t;
    os << "\n";
    if (a.bilateral) {
        os << "bilateral: positive " << detail::labels(a, a.bilateral->positive) << ", negative "
           << detail::labels(a, a.bilateral->negative) << "\n";
        for (std::size_t r = 0; r < a.fan.ray_count(); ++r)
            os << "  class " << detail::ray_label(a, r) << " = " << to_string((*a.classes)[r]) << "\n";
    } else {
        os << "bilateral: none\n";
    }
    std::size_t ss = 0, in_u = 0;
    for (const auto& r : a.roots) {
        ss += r.kind == RootKind::Semisimple;
        in_u += r.in_u;
    }
    os << "roots: " << a.roots.size() << " total, " << ss << " semisimple, " << a.roots.size() - ss
       << " unipotent";
    if (a.unipotent)
        os << ", " << in_u << " in U";
    os << "\n";
    if (opt.roots)
        for (const auto& r : a.roots)
            os << "  root " << to_string(r.e) << " at " << detail::ray_label(a, r.distinguished_ray) << " "
               << kind_name(r.kind) << (a.unipotent && r.in_u ? " in U" : "") << "\n";
    if (a.unipotent)
        os << "v: " << to_string(a.unipotent->v) << " (basis coordinates " << to_string(a.unipotent->basis_coordinates)
           << ", c = " << a.unipotent->c << ")\n";
    if (a.precedence) {
        os << "precedence:";
        if (a.precedence->pairs.empty())
            os << " none";
        for (const auto& [lo, hi] : a.precedence->pairs)
            os << " " << detail::ray_label(a, lo) << " < " << detail::ray_label(a, hi);
        os << "\n";
    }
    if (a.verdict.finite()) {
        os << "verdict: finite, " << a.verdict.count << " orbits\n";
    } else if (a.verdict.reason == Verdict::Reason::NotRadiant) {
        os << "verdict: infinite (not radiant: no bilateral basis among the rays)\n";
    } else {
        os << "verdict: infinite (monoid of cone " << detail::labels(a, a.verdict.witness_cone->rays)
           << " is not free; irreducibles";
        for (const auto& g : a.verdict.witness_irreducibles)
            os << " " << to_string(g);
        os << ")\n";
    }
    if (opt.orbits && a.verdict.finite()) {
        for (const auto& o : a.orbits) {
            os << "  orbit dim " << o.dimension << " A=" << detail::labels(a, o.basic.rays)
               << " hat=" << detail::labels(a, o.basic.hat) << " cones:";
            for (const auto& c : o.t_orbit_cones)
                os << " " << detail::labels(a, c.rays);
            os << "\n";
        }
    }
    if (opt.check) {
        try {
            CheckReport cr = cross_check(a);
            os << "cross-check: " << (cr.agrees() ? "agree" : "DISAGREE") << "\n";
            for (const auto& o : cr.outcomes)
                os << "  " << o.recognizer << ": predicts " << (o.predicted_finite ? "finite" : "infinite") << " ("
                   << o.detail << ")\n";
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotApplicable)
                throw;
            os << "cross-check: not applicable\n";
        }
        OracleReport oracle = run_oracle(a, opt.seed, opt.oracle_samples);
        os << "oracle: " << oracle.checks << " checks, " << oracle.failures.size() << " failures (seed " << opt.seed
           << ")\n";
        for (const auto& f : oracle.failures)
            os << "  " << f << "\n";
    }
    return os.str();
}

inline Json error_json(const Error& e) {
    Json out = Json::object();
    Json err = Json::object();
    err["kind"] = std::string(to_string(e.kind()));
    err["message"] = e.detail();
    out["error"] = err;
    return out;
}

} // namespace uniorb
