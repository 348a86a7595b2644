#pragma once

// Named families (weighted projective spaces with a unit weight, Hirzebruch
// surfaces, P1 x P1, projective spaces) and the classification recognizers
// used to cross-check verdicts.

#include "uniorb/orbit_engine.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace uniorb {

struct WeightedProjective {
    std::vector<BigInt> weights; // 1, d_1, ..., d_n
};
struct Hirzebruch {
    BigInt d;
};
struct P1xP1 {};
struct Projective {
    std::size_t n = 0;
};

using FamilySpec = std::variant<WeightedProjective, Hirzebruch, P1xP1, Projective>;

namespace detail {

inline std::vector<std::vector<std::size_t>> all_subsets_of_size(std::size_t total, std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    RaySet current;
    auto visit = [&](const RaySet& s) {
        out.push_back(s);
        return true;
    };
    for_each_combination(total, size, current, 0, visit);
    return out;
}

inline Fan build_weighted(const std::vector<BigInt>& weights) {
    if (weights.size() < 2)
        throw Error(ErrorKind::InvalidSpec, "a weighted projective space needs at least two weights");
    if (weights.front() != 1)
        throw Error(ErrorKind::InvalidSpec, "the first weight must be 1");
    for (const auto& w : weights)
        if (w < 1)
            throw Error(ErrorKind::InvalidSpec, "weights must be positive");
    const std::size_t n = weights.size() - 1;
    BigInt g = 0;
    for (std::size_t i = 1; i <= n; ++i)
        g = boost::multiprecision::gcd(g, weights[i]);
    if (g != 1)
        throw Error(ErrorKind::InvalidSpec, "weights after the unit weight must be relatively prime");
    std::vector<IntVec> rays;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n);
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    IntVec tau(n);
    for (std::size_t i = 0; i < n; ++i)
        tau[i] = -weights[i + 1];
    rays.push_back(std::move(tau));
    return validate_fan(n, std::move(rays), all_subsets_of_size(n + 1, n), Completeness::Required);
}

} // namespace detail

inline Fan build(const FamilySpec& spec) {
    struct Builder {
        Fan operator()(const WeightedProjective& w) const { return detail::build_weighted(w.weights); }
        Fan operator()(const Hirzebruch& h) const {
            if (h.d < 0)
                throw Error(ErrorKind::InvalidSpec, "Hirzebruch parameter must be nonnegative");
            std::vector<IntVec> rays{make_vec({1, 0}), make_vec({0, 1}), IntVec{BigInt(-1), BigInt(-h.d)},
                                     make_vec({0, -1})};
            return validate_fan(2, std::move(rays), {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, Completeness::Required);
        }
        Fan operator()(const P1xP1&) const {
            std::vector<IntVec> rays{make_vec({1, 0}), make_vec({0, 1}), make_vec({-1, 0}), make_vec({0, -1})};
            return validate_fan(2, std::move(rays), {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, Completeness::Required);
        }
        Fan operator()(const Projective& p) const {
            if (p.n < 1)
                throw Error(ErrorKind::InvalidSpec, "projective space dimension must be positive");
            return detail::build_weighted(std::vector<BigInt>(p.n + 1, BigInt(1)));
        }
    };
    return std::visit(Builder{}, spec);
}

namespace detail {

inline BigInt parse_integer(std::string_view text, std::string_view spec) {
    if (text.empty())
        throw Error(ErrorKind::InvalidSpec, "missing number in '" + std::string(spec) + "'");
    std::size_t i = text.front() == '-' ? 1 : 0;
    if (i == text.size())
        throw Error(ErrorKind::InvalidSpec, "malformed number in '" + std::string(spec) + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw Error(ErrorKind::InvalidSpec, "malformed number in '" + std::string(spec) + "'");
    return BigInt(std::string(text));
}

} // namespace detail

/// `wps:1,d1,...,dn` | `hirzebruch:d` | `p1xp1` | `pn:n`
inline FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (name == "p1xp1") {
        if (colon != std::string_view::npos)
            throw Error(ErrorKind::InvalidSpec, "p1xp1 takes no arguments");
        return P1xP1{};
    }
    if (colon == std::string_view::npos)
        throw Error(ErrorKind::InvalidSpec, "unknown family '" + std::string(text) + "'");
    if (name == "wps") {
        WeightedProjective w;
        std::size_t start = 0;
        for (;;) {
            const auto comma = args.find(',', start);
            w.weights.push_back(detail::parse_integer(args.substr(start, comma - start), text));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (w.weights.size() < 2)
            throw Error(ErrorKind::InvalidSpec, "wps needs at least two weights");
        if (w.weights.front() != 1)
            throw Error(ErrorKind::InvalidSpec, "wps weights must start with a unit weight");
        for (const auto& x : w.weights)
            if (x < 1)
                throw Error(ErrorKind::InvalidSpec, "wps weights must be positive");
        return w;
    }
    if (name == "hirzebruch") {
        BigInt d = detail::parse_integer(args, text);
        if (d < 0)
            throw Error(ErrorKind::InvalidSpec, "Hirzebruch parameter must be nonnegative");
        return Hirzebruch{d};
    }
    if (name == "pn") {
        BigInt n = detail::parse_integer(args, text);
        if (n < 1 || n > 64)
            throw Error(ErrorKind::InvalidSpec, "pn dimension must be between 1 and 64");
        return Projective{static_cast<std::size_t>(n)};
    }
    throw Error(ErrorKind::InvalidSpec, "unknown family '" + std::string(name) + "'");
}

struct RecognizerOutcome {
    std::string recognizer; // "class-group-rank-1" or "surface"
    bool predicted_finite = false;
    bool agrees = false;
    std::string detail;
};

struct CheckReport {
    std::vector<RecognizerOutcome> outcomes;

    bool agrees() const {
        return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.agrees; });
    }
};

namespace detail {

// Rank-one class group: finite iff the weights sort to 1, 1, d_2, ... with
// d_i | d_{i+1}.
inline RecognizerOutcome recognize_rank_one(const Analysis& a) {
    RecognizerOutcome out;
    out.recognizer = "class-group-rank-1";
    if (!a.bilateral || !a.classes) {
        out.predicted_finite = false;
        out.detail = "not a weighted projective space with a unit weight";
        return out;
    }
    std::vector<BigInt> weights;
    for (const auto& cls : a.classes->class_of)
        weights.push_back(cls.front());
    std::sort(weights.begin(), weights.end());
    bool chain = weights.size() >= 2 && weights[0] == 1 && weights[1] == 1;
    for (std::size_t i = 1; chain && i + 1 < weights.size(); ++i)
        chain = weights[i + 1] % weights[i] == 0;
    out.predicted_finite = chain;
    out.detail = "weights";
    for (const auto& w : weights) {
        std::ostringstream os;
        os << ' ' << w;
        out.detail += os.str();
    }
    return out;
}

// Surfaces: the negative rays, negated and in positive-basis coordinates,
// match {(1,d)}, {(1,0),(0,1)} or {(1,d),(0,1)} up to swapping coordinates.
inline RecognizerOutcome recognize_surface(const Analysis& a) {
    RecognizerOutcome out;
    out.recognizer = "surface";
    if (!a.bilateral) {
        out.predicted_finite = false;
        out.detail = "not radiant";
        return out;
    }
    std::vector<std::pair<BigInt, BigInt>> negs;
    for (std::size_t t : a.bilateral->negative) {
        IntVec c = a.bilateral->coordinates(a.fan.ray(t));
        negs.emplace_back(-c[0], -c[1]);
    }
    auto matches = [](std::vector<std::pair<BigInt, BigInt>> s) {
        std::sort(s.begin(), s.end());
        if (s.size() == 1)
            return s[0].first == 1 && s[0].second >= 1;
        if (s.size() == 2) {
            // (0,1) together with (1,d), d >= 0
            return s[0].first == 0 && s[0].second == 1 && s[1].first == 1 && s[1].second >= 0;
        }
        return false;
    };
    auto swapped = negs;
    for (auto& [x, y] : swapped)
        std::swap(x, y);
    out.predicted_finite = matches(negs) || matches(swapped);
    out.detail = out.predicted_finite ? "P(1,1,d), P1xP1 or Hirzebruch pattern" : "no surface pattern matches";
    return out;
}

} // namespace detail

/// Compares the verdict against the rank-one and surface classifications.
/// Throws NotApplicable when neither applies.
inline CheckReport cross_check(const Analysis& analysis) {
    CheckReport report;
    if (analysis.class_group.free_rank == 1)
        report.outcomes.push_back(detail::recognize_rank_one(analysis));
    if (analysis.fan.dim() == 2)
        report.outcomes.push_back(detail::recognize_surface(analysis));
    if (report.outcomes.empty())
        throw Error(ErrorKind::NotApplicable, "class group rank is not 1 and dimension is not 2");
    for (auto& o : report.outcomes)
        o.agrees = o.predicted_finite == analysis.verdict.finite();
    return report;
}

} // namespace uniorb
