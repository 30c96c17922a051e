#pragma once

#include "incol/errors.hpp"
#include "incol/graph.hpp"
#include "incol/mad.hpp"
#include "incol/rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <vector>

namespace incol {

/// Degree constraint on one vertex of a configuration. The value is a
/// constant or delta-relative (working_delta - offset), where the working
/// delta is fixed by the profile at max(max_degree, k_floor).
struct DegreeBound {
    enum class Kind { exact, at_most, at_least };
    Kind kind = Kind::exact;
    bool delta_relative = false;
    int value = 0;  // constant, or the offset c in (delta - c)

    int resolve(int working_delta) const { return delta_relative ? working_delta - value : value; }

    bool matches(int degree, int working_delta) const {
        int bound = resolve(working_delta);
        switch (kind) {
            case Kind::exact: return degree == bound;
            case Kind::at_most: return degree <= bound;
            case Kind::at_least: return degree >= bound;
        }
        return false;
    }

    static DegreeBound exactly(int v) { return {Kind::exact, false, v}; }
    static DegreeBound at_most(int v) { return {Kind::at_most, false, v}; }
    static DegreeBound at_most_delta_minus(int c) { return {Kind::at_most, true, c}; }

    std::string str() const {
        std::string base = delta_relative ? (value == 0 ? "D" : "D-" + std::to_string(value))
                                          : std::to_string(value);
        switch (kind) {
            case Kind::exact: return base;
            case Kind::at_most: return base + "-";
            case Kind::at_least: return base + "+";
        }
        return base;
    }
};

/// Local degree pattern whose presence lets the colorer delete a vertex or
/// an edge, color the rest, and extend. Neighbor bounds may be fewer than
/// the center degree: some |bounds| neighbors must match, injectively.
struct ConfigPattern {
    enum class Removal { vertex, edge };

    std::string name;
    DegreeBound center;
    std::vector<DegreeBound> neighbor_bounds;
    Removal removal = Removal::vertex;
    int removal_neighbor = 0;  // bound index naming the edge's far endpoint
};

struct ConfigMatch {
    int pattern_index = -1;
    std::string name;
    int center = -1;
    std::vector<int> bound_to_neighbor;  // one vertex per neighbor bound
    ConfigPattern::Removal removal = ConfigPattern::Removal::vertex;
    std::pair<int, int> removed_edge{-1, -1};  // set for edge removals
};

// --- discharging -------------------------------------------------------------

/// Transfer amount as a function of the giver's degree: (a*k+b)/(c*k+d).
struct DischargeAmount {
    long long a = 0, b = 0, c = 0, d = 1;
    Rational eval(int k) const { return Rational(a * k + b, c * k + d); }
};

struct DischargeRule {
    int giver_min = 0;
    int giver_max = INT_MAX;
    int receiver_min = 0;
    int receiver_max = INT_MAX;
    bool receiver_needs_deg3_neighbor = false;
    bool uniform_split = false;  // giver splits its current positive weight
    DischargeAmount amount;
};

/// Rules grouped into phases; every rule of a phase reads the weights as
/// they stood when the phase began.
struct DischargeProfile {
    Rational target;  // initial weight is d(v) - target
    std::vector<std::vector<DischargeRule>> phases;
};

struct DischargeReport {
    Rational target;
    std::vector<Rational> initial;
    std::vector<Rational> final_weights;
    Rational initial_sum;
    Rational final_sum;
};

// --- profile -----------------------------------------------------------------

/// Parameters of one specialized coloring algorithm: the density
/// hypothesis, the color budget (working_k + extra colors, weak cap =
/// extra colors), the reducible-configuration catalog and the discharging
/// rule table that guarantees the catalog is complete under the
/// hypothesis.
struct TheoremProfile {
    std::string id;
    Rational mad_bound;
    int k_floor = 0;
    int extra_colors = 0;       // the c in (k + c, c)
    std::string delta_window;   // the stated max-degree range, for reporting
    std::vector<ConfigPattern> catalog;
    DischargeProfile discharge;

    int working_k(const Graph& g) const { return std::max(g.max_degree(), k_floor); }
    int num_colors(const Graph& g) const { return working_k(g) + extra_colors; }
    int weak_cap() const { return extra_colors; }
};

namespace detail {

/// Can the remaining bounds be injectively assigned to distinct unused
/// neighbors? Plain augmenting-path matching; everything here has at most
/// seven rows.
inline bool bounds_matchable(const std::vector<std::vector<int>>& candidates,
                             std::vector<int>& right_owner, int from_bound) {
    const int bounds = static_cast<int>(candidates.size());
    std::vector<int> owner = right_owner;
    auto augment = [&](auto&& self, int bi, std::vector<char>& seen) -> bool {
        for (int v : candidates[static_cast<std::size_t>(bi)]) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = 1;
            if (owner[static_cast<std::size_t>(v)] < 0 ||
                self(self, owner[static_cast<std::size_t>(v)], seen)) {
                owner[static_cast<std::size_t>(v)] = bi;
                return true;
            }
        }
        return false;
    };
    std::size_t side = right_owner.size();
    for (int bi = from_bound; bi < bounds; ++bi) {
        std::vector<char> seen(side, 0);
        if (!augment(augment, bi, seen)) return false;
    }
    return true;
}

}  // namespace detail

/// Tries to bind one pattern at one center; the returned assignment is the
/// lexicographically least over the bound order.
inline std::optional<ConfigMatch> match_pattern_at(const Graph& g, const ConfigPattern& pat,
                                                   int pattern_index, int center,
                                                   int working_delta) {
    if (!pat.center.matches(g.degree(center), working_delta)) return std::nullopt;
    const auto nbrs = g.neighbors(center);
    const int bounds = static_cast<int>(pat.neighbor_bounds.size());
    if (bounds > static_cast<int>(nbrs.size())) return std::nullopt;

    // candidate neighbor slots per bound (slots index into nbrs, ascending id)
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(bounds));
    for (int bi = 0; bi < bounds; ++bi)
        for (int slot = 0; slot < static_cast<int>(nbrs.size()); ++slot)
            if (pat.neighbor_bounds[static_cast<std::size_t>(bi)].matches(
                    g.degree(nbrs[static_cast<std::size_t>(slot)]), working_delta))
                candidates[static_cast<std::size_t>(bi)].push_back(slot);

    std::vector<int> chosen(static_cast<std::size_t>(bounds), -1);
    std::vector<int> owner(nbrs.size(), -1);
    for (int bi = 0; bi < bounds; ++bi) {
        bool placed = false;
        for (int slot : candidates[static_cast<std::size_t>(bi)]) {
            if (owner[static_cast<std::size_t>(slot)] >= 0) continue;
            owner[static_cast<std::size_t>(slot)] = bi;
            if (detail::bounds_matchable(candidates, owner, bi + 1)) {
                chosen[static_cast<std::size_t>(bi)] = slot;
                placed = true;
                break;
            }
            owner[static_cast<std::size_t>(slot)] = -1;
        }
        if (!placed) return std::nullopt;
    }

    ConfigMatch m;
    m.pattern_index = pattern_index;
    m.name = pat.name;
    m.center = center;
    for (int bi = 0; bi < bounds; ++bi)
        m.bound_to_neighbor.push_back(nbrs[static_cast<std::size_t>(chosen[static_cast<std::size_t>(bi)])]);
    m.removal = pat.removal;
    if (pat.removal == ConfigPattern::Removal::edge)
        m.removed_edge = {center, m.bound_to_neighbor[static_cast<std::size_t>(pat.removal_neighbor)]};
    return m;
}

/// First match in catalog order, then smallest center id, then smallest
/// matched-neighbor ids. Delta-relative bounds are evaluated at
/// `working_delta` when positive, else at the profile's working k, which
/// dominates the actual max degree.
inline std::optional<ConfigMatch> find_configuration(const Graph& g, const TheoremProfile& profile,
                                                     int working_delta = 0) {
    const int wd = working_delta > 0 ? working_delta : profile.working_k(g);
    for (int pi = 0; pi < static_cast<int>(profile.catalog.size()); ++pi)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (auto m = match_pattern_at(g, profile.catalog[static_cast<std::size_t>(pi)], pi, v, wd))
                return m;
    return std::nullopt;
}

/// Replays the weight redistribution: initial weight d(v) - target, then
/// the phases in order. The total is conserved by construction; the report
/// carries both sums so audits can confirm it.
inline DischargeReport apply_discharge(const Graph& g, const TheoremProfile& profile) {
    const int n = g.vertex_count();
    DischargeReport rep;
    rep.target = profile.discharge.target;
    rep.initial.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rep.initial.push_back(Rational(g.degree(v)) - rep.target);
    rep.final_weights = rep.initial;
    for (const auto& w : rep.initial) rep.initial_sum += w;

    std::vector<char> has3(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (g.degree(u) == 3) has3[static_cast<std::size_t>(v)] = 1;

    for (const auto& phase : profile.discharge.phases) {
        const std::vector<Rational> snapshot = rep.final_weights;
        for (const auto& rule : phase) {
            for (int v = 0; v < n; ++v) {
                const int k = g.degree(v);
                if (k < rule.giver_min || k > rule.giver_max) continue;
                std::vector<int> receivers;
                for (int u : g.neighbors(v)) {
                    const int du = g.degree(u);
                    if (du < rule.receiver_min || du > rule.receiver_max) continue;
                    if (rule.receiver_needs_deg3_neighbor && !has3[static_cast<std::size_t>(u)])
                        continue;
                    receivers.push_back(u);
                }
                if (receivers.empty()) continue;
                Rational each;
                if (rule.uniform_split) {
                    const Rational& w = snapshot[static_cast<std::size_t>(v)];
                    if (!(w > Rational(0))) continue;
                    each = w / Rational(static_cast<long long>(receivers.size()));
                } else {
                    each = rule.amount.eval(k);
                }
                for (int u : receivers) {
                    rep.final_weights[static_cast<std::size_t>(v)] -= each;
                    rep.final_weights[static_cast<std::size_t>(u)] += each;
                }
            }
        }
    }
    for (const auto& w : rep.final_weights) rep.final_sum += w;
    return rep;
}

struct ReducibleVerdict {
    bool ok = false;
    std::optional<ConfigMatch> match;  // set when ok and the graph has edges
};

/// Under the profile's density hypothesis every graph with an edge must
/// contain a catalog configuration; a miss here would falsify the rule
/// table (or reveal a matching bug) and callers are expected to preserve
/// the graph.
inline ReducibleVerdict assert_reducible(const Graph& g, const TheoremProfile& profile) {
    auto gate = satisfies_mad_bound(g, profile.mad_bound);
    if (!gate.satisfied)
        throw HypothesisViolation("maximum average degree is not below " +
                                      profile.mad_bound.str(),
                                  gate.witness);
    if (g.edge_count() == 0) return {true, std::nullopt};
    auto m = find_configuration(g, profile);
    if (!m) return {false, std::nullopt};
    return {true, m};
}

// --- built-in profiles -------------------------------------------------------

namespace detail {

inline ConfigPattern low_vertex(int d) {
    return {std::to_string(d) + "-vertex", DegreeBound::exactly(d), {}, ConfigPattern::Removal::vertex, 0};
}

inline DischargeRule give_rule(int giver_min, int giver_max, int recv_min, int recv_max,
                               DischargeAmount amount) {
    DischargeRule r;
    r.giver_min = giver_min;
    r.giver_max = giver_max;
    r.receiver_min = recv_min;
    r.receiver_max = recv_max;
    r.amount = amount;
    return r;
}

}  // namespace detail

inline TheoremProfile profile_t1() {
    TheoremProfile p;
    p.id = "T1";
    p.mad_bound = Rational(4);
    p.k_floor = 7;
    p.extra_colors = 3;
    p.delta_window = "max_degree >= 7";
    p.catalog = {
        detail::low_vertex(1),
        detail::low_vertex(2),
        {"3-vertex adjacent to a 3-vertex", DegreeBound::exactly(3),
         {DegreeBound::exactly(3)}, ConfigPattern::Removal::edge, 0},
        {"3-vertex(D-2,D-1,D)", DegreeBound::exactly(3),
         {DegreeBound::at_most_delta_minus(2), DegreeBound::at_most_delta_minus(1),
          DegreeBound::at_most_delta_minus(0)},
         ConfigPattern::Removal::edge, 0},
        {"4-vertex(3,3,D-1,D)", DegreeBound::exactly(4),
         {DegreeBound::exactly(3), DegreeBound::exactly(3), DegreeBound::at_most_delta_minus(1),
          DegreeBound::at_most_delta_minus(0)},
         ConfigPattern::Removal::vertex, 0},
        {"4-vertex(3,4,4,4)", DegreeBound::exactly(4),
         {DegreeBound::exactly(3), DegreeBound::at_most(4), DegreeBound::at_most(4),
          DegreeBound::at_most(4)},
         ConfigPattern::Removal::vertex, 0},
    };
    p.discharge.target = Rational(4);
    DischargeRule r2 = detail::give_rule(5, INT_MAX, 4, 4, {1, -4, 1, 0});
    r2.receiver_needs_deg3_neighbor = true;
    DischargeRule r3;
    r3.giver_min = r3.giver_max = 4;
    r3.receiver_min = r3.receiver_max = 3;
    r3.uniform_split = true;
    p.discharge.phases = {{detail::give_rule(5, INT_MAX, 3, 3, {1, -4, 1, 0}), r2}, {r3}};
    return p;
}

inline TheoremProfile profile_t2() {
    TheoremProfile p;
    p.id = "T2";
    p.mad_bound = Rational(9, 2);
    p.k_floor = 9;
    p.extra_colors = 4;
    p.delta_window = "max_degree >= 9";
    p.catalog = {
        detail::low_vertex(1),
        detail::low_vertex(2),
        {"3-vertex(D-1,D,D)", DegreeBound::exactly(3),
         {DegreeBound::at_most_delta_minus(1), DegreeBound::at_most_delta_minus(0),
          DegreeBound::at_most_delta_minus(0)},
         ConfigPattern::Removal::vertex, 0},
        {"4-vertex adjacent to a 4--vertex", DegreeBound::exactly(4),
         {DegreeBound::at_most(4)}, ConfigPattern::Removal::edge, 0},
        {"4-vertex(5-,5-,5-,5-)", DegreeBound::exactly(4),
         {DegreeBound::at_most(5), DegreeBound::at_most(5), DegreeBound::at_most(5),
          DegreeBound::at_most(5)},
         ConfigPattern::Removal::vertex, 0},
    };
    p.discharge.target = Rational(9, 2);
    p.discharge.phases = {{detail::give_rule(5, INT_MAX, 1, 4, {2, -9, 2, 0})}};
    return p;
}

inline TheoremProfile profile_t3() {
    TheoremProfile p;
    p.id = "T3";
    p.mad_bound = Rational(5);
    p.k_floor = 9;
    p.extra_colors = 5;
    p.delta_window = "max_degree >= 9 or max_degree <= 5";
    p.catalog = {
        detail::low_vertex(1),
        detail::low_vertex(2),
        detail::low_vertex(3),
        {"4-vertex adjacent to a 5--vertex", DegreeBound::exactly(4),
         {DegreeBound::at_most(5)}, ConfigPattern::Removal::edge, 0},
        {"4-vertex(6,6)", DegreeBound::exactly(4),
         {DegreeBound::exactly(6), DegreeBound::exactly(6)}, ConfigPattern::Removal::vertex, 0},
    };
    p.discharge.target = Rational(5);
    p.discharge.phases = {{detail::give_rule(6, INT_MAX, 4, 4, {1, -5, 1, 0})}};
    return p;
}

inline TheoremProfile profile_t4() {
    TheoremProfile p;
    p.id = "T4";
    p.mad_bound = Rational(5);
    p.k_floor = 7;
    p.extra_colors = 6;
    p.delta_window = "6 <= max_degree <= 8";
    p.catalog = {
        detail::low_vertex(1),
        detail::low_vertex(2),
        detail::low_vertex(3),
        {"4-vertex(D-1,D,D,D)", DegreeBound::exactly(4),
         {DegreeBound::at_most_delta_minus(1), DegreeBound::at_most_delta_minus(0),
          DegreeBound::at_most_delta_minus(0), DegreeBound::at_most_delta_minus(0)},
         ConfigPattern::Removal::vertex, 0},
    };
    p.discharge.target = Rational(5);
    p.discharge.phases = {{detail::give_rule(6, INT_MAX, 4, 4, {1, -5, 1, 0})}};
    return p;
}

inline TheoremProfile profile_t5() {
    TheoremProfile p;
    p.id = "T5";
    p.mad_bound = Rational(6);
    p.k_floor = 12;
    p.extra_colors = 6;
    p.delta_window = "max_degree >= 12 or max_degree <= 6";
    p.catalog = {
        detail::low_vertex(1),
        detail::low_vertex(2),
        detail::low_vertex(3),
        {"4-vertex(D-1,D,D,D)", DegreeBound::exactly(4),
         {DegreeBound::at_most_delta_minus(1), DegreeBound::at_most_delta_minus(0),
          DegreeBound::at_most_delta_minus(0), DegreeBound::at_most_delta_minus(0)},
         ConfigPattern::Removal::vertex, 0},
        {"5-vertex(8-,8-,8-,D,D)", DegreeBound::exactly(5),
         {DegreeBound::at_most(8), DegreeBound::at_most(8), DegreeBound::at_most(8),
          DegreeBound::at_most_delta_minus(0), DegreeBound::at_most_delta_minus(0)},
         ConfigPattern::Removal::vertex, 0},
    };
    p.discharge.target = Rational(6);
    p.discharge.phases = {{detail::give_rule(7, INT_MAX, 4, 5, {1, -6, 1, 0})}};
    return p;
}

inline TheoremProfile profile_t6() {
    TheoremProfile p;
    p.id = "T6";
    p.mad_bound = Rational(6);
    p.k_floor = 8;
    p.extra_colors = 7;
    p.delta_window = "7 <= max_degree <= 11";
    p.catalog = {
        detail::low_vertex(1),
        detail::low_vertex(2),
        detail::low_vertex(3),
        detail::low_vertex(4),
        {"5-vertex adjacent to a 6--vertex", DegreeBound::exactly(5),
         {DegreeBound::at_most(6)}, ConfigPattern::Removal::edge, 0},
        {"7-vertex(5,5,5,5,5,5,D)", DegreeBound::exactly(7),
         {DegreeBound::exactly(5), DegreeBound::exactly(5), DegreeBound::exactly(5),
          DegreeBound::exactly(5), DegreeBound::exactly(5), DegreeBound::exactly(5),
          DegreeBound::at_most_delta_minus(0)},
         ConfigPattern::Removal::vertex, 0},
    };
    p.discharge.target = Rational(6);
    p.discharge.phases = {
        {detail::give_rule(7, 7, 5, 5, {0, 1, 0, 5}),
         detail::give_rule(8, INT_MAX, 5, 5, {1, -6, 1, 0})}};
    return p;
}

inline const std::vector<TheoremProfile>& builtin_profiles() {
    static const std::vector<TheoremProfile> all = {profile_t1(), profile_t2(), profile_t3(),
                                                    profile_t4(), profile_t5(), profile_t6()};
    return all;
}

inline const TheoremProfile& builtin_profile(const std::string& id) {
    for (const auto& p : builtin_profiles()) {
        std::string lower = p.id;
        for (char& ch : lower) ch = static_cast<char>(tolower(ch));
        if (p.id == id || lower == id) return p;
    }
    throw ParseError("unknown profile '" + id + "' (expected t1..t6)");
}

// --- declarative profile documents -------------------------------------------

inline nlohmann::json bound_to_json(const DegreeBound& b) {
    nlohmann::json j;
    j["kind"] = b.kind == DegreeBound::Kind::exact ? "exact"
                : b.kind == DegreeBound::Kind::at_most ? "at_most" : "at_least";
    if (b.delta_relative)
        j["delta_minus"] = b.value;
    else
        j["value"] = b.value;
    return j;
}

inline DegreeBound bound_from_json(const nlohmann::json& j) {
    DegreeBound b;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "exact") b.kind = DegreeBound::Kind::exact;
    else if (kind == "at_most") b.kind = DegreeBound::Kind::at_most;
    else if (kind == "at_least") b.kind = DegreeBound::Kind::at_least;
    else throw ParseError("bad degree bound kind '" + kind + "'");
    if (j.contains("delta_minus")) {
        b.delta_relative = true;
        b.value = j.at("delta_minus").get<int>();
    } else {
        b.value = j.at("value").get<int>();
    }
    return b;
}

inline nlohmann::json profile_to_json(const TheoremProfile& p) {
    nlohmann::json j;
    j["id"] = p.id;
    j["mad_bound"] = p.mad_bound.str();
    j["k_floor"] = p.k_floor;
    j["extra_colors"] = p.extra_colors;
    j["delta_window"] = p.delta_window;
    auto catalog = nlohmann::json::array();
    for (const auto& pat : p.catalog) {
        nlohmann::json c;
        c["name"] = pat.name;
        c["center"] = bound_to_json(pat.center);
        auto nb = nlohmann::json::array();
        for (const auto& b : pat.neighbor_bounds) nb.push_back(bound_to_json(b));
        c["neighbors"] = std::move(nb);
        c["removal"] = pat.removal == ConfigPattern::Removal::vertex ? "vertex" : "edge";
        if (pat.removal == ConfigPattern::Removal::edge) c["removal_neighbor"] = pat.removal_neighbor;
        catalog.push_back(std::move(c));
    }
    j["catalog"] = std::move(catalog);
    nlohmann::json d;
    d["target"] = p.discharge.target.str();
    auto phases = nlohmann::json::array();
    for (const auto& phase : p.discharge.phases) {
        auto rules = nlohmann::json::array();
        for (const auto& r : phase) {
            nlohmann::json rj;
            rj["giver_min"] = r.giver_min;
            if (r.giver_max != INT_MAX) rj["giver_max"] = r.giver_max;
            rj["receiver_min"] = r.receiver_min;
            rj["receiver_max"] = r.receiver_max;
            if (r.receiver_needs_deg3_neighbor) rj["receiver_needs_deg3_neighbor"] = true;
            if (r.uniform_split) {
                rj["uniform_split"] = true;
            } else {
                rj["amount"] = {{"a", r.amount.a}, {"b", r.amount.b}, {"c", r.amount.c}, {"d", r.amount.d}};
            }
            rules.push_back(std::move(rj));
        }
        phases.push_back(std::move(rules));
    }
    d["phases"] = std::move(phases);
    j["discharge"] = std::move(d);
    return j;
}

inline TheoremProfile profile_from_json(const nlohmann::json& j) {
    try {
        TheoremProfile p;
        p.id = j.at("id").get<std::string>();
        p.mad_bound = Rational::parse(j.at("mad_bound").get<std::string>());
        p.k_floor = j.at("k_floor").get<int>();
        p.extra_colors = j.at("extra_colors").get<int>();
        p.delta_window = j.value("delta_window", std::string{});
        for (const auto& c : j.at("catalog")) {
            ConfigPattern pat;
            pat.name = c.at("name").get<std::string>();
            pat.center = bound_from_json(c.at("center"));
            for (const auto& b : c.at("neighbors")) pat.neighbor_bounds.push_back(bound_from_json(b));
            std::string removal = c.at("removal").get<std::string>();
            if (removal == "vertex") pat.removal = ConfigPattern::Removal::vertex;
            else if (removal == "edge") pat.removal = ConfigPattern::Removal::edge;
            else throw ParseError("bad removal kind '" + removal + "'");
            pat.removal_neighbor = c.value("removal_neighbor", 0);
            if (pat.removal == ConfigPattern::Removal::edge &&
                (pat.removal_neighbor < 0 ||
                 pat.removal_neighbor >= static_cast<int>(pat.neighbor_bounds.size())))
                throw ParseError("removal_neighbor out of range in pattern " + pat.name);
            p.catalog.push_back(std::move(pat));
        }
        if (p.catalog.empty()) throw ParseError("profile catalog must be nonempty");
        const auto& d = j.at("discharge");
        p.discharge.target = Rational::parse(d.at("target").get<std::string>());
        for (const auto& phase : d.at("phases")) {
            std::vector<DischargeRule> rules;
            for (const auto& rj : phase) {
                DischargeRule r;
                r.giver_min = rj.at("giver_min").get<int>();
                r.giver_max = rj.value("giver_max", INT_MAX);
                r.receiver_min = rj.at("receiver_min").get<int>();
                r.receiver_max = rj.at("receiver_max").get<int>();
                r.receiver_needs_deg3_neighbor = rj.value("receiver_needs_deg3_neighbor", false);
                r.uniform_split = rj.value("uniform_split", false);
                if (!r.uniform_split) {
                    const auto& a = rj.at("amount");
                    r.amount = {a.at("a").get<long long>(), a.at("b").get<long long>(),
                                a.at("c").get<long long>(), a.at("d").get<long long>()};
                }
                rules.push_back(r);
            }
            p.discharge.phases.push_back(std::move(rules));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad profile document: ") + e.what());
    }
}

}  // namespace incol
