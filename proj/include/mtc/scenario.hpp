#pragma once

// One-parameter moduli scenarios: strands of tori with piecewise-constant
// sign maps, birth-death and doubling events, selections closed under the
// event rules, and the count-invariance checker.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rng.hpp"
#include "torus.hpp"

namespace mtc {

inline const std::vector<int>& degree_universe() {
    static const std::vector<int> u = {1, 2, 4, 8, 16};
    return u;
}

struct Strand {
    std::string id;
    Rational birth;   // 0 or an event time
    Rational death;   // 1 or an event time
    DeltaMap delta0;  // sign map at birth
};

enum class EventSide { Left, Right };

struct Event {
    enum class Kind { BirthDeath, Doubling };
    Kind kind = Kind::BirthDeath;
    Rational t;
    EventSide side = EventSide::Right;  // which side of t the pair / child lives on
    // birth-death
    std::string plus_id, minus_id;
    // doubling
    std::string base_id, child_id;
    Z2Class iota0;
};

struct SelectionEntry {
    std::string strand;
    int degree = 1;
    long long multiplicity = 1;
};

struct Scenario {
    std::vector<Strand> strands;            // ids unique
    std::vector<Event> events;              // ordered by t after validation
    std::vector<SelectionEntry> selection;  // closed under the event rules

    const Strand& strand(const std::string& id) const {
        for (auto& s : strands)
            if (s.id == id) return s;
        throw std::invalid_argument("scenario: unknown strand '" + id + "'");
    }
    bool has_strand(const std::string& id) const {
        for (auto& s : strands)
            if (s.id == id) return true;
        return false;
    }

    long long selected_multiplicity(const std::string& id, int degree) const {
        for (auto& e : selection)
            if (e.strand == id && e.degree == degree) return e.multiplicity;
        return 0;
    }
};

// piecewise-constant sign map of one strand; breakpoints at doubling events
// where the strand is the base
struct DeltaTimeline {
    std::vector<std::pair<Rational, DeltaMap>> pieces;  // (from_time, value), sorted

    const DeltaMap& at(const Rational& t) const {
        const DeltaMap* current = &pieces.front().second;
        for (auto& [from, value] : pieces) {
            if (from <= t) current = &value;
            else break;
        }
        return *current;
    }
};

class ScenarioEngine {
  public:
    explicit ScenarioEngine(Scenario s) : scenario_(std::move(s)) {
        std::sort(scenario_.events.begin(), scenario_.events.end(),
                  [](const Event& a, const Event& b) { return a.t < b.t; });
        validate();
        build_timelines();
        validate_local_models();
    }

    const Scenario& scenario() const { return scenario_; }

    bool is_event_time(const Rational& t) const {
        for (auto& e : scenario_.events)
            if (e.t == t) return true;
        return false;
    }

    bool alive(const Strand& s, const Rational& t) const { return s.birth < t && t < s.death; }

    DeltaMap delta_at(const std::string& id, const Rational& t) const {
        return timelines_.at(id).at(t);
    }

    long long evaluate_count(const Rational& t, const WeightTable& table) const {
        if (t < 0 || t > 1) throw std::invalid_argument("evaluate_count: parameter outside [0,1]");
        if (is_event_time(t))
            throw std::invalid_argument("evaluate_count: evaluation at an event time is undefined");
        long long total = 0;
        for (auto& e : scenario_.selection) {
            const Strand& s = scenario_.strand(e.strand);
            if (!alive(s, t)) continue;
            TorusType type = type_of(delta_at(e.strand, t));
            total += e.multiplicity * table.weight(type, e.degree);
        }
        return total;
    }

    struct Interval {
        Rational lo, hi;
        long long count = 0;
    };
    struct InvarianceReport {
        std::vector<Interval> intervals;
        bool pass = false;
        std::optional<Rational> first_violation;  // event time of the first count change
        long long imbalance = 0;                  // count(after) - count(before) there
    };

    InvarianceReport check_invariance(const WeightTable& table) const {
        std::vector<Rational> cuts = {Rational(0)};
        for (auto& e : scenario_.events) cuts.push_back(e.t);
        cuts.push_back(Rational(1));
        InvarianceReport report;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            Interval iv;
            iv.lo = cuts[i];
            iv.hi = cuts[i + 1];
            iv.count = evaluate_count((iv.lo + iv.hi) / 2, table);
            report.intervals.push_back(iv);
        }
        report.pass = true;
        for (std::size_t i = 0; i + 1 < report.intervals.size(); ++i) {
            if (report.intervals[i].count != report.intervals[i + 1].count) {
                report.pass = false;
                report.first_violation = report.intervals[i].hi;
                report.imbalance = report.intervals[i + 1].count - report.intervals[i].count;
                break;
            }
        }
        return report;
    }

  private:
    void validate() const {
        std::set<std::string> ids;
        for (auto& s : scenario_.strands) {
            if (!ids.insert(s.id).second)
                throw std::invalid_argument("scenario: duplicate strand id '" + s.id + "'");
            if (!(Rational(0) <= s.birth && s.birth < s.death && s.death <= Rational(1)))
                throw std::invalid_argument("scenario: strand '" + s.id + "' has an empty lifetime");
        }
        std::set<Rational> times;
        for (auto& e : scenario_.events) {
            if (!(Rational(0) < e.t && e.t < Rational(1)))
                throw std::invalid_argument("scenario: event times must be interior");
            if (!times.insert(e.t).second)
                throw std::invalid_argument("scenario: event times must be distinct");
            if (e.kind == Event::Kind::BirthDeath) {
                const Strand& p = scenario_.strand(e.plus_id);
                const Strand& m = scenario_.strand(e.minus_id);
                if (e.side == EventSide::Right) {
                    if (p.birth != e.t || m.birth != e.t)
                        throw std::invalid_argument("scenario: birth-death pair must be born at the event");
                } else {
                    if (p.death != e.t || m.death != e.t)
                        throw std::invalid_argument("scenario: birth-death pair must die at the event");
                }
            } else {
                const Strand& base = scenario_.strand(e.base_id);
                const Strand& child = scenario_.strand(e.child_id);
                if (e.iota0.is_trivial())
                    throw std::invalid_argument("scenario: doubling class iota0 must be nonzero");
                if (!(base.birth < e.t && e.t < base.death))
                    throw std::invalid_argument("scenario: doubling base must live across the event");
                if (e.side == EventSide::Right) {
                    if (child.birth != e.t)
                        throw std::invalid_argument("scenario: doubling child must be born at the event");
                } else {
                    if (child.death != e.t)
                        throw std::invalid_argument("scenario: doubling child must die at the event");
                }
            }
        }
        // strand endpoints either touch the boundary or an event of theirs
        for (auto& s : scenario_.strands) {
            auto endpoint_ok = [&](const Rational& t, bool at_birth) {
                if (at_birth && t == 0) return true;
                if (!at_birth && t == 1) return true;
                for (auto& e : scenario_.events) {
                    if (e.t != t) continue;
                    if (e.kind == Event::Kind::BirthDeath &&
                        (e.plus_id == s.id || e.minus_id == s.id))
                        return at_birth ? e.side == EventSide::Right : e.side == EventSide::Left;
                    if (e.kind == Event::Kind::Doubling && e.child_id == s.id)
                        return at_birth ? e.side == EventSide::Right : e.side == EventSide::Left;
                }
                return false;
            };
            if (!endpoint_ok(s.birth, true))
                throw std::invalid_argument("scenario: strand '" + s.id + "' is born away from any event");
            if (!endpoint_ok(s.death, false))
                throw std::invalid_argument("scenario: strand '" + s.id + "' dies away from any event");
        }
        validate_selection();
    }

    void validate_selection() const {
        const auto& universe = degree_universe();
        std::set<std::pair<std::string, int>> seen;
        for (auto& e : scenario_.selection) {
            if (std::find(universe.begin(), universe.end(), e.degree) == universe.end())
                throw std::invalid_argument("scenario: selected degree outside the degree universe");
            if (e.multiplicity < 1)
                throw std::invalid_argument("scenario: multiplicities must be >= 1");
            if (!scenario_.has_strand(e.strand))
                throw std::invalid_argument("scenario: selection references unknown strand");
            if (!seen.insert({e.strand, e.degree}).second)
                throw std::invalid_argument("scenario: duplicate selection entry");
        }
        for (auto& e : scenario_.events) {
            if (e.kind == Event::Kind::BirthDeath) {
                for (int d : universe)
                    if (scenario_.selected_multiplicity(e.plus_id, d) !=
                        scenario_.selected_multiplicity(e.minus_id, d))
                        throw std::invalid_argument(
                            "scenario: selection is not closed (birth-death pair selected differently)");
            } else {
                for (int d : universe) {
                    long long base2d = 0;
                    if (std::find(universe.begin(), universe.end(), 2 * d) != universe.end())
                        base2d = scenario_.selected_multiplicity(e.base_id, 2 * d);
                    if (scenario_.selected_multiplicity(e.child_id, d) != base2d)
                        throw std::invalid_argument(
                            "scenario: selection is not closed (doubling child at d must match base at 2d)");
                }
            }
        }
    }

    void build_timelines() {
        timelines_.clear();
        for (auto& s : scenario_.strands)
            timelines_[s.id].pieces = {{s.birth, s.delta0}};
        // events are sorted; each doubling flips delta(iota0) of its base
        for (auto& e : scenario_.events) {
            if (e.kind != Event::Kind::Doubling) continue;
            auto& tl = timelines_[e.base_id];
            DeltaMap next = tl.pieces.back().second;
            next.flip(e.iota0);
            tl.pieces.emplace_back(e.t, next);
        }
    }

    // birth-death sign constraints and the doubling propagation rule
    void validate_local_models() const {
        for (auto& e : scenario_.events) {
            if (e.kind == Event::Kind::BirthDeath) {
                Rational probe = e.side == EventSide::Right ? nearest_after(e.t) : nearest_before(e.t);
                DeltaMap dp = delta_at(e.plus_id, probe);
                DeltaMap dm = delta_at(e.minus_id, probe);
                if (dp.at(Z2Class::trivial()) != +1 || dm.at(Z2Class::trivial()) != -1)
                    throw std::invalid_argument(
                        "scenario: birth-death pair must carry opposite determinant signs");
                for (int i = 1; i < 4; ++i)
                    if (dp.at(Z2Class(i)) != dm.at(Z2Class(i)))
                        throw std::invalid_argument(
                            "scenario: birth-death pair must agree on nontrivial classes");
            } else {
                Rational probe = e.side == EventSide::Right ? nearest_after(e.t) : nearest_before(e.t);
                DeltaMap base = delta_at(e.base_id, probe);
                DeltaMap child = delta_at(e.child_id, probe);
                if (child != propagate_double(base, e.iota0))
                    throw std::invalid_argument(
                        "scenario: doubling child sign map does not follow the local model");
            }
        }
    }

    // a parameter value strictly between t and the next/previous breakpoint
    Rational nearest_after(const Rational& t) const {
        Rational next = 1;
        for (auto& e : scenario_.events)
            if (e.t > t) {
                next = e.t;
                break;
            }
        return (t + next) / 2;
    }
    Rational nearest_before(const Rational& t) const {
        Rational prev = 0;
        for (auto& e : scenario_.events)
            if (e.t < t) prev = e.t;
        return (prev + t) / 2;
    }

    Scenario scenario_;
    std::map<std::string, DeltaTimeline> timelines_;
};

// Seeded legal-scenario builder: both event kinds, both sides, random sign
// configurations, selections generated closed. Used by the randomized
// invariance suite.
inline Scenario random_scenario(std::uint64_t seed, int max_events = 10, int max_strands = 8) {
    Rng rng(seed);
    Scenario sc;

    auto random_delta = [&](int forced_trivial_sign) {
        DeltaMap d;
        for (int i = 0; i < 4; ++i) d.set(Z2Class(i), rng.coin() ? +1 : -1);
        if (forced_trivial_sign != 0) d.set(Z2Class::trivial(), forced_trivial_sign);
        return d;
    };

    int roots = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < roots; ++i)
        sc.strands.push_back({"s" + std::to_string(i), Rational(0), Rational(1), random_delta(0)});

    // distinct interior times from a fixed grid
    std::vector<int> grid;
    for (int i = 1; i < 64; ++i) grid.push_back(i);
    rng.shuffle(grid);

    int events = static_cast<int>(rng.range(0, max_events));
    int next_id = roots;
    // strands whose sign map near a later event is not pinned down yet at
    // generation time; they never serve as doubling bases
    std::set<std::string> no_base;
    for (int e = 0; e < events; ++e) {
        if (static_cast<int>(sc.strands.size()) >= max_strands) break;
        Rational t(grid[static_cast<std::size_t>(e)], 64);
        bool doubling = rng.coin();
        EventSide side = rng.coin() ? EventSide::Left : EventSide::Right;
        if (doubling) {
            std::vector<std::size_t> alive;
            for (std::size_t i = 0; i < sc.strands.size(); ++i)
                if (sc.strands[i].birth < t && t < sc.strands[i].death &&
                    !no_base.count(sc.strands[i].id))
                    alive.push_back(i);
            if (alive.empty()) continue;
            std::size_t base = alive[static_cast<std::size_t>(rng.below(alive.size()))];
            Event ev;
            ev.kind = Event::Kind::Doubling;
            ev.t = t;
            ev.side = side;
            ev.base_id = sc.strands[base].id;
            ev.child_id = "s" + std::to_string(next_id++);
            ev.iota0 = Z2Class(static_cast<int>(rng.range(1, 3)));
            Strand child;
            child.id = ev.child_id;
            child.birth = side == EventSide::Right ? t : Rational(0);
            child.death = side == EventSide::Right ? Rational(1) : t;
            if (side == EventSide::Left) no_base.insert(child.id);
            sc.strands.push_back(child);
            sc.events.push_back(ev);
        } else {
            if (static_cast<int>(sc.strands.size()) + 2 > max_strands) continue;
            Event ev;
            ev.kind = Event::Kind::BirthDeath;
            ev.t = t;
            ev.side = side;
            ev.plus_id = "s" + std::to_string(next_id++);
            ev.minus_id = "s" + std::to_string(next_id++);
            DeltaMap shared = random_delta(+1);
            DeltaMap minus = shared;
            minus.set(Z2Class::trivial(), -1);
            Rational birth = side == EventSide::Right ? t : Rational(0);
            Rational death = side == EventSide::Right ? Rational(1) : t;
            no_base.insert(ev.plus_id);
            no_base.insert(ev.minus_id);
            sc.strands.push_back({ev.plus_id, birth, death, shared});
            sc.strands.push_back({ev.minus_id, birth, death, minus});
            sc.events.push_back(ev);
        }
    }

    // child sign maps follow the local model; events are time-sorted here
    std::sort(sc.events.begin(), sc.events.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
    {
        std::map<std::string, DeltaTimeline> tls;
        for (auto& s : sc.strands)
            if (s.birth == 0) tls[s.id].pieces = {{s.birth, s.delta0}};
        // process events left to right, fixing child delta0 on the fly
        for (auto& e : sc.events) {
            if (e.kind == Event::Kind::BirthDeath) {
                for (auto& s : sc.strands)
                    if (s.id == e.plus_id || s.id == e.minus_id)
                        tls[s.id].pieces = {{s.birth, s.delta0}};
                continue;
            }
            auto& base_tl = tls[e.base_id];
            DeltaMap before = base_tl.pieces.back().second;
            DeltaMap after = before;
            after.flip(e.iota0);
            base_tl.pieces.emplace_back(e.t, after);
            DeltaMap source = e.side == EventSide::Left ? before : after;
            for (auto& s : sc.strands)
                if (s.id == e.child_id) {
                    s.delta0 = propagate_double(source, e.iota0);
                    tls[s.id].pieces = {{s.birth, s.delta0}};
                }
        }
    }

    // selection: free choices on non-child strands, closure forced downward
    std::map<std::string, std::map<int, long long>> chosen;
    std::set<std::string> children;
    for (auto& e : sc.events)
        if (e.kind == Event::Kind::Doubling) children.insert(e.child_id);
    std::map<std::string, std::string> bd_partner;
    for (auto& e : sc.events)
        if (e.kind == Event::Kind::BirthDeath) bd_partner[e.minus_id] = e.plus_id;

    for (auto& s : sc.strands) {
        if (children.count(s.id)) continue;
        if (bd_partner.count(s.id)) continue;  // minus strand copies its partner
        for (int d : degree_universe())
            if (rng.below(3) == 0) chosen[s.id][d] = rng.range(1, 3);
    }
    for (auto& [minus, plus] : bd_partner) chosen[minus] = chosen[plus];
    // propagate closure along doubling chains (events sorted by time; a chain
    // child may itself be a base later, so iterate until stable)
    for (int pass = 0; pass < 8; ++pass)
        for (auto& e : sc.events) {
            if (e.kind != Event::Kind::Doubling) continue;
            std::map<int, long long> forced;
            for (int d : degree_universe()) {
                auto it = chosen.find(e.base_id);
                long long m = 0;
                if (it != chosen.end() && it->second.count(2 * d)) m = it->second.at(2 * d);
                if (m > 0) forced[d] = m;
            }
            chosen[e.child_id] = forced;
        }
    for (auto& [id, degs] : chosen)
        for (auto& [d, m] : degs) sc.selection.push_back({id, d, m});
    return sc;
}

}  // namespace mtc
