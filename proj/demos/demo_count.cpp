// Builds the doubling wall scenario from the local models and shows the
// count staying constant across the wall under the canonical weight table.

#include <iostream>

#include "mtc/scenario.hpp"

using namespace mtc;

int main() {
    DeltaMap base_left;  // type +0 on the left of the wall
    Z2Class iota0 = Z2Class::from_key("01");

    Scenario sc;
    sc.strands.push_back({"base", Rational(0), Rational(1), base_left});
    Strand child;
    child.id = "child";
    child.birth = Rational(0);
    child.death = rat(1, 2);
    child.delta0 = propagate_double(base_left, iota0);
    sc.strands.push_back(child);
    Event e;
    e.kind = Event::Kind::Doubling;
    e.t = rat(1, 2);
    e.side = EventSide::Left;
    e.base_id = "base";
    e.child_id = "child";
    e.iota0 = iota0;
    sc.events.push_back(e);
    sc.selection = {{"base", 2, 1}, {"base", 4, 1}, {"child", 1, 1}, {"child", 2, 1}};

    ScenarioEngine engine(sc);
    std::cout << "base type left of the wall:  " << type_of(engine.delta_at("base", rat(1, 4))).str() << "\n";
    std::cout << "base type right of the wall: " << type_of(engine.delta_at("base", rat(3, 4))).str() << "\n";
    std::cout << "doubled strand type:         " << type_of(child.delta0).str() << "\n\n";

    WeightTable canon = WeightTable::canonical();
    auto report = engine.check_invariance(canon);
    for (auto& iv : report.intervals)
        std::cout << "count on (" << to_string(iv.lo) << ", " << to_string(iv.hi) << ") = " << iv.count
                  << "\n";
    std::cout << "invariant: " << (report.pass ? "yes" : "no") << "\n\n";

    WeightTable solved = solve_weight_table({});
    std::cout << "ledger-solved table equals the canonical table: " << (solved == canon ? "yes" : "no")
              << "\n";
    return 0;
}
