// Timing probe for the vertex enumeration kernel at increasing sizes.
#include "pdp/exactgeom.hpp"
#include "pdp/polytopes.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace pdp;

int main(int argc, char** argv) {
    const int which = argc > 1 ? std::atoi(argv[1]) : 0;
    auto run = [&](const char* name, const Scenario& s) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto v = vertices_from_hrep(ns_hrep(s));
        const auto t1 = std::chrono::steady_clock::now();
        std::cout << name << ": " << v.points.size() << " vertices in "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << " ms\n";
    };
    if (which == 0 || which == 1) run("CHSH (2,2;2)", Scenario::uniform(2, 2, 2));
    if (which == 0 || which == 2)
        run("(2,3;2)", Scenario({"A", "B"}, {{"x1", "x2"}, {"y1", "y2", "y3"}},
                                {{{"0", "1"}, {"0", "1"}},
                                 {{"0", "1"}, {"0", "1"}, {"0", "1"}}}));
    if (which == 0 || which == 3) run("tripartite (2,2,2;2)", Scenario::uniform(3, 2, 2));
    return 0;
}
