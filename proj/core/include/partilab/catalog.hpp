#pragma once

#include "partilab/graph.hpp"

#include <string>
#include <vector>

namespace partilab {
namespace catalog {

    Graph complete(int n);
    Graph empty(int n);
    Graph path(int n);
    Graph cycle(int n);
    Graph wheel(int k); // C_{k-1} plus a hub adjacent to the whole cycle

    Graph bull();
    Graph diamond();
    Graph paw();
    Graph butterfly();

    // Two-terminal gadget: a graph plus its designated endpoint vertices.
    struct Gadget {
        Graph graph;
        std::vector<int> endpoints;
    };

    Gadget octahedron();          // K_{2,2,2}; endpoints adjacent, distinct parts
    Gadget p62_component();       // square of P6 plus the end-to-end edge
    Gadget two_wheel();           // two 6-wheels tied by two rim edges
    Gadget sun_component();       // 3-sun plus an adjacent pair joined to the outer vertices
    Gadget bullfree_component();

    // Skeletons expanded by the reduction machinery: plain edges stay, dashed
    // edges are later replaced by negator copies.
    struct Skeleton {
        int n = 0;
        std::vector<Edge> plain;
        std::vector<Edge> dashed;
        std::vector<int> endpoints;
    };

    Skeleton strong_triangle_skeleton(); // dashed edges take a blue negator
    Skeleton strong_square_skeleton();   // dashed edges take a red negator
    Skeleton literal_gadget_skeleton();  // dashed edges take a strong negator
    Skeleton propagator_gadget_skeleton();

    Graph family_f(int i); // F1..F3
    Graph family_q(int i); // Q1..Q2
    Graph family_s(int i); // S1..S4
    Graph family_w(int i); // W1..W4
    Graph family_b(int i); // B1..B6
    Graph family_j(int i); // J1..J4
    Graph family_i(int i); // I1..I3
    Graph family_i_complement(int i);
    Graph family_r(int i); // R1..R8
    Graph family_h(int i); // H1..H17

    // Resolves fixed names ("octahedron", "H9", "B3", "I2c", "bull", ...) and
    // falls back to the expression grammar for anything else ("3K2", "P6").
    Graph named(const std::string& name);

    // Endpoints for the two-terminal gadget names, empty otherwise.
    std::vector<int> named_endpoints(const std::string& name);

    std::vector<std::string> all_names();

} // namespace catalog
} // namespace partilab
