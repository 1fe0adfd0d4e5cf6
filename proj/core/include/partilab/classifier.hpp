#pragma once

#include "partilab/embedding.hpp"
#include "partilab/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partilab {

// Verdict of a forbidden-subgraph recognizer. A negative verdict always
// carries the violated pattern and a checked embedding of it.
struct ClassReport {
    std::string label;
    bool verdict = false;
    std::optional<std::pair<std::string, Embedding>> witness;
};

ClassReport is_partitionable_cograph(const Graph& g); // H1..H17
ClassReport is_bi_threshold_cc(const Graph& g);       // B1..B6, connected cographs
ClassReport is_monopolar_cc(const Graph& g);          // J1..J4, connected cographs
ClassReport is_mns_cc(const Graph& g);                // R1..R8, connected cographs
ClassReport is_12_cograph_fbs(const Graph& g);        // I1..I3
ClassReport is_21_cograph_fbs(const Graph& g);        // complements of I1..I3

struct LemmaWitness {
    std::string target; // which guaranteed subgraph was found
    Embedding embedding;
};

// Executable form of the structure lemmas: checks the premise, then returns
// an embedding of one of the lemma's target graphs.
//   1: contains P3 and K3            -> F1, F2 or F3
//   2: cograph with P3 and 2K2       -> Q1 or Q2
//   3: C4-free cograph with P3, 2K2, K3 -> S1..S4
//   4: cograph with P3 and 2K3       -> W1..W4
LemmaWitness lemma_witness(const Graph& g, int lemma);

} // namespace partilab
