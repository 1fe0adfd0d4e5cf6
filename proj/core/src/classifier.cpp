#include "partilab/classifier.hpp"

#include "partilab/catalog.hpp"
#include "partilab/cotree.hpp"
#include "partilab/errors.hpp"

#include <algorithm>

namespace partilab {

namespace {

    struct NamedPattern {
        std::string name;
        Graph graph;
    };

    // patterns tried smallest-first so negative witnesses stay small
    std::vector<NamedPattern> sorted_patterns(std::vector<NamedPattern> patterns)
    {
        std::stable_sort(patterns.begin(), patterns.end(),
            [](const NamedPattern& a, const NamedPattern& b) {
                return a.graph.vertex_count() < b.graph.vertex_count();
            });
        return patterns;
    }

    ClassReport scan(const Graph& g, std::string label, const std::vector<NamedPattern>& patterns)
    {
        ClassReport report;
        report.label = std::move(label);
        for (const auto& p : patterns) {
            if (auto emb = contains_induced(g, p.graph)) {
                report.verdict = false;
                report.witness = {p.name, *emb};
                return report;
            }
        }
        report.verdict = true;
        return report;
    }

    void require_cograph(const Graph& g)
    {
        if (!is_cograph(g))
            throw error(errc::not_a_cograph, "recognizer needs a cograph");
    }

    void require_connected(const Graph& g)
    {
        if (!is_connected(g))
            throw error(errc::not_connected, "recognizer needs a connected graph");
    }

    template <typename Builder>
    std::vector<NamedPattern> family(char tag, int count, Builder build)
    {
        std::vector<NamedPattern> out;
        for (int i = 1; i <= count; ++i)
            out.push_back({std::string(1, tag) + std::to_string(i), build(i)});
        return out;
    }

} // namespace

ClassReport is_partitionable_cograph(const Graph& g)
{
    require_cograph(g);
    static const auto patterns = sorted_patterns(family('H', 17, catalog::family_h));
    return scan(g, "partitionable-cograph", patterns);
}

ClassReport is_bi_threshold_cc(const Graph& g)
{
    require_cograph(g);
    require_connected(g);
    static const auto patterns = sorted_patterns(family('B', 6, catalog::family_b));
    return scan(g, "bi-threshold", patterns);
}

ClassReport is_monopolar_cc(const Graph& g)
{
    require_cograph(g);
    require_connected(g);
    static const auto patterns = sorted_patterns(family('J', 4, catalog::family_j));
    return scan(g, "monopolar", patterns);
}

ClassReport is_mns_cc(const Graph& g)
{
    require_cograph(g);
    require_connected(g);
    static const auto patterns = sorted_patterns(family('R', 8, catalog::family_r));
    return scan(g, "monopolar-nearly-split", patterns);
}

ClassReport is_12_cograph_fbs(const Graph& g)
{
    require_cograph(g);
    static const auto patterns = sorted_patterns(family('I', 3, catalog::family_i));
    return scan(g, "one-clique-two-stable", patterns);
}

ClassReport is_21_cograph_fbs(const Graph& g)
{
    require_cograph(g);
    static const auto patterns = sorted_patterns(family('I', 3, catalog::family_i_complement));
    ClassReport report = scan(g, "two-clique-one-stable", patterns);
    if (report.witness)
        report.witness->first += "c";
    return report;
}

namespace {

    bool has(const Graph& g, const Graph& pattern)
    {
        return contains_induced(g, pattern).has_value();
    }

    LemmaWitness first_of(const Graph& g, const std::vector<NamedPattern>& targets)
    {
        for (const auto& t : targets)
            if (auto emb = contains_induced(g, t.graph))
                return {t.name, *emb};
        throw error(errc::precondition, "lemma target missing despite met premise");
    }

} // namespace

LemmaWitness lemma_witness(const Graph& g, int lemma)
{
    const Graph p3 = catalog::path(3);
    const Graph k3 = catalog::complete(3);
    const Graph two_k2 = disjoint_union(catalog::complete(2), catalog::complete(2));
    const Graph two_k3 = disjoint_union(k3, k3);
    const Graph c4 = catalog::cycle(4);

    switch (lemma) {
    case 1: {
        if (!has(g, p3) || !has(g, k3))
            throw error(errc::premise_not_met, "needs P3 and K3");
        return first_of(g,
            {{"F2", catalog::family_f(2)}, {"F3", catalog::family_f(3)},
                {"F1", catalog::family_f(1)}});
    }
    case 2: {
        if (!is_cograph(g) || !has(g, p3) || !has(g, two_k2))
            throw error(errc::premise_not_met, "needs a cograph with P3 and 2K2");
        return first_of(g, {{"Q1", catalog::family_q(1)}, {"Q2", catalog::family_q(2)}});
    }
    case 3: {
        if (!is_cograph(g) || has(g, c4) || !has(g, p3) || !has(g, two_k2) || !has(g, k3))
            throw error(errc::premise_not_met, "needs a C4-free cograph with P3, 2K2 and K3");
        return first_of(g,
            {{"S2", catalog::family_s(2)}, {"S1", catalog::family_s(1)},
                {"S3", catalog::family_s(3)}, {"S4", catalog::family_s(4)}});
    }
    case 4: {
        if (!is_cograph(g) || !has(g, p3) || !has(g, two_k3))
            throw error(errc::premise_not_met, "needs a cograph with P3 and 2K3");
        return first_of(g,
            {{"W4", catalog::family_w(4)}, {"W2", catalog::family_w(2)},
                {"W3", catalog::family_w(3)}, {"W1", catalog::family_w(1)}});
    }
    default:
        throw error(errc::precondition, "lemma must be 1..4");
    }
}

} // namespace partilab
