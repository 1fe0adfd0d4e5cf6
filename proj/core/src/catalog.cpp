#include "partilab/catalog.hpp"

#include "partilab/errors.hpp"
#include "partilab/expr.hpp"

#include <algorithm>

namespace partilab {
namespace catalog {

    Graph complete(int n)
    {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }

    Graph empty(int n)
    {
        return Graph(n, {});
    }

    Graph path(int n)
    {
        std::vector<Edge> edges;
        for (int u = 0; u + 1 < n; ++u)
            edges.emplace_back(u, u + 1);
        return Graph(n, std::move(edges));
    }

    Graph cycle(int n)
    {
        if (n < 3)
            throw error(errc::precondition, "cycle needs at least 3 vertices");
        std::vector<Edge> edges;
        for (int u = 0; u + 1 < n; ++u)
            edges.emplace_back(u, u + 1);
        edges.emplace_back(0, n - 1);
        return Graph(n, std::move(edges));
    }

    Graph wheel(int k)
    {
        if (k < 4)
            throw error(errc::precondition, "wheel needs at least 4 vertices");
        return join(cycle(k - 1), complete(1));
    }

    Graph bull()
    {
        // triangle 0,1,2 with horns 3 at 0 and 4 at 1
        return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    }

    Graph diamond()
    {
        return join(complete(2), empty(2));
    }

    Graph paw()
    {
        return join(complete(1), disjoint_union(complete(1), complete(2)));
    }

    Graph butterfly()
    {
        return join(complete(1), disjoint_union(complete(2), complete(2)));
    }

    Gadget octahedron()
    {
        // parts {0,1}, {2,3}, {4,5}
        Graph g = join(join(empty(2), empty(2)), empty(2));
        return {std::move(g), {0, 2}};
    }

    Gadget p62_component()
    {
        // path order x=0, a=1, b=2, c=3, d=4, y=5
        Graph g = make_graph(6,
            {{0, 5}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 5}, {3, 4}, {2, 4}, {4, 5}});
        return {std::move(g), {0, 5}};
    }

    Gadget two_wheel()
    {
        // left: hub 0, rim 1..5; right: hub 6, rim 7..11
        std::vector<Edge> edges;
        auto add_wheel = [&](int hub, int rim0) {
            for (int i = 0; i < 5; ++i) {
                edges.emplace_back(hub, rim0 + i);
                edges.emplace_back(rim0 + i, rim0 + (i + 1) % 5);
            }
        };
        add_wheel(0, 1);
        add_wheel(6, 7);
        edges.emplace_back(2, 11); // left rim 2 -- right rim 5
        edges.emplace_back(5, 8);  // left rim 5 -- right rim 2
        return {Graph(12, std::move(edges)), {5, 8}};
    }

    Gadget sun_component()
    {
        // inner triangle 0,1,2; outer 3,4,5; endpoints 6,7
        std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, // inner triangle
            {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0},
            {6, 3}, {6, 4}, {6, 5}, {7, 3}, {7, 4}, {7, 5}, {6, 7}};
        return {Graph(8, std::move(edges)), {6, 7}};
    }

    Gadget bullfree_component()
    {
        // x=0, y=1, pendant triangles {0,2,3} and {1,4,5}, triangle 6,7,8
        std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5},
            {6, 7}, {6, 8}, {7, 8}};
        for (int z = 2; z <= 5; ++z)
            for (int v = 6; v <= 8; ++v)
                edges.emplace_back(z, v);
        return {Graph(9, std::move(edges)), {0, 1}};
    }

    Skeleton strong_triangle_skeleton()
    {
        // triangle a=0,b=1,c=2; apex d=3; endpoints x=4, y=5
        Skeleton sk;
        sk.n = 6;
        sk.plain = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 5}};
        sk.dashed = {{0, 3}, {1, 3}, {2, 3}, {4, 5}};
        sk.endpoints = {4, 5};
        return sk;
    }

    Skeleton strong_square_skeleton()
    {
        // 4-cycle a=0 - x=2 - y=3 - b=1 - a, all dashed
        Skeleton sk;
        sk.n = 4;
        sk.plain = {};
        sk.dashed = {{0, 2}, {2, 3}, {1, 3}, {0, 1}};
        sk.endpoints = {2, 3};
        return sk;
    }

    Skeleton literal_gadget_skeleton()
    {
        // inner triangle i=0,1,2; middles m=3,4,5; endpoints e=6,7,8
        Skeleton sk;
        sk.n = 9;
        sk.plain = {{0, 1}, {0, 2}, {1, 2}};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b)
                    sk.plain.emplace_back(3 + a, b); // middle of one spoke to inner of another
        sk.dashed = {{0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 8}};
        sk.endpoints = {6, 7, 8};
        return sk;
    }

    Skeleton propagator_gadget_skeleton()
    {
        // endpoints u=0, v=1, w=2; partners u'=3, v'=4, w'=5
        Skeleton sk;
        sk.n = 6;
        sk.plain = {{3, 1}, {3, 4}, {3, 2}, {3, 5}, {4, 2}, {5, 1}};
        sk.dashed = {{0, 3}, {1, 4}, {2, 5}};
        sk.endpoints = {0, 1, 2};
        return sk;
    }

    Graph family_f(int i)
    {
        switch (i) {
        case 1: return disjoint_union(path(3), complete(3));
        case 2: return diamond();
        case 3: return paw();
        }
        throw error(errc::unknown_name, "F" + std::to_string(i));
    }

    Graph family_q(int i)
    {
        switch (i) {
        case 1: return disjoint_union(path(3), complete(2));
        case 2: return butterfly();
        }
        throw error(errc::unknown_name, "Q" + std::to_string(i));
    }

    Graph family_s(int i)
    {
        switch (i) {
        case 1: return family_f(1);
        case 2: return family_q(2);
        case 3: return disjoint_union(complete(2), paw());
        case 4: return disjoint_union(complete(2), diamond());
        }
        throw error(errc::unknown_name, "S" + std::to_string(i));
    }

    Graph family_w(int i)
    {
        const Graph two_k3 = disjoint_union(complete(3), complete(3));
        switch (i) {
        case 1: return disjoint_union(two_k3, path(3));
        case 2: return disjoint_union(complete(3), diamond());
        case 3: return disjoint_union(complete(3), paw());
        case 4: return join(complete(1), two_k3);
        }
        throw error(errc::unknown_name, "W" + std::to_string(i));
    }

    Graph family_b(int i)
    {
        switch (i) {
        case 1: return butterfly();
        case 2: return join(cycle(4), complete(1));
        case 3: return join(empty(2), disjoint_union(complete(2), complete(1)));
        case 4: return disjoint_union(complete(2), diamond());
        case 5: return disjoint_union(complete(3), path(3));
        case 6: return disjoint_union(complete(2), paw());
        }
        throw error(errc::unknown_name, "B" + std::to_string(i));
    }

    Graph family_j(int i)
    {
        switch (i) {
        case 1: return wheel(5);
        case 2: return join(complete(1), disjoint_union(path(3), complete(2)));
        case 3: return join(complete(2), disjoint_union(complete(2), complete(2)));
        case 4: {
            const Graph k2k1 = disjoint_union(complete(2), complete(1));
            return join(k2k1, k2k1);
        }
        }
        throw error(errc::unknown_name, "J" + std::to_string(i));
    }

    Graph family_i(int i)
    {
        switch (i) {
        case 1: return complement(disjoint_union(disjoint_union(complete(2), complete(2)), complete(2)));
        case 2: return join(disjoint_union(complete(2), complete(2)), empty(2));
        case 3: return disjoint_union(complete(3), complete(3));
        }
        throw error(errc::unknown_name, "I" + std::to_string(i));
    }

    Graph family_i_complement(int i)
    {
        return complement(family_i(i));
    }

    Graph family_r(int i)
    {
        switch (i) {
        case 1: return join(join(empty(2), empty(2)), empty(2));
        case 2:
            return join(disjoint_union(complete(2), complete(2)),
                disjoint_union(complete(2), complete(1)));
        case 3: return join(empty(2), disjoint_union(path(3), complete(2)));
        case 4:
            return join(complete(1),
                join(empty(2), disjoint_union(complete(2), complete(2))));
        case 5: return join(complete(2), disjoint_union(complete(3), complete(3)));
        case 6:
            return join(complete(1),
                disjoint_union(path(3), disjoint_union(complete(3), complete(3))));
        case 7:
            return join(complete(1),
                disjoint_union(complete(3), join(path(3), complete(1))));
        case 8:
            return join(complete(1), disjoint_union(complete(3), paw()));
        }
        throw error(errc::unknown_name, "R" + std::to_string(i));
    }

    Graph family_h(int i)
    {
        const auto k = [](int n) { return complete(n); };
        const auto e = [](int n) { return empty(n); };
        const auto u = [](const Graph& a, const Graph& b) { return disjoint_union(a, b); };
        const auto j = [](const Graph& a, const Graph& b) { return join(a, b); };
        switch (i) {
        case 1: return j(j(j(e(2), e(2)), e(2)), k(1));
        case 2: return j(j(path(3), k(1)), u(k(2), k(2)));
        case 3: return j(j(e(2), u(k(2), k(1))), u(k(2), k(1)));
        case 4: return j(path(3), u(k(2), path(3)));
        case 5: return j(j(u(k(2), k(1)), k(1)), u(k(2), k(2)));
        case 6: return j(u(k(2), k(1)), u(k(3), path(3)));
        case 7: return j(u(k(2), k(1)), u(k(2), j(path(3), k(1))));
        case 8: return j(u(k(2), k(1)), u(k(2), j(k(1), u(k(2), k(1)))));
        case 9: return j(k(1), u(k(3), j(cycle(4), k(1))));
        case 10: return j(k(1), u(k(3), j(k(1), u(path(3), k(2)))));
        case 11: return j(k(1), u(k(3), j(k(2), u(k(2), k(2)))));
        case 12: return j(k(1), u(k(3), family_j(4)));
        case 13: return j(k(2), u(path(3), u(k(3), k(3))));
        case 14: return j(k(2), u(k(3), j(path(3), k(1))));
        case 15: return j(k(2), u(k(3), j(k(1), u(k(1), k(2)))));
        case 16: return j(u(k(3), k(2)), u(k(3), k(1)));
        case 17: return j(k(3), u(k(3), k(3)));
        }
        throw error(errc::unknown_name, "H" + std::to_string(i));
    }

    namespace {

        bool parse_family(const std::string& name, char& tag, int& index)
        {
            if (name.size() < 2)
                return false;
            tag = name[0];
            std::size_t pos = 1;
            std::size_t digits = 0;
            int value = 0;
            while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) {
                value = value * 10 + (name[pos] - '0');
                ++pos;
                ++digits;
            }
            if (digits == 0 || pos != name.size())
                return false;
            index = value;
            return true;
        }

    } // namespace

    Graph named(const std::string& name)
    {
        if (name == "bull")
            return bull();
        if (name == "diamond")
            return diamond();
        if (name == "paw")
            return paw();
        if (name == "butterfly")
            return butterfly();
        if (name == "octahedron")
            return octahedron().graph;
        if (name == "p62" || name == "p62_component")
            return p62_component().graph;
        if (name == "two_wheel" || name == "two-wheel")
            return two_wheel().graph;
        if (name == "sun" || name == "sun_component")
            return sun_component().graph;
        if (name == "bullfree" || name == "bullfree_component")
            return bullfree_component().graph;
        if (name == "literal_gadget_skeleton") {
            Skeleton sk = literal_gadget_skeleton();
            std::vector<Edge> edges = sk.plain;
            edges.insert(edges.end(), sk.dashed.begin(), sk.dashed.end());
            return Graph(sk.n, std::move(edges));
        }
        if (name == "propagator_gadget_skeleton") {
            Skeleton sk = propagator_gadget_skeleton();
            std::vector<Edge> edges = sk.plain;
            edges.insert(edges.end(), sk.dashed.begin(), sk.dashed.end());
            return Graph(sk.n, std::move(edges));
        }
        if (name.size() > 5 && name.substr(0, 5) == "wheel")
            return wheel(std::stoi(name.substr(5)));
        if (name.size() >= 3 && name.back() == 'c') {
            char tag;
            int index;
            if (parse_family(name.substr(0, name.size() - 1), tag, index) && tag == 'I'
                && index >= 1 && index <= 3)
                return family_i_complement(index);
        }
        char tag;
        int index;
        if (parse_family(name, tag, index)) {
            switch (tag) {
            case 'F':
                if (index >= 1 && index <= 3)
                    return family_f(index);
                break;
            case 'Q':
                if (index >= 1 && index <= 2)
                    return family_q(index);
                break;
            case 'S':
                if (index >= 1 && index <= 4)
                    return family_s(index);
                break;
            case 'W':
                if (index >= 1 && index <= 4)
                    return family_w(index);
                break;
            case 'B':
                if (index >= 1 && index <= 6)
                    return family_b(index);
                break;
            case 'J':
                if (index >= 1 && index <= 4)
                    return family_j(index);
                break;
            case 'I':
                if (index >= 1 && index <= 3)
                    return family_i(index);
                break;
            case 'R':
                if (index >= 1 && index <= 8)
                    return family_r(index);
                break;
            case 'H':
                if (index >= 1 && index <= 17)
                    return family_h(index);
                break;
            default:
                break;
            }
        }
        try {
            return eval_expr(name);
        } catch (const error&) {
            throw error(errc::unknown_name, "unknown graph name '" + name + "'");
        }
    }

    std::vector<int> named_endpoints(const std::string& name)
    {
        if (name == "octahedron")
            return octahedron().endpoints;
        if (name == "p62" || name == "p62_component")
            return p62_component().endpoints;
        if (name == "two_wheel" || name == "two-wheel")
            return two_wheel().endpoints;
        if (name == "sun" || name == "sun_component")
            return sun_component().endpoints;
        if (name == "bullfree" || name == "bullfree_component")
            return bullfree_component().endpoints;
        if (name == "literal_gadget_skeleton")
            return literal_gadget_skeleton().endpoints;
        if (name == "propagator_gadget_skeleton")
            return propagator_gadget_skeleton().endpoints;
        return {};
    }

    std::vector<std::string> all_names()
    {
        std::vector<std::string> names = {"bull", "diamond", "paw", "butterfly", "octahedron",
            "p62_component", "two_wheel", "sun_component", "bullfree_component",
            "literal_gadget_skeleton", "propagator_gadget_skeleton"};
        const auto add = [&](char tag, int hi) {
            for (int i = 1; i <= hi; ++i)
                names.push_back(std::string(1, tag) + std::to_string(i));
        };
        add('F', 3);
        add('Q', 2);
        add('S', 4);
        add('W', 4);
        add('B', 6);
        add('J', 4);
        add('I', 3);
        for (int i = 1; i <= 3; ++i)
            names.push_back("I" + std::to_string(i) + "c");
        add('R', 8);
        add('H', 17);
        return names;
    }

} // namespace catalog
} // namespace partilab
