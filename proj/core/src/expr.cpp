#include "partilab/expr.hpp"

#include "partilab/errors.hpp"

#include <cctype>
#include <string>

namespace partilab {

namespace {

    class Parser {
    public:
        explicit Parser(const std::string& text)
            : text_(text)
        {
        }

        ExprAst run()
        {
            ExprAst ast = expr();
            skip_ws();
            if (pos_ != text_.size())
                fail("trailing input");
            return ast;
        }

    private:
        [[noreturn]] void fail(const std::string& msg) const
        {
            throw error(errc::parse_error,
                "parse error at position " + std::to_string(pos_) + ": " + msg);
        }

        void skip_ws()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }

        bool eat(char c)
        {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == c) {
                ++pos_;
                return true;
            }
            return false;
        }

        int integer()
        {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start)
                fail("expected integer");
            return std::stoi(text_.substr(start, pos_ - start));
        }

        ExprAst expr()
        {
            ExprAst node;
            node.kind = ExprAst::Kind::cunion;
            node.children.push_back(term());
            while (eat('+'))
                node.children.push_back(term());
            if (node.children.size() == 1)
                return std::move(node.children.front());
            return node;
        }

        ExprAst term()
        {
            ExprAst node;
            node.kind = ExprAst::Kind::join;
            node.children.push_back(factor());
            while (eat('*'))
                node.children.push_back(factor());
            if (node.children.size() == 1)
                return std::move(node.children.front());
            return node;
        }

        ExprAst factor()
        {
            skip_ws();
            if (pos_ >= text_.size())
                fail("expected factor");
            if (text_[pos_] == '(') {
                ++pos_;
                ExprAst inner = expr();
                if (!eat(')'))
                    fail("expected ')'");
                return inner;
            }
            int count = 1;
            if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                count = integer();
                if (count == 0)
                    throw error(errc::zero_count, "zero copies");
            }
            return atom(count);
        }

        ExprAst atom(int count)
        {
            skip_ws();
            if (pos_ >= text_.size())
                fail("expected atom");
            const char c = text_[pos_];
            ExprAst::Primitive prim;
            if (c == 'K')
                prim = ExprAst::Primitive::complete;
            else if (c == 'P')
                prim = ExprAst::Primitive::path;
            else if (c == 'C')
                prim = ExprAst::Primitive::cycle;
            else
                fail(std::string("expected K, P, C or '(' but got '") + c + "'");
            ++pos_;
            const int order = integer();
            if (order == 0)
                throw error(errc::zero_count, "zero-order primitive");
            if (prim == ExprAst::Primitive::cycle && order < 3)
                fail("cycle needs at least 3 vertices");
            ExprAst node;
            node.kind = ExprAst::Kind::leaf;
            node.primitive = prim;
            node.order = order;
            node.count = count;
            return node;
        }

        const std::string& text_;
        std::size_t pos_ = 0;
    };

    Graph primitive_graph(ExprAst::Primitive prim, int order)
    {
        std::vector<Edge> edges;
        switch (prim) {
        case ExprAst::Primitive::complete:
            for (int u = 0; u < order; ++u)
                for (int v = u + 1; v < order; ++v)
                    edges.emplace_back(u, v);
            break;
        case ExprAst::Primitive::path:
            for (int u = 0; u + 1 < order; ++u)
                edges.emplace_back(u, u + 1);
            break;
        case ExprAst::Primitive::cycle:
            for (int u = 0; u + 1 < order; ++u)
                edges.emplace_back(u, u + 1);
            edges.emplace_back(0, order - 1);
            break;
        }
        return Graph(order, std::move(edges));
    }

} // namespace

ExprAst parse_expr(const std::string& text)
{
    return Parser(text).run();
}

Graph eval_expr(const ExprAst& ast)
{
    switch (ast.kind) {
    case ExprAst::Kind::leaf: {
        Graph one = primitive_graph(ast.primitive, ast.order);
        Graph out = one;
        for (int i = 1; i < ast.count; ++i)
            out = disjoint_union(out, one);
        return out;
    }
    case ExprAst::Kind::cunion: {
        Graph out = eval_expr(ast.children.front());
        for (std::size_t i = 1; i < ast.children.size(); ++i)
            out = disjoint_union(out, eval_expr(ast.children[i]));
        return out;
    }
    case ExprAst::Kind::join: {
        Graph out = eval_expr(ast.children.front());
        for (std::size_t i = 1; i < ast.children.size(); ++i)
            out = join(out, eval_expr(ast.children[i]));
        return out;
    }
    }
    throw error(errc::precondition, "malformed ast");
}

Graph eval_expr(const std::string& text)
{
    return eval_expr(parse_expr(text));
}

} // namespace partilab
