#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cli.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/text.hpp"

namespace qvlab::cli {

namespace {

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Atom {
    std::string text; // BOT, TOP, INF or AM(...)
};
struct Phi {
    GroupElement g;
};
struct Sum {
    std::vector<std::pair<Integer, NodePtr>> terms;
    std::vector<GroupElement> shifts;
};
struct Node {
    std::variant<Atom, Phi, Sum> v;
};

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodePtr sum()
    {
        Sum out;
        out.terms.push_back(term());
        for (;;) {
            skip();
            if (peek('+')) {
                ++i_;
                if (!out.shifts.empty())
                    fail("'+' after a translation; parenthesise the sum");
                out.terms.push_back(term());
            } else if (peek('-')) {
                ++i_;
                out.shifts.push_back(group());
            } else {
                break;
            }
        }
        return std::make_unique<Node>(Node{std::move(out)});
    }

    bool at_compare()
    {
        skip();
        if (s_.substr(i_, 3) == "<=>") {
            i_ += 3;
            return true;
        }
        return false;
    }

    void finish()
    {
        skip();
        if (i_ != s_.size())
            fail("unexpected text");
    }

    std::optional<std::size_t> rank;

private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(std::string const& what) const
    {
        throw parse_error(what + " at position " + std::to_string(i_) + " in '" + std::string(s_) + "'");
    }
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }
    bool word(std::string_view w)
    {
        if (s_.substr(i_, w.size()) == w) {
            i_ += w.size();
            return true;
        }
        return false;
    }

    // Text up to and including the parenthesis matching the one at i_.
    std::string_view balanced()
    {
        if (!peek('('))
            fail("expected '('");
        std::size_t start = i_, depth = 0;
        for (; i_ < s_.size(); ++i_) {
            if (s_[i_] == '(')
                ++depth;
            else if (s_[i_] == ')' && --depth == 0)
                return s_.substr(start, ++i_ - start);
        }
        fail("unbalanced parentheses");
    }

    void fix_rank(std::size_t r)
    {
        if (rank && *rank != r)
            fail("operands of rank " + std::to_string(*rank) + " and " + std::to_string(r));
        rank = r;
    }

    GroupElement group()
    {
        skip();
        auto g = parse_group_element(balanced());
        fix_rank(g.rank());
        return g;
    }

    std::pair<Integer, NodePtr> term()
    {
        skip();
        Integer n = 1;
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            n = parse_integer(s_.substr(start, i_ - start));
            skip();
            if (!peek('*'))
                fail("expected '*' after multiplier");
            ++i_;
            skip();
        }
        return {n, atom()};
    }

    NodePtr atom()
    {
        skip();
        for (auto w : {"BOT", "TOP", "INF"})
            if (word(w))
                return std::make_unique<Node>(Node{Atom{w}});
        if (word("AM")) {
            std::string text = "AM" + std::string(balanced());
            fix_rank(*implied_rank(text));
            return std::make_unique<Node>(Node{Atom{text}});
        }
        if (word("PHI")) {
            auto inner = strip(balanced());
            inner = strip(inner.substr(1, inner.size() - 2));
            auto g = parse_group_element(inner.front() == '(' ? std::string(inner) : "(" + std::string(inner) + ")");
            fix_rank(g.rank());
            return std::make_unique<Node>(Node{Phi{std::move(g)}});
        }
        if (peek('(')) {
            ++i_;
            auto inner = sum();
            skip();
            if (!peek(')'))
                fail("expected ')'");
            ++i_;
            return inner;
        }
        fail("expected a cut");
    }
};

Value times(Integer const& n, Value const& v)
{
    if (n <= 0)
        throw domain_error("multiplier must be positive");
    if (v.is_infinite())
        return v;
    return scale(n, v.cut());
}

Value evaluate(Node const& node, std::size_t rank)
{
    if (auto const* a = std::get_if<Atom>(&node.v)) {
        if (a->text == "INF")
            return Value::infinity(rank);
        return parse_cut(a->text, rank);
    }
    if (auto const* p = std::get_if<Phi>(&node.v))
        return embed(p->g);
    auto const& s = std::get<Sum>(node.v);
    std::optional<Value> acc;
    for (auto const& [n, t] : s.terms) {
        auto v = times(n, evaluate(*t, rank));
        acc = acc ? *acc + v : v;
    }
    for (auto const& g : s.shifts)
        acc = translate(*acc, g);
    return *acc;
}

} // namespace

std::string eval_cut_expression(std::string_view expr, std::size_t default_rank)
{
    Parser p(expr);
    auto lhs = p.sum();
    NodePtr rhs;
    if (p.at_compare())
        rhs = p.sum();
    p.finish();
    std::size_t rank = p.rank.value_or(default_rank);
    auto a = evaluate(*lhs, rank);
    if (!rhs)
        return to_string(a);
    auto c = compare(a, evaluate(*rhs, rank));
    return c < 0 ? "<" : c > 0 ? ">" : "=";
}

} // namespace qvlab::cli
