#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "nwd/errors.hpp"

namespace nwd {

enum class FKind { True, False, Eq, Edge, Pred, DistLE, Not, And, Or, Exists, Forall };

class FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

// Immutable FO+ syntax tree: equality, edge and unary-predicate atoms,
// distance atoms dist(x,y) <= d, boolean connectives with canonically
// sorted deduplicated children, and quantifiers.
class FormulaNode {
public:
    FKind kind;
    std::string var_a, var_b;  // atom variables; quantifiers bind var_a
    long long bound = 0;       // DistLE threshold
    std::string pred;          // unary predicate name
    std::vector<Formula> kids;

    explicit FormulaNode(FKind k) : kind(k) {}
};

namespace detail {

inline int formula_cmp(const Formula& a, const Formula& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (int c = a->var_a.compare(b->var_a)) return c;
    if (int c = a->var_b.compare(b->var_b)) return c;
    if (a->bound != b->bound) return a->bound < b->bound ? -1 : 1;
    if (int c = a->pred.compare(b->pred)) return c;
    if (a->kids.size() != b->kids.size()) return a->kids.size() < b->kids.size() ? -1 : 1;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (int c = formula_cmp(a->kids[i], b->kids[i])) return c;
    return 0;
}

}  // namespace detail

inline bool formula_equal(const Formula& a, const Formula& b) {
    return detail::formula_cmp(a, b) == 0;
}

inline Formula f_true() {
    static const Formula instance = std::make_shared<FormulaNode>(FKind::True);
    return instance;
}

inline Formula f_false() {
    static const Formula instance = std::make_shared<FormulaNode>(FKind::False);
    return instance;
}

inline Formula f_eq(std::string x, std::string y) {
    if (y < x) std::swap(x, y);
    auto n = std::make_shared<FormulaNode>(FKind::Eq);
    n->var_a = std::move(x);
    n->var_b = std::move(y);
    return n;
}

inline Formula f_edge(std::string x, std::string y) {
    if (y < x) std::swap(x, y);  // E is symmetric in coloured graphs
    auto n = std::make_shared<FormulaNode>(FKind::Edge);
    n->var_a = std::move(x);
    n->var_b = std::move(y);
    return n;
}

inline Formula f_pred(std::string name, std::string x) {
    auto n = std::make_shared<FormulaNode>(FKind::Pred);
    n->pred = std::move(name);
    n->var_a = std::move(x);
    return n;
}

inline Formula f_distle(std::string x, std::string y, long long d) {
    if (d < 0) throw InputError("negative distance threshold");
    if (y < x) std::swap(x, y);
    auto n = std::make_shared<FormulaNode>(FKind::DistLE);
    n->var_a = std::move(x);
    n->var_b = std::move(y);
    n->bound = d;
    return n;
}

inline Formula f_not(Formula f) {
    if (f->kind == FKind::Not) return f->kids[0];
    if (f->kind == FKind::True) return f_false();
    if (f->kind == FKind::False) return f_true();
    auto n = std::make_shared<FormulaNode>(FKind::Not);
    n->kids.push_back(std::move(f));
    return n;
}

namespace detail {

inline Formula make_nary(FKind kind, std::vector<Formula> kids, const Formula& empty_value) {
    std::sort(kids.begin(), kids.end(),
              [](const Formula& a, const Formula& b) { return formula_cmp(a, b) < 0; });
    kids.erase(std::unique(kids.begin(), kids.end(),
                           [](const Formula& a, const Formula& b) { return formula_cmp(a, b) == 0; }),
               kids.end());
    if (kids.empty()) return empty_value;
    if (kids.size() == 1) return kids[0];
    auto n = std::make_shared<FormulaNode>(kind);
    n->kids = std::move(kids);
    return n;
}

}  // namespace detail

inline Formula f_and(std::vector<Formula> kids) {
    return detail::make_nary(FKind::And, std::move(kids), f_true());
}

inline Formula f_or(std::vector<Formula> kids) {
    return detail::make_nary(FKind::Or, std::move(kids), f_false());
}

inline Formula f_exists(std::string x, Formula body) {
    auto n = std::make_shared<FormulaNode>(FKind::Exists);
    n->var_a = std::move(x);
    n->kids.push_back(std::move(body));
    return n;
}

inline Formula f_forall(std::string x, Formula body) {
    auto n = std::make_shared<FormulaNode>(FKind::Forall);
    n->var_a = std::move(x);
    n->kids.push_back(std::move(body));
    return n;
}

inline int quantifier_rank(const Formula& f) {
    switch (f->kind) {
        case FKind::Exists:
        case FKind::Forall:
            return 1 + quantifier_rank(f->kids[0]);
        case FKind::Not:
            return quantifier_rank(f->kids[0]);
        case FKind::And:
        case FKind::Or: {
            int m = 0;
            for (const auto& k : f->kids) m = std::max(m, quantifier_rank(k));
            return m;
        }
        default:
            return 0;
    }
}

namespace detail {

inline void free_vars_rec(const Formula& f, std::set<std::string>& bound,
                          std::set<std::string>& out) {
    switch (f->kind) {
        case FKind::True:
        case FKind::False:
            return;
        case FKind::Eq:
        case FKind::Edge:
        case FKind::DistLE:
            if (!bound.count(f->var_a)) out.insert(f->var_a);
            if (!bound.count(f->var_b)) out.insert(f->var_b);
            return;
        case FKind::Pred:
            if (!bound.count(f->var_a)) out.insert(f->var_a);
            return;
        case FKind::Not:
        case FKind::And:
        case FKind::Or:
            for (const auto& k : f->kids) free_vars_rec(k, bound, out);
            return;
        case FKind::Exists:
        case FKind::Forall: {
            bool added = bound.insert(f->var_a).second;
            free_vars_rec(f->kids[0], bound, out);
            if (added) bound.erase(f->var_a);
            return;
        }
    }
}

}  // namespace detail

inline std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> bound, out;
    detail::free_vars_rec(f, bound, out);
    return out;
}

// prefix S-expression serialization; canonical because the tree is
inline std::string serialize_formula(const Formula& f) {
    switch (f->kind) {
        case FKind::True:
            return "true";
        case FKind::False:
            return "false";
        case FKind::Eq:
            return "(= " + f->var_a + " " + f->var_b + ")";
        case FKind::Edge:
            return "(E " + f->var_a + " " + f->var_b + ")";
        case FKind::Pred:
            return "(" + f->pred + " " + f->var_a + ")";
        case FKind::DistLE:
            return "(distle " + f->var_a + " " + f->var_b + " " + std::to_string(f->bound) + ")";
        case FKind::Not:
            return "(not " + serialize_formula(f->kids[0]) + ")";
        case FKind::And:
        case FKind::Or: {
            std::string out = f->kind == FKind::And ? "(and" : "(or";
            for (const auto& k : f->kids) out += " " + serialize_formula(k);
            return out + ")";
        }
        case FKind::Exists:
            return "(exists " + f->var_a + " " + serialize_formula(f->kids[0]) + ")";
        case FKind::Forall:
            return "(forall " + f->var_a + " " + serialize_formula(f->kids[0]) + ")";
    }
    throw InputError("unreachable formula kind");
}

namespace detail {

struct Tokenizer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;

    explicit Tokenizer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) {
            if (text[pos] == '\n') ++line;
            ++pos;
        }
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    std::string next() {
        skip_ws();
        if (pos >= text.size()) throw ParseError(line, "unexpected end of formula");
        char c = text[pos];
        if (c == '(' || c == ')') {
            ++pos;
            return std::string(1, c);
        }
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '(' && text[pos] != ')' && text[pos] != ' ' &&
               text[pos] != '\t' && text[pos] != '\n' && text[pos] != '\r')
            ++pos;
        return text.substr(start, pos - start);
    }

    std::string expect_symbol() {
        auto t = next();
        if (t == "(" || t == ")") throw ParseError(line, "expected symbol, got '" + t + "'");
        return t;
    }

    void expect(const std::string& tok) {
        auto t = next();
        if (t != tok) throw ParseError(line, "expected '" + tok + "', got '" + t + "'");
    }
};

inline Formula parse_rec(Tokenizer& tk) {
    auto t = tk.next();
    if (t == "true") return f_true();
    if (t == "false") return f_false();
    if (t != "(") throw ParseError(tk.line, "expected '(' or constant, got '" + t + "'");
    auto head = tk.expect_symbol();
    if (head == "=") {
        auto x = tk.expect_symbol();
        auto y = tk.expect_symbol();
        tk.expect(")");
        return f_eq(x, y);
    }
    if (head == "E") {
        auto x = tk.expect_symbol();
        auto y = tk.expect_symbol();
        tk.expect(")");
        return f_edge(x, y);
    }
    if (head == "distle") {
        auto x = tk.expect_symbol();
        auto y = tk.expect_symbol();
        auto d = tk.expect_symbol();
        tk.expect(")");
        try {
            std::size_t used = 0;
            long long v = std::stoll(d, &used);
            if (used != d.size()) throw std::invalid_argument(d);
            return f_distle(x, y, v);
        } catch (const std::exception&) {
            throw ParseError(tk.line, "bad distance threshold '" + d + "'");
        }
    }
    if (head == "not") {
        auto body = parse_rec(tk);
        tk.expect(")");
        return f_not(body);
    }
    if (head == "and" || head == "or") {
        std::vector<Formula> kids;
        for (;;) {
            tk.skip_ws();
            if (tk.pos < tk.text.size() && tk.text[tk.pos] == ')') {
                ++tk.pos;
                break;
            }
            kids.push_back(parse_rec(tk));
        }
        return head == "and" ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    if (head == "exists" || head == "forall") {
        auto x = tk.expect_symbol();
        auto body = parse_rec(tk);
        tk.expect(")");
        return head == "exists" ? f_exists(x, body) : f_forall(x, body);
    }
    // anything else is a unary predicate name
    auto x = tk.expect_symbol();
    tk.expect(")");
    return f_pred(head, x);
}

}  // namespace detail

inline Formula parse_formula(const std::string& text) {
    detail::Tokenizer tk(text);
    auto f = detail::parse_rec(tk);
    if (!tk.eof()) throw ParseError(tk.line, "trailing input after formula");
    return f;
}

}  // namespace nwd
