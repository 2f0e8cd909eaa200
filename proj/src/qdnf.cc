#include <ochrom/qdnf.hh>
#include <ochrom/errors.hh>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ochrom
{
    auto QdnfFormula::position(int id) const -> std::size_t
    {
        for (std::size_t i = 0 ; i < prefix.size() ; ++i)
            if (prefix[i].id == id)
                return i;
        throw ArgumentError("variable x" + std::to_string(id) + " is not quantified");
    }

    auto QdnfFormula::count(Quantifier q) const -> std::size_t
    {
        return std::count_if(prefix.begin(), prefix.end(), [&] (auto & v) { return v.quantifier == q; });
    }

    auto QdnfFormula::validate() const -> void
    {
        for (std::size_t i = 1 ; i < prefix.size() ; ++i)
            if (prefix[i].id <= prefix[i - 1].id)
                throw ConstructionError("variables must be quantified in strictly increasing index order");
        std::set<int> ids;
        for (auto & v : prefix)
            ids.insert(v.id);
        for (auto & c : clauses)
            for (auto & l : c)
                if (! ids.count(l.variable))
                    throw ConstructionError("variable x" + std::to_string(l.variable) + " is not quantified");
    }

    namespace
    {
        class Lexer
        {
            public:
                explicit Lexer(std::string_view text) : _text(text) { }

                struct Token
                {
                    enum Kind { forall, exists, variable, colon, lparen, rparen, conj, disj, neg, end } kind;
                    int value = 0;
                    std::size_t line = 1, column = 1;
                };

                auto next() -> Token
                {
                    skip();
                    Token t;
                    t.line = _line;
                    t.column = _column;
                    if (_pos >= _text.size()) {
                        t.kind = Token::end;
                        return t;
                    }
                    char c = _text[_pos];
                    auto single = [&] (Token::Kind k) { advance(); t.kind = k; return t; };
                    switch (c) {
                        case ':': return single(Token::colon);
                        case '(': return single(Token::lparen);
                        case ')': return single(Token::rparen);
                        case '&': return single(Token::conj);
                        case '|': return single(Token::disj);
                        case '~': return single(Token::neg);
                        case 'A': return single(Token::forall);
                        case 'E': return single(Token::exists);
                        case 'x': {
                            advance();
                            std::size_t start = _pos;
                            while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
                                advance();
                            if (start == _pos)
                                throw ParseError("expected digits after 'x'", t.line, t.column);
                            if (_pos - start > 9)
                                throw ParseError("variable index too large", t.line, t.column);
                            t.kind = Token::variable;
                            t.value = std::stoi(std::string(_text.substr(start, _pos - start)));
                            return t;
                        }
                        default:
                            throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
                    }
                }

            private:
                std::string_view _text;
                std::size_t _pos = 0, _line = 1, _column = 1;

                auto advance() -> void
                {
                    if (_text[_pos] == '\n') {
                        ++_line;
                        _column = 1;
                    }
                    else
                        ++_column;
                    ++_pos;
                }

                auto skip() -> void
                {
                    while (_pos < _text.size()) {
                        char c = _text[_pos];
                        if (c == '#')
                            while (_pos < _text.size() && _text[_pos] != '\n')
                                advance();
                        else if (std::isspace(static_cast<unsigned char>(c)))
                            advance();
                        else
                            break;
                    }
                }
        };
    }

    auto parse_qdnf(std::string_view text) -> QdnfFormula
    {
        using Token = Lexer::Token;
        Lexer lexer(text);
        QdnfFormula f;
        std::set<int> quantified;

        auto t = lexer.next();
        while (t.kind == Token::forall || t.kind == Token::exists) {
            auto q = t.kind == Token::forall ? Quantifier::forall : Quantifier::exists;
            auto v = lexer.next();
            if (v.kind != Token::variable)
                throw ParseError("expected a variable after quantifier", v.line, v.column);
            if (quantified.count(v.value))
                throw ParseError("variable x" + std::to_string(v.value) + " is quantified twice", v.line, v.column);
            if (! f.prefix.empty() && v.value < f.prefix.back().id)
                throw ParseError("variables must be quantified in increasing index order", v.line, v.column);
            quantified.insert(v.value);
            f.prefix.push_back(QuantifiedVariable{v.value, q});
            t = lexer.next();
        }
        if (t.kind != Token::colon)
            throw ParseError("expected ':' after the quantifier prefix", t.line, t.column);

        t = lexer.next();
        if (t.kind == Token::end)
            return f;

        while (true) {
            if (t.kind != Token::lparen)
                throw ParseError("expected '(' to open a clause", t.line, t.column);
            auto open = t;
            std::vector<Literal> literals;
            while (true) {
                t = lexer.next();
                bool positive = true;
                if (t.kind == Token::neg) {
                    positive = false;
                    t = lexer.next();
                }
                if (t.kind != Token::variable)
                    throw ParseError("expected a literal", t.line, t.column);
                if (! quantified.count(t.value))
                    throw ParseError("variable x" + std::to_string(t.value) + " is not quantified", t.line, t.column);
                literals.push_back(Literal{t.value, positive});
                t = lexer.next();
                if (t.kind == Token::rparen)
                    break;
                if (t.kind != Token::conj)
                    throw ParseError("expected '&' or ')'", t.line, t.column);
            }
            if (literals.size() != 3)
                throw ParseError("clause has " + std::to_string(literals.size()) + " literals, expected exactly 3",
                        open.line, open.column);
            f.clauses.push_back(Clause{literals[0], literals[1], literals[2]});

            t = lexer.next();
            if (t.kind == Token::end)
                break;
            if (t.kind != Token::disj)
                throw ParseError("expected '|' between clauses", t.line, t.column);
            t = lexer.next();
        }
        return f;
    }

    auto format_qdnf(const QdnfFormula & f) -> std::string
    {
        std::ostringstream out;
        for (auto & v : f.prefix)
            out << (v.quantifier == Quantifier::forall ? "A" : "E") << " x" << v.id << ' ';
        out << ':';
        for (std::size_t a = 0 ; a < f.clauses.size() ; ++a) {
            out << (a == 0 ? " (" : " | (");
            for (std::size_t i = 0 ; i < 3 ; ++i)
                out << (i ? " & " : "") << (f.clauses[a][i].positive ? "" : "~") << 'x' << f.clauses[a][i].variable;
            out << ')';
        }
        return out.str();
    }

    auto matrix_holds(const QdnfFormula & f, const std::vector<bool> & assignment) -> bool
    {
        for (auto & c : f.clauses) {
            bool all = true;
            for (auto & l : c)
                if (assignment[f.position(l.variable)] != l.positive) {
                    all = false;
                    break;
                }
            if (all)
                return true;
        }
        return false;
    }

    namespace
    {
        struct PositionalClause
        {
            std::array<std::size_t, 3> position;
            std::array<bool, 3> positive;
        };

        auto positional(const QdnfFormula & f) -> std::vector<PositionalClause>
        {
            std::vector<PositionalClause> result;
            for (auto & c : f.clauses) {
                PositionalClause p;
                for (std::size_t i = 0 ; i < 3 ; ++i) {
                    p.position[i] = f.position(c[i].variable);
                    p.positive[i] = c[i].positive;
                }
                result.push_back(p);
            }
            return result;
        }

        auto holds(const std::vector<PositionalClause> & clauses, const std::vector<bool> & a) -> bool
        {
            for (auto & c : clauses)
                if (a[c.position[0]] == c.positive[0] && a[c.position[1]] == c.positive[1] && a[c.position[2]] == c.positive[2])
                    return true;
            return false;
        }

        auto recurse(const QdnfFormula & f, const std::vector<PositionalClause> & clauses, std::vector<bool> & a) -> bool
        {
            std::size_t depth = a.size();
            if (depth == f.prefix.size())
                return holds(clauses, a);
            bool exists = f.prefix[depth].quantifier == Quantifier::exists;
            for (bool value : {false, true}) {
                a.push_back(value);
                bool result = recurse(f, clauses, a);
                a.pop_back();
                if (result == exists)
                    return result;
            }
            return ! exists;
        }
    }

    auto evaluate_qdnf(const QdnfFormula & f) -> bool
    {
        if (f.prefix.size() > evaluate_variable_limit)
            throw RefusalError("evaluate_qdnf is limited to " + std::to_string(evaluate_variable_limit)
                    + " variables, formula has " + std::to_string(f.prefix.size()));
        f.validate();
        auto clauses = positional(f);
        std::vector<bool> a;
        return recurse(f, clauses, a);
    }

    QdnfOracle::QdnfOracle(QdnfFormula f) : _formula(std::move(f)), _memo(_formula.prefix.size() + 1)
    {
        if (_formula.prefix.size() > evaluate_variable_limit)
            throw RefusalError("formula oracle is limited to " + std::to_string(evaluate_variable_limit) + " variables");
        _formula.validate();
    }

    auto QdnfOracle::encode(const std::vector<bool> & partial) const -> std::size_t
    {
        std::size_t code = 0;
        for (std::size_t i = 0 ; i < partial.size() ; ++i)
            if (partial[i])
                code |= std::size_t{1} << i;
        return code;
    }

    auto QdnfOracle::value(const std::vector<bool> & partial) const -> bool
    {
        std::size_t depth = partial.size();
        auto & memo = _memo[depth];
        if (memo.empty())
            memo.assign(std::size_t{1} << depth, -1);
        auto code = encode(partial);
        if (memo[code] >= 0)
            return memo[code];

        bool result;
        if (depth == _formula.prefix.size())
            result = matrix_holds(_formula, partial);
        else {
            bool exists = _formula.prefix[depth].quantifier == Quantifier::exists;
            auto extended = partial;
            extended.push_back(false);
            bool v0 = value(extended);
            extended.back() = true;
            bool v1 = value(extended);
            result = exists ? (v0 || v1) : (v0 && v1);
        }
        memo[code] = result;
        return result;
    }

    auto QdnfOracle::winning_move(const std::vector<bool> & partial) const -> std::optional<bool>
    {
        if (partial.size() >= _formula.prefix.size())
            return std::nullopt;
        auto extended = partial;
        for (bool v : {true, false}) {
            extended.push_back(v);
            if (value(extended))
                return v;
            extended.pop_back();
        }
        return std::nullopt;
    }

    auto QdnfOracle::refuting_move(const std::vector<bool> & partial) const -> std::optional<bool>
    {
        if (partial.size() >= _formula.prefix.size())
            return std::nullopt;
        auto extended = partial;
        for (bool v : {false, true}) {
            extended.push_back(v);
            if (! value(extended))
                return v;
            extended.pop_back();
        }
        return std::nullopt;
    }
}
