#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ochrom
{
    enum class Quantifier { forall, exists };

    struct Literal
    {
        int variable;
        bool positive;

        friend auto operator== (const Literal &, const Literal &) -> bool = default;
    };

    using Clause = std::array<Literal, 3>;

    struct QuantifiedVariable
    {
        int id;
        Quantifier quantifier;

        friend auto operator== (const QuantifiedVariable &, const QuantifiedVariable &) -> bool = default;
    };

    /// A fully quantified formula whose matrix is a disjunction of 3-literal conjunctions.
    /// Variables are quantified in prefix order, which is also ascending id order.
    struct QdnfFormula
    {
        std::vector<QuantifiedVariable> prefix;
        std::vector<Clause> clauses;

        /// Position of variable `id` in the prefix. Throws ArgumentError when absent.
        auto position(int id) const -> std::size_t;
        auto count(Quantifier q) const -> std::size_t;

        /// Throws ConstructionError when an invariant is violated.
        auto validate() const -> void;

        friend auto operator== (const QdnfFormula &, const QdnfFormula &) -> bool = default;
    };

    /// Grammar: prefix of `A x<i>` / `E x<i>`, then `:`, then `(l & l & l)` clauses joined by
    /// `|`, where a literal is `x<i>` or `~x<i>`. `#` starts a comment.
    auto parse_qdnf(std::string_view text) -> QdnfFormula;

    /// Canonical spacing, e.g. `A x1 E x2 : (x1 & x2 & x2) | (~x1 & ~x2 & ~x2)`.
    auto format_qdnf(const QdnfFormula & f) -> std::string;

    inline constexpr std::size_t evaluate_variable_limit = 24;

    /// Truth value under game semantics. Refuses formulas with more than 24 variables.
    auto evaluate_qdnf(const QdnfFormula & f) -> bool;

    /// Whether the matrix holds under a total assignment indexed by prefix position.
    auto matrix_holds(const QdnfFormula & f, const std::vector<bool> & assignment) -> bool;

    /// Game value of the suffix of the prefix starting after the assigned positions.
    /// `assignment` gives values for prefix positions 0..assignment.size()-1.
    class QdnfOracle
    {
        public:
            explicit QdnfOracle(QdnfFormula f);

            auto formula() const -> const QdnfFormula & { return _formula; }

            auto value(const std::vector<bool> & partial) const -> bool;

            /// A value for the next variable that keeps the formula true, if one exists.
            auto winning_move(const std::vector<bool> & partial) const -> std::optional<bool>;

            /// A value for the next variable that keeps the formula false, if one exists.
            auto refuting_move(const std::vector<bool> & partial) const -> std::optional<bool>;

        private:
            QdnfFormula _formula;
            mutable std::vector<std::vector<signed char>> _memo;

            auto encode(const std::vector<bool> & partial) const -> std::size_t;
    };
}
