#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ochrom
{
    /// Invalid graph or formula construction (bad endpoint, self-loop, improper precoloring).
    class ConstructionError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Malformed text input. Carries a 1-based line and column.
    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & message, std::size_t line, std::size_t column) :
                std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
                _line(line),
                _column(column)
            {
            }

            auto line() const -> std::size_t { return _line; }
            auto column() const -> std::size_t { return _column; }

        private:
            std::size_t _line, _column;
    };

    /// An exact procedure was asked to run beyond its configured size bound.
    class RefusalError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// A precondition on an argument does not hold.
    class ArgumentError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A strategy emitted an illegal move during a game.
    class ProtocolError : public std::runtime_error
    {
        public:
            ProtocolError(const std::string & message, std::size_t round) :
                std::runtime_error("round " + std::to_string(round) + ": " + message),
                _round(round)
            {
            }

            auto round() const -> std::size_t { return _round; }

        private:
            std::size_t _round;
    };
}
