#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ochrom
{
    /// Fixed-capacity dynamic bitset used for adjacency rows and vertex sets.
    ///
    /// Two bitsets compare as unsigned integers (bit 0 is least significant),
    /// which gives the "subset bitmask ascending" order used for Drawer moves.
    class Bitset
    {
        public:
            Bitset() = default;
            explicit Bitset(std::size_t size) : _size(size), _words((size + 63) / 64, 0) { }

            auto size() const -> std::size_t { return _size; }

            auto resize(std::size_t size) -> void
            {
                _size = size;
                _words.resize((size + 63) / 64, 0);
                trim();
            }

            auto test(std::size_t i) const -> bool { return (_words[i / 64] >> (i % 64)) & 1u; }
            auto set(std::size_t i) -> void { _words[i / 64] |= std::uint64_t{1} << (i % 64); }
            auto reset(std::size_t i) -> void { _words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
            auto set(std::size_t i, bool value) -> void { value ? set(i) : reset(i); }

            auto set_all() -> void
            {
                for (auto & w : _words)
                    w = ~std::uint64_t{0};
                trim();
            }

            auto clear() -> void
            {
                for (auto & w : _words)
                    w = 0;
            }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto any() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return true;
                return false;
            }

            auto none() const -> bool { return ! any(); }

            /// Index of the lowest set bit at or after `from`, or size() if none.
            auto find_next(std::size_t from) const -> std::size_t
            {
                if (from >= _size)
                    return _size;
                std::size_t w = from / 64;
                std::uint64_t word = _words[w] & (~std::uint64_t{0} << (from % 64));
                while (true) {
                    if (word)
                        return w * 64 + std::countr_zero(word);
                    if (++w >= _words.size())
                        return _size;
                    word = _words[w];
                }
            }

            auto find_first() const -> std::size_t { return find_next(0); }

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    std::uint64_t word = _words[w];
                    while (word) {
                        int b = std::countr_zero(word);
                        f(w * 64 + b);
                        word &= word - 1;
                    }
                }
            }

            auto to_vector() const -> std::vector<std::size_t>
            {
                std::vector<std::size_t> result;
                for_each([&] (std::size_t i) { result.push_back(i); });
                return result;
            }

            auto intersects(const Bitset & other) const -> bool
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    if (_words[w] & other._words[w])
                        return true;
                return false;
            }

            auto is_subset_of(const Bitset & other) const -> bool
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    if (_words[w] & ~other._words[w])
                        return false;
                return true;
            }

            auto intersection_count(const Bitset & other) const -> std::size_t
            {
                std::size_t result = 0;
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    result += std::popcount(_words[w] & other._words[w]);
                return result;
            }

            auto operator&= (const Bitset & other) -> Bitset &
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    _words[w] &= other._words[w];
                return *this;
            }

            auto operator|= (const Bitset & other) -> Bitset &
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    _words[w] |= other._words[w];
                return *this;
            }

            /// this &= ~other
            auto subtract(const Bitset & other) -> Bitset &
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    _words[w] &= ~other._words[w];
                return *this;
            }

            auto flip() -> Bitset &
            {
                for (auto & w : _words)
                    w = ~w;
                trim();
                return *this;
            }

            friend auto operator& (Bitset a, const Bitset & b) -> Bitset { return a &= b; }
            friend auto operator| (Bitset a, const Bitset & b) -> Bitset { return a |= b; }

            friend auto operator== (const Bitset & a, const Bitset & b) -> bool
            {
                return a._size == b._size && a._words == b._words;
            }

            friend auto operator< (const Bitset & a, const Bitset & b) -> bool
            {
                for (std::size_t w = a._words.size() ; w > 0 ; --w)
                    if (a._words[w - 1] != b._words[w - 1])
                        return a._words[w - 1] < b._words[w - 1];
                return false;
            }

            auto words() const -> const std::vector<std::uint64_t> & { return _words; }

            /// Bits as '0'/'1' characters, lowest index first.
            auto to_string() const -> std::string
            {
                std::string result(_size, '0');
                for_each([&] (std::size_t i) { result[i] = '1'; });
                return result;
            }

        private:
            std::size_t _size = 0;
            std::vector<std::uint64_t> _words;

            auto trim() -> void
            {
                if (_size % 64 && ! _words.empty())
                    _words.back() &= (std::uint64_t{1} << (_size % 64)) - 1;
            }
    };
}
