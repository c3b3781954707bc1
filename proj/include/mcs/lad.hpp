// SPDX-License-Identifier: Apache-2.0

#ifndef MCS_LAD_HPP
#define MCS_LAD_HPP

#include <mcs/graph.hpp>

#include <cctype>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcs
{
    struct ParseOptions
    {
        bool directed = false;
        bool labelled = false;
    };

    // Raised for any malformed LAD input. token_index() is the 0-based index
    // of the offending whitespace-separated token (or one past the last token
    // when the stream is truncated).
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(const std::string & message, std::size_t token_index) :
            std::runtime_error{"token " + std::to_string(token_index) + ": " + message},
            token_index_(token_index)
        {
        }

        auto token_index() const -> std::size_t { return token_index_; }

    private:
        std::size_t token_index_;
    };

    namespace detail
    {
        class TokenReader
        {
        public:
            explicit TokenReader(std::string_view text) : text_(text) {}

            auto next_int(const char * what) -> long long
            {
                skip_space();
                if (pos_ >= text_.size())
                    throw ParseError{std::string{"expected "} + what + ", found end of input", index_};

                std::size_t start = pos_;
                if (text_[pos_] == '-' || text_[pos_] == '+')
                    ++pos_;
                std::size_t digits_start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (pos_ == digits_start || (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))))
                    throw ParseError{std::string{"expected "} + what + ", found non-integer token", index_};

                long long value = 0;
                try {
                    value = std::stoll(std::string{text_.substr(start, pos_ - start)});
                }
                catch (const std::out_of_range &) {
                    throw ParseError{std::string{what} + " does not fit in an integer", index_};
                }
                ++index_;
                return value;
            }

            auto next_count(const char * what) -> int
            {
                long long value = next_int(what);
                if (value < 0)
                    throw ParseError{std::string{what} + " must be non-negative, got " + std::to_string(value),
                        index_ - 1};
                if (value > std::numeric_limits<int>::max())
                    throw ParseError{std::string{what} + " too large", index_ - 1};
                return static_cast<int>(value);
            }

            auto at_end() -> bool
            {
                skip_space();
                return pos_ >= text_.size();
            }

            auto index() const -> std::size_t { return index_; }

        private:
            auto skip_space() -> void
            {
                while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }

            std::string_view text_;
            std::size_t pos_ = 0;
            std::size_t index_ = 0;
        };
    }

    // LAD-family instance text: whitespace-separated integer tokens. First the
    // vertex count n, then one record per vertex: an optional label (labelled
    // inputs only), a neighbour count, and that many neighbour indices. For
    // directed inputs the listed neighbours are out-neighbours; otherwise each
    // listing is an undirected edge, with duplicates merged silently.
    inline auto parse_lad(std::string_view text, ParseOptions opts) -> Graph
    {
        detail::TokenReader reader{text};

        const int n = reader.next_count("vertex count");

        std::vector<int> labels;
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v) {
            if (opts.labelled)
                labels.push_back(reader.next_count("vertex label"));
            const int neighbour_count = reader.next_count("neighbour count");
            for (int i = 0; i < neighbour_count; ++i) {
                const std::size_t token = reader.index();
                const int u = reader.next_count("neighbour index");
                if (u >= n)
                    throw ParseError{"neighbour index " + std::to_string(u) +
                        " out of range for " + std::to_string(n) + " vertices", token};
                if (u == v)
                    throw ParseError{"vertex " + std::to_string(v) + " lists itself as a neighbour", token};
                edges.emplace_back(v, u);
            }
        }

        if (!reader.at_end())
            throw ParseError{"surplus tokens after the last vertex record", reader.index()};

        if (!opts.labelled)
            labels.assign(static_cast<std::size_t>(n), 0);

        return Graph{n, opts.directed, edges, std::move(labels)};
    }

    // Inverse of parse_lad for round-trip checks and fixture generation: each
    // vertex row lists its out-neighbours (an undirected edge therefore
    // appears in both endpoint rows, which parse_lad merges back).
    inline auto write_lad(const Graph & g, bool labelled) -> std::string
    {
        std::string out = std::to_string(g.size());
        out += '\n';
        for (int v = 0; v < g.size(); ++v) {
            std::string row;
            if (labelled)
                row += std::to_string(g.label(v)) + ' ';
            std::vector<int> neighbours;
            for (int u = 0; u < g.size(); ++u) {
                auto kind = g.adjacency_kind(v, u);
                if (kind == AdjacencyKind::out || kind == AdjacencyKind::both)
                    neighbours.push_back(u);
            }
            row += std::to_string(neighbours.size());
            for (int u : neighbours)
                row += ' ' + std::to_string(u);
            out += row;
            out += '\n';
        }
        return out;
    }
}

#endif
