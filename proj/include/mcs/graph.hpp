// SPDX-License-Identifier: Apache-2.0

#ifndef MCS_GRAPH_HPP
#define MCS_GRAPH_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcs
{
    // Relation between an ordered vertex pair. Undirected graphs only ever
    // produce none/both; a directed edge u->v is out at (u,v) and in at (v,u).
    enum class AdjacencyKind : unsigned char
    {
        none = 0,
        out = 1,
        in = 2,
        both = 3
    };

    constexpr auto reversed(AdjacencyKind k) -> AdjacencyKind
    {
        switch (k) {
            case AdjacencyKind::out: return AdjacencyKind::in;
            case AdjacencyKind::in: return AdjacencyKind::out;
            default: return k;
        }
    }

    struct Match
    {
        int pattern;
        int target;

        friend auto operator==(const Match &, const Match &) -> bool = default;
    };

    // A set of matches (v, phi(v)), built up by the search and returned to
    // callers. Feasibility is a property checked by verify_common_subgraph,
    // not enforced by the type.
    using Solution = std::vector<Match>;

    // Simple vertex-labelled graph, directed or undirected, immutable after
    // construction. Vertices are 0..n-1; labels are arbitrary non-negative
    // integers (all equal for an unlabelled graph). Adjacency is stored as a
    // dense n*n matrix of AdjacencyKind, which keeps lookups O(1) at the cost
    // of O(n^2) memory; the largest benchmark targets (~6700 vertices) still
    // fit comfortably.
    class Graph
    {
    public:
        Graph() = default;

        Graph(int n, bool directed, std::span<const std::pair<int, int>> edges,
              std::vector<int> labels = {}) :
            n_(n),
            directed_(directed),
            labels_(std::move(labels))
        {
            if (n_ < 0)
                throw std::invalid_argument{"graph size must be non-negative"};
            if (labels_.empty())
                labels_.assign(static_cast<std::size_t>(n_), 0);
            if (static_cast<int>(labels_.size()) != n_)
                throw std::invalid_argument{"label sequence length must equal the vertex count"};
            for (int label : labels_)
                if (label < 0)
                    throw std::invalid_argument{"vertex labels must be non-negative"};

            adjacency_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
            for (auto [from, to] : edges) {
                if (from < 0 || from >= n_ || to < 0 || to >= n_)
                    throw std::invalid_argument{"edge endpoint out of range: (" +
                        std::to_string(from) + ", " + std::to_string(to) + ")"};
                if (from == to)
                    throw std::invalid_argument{"self-loops are not permitted (vertex " +
                        std::to_string(from) + ")"};
                if (directed_) {
                    cell(from, to) |= static_cast<unsigned char>(AdjacencyKind::out);
                    cell(to, from) |= static_cast<unsigned char>(AdjacencyKind::in);
                }
                else {
                    cell(from, to) = static_cast<unsigned char>(AdjacencyKind::both);
                    cell(to, from) = static_cast<unsigned char>(AdjacencyKind::both);
                }
            }

            degrees_.assign(static_cast<std::size_t>(n_), 0);
            for (int v = 0; v < n_; ++v)
                for (int u = 0; u < n_; ++u)
                    if (cell(v, u) != 0)
                        ++degrees_[static_cast<std::size_t>(v)];
        }

        auto size() const -> int { return n_; }

        auto directed() const -> bool { return directed_; }

        auto label(int v) const -> int
        {
            check_vertex(v);
            return labels_[static_cast<std::size_t>(v)];
        }

        auto labels() const -> const std::vector<int> & { return labels_; }

        auto adjacency_kind(int u, int v) const -> AdjacencyKind
        {
            check_vertex(u);
            check_vertex(v);
            return static_cast<AdjacencyKind>(cell(u, v));
        }

        // Number of distinct neighbours, counting a vertex once whether the
        // relation is in, out or both.
        auto degree(int v) const -> int
        {
            check_vertex(v);
            return degrees_[static_cast<std::size_t>(v)];
        }

    private:
        auto cell(int u, int v) -> unsigned char &
        {
            return adjacency_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(v)];
        }

        auto cell(int u, int v) const -> unsigned char
        {
            return adjacency_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(v)];
        }

        auto check_vertex(int v) const -> void
        {
            if (v < 0 || v >= n_)
                throw std::out_of_range{"vertex " + std::to_string(v) +
                    " out of range for graph of size " + std::to_string(n_)};
        }

        int n_ = 0;
        bool directed_ = false;
        std::vector<int> labels_;
        std::vector<unsigned char> adjacency_;
        std::vector<int> degrees_;
    };

    // True iff matches is injective on both sides, label-preserving, and
    // preserves the adjacency kind of every vertex pair. Malformed input
    // (indices out of range, repeated vertices) yields false, with the reason
    // written to *diagnostic when provided.
    inline auto verify_common_subgraph(const Graph & pattern, const Graph & target,
        const Solution & matches, std::string * diagnostic = nullptr) -> bool
    {
        auto reject = [&](std::string why) {
            if (diagnostic)
                *diagnostic = std::move(why);
            return false;
        };

        std::vector<bool> pattern_used(static_cast<std::size_t>(pattern.size()), false);
        std::vector<bool> target_used(static_cast<std::size_t>(target.size()), false);

        for (const auto & m : matches) {
            if (m.pattern < 0 || m.pattern >= pattern.size() || m.target < 0 || m.target >= target.size())
                return reject("match (" + std::to_string(m.pattern) + ", " + std::to_string(m.target) +
                    ") has an out-of-range vertex");
            if (pattern_used[static_cast<std::size_t>(m.pattern)])
                return reject("pattern vertex " + std::to_string(m.pattern) + " matched twice");
            if (target_used[static_cast<std::size_t>(m.target)])
                return reject("target vertex " + std::to_string(m.target) + " matched twice");
            pattern_used[static_cast<std::size_t>(m.pattern)] = true;
            target_used[static_cast<std::size_t>(m.target)] = true;
            if (pattern.label(m.pattern) != target.label(m.target))
                return reject("match (" + std::to_string(m.pattern) + ", " + std::to_string(m.target) +
                    ") does not preserve labels");
        }

        for (std::size_t i = 0; i < matches.size(); ++i)
            for (std::size_t j = i + 1; j < matches.size(); ++j) {
                const auto & a = matches[i];
                const auto & b = matches[j];
                if (pattern.adjacency_kind(a.pattern, b.pattern) != target.adjacency_kind(a.target, b.target))
                    return reject("pair (" + std::to_string(a.pattern) + ", " + std::to_string(b.pattern) +
                        ") and (" + std::to_string(a.target) + ", " + std::to_string(b.target) +
                        ") disagree on adjacency");
            }

        return true;
    }
}

#endif
