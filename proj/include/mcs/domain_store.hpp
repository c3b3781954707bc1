// SPDX-License-Identifier: Apache-2.0

#ifndef MCS_DOMAIN_STORE_HPP
#define MCS_DOMAIN_STORE_HPP

#include <mcs/graph.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcs
{
    // One label class <V'_p, V'_t>: every pattern vertex on the left may still
    // be matched with any target vertex on the right. Both sides are non-empty
    // and duplicate-free by construction.
    struct LabelClass
    {
        std::vector<int> pattern_vertices;
        std::vector<int> target_vertices;

        friend auto operator==(const LabelClass &, const LabelClass &) -> bool = default;
    };

    // The set D of label classes: a compact representation of the candidate
    // mapping. Pattern sides of distinct classes are pairwise disjoint, as are
    // target sides. A pattern vertex absent from every class is matched or
    // excluded.
    struct DomainStore
    {
        std::vector<LabelClass> classes;

        auto empty() const -> bool { return classes.empty(); }

        friend auto operator==(const DomainStore &, const DomainStore &) -> bool = default;
    };

    // One class per label value occurring in both graphs, holding every vertex
    // of that label; labels present on only one side contribute nothing.
    // Classes are ordered by ascending label, vertices ascending within each.
    inline auto initial_classes(const Graph & pattern, const Graph & target) -> DomainStore
    {
        std::vector<int> labels;
        for (int v = 0; v < pattern.size(); ++v)
            labels.push_back(pattern.label(v));
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

        DomainStore store;
        for (int label : labels) {
            LabelClass cls;
            for (int v = 0; v < pattern.size(); ++v)
                if (pattern.label(v) == label)
                    cls.pattern_vertices.push_back(v);
            for (int w = 0; w < target.size(); ++w)
                if (target.label(w) == label)
                    cls.target_vertices.push_back(w);
            if (!cls.pattern_vertices.empty() && !cls.target_vertices.empty())
                store.classes.push_back(std::move(cls));
        }
        return store;
    }

    // Sum over classes of min(|V'_p|, |V'_t|): each class can contribute at
    // most that many further matches, so |curSol| + bound overestimates the
    // best completable solution.
    inline auto bound(const DomainStore & store) -> int
    {
        int total = 0;
        for (const auto & cls : store.classes)
            total += static_cast<int>(std::min(cls.pattern_vertices.size(), cls.target_vertices.size()));
        return total;
    }

    namespace detail
    {
        // Fixed output order of split fragments within one input class.
        inline constexpr std::array<AdjacencyKind, 4> split_kind_order = {
            AdjacencyKind::both, AdjacencyKind::out, AdjacencyKind::in, AdjacencyKind::none};

        inline auto kind_slot(AdjacencyKind kind) -> std::size_t
        {
            switch (kind) {
                case AdjacencyKind::both: return 0;
                case AdjacencyKind::out: return 1;
                case AdjacencyKind::in: return 2;
                default: return 3;
            }
        }

        inline auto class_of_pattern_vertex(const DomainStore & store, int v) -> std::size_t
        {
            for (std::size_t i = 0; i < store.classes.size(); ++i) {
                const auto & side = store.classes[i].pattern_vertices;
                if (std::find(side.begin(), side.end(), v) != side.end())
                    return i;
            }
            throw std::invalid_argument{"pattern vertex " + std::to_string(v) +
                " is not present in any label class"};
        }
    }

    // Store after taking the match (v, w): v and w disappear, and every class
    // is partitioned by adjacency kind relative to the matched pair — pattern
    // vertices by kind(v', v), target vertices by kind(w', w) — keeping only
    // fragments whose kinds agree on both sides. Undirected graphs give the
    // two-way adjacent/non-adjacent split; directed graphs split up to four
    // ways. Fragments keep the input vertex order; fragment order within a
    // class is both, out, in, none. The input store is left untouched.
    inline auto split(const DomainStore & store, const Graph & pattern, const Graph & target,
        int v, int w) -> DomainStore
    {
        const auto cls_index = detail::class_of_pattern_vertex(store, v);
        const auto & home = store.classes[cls_index].target_vertices;
        if (std::find(home.begin(), home.end(), w) == home.end())
            throw std::invalid_argument{"target vertex " + std::to_string(w) +
                " is not in the label class of pattern vertex " + std::to_string(v)};

        DomainStore result;
        result.classes.reserve(store.classes.size() + 3);
        for (const auto & cls : store.classes) {
            std::array<LabelClass, 4> fragments;
            for (int p : cls.pattern_vertices)
                if (p != v)
                    fragments[detail::kind_slot(pattern.adjacency_kind(p, v))].pattern_vertices.push_back(p);
            for (int t : cls.target_vertices)
                if (t != w)
                    fragments[detail::kind_slot(target.adjacency_kind(t, w))].target_vertices.push_back(t);
            for (auto & fragment : fragments)
                if (!fragment.pattern_vertices.empty() && !fragment.target_vertices.empty())
                    result.classes.push_back(std::move(fragment));
        }
        return result;
    }

    // Store after the exclusion branch for v (the vertex is matched to
    // nothing): v leaves its class's pattern side, and the class is dropped if
    // that side empties.
    inline auto exclude_vertex(const DomainStore & store, int v) -> DomainStore
    {
        const auto cls_index = detail::class_of_pattern_vertex(store, v);

        DomainStore result = store;
        auto & side = result.classes[cls_index].pattern_vertices;
        side.erase(std::find(side.begin(), side.end(), v));
        if (side.empty())
            result.classes.erase(result.classes.begin() + static_cast<std::ptrdiff_t>(cls_index));
        return result;
    }

    // Branching class: smallest max(|V'_p|, |V'_t|), ties by smaller
    // |V'_p|*|V'_t|, then by earliest position. Null for the empty store.
    inline auto select_class(const DomainStore & store) -> const LabelClass *
    {
        const LabelClass * best = nullptr;
        std::size_t best_max = 0;
        std::size_t best_product = 0;
        for (const auto & cls : store.classes) {
            const auto p = cls.pattern_vertices.size();
            const auto t = cls.target_vertices.size();
            const auto cls_max = std::max(p, t);
            const auto cls_product = p * t;
            if (!best || cls_max < best_max || (cls_max == best_max && cls_product < best_product)) {
                best = &cls;
                best_max = cls_max;
                best_product = cls_product;
            }
        }
        return best;
    }
}

#endif
