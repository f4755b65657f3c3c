#ifndef FORTS_FORT_COLLECTION_HPP
#define FORTS_FORT_COLLECTION_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "forts/bitset64.hpp"
#include "forts/errors.hpp"

namespace forts {

inline constexpr std::int64_t kDefaultFortCap = 1000000;

enum class FortKind { all, minimal, custom };

// A family of vertex subsets over a fixed ground set.  Members are nonempty,
// deduplicated and sorted lexicographically; kind == minimal additionally
// promises an antichain under inclusion.
struct FortCollection {
    int ground_n = 0;
    std::vector<VertexSet> sets;
    FortKind kind = FortKind::custom;

    static FortCollection make(int ground_n, std::vector<VertexSet> sets,
                               FortKind kind = FortKind::custom) {
        for (VertexSet s : sets) {
            if (s == 0) throw InputError("fort collection member is empty");
            if (!is_subset(s, full_set(ground_n)))
                throw InputError("fort collection member exceeds ground set");
        }
        std::sort(sets.begin(), sets.end(), LexLess{});
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        return {ground_n, std::move(sets), kind};
    }

    size_t size() const { return sets.size(); }
    bool empty() const { return sets.empty(); }

    bool contains_set(VertexSet s) const {
        return std::find(sets.begin(), sets.end(), s) != sets.end();
    }

    bool is_antichain() const {
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = 0; j < sets.size(); ++j)
                if (i != j && is_subset(sets[i], sets[j])) return false;
        return true;
    }
};

// Inclusion-minimal members of an arbitrary family.
inline FortCollection minimal_sets(const FortCollection& family) {
    std::vector<VertexSet> by_size = family.sets;
    std::sort(by_size.begin(), by_size.end(), [](VertexSet a, VertexSet b) {
        int sa = set_size(a), sb = set_size(b);
        return sa != sb ? sa < sb : lex_less(a, b);
    });
    std::vector<VertexSet> kept;
    for (VertexSet s : by_size) {
        bool dominated = false;
        for (VertexSet k : kept) {
            if (is_subset(k, s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(s);
    }
    return FortCollection::make(family.ground_n, std::move(kept), FortKind::minimal);
}

}  // namespace forts

#endif
