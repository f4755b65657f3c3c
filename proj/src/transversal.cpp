#include "forts/transversal.hpp"

#include <algorithm>

namespace forts {

bool is_transversal(const FortCollection& family, VertexSet t) {
    for (VertexSet s : family.sets)
        if ((s & t) == 0) return false;
    return true;
}

namespace {

class HittingSetSolver {
public:
    explicit HittingSetSolver(const FortCollection& family) {
        // tau(S) = tau(S^min); the antichain keeps the branching shallow.
        sets_ = minimal_sets(family).sets;
        ground_n_ = family.ground_n;
    }

    TransversalResult run() {
        best_ = greedy_hitting();
        VertexSet current = 0;
        branch(current, 0, sets_);
        return {set_size(best_), best_, true};
    }

private:
    VertexSet greedy_hitting() const {
        std::vector<VertexSet> unhit = sets_;
        VertexSet t = 0;
        while (!unhit.empty()) {
            int best_v = -1, best_hits = -1;
            for (int v = 0; v < ground_n_; ++v) {
                int hits = 0;
                for (VertexSet s : unhit)
                    if (contains(s, v)) ++hits;
                if (hits > best_hits) {
                    best_hits = hits;
                    best_v = v;
                }
            }
            t |= single(best_v);
            std::erase_if(unhit, [&](VertexSet s) { return contains(s, best_v); });
        }
        return t;
    }

    static int packing_bound(const std::vector<VertexSet>& unhit) {
        // Greedy disjoint subfamily: any hitting set needs one vertex per
        // packed member.
        VertexSet used = 0;
        int count = 0;
        for (VertexSet s : unhit) {
            if (s & used) continue;
            used |= s;
            ++count;
        }
        return count;
    }

    void branch(VertexSet current, int depth, const std::vector<VertexSet>& unhit) {
        if (unhit.empty()) {
            if (depth < set_size(best_)) best_ = current;
            return;
        }
        if (depth + packing_bound(unhit) >= set_size(best_)) return;
        // Branch on the smallest unhit set, ties lexicographic.
        VertexSet pick = unhit[0];
        for (VertexSet s : unhit) {
            int ss = set_size(s), sp = set_size(pick);
            if (ss < sp || (ss == sp && lex_less(s, pick))) pick = s;
        }
        // Elements ordered by descending hit count, ties ascending vertex.
        std::vector<int> elems = to_vertices(pick);
        std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) {
            int ha = 0, hb = 0;
            for (VertexSet s : unhit) {
                ha += contains(s, a);
                hb += contains(s, b);
            }
            return ha > hb;
        });
        for (int v : elems) {
            std::vector<VertexSet> rest;
            rest.reserve(unhit.size());
            for (VertexSet s : unhit)
                if (!contains(s, v)) rest.push_back(s);
            branch(current | single(v), depth + 1, rest);
        }
    }

    std::vector<VertexSet> sets_;
    int ground_n_ = 0;
    VertexSet best_ = 0;
};

}  // namespace

TransversalResult min_transversal(const FortCollection& family) {
    if (family.ground_n > 64) throw InputError("min_transversal requires ground_n <= 64");
    for (VertexSet s : family.sets)
        if (s == 0) throw InputError("transversal of a family containing the empty set is undefined");
    if (family.empty()) return {0, 0, true};
    HittingSetSolver solver(family);
    return solver.run();
}

}  // namespace forts
