#include "forts/forts.hpp"

#include <algorithm>
#include <numeric>

namespace forts {

bool is_fort(const Graph& g, VertexSet f) {
    g.require_small("is_fort");
    if (!is_subset(f, g.full_vertex_set())) throw InputError("fort candidate has out-of-range vertex");
    if (f == 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (contains(f, v)) continue;
        if (set_size(g.neighbor_mask(v) & f) == 1) return false;
    }
    return true;
}

namespace {

// Backtracking enumerator.  Vertices are decided in descending degree order;
// a branch dies as soon as some decided-out vertex has exactly one
// decided-in neighbor and no undecided neighbors left.
class FortEnumerator {
public:
    FortEnumerator(const Graph& g, std::int64_t cap) : g_(g), cap_(cap) {
        int n = g.vertex_count();
        order_.resize(static_cast<size_t>(n));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        in_count_.assign(static_cast<size_t>(n), 0);
        undecided_count_.assign(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) undecided_count_[static_cast<size_t>(v)] = g.degree(v);
    }

    std::vector<VertexSet> run() {
        decide(0);
        return std::move(found_);
    }

private:
    bool out_violated(int v) const {
        return contains(out_, v) && in_count_[static_cast<size_t>(v)] == 1 &&
               undecided_count_[static_cast<size_t>(v)] == 0;
    }

    void decide(size_t pos) {
        if (pos == order_.size()) {
            if (in_ != 0) {
                if (static_cast<std::int64_t>(found_.size()) >= cap_)
                    throw CapExceeded("fort cap exceeded",
                                      static_cast<std::int64_t>(found_.size()));
                found_.push_back(in_);
            }
            return;
        }
        int v = order_[pos];
        for (bool take : {true, false}) {
            VertexSet bit = single(v);
            if (take)
                in_ |= bit;
            else
                out_ |= bit;
            for (int u : g_.neighbors(v)) {
                --undecided_count_[static_cast<size_t>(u)];
                if (take) ++in_count_[static_cast<size_t>(u)];
            }
            bool dead = out_violated(v);
            if (!dead)
                for (int u : g_.neighbors(v))
                    if (out_violated(u)) {
                        dead = true;
                        break;
                    }
            if (!dead) decide(pos + 1);
            for (int u : g_.neighbors(v)) {
                ++undecided_count_[static_cast<size_t>(u)];
                if (take) --in_count_[static_cast<size_t>(u)];
            }
            if (take)
                in_ &= ~bit;
            else
                out_ &= ~bit;
        }
    }

    const Graph& g_;
    std::int64_t cap_;
    std::vector<int> order_;
    std::vector<int> in_count_;
    std::vector<int> undecided_count_;
    VertexSet in_ = 0;
    VertexSet out_ = 0;
    std::vector<VertexSet> found_;
};

}  // namespace

FortCollection all_forts(const Graph& g, std::int64_t cap) {
    g.require_small("all_forts");
    FortEnumerator e(g, cap);
    return FortCollection::make(g.vertex_count(), e.run(), FortKind::all);
}

FortCollection minimal_forts(const Graph& g, std::int64_t cap) {
    FortCollection all = all_forts(g, cap);
    return minimal_sets(all);
}

namespace {

// Exact maximum disjoint packing over an antichain of candidate sets.
class Packer {
public:
    explicit Packer(const std::vector<VertexSet>& candidates) : candidates_(candidates) {}

    FortNumber run() {
        std::vector<VertexSet> chosen;
        extend(0, 0, chosen);
        return best_;
    }

private:
    void extend(size_t from, VertexSet used, std::vector<VertexSet>& chosen) {
        if (static_cast<int>(chosen.size()) > best_.value) {
            best_.value = static_cast<int>(chosen.size());
            best_.witness = chosen;
        }
        // Bound: even taking every remaining candidate cannot beat the best.
        int avail = 0;
        for (size_t i = from; i < candidates_.size(); ++i)
            if ((candidates_[i] & used) == 0) ++avail;
        if (static_cast<int>(chosen.size()) + avail <= best_.value) return;
        for (size_t i = from; i < candidates_.size(); ++i) {
            if (candidates_[i] & used) continue;
            chosen.push_back(candidates_[i]);
            extend(i + 1, used | candidates_[i], chosen);
            chosen.pop_back();
        }
    }

    const std::vector<VertexSet>& candidates_;
    FortNumber best_;
};

}  // namespace

FortNumber fort_number(const Graph& g, std::int64_t cap) {
    FortCollection min_forts = minimal_forts(g, cap);
    Packer p(min_forts.sets);
    return p.run();
}

bool separated(const Graph& g, VertexSet f1, VertexSet f2) {
    if (f1 & f2) throw InputError("separated: forts are not disjoint");
    if (!is_fort(g, f1) || !is_fort(g, f2)) throw InputError("separated: input is not a fort");
    for (int v : to_vertices(f1))
        if (g.neighbor_mask(v) & f2) return false;
    return true;
}

}  // namespace forts
