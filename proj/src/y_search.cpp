#include "forts/y_search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <unordered_map>

#include "forts/construct.hpp"
#include "forts/forcing.hpp"
#include "forts/forts.hpp"
#include "forts/matroid.hpp"
#include "forts/transversal.hpp"

namespace forts {

namespace {

struct BudgetExhausted {};

using Clock = std::chrono::steady_clock;

// Index bitset over a fort list.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(size_t bits) : words_((bits + 63) / 64, 0) {}

    void set(size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void clear(size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    IndexSet& operator|=(const IndexSet& o) {
        for (size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }

    bool intersects(const IndexSet& o) const {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    int count_and(const IndexSet& o) const {
        int c = 0;
        for (size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] & o.words_[w]);
        return c;
    }

    int first_and(const IndexSet& o) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w] & o.words_[w];
            if (bits) return static_cast<int>(w * 64) + std::countr_zero(bits);
        }
        return -1;
    }

    int count_not(const IndexSet& o) const {
        int c = 0;
        for (size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] & ~o.words_[w]);
        return c;
    }

    int first_not(const IndexSet& o) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w] & ~o.words_[w];
            if (bits) return static_cast<int>(w * 64) + std::countr_zero(bits);
        }
        return -1;
    }

    template <typename Fn>
    void for_each_not(const IndexSet& o, Fn&& fn) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w] & ~o.words_[w];
            while (bits) {
                fn(static_cast<int>(w * 64) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

// Decides whether some compatible antichain of forts has transversal number
// at least t.  Constraint search over fort membership: a covering clause per
// (t-1)-subset of vertices demands a member disjoint from it, and every
// chosen pair sharing x queues an exchange clause over the forts inside
// their union minus x.  Chosen forts exclude everything comparable to them,
// keeping the family an antichain.
class TauAtLeastSearch {
public:
    TauAtLeastSearch(const Graph& g, const std::vector<VertexSet>& forts, int t,
                     const SearchBudget& budget, std::int64_t* nodes, Clock::time_point deadline)
        : g_(g), forts_(forts), t_(t), budget_(budget), nodes_(nodes), deadline_(deadline) {
        size_t f = forts_.size();
        comparable_.assign(f, IndexSet(f));
        for (size_t i = 0; i < f; ++i)
            for (size_t j = 0; j < f; ++j)
                if (i != j && (is_subset(forts_[i], forts_[j]) || is_subset(forts_[j], forts_[i])))
                    comparable_[i].set(j);
    }

    // nullopt = no such family exists; otherwise the chosen fort indices.
    std::optional<std::vector<int>> run() {
        build_covering_clauses();
        in_ = IndexSet(forts_.size());
        out_ = IndexSet(forts_.size());
        in_list_.clear();
        if (!search()) return std::nullopt;
        return in_list_;
    }

private:
    struct Clause {
        IndexSet candidates;
    };

    void build_covering_clauses() {
        int n = g_.vertex_count();
        int k = t_ - 1;
        std::vector<int> comb(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
        while (true) {
            VertexSet t_set = from_vertices(comb);
            Clause c{IndexSet(forts_.size())};
            for (size_t i = 0; i < forts_.size(); ++i)
                if ((forts_[i] & t_set) == 0) c.candidates.set(i);
            clauses_.push_back(std::move(c));
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && comb[static_cast<size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        }
    }

    const IndexSet& pool_candidates(VertexSet room) {
        auto it = room_cache_.find(room);
        if (it != room_cache_.end()) return it->second;
        IndexSet c(forts_.size());
        for (size_t i = 0; i < forts_.size(); ++i)
            if (is_subset(forts_[i], room)) c.set(i);
        return room_cache_.emplace(room, std::move(c)).first->second;
    }

    bool include(int k) {
        if (out_.test(static_cast<size_t>(k))) return false;
        if (in_.test(static_cast<size_t>(k))) return true;
        if (comparable_[static_cast<size_t>(k)].intersects(in_)) return false;
        in_.set(static_cast<size_t>(k));
        out_ |= comparable_[static_cast<size_t>(k)];
        for (int j : in_list_) {
            VertexSet shared = forts_[static_cast<size_t>(j)] & forts_[static_cast<size_t>(k)];
            VertexSet merged = forts_[static_cast<size_t>(j)] | forts_[static_cast<size_t>(k)];
            for (int x : to_vertices(shared))
                clauses_.push_back(Clause{pool_candidates(merged & ~single(x))});
        }
        in_list_.push_back(k);
        return true;
    }

    bool propagate() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (size_t ci = 0; ci < clauses_.size(); ++ci) {
                if (clauses_[ci].candidates.intersects(in_)) continue;
                int avail = clauses_[ci].candidates.count_not(out_);
                if (avail == 0) return false;
                if (avail == 1) {
                    int k = clauses_[ci].candidates.first_not(out_);
                    if (!include(k)) return false;
                    progress = true;
                }
            }
        }
        return true;
    }

    void tick() {
        if (++*nodes_ > budget_.max_nodes) throw BudgetExhausted{};
        if ((*nodes_ & 1023) == 0 && Clock::now() > deadline_) throw BudgetExhausted{};
    }

    bool search() {
        tick();
        if (!propagate()) return false;
        int best_clause = -1, best_avail = -1;
        for (size_t ci = 0; ci < clauses_.size(); ++ci) {
            if (clauses_[ci].candidates.intersects(in_)) continue;
            int avail = clauses_[ci].candidates.count_not(out_);
            if (best_clause < 0 || avail < best_avail) {
                best_clause = static_cast<int>(ci);
                best_avail = avail;
            }
        }
        if (best_clause < 0) return true;  // every clause satisfied

        std::vector<int> cands;
        clauses_[static_cast<size_t>(best_clause)].candidates.for_each_not(
            out_, [&](int k) { cands.push_back(k); });
        IndexSet base_in = in_, base_out = out_;
        std::vector<int> base_list = in_list_;
        size_t base_clauses = clauses_.size();
        for (int k : cands) {
            if (include(k) && search()) return true;
            in_ = base_in;
            out_ = base_out;
            in_list_ = base_list;
            clauses_.resize(base_clauses);
            out_.set(static_cast<size_t>(k));
            base_out.set(static_cast<size_t>(k));
        }
        return false;
    }

    const Graph& g_;
    const std::vector<VertexSet>& forts_;
    int t_;
    const SearchBudget& budget_;
    std::int64_t* nodes_;
    Clock::time_point deadline_;

    std::vector<IndexSet> comparable_;
    std::vector<Clause> clauses_;
    std::unordered_map<VertexSet, IndexSet> room_cache_;
    IndexSet in_, out_;
    std::vector<int> in_list_;
};

// Sorted by (size, lex): the subfamily enumeration order.
std::vector<VertexSet> forts_by_size_lex(const FortCollection& c) {
    std::vector<VertexSet> out = c.sets;
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        int sa = set_size(a), sb = set_size(b);
        return sa != sb ? sa < sb : lex_less(a, b);
    });
    return out;
}

double binomial(int n, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

YNumber y_number(const Graph& g, const SearchBudget& budget, std::int64_t fort_cap) {
    g.require_small("y_number");
    int n = g.vertex_count();
    if (n == 0) return {0, true, {}, 0, 0};

    FortCollection all = all_forts(g, fort_cap);
    FortCollection mins = minimal_sets(all);
    ZeroForcingNumber z = zero_forcing_number(g);

    YNumber out;
    // tau(minimal forts) = Z, so a compatible minimal family settles Y = Z.
    if (exchange_condition(mins).ok) {
        TransversalResult tau = min_transversal(mins);
        if (tau.size != z.value) throw Error("y_number: minimal fort transversal differs from Z");
        out.value = z.value;
        out.proven = true;
        out.witness_family = mins.sets;
        out.witness_transversal = tau.witness;
        return out;
    }

    FortNumber ft = fort_number(g, fort_cap);
    out.value = ft.value;
    out.witness_family = ft.witness;
    out.proven = false;

    std::vector<VertexSet> pool = forts_by_size_lex(all);
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(budget.time_limit_seconds));
    for (int t = z.value; t > ft.value; --t) {
        if (binomial(n, t - 1) > 2e5) return out;  // covering table would not fit the budget
        TauAtLeastSearch search(g, pool, t, budget, &out.nodes, deadline);
        std::optional<std::vector<int>> family;
        try {
            family = search.run();
        } catch (const BudgetExhausted&) {
            return out;  // best bound so far, proven = false
        }
        if (family) {
            std::vector<VertexSet> sets;
            sets.reserve(family->size());
            for (int idx : *family) sets.push_back(pool[static_cast<size_t>(idx)]);
            FortCollection fam = FortCollection::make(n, sets);
            if (!exchange_condition(fam).ok)
                throw Error("y_number: search produced an incompatible family");
            TransversalResult tau = min_transversal(fam);
            if (tau.size != t) throw Error("y_number: witness transversal number mismatch");
            out.value = t;
            out.proven = true;
            out.witness_family = fam.sets;
            out.witness_transversal = tau.witness;
            return out;
        }
    }
    // Every t above ft was refuted; the disjoint packing is optimal.
    out.proven = true;
    out.witness_transversal =
        min_transversal(FortCollection::make(n, out.witness_family)).witness;
    return out;
}

PetersenAuditResult petersen_incompatibility_audit() {
    Graph p = petersen();
    std::vector<VertexSet> forts = forts_by_size_lex(minimal_forts(p));
    const size_t f = forts.size();
    PetersenAuditResult res;

    // A family reaches tau = 5 only if every 4-subset of vertices leaves
    // some member untouched; pools list the members avoiding each subset.
    std::vector<IndexSet> cover;
    {
        std::vector<int> comb{0, 1, 2, 3};
        while (true) {
            VertexSet t_set = from_vertices(comb);
            IndexSet pool(f);
            for (size_t i = 0; i < f; ++i)
                if ((forts[i] & t_set) == 0) pool.set(i);
            cover.push_back(std::move(pool));
            int i = 3;
            while (i >= 0 && comb[static_cast<size_t>(i)] == 10 - 4 + i) --i;
            if (i < 0) break;
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < 4; ++j) comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        }
    }

    // Exchange obligations per pair with their full candidate pools.
    struct Obligation {
        int i, j, x;
        IndexSet pool;
        std::vector<VertexSet> pool_sets;
    };
    std::vector<Obligation> obligations;
    std::vector<std::vector<int>> of_pair(f * f);
    std::set<AuditRecord> violations, forced;
    for (size_t i = 0; i < f; ++i)
        for (size_t j = i + 1; j < f; ++j) {
            VertexSet shared = forts[i] & forts[j];
            VertexSet merged = forts[i] | forts[j];
            for (int x : to_vertices(shared)) {
                Obligation ob{static_cast<int>(i), static_cast<int>(j), x, IndexSet(f), {}};
                VertexSet room = merged & ~single(x);
                for (size_t k = 0; k < f; ++k)
                    if (is_subset(forts[k], room)) {
                        ob.pool.set(k);
                        ob.pool_sets.push_back(forts[k]);
                    }
                // The pool table is audit evidence in its own right: an empty
                // pool is a standing contradiction for any family holding the
                // pair, a singleton pool forces its fort into such families.
                if (ob.pool_sets.empty())
                    violations.insert(AuditRecord{forts[i], forts[j], x, {}});
                else if (ob.pool_sets.size() == 1)
                    forced.insert(AuditRecord{forts[i], forts[j], x, ob.pool_sets});
                of_pair[i * f + j].push_back(static_cast<int>(obligations.size()));
                obligations.push_back(std::move(ob));
            }
        }

    // Undecided-suffix masks per depth.
    std::vector<IndexSet> rest(f + 1, IndexSet(f));
    for (size_t idx = f; idx-- > 0;) {
        rest[idx] = rest[idx + 1];
        rest[idx].set(idx);
    }

    IndexSet in(f);
    std::vector<int> in_list;
    std::vector<int> active;  // obligation indices of chosen pairs

    auto record = [&](const Obligation& ob) {
        return AuditRecord{forts[static_cast<size_t>(ob.i)], forts[static_cast<size_t>(ob.j)],
                           ob.x, ob.pool_sets};
    };

    // Include/exclude scan over the forts in (size, lex) order.  A subtree
    // dies when a covering pool or an active obligation pool has no member
    // among the chosen and still-undecided forts; at depth f the chosen
    // family is compatible with tau = 5, i.e. a counterexample.
    std::function<void(size_t)> scan = [&](size_t idx) {
        ++res.nodes;
        IndexSet avail = in;
        avail |= rest[idx];
        for (const IndexSet& pool : cover) {
            if (!pool.intersects(avail)) {
                ++res.pruned_cover;
                return;
            }
        }
        for (int oi : active) {
            const Obligation& ob = obligations[static_cast<size_t>(oi)];
            if (ob.pool.intersects(in)) continue;  // already satisfied
            int open = ob.pool.count_and(avail);
            if (open == 0) {
                violations.insert(record(ob));
                ++res.pruned_pair;
                return;
            }
            if (open == 1 && ob.pool_sets.size() == 1) forced.insert(record(ob));
        }
        if (idx == f) {
            ++res.leaves;
            std::vector<VertexSet> family;
            family.reserve(in_list.size());
            for (int k : in_list) family.push_back(forts[static_cast<size_t>(k)]);
            FortCollection fam = FortCollection::make(10, family);
            if (!exchange_condition(fam).ok || min_transversal(fam).size != 5)
                throw Error("petersen audit: surviving leaf fails the leaf certificate");
            res.counterexample = fam.sets;
            return;
        }
        // include idx
        size_t active_mark = active.size();
        for (int j : in_list) {
            size_t a = static_cast<size_t>(std::min<int>(j, static_cast<int>(idx)));
            size_t b = static_cast<size_t>(std::max<int>(j, static_cast<int>(idx)));
            for (int oi : of_pair[a * f + b]) active.push_back(oi);
        }
        in.set(idx);
        in_list.push_back(static_cast<int>(idx));
        scan(idx + 1);
        in_list.pop_back();
        in.clear(idx);
        active.resize(active_mark);
        // exclude idx
        scan(idx + 1);
    };
    scan(0);

    res.confirmed = !res.counterexample.has_value();
    res.violations.assign(violations.begin(), violations.end());
    res.forced.assign(forced.begin(), forced.end());
    return res;
}

BoundChain bound_chain(const Graph& g, const SearchBudget& budget, std::int64_t fort_cap) {
    g.require_small("bound_chain");
    BoundChain chain;
    FortNumber ft = fort_number(g, fort_cap);
    chain.ft = ft.value;
    chain.ft_witness = ft.witness;

    chain.n_lower = ft.value;
    if (ft.value > 0) {
        // The packing construction can push the nullity above the packing size.
        ConstructionSpec spec = ConstructionSpec::with_indicator_vectors(g, ft.witness);
        RationalMatrix a = build_csym_disjoint(spec);
        chain.n_lower = std::max(chain.n_lower, nullity_of(a));
    }

    ZeroForcingNumber z = zero_forcing_number(g);
    chain.z = z.value;
    chain.z_witness = z.witness;

    YNumber y = y_number(g, budget, fort_cap);
    chain.y = y.value;
    chain.y_proven = y.proven;
    chain.y_witness = y.witness_family;

    if (chain.ft > chain.n_lower) throw Error("bound_chain: ft exceeds N lower bound");
    if (y.proven) {
        if (chain.n_lower > y.value) throw Error("bound_chain: N lower bound exceeds Y");
        if (y.value > chain.z) throw Error("bound_chain: Y exceeds Z");
    }
    return chain;
}

}  // namespace forts
