#ifndef FORTS_Y_SEARCH_HPP
#define FORTS_Y_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "forts/fort_collection.hpp"
#include "forts/graph.hpp"

namespace forts {

struct SearchBudget {
    std::int64_t max_nodes = 20000000;
    double time_limit_seconds = 600.0;
};

struct YNumber {
    int value = 0;
    bool proven = false;
    std::vector<VertexSet> witness_family;
    VertexSet witness_transversal = 0;
    std::int64_t nodes = 0;
};

// Y(G): the maximum transversal number over compatible fort collections.
// Since tau and compatibility both pass to the minimal members, the search
// runs over antichains of forts satisfying the circuit-exchange axiom.  If
// the minimal forts are compatible the answer is Z(G) immediately; otherwise
// a constraint search decides, for t = Z(G) downward, whether a compatible
// antichain avoids every (t-1)-subset, stopping at the first success.  ft(G)
// with its disjoint packing is the floor.  On budget exhaustion the best
// bound found so far is returned with proven = false.
YNumber y_number(const Graph& g, const SearchBudget& budget = {},
                 std::int64_t fort_cap = kDefaultFortCap);

// An exchange obligation observed during the audit: the pair (f1, f2)
// sharing x needs a member inside (f1 | f2) \ {x}; pool_candidates lists
// every minimal fort that could ever satisfy it.
struct AuditRecord {
    VertexSet f1 = 0;
    VertexSet f2 = 0;
    int element = -1;
    std::vector<VertexSet> pool_candidates;

    bool operator<(const AuditRecord& o) const {
        if (f1 != o.f1) return f1 < o.f1;
        if (f2 != o.f2) return f2 < o.f2;
        return element < o.element;
    }
};

struct PetersenAuditResult {
    bool confirmed = false;  // no compatible subfamily reaches tau = 5
    std::optional<std::vector<VertexSet>> counterexample;
    std::int64_t nodes = 0;
    std::int64_t leaves = 0;
    std::int64_t pruned_cover = 0;
    std::int64_t pruned_pair = 0;
    // Obligations that killed a branch: none of the pool candidates was
    // still available.  Unique-candidate obligations that forced a fort into
    // every surviving superfamily are logged separately.
    std::vector<AuditRecord> violations;
    std::vector<AuditRecord> forced;
};

// Exhaustive scan over the subfamilies of the minimal Petersen forts: either
// confirms that every compatible subfamily has tau <= 4 or returns a
// counterexample family.
PetersenAuditResult petersen_incompatibility_audit();

struct BoundChain {
    int ft = 0;
    std::vector<VertexSet> ft_witness;
    int n_lower = 0;  // max of ft and the nullity of the packing construction
    std::optional<int> y;
    bool y_proven = false;
    std::vector<VertexSet> y_witness;
    int z = 0;
    VertexSet z_witness = 0;
};

// ft <= N_lower <= Y <= Z with witnesses; the inequality chain is asserted.
BoundChain bound_chain(const Graph& g, const SearchBudget& budget = {},
                       std::int64_t fort_cap = kDefaultFortCap);

}  // namespace forts

#endif
