#pragma once

#include <map>
#include <string>
#include <vector>

#include "disthom/matrix.hpp"

namespace disthom {

// Finitely generated abelian group in canonical form: free rank plus a
// divisor chain d1 | d2 | ... with every d >= 2.
struct AbelianGroup {
    i64 rank = 0;
    std::vector<i64> torsion;

    // Build from an arbitrary list of cyclic factors Z_m (m may be 0 for a
    // free factor, 1 for a trivial one, or negative); canonicalizes into the
    // invariant-factor chain.
    static AbelianGroup from_factors(i64 free_rank, const std::vector<i64>& cyclic_orders);

    AbelianGroup direct_sum(const AbelianGroup& o) const;
    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

    std::string to_string() const;
};

struct HomologyTable {
    std::string complex_kind;
    std::map<int, AbelianGroup> groups;
    std::vector<std::pair<int, i64>> annihilator_certificates;  // (degree, annihilator)

    bool operator==(const HomologyTable& o) const { return groups == o.groups; }
    std::string to_string() const;
};

}  // namespace disthom
