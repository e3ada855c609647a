#pragma once

#include <cstdint>
#include <optional>

#include "disthom/opset.hpp"

namespace disthom {

enum class OpCategory { all_ops, invertible_only, idempotent_only, quandle_ops };

OpCategory category_from_string(const std::string& s);
std::string category_to_string(OpCategory c);

struct SearchBudget {
    std::uint64_t node_limit = 100'000'000;
    double wall_seconds = 600.0;
};

struct SearchSpec {
    int carrier_size = 2;  // hard cap 6
    OpCategory category = OpCategory::all_ops;
    bool require_monoid = true;
    bool isomorphism_dedup = false;
    SearchBudget budget;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    double seconds = 0.0;
};

struct SearchReport {
    SearchSpec spec;
    std::vector<OpSet> maximal_sets;
    std::vector<std::pair<int, int>> poset_edges;  // (sub, super) containments among reported sets
    std::vector<bool> commutativity_audit;         // per set: compose-commutative
    SearchStats stats;
    bool complete = true;  // false when the budget ran out
};

// All operations on the carrier passing the category filter, in
// lexicographic table order.  Every member of a distributive set is a shelf,
// so the ground set never includes non-shelves.
std::vector<BinOp> enumerate_candidate_ops(const SearchSpec& spec);

// Maximal distributive sets (maximal distributive submonoids when
// require_monoid).  A budget overrun yields a partial report flagged
// incomplete instead of an error.
SearchReport find_maximal_distributive_sets(const SearchSpec& spec);

// per-set commutativity confirmation with a witness pair when it fails
std::vector<std::pair<OpSet, std::optional<std::pair<int, int>>>> audit_commutativity(const SearchReport& report);

// canonical form of a set of tables under carrier relabeling
std::vector<std::vector<uint8_t>> canonical_form(const std::vector<BinOp>& ops);

}  // namespace disthom
