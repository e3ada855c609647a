#pragma once

#include <optional>

#include "disthom/binop.hpp"

namespace disthom {

// Ordered set of distinct operations on one carrier, with cached predicate
// flags.  Flags are filled by recompute(); callers that mutate ops must call
// it again.
struct OpSet {
    Carrier carrier;
    std::vector<BinOp> ops;

    bool is_distributive_set = false;
    bool is_monoid_closed = false;  // closed under compose and contains *_0
    bool all_idempotent = false;
    bool all_invertible = false;

    OpSet() = default;
    OpSet(Carrier c, std::vector<BinOp> o);

    bool contains(const BinOp& op) const;
    void recompute();
};

bool is_distributive_set(const std::vector<BinOp>& ops);

// witness pair (i, j) violating pairwise distributivity, if any
std::optional<std::pair<int, int>> distributivity_witness(const std::vector<BinOp>& ops);

// Smallest subset of Bin(X) containing seed plus *_0 and closed under
// compose.  Throws size_exceeded past max_size.  When the seed is a
// distributive set the closure is checked to be one too (Lemma-level
// guarantee; a failure here is a bug, not bad input).
OpSet monoid_closure(const OpSet& seed, int max_size);

// compose-commutativity witness: pair (f, g) with fg != gf, or nothing
std::optional<std::pair<int, int>> commutativity_witness(const std::vector<BinOp>& ops);

}  // namespace disthom
