#pragma once

#include "disthom/binop.hpp"

namespace disthom {

// Finite lattice described by its order relation.  leq is a full n x n
// boolean table; construction verifies (partial order, joins, meets).
struct Lattice {
    int n = 0;
    std::vector<uint8_t> leq;  // leq[a*n+b] <=> a <= b
    std::vector<uint8_t> join_table, meet_table;
    int bottom = -1, top = -1;

    bool le(int a, int b) const { return leq[static_cast<size_t>(a) * n + b] != 0; }
    int join(int a, int b) const { return join_table[static_cast<size_t>(a) * n + b]; }
    int meet(int a, int b) const { return meet_table[static_cast<size_t>(a) * n + b]; }

    static Lattice from_leq(int n, const std::vector<uint8_t>& leq);

    bool is_distributive() const;

    // canned examples
    static Lattice boolean_algebra(int k);  // subsets of a k-set, 2^k elements
    static Lattice chain(int n);
};

struct LatticeOps {
    BinOp join_op;  // a*b = a v b
    BinOp meet_op;  // a*b = a ^ b
    int L = 0;      // carrier size
    int J = 0;      // non-minimal join-irreducible count
};

// The pair (*_join, *_meet) of a distributive lattice, with the (L, J)
// statistics.  Throws not_a_lattice / not_distributive_lattice.
LatticeOps make_lattice_ops(const Lattice& lat);

int count_join_irreducibles(const Lattice& lat);  // non-minimal ones
int maximal_chain_length(const Lattice& lat);     // edges in a maximal chain from bottom

}  // namespace disthom
