#include "disthom/lattice.hpp"

#include <algorithm>

namespace disthom {

Lattice Lattice::from_leq(int n, const std::vector<uint8_t>& leq) {
    if (n < 1 || static_cast<int>(leq.size()) != n * n) throw not_a_lattice("order table has wrong shape");
    Lattice lat;
    lat.n = n;
    lat.leq = leq;
    for (int a = 0; a < n; ++a)
        if (!lat.le(a, a)) throw not_a_lattice("order is not reflexive");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a != b && lat.le(a, b) && lat.le(b, a)) throw not_a_lattice("order is not antisymmetric");
            for (int c = 0; c < n; ++c)
                if (lat.le(a, b) && lat.le(b, c) && !lat.le(a, c)) throw not_a_lattice("order is not transitive");
        }
    auto bound = [&](int a, int b, bool upper) -> int {
        int best = -1;
        for (int c = 0; c < n; ++c) {
            bool is_bound = upper ? (lat.le(a, c) && lat.le(b, c)) : (lat.le(c, a) && lat.le(c, b));
            if (!is_bound) continue;
            if (best < 0)
                best = c;
            else if (upper ? lat.le(c, best) : lat.le(best, c))
                best = c;
        }
        if (best < 0) return -1;
        // the chosen bound must be comparable to every other bound
        for (int c = 0; c < n; ++c) {
            bool is_bound = upper ? (lat.le(a, c) && lat.le(b, c)) : (lat.le(c, a) && lat.le(c, b));
            if (is_bound && !(upper ? lat.le(best, c) : lat.le(c, best))) return -1;
        }
        return best;
    };
    lat.join_table.assign(static_cast<size_t>(n) * n, 0);
    lat.meet_table.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int j = bound(a, b, true), m = bound(a, b, false);
            if (j < 0) throw not_a_lattice("missing join");
            if (m < 0) throw not_a_lattice("missing meet");
            lat.join_table[static_cast<size_t>(a) * n + b] = static_cast<uint8_t>(j);
            lat.meet_table[static_cast<size_t>(a) * n + b] = static_cast<uint8_t>(m);
        }
    for (int a = 0; a < n; ++a) {
        bool bot = true, top = true;
        for (int b = 0; b < n; ++b) {
            bot = bot && lat.le(a, b);
            top = top && lat.le(b, a);
        }
        if (bot) lat.bottom = a;
        if (top) lat.top = a;
    }
    return lat;
}

bool Lattice::is_distributive() const {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
    return true;
}

Lattice Lattice::boolean_algebra(int k) {
    int n = 1 << k;
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) leq[static_cast<size_t>(a) * n + b] = (a & b) == a;
    return from_leq(n, leq);
}

Lattice Lattice::chain(int n) {
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) leq[static_cast<size_t>(a) * n + b] = a <= b;
    return from_leq(n, leq);
}

int count_join_irreducibles(const Lattice& lat) {
    int count = 0;
    for (int a = 0; a < lat.n; ++a) {
        if (a == lat.bottom) continue;
        bool irreducible = true;
        for (int b = 0; b < lat.n && irreducible; ++b)
            for (int c = 0; c < lat.n && irreducible; ++c)
                if (lat.join(b, c) == a && b != a && c != a) irreducible = false;
        if (irreducible) ++count;
    }
    return count;
}

int maximal_chain_length(const Lattice& lat) {
    // longest chain bottom -> top; in a finite distributive lattice every
    // maximal chain has this length
    std::vector<int> depth(lat.n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < lat.n; ++a)
            for (int b = 0; b < lat.n; ++b)
                if (a != b && lat.le(a, b) && depth[b] < depth[a] + 1) {
                    depth[b] = depth[a] + 1;
                    changed = true;
                }
    }
    return lat.top >= 0 ? depth[lat.top] : *std::max_element(depth.begin(), depth.end());
}

LatticeOps make_lattice_ops(const Lattice& lat) {
    if (!lat.is_distributive()) throw not_distributive_lattice();
    Carrier c(lat.n);
    std::vector<uint8_t> jt(lat.join_table), mt(lat.meet_table);
    LatticeOps out{BinOp(c, std::move(jt)), BinOp(c, std::move(mt)), lat.n, count_join_irreducibles(lat)};
    return out;
}

}  // namespace disthom
