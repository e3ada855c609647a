#include "disthom/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace disthom {

AbelianGroup AbelianGroup::from_factors(i64 free_rank, const std::vector<i64>& cyclic_orders) {
    AbelianGroup g;
    g.rank = free_rank;
    std::map<i64, std::vector<int>> prime_exps;  // prime -> exponents, one per factor
    for (i64 m : cyclic_orders) {
        if (m < 0) m = -m;
        if (m == 0) {
            ++g.rank;
            continue;
        }
        if (m == 1) continue;
        for (i64 p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                int e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                prime_exps[p].push_back(e);
            }
        if (m > 1) prime_exps[m].push_back(1);
    }
    size_t chain_len = 0;
    for (auto& [p, exps] : prime_exps) {
        std::sort(exps.begin(), exps.end(), std::greater<int>());
        chain_len = std::max(chain_len, exps.size());
    }
    // invariant factor k (from the back) collects the k-th largest power of
    // each prime
    std::vector<i64> chain(chain_len, 1);
    for (auto& [p, exps] : prime_exps)
        for (size_t k = 0; k < exps.size(); ++k) {
            i64 pw = 1;
            for (int e = 0; e < exps[k]; ++e) pw = checked_mul(pw, p);
            chain[chain_len - 1 - k] = checked_mul(chain[chain_len - 1 - k], pw);
        }
    g.torsion = std::move(chain);
    return g;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& o) const {
    std::vector<i64> all = torsion;
    all.insert(all.end(), o.torsion.begin(), o.torsion.end());
    return from_factors(rank + o.rank, all);
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    // print equal torsion factors with exponents, e.g. Z_2^3 + Z_4
    for (size_t i = 0; i < torsion.size();) {
        size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        if (!first) os << " + ";
        os << "Z_" << torsion[i];
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

std::string HomologyTable::to_string() const {
    std::ostringstream os;
    for (const auto& [n, g] : groups) os << "H_" << n << " = " << g.to_string() << "\n";
    return os.str();
}

}  // namespace disthom
