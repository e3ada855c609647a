#include "disthom/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace disthom {

OpCategory category_from_string(const std::string& s) {
    if (s == "all" || s == "all-ops") return OpCategory::all_ops;
    if (s == "invertible" || s == "invertible-only") return OpCategory::invertible_only;
    if (s == "idempotent" || s == "idempotent-only") return OpCategory::idempotent_only;
    if (s == "quandle" || s == "quandle-ops") return OpCategory::quandle_ops;
    throw input_error("unknown search category: " + s);
}

std::string category_to_string(OpCategory c) {
    switch (c) {
        case OpCategory::all_ops: return "all-ops";
        case OpCategory::invertible_only: return "invertible-only";
        case OpCategory::idempotent_only: return "idempotent-only";
        default: return "quandle-ops";
    }
}

namespace {

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// Column-wise DFS over adjoint maps.  The shelf law in column form reads
// phi_c phi_b = phi_{phi_c(b)} phi_c, checkable as soon as the three columns
// involved are assigned.
struct ColumnSearch {
    int n;
    OpCategory cat;
    const SearchBudget& budget;
    Clock clock;
    std::uint64_t nodes = 0;
    std::vector<std::vector<int>> col_candidates;  // all allowed single columns
    std::vector<int> chosen;                       // candidate index per column
    std::vector<BinOp> out;

    ColumnSearch(int n_, OpCategory c, const SearchBudget& b) : n(n_), cat(c), budget(b) {
        int total = 1;
        for (int i = 0; i < n; ++i) total *= n;
        bool need_perm = cat == OpCategory::invertible_only || cat == OpCategory::quandle_ops;
        std::vector<int> map(n, 0);
        for (int idx = 0; idx < total; ++idx) {
            if (!need_perm || is_permutation(map)) col_candidates.push_back(map);
            for (int p = n - 1; p >= 0; --p) {
                if (++map[p] < n) break;
                map[p] = 0;
            }
        }
    }

    static bool is_permutation(const std::vector<int>& m) {
        std::vector<bool> hit(m.size(), false);
        for (int v : m) {
            if (hit[v]) return false;
            hit[v] = true;
        }
        return true;
    }

    bool column_ok(int c, const std::vector<int>& phi) const {
        bool need_idem = cat == OpCategory::idempotent_only || cat == OpCategory::quandle_ops;
        return !need_idem || phi[c] == c;
    }

    // check every shelf constraint whose three columns are assigned and
    // involve the newly placed column k
    bool constraints_ok(int k, std::vector<const std::vector<int>*>& cols) const {
        for (int b = 0; b <= k; ++b)
            for (int c = 0; c <= k; ++c) {
                if (b != k && c != k && (*cols[c])[b] != k) continue;
                int t = (*cols[c])[b];
                if (t > k) continue;
                const std::vector<int>&pb = *cols[b], &pc = *cols[c], &pt = *cols[t];
                for (int a = 0; a < n; ++a)
                    if (pc[pb[a]] != pt[pc[a]]) return false;
            }
        return true;
    }

    void run() {
        std::vector<const std::vector<int>*> cols(n, nullptr);
        dfs(0, cols);
        std::sort(out.begin(), out.end());
    }

    void dfs(int k, std::vector<const std::vector<int>*>& cols) {
        if (k == n) {
            Carrier c(n);
            std::vector<uint8_t> t(static_cast<size_t>(n) * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = static_cast<uint8_t>((*cols[b])[a]);
            out.emplace_back(c, std::move(t));
            return;
        }
        for (const auto& cand : col_candidates) {
            if (++nodes > budget.node_limit || clock.elapsed() > budget.wall_seconds) throw budget_exceeded();
            if (!column_ok(k, cand)) continue;
            cols[k] = &cand;
            if (constraints_ok(k, cols)) dfs(k + 1, cols);
            cols[k] = nullptr;
        }
    }
};

using Bits = std::vector<std::uint64_t>;

bool bit_get(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
void bit_set(Bits& b, int i) { b[i >> 6] |= (1ull << (i & 63)); }

}  // namespace

std::vector<BinOp> enumerate_candidate_ops(const SearchSpec& spec) {
    if (spec.carrier_size < 1 || spec.carrier_size > 6)
        throw input_error("carrier size must be between 1 and 6");
    ColumnSearch cs(spec.carrier_size, spec.category, spec.budget);
    cs.run();
    return cs.out;
}

std::vector<std::vector<uint8_t>> canonical_form(const std::vector<BinOp>& ops) {
    if (ops.empty()) return {};
    int n = ops[0].n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<uint8_t>> best;
    do {
        std::vector<std::vector<uint8_t>> tabs;
        tabs.reserve(ops.size());
        for (const BinOp& op : ops) tabs.push_back(relabel(op, perm).table);
        std::sort(tabs.begin(), tabs.end());
        if (best.empty() || tabs < best) best = tabs;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

struct MonoidSearch {
    const std::vector<BinOp>& cand;
    const std::vector<Bits>& compat;
    std::map<std::vector<uint8_t>, int> index_of;  // table -> candidate index
    const SearchBudget& budget;
    Clock clock;
    std::uint64_t nodes = 0, prunes = 0;
    bool complete = true;
    std::set<std::vector<int>> visited;
    std::set<std::vector<int>> maximal;

    MonoidSearch(const std::vector<BinOp>& c, const std::vector<Bits>& g, const SearchBudget& b)
        : cand(c), compat(g), budget(b) {
        for (size_t i = 0; i < cand.size(); ++i) index_of[cand[i].table] = static_cast<int>(i);
    }

    // closure of a member set under compose; members are candidate indices
    std::vector<int> closure(std::vector<int> m) const {
        std::set<int> s(m.begin(), m.end());
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(s.begin(), s.end());
            for (int i : cur)
                for (int j : cur) {
                    BinOp prod = compose(cand[i], cand[j]);
                    auto it = index_of.find(prod.table);
                    if (it == index_of.end())
                        throw dh_error("closure left the candidate ground set (internal bug)");
                    if (s.insert(it->second).second) grew = true;
                }
        }
        return {s.begin(), s.end()};
    }

    std::vector<int> extensions(const std::vector<int>& m) const {
        std::vector<int> ext;
        for (int g = 0; g < static_cast<int>(cand.size()); ++g) {
            if (std::binary_search(m.begin(), m.end(), g)) continue;
            bool ok = true;
            for (int x : m)
                if (!bit_get(compat[g], x)) {
                    ok = false;
                    break;
                }
            if (ok) ext.push_back(g);
        }
        return ext;
    }

    void dfs(const std::vector<int>& m) {
        if (++nodes > budget.node_limit || clock.elapsed() > budget.wall_seconds) {
            complete = false;
            return;
        }
        if (!visited.insert(m).second) {
            ++prunes;
            return;
        }
        std::vector<int> ext = extensions(m);
        if (ext.empty()) {
            maximal.insert(m);
            return;
        }
        for (int g : ext) {
            std::vector<int> next = m;
            next.push_back(g);
            dfs(closure(next));
            if (!complete) return;
        }
    }
};

// Bron-Kerbosch with pivoting for the plain (non-monoid) maximal sets
struct CliqueSearch {
    const std::vector<Bits>& compat;
    int n;
    const SearchBudget& budget;
    Clock clock;
    std::uint64_t nodes = 0, prunes = 0;
    bool complete = true;
    std::vector<std::vector<int>> maximal;

    CliqueSearch(const std::vector<Bits>& g, const SearchBudget& b)
        : compat(g), n(static_cast<int>(g.size())), budget(b) {}

    void run() {
        std::vector<int> r, p(n), x;
        for (int i = 0; i < n; ++i) p[i] = i;
        expand(r, p, x);
    }

    void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (++nodes > budget.node_limit || clock.elapsed() > budget.wall_seconds) {
            complete = false;
            return;
        }
        if (p.empty() && x.empty()) {
            maximal.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        for (int u : p) {
            int deg = 0;
            for (int v : p)
                if (bit_get(compat[u], v)) ++deg;
            if (deg > best) {
                best = deg;
                pivot = u;
            }
        }
        for (int u : x) {
            int deg = 0;
            for (int v : p)
                if (bit_get(compat[u], v)) ++deg;
            if (deg > best) {
                best = deg;
                pivot = u;
            }
        }
        std::vector<int> todo;
        for (int v : p)
            if (pivot < 0 || !bit_get(compat[pivot], v)) todo.push_back(v);
        for (int v : todo) {
            r.push_back(v);
            std::vector<int> p2, x2;
            for (int w : p)
                if (bit_get(compat[v], w)) p2.push_back(w);
            for (int w : x)
                if (bit_get(compat[v], w)) x2.push_back(w);
            expand(r, p2, x2);
            r.pop_back();
            if (!complete) {
                ++prunes;
                return;
            }
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }
};

}  // namespace

SearchReport find_maximal_distributive_sets(const SearchSpec& spec) {
    SearchReport rep;
    rep.spec = spec;
    Clock clock;
    std::vector<BinOp> cand;
    try {
        cand = enumerate_candidate_ops(spec);
    } catch (const budget_exceeded&) {
        rep.complete = false;
        rep.stats.seconds = clock.elapsed();
        return rep;
    }
    int m = static_cast<int>(cand.size());
    int words = (m + 63) / 64;
    std::vector<Bits> compat(m, Bits(words, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            bool ok = i == j || (distributes_over(cand[i], cand[j]) && distributes_over(cand[j], cand[i]));
            if (ok) {
                bit_set(compat[i], j);
                bit_set(compat[j], i);
            }
        }

    std::vector<std::vector<int>> found;
    std::uint64_t nodes = 0, prunes = 0;
    bool complete = true;
    if (spec.require_monoid) {
        MonoidSearch ms(cand, compat, spec.budget);
        BinOp id = right_trivial_op(Carrier(spec.carrier_size));
        auto it = ms.index_of.find(id.table);
        if (it == ms.index_of.end()) throw dh_error("identity operation missing from ground set (internal bug)");
        ms.dfs({it->second});
        found.assign(ms.maximal.begin(), ms.maximal.end());
        nodes = ms.nodes;
        prunes = ms.prunes;
        complete = ms.complete;
    } else {
        CliqueSearch cs(compat, spec.budget);
        cs.run();
        for (auto& c : cs.maximal) {
            std::sort(c.begin(), c.end());
            found.push_back(c);
        }
        std::sort(found.begin(), found.end());
        nodes = cs.nodes;
        prunes = cs.prunes;
        complete = cs.complete;
    }

    if (spec.isomorphism_dedup) {
        std::set<std::vector<std::vector<uint8_t>>> seen;
        std::vector<std::vector<int>> kept;
        for (const auto& mset : found) {
            std::vector<BinOp> ops;
            for (int i : mset) ops.push_back(cand[i]);
            if (seen.insert(canonical_form(ops)).second) kept.push_back(mset);
        }
        found = std::move(kept);
    }

    for (const auto& mset : found) {
        std::vector<BinOp> ops;
        for (int i : mset) ops.push_back(cand[i]);
        OpSet os(Carrier(spec.carrier_size), std::move(ops));
        if (!os.is_distributive_set) throw dh_error("reported set fails the distributive check (internal bug)");
        if (spec.require_monoid && !os.is_monoid_closed)
            throw dh_error("reported set is not a closed monoid (internal bug)");
        rep.maximal_sets.push_back(std::move(os));
    }
    for (size_t i = 0; i < rep.maximal_sets.size(); ++i)
        rep.commutativity_audit.push_back(!commutativity_witness(rep.maximal_sets[i].ops).has_value());
    for (size_t i = 0; i < rep.maximal_sets.size(); ++i)
        for (size_t j = 0; j < rep.maximal_sets.size(); ++j) {
            if (i == j) continue;
            const auto& a = rep.maximal_sets[i].ops;
            const auto& b = rep.maximal_sets[j].ops;
            bool subset = std::all_of(a.begin(), a.end(), [&](const BinOp& op) {
                return std::find(b.begin(), b.end(), op) != b.end();
            });
            if (subset && a.size() < b.size()) rep.poset_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    rep.stats.nodes = nodes;
    rep.stats.prunes = prunes;
    rep.stats.seconds = clock.elapsed();
    rep.complete = complete;
    return rep;
}

std::vector<std::pair<OpSet, std::optional<std::pair<int, int>>>> audit_commutativity(const SearchReport& report) {
    std::vector<std::pair<OpSet, std::optional<std::pair<int, int>>>> out;
    for (const OpSet& s : report.maximal_sets) out.emplace_back(s, commutativity_witness(s.ops));
    return out;
}

}  // namespace disthom
