#include "disthom/binop.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace disthom {

void Carrier::validate() const {
    if (size < 1) throw input_error("carrier size must be >= 1");
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != size)
            throw input_error("label count does not match carrier size");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != size) throw input_error("carrier labels must be distinct");
    }
}

BinOp::BinOp(Carrier c, std::vector<uint8_t> t) : carrier(std::move(c)), table(std::move(t)) {
    carrier.validate();
    size_t n = static_cast<size_t>(carrier.size);
    if (table.size() != n * n) throw input_error("Cayley table has wrong shape");
    for (uint8_t v : table)
        if (v >= carrier.size) throw input_error("Cayley table entry outside the carrier");
}

std::string BinOp::to_string() const {
    std::ostringstream os;
    for (int a = 0; a < n(); ++a) {
        for (int b = 0; b < n(); ++b) os << (b ? " " : "") << at(a, b);
        os << (a + 1 < n() ? "; " : "");
    }
    return os.str();
}

BinOp right_trivial_op(const Carrier& c) {
    std::vector<uint8_t> t(static_cast<size_t>(c.size) * c.size);
    for (int a = 0; a < c.size; ++a)
        for (int b = 0; b < c.size; ++b) t[static_cast<size_t>(a) * c.size + b] = static_cast<uint8_t>(a);
    return BinOp(c, std::move(t));
}

BinOp left_trivial_op(const Carrier& c) {
    std::vector<uint8_t> t(static_cast<size_t>(c.size) * c.size);
    for (int a = 0; a < c.size; ++a)
        for (int b = 0; b < c.size; ++b) t[static_cast<size_t>(a) * c.size + b] = static_cast<uint8_t>(b);
    return BinOp(c, std::move(t));
}

void require_same_carrier(const BinOp& f, const BinOp& g) {
    if (f.carrier.size != g.carrier.size) throw carrier_mismatch();
}

bool is_shelf(const BinOp& op) {
    int n = op.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op.at(op.at(a, b), c) != op.at(op.at(a, c), op.at(b, c))) return false;
    return true;
}

bool is_idempotent(const BinOp& op) {
    for (int a = 0; a < op.n(); ++a)
        if (op.at(a, a) != a) return false;
    return true;
}

bool is_invertible(const BinOp& op) {
    int n = op.n();
    std::vector<bool> hit(n);
    for (int b = 0; b < n; ++b) {
        std::fill(hit.begin(), hit.end(), false);
        for (int a = 0; a < n; ++a) hit[op.at(a, b)] = true;
        for (int v = 0; v < n; ++v)
            if (!hit[v]) return false;
    }
    return true;
}

bool is_associative(const BinOp& op) {
    int n = op.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op.at(op.at(a, b), c) != op.at(a, op.at(b, c))) return false;
    return true;
}

bool is_involutive(const BinOp& op) {
    int n = op.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (op.at(op.at(a, b), b) != a) return false;
    return true;
}

StructureClass classify(const BinOp& op) {
    StructureClass s;
    s.shelf = is_shelf(op);
    s.idempotent = is_idempotent(op);
    s.invertible = is_invertible(op);
    s.associative = is_associative(op);
    s.spindle = s.shelf && s.idempotent;
    s.rack = s.shelf && s.invertible;
    s.quandle = s.rack && s.idempotent;
    s.kei = s.quandle && is_involutive(op);
    return s;
}

std::string StructureClass::to_string() const {
    std::vector<const char*> tags;
    if (shelf) tags.push_back("shelf");
    if (spindle) tags.push_back("spindle");
    if (rack) tags.push_back("rack");
    if (quandle) tags.push_back("quandle");
    if (kei) tags.push_back("kei");
    if (associative) tags.push_back("associative");
    if (idempotent) tags.push_back("idempotent");
    if (invertible) tags.push_back("invertible");
    std::string out = "{";
    for (size_t i = 0; i < tags.size(); ++i) out += std::string(i ? ", " : "") + tags[i];
    return out + "}";
}

BinOp compose(const BinOp& f, const BinOp& g) {
    require_same_carrier(f, g);
    int n = f.n();
    BinOp r = f;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r.set(a, b, g.at(f.at(a, b), b));
    return r;
}

BinOp invert(const BinOp& op) {
    int n = op.n();
    BinOp r = op;
    std::vector<int> inv(n);
    for (int b = 0; b < n; ++b) {
        std::fill(inv.begin(), inv.end(), -1);
        for (int a = 0; a < n; ++a) {
            int v = op.at(a, b);
            if (inv[v] != -1) throw not_invertible(b);
            inv[v] = a;
        }
        for (int v = 0; v < n; ++v) r.set(v, b, inv[v]);
    }
    return r;
}

bool distributes_over(const BinOp& alpha, const BinOp& beta) {
    require_same_carrier(alpha, beta);
    int n = alpha.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (beta.at(alpha.at(a, b), c) != alpha.at(beta.at(a, c), beta.at(b, c))) return false;
    return true;
}

bool is_distributive_pair(const BinOp& f, const BinOp& g) {
    require_same_carrier(f, g);
    return is_shelf(f) && is_shelf(g) && distributes_over(f, g) && distributes_over(g, f);
}

bool is_weakly_distributive_pair(const BinOp& f, const BinOp& g) {
    require_same_carrier(f, g);
    if (!is_shelf(f) || !is_shelf(g)) return false;
    int n = f.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int l1 = g.at(f.at(a, b), c), l2 = f.at(g.at(a, b), c);
                int r1 = f.at(g.at(a, c), g.at(b, c)), r2 = g.at(f.at(a, c), f.at(b, c));
                bool eq = (l1 == r1 && l2 == r2) || (l1 == r2 && l2 == r1);
                if (!eq) return false;
            }
    return true;
}

bool is_weakly_associative_pair(const BinOp& f, const BinOp& g) {
    require_same_carrier(f, g);
    if (!is_associative(f) || !is_associative(g)) return false;
    int n = f.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int l1 = g.at(f.at(a, b), c), l2 = f.at(g.at(a, b), c);
                int r1 = g.at(a, f.at(b, c)), r2 = f.at(a, g.at(b, c));
                bool eq = (l1 == r1 && l2 == r2) || (l1 == r2 && l2 == r1);
                if (!eq) return false;
            }
    return true;
}

static void check_endomap(const Carrier& c, const std::vector<int>& m) {
    if (static_cast<int>(m.size()) != c.size) throw input_error("endomap has wrong domain size");
    for (int v : m)
        if (v < 0 || v >= c.size) throw input_error("endomap value outside the carrier");
}

BinOp make_g_shelf(const Carrier& c, const std::vector<int>& g) {
    check_endomap(c, g);
    for (int x = 0; x < c.size; ++x)
        if (g[g[x]] != g[x]) throw not_idempotent_endomap(x);
    std::vector<uint8_t> t(static_cast<size_t>(c.size) * c.size);
    for (int a = 0; a < c.size; ++a)
        for (int b = 0; b < c.size; ++b) t[static_cast<size_t>(a) * c.size + b] = static_cast<uint8_t>(g[b]);
    return BinOp(c, std::move(t));
}

BinOp make_f_shelf(const Carrier& c, const std::vector<int>& f) {
    check_endomap(c, f);
    std::vector<uint8_t> t(static_cast<size_t>(c.size) * c.size);
    for (int a = 0; a < c.size; ++a)
        for (int b = 0; b < c.size; ++b) t[static_cast<size_t>(a) * c.size + b] = static_cast<uint8_t>(f[a]);
    return BinOp(c, std::move(t));
}

BinOp make_retraction_shelf(const Carrier& c, const std::vector<int>& r) { return make_g_shelf(c, r); }

GroupTable GroupTable::from_table(const BinOp& mul) {
    if (!is_associative(mul)) throw not_a_group("multiplication is not associative");
    int n = mul.n();
    int e = -1;
    for (int cand = 0; cand < n; ++cand) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul.at(cand, x) == x && mul.at(x, cand) == x;
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw not_a_group("no two-sided identity");
    std::vector<int> inv(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (mul.at(x, y) == e && mul.at(y, x) == e) { inv[x] = y; break; }
        if (inv[x] < 0) throw not_a_group("element " + std::to_string(x) + " has no inverse");
    }
    return GroupTable{mul, e, std::move(inv)};
}

BinOp make_group_shelf(const GroupTable& g, const std::vector<int>& h, GroupShelfVariant variant) {
    const BinOp& m = g.mul;
    int n = m.n();
    check_endomap(m.carrier, h);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (h[m.at(a, b)] != m.at(h[a], h[b])) throw not_endomorphism(a, b);
    if (variant == GroupShelfVariant::iii)
        for (int x = 0; x < n; ++x)
            if (h[h[x]] != h[x]) throw idempotency_required();
    BinOp r = m;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int v;
            switch (variant) {
                case GroupShelfVariant::i: v = m.at(h[m.at(a, g.inverse[b])], b); break;
                case GroupShelfVariant::ii: v = m.at(h[m.at(g.inverse[b], a)], b); break;
                default: v = m.at(h[m.at(b, g.inverse[a])], b); break;
            }
            r.set(a, b, v);
        }
    return r;
}

std::pair<bool, bool> is_generalized_lattice(const BinOp& f, const BinOp& g) {
    require_same_carrier(f, g);
    int n = f.n();
    bool base = is_shelf(f) && is_shelf(g);
    for (int a = 0; a < n && base; ++a)
        for (int b = 0; b < n && base; ++b) {
            if (g.at(f.at(a, b), b) != b || f.at(g.at(a, b), b) != b) base = false;  // absorption
            if (f.at(f.at(a, b), b) != f.at(a, b) || g.at(g.at(a, b), b) != g.at(a, b)) base = false;
        }
    bool mutual = distributes_over(f, g) && distributes_over(g, f);
    return {base, mutual};
}

BinOp relabel(const BinOp& op, const std::vector<int>& p) {
    int n = op.n();
    BinOp r = op;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r.set(p[a], p[b], p[op.at(a, b)]);
    return r;
}

}  // namespace disthom
