#include "disthom/oracle.hpp"

#include <numeric>

#include "disthom/errors.hpp"

namespace disthom {

i64 u_seq(i64 m, int n) {
    i64 u = 1;
    i64 pw = 1;
    for (int k = 1; k <= n; ++k) {
        pw = checked_mul(pw, m);
        u = checked_sub(pw, u);
    }
    return u;
}

static i64 ipow64(i64 b, int e) {
    i64 r = 1;
    while (e--) r = checked_mul(r, b);
    return r;
}

static i64 gcd2(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }
static i64 gcd3(i64 a, i64 b, i64 c) { return gcd2(gcd2(a, b), c); }
static i64 gcd4(i64 a, i64 b, i64 c, i64 d) { return gcd2(gcd3(a, b, c), d); }

static void push_power(std::vector<i64>& factors, i64 order, i64 count) {
    if (count < 0) throw dh_error("oracle produced a negative exponent (internal bug)");
    for (i64 i = 0; i < count; ++i) factors.push_back(order);
}

AbelianGroup oracle_thm66(i64 m, i64 gsize, int n) {
    if (gsize < 1 || gsize > m) throw hypothesis_violated("|g(X)| must be between 1 and |X|");
    return AbelianGroup::from_factors(checked_mul(gsize - 1, ipow64(m, n)), {});
}

AbelianGroup oracle_cor67(i64 m, i64 gsize, i64 d, int n) {
    if (gsize < 1 || gsize > m) throw hypothesis_violated("|g(X)| must be between 1 and |X|");
    if (d == 0) return AbelianGroup::from_factors(ipow64(m, n + 1), {});
    i64 torsion_count = checked_sub(ipow64(m, n + 1), checked_mul(gsize, u_seq(m, n)));
    std::vector<i64> fac;
    push_power(fac, d < 0 ? -d : d, torsion_count);
    return AbelianGroup::from_factors(checked_mul(gsize - 1, ipow64(m, n)), fac);
}

AbelianGroup oracle_point(i64 sigma, int n) {
    if (sigma == 0) return AbelianGroup::from_factors(1, {});
    if (n == 0) return AbelianGroup::from_factors(1, {});
    if (n % 2 == 0) return AbelianGroup{};
    return AbelianGroup::from_factors(0, {sigma});
}

AbelianGroup oracle_thm91_f0(i64 m, i64 a, i64 d, int n) {
    if (a == 0 && d == 0) throw hypothesis_violated("a or d must be nonzero");
    std::vector<i64> fac;
    push_power(fac, gcd2(a, d), n % 2 == 0 ? u_seq(m, n) - 1 : u_seq(m, n));
    return AbelianGroup::from_factors(0, fac);
}

AbelianGroup oracle_thm91_en(i64 m, i64 a, i64 d, int n) {
    (void)d;
    if (a == 0) throw hypothesis_violated("a must be nonzero");
    i64 sign = (n % 2 == 0) ? 1 : -1;
    std::vector<i64> fac;
    push_power(fac, a < 0 ? -a : a, u_seq(m, n + 1) - u_seq(m, n) + sign);
    return AbelianGroup::from_factors(0, fac);
}

AbelianGroup oracle_thm91_full(i64 m, i64 a, i64 d, int n) {
    if (a == 0) throw hypothesis_violated("a must be nonzero");
    if (a + d == 0) throw hypothesis_violated("a + d must be nonzero");
    std::vector<i64> fac;
    if (n == 0) {
        push_power(fac, a < 0 ? -a : a, m - 1);
        return AbelianGroup::from_factors(1, fac);
    }
    if (n % 2 == 0) {
        push_power(fac, a < 0 ? -a : a, u_seq(m, n + 1) - u_seq(m, n) + 1);
        push_power(fac, gcd2(a, d), u_seq(m, n) - 1);
        return AbelianGroup::from_factors(0, fac);
    }
    fac.push_back(a + d);
    push_power(fac, a < 0 ? -a : a, u_seq(m, n + 1) - u_seq(m, n) - 1);
    push_power(fac, gcd2(a, d), u_seq(m, n));
    return AbelianGroup::from_factors(0, fac);
}

AbelianGroup oracle_thm92_f0(i64 m, i64 a, i64 c, i64 d, int n) {
    if (a == 0 && c == 0 && d == 0) throw hypothesis_violated("a, c or d must be nonzero");
    std::vector<i64> fac;
    push_power(fac, gcd3(a, c, d), n % 2 == 0 ? u_seq(m, n) - 1 : u_seq(m, n));
    return AbelianGroup::from_factors(0, fac);
}

AbelianGroup oracle_thm92_en(i64 m, i64 a, i64 c, i64 d, int n) {
    (void)d;
    if (a == 0 && c == 0) throw hypothesis_violated("a or c must be nonzero");
    i64 sign = (n % 2 == 0) ? 1 : -1;
    std::vector<i64> fac;
    push_power(fac, gcd2(a, c), u_seq(m, n + 1) - u_seq(m, n) + sign);
    return AbelianGroup::from_factors(0, fac);
}

AbelianGroup oracle_thm92_full(i64 m, i64 a, i64 c, i64 d, int n) {
    if (a == 0 && c == 0) throw hypothesis_violated("a or c must be nonzero");
    if (a + c + d == 0) throw hypothesis_violated("a + c + d must be nonzero");
    std::vector<i64> fac;
    if (n == 0) {
        push_power(fac, gcd2(a, c), m - 1);
        return AbelianGroup::from_factors(1, fac);
    }
    if (n % 2 == 0) {
        push_power(fac, gcd2(a, c), u_seq(m, n + 1) - u_seq(m, n) + 1);
        push_power(fac, gcd3(a, c, d), u_seq(m, n) - 1);
        return AbelianGroup::from_factors(0, fac);
    }
    fac.push_back(a + c + d);
    push_power(fac, gcd2(a, c), u_seq(m, n + 1) - u_seq(m, n) - 1);
    push_power(fac, gcd3(a, c, d), u_seq(m, n));
    return AbelianGroup::from_factors(0, fac);
}

AbelianGroup oracle_prop93(i64 a, i64 b, i64 c, i64 d, int n) {
    (void)d;
    i64 g = gcd2(a + b, a + c);
    if (n == 0) return AbelianGroup::from_factors(1, {g});
    if (a + b == 0 && a + c == 0) return AbelianGroup::from_factors(2, {});
    return AbelianGroup::from_factors(0, {g});
}

AbelianGroup oracle_thm94(i64 a, i64 b, i64 c, i64 d, int n) {
    if (a + b + c + d == 0) throw hypothesis_violated("a+b+c+d must be nonzero");
    if (a + b == 0 && a + c == 0) throw hypothesis_violated("a+b or a+c must be nonzero");
    i64 g1 = gcd2(a + b, a + c), g2 = gcd3(a + b, a + c, c + d);
    i64 an = u_seq(2, n);
    std::vector<i64> fac;
    if (n % 2 == 0) {
        push_power(fac, g1, an - 1);
        push_power(fac, g2, an - 1);
        return AbelianGroup::from_factors(0, fac);
    }
    fac.push_back(a + b + c + d);
    push_power(fac, g1, an - 1);
    push_power(fac, g2, an);
    return AbelianGroup::from_factors(0, fac);
}

AbelianGroup oracle_thm95(i64 L, i64 J, i64 a, i64 b, i64 c, i64 d, int n) {
    if (a + b + c + d == 0) throw hypothesis_violated("a+b+c+d must be nonzero");
    if (a + b == 0 && a + c == 0) throw hypothesis_violated("a+b or a+c must be nonzero");
    if (a == 0 && b == 0 && c == 0) throw hypothesis_violated("one of a, b, c must be nonzero");
    i64 g1 = gcd2(a + b, a + c), g2 = gcd3(a + b, a + c, c + d);
    i64 g3 = gcd3(a, b, c), g4 = gcd4(a, b, c, d);
    std::vector<i64> fac;
    if (n == 0) {
        push_power(fac, g1, J);
        push_power(fac, g3, L - J - 1);
        return AbelianGroup::from_factors(1, fac);
    }
    i64 ju = checked_mul(J, u_seq(2, n));
    if (n % 2 == 0) {
        push_power(fac, g1, ju);
        push_power(fac, g3, u_seq(L, n + 1) - u_seq(L, n) + 1 - ju);
        push_power(fac, g2, ju - J);
        push_power(fac, g4, u_seq(L, n) - 1 - ju + J);
        return AbelianGroup::from_factors(0, fac);
    }
    fac.push_back(a + b + c + d);
    push_power(fac, g1, ju);
    push_power(fac, g3, u_seq(L, n + 1) - u_seq(L, n) - 1 - ju);
    push_power(fac, g2, ju);
    push_power(fac, g4, u_seq(L, n) - ju);
    return AbelianGroup::from_factors(0, fac);
}

HomologyTable formula_oracle(const OracleRequest& req) {
    HomologyTable t;
    t.complex_kind = "oracle:" + req.theorem;
    auto p = [&](const std::string& key) -> i64 {
        auto it = req.params.find(key);
        if (it == req.params.end()) throw input_error("oracle parameter missing: " + key);
        return it->second;
    };
    for (int n = req.n_lo; n <= req.n_hi; ++n) {
        if (req.theorem == "6.6")
            t.groups[n] = oracle_thm66(p("m"), p("g"), n);
        else if (req.theorem == "6.7")
            t.groups[n] = oracle_cor67(p("m"), p("g"), p("d"), n);
        else if (req.theorem == "9.1")
            t.groups[n] = oracle_thm91_full(p("m"), p("a"), p("d"), n);
        else if (req.theorem == "9.2")
            t.groups[n] = oracle_thm92_full(p("m"), p("a"), p("c"), p("d"), n);
        else if (req.theorem == "9.3")
            t.groups[n] = oracle_prop93(p("a"), p("b"), p("c"), p("d"), n);
        else if (req.theorem == "9.4")
            t.groups[n] = oracle_thm94(p("a"), p("b"), p("c"), p("d"), n);
        else if (req.theorem == "9.5")
            t.groups[n] = oracle_thm95(p("L"), p("J"), p("a"), p("b"), p("c"), p("d"), n);
        else if (req.theorem == "8.5iii")
            t.groups[n] = oracle_point(p("sigma"), n);
        else
            throw input_error("unknown theorem id: " + req.theorem);
    }
    return t;
}

}  // namespace disthom
