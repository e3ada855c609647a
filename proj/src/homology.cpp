#include "disthom/homology.hpp"

#include <algorithm>

#include "disthom/snf.hpp"

namespace disthom {

static std::vector<i64> boundary_divisors(const GradedComplex& cx, int d) {
    if (d <= cx.n_min || d > cx.n_max) return {};
    return smith_divisors(cx.boundary(d));
}

AbelianGroup homology(const GradedComplex& cx, int n) {
    if (n < cx.n_min || n + 1 > cx.n_max) throw degree_out_of_range();
    auto lower = boundary_divisors(cx, n);
    auto upper = boundary_divisors(cx, n + 1);
    i64 rank = cx.rank(n) - static_cast<i64>(lower.size()) - static_cast<i64>(upper.size());
    return AbelianGroup::from_factors(rank, upper);
}

HomologyTable homology_table(const GradedComplex& cx, int lo, int hi) {
    if (lo < cx.n_min || hi + 1 > cx.n_max) throw degree_out_of_range();
    HomologyTable t;
    t.complex_kind = cx.kind();
    std::map<int, std::vector<i64>> divs;
    for (int d = lo; d <= hi + 1; ++d) divs[d] = boundary_divisors(cx, d);
    for (int n = lo; n <= hi; ++n) {
        i64 rank = cx.rank(n) - static_cast<i64>(divs[n].size()) - static_cast<i64>(divs[n + 1].size());
        t.groups[n] = AbelianGroup::from_factors(rank, divs[n + 1]);
    }
    return t;
}

static bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int homology_dim_mod_p(const GradedComplex& cx, int n, i64 p) {
    if (!is_prime(p)) throw input_error("modulus must be prime");
    if (n < cx.n_min || n + 1 > cx.n_max) throw degree_out_of_range();
    int rk_lower = (n > cx.n_min) ? rank_mod_p(cx.boundary(n), p) : 0;
    int rk_upper = rank_mod_p(cx.boundary(n + 1), p);
    return cx.rank(n) - rk_lower - rk_upper;
}

int expected_dim_mod_p(const AbelianGroup& hn, const AbelianGroup& hn_minus_1, i64 p) {
    auto count_p = [p](const AbelianGroup& g) {
        int c = 0;
        for (i64 d : g.torsion)
            if (d % p == 0) ++c;
        return c;
    };
    return static_cast<int>(hn.rank) + count_p(hn) + count_p(hn_minus_1);
}

AnnihilatorCertificate annihilator_check(const GradedComplex& cx, const MultiTermSystem& sys,
                                         const std::vector<int>& orbit) {
    if (cx.family != "distributive" || cx.variant != "augmented")
        throw input_error("annihilator certificates need an augmented distributive complex");
    verify_right_orbit(sys.ops, orbit);
    int X = cx.carrier_size;
    AnnihilatorCertificate cert;
    i64 scale = checked_mul(static_cast<i64>(orbit.size()), sys.sigma());
    cert.annihilator = scale;

    // h_{-1} : C_{-1} -> C_0 sends 1 to Sigma-weighted orbit indicator
    IMat h_prev(X, 1);
    for (int a : orbit) h_prev.at(a, 0) = sys.sigma();
    cert.verified = true;
    // bottom edge: boundary(0) h_{-1} = |A| Sigma on C_{-1}
    if ((cx.boundary(0) * h_prev) != IMat::identity(1).scaled(scale)) cert.verified = false;
    for (int n = 0; n + 1 <= cx.n_max; ++n) {
        IMat h_n = orbit_homotopy_dist(X, orbit, n);
        IMat lhs = cx.boundary(n + 1) * h_n + h_prev * cx.boundary(n);
        if (lhs != IMat::identity(cx.rank(n)).scaled(scale)) cert.verified = false;
        cert.degrees.push_back(n);
        cert.homotopy.push_back(h_n);
        h_prev = std::move(h_n);
    }
    return cert;
}

AnnihilatorCertificate annihilator_check_group(const GradedComplex& cx, const BinOp& op,
                                               const std::vector<int>& orbit) {
    if (cx.family != "group" || cx.variant != "full")
        throw input_error("group annihilator certificates run on the full group complex");
    verify_right_orbit({op}, orbit);
    int X = cx.carrier_size;
    AnnihilatorCertificate cert;
    cert.annihilator = static_cast<i64>(orbit.size());
    cert.verified = true;
    IMat h_prev = orbit_homotopy_group(X, orbit, 0);
    for (int n = 1; n + 1 <= cx.n_max; ++n) {
        IMat h_n = orbit_homotopy_group(X, orbit, n);
        IMat lhs = cx.boundary(n + 1) * h_n + h_prev * cx.boundary(n);
        if (lhs != IMat::identity(cx.rank(n)).scaled(cert.annihilator)) cert.verified = false;
        cert.degrees.push_back(n);
        cert.homotopy.push_back(h_n);
        h_prev = std::move(h_n);
    }
    return cert;
}

bool SplitReport::all_pass() const {
    return std::all_of(lines.begin(), lines.end(), [](const SplitLine& l) { return l.pass; });
}

SplitReport splitting_check(const MultiTermSystem& sys, int n_max, int point_t) {
    if (!sys.all_idempotent()) throw not_a_spindle();
    SplitReport rep;
    GradedComplex full = build_distributive_complex(sys, n_max, false);
    GradedComplex deg = subcomplex_degenerate(full);
    GradedComplex norm = quotient(full, deg);
    GradedComplex point = subcomplex_point(full, sys, point_t);
    GradedComplex rel = quotient(full, point);
    GradedComplex early = subcomplex_early_degenerate(full);
    // reduced early degenerate F0/{t}: tuples with x0=x1, except the constant
    // t tuple
    GradedComplex f0_red = quotient(early, subcomplex_point(early, sys, point_t));
    // reduced early normalized C^{eN}(X,{t}) = C(X,{t}) / (F0,{t})
    GradedComplex en_red = quotient(rel, f0_red);

    HomologyTable h_full = homology_table(full, 0, n_max - 1);
    HomologyTable h_deg = homology_table(deg, 0, n_max - 1);
    HomologyTable h_norm = homology_table(norm, 0, n_max - 1);
    HomologyTable h_point = homology_table(point, 0, n_max - 1);
    HomologyTable h_rel = homology_table(rel, 0, n_max - 1);
    HomologyTable h_f0 = homology_table(f0_red, 0, n_max - 1);
    HomologyTable h_en = homology_table(en_red, 0, n_max - 1);

    for (int n = 0; n <= n_max - 1; ++n) {
        rep.lines.push_back({"H=H^D+H^Norm", n, h_full.groups[n], h_deg.groups[n].direct_sum(h_norm.groups[n]),
                             h_full.groups[n] == h_deg.groups[n].direct_sum(h_norm.groups[n])});
        rep.lines.push_back({"H=H(pt)+H(X,pt)", n, h_full.groups[n], h_point.groups[n].direct_sum(h_rel.groups[n]),
                             h_full.groups[n] == h_point.groups[n].direct_sum(h_rel.groups[n])});
        AbelianGroup three = h_point.groups[n].direct_sum(h_f0.groups[n]).direct_sum(h_en.groups[n]);
        rep.lines.push_back({"H=H(pt)+H(F0,pt)+H(eN)", n, h_full.groups[n], three, h_full.groups[n] == three});
    }
    return rep;
}

bool lemma87_identities(const MultiTermSystem& sys, int n) {
    if (!sys.all_idempotent()) throw not_a_spindle();
    if (n < 1) throw degree_out_of_range();
    int X = sys.carrier.size;
    IMat s0_n = s0_map(X, n);
    IMat lhs = dist_boundary(sys.ops, sys.weights, n + 1) * s0_n +
               s0_map(X, n - 1) * dist_boundary(sys.ops, sys.weights, n);
    IMat s0p0 = s0_map(X, n - 1) * p0_map(X, n);
    if (lhs != s0p0.scaled(sys.sigma())) return false;
    if (p0_map(X, n + 1) * s0_n != IMat::identity(s0_n.cols)) return false;
    return true;
}

bool presimplicial_check_dist(const MultiTermSystem& sys, int n) {
    for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
            IMat lhs = dist_face(sys.ops, sys.weights, n - 1, i) * dist_face(sys.ops, sys.weights, n, j);
            IMat rhs = dist_face(sys.ops, sys.weights, n - 1, j - 1) * dist_face(sys.ops, sys.weights, n, i);
            if (lhs != rhs) return false;
        }
    return true;
}

bool presimplicial_check_group(const BinOp& op, int n) {
    for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
            if (group_face(op, n - 1, i) * group_face(op, n, j) !=
                group_face(op, n - 1, j - 1) * group_face(op, n, i))
                return false;
    return true;
}

bool presimplicial_check_hochschild(const BinOp& op, int n) {
    for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
            if (hochschild_face(op, n - 1, i) * hochschild_face(op, n, j) !=
                hochschild_face(op, n - 1, j - 1) * hochschild_face(op, n, i))
                return false;
    return true;
}

bool weak_simplicial_check(const MultiTermSystem& sys, int n) {
    int X = sys.carrier.size;
    // (2) s_i s_j = s_{j+1} s_i for i <= j
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
            if (degeneracy_map(X, n + 1, i) * degeneracy_map(X, n, j) !=
                degeneracy_map(X, n + 1, j + 1) * degeneracy_map(X, n, i))
                return false;
    // (3) d_i s_j = s_{j-1} d_i (i<j) and d_i s_j = s_j d_{i-1} (i>j+1)
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
            if (i < j) {
                if (dist_face(sys.ops, sys.weights, n + 1, i) * degeneracy_map(X, n, j) !=
                    degeneracy_map(X, n - 1, j - 1) * dist_face(sys.ops, sys.weights, n, i))
                    return false;
            } else if (i > j + 1) {
                if (dist_face(sys.ops, sys.weights, n + 1, i) * degeneracy_map(X, n, j) !=
                    degeneracy_map(X, n - 1, j) * dist_face(sys.ops, sys.weights, n, i - 1))
                    return false;
            }
        }
    // (4') d_i s_i = d_{i+1} s_i when all operations are idempotent
    if (sys.all_idempotent()) {
        for (int i = 0; i <= n; ++i)
            if (dist_face(sys.ops, sys.weights, n + 1, i) * degeneracy_map(X, n, i) !=
                dist_face(sys.ops, sys.weights, n + 1, i + 1) * degeneracy_map(X, n, i))
                return false;
    }
    return true;
}

}  // namespace disthom
