#pragma once

#include "disthom/abelian.hpp"
#include "disthom/complex.hpp"

namespace disthom {

// Exact integral homology at degree n; needs the boundaries leaving degrees
// n and n+1 (so n_min <= n < n_max).
AbelianGroup homology(const GradedComplex& cx, int n);

// All degrees in [lo, hi]; shares one Smith pass per boundary matrix.
HomologyTable homology_table(const GradedComplex& cx, int lo, int hi);

// dim_{F_p} H_n(cx; Z_p)
int homology_dim_mod_p(const GradedComplex& cx, int n, i64 p);

// expected mod-p dimension from the integral answer (universal coefficients)
int expected_dim_mod_p(const AbelianGroup& hn, const AbelianGroup& hn_minus_1, i64 p);

struct AnnihilatorCertificate {
    i64 annihilator = 0;        // |A| * (sum of weights), the verified scalar
    std::vector<int> degrees;   // degrees where the identity was checked
    std::vector<IMat> homotopy; // h_n : C_n -> C_{n+1}, aligned with degrees
    bool verified = false;
};

// Prop-6.5-style certificate on a distributive complex: realizes
// h = (sum_{a in A} a, -) and checks boundary*h + h*boundary = |A|*Sigma*Id.
// The complex must be augmented so the bottom edge closes.
AnnihilatorCertificate annihilator_check(const GradedComplex& cx, const MultiTermSystem& sys,
                                         const std::vector<int>& orbit);

// group-homology variant (degrees >= 1)
AnnihilatorCertificate annihilator_check_group(const GradedComplex& cx, const BinOp& op,
                                               const std::vector<int>& orbit);

struct SplitLine {
    std::string name;
    int degree;
    AbelianGroup whole, sum;
    bool pass;
};

struct SplitReport {
    std::vector<SplitLine> lines;
    bool all_pass() const;
};

// Verifies, degree by degree up to n_max-1, the direct-sum decompositions
//   H(C) = H(C^D) + H(C^Norm)          (degenerate/normalized split)
//   H(C) = H({t}) + H(C/{t})           (point split)
//   H(C) = H({t}) + H(F0/{t}) + H(eN)  (early-degenerate three-piece split)
// for a multi-spindle system.
SplitReport splitting_check(const MultiTermSystem& sys, int n_max, int point_t = 0);

// Lemma 8.7 matrix identities on degree n:
//   boundary s0 + s0 boundary = Sigma * s0 p0,   p0 s0 = Id
bool lemma87_identities(const MultiTermSystem& sys, int n);

// presimplicial identities d_i d_j = d_{j-1} d_i (i<j) at degree n
bool presimplicial_check_dist(const MultiTermSystem& sys, int n);
bool presimplicial_check_group(const BinOp& op, int n);
bool presimplicial_check_hochschild(const BinOp& op, int n);

// very weak simplicial conditions (2),(3) and, when idempotent, (4')
bool weak_simplicial_check(const MultiTermSystem& sys, int n);

}  // namespace disthom
