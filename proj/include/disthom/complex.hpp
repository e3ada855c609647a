#pragma once

#include <functional>
#include <string>

#include "disthom/binop.hpp"
#include "disthom/matrix.hpp"

namespace disthom {

using Tuple = std::vector<uint8_t>;

int tuple_index(const Tuple& t, int carrier_size);
std::vector<Tuple> full_tuple_basis(int carrier_size, int length);

// Weighted operation list defining the multi-term boundary
// sum_i weights[i] * d^(ops[i]).  Construction verifies that the operations
// form a weakly distributive set; that is exactly the condition for the
// boundary to square to zero.
struct MultiTermSystem {
    Carrier carrier;
    std::vector<BinOp> ops;
    std::vector<i64> weights;

    MultiTermSystem(Carrier c, std::vector<BinOp> o, std::vector<i64> w);

    i64 sigma() const;
    bool all_idempotent() const;
    size_t term_count() const { return ops.size(); }
};

// ---- raw matrix builders on the full tuple bases (no preconditions) ----

// one-term distributive face d_i : ZX^{n+1} -> ZX^n
//   d_0 drops x_0;  d_i = (x_0*x_i,...,x_{i-1}*x_i, x_{i+1},...,x_n) for i>0
IMat dist_face(const BinOp& op, int n, int i);
IMat dist_face(const std::vector<BinOp>& ops, const std::vector<i64>& w, int n, int i);
IMat dist_boundary(const std::vector<BinOp>& ops, const std::vector<i64>& w, int n);

// s_i duplicates coordinate i; t_i = d_i s_i - d_{i+1} s_i
IMat degeneracy_map(int carrier_size, int n, int i);
IMat t_map(const std::vector<BinOp>& ops, const std::vector<i64>& w, int n, int i);

enum class GroupVariant { full, truncated_left, truncated_right };

// group homology faces on ZX^n (d_0 drops x_1, d_n drops x_n, middle faces
// multiply neighbours)
IMat group_face(const BinOp& op, int n, int i);
IMat group_boundary(const BinOp& op, int n, GroupVariant v);

// Hochschild faces on ZX^{n+1}, with the wrap-around last face
// d_n(x_0,...,x_n) = (x_n*x_0, x_1,...,x_{n-1})
IMat hochschild_face(const BinOp& op, int n, int i);
IMat hochschild_boundary(const BinOp& op, int n);

// ---- graded complexes ----

struct GradedComplex {
    std::string family;   // distributive | group | hochschild | ...
    std::string variant;  // full | augmented | degenerate-sub | ...
    int carrier_size = 0;
    int n_min = 0;  // -1 for augmented complexes
    int n_max = 0;

    // per degree d (index d - n_min): basis labels when the basis is a set of
    // tuples; synthetic bases keep labels empty and rely on sizes/embeddings
    std::vector<std::vector<Tuple>> bases;
    std::vector<int> sizes;
    std::vector<IMat> bnd;    // bnd[d-n_min] : C_d -> C_{d-1}; lowest slot unused
    std::vector<IMat> embed;  // optional: columns of C_d written in parent coordinates
    bool has_embedding = false;
    bool tuple_labelled = true;

    std::string kind() const { return family + ":" + variant; }
    int rank(int d) const { return sizes[static_cast<size_t>(d - n_min)]; }
    const std::vector<Tuple>& basis(int d) const { return bases[static_cast<size_t>(d - n_min)]; }
    const IMat& boundary(int d) const;  // d in [n_min+1, n_max]
    bool in_range(int d) const { return d >= n_min && d <= n_max; }

    void verify_square_zero() const;
};

GradedComplex build_distributive_complex(const MultiTermSystem& sys, int n_max, bool augmented);
GradedComplex build_group_complex(const BinOp& op, int n_max, GroupVariant v, bool augmented);
GradedComplex build_hochschild_complex(const BinOp& op, int n_max, bool augmented);

// ---- subcomplexes and quotients ----

// span of the degeneracy images; closed only when every operation is
// idempotent (checked, with a witness chain on failure)
GradedComplex subcomplex_degenerate(const GradedComplex& parent);
// F^0 = s_0(C_{n-1}), the early degenerate part
GradedComplex subcomplex_early_degenerate(const GradedComplex& parent);
// C({t}) for an element idempotent under all operations
GradedComplex subcomplex_point(const GradedComplex& parent, const MultiTermSystem& sys, int t);
// C(A) for a subset closed under all operations
GradedComplex subcomplex_submultishelf(const GradedComplex& parent, const MultiTermSystem& sys,
                                       const std::vector<int>& a_subset);
// span of the t_i images (with_degenerate adds the s_i images: the tD span)
GradedComplex subcomplex_t_span(const GradedComplex& parent, const MultiTermSystem& sys, bool with_degenerate);

GradedComplex quotient(const GradedComplex& parent, const GradedComplex& sub);

// named compositions used throughout the examples
GradedComplex normalized_complex(const GradedComplex& parent);                       // C / C^D
GradedComplex relative_complex(const GradedComplex& parent, const GradedComplex& sub);  // C(X)/C(A)

// ---- structural chain maps as matrices ----

// f(x_0,...,x_n) = (x_0*x_1*...*x_n, x_1*...*x_n, ..., x_n), left-normed
IMat remarkable_map(const BinOp& star, int n);

// alpha(x_0,...,x_n) = (x_0, x_1-x_0, ..., x_n-x_{n-1}), multilinear expansion
IMat alpha_map(int carrier_size, int n);

IMat p0_map(int carrier_size, int n);               // drop x_0 : C_n -> C_{n-1}
IMat s0_map(int carrier_size, int n);               // duplicate x_0 : C_n -> C_{n+1}
IMat homotopy_h(int carrier_size, int t, int n);    // append t : C_n -> C_{n+1}
// f_t = sum_i a_i (. *_i t) : C_n -> C_n
IMat star_t_map(const std::vector<BinOp>& ops, const std::vector<i64>& w, int t, int n);

// orbit homotopies behind the annihilator certificates: prepend sum_{a in A} a
IMat orbit_homotopy_dist(int carrier_size, const std::vector<int>& orbit, int n);   // C_n -> C_{n+1}
IMat orbit_homotopy_group(int carrier_size, const std::vector<int>& orbit, int n);  // ZX^n -> ZX^{n+1}

// A is a finite right orbit when every column permutes it; witness otherwise
void verify_right_orbit(const std::vector<BinOp>& ops, const std::vector<int>& orbit);

}  // namespace disthom
