#pragma once

#include <map>

#include "disthom/abelian.hpp"

namespace disthom {

// u_0 = 1 and u_n + u_{n-1} = m^n, so u_n = m^n - m^{n-1} + ... +- 1
i64 u_seq(i64 m, int n);

// reduced homology of the one-term g-shelf complex: Z^{(|g(X)|-1) m^n}
AbelianGroup oracle_thm66(i64 m, i64 gsize, int n);

// same complex with the boundary scaled by d:
//   d != 0: Z^{(|g|-1)m^n} + Z_d^{m^{n+1} - |g| u_n}  (reduced)
//   d == 0: Z^{m^{n+1}}                               (full, zero boundary)
AbelianGroup oracle_cor67(i64 m, i64 gsize, i64 d, int n);

// homology of a point with total weight sigma
AbelianGroup oracle_point(i64 sigma, int n);

// two-term system a*d^(right-trivial) + d*d^(left-trivial) on m elements
AbelianGroup oracle_thm91_f0(i64 m, i64 a, i64 d, int n);    // reduced early degenerate piece
AbelianGroup oracle_thm91_en(i64 m, i64 a, i64 d, int n);    // reduced early normalized piece
AbelianGroup oracle_thm91_full(i64 m, i64 a, i64 d, int n);  // whole homology

// three-term (right-trivial, spindle with right unit and right projector,
// left-trivial) with weights (a, c, d)
AbelianGroup oracle_thm92_f0(i64 m, i64 a, i64 c, i64 d, int n);
AbelianGroup oracle_thm92_en(i64 m, i64 a, i64 c, i64 d, int n);
AbelianGroup oracle_thm92_full(i64 m, i64 a, i64 c, i64 d, int n);

// 4-term homology of the 2-element Boolean algebra
AbelianGroup oracle_prop93(i64 a, i64 b, i64 c, i64 d, int n);  // normalized part
AbelianGroup oracle_thm94(i64 a, i64 b, i64 c, i64 d, int n);   // degenerate part

// 4-term homology of a finite distributive lattice with L elements and J
// non-minimal join-irreducibles
AbelianGroup oracle_thm95(i64 L, i64 J, i64 a, i64 b, i64 c, i64 d, int n);

struct OracleRequest {
    std::string theorem;  // "6.6", "6.7", "9.1", "9.2", "9.3", "9.4", "9.5", "8.5iii"
    std::map<std::string, i64> params;
    int n_lo = 0, n_hi = 3;
};

HomologyTable formula_oracle(const OracleRequest& req);

}  // namespace disthom
