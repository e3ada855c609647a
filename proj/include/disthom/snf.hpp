#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "disthom/matrix.hpp"

namespace disthom {

using bigint = boost::multiprecision::cpp_int;

namespace detail {

inline i64 t_add(i64 a, i64 b) { return checked_add(a, b); }
inline i64 t_sub(i64 a, i64 b) { return checked_sub(a, b); }
inline i64 t_mul(i64 a, i64 b) { return checked_mul(a, b); }
inline i64 t_neg(i64 a) { return checked_sub(0, a); }
inline i64 t_abs(i64 a) { return a < 0 ? checked_sub(0, a) : a; }
inline bigint t_add(const bigint& a, const bigint& b) { return a + b; }
inline bigint t_sub(const bigint& a, const bigint& b) { return a - b; }
inline bigint t_mul(const bigint& a, const bigint& b) { return a * b; }
inline bigint t_neg(const bigint& a) { return -a; }
inline bigint t_abs(const bigint& a) { return a < 0 ? bigint(-a) : a; }

// division rounded to nearest; keeps remainders (and entry growth) small
template <class T>
T t_rdiv(const T& a, const T& b) {
    T q = a / b, r = a - q * b;
    if (t_abs(r) * 2 > t_abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

template <class T>
struct Elim {
    int rows, cols;
    std::vector<std::vector<T>> m;
    std::vector<std::vector<T>> u, v;  // row / column transforms, optional
    bool track;

    Elim(const IMat& src, bool track_transforms) : rows(src.rows), cols(src.cols), track(track_transforms) {
        m.assign(rows, std::vector<T>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m[i][j] = T(src.at(i, j));
        if (track) {
            u.assign(rows, std::vector<T>(rows, T(0)));
            v.assign(cols, std::vector<T>(cols, T(0)));
            for (int i = 0; i < rows; ++i) u[i][i] = 1;
            for (int j = 0; j < cols; ++j) v[j][j] = 1;
        }
    }

    void row_sub(int dst, int src, const T& q) {
        if (q == 0) return;
        for (int j = 0; j < cols; ++j) m[dst][j] = t_sub(m[dst][j], t_mul(q, m[src][j]));
        if (track)
            for (int j = 0; j < rows; ++j) u[dst][j] = t_sub(u[dst][j], t_mul(q, u[src][j]));
    }
    void col_sub(int dst, int src, const T& q) {
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) m[i][dst] = t_sub(m[i][dst], t_mul(q, m[i][src]));
        if (track)
            for (int i = 0; i < cols; ++i) v[i][dst] = t_sub(v[i][dst], t_mul(q, v[i][src]));
    }
    void row_swap(int a, int b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        if (track) std::swap(u[a], u[b]);
    }
    void col_swap(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        if (track)
            for (int i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
    }
    void row_negate(int r) {
        for (int j = 0; j < cols; ++j) m[r][j] = t_neg(m[r][j]);
        if (track)
            for (int j = 0; j < rows; ++j) u[r][j] = t_neg(u[r][j]);
    }

    // Smith reduction.  Pivot selection by minimal absolute value keeps
    // coefficients from exploding on the matrices we meet in practice.
    std::vector<T> smith() {
        int t = 0;
        while (t < rows && t < cols) {
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (pi < 0 || t_abs(m[i][j]) < t_abs(m[pi][pj]))) { pi = i; pj = j; }
            if (pi < 0) break;
            row_swap(t, pi);
            col_swap(t, pj);
            bool clean = false;
            while (!clean) {
                clean = true;
                for (int i = t + 1; i < rows; ++i) {
                    if (m[i][t] == 0) continue;
                    T q = t_rdiv(m[i][t], m[t][t]);
                    row_sub(i, t, q);
                    if (m[i][t] != 0) {
                        row_swap(t, i);  // remainder is strictly smaller
                        clean = false;
                    }
                }
                for (int j = t + 1; j < cols; ++j) {
                    if (m[t][j] == 0) continue;
                    T q = t_rdiv(m[t][j], m[t][t]);
                    col_sub(j, t, q);
                    if (m[t][j] != 0) {
                        col_swap(t, j);
                        clean = false;
                    }
                }
            }
            ++t;
        }
        int r = t;
        // enforce the divisor chain d1 | d2 | ...
        for (int i = 0; i < r; ++i) {
            for (int j = i + 1; j < r; ++j) {
                if (m[j][j] % m[i][i] == 0) continue;
                // fold entry (j,j) into (i,i): gcd goes up front, lcm behind
                col_sub(i, j, T(-1));  // column i gains m[j][j] at row j
                // re-eliminate the 2x2 block [i,j]x[i,j]
                bool done = false;
                while (!done) {
                    done = true;
                    if (m[j][i] != 0) {
                        T q = t_rdiv(m[j][i], m[i][i]);
                        row_sub(j, i, q);
                        if (m[j][i] != 0) {
                            row_swap(i, j);
                            done = false;
                            continue;
                        }
                    }
                    if (m[i][j] != 0) {
                        T q = t_rdiv(m[i][j], m[i][i]);
                        col_sub(j, i, q);
                        if (m[i][j] != 0) {
                            col_swap(i, j);
                            done = false;
                        }
                    }
                }
            }
        }
        for (int i = 0; i < r; ++i)
            if (m[i][i] < 0) row_negate(i);
        std::vector<T> d(r);
        for (int i = 0; i < r; ++i) d[i] = m[i][i];
        return d;
    }

    // Column Hermite form: pivots walk down the rows, pivot columns in order,
    // zero columns pushed to the right.  Returns pivot (row, col) pairs.
    std::vector<std::pair<int, int>> hermite_cols() {
        int c = 0;
        std::vector<std::pair<int, int>> pivots;
        for (int r = 0; r < rows && c < cols; ++r) {
            while (true) {
                int best = -1;
                for (int j = c; j < cols; ++j)
                    if (m[r][j] != 0 && (best < 0 || t_abs(m[r][j]) < t_abs(m[r][best]))) best = j;
                if (best < 0) break;
                col_swap(c, best);
                bool again = false;
                for (int j = c + 1; j < cols; ++j) {
                    if (m[r][j] == 0) continue;
                    T q = t_rdiv(m[r][j], m[r][c]);
                    col_sub(j, c, q);
                    if (m[r][j] != 0) again = true;
                }
                if (!again) break;
            }
            if (c < cols && m[r][c] != 0) {
                if (m[r][c] < 0) {
                    for (int i = 0; i < rows; ++i) m[i][c] = t_neg(m[i][c]);
                    if (track)
                        for (int i = 0; i < cols; ++i) v[i][c] = t_neg(v[i][c]);
                }
                // reduce earlier pivot columns against this one
                for (auto [pr, pc] : pivots) {
                    (void)pr;
                    T q = m[r][pc] / m[r][c];
                    col_sub(pc, c, q);
                }
                pivots.emplace_back(r, c);
                ++c;
            }
        }
        return pivots;
    }
};

template <class T>
IMat to_imat(const std::vector<std::vector<T>>& w) {
    IMat r(static_cast<int>(w.size()), w.empty() ? 0 : static_cast<int>(w[0].size()));
    for (int i = 0; i < r.rows; ++i)
        for (int j = 0; j < r.cols; ++j) {
            const T& x = w[i][j];
            if constexpr (std::is_same_v<T, i64>) {
                r.at(i, j) = x;
            } else {
                if (x > bigint(INT64_MAX) || x < bigint(INT64_MIN))
                    throw std::runtime_error("smith normal form entry exceeds 64 bits");
                r.at(i, j) = static_cast<i64>(x);
            }
        }
    return r;
}

}  // namespace detail

struct SmithResult {
    std::vector<i64> divisors;  // nonzero diagonal entries, divisor chain
    IMat d, u, v;               // u * input * v == d
};

// Full Smith normal form with unimodular transforms.  Falls back to
// arbitrary-precision arithmetic if 64-bit reduction overflows.
inline SmithResult smith_normal_form(const IMat& m) {
    auto run = [&](auto tag) -> SmithResult {
        using T = decltype(tag);
        detail::Elim<T> e(m, true);
        auto d = e.smith();
        SmithResult r;
        for (auto& x : d) {
            if constexpr (std::is_same_v<T, i64>)
                r.divisors.push_back(x);
            else
                r.divisors.push_back(static_cast<i64>(x));
        }
        r.d = detail::to_imat(e.m);
        r.u = detail::to_imat(e.u);
        r.v = detail::to_imat(e.v);
        return r;
    };
    try {
        return run(i64{});
    } catch (const overflow_error&) {
        return run(bigint{});
    }
}

// Divisors only; no transform bookkeeping.  This is the homology fast path.
inline std::vector<i64> smith_divisors(const IMat& m) {
    try {
        detail::Elim<i64> e(m, false);
        return e.smith();
    } catch (const overflow_error&) {
        detail::Elim<bigint> e(m, false);
        auto d = e.smith();
        std::vector<i64> r;
        for (auto& x : d) {
            if (x > bigint(INT64_MAX)) throw std::runtime_error("divisor exceeds 64 bits");
            r.push_back(static_cast<i64>(x));
        }
        return r;
    }
}

inline int rank_exact(const IMat& m) { return static_cast<int>(smith_divisors(m).size()); }

struct HermiteResult {
    IMat h, v;                              // input * v == h, v unimodular
    std::vector<std::pair<int, int>> pivots;  // (row, col), rows increasing
};

inline HermiteResult column_hermite(const IMat& m) {
    auto run = [&](auto tag) -> HermiteResult {
        using T = decltype(tag);
        detail::Elim<T> e(m, true);
        auto piv = e.hermite_cols();
        return HermiteResult{detail::to_imat(e.m), detail::to_imat(e.v), piv};
    };
    try {
        return run(i64{});
    } catch (const overflow_error&) {
        return run(bigint{});
    }
}

// Integer solution of M x = b, if one exists.
inline std::optional<std::vector<i64>> solve_integer(const IMat& m, const std::vector<i64>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::runtime_error("solve_integer shape mismatch");
    HermiteResult h = column_hermite(m);
    std::vector<i64> rem = b, z(m.cols, 0);
    for (auto [r, c] : h.pivots) {
        i64 piv = h.h.at(r, c);
        if (rem[r] % piv != 0) return std::nullopt;
        i64 q = rem[r] / piv;
        z[c] = q;
        if (q != 0)
            for (int i = 0; i < m.rows; ++i) rem[i] = checked_sub(rem[i], checked_mul(q, h.h.at(i, c)));
    }
    for (i64 x : rem)
        if (x != 0) return std::nullopt;
    return h.v.apply(z);
}

// Basis of the integer column span of m: the nonzero columns of the column
// Hermite form.  Columns are primitive generators of the subgroup.
inline IMat column_span_basis(const IMat& m) {
    HermiteResult h = column_hermite(m);
    int r = static_cast<int>(h.pivots.size());
    IMat b(m.rows, r);
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < m.rows; ++i) b.at(i, k) = h.h.at(i, h.pivots[k].second);
    return b;
}

// Inverse of a unimodular matrix: column-Hermite reduces it to a unit
// lower-triangular form which forward-substitutes over the integers.
inline IMat unimodular_inverse(const IMat& u) {
    if (u.rows != u.cols) throw std::runtime_error("unimodular_inverse: non-square input");
    int n = u.rows;
    HermiteResult h = column_hermite(u);
    if (static_cast<int>(h.pivots.size()) != n) throw std::runtime_error("unimodular_inverse: singular input");
    for (int i = 0; i < n; ++i)
        if (h.h.at(i, i) != 1) throw std::runtime_error("unimodular_inverse: input is not unimodular");
    IMat x(n, n);  // h * x = I
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            i64 s = (i == j) ? 1 : 0;
            for (int k = 0; k < i; ++k)
                if (h.h.at(i, k) != 0 && x.at(k, j) != 0) s = checked_sub(s, checked_mul(h.h.at(i, k), x.at(k, j)));
            x.at(i, j) = s;
        }
    return h.v * x;
}

// Determinant by Bareiss fraction-free elimination (test helper for checking
// that transforms are unimodular).
inline bigint determinant(const IMat& m) {
    if (m.rows != m.cols) throw std::runtime_error("determinant of non-square matrix");
    int n = m.rows;
    std::vector<std::vector<bigint>> w(n, std::vector<bigint>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i][j] = m.at(i, j);
    bigint prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(w[k], w[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
        prev = w[k][k];
    }
    return sign * w[n - 1][n - 1];
}

}  // namespace disthom
