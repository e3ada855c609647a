#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace disthom {

using i64 = long long;

struct overflow_error : std::runtime_error {
    overflow_error() : std::runtime_error("integer overflow in matrix arithmetic") {}
};

inline i64 checked_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw overflow_error();
    return r;
}

inline i64 checked_sub(i64 x, i64 y) {
    i64 r;
    if (__builtin_sub_overflow(x, y, &r)) throw overflow_error();
    return r;
}

inline i64 checked_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw overflow_error();
    return r;
}

// Dense integer matrix, row-major.  Sizes stay small (<= a few thousand
// columns); boundary entries are sums of weights, so i64 is plenty for
// construction and products.  Smith/Hermite reduction guards against
// intermediate blow-up separately (see snf.hpp).
struct IMat {
    int rows = 0, cols = 0;
    std::vector<i64> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IMat zero(int r, int c) { return IMat(r, c); }

    bool is_zero() const {
        for (i64 x : a)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const IMat& o) const { return !(*this == o); }

    IMat operator*(const IMat& o) const {
        if (cols != o.rows) throw std::runtime_error("matrix product shape mismatch");
        IMat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                i64 v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols; ++j) {
                    i64 w = o.at(k, j);
                    if (w != 0) r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, w));
                }
            }
        return r;
    }

    IMat operator+(const IMat& o) const {
        if (rows != o.rows || cols != o.cols) throw std::runtime_error("matrix sum shape mismatch");
        IMat r(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = checked_add(a[i], o.a[i]);
        return r;
    }

    IMat operator-(const IMat& o) const {
        if (rows != o.rows || cols != o.cols) throw std::runtime_error("matrix diff shape mismatch");
        IMat r(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = checked_sub(a[i], o.a[i]);
        return r;
    }

    IMat scaled(i64 k) const {
        IMat r(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = checked_mul(a[i], k);
        return r;
    }

    std::vector<i64> apply(const std::vector<i64>& v) const {
        if (static_cast<int>(v.size()) != cols) throw std::runtime_error("matrix apply shape mismatch");
        std::vector<i64> r(rows, 0);
        for (int i = 0; i < rows; ++i) {
            i64 s = 0;
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != 0 && v[j] != 0) s = checked_add(s, checked_mul(at(i, j), v[j]));
            r[i] = s;
        }
        return r;
    }
};

// Rank over the prime field F_p by Gaussian elimination.  Used as a cheap
// pre-screen for free ranks and for mod-p homology dimensions.
inline int rank_mod_p(const IMat& m, i64 p) {
    std::vector<std::vector<i64>> w(m.rows, std::vector<i64>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            i64 v = m.at(i, j) % p;
            if (v < 0) v += p;
            w[i][j] = v;
        }
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (w[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(w[piv], w[rank]);
        // invert pivot mod p
        i64 inv = 1, base = w[rank][col], e = p - 2;
        while (e) {
            if (e & 1) inv = (__int128)inv * base % p;
            base = (__int128)base * base % p;
            e >>= 1;
        }
        for (int j = col; j < m.cols; ++j) w[rank][j] = (__int128)w[rank][j] * inv % p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || w[r][col] == 0) continue;
            i64 f = w[r][col];
            for (int j = col; j < m.cols; ++j) {
                w[r][j] = (w[r][j] - (__int128)f * w[rank][j]) % p;
                if (w[r][j] < 0) w[r][j] += p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace disthom
