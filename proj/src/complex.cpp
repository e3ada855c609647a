#include "disthom/complex.hpp"

#include <algorithm>
#include <set>

#include "disthom/snf.hpp"

namespace disthom {

int tuple_index(const Tuple& t, int carrier_size) {
    int idx = 0;
    for (uint8_t x : t) idx = idx * carrier_size + x;
    return idx;
}

std::vector<Tuple> full_tuple_basis(int carrier_size, int length) {
    int count = 1;
    for (int i = 0; i < length; ++i) count *= carrier_size;
    std::vector<Tuple> out;
    out.reserve(count);
    Tuple t(length, 0);
    for (int idx = 0; idx < count; ++idx) {
        out.push_back(t);
        for (int p = length - 1; p >= 0; --p) {
            if (++t[p] < carrier_size) break;
            t[p] = 0;
        }
    }
    return out;
}

MultiTermSystem::MultiTermSystem(Carrier c, std::vector<BinOp> o, std::vector<i64> w)
    : carrier(std::move(c)), ops(std::move(o)), weights(std::move(w)) {
    if (ops.empty()) throw input_error("a multi-term system needs at least one operation");
    if (ops.size() != weights.size()) throw input_error("weight count does not match operation count");
    for (const BinOp& op : ops)
        if (op.carrier.size != carrier.size) throw carrier_mismatch();
    int n = carrier.size;
    for (size_t i = 0; i < ops.size(); ++i)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int cc = 0; cc < n; ++cc)
                    if (ops[i].at(ops[i].at(a, b), cc) != ops[i].at(ops[i].at(a, cc), ops[i].at(b, cc)))
                        throw weak_distributivity_violated(a, b, cc, static_cast<int>(i), static_cast<int>(i));
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j) {
            const BinOp &f = ops[i], &g = ops[j];
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int cc = 0; cc < n; ++cc) {
                        int l1 = g.at(f.at(a, b), cc), l2 = f.at(g.at(a, b), cc);
                        int r1 = f.at(g.at(a, cc), g.at(b, cc)), r2 = g.at(f.at(a, cc), f.at(b, cc));
                        if (!((l1 == r1 && l2 == r2) || (l1 == r2 && l2 == r1)))
                            throw weak_distributivity_violated(a, b, cc, static_cast<int>(i), static_cast<int>(j));
                    }
        }
}

i64 MultiTermSystem::sigma() const {
    i64 s = 0;
    for (i64 w : weights) s = checked_add(s, w);
    return s;
}

bool MultiTermSystem::all_idempotent() const {
    return std::all_of(ops.begin(), ops.end(), [](const BinOp& o) { return is_idempotent(o); });
}

static int ipow(int b, int e) {
    int r = 1;
    while (e--) r *= b;
    return r;
}

IMat dist_face(const std::vector<BinOp>& ops, const std::vector<i64>& w, int n, int i) {
    if (i < 0 || i > n) throw degree_out_of_range();
    int X = ops.at(0).n();
    int cols = ipow(X, n + 1), rows = ipow(X, n);
    IMat m(rows, cols);
    Tuple t(n + 1, 0), img(n);
    for (int col = 0; col < cols; ++col) {
        for (size_t k = 0; k < ops.size(); ++k) {
            if (w[k] == 0) continue;
            if (i == 0) {
                for (int p = 0; p < n; ++p) img[p] = t[p + 1];
            } else {
                for (int p = 0; p < i; ++p) img[p] = static_cast<uint8_t>(ops[k].at(t[p], t[i]));
                for (int p = i + 1; p <= n; ++p) img[p - 1] = t[p];
            }
            int row = tuple_index(img, X);
            m.at(row, col) = checked_add(m.at(row, col), w[k]);
        }
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat dist_face(const BinOp& op, int n, int i) {
    return dist_face(std::vector<BinOp>{op}, std::vector<i64>{1}, n, i);
}

IMat dist_boundary(const std::vector<BinOp>& ops, const std::vector<i64>& w, int n) {
    int X = ops.at(0).n();
    int cols = ipow(X, n + 1), rows = ipow(X, n);
    IMat m(rows, cols);
    Tuple t(n + 1, 0), img(n);
    for (int col = 0; col < cols; ++col) {
        for (int i = 0; i <= n; ++i) {
            i64 sign = (i % 2 == 0) ? 1 : -1;
            for (size_t k = 0; k < ops.size(); ++k) {
                if (w[k] == 0) continue;
                if (i == 0) {
                    for (int p = 0; p < n; ++p) img[p] = t[p + 1];
                } else {
                    for (int p = 0; p < i; ++p) img[p] = static_cast<uint8_t>(ops[k].at(t[p], t[i]));
                    for (int p = i + 1; p <= n; ++p) img[p - 1] = t[p];
                }
                int row = tuple_index(img, X);
                m.at(row, col) = checked_add(m.at(row, col), checked_mul(sign, w[k]));
            }
        }
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat degeneracy_map(int X, int n, int i) {
    if (i < 0 || i > n) throw degree_out_of_range();
    int cols = ipow(X, n + 1), rows = ipow(X, n + 2);
    IMat m(rows, cols);
    Tuple t(n + 1, 0), img(n + 2);
    for (int col = 0; col < cols; ++col) {
        for (int p = 0; p <= i; ++p) img[p] = t[p];
        img[i + 1] = t[i];
        for (int p = i + 1; p <= n; ++p) img[p + 1] = t[p];
        m.at(tuple_index(img, X), col) = 1;
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat t_map(const std::vector<BinOp>& ops, const std::vector<i64>& w, int n, int i) {
    if (i < 0 || i > n) throw degree_out_of_range();
    int X = ops.at(0).n();
    int sz = ipow(X, n + 1);
    IMat m(sz, sz);
    Tuple t(n + 1, 0), img(n + 1);
    for (int col = 0; col < sz; ++col) {
        for (size_t k = 0; k < ops.size(); ++k) {
            if (w[k] == 0) continue;
            for (int p = 0; p < i; ++p) img[p] = static_cast<uint8_t>(ops[k].at(t[p], t[i]));
            for (int p = i + 1; p <= n; ++p) img[p] = t[p];
            img[i] = t[i];
            int r1 = tuple_index(img, X);
            img[i] = static_cast<uint8_t>(ops[k].at(t[i], t[i]));
            int r2 = tuple_index(img, X);
            m.at(r1, col) = checked_add(m.at(r1, col), w[k]);
            m.at(r2, col) = checked_sub(m.at(r2, col), w[k]);
        }
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat group_face(const BinOp& op, int n, int i) {
    if (i < 0 || i > n || n < 1) throw degree_out_of_range();
    int X = op.n();
    int cols = ipow(X, n), rows = ipow(X, n - 1);
    IMat m(rows, cols);
    Tuple t(n, 0), img(n - 1);
    for (int col = 0; col < cols; ++col) {
        if (i == 0) {
            for (int p = 1; p < n; ++p) img[p - 1] = t[p];
        } else if (i == n) {
            for (int p = 0; p + 1 < n; ++p) img[p] = t[p];
        } else {
            for (int p = 0; p < i - 1; ++p) img[p] = t[p];
            img[i - 1] = static_cast<uint8_t>(op.at(t[i - 1], t[i]));
            for (int p = i + 1; p < n; ++p) img[p - 1] = t[p];
        }
        m.at(tuple_index(img, X), col) += 1;
        for (int p = n - 1; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat group_boundary(const BinOp& op, int n, GroupVariant v) {
    int X = op.n();
    IMat m(ipow(X, n - 1), ipow(X, n));
    int lo = v == GroupVariant::truncated_left ? 1 : 0;
    int hi = v == GroupVariant::truncated_right ? n - 1 : n;
    for (int i = lo; i <= hi; ++i) {
        IMat f = group_face(op, n, i);
        m = (i % 2 == 0) ? m + f : m - f;
    }
    return m;
}

IMat hochschild_face(const BinOp& op, int n, int i) {
    if (i < 0 || i > n || n < 1) throw degree_out_of_range();
    int X = op.n();
    int cols = ipow(X, n + 1), rows = ipow(X, n);
    IMat m(rows, cols);
    Tuple t(n + 1, 0), img(n);
    for (int col = 0; col < cols; ++col) {
        if (i < n) {
            for (int p = 0; p < i; ++p) img[p] = t[p];
            img[i] = static_cast<uint8_t>(op.at(t[i], t[i + 1]));
            for (int p = i + 2; p <= n; ++p) img[p - 1] = t[p];
        } else {
            img[0] = static_cast<uint8_t>(op.at(t[n], t[0]));
            for (int p = 1; p < n; ++p) img[p] = t[p];
        }
        m.at(tuple_index(img, X), col) += 1;
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat hochschild_boundary(const BinOp& op, int n) {
    int X = op.n();
    IMat m(ipow(X, n), ipow(X, n + 1));
    for (int i = 0; i <= n; ++i) {
        IMat f = hochschild_face(op, n, i);
        m = (i % 2 == 0) ? m + f : m - f;
    }
    return m;
}

const IMat& GradedComplex::boundary(int d) const {
    if (d <= n_min || d > n_max) throw degree_out_of_range();
    return bnd[static_cast<size_t>(d - n_min)];
}

void GradedComplex::verify_square_zero() const {
    for (int d = n_min + 2; d <= n_max; ++d)
        if (!(boundary(d - 1) * boundary(d)).is_zero())
            throw dh_error("boundary does not square to zero at degree " + std::to_string(d) + " in " + kind());
}

GradedComplex build_distributive_complex(const MultiTermSystem& sys, int n_max, bool augmented) {
    if (n_max < 0) throw input_error("n_max must be >= 0");
    GradedComplex cx;
    cx.family = "distributive";
    cx.variant = augmented ? "augmented" : "full";
    cx.carrier_size = sys.carrier.size;
    cx.n_min = augmented ? -1 : 0;
    cx.n_max = n_max;
    if (augmented) {
        cx.bases.push_back({Tuple{}});
        cx.sizes.push_back(1);
        cx.bnd.emplace_back();
    }
    for (int n = 0; n <= n_max; ++n) {
        cx.bases.push_back(full_tuple_basis(cx.carrier_size, n + 1));
        cx.sizes.push_back(static_cast<int>(cx.bases.back().size()));
        if (n == 0) {
            if (augmented) {
                IMat ones(1, cx.carrier_size);
                for (int j = 0; j < cx.carrier_size; ++j) ones.at(0, j) = 1;
                cx.bnd.push_back(std::move(ones));
            } else {
                cx.bnd.emplace_back();
            }
        } else {
            cx.bnd.push_back(dist_boundary(sys.ops, sys.weights, n));
        }
    }
    cx.verify_square_zero();
    return cx;
}

GradedComplex build_group_complex(const BinOp& op, int n_max, GroupVariant v, bool augmented) {
    if (!is_associative(op)) {
        for (int a = 0; a < op.n(); ++a)
            for (int b = 0; b < op.n(); ++b)
                for (int c = 0; c < op.n(); ++c)
                    if (op.at(op.at(a, b), c) != op.at(a, op.at(b, c))) throw not_associative(a, b, c);
    }
    if (augmented && v != GroupVariant::full)
        throw input_error("augmentation is only defined for the full group boundary");
    GradedComplex cx;
    cx.family = "group";
    cx.variant = v == GroupVariant::full ? (augmented ? "augmented" : "full")
                                         : (v == GroupVariant::truncated_left ? "truncated-left" : "truncated-right");
    cx.carrier_size = op.n();
    cx.n_min = augmented ? -1 : 0;
    cx.n_max = n_max;
    if (augmented) {
        cx.bases.push_back({Tuple{}});
        cx.sizes.push_back(1);
        cx.bnd.emplace_back();
    }
    for (int n = 0; n <= n_max; ++n) {
        cx.bases.push_back(full_tuple_basis(cx.carrier_size, n));
        cx.sizes.push_back(static_cast<int>(cx.bases.back().size()));
        if (n == 0) {
            if (augmented) {
                IMat one(1, 1);
                one.at(0, 0) = 1;
                cx.bnd.push_back(std::move(one));
            } else {
                cx.bnd.emplace_back();
            }
        } else {
            cx.bnd.push_back(group_boundary(op, n, v));
        }
    }
    cx.verify_square_zero();
    return cx;
}

GradedComplex build_hochschild_complex(const BinOp& op, int n_max, bool augmented) {
    if (!is_associative(op)) {
        for (int a = 0; a < op.n(); ++a)
            for (int b = 0; b < op.n(); ++b)
                for (int c = 0; c < op.n(); ++c)
                    if (op.at(op.at(a, b), c) != op.at(a, op.at(b, c))) throw not_associative(a, b, c);
    }
    GradedComplex cx;
    cx.family = "hochschild";
    cx.variant = augmented ? "augmented" : "full";
    cx.carrier_size = op.n();
    cx.n_min = augmented ? -1 : 0;
    cx.n_max = n_max;
    if (augmented) {
        cx.bases.push_back({Tuple{}});
        cx.sizes.push_back(1);
        cx.bnd.emplace_back();
    }
    for (int n = 0; n <= n_max; ++n) {
        cx.bases.push_back(full_tuple_basis(cx.carrier_size, n + 1));
        cx.sizes.push_back(static_cast<int>(cx.bases.back().size()));
        if (n == 0) {
            if (augmented) {
                IMat ones(1, cx.carrier_size);
                for (int j = 0; j < cx.carrier_size; ++j) ones.at(0, j) = 1;
                cx.bnd.push_back(std::move(ones));
            } else {
                cx.bnd.emplace_back();
            }
        } else {
            cx.bnd.push_back(hochschild_boundary(op, n));
        }
    }
    cx.verify_square_zero();
    return cx;
}

static std::string tuple_str(const Tuple& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(static_cast<int>(t[i]));
    return s + ")";
}

// Restrict the parent to the span of a per-degree subset of its basis tuples.
static GradedComplex subcomplex_from_predicate(const GradedComplex& parent,
                                               const std::function<bool(const Tuple&)>& keep,
                                               const std::string& variant) {
    if (!parent.tuple_labelled) throw input_error("subcomplex construction needs a tuple-labelled parent");
    GradedComplex sub;
    sub.family = parent.family;
    sub.variant = variant;
    sub.carrier_size = parent.carrier_size;
    sub.n_min = parent.n_min;
    sub.n_max = parent.n_max;
    std::vector<std::vector<int>> keep_idx(parent.bases.size());
    for (size_t k = 0; k < parent.bases.size(); ++k) {
        std::vector<Tuple> kept;
        for (size_t j = 0; j < parent.bases[k].size(); ++j)
            if (keep(parent.bases[k][j])) {
                keep_idx[k].push_back(static_cast<int>(j));
                kept.push_back(parent.bases[k][j]);
            }
        sub.bases.push_back(std::move(kept));
        sub.sizes.push_back(static_cast<int>(sub.bases.back().size()));
    }
    std::vector<std::vector<int>> row_pos(parent.bases.size());
    for (size_t k = 0; k < parent.bases.size(); ++k) {
        row_pos[k].assign(parent.bases[k].size(), -1);
        for (size_t r = 0; r < keep_idx[k].size(); ++r) row_pos[k][keep_idx[k][r]] = static_cast<int>(r);
    }
    sub.bnd.emplace_back();
    for (int d = parent.n_min + 1; d <= parent.n_max; ++d) {
        size_t k = static_cast<size_t>(d - parent.n_min);
        const IMat& full = parent.boundary(d);
        IMat m(sub.sizes[k - 1], sub.sizes[k]);
        for (size_t cj = 0; cj < keep_idx[k].size(); ++cj) {
            int col = keep_idx[k][cj];
            for (int row = 0; row < full.rows; ++row) {
                i64 v = full.at(row, col);
                if (v == 0) continue;
                int rp = row_pos[k - 1][row];
                if (rp < 0)
                    throw not_a_subcomplex("boundary of " + tuple_str(parent.bases[k][col]) + " hits " +
                                           tuple_str(parent.bases[k - 1][row]) + " outside the span");
                m.at(rp, static_cast<int>(cj)) = v;
            }
        }
        sub.bnd.push_back(std::move(m));
    }
    return sub;
}

static bool has_adjacent_repeat(const Tuple& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

GradedComplex subcomplex_degenerate(const GradedComplex& parent) {
    return subcomplex_from_predicate(parent, has_adjacent_repeat, "degenerate-sub");
}

GradedComplex subcomplex_early_degenerate(const GradedComplex& parent) {
    return subcomplex_from_predicate(
        parent, [](const Tuple& t) { return t.size() >= 2 && t[0] == t[1]; }, "early-degenerate");
}

GradedComplex subcomplex_point(const GradedComplex& parent, const MultiTermSystem& sys, int t) {
    for (const BinOp& op : sys.ops)
        if (op.at(t, t) != t)
            throw input_error("element " + std::to_string(t) + " is not idempotent under every operation");
    return subcomplex_from_predicate(
        parent,
        [t](const Tuple& tup) {
            return std::all_of(tup.begin(), tup.end(), [t](uint8_t x) { return x == t; });
        },
        "point");
}

GradedComplex subcomplex_submultishelf(const GradedComplex& parent, const MultiTermSystem& sys,
                                       const std::vector<int>& a_subset) {
    std::set<int> a(a_subset.begin(), a_subset.end());
    for (const BinOp& op : sys.ops)
        for (int x : a)
            for (int y : a)
                if (!a.count(op.at(x, y)))
                    throw input_error("subset is not closed under the operations");
    return subcomplex_from_predicate(
        parent,
        [&a](const Tuple& tup) {
            return std::all_of(tup.begin(), tup.end(), [&a](uint8_t x) { return a.count(x) > 0; });
        },
        "sub-multishelf");
}

// integer solve against a fixed Hermite basis; nullopt when b is outside
struct SpanSolver {
    HermiteResult h;
    explicit SpanSolver(const IMat& basis) : h(column_hermite(basis)) {}
    std::optional<std::vector<i64>> solve(const std::vector<i64>& b) const {
        std::vector<i64> rem = b, z(h.h.cols, 0);
        for (auto [r, c] : h.pivots) {
            if (rem[r] % h.h.at(r, c) != 0) return std::nullopt;
            i64 q = rem[r] / h.h.at(r, c);
            z[c] = q;
            if (q != 0)
                for (int i = 0; i < h.h.rows; ++i) rem[i] = checked_sub(rem[i], checked_mul(q, h.h.at(i, c)));
        }
        for (i64 x : rem)
            if (x != 0) return std::nullopt;
        return h.v.apply(z);
    }
};

GradedComplex subcomplex_t_span(const GradedComplex& parent, const MultiTermSystem& sys, bool with_degenerate) {
    if (!parent.tuple_labelled || parent.family != "distributive")
        throw input_error("t-span subcomplexes are defined for distributive complexes");
    GradedComplex sub;
    sub.family = parent.family;
    sub.variant = with_degenerate ? "tD-sub" : "t-sub";
    sub.carrier_size = parent.carrier_size;
    sub.n_min = parent.n_min;
    sub.n_max = parent.n_max;
    sub.tuple_labelled = false;
    sub.has_embedding = true;

    std::vector<IMat> bases;
    for (int d = parent.n_min; d <= parent.n_max; ++d) {
        if (d < 0) {
            bases.push_back(IMat(1, 0));
            continue;
        }
        int rank = parent.rank(d);
        std::vector<IMat> gens;
        for (int i = 0; i <= d; ++i) gens.push_back(t_map(sys.ops, sys.weights, d, i));
        IMat all(rank, 0);
        int total = 0;
        for (const IMat& g : gens) total += g.cols;
        if (with_degenerate && d >= 1)
            for (int i = 0; i <= d - 1; ++i) total += parent.rank(d - 1);
        all = IMat(rank, total);
        int at = 0;
        for (const IMat& g : gens) {
            for (int c = 0; c < g.cols; ++c, ++at)
                for (int r = 0; r < rank; ++r) all.at(r, at) = g.at(r, c);
        }
        if (with_degenerate && d >= 1)
            for (int i = 0; i <= d - 1; ++i) {
                IMat s = degeneracy_map(parent.carrier_size, d - 1, i);
                for (int c = 0; c < s.cols; ++c, ++at)
                    for (int r = 0; r < rank; ++r) all.at(r, at) = s.at(r, c);
            }
        bases.push_back(column_span_basis(all));
    }
    for (size_t k = 0; k < bases.size(); ++k) {
        sub.embed.push_back(bases[k]);
        sub.sizes.push_back(bases[k].cols);
        sub.bases.emplace_back();
    }
    sub.bnd.emplace_back();
    for (int d = parent.n_min + 1; d <= parent.n_max; ++d) {
        size_t k = static_cast<size_t>(d - parent.n_min);
        SpanSolver solver(bases[k - 1]);
        const IMat& full = parent.boundary(d);
        IMat m(sub.sizes[k - 1], sub.sizes[k]);
        for (int c = 0; c < bases[k].cols; ++c) {
            std::vector<i64> v(bases[k].rows);
            for (int r = 0; r < bases[k].rows; ++r) v[r] = bases[k].at(r, c);
            auto w = solver.solve(full.apply(v));
            if (!w) throw not_a_subcomplex("t-span generator " + std::to_string(c) + " at degree " + std::to_string(d));
            for (int r = 0; r < m.rows; ++r) m.at(r, c) = (*w)[r];
        }
        sub.bnd.push_back(std::move(m));
    }
    sub.verify_square_zero();
    return sub;
}

GradedComplex quotient(const GradedComplex& parent, const GradedComplex& sub) {
    if (parent.n_min != sub.n_min || parent.n_max != sub.n_max)
        throw input_error("quotient needs matching degree ranges");
    GradedComplex q;
    q.family = parent.family;
    q.carrier_size = parent.carrier_size;
    q.n_min = parent.n_min;
    q.n_max = parent.n_max;
    if (sub.variant == "degenerate-sub")
        q.variant = "normalized";
    else if (sub.variant == "early-degenerate")
        q.variant = "early-normalized";
    else if (sub.variant == "point" || sub.variant == "sub-multishelf")
        q.variant = "relative";
    else
        q.variant = "quotient";

    if (parent.tuple_labelled && sub.tuple_labelled) {
        // sub spanned by a subset of the parent basis: quotient basis is the
        // complement, boundary is the projected restriction
        std::vector<std::vector<int>> keep_idx(parent.bases.size());
        for (size_t k = 0; k < parent.bases.size(); ++k) {
            std::set<Tuple> in_sub(sub.bases[k].begin(), sub.bases[k].end());
            std::vector<Tuple> kept;
            for (size_t j = 0; j < parent.bases[k].size(); ++j)
                if (!in_sub.count(parent.bases[k][j])) {
                    keep_idx[k].push_back(static_cast<int>(j));
                    kept.push_back(parent.bases[k][j]);
                }
            if (kept.size() + in_sub.size() != parent.bases[k].size())
                throw input_error("sub basis is not a subset of the parent basis");
            q.bases.push_back(std::move(kept));
            q.sizes.push_back(static_cast<int>(q.bases.back().size()));
        }
        q.bnd.emplace_back();
        for (int d = parent.n_min + 1; d <= parent.n_max; ++d) {
            size_t k = static_cast<size_t>(d - parent.n_min);
            const IMat& full = parent.boundary(d);
            IMat m(q.sizes[k - 1], q.sizes[k]);
            std::vector<int> row_pos(parent.bases[k - 1].size(), -1);
            for (size_t r = 0; r < keep_idx[k - 1].size(); ++r) row_pos[keep_idx[k - 1][r]] = static_cast<int>(r);
            for (size_t cj = 0; cj < keep_idx[k].size(); ++cj)
                for (int row = 0; row < full.rows; ++row) {
                    i64 v = full.at(row, keep_idx[k][cj]);
                    if (v != 0 && row_pos[row] >= 0) m.at(row_pos[row], static_cast<int>(cj)) = v;
                }
            q.bnd.push_back(std::move(m));
        }
        q.verify_square_zero();
        return q;
    }

    if (!sub.has_embedding) throw input_error("quotient needs an embedded subcomplex");
    // general path: change coordinates so the sub becomes an initial summand
    q.tuple_labelled = false;
    std::vector<IMat> proj, sect;
    for (int d = parent.n_min; d <= parent.n_max; ++d) {
        size_t k = static_cast<size_t>(d - parent.n_min);
        const IMat& b = sub.embed[k];
        int m = parent.rank(d);
        SmithResult s = smith_normal_form(b);
        for (i64 dv : s.divisors)
            if (dv != 1)
                throw input_error("quotient by a non-pure subgroup has torsion; not representable here");
        int r = static_cast<int>(s.divisors.size());
        IMat p(m - r, m);
        for (int i = 0; i < m - r; ++i)
            for (int j = 0; j < m; ++j) p.at(i, j) = s.u.at(r + i, j);
        IMat uinv = unimodular_inverse(s.u);
        IMat sec(m, m - r);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m - r; ++j) sec.at(i, j) = uinv.at(i, r + j);
        proj.push_back(std::move(p));
        sect.push_back(std::move(sec));
        q.sizes.push_back(m - r);
        q.bases.emplace_back();
    }
    q.bnd.emplace_back();
    for (int d = parent.n_min + 1; d <= parent.n_max; ++d) {
        size_t k = static_cast<size_t>(d - parent.n_min);
        q.bnd.push_back(proj[k - 1] * parent.boundary(d) * sect[k]);
    }
    q.verify_square_zero();
    return q;
}

GradedComplex normalized_complex(const GradedComplex& parent) {
    return quotient(parent, subcomplex_degenerate(parent));
}

GradedComplex relative_complex(const GradedComplex& parent, const GradedComplex& sub) {
    return quotient(parent, sub);
}

IMat remarkable_map(const BinOp& star, int n) {
    int X = star.n();
    int sz = ipow(X, n + 1);
    IMat m(sz, sz);
    Tuple t(n + 1, 0), img(n + 1);
    for (int col = 0; col < sz; ++col) {
        for (int i = 0; i <= n; ++i) {
            int prod = t[i];
            for (int j = i + 1; j <= n; ++j) prod = star.at(prod, t[j]);
            img[i] = static_cast<uint8_t>(prod);
        }
        m.at(tuple_index(img, X), col) = 1;
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat alpha_map(int X, int n) {
    int sz = ipow(X, n + 1);
    IMat m(sz, sz);
    Tuple t(n + 1, 0), img(n + 1);
    for (int col = 0; col < sz; ++col) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            img[0] = t[0];
            int sign = 1;
            for (int i = 1; i <= n; ++i) {
                if (mask & (1u << (i - 1))) {
                    img[i] = t[i - 1];
                    sign = -sign;
                } else {
                    img[i] = t[i];
                }
            }
            int row = tuple_index(img, X);
            m.at(row, col) = checked_add(m.at(row, col), sign);
        }
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat p0_map(int X, int n) {
    if (n < 1) throw degree_out_of_range();
    int cols = ipow(X, n + 1), rows = ipow(X, n);
    IMat m(rows, cols);
    Tuple t(n + 1, 0), img(n);
    for (int col = 0; col < cols; ++col) {
        for (int p = 1; p <= n; ++p) img[p - 1] = t[p];
        m.at(tuple_index(img, X), col) = 1;
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat s0_map(int X, int n) { return degeneracy_map(X, n, 0); }

IMat homotopy_h(int X, int t_elt, int n) {
    int cols = ipow(X, n + 1), rows = ipow(X, n + 2);
    IMat m(rows, cols);
    Tuple t(n + 1, 0), img(n + 2);
    for (int col = 0; col < cols; ++col) {
        for (int p = 0; p <= n; ++p) img[p] = t[p];
        img[n + 1] = static_cast<uint8_t>(t_elt);
        m.at(tuple_index(img, X), col) = 1;
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat star_t_map(const std::vector<BinOp>& ops, const std::vector<i64>& w, int t_elt, int n) {
    int X = ops.at(0).n();
    int sz = ipow(X, n + 1);
    IMat m(sz, sz);
    Tuple t(n + 1, 0), img(n + 1);
    for (int col = 0; col < sz; ++col) {
        for (size_t k = 0; k < ops.size(); ++k) {
            if (w[k] == 0) continue;
            for (int p = 0; p <= n; ++p) img[p] = static_cast<uint8_t>(ops[k].at(t[p], t_elt));
            int row = tuple_index(img, X);
            m.at(row, col) = checked_add(m.at(row, col), w[k]);
        }
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat orbit_homotopy_dist(int X, const std::vector<int>& orbit, int n) {
    int cols = ipow(X, n + 1), rows = ipow(X, n + 2);
    IMat m(rows, cols);
    Tuple t(n + 1, 0), img(n + 2);
    for (int col = 0; col < cols; ++col) {
        for (int a : orbit) {
            img[0] = static_cast<uint8_t>(a);
            for (int p = 0; p <= n; ++p) img[p + 1] = t[p];
            int row = tuple_index(img, X);
            m.at(row, col) = checked_add(m.at(row, col), 1);
        }
        for (int p = n; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

IMat orbit_homotopy_group(int X, const std::vector<int>& orbit, int n) {
    int cols = ipow(X, n), rows = ipow(X, n + 1);
    IMat m(rows, cols);
    Tuple t(n, 0), img(n + 1);
    for (int col = 0; col < cols; ++col) {
        for (int a : orbit) {
            img[0] = static_cast<uint8_t>(a);
            for (int p = 0; p < n; ++p) img[p + 1] = t[p];
            int row = tuple_index(img, X);
            m.at(row, col) = checked_add(m.at(row, col), 1);
        }
        for (int p = n - 1; p >= 0; --p) {
            if (++t[p] < X) break;
            t[p] = 0;
        }
    }
    return m;
}

void verify_right_orbit(const std::vector<BinOp>& ops, const std::vector<int>& orbit) {
    std::set<int> a(orbit.begin(), orbit.end());
    if (a.empty()) throw input_error("orbit must be nonempty");
    for (const BinOp& op : ops)
        for (int b = 0; b < op.n(); ++b) {
            std::set<int> img;
            for (int x : a) img.insert(op.at(x, b));
            if (img != a) throw not_an_orbit(b);
        }
}

}  // namespace disthom
