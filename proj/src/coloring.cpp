#include "disthom/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "disthom/snf.hpp"

namespace disthom {

void ChainVector::add(const Tuple& t, i64 c) {
    if (static_cast<int>(t.size()) != degree + 1) throw input_error("chain term has the wrong length");
    auto it = coeffs.find(t);
    if (it == coeffs.end()) {
        if (c != 0) coeffs.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
}

std::vector<i64> ChainVector::dense(int carrier_size) const {
    int sz = 1;
    for (int i = 0; i <= degree; ++i) sz *= carrier_size;
    std::vector<i64> v(sz, 0);
    for (const auto& [t, c] : coeffs) v[tuple_index(t, carrier_size)] = c;
    return v;
}

ChainVector ChainVector::operator-(const ChainVector& o) const {
    if (degree != o.degree) throw input_error("chain degree mismatch");
    ChainVector r = *this;
    for (const auto& [t, c] : o.coeffs) r.add(t, -c);
    return r;
}

std::string ChainVector::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : coeffs) {
        if (!first) os << " + ";
        if (c != 1) os << c << "*";
        os << "(";
        for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << static_cast<int>(t[i]);
        os << ")";
        first = false;
    }
    return os.str();
}

bool coloring_valid(const LinkDiagram& d, const BinOp& op, const std::vector<int>& arc_colors) {
    if (static_cast<int>(arc_colors.size()) != d.n_arcs) return false;
    for (int col : arc_colors)
        if (col < 0 || col >= op.n()) return false;
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        int in = arc_colors[d.under_in_arc(static_cast<int>(ci))];
        int out = arc_colors[d.under_out_arc(static_cast<int>(ci))];
        int over = arc_colors[d.over_arc(static_cast<int>(ci))];
        if (d.crossings[ci].sign > 0) {
            if (op.at(in, over) != out) return false;
        } else {
            if (op.at(out, over) != in) return false;
        }
    }
    return true;
}

namespace {

struct ColoringSearch {
    const LinkDiagram& d;
    const BinOp& op;
    bool enumerate;
    long long count = 0;
    std::vector<std::vector<int>> found;
    std::vector<int> color;  // -1 = unset

    ColoringSearch(const LinkDiagram& d_, const BinOp& op_, bool enum_)
        : d(d_), op(op_), enumerate(enum_), color(d_.n_arcs, -1) {}

    // returns false on contradiction; trail collects forced arcs for undo
    bool propagate(std::vector<int>& trail) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
                int ai = d.under_in_arc(static_cast<int>(ci));
                int ao = d.under_out_arc(static_cast<int>(ci));
                int ov = d.over_arc(static_cast<int>(ci));
                bool positive = d.crossings[ci].sign > 0;
                int src = positive ? ai : ao, dst = positive ? ao : ai;
                if (color[src] >= 0 && color[ov] >= 0) {
                    int want = op.at(color[src], color[ov]);
                    if (color[dst] < 0) {
                        color[dst] = want;
                        trail.push_back(dst);
                        progress = true;
                    } else if (color[dst] != want) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void dfs() {
        int arc = -1;
        for (int a = 0; a < d.n_arcs; ++a)
            if (color[a] < 0) {
                arc = a;
                break;
            }
        if (arc < 0) {
            ++count;
            if (enumerate) found.push_back(color);
            return;
        }
        for (int v = 0; v < op.n(); ++v) {
            std::vector<int> trail;
            color[arc] = v;
            if (propagate(trail)) dfs();
            color[arc] = -1;
            for (int a : trail) color[a] = -1;
        }
    }
};

}  // namespace

static void check_colorable(const LinkDiagram& d, const BinOp& op) {
    if (!is_shelf(op)) throw input_error("coloring needs at least a shelf");
    if (d.has_negative_crossing() && !is_invertible(op))
        throw input_error("diagrams with negative crossings need an invertible operation");
}

long long count_colorings(const LinkDiagram& d, const BinOp& op) {
    check_colorable(d, op);
    ColoringSearch cs(d, op, false);
    cs.dfs();
    return cs.count;
}

std::vector<std::vector<int>> enumerate_colorings(const LinkDiagram& d, const BinOp& op) {
    check_colorable(d, op);
    ColoringSearch cs(d, op, true);
    cs.dfs();
    return cs.found;
}

ShadowColoring make_shadow(const LinkDiagram& d, const BinOp& op, const std::vector<int>& arc_colors,
                           int region0_color) {
    if (!coloring_valid(d, op, arc_colors)) throw invalid_coloring("arc colors violate a crossing relation");
    BinOp inv = op;
    bool have_inv = is_invertible(op);
    if (have_inv) inv = invert(op);
    ShadowColoring sh;
    sh.arc_colors = arc_colors;
    sh.region_colors.assign(d.n_regions, -1);
    sh.region_colors[0] = region0_color;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int e = 0; e < d.n_edges; ++e) {
            int l = d.edge_left[e], r = d.edge_right[e];
            int a = arc_colors[d.edge_arc[e]];
            if (sh.region_colors[r] >= 0) {
                int want = op.at(sh.region_colors[r], a);
                if (sh.region_colors[l] < 0) {
                    sh.region_colors[l] = want;
                    progress = true;
                } else if (sh.region_colors[l] != want) {
                    throw invalid_coloring("region rule is inconsistent around the diagram");
                }
            } else if (sh.region_colors[l] >= 0 && have_inv) {
                sh.region_colors[r] = inv.at(sh.region_colors[l], a);
                progress = true;
            }
        }
        for (int i = 0; i < d.n_circles; ++i) {
            int inside = d.circle_inside[i], a = arc_colors[d.circle_arc[i]];
            if (sh.region_colors[0] >= 0 && sh.region_colors[inside] < 0) {
                sh.region_colors[inside] = op.at(sh.region_colors[0], a);
                progress = true;
            }
        }
    }
    for (int r = 0; r < d.n_regions; ++r)
        if (sh.region_colors[r] < 0)
            throw invalid_coloring("region colors not determined (non-invertible operation)");
    return sh;
}

IMat rack_boundary(const BinOp& op, int n) {
    return dist_boundary({op, right_trivial_op(op.carrier)}, {1, -1}, n);
}

ChainVector cycle_c1(const LinkDiagram& d, const BinOp& op, const std::vector<int>& arc_colors) {
    if (!coloring_valid(d, op, arc_colors)) throw invalid_coloring("arc colors violate a crossing relation");
    ChainVector c;
    c.degree = 1;
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        bool positive = d.crossings[ci].sign > 0;
        int a = arc_colors[positive ? d.under_in_arc(static_cast<int>(ci)) : d.under_out_arc(static_cast<int>(ci))];
        int b = arc_colors[d.over_arc(static_cast<int>(ci))];
        c.add({static_cast<uint8_t>(a), static_cast<uint8_t>(b)}, d.crossings[ci].sign);
    }
    std::vector<i64> img = rack_boundary(op, 1).apply(c.dense(op.n()));
    for (i64 v : img)
        if (v != 0) throw dh_error("c(D) failed the cycle check (internal bug)");
    return c;
}

ChainVector cycle_c2(const LinkDiagram& d, const BinOp& op, const ShadowColoring& shadow) {
    if (!coloring_valid(d, op, shadow.arc_colors)) throw invalid_coloring("arc colors violate a crossing relation");
    if (static_cast<int>(shadow.region_colors.size()) != d.n_regions)
        throw invalid_coloring("region color list has the wrong size");
    ChainVector c;
    c.degree = 2;
    for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
        bool positive = d.crossings[ci].sign > 0;
        int a = shadow.arc_colors[positive ? d.under_in_arc(static_cast<int>(ci))
                                           : d.under_out_arc(static_cast<int>(ci))];
        int b = shadow.arc_colors[d.over_arc(static_cast<int>(ci))];
        int x = shadow.region_colors[d.source_region(static_cast<int>(ci))];
        c.add({static_cast<uint8_t>(x), static_cast<uint8_t>(a), static_cast<uint8_t>(b)}, d.crossings[ci].sign);
    }
    std::vector<i64> img = rack_boundary(op, 2).apply(c.dense(op.n()));
    for (i64 v : img)
        if (v != 0) throw dh_error("c2(D) failed the cycle check (internal bug)");
    // p_0 c_2 = c(D)
    ChainVector c1 = cycle_c1(d, op, shadow.arc_colors);
    std::vector<i64> p0c2 = p0_map(op.n(), 2).apply(c.dense(op.n()));
    if (p0c2 != c1.dense(op.n())) throw dh_error("p0(c2) != c(D) (internal bug)");
    return c;
}

bool homologous(const ChainVector& u, const ChainVector& v, const BinOp& op) {
    if (u.degree != v.degree) throw input_error("chain degree mismatch");
    int n = u.degree;
    IMat bnd = rack_boundary(op, n);
    for (i64 x : bnd.apply(u.dense(op.n())))
        if (x != 0) throw not_a_cycle();
    for (i64 x : bnd.apply(v.dense(op.n())))
        if (x != 0) throw not_a_cycle();
    ChainVector diff = u - v;
    return solve_integer(rack_boundary(op, n + 1), diff.dense(op.n())).has_value();
}

}  // namespace disthom
