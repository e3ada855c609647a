#pragma once

#include <map>
#include <optional>

#include "disthom/binop.hpp"
#include "disthom/complex.hpp"
#include "disthom/pd.hpp"

namespace disthom {

struct not_a_cycle : dh_error {
    not_a_cycle() : dh_error("chain is not a cycle") {}
};

// Sparse element of the distributive chain group Z X^{degree+1}.
struct ChainVector {
    int degree = 0;
    std::map<Tuple, i64> coeffs;

    void add(const Tuple& t, i64 c);
    bool is_zero() const { return coeffs.empty(); }
    std::vector<i64> dense(int carrier_size) const;
    ChainVector operator-(const ChainVector& o) const;
    bool operator==(const ChainVector& o) const { return degree == o.degree && coeffs == o.coeffs; }
    std::string to_string() const;
};

// Crossing relations: positive  under_out = under_in * over,
//                     negative  under_in  = under_out * over.
bool coloring_valid(const LinkDiagram& d, const BinOp& op, const std::vector<int>& arc_colors);

// Backtracking count/enumeration with crossing propagation.  Diagrams with
// negative crossings need an invertible operation for the rule to be
// well-posed.
long long count_colorings(const LinkDiagram& d, const BinOp& op);
std::vector<std::vector<int>> enumerate_colorings(const LinkDiagram& d, const BinOp& op);

struct ShadowColoring {
    std::vector<int> arc_colors;
    std::vector<int> region_colors;
};

// Region rule: across an edge, left_region = right_region * arc_color
// (sides relative to the arc's orientation).  Propagates from a chosen color
// of region 0; needs invertibility to walk against the rule.
ShadowColoring make_shadow(const LinkDiagram& d, const BinOp& op, const std::vector<int>& arc_colors,
                           int region0_color);

// c(D) = sum over crossings of sign * (under source label, over label);
// verified to be a cycle for the rack boundary d^(*) - d^(*_0).
ChainVector cycle_c1(const LinkDiagram& d, const BinOp& op, const std::vector<int>& arc_colors);

// c_2(D) = sum of sign * (source region color, under source label, over
// label); verified to be a 2-cycle with p_0 c_2 = c(D).
ChainVector cycle_c2(const LinkDiagram& d, const BinOp& op, const ShadowColoring& shadow);

// rack boundary matrix d^(*) - d^(*_0) at degree n
IMat rack_boundary(const BinOp& op, int n);

// u - v lies in the image of the degree-(n+1) rack boundary?
bool homologous(const ChainVector& u, const ChainVector& v, const BinOp& op);

}  // namespace disthom
