#pragma once

#include <stdexcept>
#include <string>

namespace disthom {

struct dh_error : std::runtime_error {
    explicit dh_error(const std::string& what) : std::runtime_error(what) {}
};

struct carrier_mismatch : dh_error {
    carrier_mismatch() : dh_error("operations live on different carriers") {}
};

struct not_invertible : dh_error {
    int column;
    explicit not_invertible(int b)
        : dh_error("operation not invertible: column " + std::to_string(b) + " is not a permutation"),
          column(b) {}
};

struct not_idempotent_endomap : dh_error {
    int witness;
    explicit not_idempotent_endomap(int x)
        : dh_error("endomap is not idempotent: g(g(" + std::to_string(x) + ")) != g(" + std::to_string(x) + ")"),
          witness(x) {}
};

struct not_endomorphism : dh_error {
    int a, b;
    not_endomorphism(int a_, int b_)
        : dh_error("map is not a group endomorphism at (" + std::to_string(a_) + "," + std::to_string(b_) + ")"),
          a(a_), b(b_) {}
};

struct idempotency_required : dh_error {
    idempotency_required() : dh_error("variant iii requires h o h = h") {}
};

struct not_a_group : dh_error {
    explicit not_a_group(const std::string& why) : dh_error("not a group table: " + why) {}
};

struct not_a_lattice : dh_error {
    explicit not_a_lattice(const std::string& why) : dh_error("not a lattice: " + why) {}
};

struct not_distributive_lattice : dh_error {
    not_distributive_lattice() : dh_error("lattice is not distributive") {}
};

struct size_exceeded : dh_error {
    size_exceeded() : dh_error("monoid closure exceeds the size bound") {}
};

struct budget_exceeded : dh_error {
    budget_exceeded() : dh_error("search budget exceeded") {}
};

struct weak_distributivity_violated : dh_error {
    int a, b, c, op1, op2;
    weak_distributivity_violated(int a_, int b_, int c_, int o1, int o2)
        : dh_error("weak distributivity fails on triple (" + std::to_string(a_) + "," + std::to_string(b_) + "," +
                   std::to_string(c_) + ") for operations #" + std::to_string(o1) + ",#" + std::to_string(o2)),
          a(a_), b(b_), c(c_), op1(o1), op2(o2) {}
};

struct not_associative : dh_error {
    int a, b, c;
    not_associative(int a_, int b_, int c_)
        : dh_error("operation is not associative at (" + std::to_string(a_) + "," + std::to_string(b_) + "," +
                   std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

struct not_a_subcomplex : dh_error {
    explicit not_a_subcomplex(const std::string& witness)
        : dh_error("span is not closed under the boundary: " + witness) {}
};

struct not_a_spindle : dh_error {
    not_a_spindle() : dh_error("all operations must be idempotent here") {}
};

struct not_an_orbit : dh_error {
    int column;
    explicit not_an_orbit(int b)
        : dh_error("subset is not a finite right orbit: *_" + std::to_string(b) + " does not permute it"),
          column(b) {}
};

struct hypothesis_violated : dh_error {
    std::string condition;
    explicit hypothesis_violated(const std::string& cond)
        : dh_error("theorem hypothesis violated: " + cond), condition(cond) {}
};

struct degree_out_of_range : dh_error {
    degree_out_of_range() : dh_error("degree outside the complex range") {}
};

struct malformed_pd : dh_error {
    explicit malformed_pd(const std::string& why) : dh_error("malformed PD code: " + why) {}
};

struct non_planar : dh_error {
    non_planar() : dh_error("PD code fails the Euler region count; not a planar diagram") {}
};

struct invalid_site : dh_error {
    explicit invalid_site(const std::string& why) : dh_error("invalid Reidemeister site: " + why) {}
};

struct invalid_coloring : dh_error {
    explicit invalid_coloring(const std::string& why) : dh_error("invalid coloring: " + why) {}
};

struct input_error : dh_error {
    explicit input_error(const std::string& why) : dh_error(why) {}
};

}  // namespace disthom
