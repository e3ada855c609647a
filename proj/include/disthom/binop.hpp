#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disthom/errors.hpp"

namespace disthom {

struct Carrier {
    int size = 0;
    std::vector<std::string> labels;  // display only, empty or exactly `size` distinct strings

    Carrier() = default;
    explicit Carrier(int n) : size(n) { validate(); }
    Carrier(int n, std::vector<std::string> lab) : size(n), labels(std::move(lab)) { validate(); }

    void validate() const;
    std::string label(int x) const {
        return labels.empty() ? std::to_string(x) : labels[static_cast<size_t>(x)];
    }
    bool operator==(const Carrier& o) const { return size == o.size; }
};

// Binary operation on {0,...,n-1} as a full Cayley table.
// Convention: table[a][b] = a*b, rows are the left argument, so every
// adjoint map *_b is a column.
struct BinOp {
    Carrier carrier;
    std::vector<uint8_t> table;  // n*n entries, row-major

    BinOp() = default;
    BinOp(Carrier c, std::vector<uint8_t> t);

    int n() const { return carrier.size; }
    int at(int a, int b) const { return table[static_cast<size_t>(a) * carrier.size + b]; }
    void set(int a, int b, int v) { table[static_cast<size_t>(a) * carrier.size + b] = static_cast<uint8_t>(v); }

    bool operator==(const BinOp& o) const { return carrier.size == o.carrier.size && table == o.table; }
    bool operator!=(const BinOp& o) const { return !(*this == o); }
    bool operator<(const BinOp& o) const { return table < o.table; }

    std::string to_string() const;
};

// the two trivial operations: a*0b = a (monoid identity of Bin(X)) and the
// left trivial a*~b = b
BinOp right_trivial_op(const Carrier& c);
BinOp left_trivial_op(const Carrier& c);

struct StructureClass {
    bool shelf = false;        // (a*b)*c = (a*c)*(b*c)
    bool idempotent = false;   // a*a = a
    bool invertible = false;   // every column is a permutation
    bool associative = false;  // (a*b)*c = a*(b*c)
    bool spindle = false;      // shelf + idempotent
    bool rack = false;         // shelf + invertible
    bool quandle = false;      // rack + idempotent
    bool kei = false;          // quandle with (a*b)*b = a

    std::string to_string() const;
    bool operator==(const StructureClass& o) const = default;
};

bool is_shelf(const BinOp& op);
bool is_idempotent(const BinOp& op);
bool is_invertible(const BinOp& op);        // all columns permutations
bool is_associative(const BinOp& op);
bool is_involutive(const BinOp& op);        // (a*b)*b = a
StructureClass classify(const BinOp& op);

// composition in Bin(X): a (f g) b = (a f b) g b
BinOp compose(const BinOp& f, const BinOp& g);

// inverse in Bin(X); throws not_invertible with a witness column
BinOp invert(const BinOp& op);

// directional distributivity: (a alpha b) beta c == (a beta c) alpha (b beta c)
bool distributes_over(const BinOp& alpha, const BinOp& beta);

// the distributive-set condition restricted to a pair (f = g allowed):
// both directions plus self-distributivity of each
bool is_distributive_pair(const BinOp& f, const BinOp& g);

// Multiset reading of the weak-distributivity sum
//   (a*1b)*2c + (a*2b)*1c = (a*2c)*1(b*2c) + (a*1c)*2(b*1c)
// plus self-distributivity of each operation.
bool is_weakly_distributive_pair(const BinOp& f, const BinOp& g);

// Multiset reading of the weak-associativity sum
//   (a*1b)*2c + (a*2b)*1c = a*2(b*1c) + a*1(b*2c)
// plus associativity of each operation.
bool is_weakly_associative_pair(const BinOp& f, const BinOp& g);

// shelves from endomaps
BinOp make_g_shelf(const Carrier& c, const std::vector<int>& g);           // a*b = g(b), needs g o g = g
BinOp make_f_shelf(const Carrier& c, const std::vector<int>& f);           // a*b = f(a), any f
BinOp make_retraction_shelf(const Carrier& c, const std::vector<int>& r);  // alias of the g construction

// finite group given by its multiplication table
struct GroupTable {
    BinOp mul;
    int identity = -1;
    std::vector<int> inverse;

    static GroupTable from_table(const BinOp& mul);  // verifies the group axioms
};

enum class GroupShelfVariant { i, ii, iii };

// spindles on a group: (i) a*b = h(ab^-1)b, (ii) a*b = h(b^-1 a)b,
// (iii) a*b = h(ba^-1)b with h o h = h
BinOp make_group_shelf(const GroupTable& g, const std::vector<int>& h, GroupShelfVariant variant);

// generalized lattices: first flag = conditions (1)-(3) (self-distributivity,
// absorption, column idempotence), second flag = condition (4) (mutual
// distributivity)
std::pair<bool, bool> is_generalized_lattice(const BinOp& f, const BinOp& g);

// relabel the table by a carrier permutation: result[p(a)][p(b)] = p(a*b)
BinOp relabel(const BinOp& op, const std::vector<int>& p);

void require_same_carrier(const BinOp& f, const BinOp& g);

}  // namespace disthom
