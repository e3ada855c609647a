#include "disthom/opset.hpp"

#include <algorithm>
#include <set>

namespace disthom {

OpSet::OpSet(Carrier c, std::vector<BinOp> o) : carrier(std::move(c)), ops(std::move(o)) {
    for (const BinOp& op : ops)
        if (op.carrier.size != carrier.size) throw carrier_mismatch();
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j)
            if (ops[i] == ops[j]) throw input_error("operation set has duplicate entries");
    recompute();
}

bool OpSet::contains(const BinOp& op) const {
    return std::find(ops.begin(), ops.end(), op) != ops.end();
}

void OpSet::recompute() {
    is_distributive_set = disthom::is_distributive_set(ops);
    all_idempotent = std::all_of(ops.begin(), ops.end(), [](const BinOp& o) { return is_idempotent(o); });
    all_invertible = std::all_of(ops.begin(), ops.end(), [](const BinOp& o) { return is_invertible(o); });
    is_monoid_closed = contains(right_trivial_op(carrier));
    for (const BinOp& f : ops)
        for (const BinOp& g : ops)
            if (is_monoid_closed && !contains(compose(f, g))) is_monoid_closed = false;
}

bool is_distributive_set(const std::vector<BinOp>& ops) { return !distributivity_witness(ops).has_value(); }

std::optional<std::pair<int, int>> distributivity_witness(const std::vector<BinOp>& ops) {
    for (size_t i = 0; i < ops.size(); ++i) {
        if (!is_shelf(ops[i])) return std::make_pair(static_cast<int>(i), static_cast<int>(i));
        for (size_t j = i + 1; j < ops.size(); ++j)
            if (!distributes_over(ops[i], ops[j]) || !distributes_over(ops[j], ops[i]))
                return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    }
    return std::nullopt;
}

OpSet monoid_closure(const OpSet& seed, int max_size) {
    std::vector<BinOp> work;
    auto add = [&](const BinOp& op) {
        if (std::find(work.begin(), work.end(), op) == work.end()) {
            work.push_back(op);
            return true;
        }
        return false;
    };
    add(right_trivial_op(seed.carrier));
    for (const BinOp& op : seed.ops) add(op);
    if (static_cast<int>(work.size()) > max_size) throw size_exceeded();
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = work.size();
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = 0; j < sz; ++j)
                if (add(compose(work[i], work[j]))) {
                    if (static_cast<int>(work.size()) > max_size) throw size_exceeded();
                    grew = true;
                }
    }
    OpSet out(seed.carrier, std::move(work));
    if (seed.is_distributive_set && !out.is_distributive_set)
        throw dh_error("closure of a distributive set failed to stay distributive (internal bug)");
    return out;
}

std::optional<std::pair<int, int>> commutativity_witness(const std::vector<BinOp>& ops) {
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j)
            if (compose(ops[i], ops[j]) != compose(ops[j], ops[i]))
                return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    return std::nullopt;
}

}  // namespace disthom
