#include "disthom/pd.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace disthom {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool LinkDiagram::has_negative_crossing() const {
    for (const Crossing& c : crossings)
        if (c.sign < 0) return true;
    return false;
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (const Crossing& c : crossings) w += c.sign;
    return w;
}

void LinkDiagram::analyze() {
    int nc = static_cast<int>(crossings.size());
    std::vector<int> in_count(n_edges, 0), out_count(n_edges, 0);
    for (const Crossing& c : crossings)
        for (int s = 0; s < 4; ++s) {
            int e = c.e[s];
            if (e < 0 || e >= n_edges) throw malformed_pd("edge id out of range");
            (c.slot_incoming(s) ? in_count[e] : out_count[e])++;
        }
    for (int e = 0; e < n_edges; ++e) {
        if (in_count[e] + out_count[e] != 2)
            throw malformed_pd("edge " + std::to_string(e) + " used " +
                               std::to_string(in_count[e] + out_count[e]) + " times (expected 2)");
        if (in_count[e] != 1 || out_count[e] != 1)
            throw malformed_pd("edge " + std::to_string(e) + " violates orientation (needs one head, one tail)");
    }

    // arcs: glue edges through over-passages
    edge_arc.assign(n_edges, -1);
    {
        UnionFind uf(std::max(n_edges, 1));
        for (const Crossing& c : crossings) uf.unite(c.over_in(), c.over_out());
        std::map<int, int> arc_id;
        for (int e = 0; e < n_edges; ++e) {
            int root = uf.find(e);
            auto it = arc_id.find(root);
            if (it == arc_id.end()) it = arc_id.emplace(root, static_cast<int>(arc_id.size())).first;
            edge_arc[e] = it->second;
        }
        n_arcs = static_cast<int>(arc_id.size());
    }
    circle_arc.clear();
    for (int i = 0; i < n_circles; ++i) circle_arc.push_back(n_arcs++);

    // components
    {
        UnionFind comp(std::max(n_edges, 1));
        for (const Crossing& c : crossings) {
            comp.unite(c.over_in(), c.over_out());
            comp.unite(c.under_in(), c.under_out());
        }
        std::map<int, int> comp_id;
        for (int e = 0; e < n_edges; ++e) comp_id.emplace(comp.find(e), 0);
        n_components = static_cast<int>(comp_id.size()) + n_circles;
    }

    // regions by face tracing: a dart (crossing, slot) walks away from the
    // crossing; the face on its left is the quadrant between slots s and s+1.
    // Continue at the far end of the edge, turning to (far slot - 1) mod 4.
    quadrant.assign(nc, {-1, -1, -1, -1});
    edge_left.assign(n_edges, -1);
    edge_right.assign(n_edges, -1);
    if (nc > 0) {
        std::vector<std::pair<int, int>> tail_dart(n_edges, {-1, -1}), head_dart(n_edges, {-1, -1});
        for (int ci = 0; ci < nc; ++ci)
            for (int s = 0; s < 4; ++s) {
                const Crossing& c = crossings[ci];
                (c.slot_incoming(s) ? head_dart[c.e[s]] : tail_dart[c.e[s]]) = {ci, s};
            }
        UnionFind cg(nc);
        for (int e = 0; e < n_edges; ++e) cg.unite(tail_dart[e].first, head_dart[e].first);
        int comps = 0;
        for (int ci = 0; ci < nc; ++ci)
            if (cg.find(ci) == ci) ++comps;
        if (comps != 1) throw malformed_pd("crossing graph must be connected (split diagrams unsupported)");

        std::vector<std::array<bool, 4>> seen(nc, {false, false, false, false});
        int region = 0;
        for (int ci0 = 0; ci0 < nc; ++ci0)
            for (int s0 = 0; s0 < 4; ++s0) {
                if (seen[ci0][s0]) continue;
                int ci = ci0, s = s0;
                do {
                    seen[ci][s] = true;
                    quadrant[ci][s] = region;
                    const Crossing& c = crossings[ci];
                    auto [cj, sj] = c.slot_incoming(s) ? tail_dart[c.e[s]] : head_dart[c.e[s]];
                    ci = cj;
                    s = (sj + 3) % 4;
                } while (!(ci == ci0 && s == s0));
                ++region;
            }
        n_regions = region;
        for (int ci = 0; ci < nc; ++ci)
            for (int s = 0; s < 4; ++s) {
                const Crossing& c = crossings[ci];
                int e = c.e[s];
                if (c.slot_incoming(s))
                    edge_right[e] = quadrant[ci][s];  // dart walks against the edge orientation
                else
                    edge_left[e] = quadrant[ci][s];
            }
        if (n_regions != nc + 2) throw non_planar();
    } else {
        n_regions = 1;
    }
    circle_inside.clear();
    for (int i = 0; i < n_circles; ++i) circle_inside.push_back(n_regions++);
}

LinkDiagram parse_diagram(const std::string& text) {
    LinkDiagram d;
    std::map<int, int> label_to_edge;
    auto edge_of = [&](int label) {
        auto it = label_to_edge.find(label);
        if (it == label_to_edge.end()) it = label_to_edge.emplace(label, static_cast<int>(label_to_edge.size())).first;
        return it->second;
    };
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "circle") {
            ++d.n_circles;
        } else if (tok == "X+" || tok == "X-") {
            Crossing c;
            c.sign = tok == "X+" ? +1 : -1;
            int lab[4];
            if (!(ls >> lab[0] >> lab[1] >> lab[2] >> lab[3])) throw malformed_pd("crossing needs four edge labels");
            for (int s = 0; s < 4; ++s) c.e[s] = edge_of(lab[s]);
            d.crossings.push_back(c);
            std::string extra;
            if (ls >> extra) throw malformed_pd("trailing input: " + extra);
        } else {
            throw malformed_pd("unrecognized token '" + tok + "'");
        }
    }
    d.n_edges = static_cast<int>(label_to_edge.size());
    d.analyze();
    return d;
}

std::string diagram_to_pd(const LinkDiagram& d) {
    std::ostringstream os;
    for (const Crossing& c : d.crossings) {
        os << (c.sign > 0 ? "X+" : "X-");
        for (int s = 0; s < 4; ++s) os << " " << c.e[s];
        os << "\n";
    }
    for (int i = 0; i < d.n_circles; ++i) os << "circle\n";
    return os.str();
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1) throw input_error("braid needs at least one strand");
    LinkDiagram d;
    int next_edge = 0;
    std::vector<int> cur(strands);
    for (int i = 0; i < strands; ++i) cur[i] = next_edge++;
    std::vector<int> start = cur;
    for (int g : word) {
        int i = g > 0 ? g : -g;
        if (i < 1 || i >= strands) throw input_error("braid generator out of range");
        int left = cur[i - 1], right = cur[i];
        int new_left = next_edge++, new_right = next_edge++;
        Crossing c;
        if (g > 0) {
            c.sign = +1;
            c.e = {right, new_right, new_left, left};  // SE, NE, NW, SW
        } else {
            c.sign = -1;
            c.e = {left, right, new_right, new_left};  // SW, SE, NE, NW
        }
        d.crossings.push_back(c);
        cur[i - 1] = new_left;
        cur[i] = new_right;
    }
    std::vector<int> remap(next_edge);
    std::iota(remap.begin(), remap.end(), 0);
    int circles = 0;
    for (int i = 0; i < strands; ++i) {
        if (cur[i] == start[i]) {
            ++circles;  // untouched strand closes into a circle
            continue;
        }
        remap[cur[i]] = start[i];
    }
    std::map<int, int> compact;
    for (Crossing& c : d.crossings)
        for (int s = 0; s < 4; ++s) {
            int e = remap[c.e[s]];
            auto it = compact.find(e);
            if (it == compact.end()) it = compact.emplace(e, static_cast<int>(compact.size())).first;
            c.e[s] = it->second;
        }
    d.n_edges = static_cast<int>(compact.size());
    d.n_circles = circles;
    d.analyze();
    return d;
}

}  // namespace disthom
