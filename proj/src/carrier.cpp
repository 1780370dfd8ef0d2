#include "mockgl/carrier.hpp"

#include <algorithm>
#include <deque>

namespace mgl {

CarrierSurface build_carrier(const Diagram& d) {
    CarrierSurface s;
    const int n = d.size();
    if (n == 0) {
        s.faces = {{}, {}};
        return s;
    }
    const int len = 2 * n;
    s.vertices = n;
    s.edges = len;
    s.darts.assign(2 * len, Dart{});
    s.darts_at.assign(n, {0, 0, 0, 0});

    std::map<int, int> vidx;
    for (int v = 0; v < n; ++v) vidx[d.crossings[v].label] = v;
    for (int i = 0; i < len; ++i) {
        const auto& p = d.passages[i];
        const int v = vidx[p.label];
        const int out = 2 * i;
        const int in = 2 * ((i - 1 + len) % len) + 1;
        s.darts[out].vertex = v;
        s.darts[in].vertex = v;
        s.darts[out].type = p.over ? HalfEdge::Oout : HalfEdge::Uout;
        s.darts[in].type = p.over ? HalfEdge::Oin : HalfEdge::Uin;
        s.darts_at[v][static_cast<int>(s.darts[out].type)] = out;
        s.darts_at[v][static_cast<int>(s.darts[in].type)] = in;
    }
    for (int v = 0; v < n; ++v) {
        const auto& h = s.darts_at[v];
        std::array<HalfEdge, 4> order;
        if (d.crossings[v].sign > 0)
            order = {HalfEdge::Oout, HalfEdge::Uout, HalfEdge::Oin, HalfEdge::Uin};
        else
            order = {HalfEdge::Oout, HalfEdge::Uin, HalfEdge::Oin, HalfEdge::Uout};
        for (int k = 0; k < 4; ++k)
            s.darts[h[static_cast<int>(order[k])]].sigma = h[static_cast<int>(order[(k + 1) % 4])];
    }

    std::vector<bool> seen(s.darts.size(), false);
    for (int start = 0; start < static_cast<int>(s.darts.size()); ++start) {
        if (seen[start]) continue;
        std::vector<int> walk;
        const int f = static_cast<int>(s.faces.size());
        for (int x = start; !seen[x]; x = s.phi(x)) {
            seen[x] = true;
            s.darts[x].face = f;
            s.darts[x].face_pos = static_cast<int>(walk.size());
            walk.push_back(x);
        }
        s.faces.push_back(std::move(walk));
    }
    s.euler_characteristic = s.vertices - s.edges + static_cast<int>(s.faces.size());
    s.genus = (2 - s.euler_characteristic) / 2;
    for (int k = 0; k < len; ++k) s.face_adjacency.emplace_back(s.darts[2 * k].face, s.darts[2 * k + 1].face);
    return s;
}

Chain chain_of_walk(const CarrierSurface& s, const std::vector<int>& walk) {
    Chain c(s.edges, 0);
    for (int x : walk) c[arc_of(x)] += is_tail(x) ? 1 : -1;
    return c;
}

Chain push_right(const CarrierSurface& s, const std::vector<int>& walk) {
    Chain c(s.edges, 0);
    const int m = static_cast<int>(walk.size());
    for (int k = 0; k < m; ++k) {
        const int a = alpha(walk[k]);
        const int b = walk[(k + 1) % m];
        if (s.darts[a].vertex != s.darts[b].vertex) throw std::invalid_argument("dart walk is not closed");
        for (int h = s.darts[a].sigma; h != b; h = s.darts[h].sigma) c[arc_of(h)] += is_tail(h) ? 1 : -1;
    }
    return c;
}

Int pair_chains(const Chain& x, const Chain& y_dual) {
    Int t = 0;
    for (std::size_t e = 0; e < x.size(); ++e) t += x[e] * y_dual[e];
    return t;
}

Int intersection(const CarrierSurface& s, const std::vector<int>& x, const std::vector<int>& y) {
    return pair_chains(chain_of_walk(s, x), push_right(s, y));
}

IntersectionData pairing_of(const CarrierSurface& s, const std::vector<std::vector<int>>& walks) {
    IntersectionData out;
    out.basis = walks;
    const int m = static_cast<int>(walks.size());
    out.pairing = IntMatrix(m, m);
    std::vector<Chain> xs, ys;
    for (const auto& w : walks) {
        xs.push_back(chain_of_walk(s, w));
        ys.push_back(push_right(s, w));
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out.pairing(i, j) = pair_chains(xs[i], ys[j]);
    return out;
}

IntersectionData face_cycle_pairing(const CarrierSurface& s) {
    if (s.vertices == 0) return pairing_of(s, {});
    const int n = s.vertices;
    // primal spanning tree
    std::vector<int> parent_dart(n, -1), depth(n, -1);
    std::vector<bool> in_tree(s.edges, false);
    std::deque<int> q{0};
    depth[0] = 0;
    while (!q.empty()) {
        const int v = q.front();
        q.pop_front();
        for (int x : s.darts_at[v]) {
            const int w = s.darts[alpha(x)].vertex;
            if (depth[w] >= 0) continue;
            depth[w] = depth[v] + 1;
            parent_dart[w] = alpha(x);  // dart at w pointing to its parent
            in_tree[arc_of(x)] = true;
            q.push_back(w);
        }
    }
    // dual spanning tree on the remaining arcs
    const int nf = static_cast<int>(s.faces.size());
    std::vector<bool> fseen(nf, false), in_cotree(s.edges, false);
    std::deque<int> fq{0};
    fseen[0] = true;
    while (!fq.empty()) {
        const int f = fq.front();
        fq.pop_front();
        for (int x : s.faces[f]) {
            const int e = arc_of(x);
            if (in_tree[e]) continue;
            const int g = s.darts[alpha(x)].face;
            if (fseen[g]) continue;
            fseen[g] = true;
            in_cotree[e] = true;
            fq.push_back(g);
        }
    }
    auto path_to_root = [&](int v) {
        std::vector<int> p;
        while (parent_dart[v] >= 0) {
            p.push_back(parent_dart[v]);
            v = s.darts[alpha(parent_dart[v])].vertex;
        }
        return p;
    };
    std::vector<std::vector<int>> basis;
    for (int e = 0; e < s.edges; ++e) {
        if (in_tree[e] || in_cotree[e]) continue;
        const int tail = 2 * e;
        const int v = s.darts[tail].vertex, w = s.darts[tail + 1].vertex;
        auto up = path_to_root(w);    // w -> root
        auto down = path_to_root(v);  // v -> root
        while (!up.empty() && !down.empty() && up.back() == down.back()) {
            up.pop_back();
            down.pop_back();
        }
        std::vector<int> walk{tail};
        for (int x : up) walk.push_back(x);
        for (auto it = down.rbegin(); it != down.rend(); ++it) walk.push_back(alpha(*it));
        basis.push_back(std::move(walk));
    }
    return pairing_of(s, basis);
}

}  // namespace mgl
