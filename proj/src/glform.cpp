#include "mockgl/glform.hpp"

#include "mockgl/invariants.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mgl {

std::string to_string(FeetKind k) {
    switch (k) {
        case FeetKind::AlternatingPairs: return "alternating_pairs";
        case FeetKind::Unlinked: return "unlinked";
        default: return "mixed";
    }
}

std::vector<int> BandPresentation::resolved_feet() const {
    std::vector<int> f;
    switch (feet) {
        case FeetKind::AlternatingPairs:
            if (n_bands % 2 != 0) throw PreconditionError("alternating feet need an even number of bands");
            for (int k = 0; k < n_bands; k += 2) f.insert(f.end(), {k, k + 1, k, k + 1});
            return f;
        case FeetKind::Unlinked:
            for (int k = 0; k < n_bands; ++k) f.insert(f.end(), {k, k});
            return f;
        default:
            return feet_order;
    }
}

namespace {

struct FeetLayout {
    std::vector<int> order;
    std::vector<std::pair<int, int>> pos;  // first and second foot of each band
};

FeetLayout layout(const BandPresentation& b) {
    FeetLayout l;
    l.order = b.resolved_feet();
    if (static_cast<int>(l.order.size()) != 2 * b.n_bands) throw PreconditionError("feet order must list every band twice");
    l.pos.assign(b.n_bands, {-1, -1});
    for (int k = 0; k < static_cast<int>(l.order.size()); ++k) {
        const int i = l.order[k];
        if (i < 0 || i >= b.n_bands) throw PreconditionError("feet order refers to an unknown band");
        auto& p = l.pos[i];
        if (p.first < 0)
            p.first = k;
        else if (p.second < 0)
            p.second = k;
        else
            throw PreconditionError("band has more than two feet");
    }
    for (const auto& p : l.pos)
        if (p.second < 0) throw PreconditionError("band has fewer than two feet");
    return l;
}

struct BoundaryWalk {
    int components = 0;
    std::vector<bool> parallel;
    std::vector<int> direction;  // +1 when both strands run from the first foot to the second
};

// Endpoint 2k is the left end of foot k, 2k+1 its right end.
BoundaryWalk walk_boundary(const BandPresentation& b, const FeetLayout& l) {
    BoundaryWalk w;
    w.parallel.assign(b.n_bands, false);
    w.direction.assign(b.n_bands, 0);
    const int nf = static_cast<int>(l.order.size());
    if (nf == 0) {
        w.components = 1;
        return w;
    }
    std::vector<int> disk(2 * nf), band(2 * nf), band_of(2 * nf);
    for (int k = 0; k < nf; ++k) {
        disk[2 * k + 1] = 2 * ((k + 1) % nf);
        disk[2 * ((k + 1) % nf)] = 2 * k + 1;
    }
    for (int i = 0; i < b.n_bands; ++i) {
        const int p = l.pos[i].first, q = l.pos[i].second;
        const bool odd = is_odd(b.twists[i]);
        const int pl = 2 * p, pr = 2 * p + 1, ql = 2 * q, qr = 2 * q + 1;
        auto join = [&](int x, int y) {
            band[x] = y;
            band[y] = x;
            band_of[x] = band_of[y] = i;
        };
        if (odd) {
            join(pl, ql);
            join(pr, qr);
        } else {
            join(pl, qr);
            join(pr, ql);
        }
    }
    std::vector<bool> seen(2 * nf, false);
    std::vector<std::vector<int>> dirs(b.n_bands);
    for (int start = 0; start < 2 * nf; ++start) {
        if (seen[start]) continue;
        ++w.components;
        int x = start;
        while (!seen[x]) {
            seen[x] = true;
            const int y = band[x];
            seen[y] = true;
            const int i = band_of[x];
            dirs[i].push_back(x / 2 == l.pos[i].first ? 1 : -1);
            x = disk[y];
        }
    }
    for (int i = 0; i < b.n_bands; ++i) {
        w.parallel[i] = dirs[i].size() == 2 && dirs[i][0] == dirs[i][1];
        w.direction[i] = w.parallel[i] ? dirs[i][0] : 0;
    }
    return w;
}

void check_shape(const BandPresentation& b) {
    if (b.n_bands < 0) throw PreconditionError("negative band count");
    if (static_cast<int>(b.twists.size()) != b.n_bands) throw PreconditionError("one twist count per band required");
    for (const auto& c : b.crossings) {
        if (c.over < 0 || c.over >= b.n_bands || c.under < 0 || c.under >= b.n_bands)
            throw PreconditionError("band crossing refers to an unknown band");
        if (c.sign != 1 && c.sign != -1) throw PreconditionError("band crossing sign must be +1 or -1");
    }
    for (const auto& t : b.twists) {
        if (b.feet == FeetKind::AlternatingPairs && is_odd(t))
            throw PreconditionError("alternating feet need even twist counts");
        if (b.feet == FeetKind::Unlinked && !is_odd(t)) throw PreconditionError("unlinked feet need odd twist counts");
    }
    if (b.basis) {
        if (b.basis->rows() != b.n_bands || b.basis->cols() != b.n_bands)
            throw PreconditionError("basis must be n_bands x n_bands");
        if (b.n_bands > 0 && iabs(det(*b.basis)) != 1) throw PreconditionError("basis must be unimodular");
    }
}

}  // namespace

int boundary_components(const BandPresentation& b) {
    check_shape(b);
    return walk_boundary(b, layout(b)).components;
}

void validate(const BandPresentation& b) {
    if (boundary_components(b) != 1) throw PreconditionError("band presentation boundary is not a single circle");
}

Int euler_of_band_presentation(const BandPresentation& b) {
    check_shape(b);
    const auto l = layout(b);
    const auto w = walk_boundary(b, l);
    if (w.components != 1) throw PreconditionError("band presentation boundary is not a single circle");
    Int e = 0;
    for (int i = 0; i < b.n_bands; ++i)
        if (w.parallel[i]) e -= 2 * b.twists[i];
    for (const auto& c : b.crossings) {
        if (!w.parallel[c.over] || !w.parallel[c.under]) continue;
        if (c.over == c.under)
            e -= 4 * c.sign;
        else
            e -= 4 * c.sign * w.direction[c.over] * w.direction[c.under];
    }
    return e;
}

MockSeifertMatrix matrix_of_band_presentation(const BandPresentation& b) {
    validate(b);
    const auto l = layout(b);
    const int n = b.n_bands;
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = b.twists[i];
    for (const auto& c : b.crossings) a(c.over, c.under) += 2 * c.sign;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto [pi, qi] = l.pos[i];
            const auto [pj, qj] = l.pos[j];
            const bool pin = pi < pj && pj < qi;
            const bool qin = pi < qj && qj < qi;
            if (pin == qin || pi > pj) continue;
            // each interleaved pair is handled once, from the band whose first foot comes first
            a(i, j) += 1;
            a(j, i) -= 1;
        }
    if (b.basis) a = b.basis->transpose() * a * *b.basis;
    return MockSeifertMatrix(a, euler_of_band_presentation(b));
}

MockSeifertMatrix s_star_move(const MockSeifertMatrix& a, Tube) {
    const int n = a.size();
    IntMatrix m(n + 2, n + 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a.entries(i, j);
    m(n, n + 1) = 1;
    m(n + 1, n) = 1;
    return MockSeifertMatrix(m, a.euler);
}

MockSeifertMatrix s_star_move(const MockSeifertMatrix& a, HalfBand h) {
    if (h.sign != 1 && h.sign != -1) throw PreconditionError("half band sign must be +1 or -1");
    IntMatrix m = block_diag(a.entries, IntMatrix{{Int(h.sign)}});
    std::optional<Int> e;
    if (a.euler) e = *a.euler - 2 * h.sign;
    return MockSeifertMatrix(m, e);
}

std::optional<std::vector<int>> face_coloring(const CarrierSurface& s) {
    const int nf = static_cast<int>(s.faces.size());
    std::vector<int> col(nf, -1);
    if (s.vertices == 0) {
        if (nf == 2) return std::vector<int>{0, 1};
        return std::nullopt;
    }
    std::vector<std::vector<int>> adj(nf);
    for (const auto& [r, l] : s.face_adjacency) {
        adj[r].push_back(l);
        adj[l].push_back(r);
    }
    for (int f0 = 0; f0 < nf; ++f0) {
        if (col[f0] >= 0) continue;
        col[f0] = 0;
        std::deque<int> q{f0};
        while (!q.empty()) {
            const int f = q.front();
            q.pop_front();
            for (int g : adj[f]) {
                if (col[g] < 0) {
                    col[g] = 1 - col[f];
                    q.push_back(g);
                } else if (col[g] == col[f]) {
                    return std::nullopt;
                }
            }
        }
    }
    return col;
}

namespace {

constexpr int kGoeritzSign = 1;
constexpr int kSkewSign = 1;

std::array<int, 4> ccw_half_edges(const CarrierSurface& s, const Diagram& d, int v) {
    const auto& h = s.darts_at[v];
    if (d.crossings[v].sign > 0) return {h[0], h[1], h[2], h[3]};
    return {h[0], h[3], h[2], h[1]};
}

struct TaitEdge {
    int v = 0;
    int j0 = 0;  // colour corner between h[j0] and h[j0+1]
    int from = 0, to = 0;
    int eta = 1;
    bool type_two = false;
};

// A corner (h[j], h[j+1]) sits in the face of dart h[j+1].
int corner_dart(const std::array<int, 4>& h, int j) { return h[(j + 1) % 4]; }

}  // namespace

namespace detail {

MockSeifertMatrix checkerboard_matrix(const Diagram& d, const CarrierSurface& s, const std::vector<int>& coloring,
                                      int color, int goeritz_sign, int skew_sign,
                                      std::vector<std::vector<int>>* cycles_out) {
    const int n = d.size();
    if (n == 0) return MockSeifertMatrix(IntMatrix(0, 0), Int(0));
    std::vector<TaitEdge> edges(n);
    std::vector<std::array<int, 4>> hs(n);
    Int type_two_sum = 0;
    for (int v = 0; v < n; ++v) {
        hs[v] = ccw_half_edges(s, d, v);
        TaitEdge& e = edges[v];
        e.v = v;
        e.j0 = coloring[s.darts[corner_dart(hs[v], 0)].face] == color ? 0 : 1;
        e.from = s.darts[corner_dart(hs[v], e.j0)].face;
        e.to = s.darts[corner_dart(hs[v], e.j0 + 2)].face;
        e.eta = e.j0 == 0 ? 1 : -1;
        e.type_two = (d.crossings[v].sign > 0) == (e.j0 == 0);
        if (e.type_two) type_two_sum += e.eta;
    }
    std::vector<int> faces;
    for (int f = 0; f < static_cast<int>(s.faces.size()); ++f)
        if (coloring[f] == color) faces.push_back(f);

    // BFS spanning tree of the Tait graph
    std::map<int, int> parent_edge;  // face -> crossing used to reach it (-1 at the root)
    std::map<int, std::vector<int>> incident;
    for (int v = 0; v < n; ++v) {
        incident[edges[v].from].push_back(v);
        if (edges[v].to != edges[v].from) incident[edges[v].to].push_back(v);
    }
    std::vector<bool> tree(n, false);
    std::map<int, int> depth;
    for (int root : faces) {
        if (depth.count(root)) continue;
        depth[root] = 0;
        parent_edge[root] = -1;
        std::deque<int> q{root};
        while (!q.empty()) {
            const int f = q.front();
            q.pop_front();
            for (int v : incident[f]) {
                const int g = edges[v].from == f ? edges[v].to : edges[v].from;
                if (depth.count(g)) continue;
                depth[g] = depth[f] + 1;
                parent_edge[g] = v;
                tree[v] = true;
                q.push_back(g);
            }
        }
    }

    struct Step {
        int v;
        int dir;  // +1 from the j0 corner to the j0+2 corner
    };
    auto path_to_root = [&](int f) {
        std::vector<Step> p;  // steps walking from f up to the root
        while (parent_edge[f] >= 0) {
            const int v = parent_edge[f];
            const int dir = edges[v].from == f ? 1 : -1;
            p.push_back({v, dir});
            f = dir > 0 ? edges[v].to : edges[v].from;
        }
        return p;
    };

    std::vector<std::vector<Step>> cycles;
    for (int v = 0; v < n; ++v) {
        if (tree[v]) continue;
        std::vector<Step> c{{v, 1}};
        auto up = path_to_root(edges[v].to);
        auto down = path_to_root(edges[v].from);
        while (!up.empty() && !down.empty() && up.back().v == down.back().v) {
            up.pop_back();
            down.pop_back();
        }
        for (const auto& st : up) c.push_back(st);
        for (auto it = down.rbegin(); it != down.rend(); ++it) c.push_back({it->v, -it->dir});
        cycles.push_back(std::move(c));
    }

    const int m = static_cast<int>(cycles.size());
    std::vector<std::vector<int>> coef(m, std::vector<int>(n, 0));
    std::vector<Chain> xs(m, Chain(s.edges, 0)), ys(m, Chain(s.edges, 0));
    for (int i = 0; i < m; ++i) {
        const auto& c = cycles[i];
        const int len = static_cast<int>(c.size());
        for (int k = 0; k < len; ++k) {
            const Step& st = c[k];
            const TaitEdge& e = edges[st.v];
            coef[i][st.v] += st.dir;
            // dual chain: crossing the two half-edges between the corners, counterclockwise
            for (int t = 1; t <= 2; ++t) {
                const int h = hs[st.v][(e.j0 + t) % 4];
                ys[i][arc_of(h)] += Int(st.dir * (is_tail(h) ? 1 : -1));
            }
            // primal chain: run along the face boundary to the next departure corner
            const Step& nx = c[(k + 1) % len];
            const TaitEdge& ne = edges[nx.v];
            const int arrive = corner_dart(hs[st.v], st.dir > 0 ? e.j0 + 2 : e.j0);
            const int depart = corner_dart(hs[nx.v], nx.dir > 0 ? ne.j0 : ne.j0 + 2);
            const int face = s.darts[arrive].face;
            if (s.darts[depart].face != face) throw std::logic_error("tait cycle is not closed");
            const auto& walk = s.faces[face];
            const int fl = static_cast<int>(walk.size());
            for (int p = s.darts[arrive].face_pos; p != s.darts[depart].face_pos; p = (p + 1) % fl) {
                const int x = walk[p];
                xs[i][arc_of(x)] += is_tail(x) ? 1 : -1;
            }
        }
    }
    IntMatrix a(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Int g = 0;
            for (int v = 0; v < n; ++v) g += edges[v].eta * coef[i][v] * coef[j][v];
            a(i, j) = goeritz_sign * g + skew_sign * pair_chains(xs[i], ys[j]);
        }
    if (cycles_out) *cycles_out = coef;
    return MockSeifertMatrix(a, Int(-2 * goeritz_sign) * type_two_sum);
}

}  // namespace detail

std::vector<CheckerboardSurface> checkerboard_surfaces(const Diagram& d) {
    const auto s = build_carrier(d);
    const auto col = face_coloring(s);
    if (!col) throw PreconditionError("diagram is not checkerboard colorable");
    int preferred = 0;
    if (d.size() > 0) {
        const int len = static_cast<int>(d.passages.size());
        const int arc = (d.basepoint - 1 + len) % len;
        preferred = (*col)[s.left_face(arc)];
    }
    std::vector<CheckerboardSurface> out;
    for (int c = 0; c < 2; ++c) {
        CheckerboardSurface cs;
        cs.color = c;
        cs.preferred = c == preferred;
        for (int f = 0; f < static_cast<int>(s.faces.size()); ++f)
            if ((*col)[f] == c) cs.faces.push_back(f);
        cs.matrix = detail::checkerboard_matrix(d, s, *col, c, kGoeritzSign, kSkewSign, &cs.cycles);
        out.push_back(std::move(cs));
    }
    auto key = [](const CheckerboardSurface& cs) {
        return std::make_pair(cs.matrix.size(), normalize_text(alexander(cs.matrix)));
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return out;
}

std::pair<MockSeifertMatrix, MockSeifertMatrix> checkerboard_matrices(const Diagram& d) {
    auto cs = checkerboard_surfaces(d);
    return {cs[0].matrix, cs[1].matrix};
}

MockSeifertMatrix preferred_matrix(const Diagram& d) {
    for (auto& cs : checkerboard_surfaces(d))
        if (cs.preferred) return cs.matrix;
    throw std::logic_error("no preferred surface");
}

}  // namespace mgl
