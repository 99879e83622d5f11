#include "mapdist/halfedge.hpp"

#include <algorithm>
#include <queue>

#include "mapdist/errors.hpp"

namespace mapdist {

namespace {

// face orbits of d -> nxt[opp[d]] over arbitrary dart arrays
std::pair<std::vector<int>, int> face_orbits(const std::vector<int>& opp,
                                             const std::vector<int>& nxt) {
    std::vector<int> face_of(opp.size(), -1);
    int nf = 0;
    for (size_t d0 = 0; d0 < opp.size(); ++d0) {
        if (face_of[d0] >= 0) continue;
        int d = static_cast<int>(d0);
        while (face_of[d] < 0) {
            face_of[d] = nf;
            d = nxt[opp[d]];
        }
        ++nf;
    }
    return {std::move(face_of), nf};
}

struct Builder {
    HalfEdgeMap m;
    std::vector<std::vector<int>> rot;
    std::vector<int> stub_darts;  // clockwise contour order
    std::vector<int> stub_steps;  // +1 black, -1 white

    int new_vertex(int color) {
        m.vert_color.push_back(static_cast<signed char>(color));
        rot.emplace_back();
        return m.n_vertices++;
    }
    int new_dart(int v) {
        int d = static_cast<int>(m.opp.size());
        m.opp.push_back(-1);
        m.nxt.push_back(-1);
        m.vert.push_back(v);
        return d;
    }
    void link(int a, int b) {
        m.opp[a] = b;
        m.opp[b] = a;
    }

    // builds the subtree at `node`, returns the dart pointing back to the parent
    int build(const BlossomNode& node) {
        int v = new_vertex(node.color);
        int pd = new_dart(v);
        std::vector<int> child_darts;
        child_darts.reserve(node.children.size());
        for (const auto& child : node.children) {
            int dd = new_dart(v);
            if (child.kind == BlossomNode::Kind::Vertex) {
                link(dd, build(child));
            } else {
                stub_darts.push_back(dd);
                stub_steps.push_back(child.kind == BlossomNode::Kind::BlackLeaf ? +1 : -1);
            }
            child_darts.push_back(dd);
        }
        // CCW rotation: parent first, then children in reverse contour order
        rot[v].push_back(pd);
        for (auto it = child_darts.rbegin(); it != child_darts.rend(); ++it)
            rot[v].push_back(*it);
        return pd;
    }

    void finalize_rotations() {
        for (const auto& r : rot)
            for (size_t i = 0; i < r.size(); ++i) m.nxt[r[i]] = r[(i + 1) % r.size()];
    }
};

}  // namespace

HalfEdgeMap close_tree(const BlossomTree& t) {
    int charge = tree_charge(t.top);
    if (charge != 0 && charge != 1)
        throw structural_error("close_tree: tree charge must be 0 or 1");

    Builder b;
    int v_out = b.new_vertex(-1);
    int d_out = b.new_dart(v_out);
    b.rot[v_out].push_back(d_out);
    b.m.out_leg_dart = d_out;

    if (t.top.kind == BlossomNode::Kind::WhiteLeaf) {
        // trivial two-leg map: the legs joined by a single edge, F0 = F1
        int v_in = b.new_vertex(-1);
        int d_in = b.new_dart(v_in);
        b.rot[v_in].push_back(d_in);
        b.link(d_out, d_in);
        b.m.in_leg_dart = d_in;
        b.finalize_rotations();
        return b.m;
    }
    if (t.top.kind != BlossomNode::Kind::Vertex)
        throw structural_error("close_tree: root cannot hang from a black leaf");

    b.link(d_out, b.build(t.top));

    // match black to the first available white counterclockwise: bracket
    // matching on the counterclockwise circular sequence, rotated to start
    // just past a minimum of the prefix walk
    const int L = static_cast<int>(b.stub_darts.size());
    std::vector<int> steps_ccw(L);
    for (int j = 0; j < L; ++j) steps_ccw[j] = b.stub_steps[L - 1 - j];
    int pos = 0, minv = 0, argmin = -1;
    for (int j = 0; j < L; ++j) {
        pos += steps_ccw[j];
        if (pos <= minv) {
            minv = pos;
            argmin = j;
        }
    }
    int start = (argmin + 1) % std::max(L, 1);
    std::vector<int> stack;
    int unmatched_ccw = -1;
    for (int k = 0; k < L; ++k) {
        int j = (start + k) % L;
        if (steps_ccw[j] > 0) {
            stack.push_back(j);
        } else if (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            b.link(b.stub_darts[L - 1 - i], b.stub_darts[L - 1 - j]);
        } else {
            if (unmatched_ccw >= 0)
                throw structural_error("close_tree: more than one unmatched white leaf");
            unmatched_ccw = j;
        }
    }
    if (!stack.empty()) throw structural_error("close_tree: unmatched black leaves remain");
    if (charge == 1) {
        if (unmatched_ccw < 0) throw structural_error("close_tree: missing out-leg leaf");
        int v_in = b.new_vertex(-1);
        int d_in = b.new_dart(v_in);
        b.rot[v_in].push_back(d_in);
        b.link(b.stub_darts[L - 1 - unmatched_ccw], d_in);
        b.m.in_leg_dart = d_in;
    } else if (unmatched_ccw >= 0) {
        throw structural_error("close_tree: unmatched white leaf in a charge-0 tree");
    }

    b.finalize_rotations();
    b.m.stub_darts_cw = std::move(b.stub_darts);
    b.m.stub_steps_cw = std::move(b.stub_steps);
    return b.m;
}

FaceStructure faces(const HalfEdgeMap& m) {
    FaceStructure fs;
    auto [face_of, nf] = face_orbits(m.opp, m.nxt);
    fs.face_of = std::move(face_of);
    fs.n_faces = nf;
    fs.f1 = fs.face_of[m.out_leg_dart];
    if (m.in_leg_dart >= 0) {
        fs.f0 = fs.face_of[m.in_leg_dart];
    } else {
        // one-leg map: the external face is exposed at a gap where the
        // clockwise prefix walk attains its cyclic maximum
        int pos = 0, best = 0, arg = -1;
        for (size_t i = 0; i < m.stub_steps_cw.size(); ++i) {
            pos += m.stub_steps_cw[i];
            if (pos > best) {
                best = pos;
                arg = static_cast<int>(i);
            }
        }
        if (arg < 0)
            fs.f0 = fs.f1;  // root gap exposed
        else
            fs.f0 = fs.face_of[m.stub_darts_cw[arg]];
    }
    return fs;
}

bool euler_ok(const HalfEdgeMap& m) {
    FaceStructure fs = faces(m);
    return m.n_vertices - m.n_edges() + fs.n_faces == 2;
}

int dual_distance(const HalfEdgeMap& m, bool directed) {
    FaceStructure fs = faces(m);
    std::vector<std::vector<int>> adj(fs.n_faces);
    for (int d = 0; d < m.n_darts(); ++d) {
        int e = m.opp[d];
        if (e < d) continue;
        int fl = fs.face_of[d], fr = fs.face_of[e];
        if (fl == fr) continue;
        int cd = m.vert_color[m.vert[d]];
        int ce = m.vert_color[m.vert[e]];
        if (!directed || cd < 0 || ce < 0) {
            adj[fl].push_back(fr);
            adj[fr].push_back(fl);
        } else if (cd == 0 && ce == 1) {
            // d runs black -> white; the crossing that keeps the white
            // endpoint on the right goes from face_of(d) to face_of(opp(d))
            adj[fl].push_back(fr);
        } else if (cd == 1 && ce == 0) {
            adj[fr].push_back(fl);
        }
    }
    std::vector<int> dist(fs.n_faces, -1);
    std::queue<int> q;
    dist[fs.f0] = 0;
    q.push(fs.f0);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int g : adj[f])
            if (dist[g] < 0) {
                dist[g] = dist[f] + 1;
                q.push(g);
            }
    }
    if (dist[fs.f1] < 0) throw structural_error("dual_distance: target face unreachable");
    return dist[fs.f1];
}

namespace {

struct CutState {
    std::vector<int> opp, nxt, vert;
    std::vector<signed char> vert_color;
    std::vector<signed char> leaf_mark;  // per vertex: -1 none, 0 black, 1 white
    int n_vertices;
    int in_leg_vertex;
    int out_leg_dart;

    int new_leaf(int color) {
        vert_color.push_back(-1);
        leaf_mark.push_back(static_cast<signed char>(color));
        return n_vertices++;
    }
    int new_dart(int v) {
        int d = static_cast<int>(opp.size());
        opp.push_back(-1);
        nxt.push_back(-1);
        vert.push_back(v);
        return d;
    }
};

BlossomNode rebuild(const CutState& st, int parent_dart_at_v) {
    // parent_dart_at_v: the dart at this vertex pointing toward the parent
    int v = st.vert[parent_dart_at_v];
    std::vector<int> order;
    for (int d = st.nxt[parent_dart_at_v]; d != parent_dart_at_v; d = st.nxt[d])
        order.push_back(d);
    std::reverse(order.begin(), order.end());  // rotation is CCW, contour is CW
    std::vector<BlossomNode> children;
    for (int d : order) {
        int w = st.vert[st.opp[d]];
        if (st.leaf_mark[w] == 0)
            children.push_back(BlossomNode::black());
        else if (st.leaf_mark[w] == 1 || w == st.in_leg_vertex)
            children.push_back(BlossomNode::white());
        else
            children.push_back(rebuild(st, st.opp[d]));
    }
    return BlossomNode::vertex(std::move(children), st.vert_color[v]);
}

}  // namespace

BlossomTree cut_map(const HalfEdgeMap& m, OracleFamily family, int p) {
    if (m.in_leg_dart < 0) throw usage_error("cut_map: requires a two-leg map");
    const bool bipartite = family == OracleFamily::BipartiteP;
    CutState st{m.opp,  m.nxt, m.vert, m.vert_color, std::vector<signed char>(m.n_vertices, -1),
                m.n_vertices, m.vert[m.in_leg_dart], m.out_leg_dart};

    // iteratively cut every external-boundary edge that borders a second
    // face, visiting the boundary counterclockwise from the incoming leg
    while (true) {
        auto [face_of, nf] = face_orbits(st.opp, st.nxt);
        if (nf == 1) break;
        // boundary orbit of the external face from the in-leg dart
        std::vector<int> boundary;
        int d = m.in_leg_dart;
        do {
            boundary.push_back(d);
            d = st.nxt[st.opp[d]];
        } while (d != m.in_leg_dart);
        bool cut_any = false;
        for (int bd : boundary) {
            auto [fo, nf2] = face_orbits(st.opp, st.nxt);
            if (nf2 == 1) break;
            int other = st.opp[bd];
            if (fo[bd] != fo[m.in_leg_dart]) continue;  // no longer external
            if (fo[bd] == fo[other]) continue;          // bridge: keep
            if (bipartite && st.vert_color[st.vert[bd]] != 0)
                continue;  // only edges leaving a black vertex may be cut
            // cut: the stub on the boundary side keeps a black tip, the
            // far side a white one
            int vb = st.new_leaf(0);
            int vw = st.new_leaf(1);
            int db = st.new_dart(vb);
            int dw = st.new_dart(vw);
            st.nxt[db] = db;
            st.nxt[dw] = dw;
            st.opp[bd] = db;
            st.opp[db] = bd;
            st.opp[other] = dw;
            st.opp[dw] = other;
            cut_any = true;
        }
        if (!cut_any) throw structural_error("cut_map: no cuttable edge on the boundary");
    }

    BlossomTree t;
    t.family = family;
    t.p = p;
    int root_attach = st.opp[st.out_leg_dart];
    if (st.vert[root_attach] == st.in_leg_vertex) {
        t.top = BlossomNode::white();  // trivial map
        return t;
    }
    t.top = rebuild(st, root_attach);
    return t;
}

}  // namespace mapdist
