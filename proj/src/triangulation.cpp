#include "jsurf/triangulation.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jsurf {

int edge_index(int u, int v) {
    if (u > v) std::swap(u, v);
    for (int e = 0; e < 6; ++e)
        if (kEdgeVertices[e][0] == u && kEdgeVertices[e][1] == v) return e;
    throw std::invalid_argument("bad edge vertex pair");
}

int quad_pairing(int u, int v) {
    if (u > v) std::swap(u, v);
    if (u == 0) return v - 1;  // 01 -> 0, 02 -> 1, 03 -> 2
    return 5 - u - v;          // type of the complementary pair {0, 6-u-v}
}

std::array<int, 2> quads_meeting_edge(int u, int v) {
    // the two quad types not pairing u with v
    int paired = quad_pairing(u, v);
    std::array<int, 2> out{};
    int k = 0;
    for (int q = 0; q < 3; ++q)
        if (q != paired) out[k++] = q;
    return out;
}

namespace {

struct ParityDSU {
    std::vector<int> parent;
    std::vector<unsigned char> rel;
    explicit ParityDSU(std::size_t n) : parent(n), rel(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<int, unsigned char> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [r, p] = find(parent[x]);
        parent[x] = r;
        rel[x] ^= p;
        return {r, rel[x]};
    }
    bool merge(int x, int y, unsigned char d) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return static_cast<unsigned char>(px ^ py) == d;
        parent[rx] = ry;
        rel[rx] = px ^ py ^ d;
        return true;
    }
};

struct DSU {
    std::vector<int> parent;
    explicit DSU(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void merge(int x, int y) { parent[find(x)] = find(y); }
};

int perm_parity(const std::array<int, 4>& p) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2;  // 0 even, 1 odd
}

std::array<int, 4> perm_inverse(const std::array<int, 4>& p) {
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[p[i]] = i;
    return inv;
}

}  // namespace

Triangulation Triangulation::parse(const std::string& text) {
    Triangulation T;
    std::istringstream in(text);
    std::string line;
    int cur_tet = -1;
    bool in_longitude = false;
    bool has_meridian = false;
    std::map<int, std::map<int, FaceGluing>> raw;
    int max_tet = -1;

    auto fail = [](const std::string& msg) -> void {
        throw std::runtime_error("triangulation parse error: " + msg);
    };

    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "tet") {
            in_longitude = false;
            if (!(ls >> cur_tet) || cur_tet < 0) fail("bad tet index");
            max_tet = std::max(max_tet, cur_tet);
        } else if (kw == "face") {
            in_longitude = false;
            if (cur_tet < 0) fail("face before any tet");
            int f;
            std::string arrow, kind;
            if (!(ls >> f >> arrow >> kind) || arrow != "->" || f < 0 || f > 3)
                fail("bad face line");
            FaceGluing g;
            if (kind == "bdry") {
                g.tet = -1;
            } else if (kind == "tet") {
                std::string permkw, digits;
                if (!(ls >> g.tet >> permkw >> digits) || permkw != "perm" ||
                    digits.size() != 4)
                    fail("bad gluing line");
                std::array<bool, 4> seen{};
                for (int i = 0; i < 4; ++i) {
                    int d = digits[i] - '0';
                    if (d < 0 || d > 3 || seen[d]) fail("bad permutation digits");
                    seen[d] = true;
                    g.perm[i] = d;
                }
                max_tet = std::max(max_tet, g.tet);
            } else {
                fail("face target must be 'tet' or 'bdry'");
            }
            raw[cur_tet][f] = g;
        } else if (kw == "meridian") {
            in_longitude = false;
            if (!(ls >> T.meridian_.tet >> T.meridian_.edge)) fail("bad meridian line");
            if (T.meridian_.edge < 0 || T.meridian_.edge > 5) fail("bad meridian edge");
            has_meridian = true;
            max_tet = std::max(max_tet, T.meridian_.tet);
        } else if (kw == "longitude") {
            in_longitude = true;
        } else if (in_longitude) {
            EdgeRef r;
            int dir = 1;
            try {
                r.tet = std::stoi(kw);
            } catch (...) {
                fail("bad longitude entry '" + kw + "'");
            }
            if (!(ls >> r.edge) || r.edge < 0 || r.edge > 5) fail("bad longitude edge");
            std::string d;
            if (ls >> d) {
                if (d == "+")
                    dir = 1;
                else if (d == "-")
                    dir = -1;
                else
                    fail("bad longitude direction '" + d + "'");
            }
            T.longitude_.push_back(r);
            T.longitude_dirs_.push_back(dir);
            max_tet = std::max(max_tet, r.tet);
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    if (max_tet < 0) fail("no tetrahedra");
    T.ntet_ = max_tet + 1;
    T.gluings_.assign(T.ntet_, {});
    for (auto& tet : T.gluings_)
        for (auto& f : tet) f = FaceGluing{};  // default boundary
    for (const auto& [t, faces] : raw)
        for (const auto& [f, g] : faces) T.gluings_[t][f] = g;
    if (!has_meridian) T.meridian_ = {-1, 0};
    T.validate();
    return T;
}

void Triangulation::validate() {
    // involutivity
    for (int t = 0; t < ntet_; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = gluings_[t][f];
            if (g.is_boundary()) continue;
            if (g.tet >= ntet_)
                throw std::runtime_error("gluing references missing tetrahedron");
            if (g.tet == t && g.perm[f] == f)
                throw std::runtime_error("involution error: face glued to itself");
            const FaceGluing& back = gluings_[g.tet][g.perm[f]];
            if (back.is_boundary() || back.tet != t || back.perm != perm_inverse(g.perm))
                throw std::runtime_error("involution error: gluings not inverse");
        }
    }

    // orientation consistency: glued tets get equal labels across odd
    // permutations, opposite across even ones
    orient_.assign(ntet_, 0);
    for (int seed = 0; seed < ntet_; ++seed) {
        if (orient_[seed] != 0) continue;
        orient_[seed] = 1;
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& g = gluings_[t][f];
                if (g.is_boundary()) continue;
                int want = perm_parity(g.perm) == 1 ? orient_[t] : -orient_[t];
                if (orient_[g.tet] == 0) {
                    orient_[g.tet] = want;
                    stack.push_back(g.tet);
                } else if (orient_[g.tet] != want) {
                    throw std::runtime_error("gluings not orientation-consistent");
                }
            }
        }
    }

    // edge classes with direction parity
    ParityDSU edges(6 * ntet_);
    for (int t = 0; t < ntet_; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = gluings_[t][f];
            if (g.is_boundary()) continue;
            for (int e = 0; e < 6; ++e) {
                int u = kEdgeVertices[e][0], v = kEdgeVertices[e][1];
                if (u == f || v == f) continue;  // edge not in face f
                int iu = g.perm[u], iv = g.perm[v];
                unsigned char flip = iu > iv ? 1 : 0;
                if (!edges.merge(6 * t + e, 6 * g.tet + edge_index(iu, iv), flip))
                    throw std::runtime_error("edge identified to itself reversed");
            }
        }
    }
    edge_class_.assign(6 * ntet_, -1);
    edge_flip_.assign(6 * ntet_, 0);
    std::map<int, int> edge_root_to_class;
    for (int i = 0; i < 6 * ntet_; ++i) {
        auto [r, p] = edges.find(i);
        auto it = edge_root_to_class.find(r);
        if (it == edge_root_to_class.end())
            it = edge_root_to_class.emplace(r, static_cast<int>(edge_root_to_class.size()))
                     .first;
        edge_class_[i] = it->second;
        edge_flip_[i] = p;
    }
    edge_class_count_ = static_cast<int>(edge_root_to_class.size());

    // vertex classes
    DSU verts(4 * ntet_);
    for (int t = 0; t < ntet_; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = gluings_[t][f];
            if (g.is_boundary()) continue;
            for (int v = 0; v < 4; ++v)
                if (v != f) verts.merge(4 * t + v, 4 * g.tet + g.perm[v]);
        }
    vertex_class_.assign(4 * ntet_, -1);
    std::map<int, int> vert_root_to_class;
    for (int i = 0; i < 4 * ntet_; ++i) {
        int r = verts.find(i);
        auto it = vert_root_to_class.find(r);
        if (it == vert_root_to_class.end())
            it = vert_root_to_class.emplace(r, static_cast<int>(vert_root_to_class.size()))
                     .first;
        vertex_class_[i] = it->second;
    }
    vertex_class_count_ = static_cast<int>(vert_root_to_class.size());

    // boundary bookkeeping
    boundary_edge_class_.assign(edge_class_count_, 0);
    boundary_face_count_ = 0;
    std::vector<std::pair<int, int>> bfaces;
    for (int t = 0; t < ntet_; ++t)
        for (int f = 0; f < 4; ++f)
            if (gluings_[t][f].is_boundary()) {
                ++boundary_face_count_;
                bfaces.push_back({t, f});
                for (int e = 0; e < 6; ++e) {
                    int u = kEdgeVertices[e][0], v = kEdgeVertices[e][1];
                    if (u == f || v == f) continue;
                    boundary_edge_class_[edge_class_[6 * t + e]] = 1;
                }
            }

    const bool marked = meridian_.tet >= 0;
    if (marked || !longitude_.empty()) {
        if (bfaces.empty()) throw std::runtime_error("boundary not a torus: closed manifold");
        // boundary surface: triangles = boundary faces, edges paired by
        // pivoting; corners unified through the pairings
        std::map<std::pair<int, int>, int> bfid;
        for (int i = 0; i < static_cast<int>(bfaces.size()); ++i) bfid[bfaces[i]] = i;
        DSU faces_conn(bfaces.size());
        DSU corners(3 * bfaces.size());
        auto corner_node = [&](int fi, int vert) {
            // local corner slot 0..2 by ascending vertex within the face
            auto [t, f] = bfaces[fi];
            int slot = 0;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                if (v == vert) break;
                ++slot;
            }
            return 3 * fi + slot;
        };
        int pairings = 0;
        for (int fi = 0; fi < static_cast<int>(bfaces.size()); ++fi) {
            auto [t, f] = bfaces[fi];
            for (int e = 0; e < 6; ++e) {
                int u = kEdgeVertices[e][0], v = kEdgeVertices[e][1];
                if (u == f || v == f) continue;
                auto partner = boundary_partner(t, f, e);
                auto pit = bfid.find({partner.tet, partner.face});
                if (pit == bfid.end())
                    throw std::runtime_error("internal error: pivot left the boundary");
                int fj = pit->second;
                if (fj == fi && partner.edge == e &&
                    partner.vertex_map[u] == u && partner.vertex_map[v] == v)
                    throw std::runtime_error(
                        "boundary not a torus: edge paired with itself");
                faces_conn.merge(fi, fj);
                corners.merge(corner_node(fi, u), corner_node(fj, partner.vertex_map[u]));
                corners.merge(corner_node(fi, v), corner_node(fj, partner.vertex_map[v]));
                ++pairings;
            }
        }
        if (pairings % 2 != 0)
            throw std::runtime_error("internal error: odd boundary pairing count");
        long E = pairings / 2;
        long F = static_cast<long>(bfaces.size());
        std::map<int, int> croots;
        for (int i = 0; i < static_cast<int>(3 * bfaces.size()); ++i)
            croots[corners.find(i)] = 1;
        long V = static_cast<long>(croots.size());
        std::map<int, int> froots;
        for (int i = 0; i < static_cast<int>(bfaces.size()); ++i)
            froots[faces_conn.find(i)] = 1;
        if (froots.size() != 1)
            throw std::runtime_error("boundary not a torus: boundary not connected");
        if (V - E + F != 0)
            throw std::runtime_error("boundary not a torus: Euler characteristic " +
                                     std::to_string(V - E + F));
    }

    if (marked) {
        if (meridian_.tet >= ntet_ || meridian_.edge < 0 || meridian_.edge > 5)
            throw std::runtime_error("meridian reference out of range");
        if (!boundary_edge_class_[edge_class_[6 * meridian_.tet + meridian_.edge]])
            throw std::runtime_error("meridian edge not on the boundary");
    }

    if (!longitude_.empty()) {
        longitude_meridian_crossings_ = 0;
        int mcls = marked ? edge_class_[6 * meridian_.tet + meridian_.edge] : -1;
        for (std::size_t i = 0; i < longitude_.size(); ++i) {
            const EdgeRef& r = longitude_[i];
            if (r.tet >= ntet_) throw std::runtime_error("broken longitude path: bad tet");
            int cls = edge_class_[6 * r.tet + r.edge];
            if (!boundary_edge_class_[cls])
                throw std::runtime_error("broken longitude path: edge not on boundary");
            if (cls == mcls) ++longitude_meridian_crossings_;
            // consecutive edges must chain head-to-tail through vertex classes
            const EdgeRef& nxt = longitude_[(i + 1) % longitude_.size()];
            auto ends = [&](const EdgeRef& er, int dir) {
                int u = kEdgeVertices[er.edge][0], v = kEdgeVertices[er.edge][1];
                if (dir < 0) std::swap(u, v);
                return std::pair<int, int>{vertex_class_[4 * er.tet + u],
                                           vertex_class_[4 * er.tet + v]};
            };
            auto [su, sv] = ends(r, longitude_dirs_[i]);
            auto [nu, nv] = ends(nxt, longitude_dirs_[(i + 1) % longitude_.size()]);
            (void)su;
            (void)nv;
            if (sv != nu) throw std::runtime_error("broken longitude path: not closed");
        }
    }
}

Triangulation::BoundaryEdgePartner Triangulation::boundary_partner(int tet, int face,
                                                                   int e) const {
    int u = kEdgeVertices[e][0], v = kEdgeVertices[e][1];
    if (u == face || v == face)
        throw std::invalid_argument("edge not contained in face");
    std::array<int, 4> total{0, 1, 2, 3};
    int t = tet;
    int f_in = face;  // the face we are pivoting away from
    int cu = u, cv = v;
    for (int guard = 0; guard <= 4 * ntet_; ++guard) {
        // the other face of t containing edge (cu, cv)
        int g = -1;
        for (int w = 0; w < 4; ++w)
            if (w != cu && w != cv && w != f_in) g = w;
        const FaceGluing& gl = gluings_[t][g];
        if (gl.is_boundary()) {
            BoundaryEdgePartner out;
            out.tet = t;
            out.face = g;
            out.edge = edge_index(cu, cv);
            out.vertex_map = total;
            return out;
        }
        std::array<int, 4> next_total{};
        for (int w = 0; w < 4; ++w) next_total[w] = gl.perm[total[w]];
        total = next_total;
        f_in = gl.perm[g];
        int nu = gl.perm[cu], nv = gl.perm[cv];
        t = gl.tet;
        cu = nu;
        cv = nv;
    }
    throw std::runtime_error("internal error: edge pivot did not terminate");
}

int Triangulation::meridian_class() const {
    if (meridian_.tet < 0) throw std::runtime_error("triangulation has no meridian");
    return edge_class_[6 * meridian_.tet + meridian_.edge];
}

}  // namespace jsurf
