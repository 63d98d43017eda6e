#include "jsurf/normal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace jsurf {

bool NormalSurface::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](long v) { return v == 0; });
}

long NormalSurface::edge_weight(const Triangulation& T, int tet, int edge) const {
    (void)T;
    int u = kEdgeVertices[edge][0], v = kEdgeVertices[edge][1];
    auto [qa, qb] = quads_meeting_edge(u, v);
    return tri(tet, u) + tri(tet, v) + quad(tet, qa) + quad(tet, qb);
}

bool is_admissible(const Triangulation& T, const std::vector<long>& coords) {
    for (int t = 0; t < T.tet_count(); ++t) {
        int nonzero = 0;
        for (int q = 0; q < 3; ++q)
            if (coords[7 * t + 4 + q] != 0) ++nonzero;
        if (nonzero > 1) return false;
    }
    return true;
}

NormalSurface NormalSurface::from_coords(const Triangulation& T,
                                         std::vector<long> coords) {
    if (coords.size() != static_cast<std::size_t>(7 * T.tet_count()))
        throw std::invalid_argument("coordinate vector length must be 7t");
    if (std::any_of(coords.begin(), coords.end(), [](long v) { return v < 0; }))
        throw std::invalid_argument("normal coordinates must be non-negative");
    NormalSurface s;
    s.admissible = is_admissible(T, coords);
    s.coords = std::move(coords);
    return s;
}

DiophantineSystem matching_equations(const Triangulation& T) {
    DiophantineSystem sys;
    sys.cols = 7 * T.tet_count();
    for (int t = 0; t < T.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = T.gluing(t, f);
            if (g.is_boundary()) continue;
            // list every interior face pair once, from its lower side
            if (std::make_pair(g.tet, g.perm[f]) < std::make_pair(t, f)) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                std::vector<long> row(sys.cols, 0);
                row[7 * t + v] += 1;
                row[7 * t + 4 + quad_pairing(v, f)] += 1;
                row[7 * g.tet + g.perm[v]] -= 1;
                row[7 * g.tet + 4 + quad_pairing(g.perm[v], g.perm[f])] -= 1;
                sys.rows.push_back(std::move(row));
            }
        }
    }
    return sys;
}

std::vector<NormalSurface> fundamental_surfaces(const Triangulation& T,
                                                const HilbertLimits& limits) {
    DiophantineSystem sys = matching_equations(T);
    std::vector<NormalSurface> out;
    for (auto& v : hilbert_basis(sys, limits))
        out.push_back(NormalSurface::from_coords(T, std::move(v)));
    return out;
}

long euler_characteristic(const Triangulation& T, const NormalSurface& S) {
    if (!S.admissible) throw std::runtime_error("not an embedded surface");

    long points = 0;
    std::vector<char> seen_edge(T.edge_class_count(), 0);
    for (int t = 0; t < T.tet_count(); ++t) {
        for (int e = 0; e < 6; ++e) {
            int cls = T.edge_class(t, e);
            if (seen_edge[cls]) continue;
            seen_edge[cls] = 1;
            points += S.edge_weight(T, t, e);
        }
    }

    long arcs = 0;
    for (int t = 0; t < T.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = T.gluing(t, f);
            if (!g.is_boundary() &&
                std::make_pair(g.tet, g.perm[f]) < std::make_pair(t, f))
                continue;  // interior faces counted from the lower side only
            for (int v = 0; v < 4; ++v)
                if (v != f) arcs += S.tri(t, v) + S.quad(t, quad_pairing(v, f));
        }
    }

    long discs = std::accumulate(S.coords.begin(), S.coords.end(), 0L);
    return points - arcs + discs;
}

namespace {

// point on a boundary edge class; position measured along the class's
// canonical low-to-high direction
using Node = std::pair<int, long>;

struct ArcEnd {
    Node node;
    int tet, edge;  // the edge instance the endpoint sits on
};

struct Arc {
    ArcEnd end[2];
    int ftet, fface;  // boundary face carrying the arc
};

// true when face f of tet t lies to the left of its edge directed p -> q
bool face_left_of(const Triangulation& T, int t, int f, int p, int q) {
    int tri[3], k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) tri[k++] = v;
    // boundary orientation of the tet: ascending triple, reversed when
    // orient * (-1)^f is negative
    bool ascending = (T.orientation(t) * (f % 2 == 0 ? 1 : -1)) > 0;
    if (!ascending) std::swap(tri[1], tri[2]);
    for (int i = 0; i < 3; ++i)
        if (tri[i] == p && tri[(i + 1) % 3] == q) return true;
    return false;
}

// crossing sign of the curve step (in -> out) against the canonical
// direction dir of the node's edge class: +1 when passing right to left
int crossing_sign(const Triangulation& T, const ArcEnd& in, int ftet_in, int fface_in,
                  const ArcEnd& out, int ftet_out, int fface_out, int dir) {
    auto leftness = [&](const ArcEnd& e, int ft, int ff) {
        int d = T.edge_flipped(e.tet, e.edge) ? -dir : dir;
        int u = kEdgeVertices[e.edge][0], v = kEdgeVertices[e.edge][1];
        if (d < 0) std::swap(u, v);
        return face_left_of(T, ft, ff, u, v);
    };
    bool lin = leftness(in, ftet_in, fface_in);
    bool lout = leftness(out, ftet_out, fface_out);
    if (lout && !lin) return 1;
    if (lin && !lout) return -1;
    throw std::runtime_error("internal error: boundary faces on the same edge side");
}

}  // namespace

BoundaryData boundary_data(const Triangulation& T, const NormalSurface& S) {
    if (!S.admissible) throw std::runtime_error("not an embedded surface");

    auto canonical = [&](int t, int e, long pos_from_low) -> Node {
        long w = S.edge_weight(T, t, e);
        long pos = T.edge_flipped(t, e) ? w - 1 - pos_from_low : pos_from_low;
        return {T.edge_class(t, e), pos};
    };

    std::vector<Arc> arcs;
    for (int t = 0; t < T.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            if (!T.is_boundary_face(t, f)) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                long count = S.tri(t, v) + S.quad(t, quad_pairing(v, f));
                int other[2], k = 0;
                for (int w = 0; w < 4; ++w)
                    if (w != v && w != f) other[k++] = w;
                for (long a = 0; a < count; ++a) {
                    Arc arc;
                    arc.ftet = t;
                    arc.fface = f;
                    for (int s = 0; s < 2; ++s) {
                        int e = edge_index(v, other[s]);
                        long w = S.edge_weight(T, t, e);
                        long pos_low = v < other[s] ? a : w - 1 - a;
                        arc.end[s] = {canonical(t, e, pos_low), t, e};
                    }
                    arcs.push_back(arc);
                }
            }
        }
    }
    if (arcs.empty()) throw std::runtime_error("no boundary");

    // every point is the endpoint of exactly two boundary arcs
    std::map<Node, std::vector<std::pair<std::size_t, int>>> incidence;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (int s = 0; s < 2; ++s) incidence[arcs[i].end[s].node].push_back({i, s});
    for (const auto& [node, slots] : incidence)
        if (slots.size() != 2)
            throw std::runtime_error("internal error: boundary point degree != 2");

    const int mcls = T.meridian().tet >= 0 ? T.meridian_class() : -1;
    struct LongEntry {
        int cls;
        int dir;
    };
    std::vector<LongEntry> lpath;
    for (std::size_t i = 0; i < T.longitude().size(); ++i) {
        const EdgeRef& r = T.longitude()[i];
        int d = T.longitude_dirs()[i] * (T.edge_flipped(r.tet, r.edge) ? -1 : 1);
        lpath.push_back({T.edge_class(r.tet, r.edge), d});
    }

    BoundaryData out;
    if (T.meridian().tet >= 0)
        out.sheets = S.edge_weight(T, T.meridian().tet, T.meridian().edge);

    std::vector<char> used(arcs.size(), 0);
    for (std::size_t start = 0; start < arcs.size(); ++start) {
        if (used[start]) continue;
        long cross_mu = 0, cross_lambda = 0;
        std::size_t i = start;
        int from = 0;  // the endpoint the arc is entered through
        std::size_t guard = 0;
        do {
            if (++guard > 2 * arcs.size())
                throw std::runtime_error("internal error: boundary trace diverged");
            used[i] = 1;
            const ArcEnd& in = arcs[i].end[1 - from];
            const auto& slots = incidence[in.node];
            auto [j, s] = slots[0].first == i && slots[0].second == 1 - from
                              ? slots[1]
                              : slots[0];
            const ArcEnd& outn = arcs[j].end[s];
            if (in.node.first == mcls)
                cross_mu += crossing_sign(T, in, arcs[i].ftet, arcs[i].fface, outn,
                                          arcs[j].ftet, arcs[j].fface, 1);
            for (const auto& le : lpath)
                if (in.node.first == le.cls)
                    cross_lambda += crossing_sign(T, in, arcs[i].ftet, arcs[i].fface,
                                                  outn, arcs[j].ftet, arcs[j].fface,
                                                  le.dir);
            i = j;
            from = s;
        } while (!(i == start && from == 0));
        BoundaryCurve c;
        c.a = cross_lambda;
        c.b = -cross_mu;
        out.curves.push_back(c);
        if (c.trivial())
            ++out.trivial_curves;
        else
            ++out.boundary_count;
    }

    // coherence: all nontrivial curves parallel after sign normalization
    bool have = false;
    std::pair<long, long> cls{0, 0};
    for (const auto& c : out.curves) {
        if (c.trivial()) continue;
        long g = std::gcd(std::abs(c.a), std::abs(c.b));
        long a = c.a / g, b = c.b / g;
        if (b < 0 || (b == 0 && a < 0)) {
            a = -a;
            b = -b;
        }
        if (!have) {
            cls = {a, b};
            have = true;
        } else if (cls != std::make_pair(a, b)) {
            out.coherent = false;
        }
    }
    if (have) out.slope = Slope(cls.first, cls.second);
    return out;
}

bool compatible(const NormalSurface& s1, const NormalSurface& s2) {
    const int t = static_cast<int>(s1.coords.size() / 7);
    for (int i = 0; i < t; ++i) {
        for (int q1 = 0; q1 < 3; ++q1) {
            if (s1.quad(i, q1) == 0) continue;
            for (int q2 = 0; q2 < 3; ++q2)
                if (q2 != q1 && s2.quad(i, q2) != 0) return false;
        }
    }
    return true;
}

NormalSurface haken_sum(const Triangulation& T, const NormalSurface& s1,
                        const NormalSurface& s2) {
    if (!compatible(s1, s2))
        throw std::runtime_error("incompatible quadrilateral types");
    std::vector<long> sum(s1.coords.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = s1.coords[i] + s2.coords[i];
    return NormalSurface::from_coords(T, std::move(sum));
}

}  // namespace jsurf
