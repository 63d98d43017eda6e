#include "jsurf/diagram.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jsurf {

namespace {

// Union-find with parity. rel[x] = parity of x relative to its root.
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

    // Require parity(x) xor parity(y) == d. Returns false on conflict.
    bool merge(int x, int y, unsigned char d) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return static_cast<unsigned char>(px ^ py) == d;
        parent[rx] = ry;
        rel[rx] = px ^ py ^ d;
        return true;
    }
};

std::map<long, std::vector<std::pair<int, int>>> arc_occurrences(
    const std::vector<Crossing>& crossings) {
    std::map<long, std::vector<std::pair<int, int>>> occ;
    for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
        for (int s = 0; s < 4; ++s)
            occ[crossings[i].arcs[s]].push_back({i, s});
    return occ;
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    analyze();
}

void Diagram::analyze() {
    auto occ = arc_occurrences(crossings_);
    for (const auto& [arc, places] : occ) {
        if (places.size() != 2) {
            std::ostringstream os;
            os << "inconsistent PD code: arc " << arc << " appears "
               << places.size() << " times";
            throw std::runtime_error(os.str());
        }
    }

    const int n = static_cast<int>(crossings_.size());
    // Nodes: one per slot occurrence, plus an anchor meaning "incoming".
    // parity 0 relative to the anchor = incoming, 1 = outgoing.
    const int anchor = 4 * n;
    ParityDSU dsu(4 * n + 1);
    auto node = [](int c, int s) { return 4 * c + s; };
    bool ok = true;
    for (int c = 0; c < n; ++c) {
        ok = ok && dsu.merge(node(c, 0), anchor, 0);  // understrand in
        ok = ok && dsu.merge(node(c, 2), anchor, 1);  // understrand out
        ok = ok && dsu.merge(node(c, 1), node(c, 3), 1);  // overstrand through
    }
    for (const auto& [arc, places] : occ) {
        (void)arc;
        // one end leaves a crossing, the other enters one
        ok = ok && dsu.merge(node(places[0].first, places[0].second),
                             node(places[1].first, places[1].second), 1);
    }
    if (!ok) throw std::runtime_error("inconsistent PD code: orientation conflict");

    // parity relative to the anchor's root decides incoming/outgoing.
    // Components never touching an understrand slot have a free global
    // orientation; fix it by treating their root parity 0 as incoming.
    auto [anchor_root, anchor_par] = dsu.find(anchor);
    auto is_incoming = [&](int c, int s) {
        auto [r, p] = dsu.find(node(c, s));
        unsigned char offset = (r == anchor_root) ? anchor_par : 0;
        return (p ^ offset) == 0;
    };

    signs_.assign(n, 0);
    for (int c = 0; c < n; ++c) signs_[c] = is_incoming(c, 1) ? 1 : -1;

    // Trace oriented components: entering a crossing at an in-slot exits
    // at the matching out-slot (under: 0 -> 2, over: 1 <-> 3).
    std::map<std::pair<int, int>, std::pair<int, int>> other_end;
    for (const auto& [arc, places] : occ) {
        (void)arc;
        other_end[places[0]] = places[1];
        other_end[places[1]] = places[0];
    }
    std::map<std::pair<int, int>, bool> seen;
    components_ = free_loops_;
    for (int c = 0; c < n; ++c) {
        for (int s = 0; s < 4; ++s) {
            if (!is_incoming(c, s) || seen[{c, s}]) continue;
            ++components_;
            std::pair<int, int> cur = {c, s};
            while (!seen[cur]) {
                seen[cur] = true;
                int cc = cur.first, ss = cur.second;
                int out = (ss == 0) ? 2 : (ss == 1 ? 3 : 1);
                cur = other_end[{cc, out}];
            }
        }
    }
}

Diagram Diagram::parse_pd(const std::string& text) {
    std::vector<Crossing> crossings;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> tokens;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    std::size_t i = 0;
    while (i < tokens.size()) {
        if (tokens[i] != "X")
            throw std::runtime_error("PD parse error: expected 'X', got '" + tokens[i] + "'");
        if (i + 4 >= tokens.size())
            throw std::runtime_error("PD parse error: truncated record");
        Crossing x{};
        for (int k = 0; k < 4; ++k) {
            const std::string& t = tokens[i + 1 + k];
            try {
                std::size_t pos = 0;
                x.arcs[k] = std::stol(t, &pos);
                if (pos != t.size()) throw std::invalid_argument(t);
            } catch (const std::exception&) {
                throw std::runtime_error("PD parse error: non-numeric token '" + t + "'");
            }
        }
        crossings.push_back(x);
        i += 5;
    }
    if (crossings.empty()) return unknot();
    return Diagram(std::move(crossings), 0);
}

int Diagram::writhe() const {
    int w = 0;
    for (int s : signs_) w += s;
    return w;
}

Diagram Diagram::mirror() const {
    std::vector<Crossing> out;
    out.reserve(crossings_.size());
    for (const auto& x : crossings_)
        out.push_back({{x.arcs[1], x.arcs[2], x.arcs[3], x.arcs[0]}});
    return Diagram(std::move(out), free_loops_);
}

Diagram Diagram::cable(unsigned m) const {
    if (m == 0) return empty();
    if (m == 1) return *this;
    const int n = static_cast<int>(crossings_.size());
    const unsigned M = m;

    // External connectors: for each (crossing, slot) the m cable-arc ids
    // at that side, indexed counterclockwise around the crossing. A cable
    // of a parent arc reverses its counterclockwise index between its
    // two endpoints.
    long next_id = 1;
    std::vector<std::array<std::vector<long>, 4>> conn(n);
    for (auto& c : conn)
        for (auto& side : c) side.assign(M, 0);

    auto occ = arc_occurrences(crossings_);
    for (const auto& [arc, places] : occ) {
        (void)arc;
        auto [c1, s1] = places[0];
        auto [c2, s2] = places[1];
        for (unsigned k = 0; k < M; ++k) {
            long id = next_id++;
            conn[c1][s1][k] = id;
            conn[c2][s2][M - 1 - k] = id;
        }
    }

    std::vector<Crossing> out;
    out.reserve(static_cast<std::size_t>(n) * M * M);
    for (int c = 0; c < n; ++c) {
        // Place the parent crossing with a south, b east, c north, d west.
        // v[i][j]: segment of vertical (under) strand i below row j.
        // h[j][k]: segment of horizontal (over) strand j left of column k.
        std::vector<std::vector<long>> v(M, std::vector<long>(M + 1, 0));
        std::vector<std::vector<long>> h(M, std::vector<long>(M + 1, 0));
        for (unsigned i = 0; i < M; ++i) {
            v[i][0] = conn[c][0][i];
            v[i][M] = conn[c][2][M - 1 - i];
            for (unsigned j = 1; j < M; ++j) v[i][j] = next_id++;
        }
        for (unsigned j = 0; j < M; ++j) {
            h[j][0] = conn[c][3][M - 1 - j];
            h[j][M] = conn[c][1][j];
            for (unsigned k = 1; k < M; ++k) h[j][k] = next_id++;
        }
        for (unsigned j = 0; j < M; ++j)
            for (unsigned i = 0; i < M; ++i)
                out.push_back({{v[i][j], h[j][i + 1], v[i][j + 1], h[j][i]}});
    }
    return Diagram(std::move(out), free_loops_ * static_cast<int>(M));
}

ValidationReport Diagram::validate() const {
    ValidationReport rep;
    rep.ok = true;
    rep.components = components_;
    rep.message = "ok";
    return rep;
}

ValidationReport Diagram::validate_pd(const std::string& text) {
    ValidationReport rep;
    std::vector<Crossing> crossings;
    try {
        Diagram d = parse_pd(text);
        rep = d.validate();
        return rep;
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.message = e.what();
    }
    // Collect the failing arcs for the report, ignoring parse failures.
    try {
        std::istringstream in(text);
        std::string tok;
        std::vector<long> nums;
        while (in >> tok) {
            if (tok == "X" || tok[0] == '#') continue;
            try {
                nums.push_back(std::stol(tok));
            } catch (...) {
            }
        }
        std::map<long, int> mult;
        for (long a : nums) ++mult[a];
        for (const auto& [arc, k] : mult)
            if (k != 2) rep.bad_arcs.push_back(arc);
    } catch (...) {
    }
    return rep;
}

}  // namespace jsurf
