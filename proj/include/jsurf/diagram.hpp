#pragma once

#include <array>
#include <string>
#include <vector>

namespace jsurf {

/// One PD record X a b c d. Slot 0 (a) is the incoming understrand;
/// slots 1..3 (b, c, d) follow counterclockwise. The understrand runs
/// a -> c, the overstrand occupies b and d.
struct Crossing {
    std::array<long, 4> arcs;
};

struct ValidationReport {
    bool ok = false;
    int components = 0;
    std::vector<long> bad_arcs;  // arcs whose multiplicity is not 2
    std::string message;
};

/// PD-coded knot/link diagram. Crossingless circle components are
/// tracked separately in free_loops (the 0-crossing unknot is one free
/// loop and no crossings). Immutable after construction.
class Diagram {
public:
    Diagram() = default;
    Diagram(std::vector<Crossing> crossings, int free_loops);

    /// Parse whitespace/newline-separated "X a b c d" records.
    /// '#' starts a comment through end of line. Empty input is the
    /// 0-crossing unknot. Throws std::runtime_error on inconsistent
    /// PD codes or malformed tokens.
    static Diagram parse_pd(const std::string& text);

    static Diagram unknot() { return Diagram({}, 1); }
    static Diagram empty() { return Diagram({}, 0); }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int free_loops() const { return free_loops_; }
    std::size_t crossing_count() const { return crossings_.size(); }

    /// Per-crossing orientation signs (+1/-1); empty diagram -> empty.
    const std::vector<int>& signs() const { return signs_; }
    int writhe() const;
    int components() const { return components_; }
    bool is_knot() const { return components_ == 1; }

    /// Swap over/under at every crossing (rotate each quadruple by one).
    Diagram mirror() const;

    /// Blackboard-framed m-parallel cable. Each crossing becomes an
    /// m x m grid; m = 0 gives the empty diagram, m = 1 returns the
    /// diagram unchanged.
    Diagram cable(unsigned m) const;

    /// Diagnostic check of arc multiplicities and orientability.
    static ValidationReport validate_pd(const std::string& text);
    ValidationReport validate() const;

private:
    void analyze();  // orientation propagation: signs + components

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::vector<int> signs_;
    int components_ = 0;
};

}  // namespace jsurf
