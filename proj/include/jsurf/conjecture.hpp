#pragma once

#include "jsurf/degrees.hpp"
#include "jsurf/normal.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jsurf {

enum class Essentiality { Essential, NotEssential, Unknown };

/// Pluggable answer source for "is this surface essential". Either
/// assumes everything essential (every downstream verdict becomes
/// conditional) or looks surfaces up in an annotation file.
class EssentialityOracle {
public:
    static EssentialityOracle assume_essential();
    /// Lines `c1 c2 ... c7t -> essential|not-essential`, `#` comments.
    static EssentialityOracle from_annotations(const std::string& text);

    Essentiality query(const std::vector<long>& coords) const;
    bool assumed() const { return assume_; }

private:
    bool assume_ = false;
    std::map<std::vector<long>, Essentiality> notes_;
};

enum class Verdict {
    SATISFIED,
    FAILED_SLOPE_MEMBERSHIP,
    FAILED_NO_ESSENTIAL,
    FAILED_NO_JONES_SURFACE,
    CONDITIONAL
};

std::string verdict_name(Verdict v);

/// x(S) = 2 p^2 chi(S) - lambda * sheets.
long x_value(long chi, long sheets, long p, long lambda);

struct Witness {
    std::vector<long> coords;
    long chi = 0;
    long sheets = 0;
    long boundary = 0;
    long x = 0;
    /// multiplicities over the fundamental pieces the sum was built from
    std::vector<std::pair<std::vector<long>, long>> summands;
};

struct OracleCall {
    std::vector<long> coords;
    Essentiality result = Essentiality::Unknown;
    bool assumed = false;
};

struct SlopeVerdict {
    Slope slope;
    DegreeSide side = DegreeSide::Max;
    mpq_class beta;  // the jx value the sheet equation was run with
    Verdict status = Verdict::CONDITIONAL;
    std::string detail;
    std::optional<Witness> witness;
};

struct MembershipCheck {
    bool pass = true;
    bool vacuous = false;  // empty slope sets
    std::vector<Slope> missing;
};

/// Step one: every Jones slope must appear among the boundary slopes
/// of the admissible fundamental surfaces.
MembershipCheck step1_slope_membership(const SlopeData& s,
                                       const std::vector<Slope>& boundary_slopes);

/// Fundamental surface with nonzero x at the slope under test, kept as
/// raw material for the homogeneous combination search.
struct EzEntry {
    std::size_t index = 0;  // into the fundamentals list
    long x = 0;
    long chi = 0;
    long sheets = 0;
    long boundary = 0;
    Essentiality essential = Essentiality::Unknown;
};

struct FundamentalSearch {
    std::optional<Witness> witness;  // x = 0 and oracle-essential
    bool witness_conditional = false;
    std::vector<EzEntry> ez_prime;  // essential, x != 0
    bool any_essential_at_slope = false;
    bool unknown_seen = false;
};

struct SlopedFundamental {
    std::size_t index = 0;
    Slope slope;
    long chi = 0;
    long sheets = 0;
    long boundary = 0;
};

FundamentalSearch find_fundamental_jones(const std::vector<NormalSurface>& fundamentals,
                                         const std::vector<SlopedFundamental>& sloped,
                                         const Slope& slope, long lambda, long p,
                                         const EssentialityOracle& oracle,
                                         std::vector<OracleCall>& calls);

struct ClosedPiece {
    std::size_t index = 0;
    long chi = 0;  // negative: tori and spheres are excluded
};

/// Fundamental non-negative solutions of
///   sum x_i n_i + 2 p^2 sum chi_j m_j = 0
/// over the slope-s essential pieces and the closed ones, filtered to
/// combinations whose pieces are pairwise quad-compatible.
std::vector<std::vector<long>> homozero_search(const std::vector<NormalSurface>& fundamentals,
                                               const std::vector<EzEntry>& ez_prime,
                                               const std::vector<ClosedPiece>& closed,
                                               long p, const HilbertLimits& limits = {});

struct ConjectureConfig {
    HilbertLimits hilbert;
    std::optional<long> period;  // overrides the slope data period
};

struct ConjectureReport {
    long p = 1;
    std::vector<Slope> available_slopes;
    std::vector<SlopeVerdict> verdicts;
    std::vector<OracleCall> oracle_calls;
    bool oracle_assumed = false;
    Verdict overall = Verdict::CONDITIONAL;
};

/// The full decision pipeline: slope membership, per-slope Jones
/// surface search among fundamentals, homogeneous combination search,
/// and the mirrored minimal-degree run with sign-flipped jx*.
ConjectureReport check_strong_slope(const SlopeData& slopes, const Triangulation& T,
                                    const EssentialityOracle& oracle,
                                    const ConjectureConfig& config = {});

struct CorollaryCheck {
    bool pass = false;
    std::string detail;
};

/// Requires the caller to certify that the Jones surface at this slope
/// is a maximal-chi spanning surface; then checks the report carries a
/// sheets-1 witness there.
CorollaryCheck corollary_check(const ConjectureReport& report, const Slope& slope,
                               bool caller_certifies_maximality);

}  // namespace jsurf
