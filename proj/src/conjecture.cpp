#include "jsurf/conjecture.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jsurf {

EssentialityOracle EssentialityOracle::assume_essential() {
    EssentialityOracle o;
    o.assume_ = true;
    return o;
}

EssentialityOracle EssentialityOracle::from_annotations(const std::string& text) {
    EssentialityOracle o;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long> coords;
        std::string tok;
        bool arrow = false;
        while (ls >> tok) {
            if (tok == "->") {
                arrow = true;
                break;
            }
            try {
                coords.push_back(std::stol(tok));
            } catch (...) {
                throw std::runtime_error("oracle parse error: bad coordinate '" + tok +
                                         "'");
            }
        }
        if (coords.empty() && !arrow) continue;
        std::string tag;
        if (!arrow || !(ls >> tag) || coords.empty())
            throw std::runtime_error("oracle parse error: expected 'coords... -> tag'");
        if (tag == "essential")
            o.notes_[coords] = Essentiality::Essential;
        else if (tag == "not-essential")
            o.notes_[coords] = Essentiality::NotEssential;
        else
            throw std::runtime_error("oracle parse error: unknown tag '" + tag + "'");
    }
    return o;
}

Essentiality EssentialityOracle::query(const std::vector<long>& coords) const {
    if (assume_) return Essentiality::Essential;
    auto it = notes_.find(coords);
    return it == notes_.end() ? Essentiality::Unknown : it->second;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SATISFIED: return "SATISFIED";
        case Verdict::FAILED_SLOPE_MEMBERSHIP: return "FAILED_SLOPE_MEMBERSHIP";
        case Verdict::FAILED_NO_ESSENTIAL: return "FAILED_NO_ESSENTIAL";
        case Verdict::FAILED_NO_JONES_SURFACE: return "FAILED_NO_JONES_SURFACE";
        case Verdict::CONDITIONAL: return "CONDITIONAL";
    }
    return "?";
}

long x_value(long chi, long sheets, long p, long lambda) {
    return 2 * p * p * chi - lambda * sheets;
}

namespace {

Slope slope_of_rational(const mpq_class& q) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
        throw std::runtime_error("slope does not fit machine integers");
    return Slope(q.get_num().get_si(), q.get_den().get_si());
}

}  // namespace

MembershipCheck step1_slope_membership(const SlopeData& s,
                                       const std::vector<Slope>& boundary_slopes) {
    MembershipCheck out;
    std::set<Slope> avail(boundary_slopes.begin(), boundary_slopes.end());
    std::set<Slope> wanted;
    for (const auto& v : s.js) wanted.insert(slope_of_rational(v));
    for (const auto& v : s.js_star) wanted.insert(slope_of_rational(v));
    out.vacuous = wanted.empty();
    for (const auto& w : wanted)
        if (!avail.count(w)) out.missing.push_back(w);
    out.pass = out.missing.empty();
    return out;
}

FundamentalSearch find_fundamental_jones(const std::vector<NormalSurface>& fundamentals,
                                         const std::vector<SlopedFundamental>& sloped,
                                         const Slope& slope, long lambda, long p,
                                         const EssentialityOracle& oracle,
                                         std::vector<OracleCall>& calls) {
    FundamentalSearch out;
    for (const auto& sf : sloped) {
        if (!(sf.slope == slope)) continue;
        const NormalSurface& S = fundamentals[sf.index];
        Essentiality ess = oracle.query(S.coords);
        calls.push_back({S.coords, ess, oracle.assumed()});
        if (ess == Essentiality::NotEssential) continue;
        if (ess == Essentiality::Unknown) out.unknown_seen = true;
        out.any_essential_at_slope = true;
        long x = x_value(sf.chi, sf.sheets, p, lambda);
        if (x == 0) {
            bool conditional = oracle.assumed() || ess == Essentiality::Unknown;
            if (!out.witness || (out.witness_conditional && !conditional)) {
                Witness w;
                w.coords = S.coords;
                w.chi = sf.chi;
                w.sheets = sf.sheets;
                w.boundary = sf.boundary;
                w.x = 0;
                w.summands.push_back({S.coords, 1});
                out.witness = std::move(w);
                out.witness_conditional = conditional;
            }
        } else {
            out.ez_prime.push_back({sf.index, x, sf.chi, sf.sheets, sf.boundary, ess});
        }
    }
    return out;
}

std::vector<std::vector<long>> homozero_search(
    const std::vector<NormalSurface>& fundamentals, const std::vector<EzEntry>& ez_prime,
    const std::vector<ClosedPiece>& closed, long p, const HilbertLimits& limits) {
    DiophantineSystem sys;
    sys.cols = ez_prime.size() + closed.size();
    std::vector<long> row;
    for (const auto& e : ez_prime) row.push_back(e.x);
    for (const auto& c : closed) row.push_back(2 * p * p * c.chi);
    sys.rows.push_back(std::move(row));

    auto piece_index = [&](std::size_t col) {
        return col < ez_prime.size() ? ez_prime[col].index
                                     : closed[col - ez_prime.size()].index;
    };

    std::vector<std::vector<long>> out;
    for (auto& sol : hilbert_basis(sys, limits)) {
        std::vector<std::size_t> active;
        for (std::size_t c = 0; c < sol.size(); ++c)
            if (sol[c] != 0) active.push_back(c);
        bool ok = true;
        for (std::size_t i = 0; i < active.size() && ok; ++i)
            for (std::size_t j = i + 1; j < active.size() && ok; ++j)
                ok = compatible(fundamentals[piece_index(active[i])],
                                fundamentals[piece_index(active[j])]);
        if (ok) out.push_back(std::move(sol));
    }
    return out;
}

namespace {

int severity(Verdict v) {
    switch (v) {
        case Verdict::SATISFIED: return 0;
        case Verdict::CONDITIONAL: return 1;
        case Verdict::FAILED_NO_JONES_SURFACE: return 2;
        case Verdict::FAILED_NO_ESSENTIAL: return 3;
        case Verdict::FAILED_SLOPE_MEMBERSHIP: return 4;
    }
    return 1;
}

}  // namespace

ConjectureReport check_strong_slope(const SlopeData& slopes, const Triangulation& T,
                                    const EssentialityOracle& oracle,
                                    const ConjectureConfig& config) {
    ConjectureReport report;
    report.p = config.period.value_or(slopes.period);
    report.oracle_assumed = oracle.assumed();
    const long p = report.p;

    std::vector<NormalSurface> fundamentals = fundamental_surfaces(T, config.hilbert);
    std::vector<SlopedFundamental> sloped;
    std::vector<ClosedPiece> closed;
    for (std::size_t i = 0; i < fundamentals.size(); ++i) {
        const NormalSurface& S = fundamentals[i];
        if (!S.admissible) continue;
        long chi = euler_characteristic(T, S);
        try {
            BoundaryData bd = boundary_data(T, S);
            if (bd.boundary_count == 0 || !bd.coherent) continue;
            sloped.push_back({i, bd.slope, chi, bd.sheets, bd.boundary_count});
        } catch (const std::runtime_error& e) {
            if (std::string(e.what()) != "no boundary") throw;
            // closed pieces: incompressible surfaces of genus > 1 only
            if (chi >= 0) continue;
            Essentiality ess = oracle.query(S.coords);
            report.oracle_calls.push_back({S.coords, ess, oracle.assumed()});
            if (ess != Essentiality::NotEssential) closed.push_back({i, chi});
        }
    }

    std::set<Slope> avail;
    for (const auto& sf : sloped) avail.insert(sf.slope);
    report.available_slopes.assign(avail.begin(), avail.end());

    auto run_side = [&](DegreeSide side, const std::vector<mpq_class>& jset,
                        const std::vector<mpq_class>& bset) {
        for (const auto& sq : jset) {
            Slope s = slope_of_rational(sq);
            if (!avail.count(s)) {
                SlopeVerdict v;
                v.slope = s;
                v.side = side;
                v.status = Verdict::FAILED_SLOPE_MEMBERSHIP;
                v.detail = "slope not realized by any fundamental surface boundary";
                report.verdicts.push_back(std::move(v));
                continue;
            }
            for (const auto& beta : bset) {
                SlopeVerdict v;
                v.slope = s;
                v.side = side;
                v.beta = beta;
                try {
                    mpq_class beta_eff = side == DegreeSide::Max ? beta : -beta;
                    long lambda = lambda_of(beta_eff, p);
                    FundamentalSearch fs =
                        find_fundamental_jones(fundamentals, sloped, s, lambda, p,
                                               oracle, report.oracle_calls);
                    if (fs.witness) {
                        v.status = fs.witness_conditional ? Verdict::CONDITIONAL
                                                          : Verdict::SATISFIED;
                        v.witness = fs.witness;
                        if (fs.witness_conditional)
                            v.detail = "witness essentiality not certified";
                    } else if (!fs.any_essential_at_slope) {
                        v.status = Verdict::FAILED_NO_ESSENTIAL;
                        v.detail = "no essential fundamental surface at this slope";
                    } else {
                        auto combos = homozero_search(fundamentals, fs.ez_prime, closed,
                                                      p, config.hilbert);
                        bool any_conditional = false;
                        std::optional<Witness> cond_witness;
                        for (const auto& combo : combos) {
                            std::vector<long> coords(7 * T.tet_count(), 0);
                            bool has_boundary_piece = false;
                            Witness w;
                            for (std::size_t c = 0; c < combo.size(); ++c) {
                                if (combo[c] == 0) continue;
                                std::size_t idx = c < fs.ez_prime.size()
                                                      ? fs.ez_prime[c].index
                                                      : closed[c - fs.ez_prime.size()].index;
                                if (c < fs.ez_prime.size()) has_boundary_piece = true;
                                const auto& pc = fundamentals[idx].coords;
                                for (std::size_t k = 0; k < coords.size(); ++k)
                                    coords[k] += combo[c] * pc[k];
                                w.summands.push_back({pc, combo[c]});
                            }
                            if (!has_boundary_piece) continue;
                            NormalSurface sum = NormalSurface::from_coords(T, coords);
                            if (!sum.admissible) continue;
                            BoundaryData bd = boundary_data(T, sum);
                            if (!bd.coherent || !(bd.slope == s)) continue;
                            w.coords = coords;
                            w.chi = euler_characteristic(T, sum);
                            w.sheets = bd.sheets;
                            w.boundary = bd.boundary_count;
                            w.x = x_value(w.chi, w.sheets, p, lambda);
                            if (w.x != 0) continue;
                            Essentiality ess = oracle.query(coords);
                            report.oracle_calls.push_back({coords, ess, oracle.assumed()});
                            if (ess == Essentiality::NotEssential) continue;
                            bool conditional =
                                oracle.assumed() || ess == Essentiality::Unknown ||
                                fs.unknown_seen;
                            if (!conditional) {
                                v.status = Verdict::SATISFIED;
                                v.witness = std::move(w);
                                break;
                            }
                            if (!cond_witness) cond_witness = std::move(w);
                            any_conditional = true;
                        }
                        if (!v.witness) {
                            if (any_conditional) {
                                v.status = Verdict::CONDITIONAL;
                                v.witness = cond_witness;
                                v.detail = "summed witness essentiality not certified";
                            } else {
                                v.status = Verdict::FAILED_NO_JONES_SURFACE;
                                v.detail =
                                    "no essential combination with x = 0 at this slope";
                            }
                        }
                    }
                } catch (const std::exception& e) {
                    v.status = Verdict::CONDITIONAL;
                    v.detail = std::string("error: ") + e.what();
                }
                if (oracle.assumed() && v.status == Verdict::SATISFIED) {
                    v.status = Verdict::CONDITIONAL;
                    v.detail = "essentiality assumed, not certified";
                }
                report.verdicts.push_back(std::move(v));
            }
        }
    };

    run_side(DegreeSide::Max, slopes.js, slopes.jx);
    run_side(DegreeSide::Min, slopes.js_star, slopes.jx_star);

    Verdict overall = Verdict::SATISFIED;
    for (const auto& v : report.verdicts)
        if (severity(v.status) > severity(overall)) overall = v.status;
    report.overall = overall;
    return report;
}

CorollaryCheck corollary_check(const ConjectureReport& report, const Slope& slope,
                               bool caller_certifies_maximality) {
    CorollaryCheck out;
    if (!caller_certifies_maximality) {
        out.detail = "caller must certify maximality";
        return out;
    }
    for (const auto& v : report.verdicts) {
        if (!(v.slope == slope) || !v.witness) continue;
        if (v.witness->sheets == 1) {
            out.pass = true;
            out.detail = "sheets-1 witness present";
            return out;
        }
    }
    out.detail = "no sheets-1 witness at this slope";
    return out;
}

}  // namespace jsurf
