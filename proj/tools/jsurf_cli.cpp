#include "jsurf/conjecture.hpp"
#include "jsurf/degrees.hpp"
#include "jsurf/normal.hpp"
#include "jsurf/sheets.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace jsurf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedVerdict = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t env_limit(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoull(v);
    } catch (...) {
        throw std::runtime_error(std::string("bad value in environment variable ") +
                                 name);
    }
}

ResourceLimits bracket_limits() {
    ResourceLimits l;
    l.max_crossings = env_limit("JSURF_MAX_CROSSINGS", l.max_crossings);
    l.max_states = env_limit("JSURF_MAX_STATES", l.max_states);
    return l;
}

HilbertLimits hilbert_limits() {
    HilbertLimits l;
    l.max_frontier = env_limit("JSURF_MAX_FRONTIER", l.max_frontier);
    l.max_solutions = env_limit("JSURF_MAX_SOLUTIONS", l.max_solutions);
    return l;
}

json rationals_json(const std::vector<mpq_class>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rational_to_string(q));
    return a;
}

json slope_data_json(const SlopeData& s, const Calibration& cal) {
    json j;
    j["js"] = rationals_json(s.js);
    j["js_star"] = rationals_json(s.js_star);
    j["jx"] = rationals_json(s.jx);
    j["jx_star"] = rationals_json(s.jx_star);
    j["period"] = s.period;
    j["n_K"] = s.stabilization;
    j["provisional"] = s.provisional;
    j["samples"] = s.samples;
    j["calibration"] = {{"scale", rational_to_string(cal.scale)},
                        {"offset", rational_to_string(cal.offset)}};
    return j;
}

json polynomial_json(const LaurentPolynomial& p) { return json::parse(p.to_json()); }

SlopeData compute_slope_data(const Diagram& d, long nmax, long pmax, long tail,
                             bool brute, const Calibration& cal) {
    auto seq = degree_sequence(d, nmax, bracket_limits(), brute);
    std::vector<std::pair<long, mpq_class>> plus, minus;
    for (const auto& [n, hi, lo] : seq) {
        plus.push_back({n, hi});
        minus.push_back({n, lo});
    }
    QuasiPolynomial qp = fit_quasipolynomial(plus, pmax, tail);
    QuasiPolynomial qm = fit_quasipolynomial(minus, pmax, tail);
    SlopeData s = slope_data(qp, qm);
    s.samples = nmax;
    return apply_calibration(s, cal);
}

SlopeData slope_data_from_json(const std::string& text) {
    json j = json::parse(text);
    SlopeData s;
    auto fill = [&](const char* key, std::vector<mpq_class>& out) {
        if (!j.contains(key)) return;
        for (const auto& v : j[key]) out.push_back(parse_rational(v.get<std::string>()));
    };
    fill("js", s.js);
    fill("js_star", s.js_star);
    fill("jx", s.jx);
    fill("jx_star", s.jx_star);
    if (j.contains("period")) s.period = j["period"].get<long>();
    if (j.contains("n_K")) s.stabilization = j["n_K"].get<long>();
    return s;
}

json witness_json(const Witness& w) {
    json j;
    j["coords"] = w.coords;
    j["chi"] = w.chi;
    j["sheets"] = w.sheets;
    j["boundary"] = w.boundary;
    j["x"] = w.x;
    json summands = json::array();
    for (const auto& [coords, mult] : w.summands)
        summands.push_back({{"coords", coords}, {"multiplicity", mult}});
    j["summands"] = summands;
    return j;
}

json report_json(const ConjectureReport& r) {
    json j;
    j["overall"] = verdict_name(r.overall);
    j["period"] = r.p;
    j["oracle_assumed"] = r.oracle_assumed;
    json avail = json::array();
    for (const auto& s : r.available_slopes) avail.push_back(s.to_string());
    j["available_slopes"] = avail;
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        json jv;
        jv["slope"] = v.slope.to_string();
        jv["side"] = v.side == DegreeSide::Max ? "max" : "min";
        jv["beta"] = rational_to_string(v.beta);
        jv["status"] = verdict_name(v.status);
        jv["detail"] = v.detail;
        if (v.witness) jv["witness"] = witness_json(*v.witness);
        verdicts.push_back(std::move(jv));
    }
    j["verdicts"] = verdicts;
    json calls = json::array();
    for (const auto& c : r.oracle_calls) {
        calls.push_back({{"coords", c.coords},
                         {"result", c.result == Essentiality::Essential ? "essential"
                                    : c.result == Essentiality::NotEssential
                                        ? "not-essential"
                                        : "unknown"},
                         {"assumed", c.assumed}});
    }
    j["oracle_calls"] = calls;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Jones slope and normal surface toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    // jones
    auto* jones = app.add_subcommand("jones", "colored Jones polynomial of a knot");
    std::string jones_pd;
    long jones_n = 2;
    bool jones_brute = false;
    jones->add_option("--pd", jones_pd, "PD code file")->required();
    jones->add_option("--n", jones_n, "color")->required()->check(CLI::PositiveNumber);
    jones->add_flag("--brute-force", jones_brute, "use the brute-force bracket");

    // slopes
    auto* slopes = app.add_subcommand("slopes", "fitted Jones slope data");
    std::string slopes_pd;
    long slopes_nmax = 8, slopes_pmax = 4, slopes_tail = 0;
    bool slopes_brute = false;
    std::string cal_scale = "1", cal_offset = "0";
    slopes->add_option("--pd", slopes_pd, "PD code file")->required();
    slopes->add_option("--nmax", slopes_nmax, "largest color sampled")
        ->check(CLI::PositiveNumber);
    slopes->add_option("--pmax", slopes_pmax, "largest period tried")
        ->check(CLI::PositiveNumber);
    slopes->add_option("--tail", slopes_tail, "discard samples n <= tail");
    slopes->add_flag("--brute-force", slopes_brute, "use the brute-force bracket");
    slopes->add_option("--cal-scale", cal_scale, "slope calibration scale");
    slopes->add_option("--cal-offset", cal_offset, "slope calibration offset");

    // check-divide
    auto* divide = app.add_subcommand("check-divide", "divisibility relations");
    std::string div_slope;
    long div_chi = 0, div_boundary = 1, div_period = 1;
    divide->add_option("--slope", div_slope, "boundary slope a/b")->required();
    divide->add_option("--chi", div_chi, "Euler characteristic")->required();
    divide->add_option("--boundary", div_boundary, "boundary component count")
        ->required()
        ->check(CLI::PositiveNumber);
    divide->add_option("--period", div_period, "Jones period")
        ->required()
        ->check(CLI::PositiveNumber);

    // hilbert
    auto* hil = app.add_subcommand("hilbert", "Hilbert basis of A x = 0");
    std::string hil_matrix;
    long hil_verify = -1;
    hil->add_option("--matrix", hil_matrix, "matrix file")->required();
    hil->add_option("--verify", hil_verify, "brute-force verification bound");

    // fundamental
    auto* fund = app.add_subcommand("fundamental", "fundamental normal surfaces");
    std::string fund_tri;
    fund->add_option("--tri", fund_tri, "triangulation file")->required();

    // check-conjecture
    auto* conj = app.add_subcommand("check-conjecture", "strong slope decision pipeline");
    std::string conj_pd, conj_tri, conj_slopes, conj_oracle;
    bool conj_assume = false;
    long conj_nmax = 8, conj_pmax = 4, conj_tail = 0;
    conj->add_option("--pd", conj_pd, "PD code file");
    conj->add_option("--tri", conj_tri, "triangulation file")->required();
    conj->add_option("--slopes", conj_slopes, "slope data JSON file");
    conj->add_option("--oracle", conj_oracle, "essentiality annotation file");
    conj->add_flag("--assume-essential", conj_assume, "assume every surface essential");
    conj->add_option("--nmax", conj_nmax, "largest color sampled");
    conj->add_option("--pmax", conj_pmax, "largest period tried");
    conj->add_option("--tail", conj_tail, "discard samples n <= tail");
    conj->add_option("--cal-scale", cal_scale, "slope calibration scale");
    conj->add_option("--cal-offset", cal_offset, "slope calibration offset");

    // table1
    auto* table = app.add_subcommand("table1", "fixture table with verdicts");
    std::string table_file = "fixtures/table1.csv";
    table->add_option("--file", table_file, "table fixture CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }
    Calibration cal{parse_rational(cal_scale), parse_rational(cal_offset)};

    if (*jones) {
        Diagram d = Diagram::parse_pd(read_file(jones_pd));
        LaurentPolynomial p = colored_jones(d, static_cast<unsigned>(jones_n),
                                            bracket_limits(), jones_brute);
        if (as_json) {
            json j;
            j["n"] = jones_n;
            j["polynomial"] = polynomial_json(p);
            if (!p.is_zero()) {
                auto [hi, lo] = p.degrees_t();
                j["d_plus"] = rational_to_string(hi);
                j["d_minus"] = rational_to_string(lo);
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "J(" << jones_n << ") = " << p.to_string() << "\n";
            if (!p.is_zero()) {
                auto [hi, lo] = p.degrees_t();
                std::cout << "t-degrees: max " << rational_to_string(hi) << ", min "
                          << rational_to_string(lo) << "\n";
            }
        }
        return kExitOk;
    }

    if (*slopes) {
        Diagram d = Diagram::parse_pd(read_file(slopes_pd));
        SlopeData s = compute_slope_data(d, slopes_nmax, slopes_pmax, slopes_tail,
                                         slopes_brute, cal);
        if (as_json) {
            std::cout << slope_data_json(s, cal).dump(2) << "\n";
        } else {
            auto print_set = [](const char* name, const std::vector<mpq_class>& v) {
                std::cout << name << " = {";
                for (std::size_t i = 0; i < v.size(); ++i)
                    std::cout << (i ? ", " : "") << rational_to_string(v[i]);
                std::cout << "}\n";
            };
            print_set("js", s.js);
            print_set("js*", s.js_star);
            print_set("jx", s.jx);
            print_set("jx*", s.jx_star);
            std::cout << "period = " << s.period << " (provisional from " << s.samples
                      << " samples)\n";
        }
        return kExitOk;
    }

    if (*divide) {
        Slope sl = Slope::parse(div_slope);
        SurfaceStats st{sl, div_boundary, div_chi};
        DivisibilityReport rep = check_divisibility(st, div_period);
        bool characteristic = is_characteristic(st, div_period);
        if (as_json) {
            json j;
            j["slope"] = sl.to_string();
            j["sheets"] = st.sheets();
            j["b_divides_p2"] = rep.b_divides_p2;
            j["sheets_divide_2p2chi"] = rep.sheets_divide_2p2chi;
            if (rep.p1_checked) j["p1_2chi_integral"] = rep.p1_2chi_integral;
            j["ok"] = rep.ok();
            j["characteristic"] = characteristic;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "slope " << sl.to_string() << ", sheets " << st.sheets()
                      << "\n";
            std::cout << "b | p^2: " << (rep.b_divides_p2 ? "yes" : "NO") << "\n";
            std::cout << "b|dS| | 2p^2chi: "
                      << (rep.sheets_divide_2p2chi ? "yes" : "NO") << "\n";
            if (rep.p1_checked)
                std::cout << "2chi/|dS| integral (p=1): "
                          << (rep.p1_2chi_integral ? "yes" : "NO") << "\n";
            std::cout << "characteristic: " << (characteristic ? "yes" : "no") << "\n";
        }
        return rep.ok() ? kExitOk : kExitFailedVerdict;
    }

    if (*hil) {
        DiophantineSystem sys = DiophantineSystem::parse(read_file(hil_matrix));
        auto basis = hilbert_basis(sys, hilbert_limits());
        bool verified = true;
        if (hil_verify >= 0) verified = verify_basis(sys, basis, hil_verify).ok();
        if (as_json) {
            json j;
            j["basis"] = basis;
            if (hil_verify >= 0) j["verified"] = verified;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& v : basis) {
                for (std::size_t i = 0; i < v.size(); ++i)
                    std::cout << (i ? " " : "") << v[i];
                std::cout << "\n";
            }
            if (hil_verify >= 0)
                std::cout << "verification: " << (verified ? "ok" : "FAILED") << "\n";
        }
        return verified ? kExitOk : kExitFailedVerdict;
    }

    if (*fund) {
        Triangulation T = Triangulation::parse(read_file(fund_tri));
        auto surfaces = fundamental_surfaces(T, hilbert_limits());
        json out = json::array();
        for (const auto& S : surfaces) {
            json j;
            j["coords"] = S.coords;
            j["admissible"] = S.admissible;
            if (S.admissible) {
                j["chi"] = euler_characteristic(T, S);
                try {
                    BoundaryData bd = boundary_data(T, S);
                    j["sheets"] = bd.sheets;
                    j["boundary_count"] = bd.boundary_count;
                    j["trivial_curves"] = bd.trivial_curves;
                    j["coherent"] = bd.coherent;
                    if (bd.boundary_count > 0 && bd.coherent)
                        j["slope"] = bd.slope.to_string();
                } catch (const std::runtime_error& e) {
                    if (std::string(e.what()) != "no boundary") throw;
                    j["closed"] = true;
                }
            }
            out.push_back(std::move(j));
        }
        if (as_json) {
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& j : out) std::cout << j.dump() << "\n";
        }
        return kExitOk;
    }

    if (*conj) {
        if (conj_slopes.empty() && conj_pd.empty())
            throw CLI::ValidationError("check-conjecture",
                                       "need --slopes or --pd for slope data");
        if (conj_assume == !conj_oracle.empty())
            throw CLI::ValidationError(
                "check-conjecture", "need exactly one of --oracle and --assume-essential");
        Triangulation T = Triangulation::parse(read_file(conj_tri));
        SlopeData s;
        if (!conj_slopes.empty()) {
            s = slope_data_from_json(read_file(conj_slopes));
        } else {
            Diagram d = Diagram::parse_pd(read_file(conj_pd));
            s = compute_slope_data(d, conj_nmax, conj_pmax, conj_tail, false, cal);
        }
        EssentialityOracle oracle =
            conj_assume ? EssentialityOracle::assume_essential()
                        : EssentialityOracle::from_annotations(read_file(conj_oracle));
        ConjectureConfig cfg;
        cfg.hilbert = hilbert_limits();
        ConjectureReport rep = check_strong_slope(s, T, oracle, cfg);
        if (as_json) {
            std::cout << report_json(rep).dump(2) << "\n";
        } else {
            std::cout << "overall: " << verdict_name(rep.overall) << "\n";
            for (const auto& v : rep.verdicts) {
                std::cout << "slope " << v.slope.to_string() << " ("
                          << (v.side == DegreeSide::Max ? "max" : "min")
                          << " side): " << verdict_name(v.status);
                if (!v.detail.empty()) std::cout << " - " << v.detail;
                std::cout << "\n";
            }
        }
        bool failed = rep.overall == Verdict::FAILED_SLOPE_MEMBERSHIP ||
                      rep.overall == Verdict::FAILED_NO_ESSENTIAL ||
                      rep.overall == Verdict::FAILED_NO_JONES_SURFACE;
        return failed ? kExitFailedVerdict : kExitOk;
    }

    if (*table) {
        auto rows = load_table1(table_file);
        json out = json::array();
        bool all_ok = true;
        for (const auto& r : rows) {
            auto verdict = [&](const mpq_class& js, long boundary, long chi) {
                Slope sl(static_cast<long>(js.get_num().get_si()),
                         static_cast<long>(js.get_den().get_si()));
                SurfaceStats st{sl, boundary, chi};
                DivisibilityReport rep = check_divisibility(st, r.period);
                return std::pair<DivisibilityReport, bool>{
                    rep, is_characteristic(st, r.period)};
            };
            auto [rep_max, char_max] = verdict(r.js, r.boundary, r.chi);
            auto [rep_min, char_min] = verdict(r.js_star, r.boundary_star, r.chi_star);
            all_ok = all_ok && rep_max.ok() && rep_min.ok();
            json j;
            j["knot"] = r.knot;
            j["p"] = r.period;
            j["max"] = {{"js", rational_to_string(r.js)},
                        {"boundary", r.boundary},
                        {"chi", r.chi},
                        {"sheets", r.sheets},
                        {"divisibility_ok", rep_max.ok()},
                        {"characteristic", char_max}};
            j["min"] = {{"js", rational_to_string(r.js_star)},
                        {"boundary", r.boundary_star},
                        {"chi", r.chi_star},
                        {"sheets", r.sheets_star},
                        {"divisibility_ok", rep_min.ok()},
                        {"characteristic", char_min}};
            out.push_back(std::move(j));
        }
        if (as_json) {
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& j : out)
                std::cout << j["knot"].get<std::string>() << ": max "
                          << (j["max"]["divisibility_ok"].get<bool>() ? "ok" : "FAIL")
                          << ", min "
                          << (j["min"]["divisibility_ok"].get<bool>() ? "ok" : "FAIL")
                          << "\n";
        }
        return all_ok ? kExitOk : kExitFailedVerdict;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResourceError;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        return msg.find("limit exceeded") != std::string::npos ? kExitResourceError
                                                               : kExitInputError;
    }
}
