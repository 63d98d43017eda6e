#include "jsurf/sheets.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jsurf {

Slope::Slope(long a_, long b_) {
    if (a_ == 0 && b_ == 0) throw std::invalid_argument("slope 0/0");
    if (b_ == 0) {
        a = a_ > 0 ? 1 : -1;
        b = 0;
        if (a < 0) a = 1;  // 1/0 == -1/0
        return;
    }
    if (b_ < 0) {
        a_ = -a_;
        b_ = -b_;
    }
    long g = std::gcd(std::abs(a_), b_);
    if (g == 0) g = 1;
    a = a_ / g;
    b = b_ / g;
}

bool Slope::operator<(const Slope& o) const {
    if (b == 0 || o.b == 0) return b == 0 ? false : true;  // meridian sorts last
    // compare a/b < o.a/o.b with positive denominators
    return static_cast<long long>(a) * o.b < static_cast<long long>(o.a) * b;
}

std::string Slope::to_string() const {
    std::ostringstream os;
    os << a;
    if (b != 1) os << "/" << b;
    return os.str();
}

Slope Slope::parse(const std::string& text) {
    try {
        auto pos = text.find('/');
        std::size_t used = 0;
        long a = std::stol(text.substr(0, pos), &used);
        if (used != (pos == std::string::npos ? text.size() : pos))
            throw std::invalid_argument(text);
        long b = 1;
        if (pos != std::string::npos) {
            std::string den = text.substr(pos + 1);
            b = std::stol(den, &used);
            if (used != den.size()) throw std::invalid_argument(text);
        }
        return Slope(a, b);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad slope: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("bad slope: '" + text + "'");
    }
}

namespace {
void reject_meridian(const SurfaceStats& s, const char* what) {
    if (s.slope.is_meridian()) {
        throw std::domain_error(std::string(what) +
                                ": meridian slope 1/0 is not a Jones slope");
    }
}
}  // namespace

DivisibilityReport check_divisibility(const SurfaceStats& s, long p) {
    reject_meridian(s, "check_divisibility");
    if (p <= 0) throw std::invalid_argument("period must be positive");
    DivisibilityReport r;
    const long p2 = p * p;
    r.b_divides_p2 = (p2 % s.slope.b) == 0;
    const long lhs = s.sheets();
    r.sheets_divide_2p2chi = lhs != 0 && ((2 * p2 * s.chi) % lhs) == 0;
    if (p == 1) {
        r.p1_checked = true;
        r.p1_2chi_integral = (2 * s.chi) % s.boundary_count == 0;
    }
    return r;
}

bool is_characteristic(const SurfaceStats& s, long p) {
    reject_meridian(s, "is_characteristic");
    if (p <= 0) throw std::invalid_argument("period must be positive");
    long n = s.sheets();
    return n > 0 && p % n == 0;
}

bool jones_surface_predicate(const SurfaceStats& s, const std::vector<mpq_class>& jx,
                             DegreeSide side) {
    reject_meridian(s, "jones_surface_predicate");
    if (jx.empty()) throw std::invalid_argument("jx set must be nonempty");
    mpq_class ratio(s.chi, s.sheets());
    ratio.canonicalize();
    if (side == DegreeSide::Min) ratio = -ratio;
    return std::find(jx.begin(), jx.end(), ratio) != jx.end();
}

long lambda_of(const mpq_class& beta, long p) {
    if (p <= 0) throw std::invalid_argument("period must be positive");
    mpq_class lam = beta * 2 * p * p;
    lam.canonicalize();
    if (lam.get_den() != 1)
        throw std::domain_error("lambda not integral: beta incompatible with period");
    if (!lam.get_num().fits_slong_p()) throw std::overflow_error("lambda overflow");
    return lam.get_num().get_si();
}

bool bounded_filter(const SurfaceStats& s, const mpq_class& beta, long p) {
    if (p <= 0) throw std::invalid_argument("period must be positive");
    mpq_class lhs(-s.chi + s.sheets());
    mpq_class rhs = (mpq_class(1) - beta) * p;
    return lhs <= rhs;
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::runtime_error("bad rational: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) {
    return q.get_str();
}

std::vector<Table1Row> load_table1(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table fixture: " + path);
    std::vector<Table1Row> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {  // column header
            header_seen = true;
            continue;
        }
        std::istringstream ls(line);
        std::string f;
        std::vector<std::string> fields;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        if (fields.size() != 10)
            throw std::runtime_error("bad table row: " + line);
        Table1Row r;
        r.knot = fields[0];
        r.js = parse_rational(fields[1]);
        r.boundary = std::stol(fields[2]);
        r.chi = std::stol(fields[3]);
        r.sheets = std::stol(fields[4]);
        r.js_star = parse_rational(fields[5]);
        r.boundary_star = std::stol(fields[6]);
        r.chi_star = std::stol(fields[7]);
        r.sheets_star = std::stol(fields[8]);
        r.period = std::stol(fields[9]);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace jsurf
