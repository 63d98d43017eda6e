#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace jsurf {

/// Boundary slope a/b in lowest terms with b > 0; the meridian 1/0 is
/// representable but rejected by the arithmetic predicates below.
struct Slope {
    long a = 0;
    long b = 1;

    Slope() = default;
    Slope(long a_, long b_);  // reduces; throws on 0/0

    static Slope meridian() {
        Slope s;
        s.a = 1;
        s.b = 0;
        return s;
    }
    bool is_meridian() const { return b == 0; }

    bool operator==(const Slope& o) const { return a == o.a && b == o.b; }
    bool operator<(const Slope& o) const;

    /// "a/b", or just "a" when b == 1; "1/0" for the meridian.
    std::string to_string() const;
    static Slope parse(const std::string& text);
};

struct SurfaceStats {
    Slope slope;
    long boundary_count = 1;  // |dS|
    long chi = 0;
    long sheets() const { return slope.b * boundary_count; }
};

struct DivisibilityReport {
    bool b_divides_p2 = false;
    bool sheets_divide_2p2chi = false;
    bool p1_checked = false;        // only meaningful when p == 1
    bool p1_2chi_integral = false;  // 2*chi/|dS| integral when p == 1
    bool ok() const {
        return b_divides_p2 && sheets_divide_2p2chi && (!p1_checked || p1_2chi_integral);
    }
};

/// Divisibility relations between a Jones surface's slope denominator,
/// sheet count, Euler characteristic, and the Jones period p:
/// b | p^2 and b|dS| | 2 p^2 chi; for p = 1 additionally 2chi/|dS| in Z.
DivisibilityReport check_divisibility(const SurfaceStats& s, long p);

/// True iff the number of sheets divides the period.
bool is_characteristic(const SurfaceStats& s, long p);

enum class DegreeSide { Max, Min };

/// chi/(b|dS|) in jx on the max side, -chi/(b|dS|) in jx on the min side.
bool jones_surface_predicate(const SurfaceStats& s, const std::vector<mpq_class>& jx,
                             DegreeSide side);

/// lambda = 2 p^2 beta; throws if the result is not an integer.
long lambda_of(const mpq_class& beta, long p);

/// -chi + b|dS| <= (1 - beta) p.
bool bounded_filter(const SurfaceStats& s, const mpq_class& beta, long p);

struct Table1Row {
    std::string knot;
    mpq_class js;
    long boundary;
    long chi;
    long sheets;
    mpq_class js_star;
    long boundary_star;
    long chi_star;
    long sheets_star;
    long period;
};

/// CSV fixture mirroring the eight/nine-crossing non-alternating table.
std::vector<Table1Row> load_table1(const std::string& path);

mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& q);

}  // namespace jsurf
