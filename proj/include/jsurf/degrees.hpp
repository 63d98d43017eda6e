#pragma once

#include "jsurf/bracket.hpp"
#include "jsurf/diagram.hpp"

#include <gmpxx.h>
#include <tuple>
#include <vector>

namespace jsurf {

/// Exact quadratic quasi-polynomial d(n) = a[n%p] n^2 + b[n%p] n + c[n%p]
/// fitted on the tail n > stabilization.
struct QuasiPolynomial {
    long period = 1;
    std::vector<mpq_class> a, b, c;  // length == period, indexed by n mod period
    long stabilization = 0;

    mpq_class eval(long n) const;
};

/// Jones slope data per the degree-side definitions: js = {4 a_i},
/// jx = {2 b_i}, starred sets from the minimal-degree side; period is
/// the lcm of the minimal periods of the six coefficient functions.
struct SlopeData {
    std::vector<mpq_class> js, js_star, jx, jx_star;  // sorted, deduplicated
    long period = 1;
    long stabilization = 0;
    bool provisional = true;  // finitely many samples can never certify p
    long samples = 0;
};

/// Affine recalibration of reported slope values; fixed once against
/// the torus-knot fixtures, identity by default.
struct Calibration {
    mpq_class scale = 1;
    mpq_class offset = 0;
    bool is_identity() const { return scale == 1 && offset == 0; }
};

/// (n, d_+, d_-) of J_K(n) in t-units for n = 1..n_max.
std::vector<std::tuple<long, mpq_class, mpq_class>> degree_sequence(
    const Diagram& d, long n_max, const ResourceLimits& limits = {},
    bool brute_force = false);

/// Minimal-period exact quadratic fit; tries p = 1..p_max and accepts
/// the first period whose residue classes (>= 3 tail samples each)
/// all admit an exact quadratic. Throws on insufficient data or when
/// no p <= p_max fits.
QuasiPolynomial fit_quasipolynomial(const std::vector<std::pair<long, mpq_class>>& samples,
                                    long p_max, long tail);

SlopeData slope_data(const QuasiPolynomial& qp_plus, const QuasiPolynomial& qp_minus);

SlopeData apply_calibration(const SlopeData& s, const Calibration& cal);

/// True iff js is exactly the singleton {reference}.
bool detect_unknot(const SlopeData& s, const mpq_class& reference);

}  // namespace jsurf
