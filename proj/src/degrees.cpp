#include "jsurf/degrees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jsurf {

mpq_class QuasiPolynomial::eval(long n) const {
    long r = ((n % period) + period) % period;
    return a[r] * n * n + b[r] * n + c[r];
}

std::vector<std::tuple<long, mpq_class, mpq_class>> degree_sequence(
    const Diagram& d, long n_max, const ResourceLimits& limits, bool brute_force) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    std::vector<std::tuple<long, mpq_class, mpq_class>> out;
    for (long n = 1; n <= n_max; ++n) {
        LaurentPolynomial j =
            colored_jones(d, static_cast<unsigned>(n), limits, brute_force);
        auto [hi, lo] = j.degrees_t();
        out.emplace_back(n, hi, lo);
    }
    return out;
}

QuasiPolynomial fit_quasipolynomial(
    const std::vector<std::pair<long, mpq_class>>& samples, long p_max, long tail) {
    if (p_max < 1) throw std::invalid_argument("p_max must be >= 1");
    bool attempted_any = false;
    for (long p = 1; p <= p_max; ++p) {
        std::vector<std::vector<std::pair<long, mpq_class>>> classes(p);
        for (const auto& [n, v] : samples)
            if (n > tail) classes[((n % p) + p) % p].push_back({n, v});
        bool enough = std::all_of(classes.begin(), classes.end(),
                                  [](const auto& c) { return c.size() >= 3; });
        if (!enough) continue;
        attempted_any = true;

        QuasiPolynomial qp;
        qp.period = p;
        qp.stabilization = tail;
        qp.a.assign(p, 0);
        qp.b.assign(p, 0);
        qp.c.assign(p, 0);
        bool fits = true;
        for (long r = 0; r < p && fits; ++r) {
            const auto& pts = classes[r];
            // exact quadratic through the first three points (Cramer)
            mpq_class n0 = pts[0].first, n1 = pts[1].first, n2 = pts[2].first;
            mpq_class d0 = pts[0].second, d1 = pts[1].second, d2 = pts[2].second;
            mpq_class det = n0 * n0 * (n1 - n2) - n1 * n1 * (n0 - n2) + n2 * n2 * (n0 - n1);
            if (det == 0) throw std::logic_error("degenerate sample abscissae");
            mpq_class da = d0 * (n1 - n2) - d1 * (n0 - n2) + d2 * (n0 - n1);
            mpq_class db =
                n0 * n0 * (d1 - d2) - n1 * n1 * (d0 - d2) + n2 * n2 * (d0 - d1);
            mpq_class dc = n0 * n0 * (n1 * d2 - n2 * d1) - n1 * n1 * (n0 * d2 - n2 * d0) +
                           n2 * n2 * (n0 * d1 - n1 * d0);
            qp.a[r] = da / det;
            qp.b[r] = db / det;
            qp.c[r] = dc / det;
            qp.a[r].canonicalize();
            qp.b[r].canonicalize();
            qp.c[r].canonicalize();
            for (const auto& [n, v] : pts) {
                if (qp.a[r] * n * n + qp.b[r] * n + qp.c[r] != v) {
                    fits = false;
                    break;
                }
            }
        }
        if (fits) return qp;
    }
    if (!attempted_any)
        throw std::runtime_error(
            "insufficient data: need >= 3 tail samples per residue class");
    throw std::runtime_error("no exact fit up to p_max");
}

namespace {

long minimal_array_period(const std::vector<mpq_class>& arr) {
    const long p = static_cast<long>(arr.size());
    for (long d = 1; d <= p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (long i = 0; i < p && ok; ++i) ok = arr[i % d] == arr[i];
        if (ok) return d;
    }
    return p;
}

std::vector<mpq_class> value_set(const std::vector<mpq_class>& arr, const mpq_class& mult) {
    std::set<mpq_class> vals;
    for (const auto& v : arr) {
        mpq_class x = v * mult;
        x.canonicalize();
        vals.insert(x);
    }
    return {vals.begin(), vals.end()};
}

}  // namespace

SlopeData slope_data(const QuasiPolynomial& qp_plus, const QuasiPolynomial& qp_minus) {
    SlopeData s;
    s.js = value_set(qp_plus.a, 4);
    s.jx = value_set(qp_plus.b, 2);
    s.js_star = value_set(qp_minus.a, 4);
    s.jx_star = value_set(qp_minus.b, 2);
    long p = 1;
    for (const auto* arr : {&qp_plus.a, &qp_plus.b, &qp_plus.c, &qp_minus.a,
                            &qp_minus.b, &qp_minus.c})
        p = std::lcm(p, minimal_array_period(*arr));
    s.period = p;
    s.stabilization = std::max(qp_plus.stabilization, qp_minus.stabilization);
    s.provisional = true;
    return s;
}

SlopeData apply_calibration(const SlopeData& s, const Calibration& cal) {
    SlopeData out = s;
    auto remap = [&](std::vector<mpq_class>& v) {
        for (auto& x : v) {
            x = cal.scale * x + cal.offset;
            x.canonicalize();
        }
        std::sort(v.begin(), v.end());
    };
    remap(out.js);
    remap(out.js_star);
    return out;
}

bool detect_unknot(const SlopeData& s, const mpq_class& reference) {
    return s.js.size() == 1 && s.js[0] == reference;
}

}  // namespace jsurf
