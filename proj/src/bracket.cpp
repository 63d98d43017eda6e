#include "jsurf/bracket.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace jsurf {

std::vector<mpz_class> chebyshev(unsigned n) {
    std::vector<mpz_class> prev{1};  // S_0
    if (n == 0) return prev;
    std::vector<mpz_class> cur{0, 1};  // S_1
    for (unsigned k = 2; k <= n; ++k) {
        std::vector<mpz_class> next(k + 1);
        for (unsigned i = 0; i + 1 <= k; ++i) next[i + 1] = cur[i];  // x * S_{k-1}
        for (unsigned i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

// Pairing of live arc ends: involution stored as a map. A loop closes
// whenever a join connects the two ends of one path.
using Matching = std::map<long, long>;

// Consume one occurrence of u and one of v, connecting them through the
// current crossing. Returns the number of loops closed (0 or 1).
int join(Matching& m, long u, long v) {
    if (u == v) return 1;  // both occurrences at this crossing
    auto iu = m.find(u);
    auto iv = m.find(v);
    const bool bu = iu != m.end();
    const bool bv = iv != m.end();
    if (!bu && !bv) {
        m[u] = v;
        m[v] = u;
        return 0;
    }
    if (bu && bv) {
        long w = iu->second, z = iv->second;
        if (w == v) {  // u and v are the two ends of one path
            m.erase(iu);
            m.erase(iv);
            return 1;
        }
        m.erase(iu);
        m.erase(iv);
        m[w] = z;
        m[z] = w;
        return 0;
    }
    if (bu) {
        long w = iu->second;
        m.erase(iu);
        m[w] = v;
        m[v] = w;
        return 0;
    }
    long z = iv->second;
    m.erase(iv);
    m[z] = u;
    m[u] = z;
    return 0;
}

// Greedy sweep order: repeatedly take the crossing minimizing the
// resulting frontier growth; ties break on index for determinism.
std::vector<int> sweep_order(const std::vector<Crossing>& crossings) {
    const int n = static_cast<int>(crossings.size());
    std::vector<int> order;
    order.reserve(n);
    std::vector<bool> done(n, false);
    std::set<long> live;  // arcs with exactly one consumed occurrence
    for (int step = 0; step < n; ++step) {
        int best = -1, best_score = 100;
        for (int c = 0; c < n; ++c) {
            if (done[c]) continue;
            std::map<long, int> here;
            for (long a : crossings[c].arcs) ++here[a];
            int score = 0;
            for (const auto& [a, k] : here) {
                if (k == 2) continue;              // opens and closes here
                score += live.count(a) ? -1 : 1;
            }
            if (score < best_score) {
                best_score = score;
                best = c;
            }
        }
        done[best] = true;
        order.push_back(best);
        for (long a : crossings[best].arcs) {
            if (live.count(a))
                live.erase(a);
            else
                live.insert(a);
        }
        // arcs occurring twice at `best` cancel out of `live` above
    }
    return order;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const Diagram& d, const ResourceLimits& limits) {
    if (d.crossing_count() > limits.max_crossings) {
        std::ostringstream os;
        os << "crossing limit exceeded: " << d.crossing_count() << " > max_crossings="
           << limits.max_crossings;
        throw ResourceError(os.str());
    }
    const auto& xs = d.crossings();
    const LaurentPolynomial delta = LaurentPolynomial::loop_value();

    std::map<Matching, LaurentPolynomial> states;
    states[{}] = LaurentPolynomial::one();

    for (int c : sweep_order(xs)) {
        const auto& a = xs[c].arcs;
        std::map<Matching, LaurentPolynomial> next;
        for (const auto& [m0, poly] : states) {
            // A-smoothing (factor q^{-1}) joins a-d and b-c,
            // B-smoothing (factor q^{+1}) joins a-b and c-d.
            for (int which = 0; which < 2; ++which) {
                Matching m = m0;
                int loops = 0;
                if (which == 0) {
                    loops += join(m, a[0], a[3]);
                    loops += join(m, a[1], a[2]);
                } else {
                    loops += join(m, a[0], a[1]);
                    loops += join(m, a[2], a[3]);
                }
                LaurentPolynomial f = poly;
                f.shift_scale(1, which == 0 ? -1 : 1);
                for (int k = 0; k < loops; ++k) f *= delta;
                auto it = next.find(m);
                if (it == next.end())
                    next.emplace(std::move(m), std::move(f));
                else
                    it->second += f;
            }
        }
        if (next.size() > limits.max_states) {
            std::ostringstream os;
            os << "memo limit exceeded: " << next.size() << " > max_states="
               << limits.max_states;
            throw ResourceError(os.str());
        }
        states = std::move(next);
    }

    LaurentPolynomial result;
    for (const auto& [m, poly] : states) {
        if (!m.empty())
            throw std::logic_error("bracket sweep ended with open strands");
        result += poly;
    }
    return result * delta.pow(static_cast<unsigned>(d.free_loops()));
}

LaurentPolynomial bracket_bruteforce(const Diagram& d) {
    if (d.crossing_count() > 16)
        throw ResourceError("bracket_bruteforce limited to 16 crossings");
    const auto& xs = d.crossings();
    const int n = static_cast<int>(xs.size());
    const LaurentPolynomial delta = LaurentPolynomial::loop_value();
    LaurentPolynomial result;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Matching m;
        int loops = 0;
        int exp = 0;  // exponent of q: +1 per B-smoothing, -1 per A
        for (int c = 0; c < n; ++c) {
            const auto& a = xs[c].arcs;
            if (mask & (1ul << c)) {  // B
                ++exp;
                loops += join(m, a[0], a[1]);
                loops += join(m, a[2], a[3]);
            } else {  // A
                --exp;
                loops += join(m, a[0], a[3]);
                loops += join(m, a[1], a[2]);
            }
        }
        result += LaurentPolynomial::monomial(1, exp) * delta.pow(loops);
    }
    return result * delta.pow(static_cast<unsigned>(d.free_loops()));
}

LaurentPolynomial colored_jones(const Diagram& d, unsigned n,
                                const ResourceLimits& limits, bool brute_force) {
    if (n < 1) throw std::invalid_argument("colored_jones requires n >= 1");
    if (!d.is_knot())
        throw std::runtime_error("colored_jones requires a 1-component diagram");
    const long w = d.writhe();
    auto coeffs = chebyshev(n - 1);
    LaurentPolynomial sum;
    for (unsigned k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        Diagram cab = d.cable(k);
        LaurentPolynomial br =
            brute_force ? bracket_bruteforce(cab) : kauffman_bracket(cab, limits);
        br.shift_scale(coeffs[k], 0);
        sum += br;
    }
    // framing factor ((-1)^{n-1} t^{(n^2-1)/4})^w and global (-1)^{n-1}
    long n2 = static_cast<long>(n) * n - 1;
    // sign = (-1)^{(n-1)w} * (-1)^{n-1} = (-1)^{(n-1)(w+1)}
    bool neg = ((static_cast<long>(n - 1) * (w + 1)) % 2) != 0;
    sum.shift_scale(neg ? -1 : 1, w * n2);
    return sum;
}

}  // namespace jsurf
