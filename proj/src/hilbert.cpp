#include "jsurf/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jsurf {

DiophantineSystem DiophantineSystem::parse(const std::string& text) {
    DiophantineSystem sys;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long> row;
        long v;
        while (ls >> v) row.push_back(v);
        if (row.empty()) continue;
        if (sys.rows.empty())
            sys.cols = row.size();
        else if (row.size() != sys.cols)
            throw std::runtime_error("matrix rows have unequal lengths");
        sys.rows.push_back(std::move(row));
    }
    if (sys.rows.empty()) sys.cols = 0;
    return sys;
}

std::vector<long> DiophantineSystem::apply(const std::vector<long>& x) const {
    std::vector<long> out(rows.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out[r] += rows[r][c] * x[c];
    return out;
}

bool DiophantineSystem::solves(const std::vector<long>& x) const {
    auto v = apply(x);
    return std::all_of(v.begin(), v.end(), [](long a) { return a == 0; });
}

namespace {

bool dominates(const std::vector<long>& x, const std::vector<long>& y) {
    // x >= y componentwise
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < y[i]) return false;
    return true;
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::vector<std::vector<long>> hilbert_basis(const DiophantineSystem& sys,
                                             const HilbertLimits& limits) {
    const std::size_t n = sys.cols;
    if (n == 0) return {};

    // Columns of A, i.e. A e_i.
    std::vector<std::vector<long>> col(n, std::vector<long>(sys.rows.size(), 0));
    for (std::size_t r = 0; r < sys.rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) col[c][r] = sys.rows[r][c];

    std::vector<std::vector<long>> basis;
    std::set<std::vector<long>> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        frontier.insert(std::move(e));
    }

    while (!frontier.empty()) {
        std::set<std::vector<long>> next;
        for (const auto& t : frontier) {
            bool dominated = false;
            for (const auto& b : basis) {
                if (dominates(t, b)) {
                    dominated = true;
                    break;
                }
            }
            if (dominated) continue;
            auto val = sys.apply(t);
            if (std::all_of(val.begin(), val.end(), [](long a) { return a == 0; })) {
                basis.push_back(t);
                if (basis.size() > limits.max_solutions)
                    throw std::runtime_error(
                        "hilbert basis limit exceeded: max_solutions (partial result "
                        "discarded)");
                continue;
            }
            // Contejean-Devie branching: only extend along coordinates
            // whose column decreases |A t|^2.
            for (std::size_t i = 0; i < n; ++i) {
                if (dot(val, col[i]) >= 0) continue;
                std::vector<long> t2 = t;
                ++t2[i];
                next.insert(std::move(t2));
            }
        }
        if (next.size() > limits.max_frontier)
            throw std::runtime_error(
                "hilbert frontier limit exceeded: max_frontier (partial result "
                "discarded)");
        frontier = std::move(next);
    }

    // A later-found solution can still dominate an earlier one found at
    // the same search level; filter once more for safety.
    std::vector<std::vector<long>> minimal;
    for (const auto& b : basis) {
        bool dom = false;
        for (const auto& other : basis) {
            if (&other == &b) continue;
            if (dominates(b, other) && b != other) {
                dom = true;
                break;
            }
        }
        if (!dom) minimal.push_back(b);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

namespace {

void enumerate_solutions(const DiophantineSystem& sys, long bound,
                         std::vector<std::vector<long>>& out) {
    std::vector<long> x(sys.cols, 0);
    // iterative odometer over vectors with coordinate sum <= bound
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == sys.cols) {
            if (std::any_of(x.begin(), x.end(), [](long v) { return v != 0; }) &&
                sys.solves(x))
                out.push_back(x);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            x[i] = v;
            rec(i + 1, left - v);
        }
        x[i] = 0;
    };
    rec(0, bound);
}

bool combination_of(const std::vector<long>& target,
                    const std::vector<std::vector<long>>& basis,
                    std::map<std::vector<long>, bool>& memo) {
    if (std::all_of(target.begin(), target.end(), [](long v) { return v == 0; }))
        return true;
    auto it = memo.find(target);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& b : basis) {
        bool fits = true;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] > target[i]) {
                fits = false;
                break;
            }
        if (!fits) continue;
        std::vector<long> rest(target.size());
        for (std::size_t i = 0; i < target.size(); ++i) rest[i] = target[i] - b[i];
        if (combination_of(rest, basis, memo)) {
            ok = true;
            break;
        }
    }
    memo[target] = ok;
    return ok;
}

}  // namespace

BasisCheck verify_basis(const DiophantineSystem& sys,
                        const std::vector<std::vector<long>>& basis, long bound) {
    BasisCheck check;
    for (const auto& b : basis) {
        if (b.size() != sys.cols || !sys.solves(b)) {
            check.all_solve = false;
            check.non_solutions.push_back(b);
        }
    }

    std::vector<std::vector<long>> solutions;
    enumerate_solutions(sys, bound, solutions);

    // minimal = no strictly smaller nonzero solution underneath
    std::set<std::vector<long>> solution_set(solutions.begin(), solutions.end());
    std::set<std::vector<long>> minimal;
    for (const auto& s : solutions) {
        bool has_smaller = false;
        for (const auto& t : solutions) {
            if (t != s && dominates(s, t)) {
                has_smaller = true;
                break;
            }
        }
        if (!has_smaller) minimal.insert(s);
    }

    std::set<std::vector<long>> basis_set(basis.begin(), basis.end());
    for (const auto& b : basis) {
        long sum = 0;
        for (long v : b) sum += v;
        if (sum <= bound && !minimal.count(b)) {
            check.minimal = false;
            check.non_minimal.push_back(b);
        }
    }
    std::map<std::vector<long>, bool> memo;
    for (const auto& m : minimal) {
        if (!basis_set.count(m)) {
            check.complete = false;
            check.missed.push_back(m);
        }
    }
    for (const auto& s : solutions) {
        if (!combination_of(s, basis, memo)) {
            check.complete = false;
            check.missed.push_back(s);
        }
    }
    return check;
}

}  // namespace jsurf
