#include "jsurf/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace jsurf {

LaurentPolynomial::LaurentPolynomial(const mpz_class& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& c, long e) {
    LaurentPolynomial p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

LaurentPolynomial LaurentPolynomial::one() {
    return LaurentPolynomial(mpz_class(1));
}

LaurentPolynomial LaurentPolynomial::loop_value() {
    LaurentPolynomial p;
    p.terms_[2] = -1;
    p.terms_[-2] = -1;
    return p;
}

void LaurentPolynomial::insert_term(long e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& r) const {
    LaurentPolynomial out = *this;
    out += r;
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& r) {
    for (const auto& [e, c] : r.terms_) insert_term(e, c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& r) const {
    return *this + (-r);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& r) const {
    LaurentPolynomial out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : r.terms_)
            out.insert_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& r) {
    *this = *this * r;
    return *this;
}

void LaurentPolynomial::shift_scale(const mpz_class& c, long e) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    Terms out;
    for (const auto& [k, v] : terms_) out.emplace(k + e, v * c);
    terms_ = std::move(out);
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
    LaurentPolynomial out = one();
    LaurentPolynomial base = *this;
    while (n > 0) {
        if (n & 1u) out *= base;
        base *= base;
        n >>= 1u;
    }
    return out;
}

long LaurentPolynomial::max_q_exponent() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

long LaurentPolynomial::min_q_exponent() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.begin()->first;
}

std::pair<mpq_class, mpq_class> LaurentPolynomial::degrees_t() const {
    mpq_class hi(max_q_exponent(), 4);
    mpq_class lo(min_q_exponent(), 4);
    hi.canonicalize();
    lo.canonicalize();
    return {hi, lo};
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPolynomial rem = *this;
    LaurentPolynomial quot;
    const long de = divisor.max_q_exponent();
    const mpz_class& dc = divisor.terms_.rbegin()->second;
    // exact quotients live in this exponent window; leaving it means the
    // division has a remainder
    const long low = is_zero() ? 0 : min_q_exponent() - divisor.min_q_exponent();
    while (!rem.is_zero()) {
        long re = rem.max_q_exponent();
        const mpz_class& rc = rem.terms_.rbegin()->second;
        if (re - de < low || rc % dc != 0)
            throw std::domain_error("inexact Laurent division");
        mpz_class q = rc / dc;
        LaurentPolynomial m = monomial(q, re - de);
        quot += m;
        rem = rem - m * divisor;
    }
    return quot;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpz_class& c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpz_class ac = abs(c);
        long e = it->first;
        if (e == 0) {
            os << ac;
        } else {
            if (ac != 1) os << ac << "*";
            os << "q^" << e;
        }
        first = false;
    }
    return os.str();
}

std::string LaurentPolynomial::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << ",";
        os << "[" << it->first << ",\"" << it->second.get_str() << "\"]";
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace jsurf
