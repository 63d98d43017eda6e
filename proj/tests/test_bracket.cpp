#include "jsurf/bracket.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace jsurf;

namespace {

Diagram corpus(const char* name) {
    return Diagram::parse_pd(read_fixture(std::string("pd/") + name));
}

// |reduced bracket| at q = exp(i pi/4) equals the knot determinant
double determinant_of(const Diagram& d) {
    LaurentPolynomial reduced =
        bracket_bruteforce(d).divide_exact(LaurentPolynomial::loop_value());
    std::complex<double> q = std::polar(1.0, std::acos(-1.0) / 4.0);
    std::complex<double> v = 0;
    for (const auto& [e, c] : reduced.terms()) v += c.get_d() * std::pow(q, e);
    return std::abs(v);
}

}  // namespace

TEST_CASE("chebyshev coefficients") {
    CHECK(chebyshev(0) == std::vector<mpz_class>{1});
    CHECK(chebyshev(1) == std::vector<mpz_class>{0, 1});
    CHECK(chebyshev(2) == std::vector<mpz_class>{-1, 0, 1});
    CHECK(chebyshev(3) == std::vector<mpz_class>{0, -2, 0, 1});

    // recursion S_{n+2} = x S_{n+1} - S_n, coefficient-wise
    for (unsigned n = 0; n + 2 <= 50; ++n) {
        auto a = chebyshev(n), b = chebyshev(n + 1), c = chebyshev(n + 2);
        for (std::size_t k = 0; k < c.size(); ++k) {
            mpz_class want = 0;
            if (k >= 1 && k - 1 < b.size()) want += b[k - 1];
            if (k < a.size()) want -= a[k];
            CHECK(c[k] == want);
        }
    }

    // nonzero entries alternate in sign on indices of parity n mod 2
    auto s7 = chebyshev(7);
    int expect_sign = 1;
    for (std::size_t k = s7.size(); k-- > 0;) {
        if (s7[k] == 0) continue;
        CHECK(static_cast<int>(k % 2) == 1);  // 7 mod 2
        CHECK((s7[k] > 0 ? 1 : -1) == expect_sign);
        expect_sign = -expect_sign;
    }
}

TEST_CASE("bracket base cases") {
    CHECK(kauffman_bracket(Diagram::unknot()) == LaurentPolynomial::loop_value());
    CHECK(kauffman_bracket(Diagram::empty()) == LaurentPolynomial::one());
    CHECK(kauffman_bracket(Diagram({}, 2)) ==
          LaurentPolynomial::loop_value() * LaurentPolynomial::loop_value());
    CHECK(bracket_bruteforce(Diagram::unknot()) == LaurentPolynomial::loop_value());
}

TEST_CASE("disjoint loop multiplies by delta") {
    Diagram d = corpus("trefoil.pd");
    Diagram with_loop(d.crossings(), d.free_loops() + 1);
    CHECK(kauffman_bracket(with_loop) ==
          kauffman_bracket(d) * LaurentPolynomial::loop_value());
}

TEST_CASE("sweep bracket equals brute force on the corpus") {
    for (const char* name :
         {"unknot.pd", "trefoil.pd", "figure8.pd", "8_19.pd", "8_20.pd", "8_21.pd"}) {
        Diagram d = corpus(name);
        CAPTURE(name);
        CHECK(kauffman_bracket(d) == bracket_bruteforce(d));
    }
}

TEST_CASE("sweep bracket equals brute force on 2-cables") {
    for (const char* name : {"unknot.pd", "trefoil.pd", "figure8.pd"}) {
        Diagram c = corpus(name).cable(2);
        CAPTURE(name);
        CHECK(kauffman_bracket(c) == bracket_bruteforce(c));
    }
}

TEST_CASE("knot determinants from the bracket") {
    CHECK(determinant_of(corpus("unknot.pd")) == doctest::Approx(1).epsilon(1e-9));
    CHECK(determinant_of(corpus("trefoil.pd")) == doctest::Approx(3).epsilon(1e-9));
    CHECK(determinant_of(corpus("figure8.pd")) == doctest::Approx(5).epsilon(1e-9));
    CHECK(determinant_of(corpus("8_19.pd")) == doctest::Approx(3).epsilon(1e-9));
    CHECK(determinant_of(corpus("8_20.pd")) == doctest::Approx(9).epsilon(1e-9));
    CHECK(determinant_of(corpus("8_21.pd")) == doctest::Approx(15).epsilon(1e-9));
}

TEST_CASE("colored jones basics") {
    for (const char* name : {"unknot.pd", "trefoil.pd", "figure8.pd"}) {
        CHECK(colored_jones(corpus(name), 1) == LaurentPolynomial::one());
    }

    // unknot: J(n) = (-1)^{n-1} S_{n-1}(delta)
    for (unsigned n = 1; n <= 8; ++n) {
        auto coeffs = chebyshev(n - 1);
        LaurentPolynomial expect;
        LaurentPolynomial d = LaurentPolynomial::loop_value();
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            expect += LaurentPolynomial(coeffs[k]) * d.pow(static_cast<unsigned>(k));
        if (n % 2 == 0) expect = -expect;
        CHECK(colored_jones(Diagram::unknot(), n) == expect);
    }

    CHECK_THROWS(colored_jones(Diagram({}, 2), 2));
}

TEST_CASE("colored jones sweep matches brute force cabling") {
    Diagram t = corpus("trefoil.pd");
    for (unsigned n = 2; n <= 3; ++n)
        CHECK(colored_jones(t, n) == colored_jones(t, n, {}, true));
}

TEST_CASE("degree coset of the colored jones") {
    Diagram t = corpus("trefoil.pd");
    for (unsigned n = 2; n <= 4; ++n) {
        LaurentPolynomial j = colored_jones(t, n);
        long r = (j.max_q_exponent() % 4 + 4) % 4;
        for (const auto& [e, c] : j.terms()) {
            (void)c;
            CHECK((e % 4 + 4) % 4 == r);  // single coset of Z inside (1/4)Z
        }
    }
}

TEST_CASE("resource limits produce clean errors") {
    Diagram t = corpus("trefoil.pd");
    ResourceLimits tight;
    tight.max_crossings = 2;
    CHECK_THROWS_AS(kauffman_bracket(t, tight), ResourceError);
    ResourceLimits tiny_states;
    tiny_states.max_states = 1;
    CHECK_THROWS_AS(kauffman_bracket(corpus("8_19.pd"), tiny_states), ResourceError);
}
