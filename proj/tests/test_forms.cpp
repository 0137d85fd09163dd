#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "germ/diffeo.hpp"
#include "germ/enumerate.hpp"
#include "germ/forms.hpp"
#include "germ/poly.hpp"

using namespace germ;

namespace {

std::mt19937 rng(41);

Poly random_poly(const RingPtr& r, int maxdeg, int minord) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(minord, maxdeg);
    Poly p = Poly::zero(r);
    for (int k = 0; k < 4; ++k) {
        int d = deg(rng);
        Monomial m(r->nvars());
        for (int rem = d, i = 0; i < r->nvars(); ++i) {
            std::uniform_int_distribution<int> part(0, rem);
            int a = (i + 1 == r->nvars()) ? rem : part(rng);
            m.e[i] = a;
            rem -= a;
        }
        p.add_term(m, Rational(coeff(rng)));
    }
    return p;
}

PForm random_form(const RingPtr& r, int p, int maxdeg) {
    PForm w = PForm::zero(r, p);
    for (const auto& idx : index_tuples(r->nvars(), p))
        w = w + PForm::term(r, random_poly(r, maxdeg, 0), idx);
    return w;
}

FormalDiffeo random_tangent_diffeo(const RingPtr& r, int N) {
    FormalDiffeo d = FormalDiffeo::identity(r, N);
    for (int i = 0; i < r->nvars(); ++i) d.comp[i] += random_poly(r, 3, 2);
    return d;
}

VectorField random_field(const RingPtr& r, int maxdeg) {
    VectorField v = VectorField::zero(r);
    for (int i = 0; i < r->nvars(); ++i) v.comp[i] = random_poly(r, maxdeg, 2);
    return v;
}

}  // namespace

TEST_CASE("wedge is graded anticommutative and associative") {
    for (int nv : {2, 3}) {
        auto r = nv == 2 ? RingSpec::make({"x", "y"}) : RingSpec::make({"x", "y", "z"});
        for (int rep = 0; rep < 8; ++rep) {
            for (int p = 0; p <= nv; ++p)
                for (int q = 0; p + q <= nv; ++q) {
                    PForm a = random_form(r, p, 3);
                    PForm b = random_form(r, q, 3);
                    PForm ab = wedge(a, b);
                    PForm ba = wedge(b, a);
                    if ((p * q) % 2 == 0)
                        CHECK(ab == ba);
                    else
                        CHECK(ab == -ba);
                    for (int s = 0; p + q + s <= nv; ++s) {
                        PForm c = random_form(r, s, 2);
                        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
                    }
                }
        }
    }
}

TEST_CASE("wedge with a repeated one-form vanishes") {
    auto r = RingSpec::make({"x", "y", "z"});
    for (int rep = 0; rep < 10; ++rep) {
        PForm a = random_form(r, 1, 3);
        CHECK(wedge(a, a).is_zero());
    }
}

TEST_CASE("exterior derivative squares to zero and obeys Leibniz") {
    auto r = RingSpec::make({"x", "y", "z"});
    for (int rep = 0; rep < 10; ++rep) {
        for (int p = 0; p <= 3; ++p) {
            PForm a = random_form(r, p, 4);
            CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
            for (int q = 0; p + q <= 3; ++q) {
                PForm b = random_form(r, q, 4);
                PForm lhs = exterior_derivative(wedge(a, b));
                PForm rhs = wedge(exterior_derivative(a), b) +
                            (p % 2 == 0 ? wedge(a, exterior_derivative(b))
                                        : -wedge(a, exterior_derivative(b)));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("derivative of a zero-form collects the partials") {
    auto r = RingSpec::make({"x", "y"});
    Poly x = Poly::variable(r, 0);
    Poly y = Poly::variable(r, 1);
    PForm df = exterior_derivative(PForm::term(r, x * x * y, {}));
    CHECK(df.coeff({0}) == Rational(2) * x * y);
    CHECK(df.coeff({1}) == x * x);
}

TEST_CASE("contraction is an antiderivation and kills repeats") {
    auto r = RingSpec::make({"x", "y", "z"});
    for (int rep = 0; rep < 10; ++rep) {
        VectorField v = random_field(r, 3);
        for (int p = 1; p <= 3; ++p) {
            PForm a = random_form(r, p, 3);
            if (p >= 2) CHECK(contract(v, contract(v, a)).is_zero());
            for (int q = 1; p + q <= 3; ++q) {
                PForm b = random_form(r, q, 3);
                PForm lhs = contract(v, wedge(a, b));
                PForm rhs = wedge(contract(v, a), b) +
                            (p % 2 == 0 ? wedge(a, contract(v, b))
                                        : -wedge(a, contract(v, b)));
                CHECK(lhs == rhs);
            }
        }
    }
    CHECK_THROWS_AS(contract(random_field(r, 2), random_form(r, 0, 2)),
                    InvalidInputError);
}

TEST_CASE("pullback along the identity truncates only") {
    auto r = RingSpec::make({"x", "y"});
    FormalDiffeo id = FormalDiffeo::identity(r, 8);
    for (int p = 0; p <= 2; ++p) {
        PForm w = random_form(r, p, 6);
        CHECK(pullback(id, w, 8) == w.truncated(8));
        CHECK(pullback(id, w, 3) == w.truncated(3));
    }
}

TEST_CASE("pullback contravariant under composition") {
    auto r = RingSpec::make({"x", "y"});
    int N = 7;
    for (int rep = 0; rep < 6; ++rep) {
        FormalDiffeo phi = random_tangent_diffeo(r, N);
        FormalDiffeo psi = random_tangent_diffeo(r, N);
        // polynomial components of degree <= 3, so 32 holds the full composite
        FormalDiffeo exact = compose(psi, phi, 32);
        FormalDiffeo jet = compose(psi, phi, N);
        for (int p = 0; p <= 2; ++p) {
            PForm w = random_form(r, p, 4);
            PForm nested = pullback(phi, pullback(psi, w, N), N);
            CHECK(pullback(exact, w, N) == nested);
            // composing inside the window keeps one degree less
            CHECK(pullback(jet, w, N).truncated(N - 1) == nested.truncated(N - 1));
        }
    }
}

TEST_CASE("pullback commutes with d through the truncation window") {
    auto r = RingSpec::make({"x", "y", "z"});
    int N = 6;
    for (int rep = 0; rep < 6; ++rep) {
        FormalDiffeo phi = random_tangent_diffeo(r, N);
        for (int p = 0; p <= 2; ++p) {
            PForm w = random_form(r, p, 4);
            PForm lhs = exterior_derivative(pullback(phi, w, N)).truncated(N - 1);
            PForm rhs = pullback(phi, exterior_derivative(w), N).truncated(N - 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("radial primitive inverts d on closed forms") {
    for (int nv : {2, 3}) {
        auto r = nv == 2 ? RingSpec::make({"x", "y"}) : RingSpec::make({"x", "y", "z"});
        for (int rep = 0; rep < 25; ++rep) {
            for (int p = 1; p <= nv; ++p) {
                PForm w = p == nv ? random_form(r, nv, 5)
                                  : exterior_derivative(random_form(r, p - 1, 6));
                PForm back = exterior_derivative(poincare_primitive(w));
                CHECK(back == w);
            }
        }
    }
}

TEST_CASE("radial primitive rejects non-closed input") {
    auto r = RingSpec::make({"x", "y", "z"});
    Poly x = Poly::variable(r, 0);
    Poly y = Poly::variable(r, 1);
    PForm notclosed = PForm::term(r, y, {0});  // d(y dx) = -dx^dy != 0
    CHECK_THROWS_AS(poincare_primitive(notclosed), NotClosedError);
    (void)x;
}

TEST_CASE("time forms evaluate, differentiate, integrate consistently") {
    auto r = RingSpec::make({"x", "y"});
    int N = 6;
    for (int rep = 0; rep < 8; ++rep) {
        TimeDiffeo flow = TimeDiffeo::identity(r, N);
        for (int i = 0; i < 2; ++i)
            flow.comp[i] += TimePoly::t_term(random_poly(r, 3, 2), 1) +
                            TimePoly::t_term(random_poly(r, 3, 2), 2);
        PForm w = random_form(r, 2, 4);

        TimePForm moving = pullback(flow, w, N);
        for (int num = 0; num <= 3; ++num) {
            Rational q(num, 3);
            CHECK(eval_t(moving, q) == pullback(flow.at(q), w, N));
        }

        // fundamental theorem of calculus in t, coefficient-wise
        PForm total = time_integrate(dt(moving), Rational(0), Rational(1));
        CHECK(total == eval_t(moving, Rational(1)) - eval_t(moving, Rational(0)));
    }
}
