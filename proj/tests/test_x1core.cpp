#include <doctest.h>

#include "x1/orthopoly.hpp"
#include "x1/verify.hpp"
#include "x1/x1core.hpp"

using namespace x1;

TEST_CASE("X1Params invariants") {
  const X1Params p = X1Params::from_abk(Rational(1, 2), Rational(3),
                                        Rational(8), Rational(6), Rational(1));
  CHECK(p.c == Rational(5));
  CHECK(p.a * (p.c - p.b) == 1);
  CHECK_THROWS_AS(X1Params::from_abk(Rational(0), Rational(1), Rational(1),
                                     Rational(0), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(X1Params::from_abk(Rational(1), Rational(1), Rational(0),
                                     Rational(1), Rational(1)),
                  std::invalid_argument);
  X1Params bad = p;
  bad.c = p.c + 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("the Jacobi parameter map lands on the displayed operator") {
  // alpha = 1, beta = 2: a = 1/2, b = 3, c = 5, p(x) = x^2 - 1
  const X1Params p = jacobi_param_map(JacobiParams{Rational(1), Rational(2)});
  CHECK(p.a == Rational(1, 2));
  CHECK(p.b == Rational(3));
  CHECK(p.c == Rational(5));
  CHECK(p.k2 == Rational(1));
  CHECK(p.k1 == Rational(6));
  CHECK(p.k0 == Rational(8));
  const DiffOp2 T = make_x1_operator(p);
  CHECK(T.p == RationalFunction(Polynomial({-1, 0, 1})));  // x^2 - 1
  // q = 2a (1-bx)(x-c)/(b-x), r = -2a (1-bx)/(b-x)
  const Polynomial one_minus_bx({Rational(1), -p.b});
  const Polynomial b_minus_x({p.b, Rational(-1)});
  CHECK(T.q == RationalFunction(one_minus_bx *
                                    Polynomial::linear_root(p.c) * (2 * p.a),
                                b_minus_x));
  CHECK(T.r == RationalFunction(one_minus_bx * (-2 * p.a), b_minus_x));
}

TEST_CASE("the Laguerre parameter map lands on the displayed operator") {
  const Rational alpha(1);
  const X1Params p = laguerre_param_map(LaguerreParams{alpha});
  CHECK(p.a == Rational(-1));
  CHECK(p.b == -alpha);
  CHECK(p.c == -alpha - 1);
  const DiffOp2 T = make_x1_operator(p);
  CHECK(T.p == RationalFunction(Polynomial({0, -1})));  // -x
  const Polynomial x_plus_a({alpha, Rational(1)});
  const Polynomial x_minus_a({-alpha, Rational(1)});
  CHECK(T.q == RationalFunction(x_minus_a * Polynomial({alpha + 1, Rational(1)}),
                                x_plus_a));
  CHECK(T.r == RationalFunction(-x_minus_a, x_plus_a));
}

TEST_CASE("flag basis") {
  SUBCASE("n = 1") {
    const Subspace e = x1_flag_basis(1, Rational(2), Rational(1));
    REQUIRE(e.basis().size() == 1);
    CHECK(e.basis()[0] == Polynomial({-3, 2}));  // 2(x-1) - 1
  }
  SUBCASE("a = 0, b = 0 is the monomial gap space") {
    const Subspace e = x1_flag_basis(4, Rational(0), Rational(0));
    std::vector<Polynomial> mono{Polynomial::monomial(0),
                                 Polynomial::monomial(2),
                                 Polynomial::monomial(3),
                                 Polynomial::monomial(4)};
    CHECK(e.same_span(Subspace(4, mono)));
  }
  SUBCASE("nesting as spans") {
    const Rational a(1, 3), b(2);
    for (unsigned n = 1; n <= 5; ++n) {
      const Subspace small = x1_flag_basis(n, a, b);
      const Subspace big = x1_flag_basis(n + 1, a, b);
      for (const Polynomial& v : small.basis())
        CHECK(Subspace(n + 1, big.basis()).contains(v));
    }
  }
}

TEST_CASE("eigenpolynomials") {
  const X1Params p = X1Params::from_abk(Rational(1, 2), Rational(3),
                                        Rational(8), Rational(6), Rational(1));
  SUBCASE("n = 1: P1 = x - c, lambda = 0") {
    const EigenPair e = x1_eigenpoly(1, p);
    CHECK(e.P == Polynomial::linear_root(p.c));
    CHECK(e.lambda == 0);
  }
  SUBCASE("n = 2 closed form") {
    const Rational lambda2 = 2 * p.k2 + p.a * p.k1;
    REQUIRE(lambda2 != 0);
    const EigenPair e = x1_eigenpoly(2, p);
    const Polynomial expect =
        Polynomial::linear_root(p.b).pow(2) +
        Polynomial::linear_root(p.c) * (2 * p.k0 * p.a / lambda2);
    CHECK(e.P == expect);
    CHECK(e.lambda == lambda2);
  }
  SUBCASE("exact eigen relation and degree exactness for n = 2..8") {
    const DiffOp2 T = make_x1_operator(p);
    for (unsigned n = 2; n <= 8; ++n) {
      const EigenPair e = x1_eigenpoly(n, p);
      CHECK(e.P.degree() == static_cast<int>(n));
      CHECK((apply(T, e.P) - RationalFunction(e.P) * e.lambda).is_zero());
      // inside E_n but not inside E_{n-1} viewed in ambient degree n
      const Subspace en = x1_flag_basis(n, p.a, p.b);
      CHECK(en.contains(e.P));
      const Subspace en1(n, x1_flag_basis(n - 1, p.a, p.b).basis());
      CHECK_FALSE(en1.contains(e.P));
    }
  }
  SUBCASE("resonance is a hard error naming the colliding pair") {
    // lambda_2 = lambda_3 when a k1 = -4 k2
    const X1Params bad = X1Params::from_abk(Rational(1), Rational(0),
                                            Rational(1), Rational(-4),
                                            Rational(1));
    CHECK_THROWS_WITH_AS(x1_eigenpoly(3, bad),
                         "x1_eigenpoly: resonance lambda_3 = lambda_2",
                         std::domain_error);
  }
}

TEST_CASE("polynomial eigenfunction solver") {
  // Legendre operator: lambda_n = n(n+1)
  const DiffOp2 legendre(RationalFunction(Polynomial({-1, 0, 1})),
                         RationalFunction(Polynomial({0, 2})),
                         RationalFunction());
  for (unsigned n = 0; n <= 4; ++n) {
    const auto sols = polynomial_eigenfunctions(legendre, n);
    REQUIRE(sols.size() >= 1);
    bool found = false;
    for (const auto& s : sols)
      found |= (s.lambda == Rational(n) * Rational(n + 1));
    CHECK(found);
  }
  // x D_xx has no degree-2 polynomial eigenfunction
  const DiffOp2 xdxx(RationalFunction(Polynomial::monomial(1)),
                     RationalFunction(), RationalFunction());
  CHECK(polynomial_eigenfunctions(xdxx, 2).empty());
}

TEST_CASE("Bochner converse classification") {
  SUBCASE("X1 round trip recovers the parameters") {
    const X1Params p = X1Params::from_abk(Rational(1, 2), Rational(3),
                                          Rational(8), Rational(6),
                                          Rational(1));
    const BochnerReport rep =
        verify_bochner_converse(make_x1_operator(p), 6);
    REQUIRE(rep.cls == BochnerClass::X1);
    REQUIRE(rep.params.has_value());
    CHECK(rep.params->a == p.a);
    CHECK(rep.params->b == p.b);
    CHECK(rep.params->c == p.c);
    CHECK(rep.params->k0 == p.k0);
    CHECK(rep.params->k1 == p.k1);
    CHECK(rep.params->k2 == p.k2);
    CHECK(*rep.additive_constant == 0);
    // no constant eigenfunction
    for (unsigned d : rep.solvable_degrees) CHECK(d >= 1);
  }
  SUBCASE("classical operator: solutions from n = 0") {
    const DiffOp2 legendre(RationalFunction(Polynomial({-1, 0, 1})),
                           RationalFunction(Polynomial({0, 2})),
                           RationalFunction());
    const BochnerReport rep = verify_bochner_converse(legendre, 6);
    CHECK(rep.cls == BochnerClass::Classical);
    CHECK(rep.solvable_degrees.front() == 0);
  }
  SUBCASE("X1-Jacobi operator alpha=1, beta=2: no n = 0 solution") {
    const DiffOp2 T =
        make_x1_operator(jacobi_param_map(JacobiParams{Rational(1), Rational(2)}));
    const BochnerReport rep = verify_bochner_converse(T, 6);
    CHECK(rep.cls == BochnerClass::X1);
    CHECK(rep.solvable_degrees.front() == 1);
  }
  SUBCASE("an operator solvable at n = 0 but stuck later is neither") {
    const DiffOp2 xdxx(RationalFunction(Polynomial::monomial(1)),
                       RationalFunction(), RationalFunction());
    const BochnerReport rep = verify_bochner_converse(xdxx, 5);
    CHECK(rep.cls == BochnerClass::Neither);
  }
  SUBCASE("an additive constant is reported") {
    const X1Params p = X1Params::from_abk(Rational(1), Rational(0),
                                          Rational(2), Rational(1),
                                          Rational(1));
    DiffOp2 T = make_x1_operator(p);
    T.r = T.r + RationalFunction(Polynomial::constant(Rational(7)));
    const BochnerReport rep = verify_bochner_converse(T, 6);
    REQUIRE(rep.cls == BochnerClass::X1);
    CHECK(*rep.additive_constant == 7);
  }
  SUBCASE("nmax below the theorem regime is rejected") {
    const DiffOp2 T(RationalFunction(Polynomial::constant(1)),
                    RationalFunction(), RationalFunction());
    CHECK_THROWS_AS(verify_bochner_converse(T, 4), std::invalid_argument);
  }
}
