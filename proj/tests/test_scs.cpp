#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zkins/rng.hpp"
#include "zkins/scs.hpp"

using namespace zkins;

static Fr fr(int64_t v) { return Fr::from_i64(v); }

// random satisfiable system: witness first, then constraints derived from it
static std::pair<ConstraintSystem, Witness> random_system(RandomSource& rng, uint32_t n,
                                                          uint32_t q) {
    ConstraintSystem cs;
    Witness wit;
    for (uint32_t i = 0; i < n; ++i) {
        cs.add_multiplication();
        Fr a = rng.next_fr(), b = rng.next_fr();
        wit.a.push_back(a);
        wit.b.push_back(b);
        wit.c.push_back(a * b);
    }
    for (uint32_t j = 0; j < q; ++j) {
        LinearConstraint lc;
        Fr k = Fr::zero();
        uint32_t terms = 1 + rng.next_u64() % 4;
        for (uint32_t t = 0; t < terms; ++t) {
            uint32_t idx = 1 + uint32_t(rng.next_u64() % n);
            Fr val = rng.next_fr();
            switch (rng.next_u64() % 3) {
                case 0:
                    lc.u.emplace_back(idx, val);
                    k += wit.a[idx - 1] * val;
                    break;
                case 1:
                    lc.v.emplace_back(idx, val);
                    k += wit.b[idx - 1] * val;
                    break;
                default:
                    lc.w.emplace_back(idx, val);
                    k += wit.c[idx - 1] * val;
                    break;
            }
        }
        lc.k = k;
        cs.add_linear(std::move(lc));
    }
    return {std::move(cs), std::move(wit)};
}

TEST_CASE("builder and index validation") {
    ConstraintSystem cs;
    CHECK(cs.add_multiplication() == 1);
    CHECK(cs.n_mul() == 1);
    CHECK_THROWS_AS(cs.add_linear({{{2, fr(1)}}, {}, {}, fr(0)}), std::out_of_range);
    CHECK_THROWS_AS(cs.add_linear({{{0, fr(1)}}, {}, {}, fr(0)}), std::out_of_range);
    cs.add_linear({{{1, fr(1)}}, {}, {}, fr(0)});
    CHECK(cs.n_linear() == 1);
}

TEST_CASE("example 1: binary check") {
    ConstraintSystem cs = binary_check_system(fr(1));
    CHECK(cs.n_mul() == 1);
    CHECK(cs.n_linear() == 3);
    CHECK(is_satisfied(cs, binary_check_witness(fr(1))));
    CHECK(is_satisfied(binary_check_system(fr(0)), binary_check_witness(fr(0))));

    // w = 2 is unsatisfiable: brute-force linkage forces (2,2,2) or breaks a row
    ConstraintSystem cs2 = binary_check_system(fr(2));
    CHECK(!is_satisfied(cs2, binary_check_witness(fr(2))));
    CHECK(!is_satisfied(cs2, Witness{{fr(2)}, {fr(2)}, {fr(2)}}));
    CHECK(!is_satisfied(cs2, Witness{{fr(2)}, {fr(2)}, {fr(4)}}));
}

TEST_CASE("example 2: range check") {
    ConstraintSystem cs = range_check_system(fr(5), 3);
    CHECK(cs.n_mul() == 3);
    CHECK(cs.n_linear() == 7);
    auto wit = range_check_witness(5, 3);
    REQUIRE(wit.has_value());
    CHECK(wit->a == std::vector<Fr>{fr(1), fr(0), fr(4)});
    CHECK(is_satisfied(cs, *wit));

    // out of range
    CHECK(!range_check_witness(8, 3).has_value());
    auto w7 = range_check_witness(7, 3);
    CHECK(!is_satisfied(cs, *w7));  // wrong sum for w=5
}

TEST_CASE("witness length mismatch throws") {
    ConstraintSystem cs = binary_check_system(fr(1));
    Witness bad{{fr(1), fr(1)}, {fr(1), fr(1)}, {fr(1), fr(1)}};
    CHECK_THROWS_AS(is_satisfied(cs, bad), std::invalid_argument);
}

TEST_CASE("r polynomial placement") {
    Witness wit{{fr(2)}, {fr(3)}, {fr(6)}};
    RPoly r = build_r_poly(wit);
    CHECK(r.poly.coeff(1) == fr(2));
    CHECK(r.poly.coeff(-1) == fr(3));
    CHECK(r.poly.coeff(-2) == fr(6));
    CHECK(r.poly.coeff(0) == Fr::zero());

    // substitution identity: R(z*y) = r[zy, 1]
    CounterRng rng(3);
    Fr z = rng.next_fr_not_binary(), y = rng.next_fr_not_binary();
    CHECK(r.poly.eval(z * y) == r.poly.scale_exponents(y).eval(z));
}

TEST_CASE("k_hat coefficients sit at q+N") {
    ConstraintSystem cs = binary_check_system(fr(7));
    SKPolys sk(cs);
    // only the third linear constraint has nonzero k
    CHECK(sk.k_hat().coeff(1 + 1) == Fr::zero());
    CHECK(sk.k_hat().coeff(2 + 1) == Fr::zero());
    CHECK(sk.k_hat().coeff(3 + 1) == fr(7));
    CHECK(sk.k_hat().coeff(0) == Fr::zero());
}

TEST_CASE("s consistency: s[X,y] at X=1 equals s[1,Y] at Y=y") {
    CounterRng rng(4);
    for (int trial = 0; trial < 12; ++trial) {
        auto [cs, wit] = random_system(rng, 2 + uint32_t(rng.next_u64() % 31),
                                       1 + uint32_t(rng.next_u64() % 8));
        SKPolys sk(cs);
        CHECK(sk.s_one_y().coeff(0) == Fr::zero());
        CHECK(sk.k_hat().coeff(0) == Fr::zero());
        for (int i = 0; i < 8; ++i) {
            Fr y = rng.next_fr_not_binary();
            CHECK(sk.s_at_y(y).eval(Fr::one()) == sk.s_one_y().eval(y));
            CHECK(sk.s_at_y(y).coeff(0) == Fr::zero());
        }
    }
}

TEST_CASE("t has zero constant term iff the witness satisfies the system") {
    CounterRng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto [cs, wit] = random_system(rng, 2 + uint32_t(rng.next_u64() % 31),
                                       1 + uint32_t(rng.next_u64() % 16));
        SKPolys sk(cs);
        RPoly r = build_r_poly(wit);
        for (int i = 0; i < 4; ++i) {
            Fr y = rng.next_fr_not_binary();
            LaurentPoly t = compute_t(r, sk, y);  // throws if nonzero
            CHECK(t.coeff(0) == Fr::zero());
            // identity at a random z: t[z,y] = r[z,1](r[zy,1]+s[z,y]) - k[y]
            Fr z = rng.next_fr_not_binary();
            Fr expect = r.poly.eval(z) * (r.poly.eval(z * y) + sk.s_value(z, y)) -
                        sk.k_hat().eval(y);
            CHECK(t.eval(z) == expect);
        }

        // corrupt one c entry: compute_t must reject for random y
        Witness bad = wit;
        bad.c[rng.next_u64() % bad.c.size()] += fr(1);
        RPoly rb = build_r_poly(bad);
        if (!is_satisfied(cs, bad)) {
            Fr y = rng.next_fr_not_binary();
            CHECK_THROWS_AS(compute_t(rb, sk, y), UnsatisfiedWitnessError);
        }
    }
}

TEST_CASE("t degree envelope") {
    CounterRng rng(6);
    auto [cs, wit] = random_system(rng, 24, 12);
    SKPolys sk(cs);
    RPoly r = build_r_poly(wit);
    LaurentPoly t = compute_t(r, sk, rng.next_fr_not_binary());
    CHECK(t.min_exp() >= -4 * 24);
    CHECK(t.max_exp() <= 3 * 24);
}

TEST_CASE("example systems drive compute_t") {
    CounterRng rng(7);
    // example 1 satisfied
    {
        ConstraintSystem cs = binary_check_system(fr(1));
        SKPolys sk(cs);
        RPoly r = build_r_poly(binary_check_witness(fr(1)));
        for (int i = 0; i < 5; ++i) {
            Fr y = rng.next_fr_not_binary();
            CHECK(compute_t(r, sk, y).coeff(0) == Fr::zero());
        }
    }
    // forged witness (1, 1, 0) errors with overwhelming probability over y
    {
        ConstraintSystem cs = binary_check_system(fr(1));
        SKPolys sk(cs);
        RPoly r = build_r_poly(Witness{{fr(1)}, {fr(1)}, {fr(0)}});
        int rejected = 0;
        for (int i = 0; i < 100; ++i) {
            try {
                compute_t(r, sk, rng.next_fr_not_binary());
            } catch (const UnsatisfiedWitnessError&) {
                ++rejected;
            }
        }
        CHECK(rejected == 100);
    }
}
