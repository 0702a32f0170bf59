#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "zkins/algebra.hpp"
#include "zkins/rng.hpp"

using namespace zkins;
using nlohmann::json;

static json load_vectors() {
    std::ifstream in(std::string(ZKINS_TEST_DATA) + "/curve_vectors.json");
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

static Fq fq_hex(const json& j) { return Fq::from_u256(U256::from_hex(j.get<std::string>())); }
static Fr fr_hex(const json& j) { return Fr::from_u256(U256::from_hex(j.get<std::string>())); }

static G1Affine g1_from_json(const json& j) {
    return {fq_hex(j["x"]), fq_hex(j["y"]), false};
}

static G2Affine g2_from_json(const json& j) {
    G2Affine p;
    p.x = {fq_hex(j["x0"]), fq_hex(j["x1"])};
    p.y = {fq_hex(j["y0"]), fq_hex(j["y1"])};
    p.infinity = false;
    return p;
}

TEST_CASE("u256 round trips and comparison") {
    U256 a = U256::from_hex("0x0102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f20");
    CHECK(a.to_hex() == "0x0102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f20");
    CHECK(U256::from_bytes_be(a.to_bytes_be().data()) == a);
    CHECK(U256::from_u64(5) < U256::from_u64(6));
    CHECK(a.bit_length() == 249);
}

TEST_CASE("field axioms on random elements") {
    CounterRng rng(7);
    for (int i = 0; i < 64; ++i) {
        Fr a = rng.next_fr(), b = rng.next_fr(), c = rng.next_fr();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Fr::zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Fr::one());
            CHECK(a.inverse() == a.pow([] {
                U256 e = Bn254FrParams::kModulus;
                U256::sub(e, e, U256::from_u64(2));
                return e;
            }()));
        }
    }
    CHECK(Fr::one() * Fr::from_u64(42) == Fr::from_u64(42));
    CHECK_THROWS_AS(Fr::zero().inverse(), std::domain_error);
}

TEST_CASE("scalar arithmetic spec cases") {
    // (p-1) + 1 == 0
    U256 pm1;
    U256::sub(pm1, Bn254FrParams::kModulus, U256::from_u64(1));
    CHECK(Fr::from_u256(pm1) + Fr::one() == Fr::zero());
    // inv(2) * 2 == 1
    CHECK(Fr::from_u64(2).inverse() * Fr::from_u64(2) == Fr::one());
}

TEST_CASE("keccak256 matches reference vectors") {
    auto j = load_vectors();
    for (const auto& v : j["keccak256"]) {
        Bytes data = from_hex(v["data"].get<std::string>());
        Bytes32 d = keccak256(data);
        CHECK(to_hex(d) == "0x" + v["digest"].get<std::string>());
    }
}

TEST_CASE("hash_to_scalar determinism and domain separation") {
    Bytes data = to_bytes("some transcript bytes");
    Fr a = hash_to_scalar("y", data);
    Fr b = hash_to_scalar("y", data);
    Fr c = hash_to_scalar("z", data);
    CHECK(a == b);
    CHECK(!(a == c));
}

TEST_CASE("hash_to_scalar chi-square uniformity over 16 buckets") {
    // 10^4 samples into 16 buckets; chi-square with 15 dof, alpha = 0.01
    // critical value 30.578.
    const int kSamples = 10000, kBuckets = 16;
    int counts[kBuckets] = {0};
    for (int i = 0; i < kSamples; ++i) {
        Bytes data(4);
        for (int b = 0; b < 4; ++b) data[b] = uint8_t(i >> (8 * b));
        Fr v = hash_to_scalar("uniformity", data);
        counts[v.to_u256().limb[0] & 15]++;
    }
    double expected = double(kSamples) / kBuckets, chi2 = 0;
    for (int k = 0; k < kBuckets; ++k) {
        double d = counts[k] - expected;
        chi2 += d * d / expected;
    }
    CHECK(chi2 < 30.578);
}

TEST_CASE("g1 arithmetic matches reference vectors") {
    auto j = load_vectors()["bn254"];
    const G1Affine g = G1Curve::generator_affine();
    CHECK(g.is_on_curve());
    for (const auto& v : j["g1_muls"]) {
        Fr k = fr_hex(v["k"]);
        G1Affine expect = g1_from_json(v["p"]);
        CHECK(g1_mul(g, k).to_affine() == expect);
    }
    for (const auto& v : j["g1_add_chains"]) {
        G1 s = g1_mul(g, fr_hex(v["a"])).add(g1_mul(g, fr_hex(v["b"])));
        CHECK(s.to_affine() == g1_from_json(v["sum"]));
    }
}

TEST_CASE("g2 arithmetic matches reference vectors") {
    auto j = load_vectors()["bn254"];
    const G2Affine h = G2Curve::generator_affine();
    CHECK(h.is_on_curve());
    CHECK(g2_in_subgroup(h));
    for (const auto& v : j["g2_muls"]) {
        Fr k = fr_hex(v["k"]);
        CHECK(g2_mul(h, k).to_affine() == g2_from_json(v["p"]));
    }
}

TEST_CASE("group law basics") {
    const G1Affine g = G1Curve::generator_affine();
    CHECK(g1_mul(g, Fr::zero()).is_identity());
    CHECK(g1_mul(g, Fr::from_u64(2)).to_affine() ==
          G1::from_affine(g).add(G1::from_affine(g)).to_affine());
    // r * g == identity
    CHECK(G1::from_affine(g).scalar_mul(Bn254FrParams::kModulus).is_identity());
    CHECK(G2::from_affine(G2Curve::generator_affine())
              .scalar_mul(Bn254FrParams::kModulus)
              .is_identity());
}

TEST_CASE("msm equals naive fold for sizes up to 64") {
    CounterRng rng(11);
    const G1Affine g = G1Curve::generator_affine();
    for (size_t n : {size_t(0), size_t(1), size_t(2), size_t(3), size_t(17), size_t(64)}) {
        std::vector<G1Affine> bases;
        std::vector<Fr> scalars;
        G1 naive = G1::identity();
        for (size_t i = 0; i < n; ++i) {
            Fr base_k = rng.next_fr();
            Fr s = rng.next_fr();
            G1Affine b = g1_mul(g, base_k).to_affine();
            bases.push_back(b);
            scalars.push_back(s);
            naive = naive.add(g1_mul(b, s));
        }
        CHECK(g1_msm(bases, scalars).to_affine() == naive.to_affine());
    }
    // msm([3,5],[g,g]) == g*8
    std::vector<G1Affine> bases{g, g};
    std::vector<Fr> ks{Fr::from_u64(3), Fr::from_u64(5)};
    CHECK(g1_msm(bases, ks).to_affine() == g1_mul(g, Fr::from_u64(8)).to_affine());
}

TEST_CASE("point serialization round trips and rejects bad points") {
    CounterRng rng(13);
    const G1Affine g = G1Curve::generator_affine();
    for (int i = 0; i < 8; ++i) {
        G1Affine p = g1_mul(g, rng.next_fr()).to_affine();
        Bytes b = g1_to_bytes(p);
        CHECK(g1_from_bytes(b.data(), b.size()) == p);
    }
    CHECK(g1_from_bytes(Bytes(64, 0).data(), 64).is_identity());
    Bytes bad = g1_to_bytes(g);
    bad[63] ^= 1;  // off-curve y
    CHECK_THROWS_AS(g1_from_bytes(bad.data(), bad.size()), std::invalid_argument);

    G2Affine h = g2_mul(G2Curve::generator_affine(), rng.next_fr()).to_affine();
    Bytes b2 = g2_to_bytes(h);
    CHECK(g2_from_bytes(b2.data(), b2.size()) == h);

    // on the twist curve but outside the prime-order subgroup
    auto j = load_vectors()["bn254"];
    G2Affine rogue = g2_from_json(j["non_subgroup_g2"]);
    CHECK(rogue.is_on_curve());
    CHECK(!g2_in_subgroup(rogue));
    Bytes rb = g2_to_bytes(rogue);
    CHECK_THROWS_AS(g2_from_bytes(rb.data(), rb.size()), std::invalid_argument);
}

TEST_CASE("pairing bilinearity and nondegeneracy") {
    const G1Affine g = G1Curve::generator_affine();
    const G2Affine h = G2Curve::generator_affine();

    Gt e_gh = pairing(g, h);
    CHECK(!e_gh.is_one());                       // nondegenerate
    CHECK(e_gh.pow(Bn254FrParams::kModulus).is_one());  // order r

    // e(2g, 3h) == e(g,h)^6
    Gt lhs = pairing(g1_mul(g, Fr::from_u64(2)).to_affine(),
                     g2_mul(h, Fr::from_u64(3)).to_affine());
    CHECK(lhs == e_gh.pow(U256::from_u64(6)));

    CHECK(pairing(G1Affine::identity(), h).is_one());
    CHECK(pairing(g, G2Affine::identity()).is_one());

    CounterRng rng(17);
    for (int i = 0; i < 12; ++i) {
        Fr a = rng.next_fr(), b = rng.next_fr();
        Gt l = pairing(g1_mul(g, a).to_affine(), g2_mul(h, b).to_affine());
        Gt r = e_gh.pow((a * b).to_u256());
        CHECK(l == r);
    }
}

TEST_CASE("pairing product cancellation") {
    CounterRng rng(19);
    const G1Affine g = G1Curve::generator_affine();
    const G2Affine h = G2Curve::generator_affine();
    Fr x = rng.next_fr();
    G1Affine gx = g1_mul(g, x).to_affine();
    G1Affine gxn = g1_mul(g, x.neg()).to_affine();
    std::vector<std::pair<G1Affine, G2Affine>> pairs{{gx, h}, {gxn, h}};
    CHECK(pairing_product_is_one(pairs));
    pairs[1].first = g;
    CHECK(!pairing_product_is_one(pairs));
}

TEST_CASE("final exponentiation agrees with plain exponent") {
    // defining property on miller outputs: result lands in the order-r
    // subgroup and is nontrivial for generator inputs
    const G1Affine g = G1Curve::generator_affine();
    const G2Affine h = G2Curve::generator_affine();
    Fq12 f = miller_loop(g, h);
    Gt t = final_exponentiation(f);
    CHECK(t.pow(Bn254FrParams::kModulus).is_one());
    CHECK(!t.is_one());
}

TEST_CASE("counter rng determinism") {
    CounterRng a(123), b(123), c(124);
    CHECK(a.next_fr() == b.next_fr());
    CHECK(!(a.next_fr() == c.next_fr()));
}
