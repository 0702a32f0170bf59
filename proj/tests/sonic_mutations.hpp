#pragma once

// Single-field proof mutations for soundness sweeps: every entry returns a
// copy of the proof with exactly one element changed.

#include <functional>
#include <string>
#include <vector>

#include "zkins/sonic.hpp"

namespace zkins::testing {

struct Mutation {
    std::string name;
    SonicProof proof;
};

inline G1Affine bump_point(const G1Affine& p) {
    return G1::from_affine(p).add_mixed(G1Curve::generator_affine()).to_affine();
}

inline std::vector<Mutation> proof_mutations(const SonicProof& base) {
    std::vector<Mutation> out;
    auto add = [&](const std::string& name, auto&& fn) {
        SonicProof p = base;
        fn(p);
        out.push_back({name, std::move(p)});
    };

    auto point_fields = [&](auto&& fn) {
        fn("r", [](SonicProof& p) -> G1Affine& { return p.r.point; });
        fn("t", [](SonicProof& p) -> G1Affine& { return p.t.point; });
        fn("s_x", [](SonicProof& p) -> G1Affine& { return p.s_x.point; });
        if (base.variant != SonicVariant::basic)
            fn("r_tilde", [](SonicProof& p) -> G1Affine& { return p.r_tilde.point; });
        if (base.variant == SonicVariant::ev) {
            fn("pi1", [](SonicProof& p) -> G1Affine& { return p.batch.pi1; });
            fn("pi2", [](SonicProof& p) -> G1Affine& { return p.batch.pi2; });
        }
    };
    point_fields([&](const std::string& name, auto&& get) {
        add("point:" + name, [&](SonicProof& p) {
            auto& pt = get(p);
            pt = bump_point(pt);
        });
    });

    auto scalar_fields = [&](auto&& fn) {
        fn("o_r1", [](SonicProof& p) -> Fr& { return p.o_r1; });
        fn("o_r2", [](SonicProof& p) -> Fr& { return p.o_r2; });
        fn("o_t", [](SonicProof& p) -> Fr& { return p.o_t; });
        fn("o_k", [](SonicProof& p) -> Fr& { return p.o_k; });
        fn("o_s", [](SonicProof& p) -> Fr& { return p.o_s; });
        fn("o_s1", [](SonicProof& p) -> Fr& { return p.o_s1; });
        fn("o_s2", [](SonicProof& p) -> Fr& { return p.o_s2; });
        if (base.variant != SonicVariant::basic)
            fn("o_rt", [](SonicProof& p) -> Fr& { return p.o_rt; });
    };
    scalar_fields([&](const std::string& name, auto&& get) {
        add("scalar:" + name, [&](SonicProof& p) {
            auto& v = get(p);
            v += Fr::one();
        });
    });

    for (size_t j = 0; j < base.d.size(); ++j) {
        add("point:d" + std::to_string(j),
            [&, j](SonicProof& p) { p.d[j].point = bump_point(p.d[j].point); });
        add("scalar:o_d" + std::to_string(j), [&, j](SonicProof& p) { p.o_d[j] += Fr::one(); });
        add("sigma:" + std::to_string(j), [&, j](SonicProof& p) { p.sigmas[j].s.limb[0] ^= 1; });
        add("point:p_d" + std::to_string(j),
            [&, j](SonicProof& p) { p.p_d[j].witness = bump_point(p.p_d[j].witness); });
    }

    if (base.variant == SonicVariant::ev) {
        for (size_t i = 0; i < base.gammas.size(); ++i)
            add("gamma:" + std::to_string(i), [&, i](SonicProof& p) {
                p.gammas[i].add_to_coeff(0, Fr::one());
            });
        add("point:s_y_echo",
            [&](SonicProof& p) { p.s_y.point = bump_point(p.s_y.point); });
        add("point:k_echo", [&](SonicProof& p) { p.k.point = bump_point(p.k.point); });
    } else {
        auto proof_points = [&](auto&& fn) {
            fn("p_r1", [](SonicProof& p) -> G1Affine& { return p.p_r1.witness; });
            fn("p_r2", [](SonicProof& p) -> G1Affine& { return p.p_r2.witness; });
            fn("p_t", [](SonicProof& p) -> G1Affine& { return p.p_t.witness; });
            fn("p_k", [](SonicProof& p) -> G1Affine& { return p.p_k.witness; });
            fn("p_s", [](SonicProof& p) -> G1Affine& { return p.p_s.witness; });
            fn("p_s1", [](SonicProof& p) -> G1Affine& { return p.p_s1.witness; });
            fn("p_s2", [](SonicProof& p) -> G1Affine& { return p.p_s2.witness; });
            if (base.variant != SonicVariant::basic)
                fn("p_rt", [](SonicProof& p) -> G1Affine& { return p.p_rt.witness; });
        };
        proof_points([&](const std::string& name, auto&& get) {
            add("proof:" + name, [&](SonicProof& p) {
                auto& pt = get(p);
                pt = bump_point(pt);
            });
        });
    }

    return out;
}

}  // namespace zkins::testing
