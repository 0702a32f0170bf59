#pragma once

#include "zkins/sonic.hpp"

namespace zkins {

/// One spectral band: "width,height" header then one integer per cell,
/// row-major.
struct RasterBand {
    uint32_t width = 0, height = 0;
    std::vector<int64_t> values;
};

RasterBand load_raster_band(const std::string& path);
RasterBand parse_raster_band(const std::string& csv_text);

/// NIR/SWIR before and after the event. All four bands share dimensions;
/// per-pixel band sums must be positive (division guards).
struct RasterPair {
    uint32_t width = 0, height = 0;
    std::vector<int64_t> pre_nir, pre_swir, post_nir, post_swir;

    size_t pixels() const { return size_t(width) * height; }
};

RasterPair make_raster_pair(const RasterBand& pre_nir, const RasterBand& pre_swir,
                            const RasterBand& post_nir, const RasterBand& post_swir);
RasterPair load_raster(const std::string& pre_nir_path, const std::string& pre_swir_path,
                       const std::string& post_nir_path, const std::string& post_swir_path);

/// Fixed-point configuration of the claim circuit.
struct FixedPointParams {
    int64_t scale = 1000;         // NBR denominator
    int64_t kappa_scaled = 660;   // severity threshold (0.66 * scale)
    int64_t epsilon = 1;          // burnt-pixel count threshold
    int64_t theta_max = int64_t(1) << 32;  // strict bound on sum of squared residues
    uint32_t k_bits = 12;         // range width for dNBR - kappa
    uint32_t g_bits = 16;         // range width for the claim margin G

    void validate() const;
    uint32_t theta_bits() const;  // width of the theta_max slack decomposition
    Bytes32 digest() const;
};

/// Scaled integer NBR: n = nearest(scale (r-s) / (r+s)), theta the exact
/// residue, so scale (r-s) = n (r+s) + theta with |theta| <= (r+s)/2.
struct NbrFixed {
    int64_t n = 0;
    int64_t theta = 0;
};
NbrFixed compute_nbr_fixed(int64_t r, int64_t s, int64_t scale);

/// Slot layout of the generated system (all indices 1-based).
struct BushfireSlots {
    uint32_t n = 0, k = 0, t_bits = 0, g_bits = 0;

    uint32_t nbr_pre(uint32_t i) const { return 1 + i; }
    uint32_t nbr_post(uint32_t i) const { return 1 + n + i; }
    uint32_t indicator(uint32_t i) const { return 1 + 2 * n + i; }
    uint32_t bit(uint32_t i, uint32_t j) const { return 1 + 3 * n + i * k + j; }
    uint32_t link(uint32_t i) const { return 1 + 3 * n + n * k + i; }
    uint32_t theta_bit(uint32_t j) const { return 1 + 4 * n + n * k + j; }
    uint32_t g_bit(uint32_t j) const { return 1 + 4 * n + n * k + t_bits + j; }
    uint32_t theta_pre_sq(uint32_t i) const { return 1 + 4 * n + n * k + t_bits + g_bits + i; }
    uint32_t theta_post_sq(uint32_t i) const { return theta_pre_sq(i) + n; }
    uint32_t data(uint32_t t) const { return 1 + 6 * n + n * k + t_bits + g_bits + t; }
    uint32_t total() const { return 10 * n + n * k + t_bits + g_bits; }
    uint32_t data_base() const { return 6 * n + n * k + t_bits + g_bits; }  // = n_core
};

struct BushfireCircuit {
    ConstraintSystem cs;
    BushfireSlots slots;
    FixedPointParams params;
    uint32_t n_pixels = 0;
};

/// Constraint system whose satisfying witnesses are exactly the valid
/// claims: NBR products, indicator and bit binarity, the dNBR-kappa
/// linkage, theta squares, the strict theta_max bound (realized as
/// <= theta_max - 1 with a slack decomposition), the claim margin
/// G = sum(i) - epsilon proved non-negative by decomposition, and the
/// raster data occupying the trailing slots.
BushfireCircuit build_bushfire_cs(uint32_t n_pixels, const FixedPointParams& params);

/// Plain-integer reference decision. valid means a satisfying witness
/// exists for the generated circuit (claim margin non-negative, residue
/// bound respected, every decomposition representable).
struct GroundTruth {
    int64_t g = 0;
    bool valid = false;
    std::vector<int64_t> dnbr_scaled;
    int64_t theta_sq_sum = 0;
    int64_t burnt_pixels = 0;
    bool theta_bound_ok = true;
    bool ranges_ok = true;
};
GroundTruth ground_truth_claim(const RasterPair& rasters, const FixedPointParams& params);

struct BushfireWitness {
    Witness core;                  // data slots vacant
    Witness full;                  // data in place
    std::vector<Fr> data_values;   // pre_nir | pre_swir | post_nir | post_swir
};

/// Throws UnsatisfiedWitnessError when the claim conditions fail (margin
/// negative, residue bound exceeded, bit-width overflow).
BushfireWitness build_bushfire_witness(const RasterPair& rasters,
                                       const FixedPointParams& params);

/// Data grouped for one provider covering everything, or split pre/post.
std::vector<Fr> raster_values_all(const RasterPair& r);
std::vector<Fr> raster_values_pre(const RasterPair& r);
std::vector<Fr> raster_values_post(const RasterPair& r);

}  // namespace zkins
