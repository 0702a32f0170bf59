#include "zkins/bushfire.hpp"

#include <fstream>
#include <sstream>

namespace zkins {

RasterBand parse_raster_band(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("raster: empty file");
    size_t comma = header.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("raster: bad header");
    RasterBand band;
    band.width = uint32_t(std::stoul(header.substr(0, comma)));
    band.height = uint32_t(std::stoul(header.substr(comma + 1)));
    if (band.width == 0 || band.height == 0)
        throw std::invalid_argument("raster: zero dimension");

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t pos = 0;
        while (pos < line.size()) {
            size_t next = line.find(',', pos);
            std::string cell = line.substr(pos, next == std::string::npos ? next : next - pos);
            if (!cell.empty()) {
                int64_t v = std::stoll(cell);
                if (v < 0) throw std::invalid_argument("raster: negative reflectance");
                band.values.push_back(v);
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    if (band.values.size() != size_t(band.width) * band.height)
        throw std::invalid_argument("raster: cell count does not match dimensions");
    return band;
}

RasterBand load_raster_band(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open raster file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_raster_band(ss.str());
}

RasterPair make_raster_pair(const RasterBand& pre_nir, const RasterBand& pre_swir,
                            const RasterBand& post_nir, const RasterBand& post_swir) {
    auto same = [&](const RasterBand& b) {
        return b.width == pre_nir.width && b.height == pre_nir.height;
    };
    if (!same(pre_swir) || !same(post_nir) || !same(post_swir))
        throw std::invalid_argument("raster bands disagree on dimensions");
    RasterPair r;
    r.width = pre_nir.width;
    r.height = pre_nir.height;
    r.pre_nir = pre_nir.values;
    r.pre_swir = pre_swir.values;
    r.post_nir = post_nir.values;
    r.post_swir = post_swir.values;
    for (size_t i = 0; i < r.pixels(); ++i) {
        if (r.pre_nir[i] + r.pre_swir[i] <= 0 || r.post_nir[i] + r.post_swir[i] <= 0)
            throw std::invalid_argument("raster: zero band sum at pixel " + std::to_string(i));
    }
    return r;
}

RasterPair load_raster(const std::string& pre_nir_path, const std::string& pre_swir_path,
                       const std::string& post_nir_path, const std::string& post_swir_path) {
    return make_raster_pair(load_raster_band(pre_nir_path), load_raster_band(pre_swir_path),
                            load_raster_band(post_nir_path), load_raster_band(post_swir_path));
}

void FixedPointParams::validate() const {
    if (scale <= 0) throw std::invalid_argument("scale must be positive");
    if (kappa_scaled <= 0 || kappa_scaled >= 2 * scale)
        throw std::invalid_argument("kappa_scaled must lie in (0, 2 scale)");
    if (k_bits == 0 || k_bits >= 63 || (int64_t(1) << k_bits) <= 2 * scale)
        throw std::invalid_argument("k_bits too small for the dNBR range");
    if (theta_max <= 0) throw std::invalid_argument("theta_max must be positive");
    if (g_bits == 0 || g_bits >= 63) throw std::invalid_argument("bad g_bits");
}

uint32_t FixedPointParams::theta_bits() const {
    uint64_t v = uint64_t(theta_max - 1);
    uint32_t bits = 1;
    while (v >>= 1) ++bits;
    return bits;
}

Bytes32 FixedPointParams::digest() const {
    Bytes buf;
    auto put = [&buf](uint64_t v) {
        for (int i = 7; i >= 0; --i) buf.push_back(uint8_t(v >> (8 * i)));
    };
    put(uint64_t(scale));
    put(uint64_t(kappa_scaled));
    put(uint64_t(epsilon));
    put(uint64_t(theta_max));
    put(k_bits);
    put(g_bits);
    return keccak256(buf);
}

NbrFixed compute_nbr_fixed(int64_t r, int64_t s, int64_t scale) {
    __int128 den = __int128(r) + s;
    if (den <= 0) throw std::domain_error("nbr: zero or negative band sum");
    __int128 num = __int128(scale) * (__int128(r) - s);
    __int128 half = num >= 0 ? den : -den;
    __int128 n = (2 * num + half) / (2 * den);  // nearest, ties away from zero
    __int128 theta = num - n * den;
    return {int64_t(n), int64_t(theta)};
}

BushfireCircuit build_bushfire_cs(uint32_t n_pixels, const FixedPointParams& params) {
    params.validate();
    if (n_pixels == 0) throw std::invalid_argument("empty raster");

    BushfireCircuit out;
    out.params = params;
    out.n_pixels = n_pixels;
    BushfireSlots& sl = out.slots;
    sl.n = n_pixels;
    sl.k = params.k_bits;
    sl.t_bits = params.theta_bits();
    sl.g_bits = params.g_bits;

    ConstraintSystem& cs = out.cs;
    for (uint32_t s = 0; s < sl.total(); ++s) cs.add_multiplication();

    const Fr one = Fr::one();
    const Fr neg1 = one.neg();
    const Fr fscale = Fr::from_i64(params.scale);

    for (uint32_t i = 0; i < n_pixels; ++i) {
        // b = r + s and c = scale(r - s) - theta on both epochs
        cs.add_linear({{{sl.data(i), one}, {sl.data(n_pixels + i), one}},
                       {{sl.nbr_pre(i), neg1}},
                       {},
                       Fr::zero()});
        cs.add_linear({{{sl.data(i), fscale},
                        {sl.data(n_pixels + i), fscale.neg()},
                        {sl.theta_pre_sq(i), neg1}},
                       {},
                       {{sl.nbr_pre(i), neg1}},
                       Fr::zero()});
        cs.add_linear({{{sl.data(2 * n_pixels + i), one}, {sl.data(3 * n_pixels + i), one}},
                       {{sl.nbr_post(i), neg1}},
                       {},
                       Fr::zero()});
        cs.add_linear({{{sl.data(2 * n_pixels + i), fscale},
                        {sl.data(3 * n_pixels + i), fscale.neg()},
                        {sl.theta_post_sq(i), neg1}},
                       {},
                       {{sl.nbr_post(i), neg1}},
                       Fr::zero()});

        // indicator binarity: b = a - 1 and c = 0
        cs.add_linear({{{sl.indicator(i), one}}, {{sl.indicator(i), neg1}}, {}, one});
        cs.add_linear({{}, {}, {{sl.indicator(i), one}}, Fr::zero()});

        // scaled bits: b = a - 2^(j-1) and c = 0
        Fr pow2 = one;
        for (uint32_t j = 0; j < sl.k; ++j) {
            cs.add_linear({{{sl.bit(i, j), one}}, {{sl.bit(i, j), neg1}}, {}, pow2});
            cs.add_linear({{}, {}, {{sl.bit(i, j), one}}, Fr::zero()});
            pow2 = pow2.dbl();
        }

        // linkage row: b = nbr_pre - nbr_post - kappa, c = sum of bits,
        // and its a-wire is a copy of the indicator
        cs.add_linear({{{sl.nbr_pre(i), one}, {sl.nbr_post(i), neg1}},
                       {{sl.link(i), neg1}},
                       {},
                       Fr::from_i64(params.kappa_scaled)});
        LinearConstraint link_sum;
        for (uint32_t j = 0; j < sl.k; ++j) link_sum.u.emplace_back(sl.bit(i, j), one);
        link_sum.w.emplace_back(sl.link(i), neg1);
        link_sum.k = Fr::zero();
        cs.add_linear(std::move(link_sum));
        cs.add_linear({{{sl.indicator(i), one}, {sl.link(i), neg1}}, {}, {}, Fr::zero()});

        // theta wires feed their squares on both sides
        cs.add_linear(
            {{{sl.theta_pre_sq(i), one}}, {{sl.theta_pre_sq(i), neg1}}, {}, Fr::zero()});
        cs.add_linear(
            {{{sl.theta_post_sq(i), one}}, {{sl.theta_post_sq(i), neg1}}, {}, Fr::zero()});
    }

    // slack decompositions for the strict residue bound and the claim margin
    Fr pow2 = one;
    for (uint32_t j = 0; j < sl.t_bits; ++j) {
        cs.add_linear({{{sl.theta_bit(j), one}}, {{sl.theta_bit(j), neg1}}, {}, pow2});
        cs.add_linear({{}, {}, {{sl.theta_bit(j), one}}, Fr::zero()});
        pow2 = pow2.dbl();
    }
    pow2 = one;
    for (uint32_t j = 0; j < sl.g_bits; ++j) {
        cs.add_linear({{{sl.g_bit(j), one}}, {{sl.g_bit(j), neg1}}, {}, pow2});
        cs.add_linear({{}, {}, {{sl.g_bit(j), one}}, Fr::zero()});
        pow2 = pow2.dbl();
    }

    // sum(i) - sum(e_G) = epsilon
    LinearConstraint margin;
    for (uint32_t i = 0; i < n_pixels; ++i) margin.u.emplace_back(sl.link(i), one);
    for (uint32_t j = 0; j < sl.g_bits; ++j) margin.u.emplace_back(sl.g_bit(j), neg1);
    margin.k = Fr::from_i64(params.epsilon);
    cs.add_linear(std::move(margin));

    // sum(theta^2) + slack = theta_max - 1
    LinearConstraint bound;
    for (uint32_t i = 0; i < n_pixels; ++i) {
        bound.w.emplace_back(sl.theta_pre_sq(i), one);
        bound.w.emplace_back(sl.theta_post_sq(i), one);
    }
    for (uint32_t j = 0; j < sl.t_bits; ++j) bound.u.emplace_back(sl.theta_bit(j), one);
    bound.k = Fr::from_i64(params.theta_max - 1);
    cs.add_linear(std::move(bound));

    return out;
}

GroundTruth ground_truth_claim(const RasterPair& rasters, const FixedPointParams& params) {
    params.validate();
    GroundTruth gt;
    size_t n = rasters.pixels();
    gt.dnbr_scaled.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        NbrFixed pre = compute_nbr_fixed(rasters.pre_nir[i], rasters.pre_swir[i], params.scale);
        NbrFixed post =
            compute_nbr_fixed(rasters.post_nir[i], rasters.post_swir[i], params.scale);
        int64_t dnbr = pre.n - post.n;
        gt.dnbr_scaled.push_back(dnbr);
        gt.theta_sq_sum += pre.theta * pre.theta + post.theta * post.theta;
        bool burnt = dnbr >= params.kappa_scaled;
        if (burnt) {
            gt.burnt_pixels += 1;
            if (dnbr - params.kappa_scaled >= (int64_t(1) << params.k_bits))
                gt.ranges_ok = false;
        }
    }
    gt.g = gt.burnt_pixels - params.epsilon;
    gt.theta_bound_ok = gt.theta_sq_sum <= params.theta_max - 1;
    if (gt.g >= (int64_t(1) << params.g_bits)) gt.ranges_ok = false;
    gt.valid = gt.g >= 0 && gt.theta_bound_ok && gt.ranges_ok;
    return gt;
}

namespace {

// scaled-bit decomposition: value = sum of e_j with e_j in {0, 2^(j-1)}
void place_bits(Witness& w, const BushfireSlots& sl, uint32_t base_slot, uint32_t width,
                int64_t value, const char* what) {
    (void)sl;
    if (value < 0 || (width < 63 && value >= (int64_t(1) << width)))
        throw UnsatisfiedWitnessError(std::string(what) + " outside its bit range");
    for (uint32_t j = 0; j < width; ++j) {
        int64_t e = (value >> j) & 1 ? (int64_t(1) << j) : 0;
        Fr fe = Fr::from_i64(e);
        size_t idx = base_slot + j - 1;  // slots are 1-based
        w.a[idx] = fe;
        w.b[idx] = fe - Fr::from_i64(int64_t(1) << j);
        w.c[idx] = Fr::zero();
    }
}

}  // namespace

BushfireWitness build_bushfire_witness(const RasterPair& rasters,
                                       const FixedPointParams& params) {
    params.validate();
    uint32_t n = uint32_t(rasters.pixels());
    BushfireCircuit circuit = build_bushfire_cs(n, params);
    const BushfireSlots& sl = circuit.slots;

    GroundTruth gt = ground_truth_claim(rasters, params);
    if (gt.g < 0) throw UnsatisfiedWitnessError("claim margin below the policy threshold");
    if (!gt.theta_bound_ok)
        throw UnsatisfiedWitnessError("rounding residues exceed theta_max");
    if (!gt.ranges_ok) throw UnsatisfiedWitnessError("decomposition width exceeded");

    BushfireWitness out;
    out.full = Witness::zeros(sl.total());
    Witness& w = out.full;

    for (uint32_t i = 0; i < n; ++i) {
        NbrFixed pre = compute_nbr_fixed(rasters.pre_nir[i], rasters.pre_swir[i], params.scale);
        NbrFixed post =
            compute_nbr_fixed(rasters.post_nir[i], rasters.post_swir[i], params.scale);
        int64_t dnbr = pre.n - post.n;
        bool burnt = dnbr >= params.kappa_scaled;

        // NBR product rows
        w.a[sl.nbr_pre(i) - 1] = Fr::from_i64(pre.n);
        w.b[sl.nbr_pre(i) - 1] = Fr::from_i64(rasters.pre_nir[i] + rasters.pre_swir[i]);
        w.c[sl.nbr_pre(i) - 1] = w.a[sl.nbr_pre(i) - 1] * w.b[sl.nbr_pre(i) - 1];
        w.a[sl.nbr_post(i) - 1] = Fr::from_i64(post.n);
        w.b[sl.nbr_post(i) - 1] = Fr::from_i64(rasters.post_nir[i] + rasters.post_swir[i]);
        w.c[sl.nbr_post(i) - 1] = w.a[sl.nbr_post(i) - 1] * w.b[sl.nbr_post(i) - 1];

        // indicator rows
        Fr ind = burnt ? Fr::one() : Fr::zero();
        w.a[sl.indicator(i) - 1] = ind;
        w.b[sl.indicator(i) - 1] = ind - Fr::one();
        w.c[sl.indicator(i) - 1] = Fr::zero();

        // bit rows for i (dnbr - kappa), zero when unburnt
        int64_t diff = burnt ? dnbr - params.kappa_scaled : 0;
        place_bits(w, sl, sl.bit(i, 0), sl.k, diff, "dNBR margin");

        // linkage row
        w.a[sl.link(i) - 1] = ind;
        w.b[sl.link(i) - 1] = Fr::from_i64(dnbr - params.kappa_scaled);
        w.c[sl.link(i) - 1] = w.a[sl.link(i) - 1] * w.b[sl.link(i) - 1];

        // theta squares
        w.a[sl.theta_pre_sq(i) - 1] = Fr::from_i64(pre.theta);
        w.b[sl.theta_pre_sq(i) - 1] = Fr::from_i64(pre.theta);
        w.c[sl.theta_pre_sq(i) - 1] = Fr::from_i64(pre.theta) * Fr::from_i64(pre.theta);
        w.a[sl.theta_post_sq(i) - 1] = Fr::from_i64(post.theta);
        w.b[sl.theta_post_sq(i) - 1] = Fr::from_i64(post.theta);
        w.c[sl.theta_post_sq(i) - 1] = Fr::from_i64(post.theta) * Fr::from_i64(post.theta);
    }

    place_bits(w, sl, sl.theta_bit(0), sl.t_bits, params.theta_max - 1 - gt.theta_sq_sum,
               "theta slack");
    place_bits(w, sl, sl.g_bit(0), sl.g_bits, gt.g, "claim margin");

    // raster values occupy the data slots of a
    out.data_values = raster_values_all(rasters);
    for (uint32_t t = 0; t < 4 * n; ++t) w.a[sl.data(t) - 1] = out.data_values[t];

    out.core = w;
    for (uint32_t t = 0; t < 4 * n; ++t) out.core.a[sl.data(t) - 1] = Fr::zero();
    return out;
}

std::vector<Fr> raster_values_all(const RasterPair& r) {
    std::vector<Fr> out;
    out.reserve(4 * r.pixels());
    for (int64_t v : r.pre_nir) out.push_back(Fr::from_i64(v));
    for (int64_t v : r.pre_swir) out.push_back(Fr::from_i64(v));
    for (int64_t v : r.post_nir) out.push_back(Fr::from_i64(v));
    for (int64_t v : r.post_swir) out.push_back(Fr::from_i64(v));
    return out;
}

std::vector<Fr> raster_values_pre(const RasterPair& r) {
    std::vector<Fr> out;
    out.reserve(2 * r.pixels());
    for (int64_t v : r.pre_nir) out.push_back(Fr::from_i64(v));
    for (int64_t v : r.pre_swir) out.push_back(Fr::from_i64(v));
    return out;
}

std::vector<Fr> raster_values_post(const RasterPair& r) {
    std::vector<Fr> out;
    out.reserve(2 * r.pixels());
    for (int64_t v : r.post_nir) out.push_back(Fr::from_i64(v));
    for (int64_t v : r.post_swir) out.push_back(Fr::from_i64(v));
    return out;
}

}  // namespace zkins
