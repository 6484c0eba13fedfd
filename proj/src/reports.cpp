#include "akblocks/reports.hpp"

namespace akblocks {

namespace {

Json strings_of(const std::vector<MultiPartition>& mps) {
    Json arr = Json::array();
    for (const MultiPartition& mp : mps) arr.push_back(mp.to_string());
    return arr;
}

uint64_t narrow(const BigInt& v) {
    if (v < 0 || v > BigInt(UINT64_MAX))
        throw internal_error("report value does not fit in 64 bits");
    return static_cast<uint64_t>(v);
}

}  // namespace

Json blocks_report(uint32_t n, const ResidueParams& params,
                   const std::vector<BlockClass>& blocks) {
    Json out;
    out["params"] = {{"e", params.e}, {"r", params.r}, {"a", params.a}, {"n", n}};
    Json arr = Json::array();
    for (const BlockClass& b : blocks) {
        Json jb;
        jb["content"] = b.content;
        jb["weight"] = b.weight;
        jb["members"] = strings_of(b.sorted_descending());
        jb["is_chain"] = b.is_dominance_chain();
        arr.push_back(std::move(jb));
    }
    out["blocks"] = std::move(arr);
    return out;
}

Json weight_one_report_json(const WeightOneReport& report) {
    Json out;
    out["s"] = report.s;
    out["chain"] = strings_of(report.chain);
    Json nl = Json::array();
    for (const BigInt& v : report.n_lambda) nl.push_back(narrow(v));
    out["n_lambda"] = std::move(nl);
    Json sets = Json::object();
    const char* names[5] = {"Lambda0", "Lambda1", "Lambda2", "Lambda3", "Lambda4"};
    for (int i = 0; i < 5; ++i) {
        Json members = Json::array();
        for (uint32_t pos : report.lambda_sets[i]) members.push_back(report.chain[pos].to_string());
        sets[names[i]] = std::move(members);
    }
    out["lambda_sets"] = std::move(sets);
    out["decomposition_matrix"] = report.decomposition;
    Json dl = Json::array(), dr = Json::array();
    for (const BigInt& v : report.dim_simple) dl.push_back(narrow(v));
    for (const BigInt& v : report.dim_rad_cell) dr.push_back(narrow(v));
    out["dim_L"] = std::move(dl);
    out["dim_rad_cell"] = std::move(dr);
    return out;
}

Json verdict_json(const BlockVerdict& v) {
    Json out;
    out["params"] = {{"p", v.p}, {"q", v.q}, {"e", v.e}, {"r", v.r}, {"a", v.a}, {"n", v.n}};
    out["content"] = v.content;
    out["weight"] = v.block_weight;
    out["s"] = v.s;
    out["chain"] = v.chain;
    out["n_lambda"] = v.n_lambda;
    out["dim_algebra"] = v.dim_algebra;
    out["dim_block"] = v.dim_block;
    out["gram_ranks"] = v.gram_ranks;
    out["dim_L"] = v.dim_simple;
    out["dim_rad_cell"] = v.dim_rad_cell;
    out["k_lambda"] = v.k_values;
    Json sets = Json::object();
    const char* names[5] = {"Lambda0", "Lambda1", "Lambda2", "Lambda3", "Lambda4"};
    for (int i = 0; i < 5; ++i) sets[names[i]] = v.lambda_sets[i];
    out["lambda_sets"] = std::move(sets);
    out["dim_radB"] = v.dim_radB;
    out["radB_square_dim"] = v.radB_square_dim;
    out["radB_cube_dim"] = v.radB_cube_dim;
    out["mirror"] = {{"q", v.mirror_q}, {"a", v.mirror_a}, {"chain", v.mirror_chain}};
    out["checks"] = {{"chain", v.check_chain},
                     {"lambda_sets", v.check_lambda_sets},
                     {"decomposition_dims", v.check_decomposition_dims},
                     {"k_lambda_zero", v.check_k_lambda_zero},
                     {"radical_powers", v.check_radical_powers},
                     {"mirror_block", v.check_mirror_block},
                     {"paired_tableau_sum", v.check_paired_tableau_sum},
                     {"paired_radical_sum", v.check_paired_radical_sum},
                     {"central_ideals_equal", v.check_central_ideals}};
    out["pass"] = v.pass();
    return out;
}

std::vector<SearchHit> search_weight_one(uint32_t r, uint32_t n_min, uint32_t n_max,
                                         const std::vector<uint32_t>& e_values) {
    std::vector<SearchHit> hits;
    for (uint32_t e : e_values) {
        std::vector<int64_t> a(r, 0);
        // all exponent tuples in [0, e)^r
        while (true) {
            ResidueParams rp(e, a);
            for (uint32_t n = n_min; n <= n_max; ++n) {
                for (const BlockClass& b : partition_into_blocks(n, rp)) {
                    if (b.weight != 1) continue;
                    WeightOneReport rep = classify_weight_one(b, rp);
                    if (weight(b.members[0], rp) != 1)
                        throw internal_error("search produced a block of the wrong weight");
                    SearchHit hit;
                    hit.e = e;
                    hit.r = r;
                    hit.a = rp.a;
                    hit.n = n;
                    hit.content = b.content;
                    hit.s = rep.s;
                    for (auto it = rep.chain.rbegin(); it != rep.chain.rend(); ++it)
                        hit.chain.push_back(it->to_string());
                    uint64_t da = 1;
                    for (uint32_t i = 0; i < n; ++i) da *= r;
                    for (uint32_t i = 2; i <= n; ++i) da *= i;
                    hit.dim_algebra = da;
                    hit.dim_block = 0;
                    for (const BigInt& nl : rep.n_lambda)
                        hit.dim_block += narrow(nl * nl);
                    hits.push_back(std::move(hit));
                }
            }
            uint32_t pos = 0;
            while (pos < r && ++a[pos] == static_cast<int64_t>(e)) a[pos++] = 0;
            if (pos == r) break;
        }
    }
    return hits;
}

Json search_report(const std::vector<SearchHit>& hits) {
    Json arr = Json::array();
    for (const SearchHit& h : hits) {
        Json jh;
        jh["e"] = h.e;
        jh["r"] = h.r;
        jh["a"] = h.a;
        jh["n"] = h.n;
        jh["content"] = h.content;
        jh["s"] = h.s;
        jh["chain"] = h.chain;
        jh["dim_algebra"] = h.dim_algebra;
        jh["dim_block"] = h.dim_block;
        arr.push_back(std::move(jh));
    }
    return arr;
}

}  // namespace akblocks
