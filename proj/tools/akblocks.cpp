#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "akblocks/akalgebra.hpp"
#include "akblocks/reports.hpp"
#include "akblocks/selftest.hpp"

using namespace akblocks;

namespace {

void emit(const Json& payload, const std::string& out_path) {
    std::string text = payload.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw precondition_error("cannot open output path " + out_path);
    file << text;
}

std::vector<int64_t> parse_int_csv(const std::string& text, const char* what) {
    std::vector<int64_t> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw parse_error(std::string(what) + ": empty entry in '" + text + "'");
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(cur, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != cur.size())
            throw parse_error(std::string(what) + ": bad integer '" + cur + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') flush();
        else if (!std::isspace(static_cast<unsigned char>(ch))) cur.push_back(ch);
    }
    flush();
    return out;
}

ResidueContent parse_content(const std::vector<int64_t>& raw, uint32_t e) {
    if (raw.size() != e)
        throw parse_error("--content expects " + std::to_string(e) + " counts (one per residue)");
    ResidueContent c;
    for (int64_t v : raw) {
        if (v < 0) throw parse_error("--content counts must be non-negative");
        c.push_back(static_cast<uint32_t>(v));
    }
    return c;
}

// q explicitly given, or the smallest element of order e
FieldContext resolve_field(uint32_t p, int64_t q_raw, int64_t e_raw) {
    if (q_raw < 0 && e_raw < 0)
        throw parse_error("give at least one of --q and --e");
    Fp field(p);
    uint32_t q = q_raw >= 0 ? static_cast<uint32_t>(q_raw)
                            : smallest_element_of_order(field, static_cast<uint32_t>(e_raw));
    FieldContext fc(p, q);
    if (e_raw >= 0 && fc.e != static_cast<uint32_t>(e_raw))
        throw precondition_error("q = " + std::to_string(q) + " has quantum characteristic " +
                                 std::to_string(fc.e) + ", not " + std::to_string(e_raw));
    return fc;
}

// A multipartition like "-|-" or "-|1,1" starts with a dash and would
// otherwise be read as an option; pull such tokens out up front.  Only
// tokens with a component separator qualify, so "-1,0" stays an
// ordinary option value.
bool looks_like_multipartition(const std::string& token) {
    if (token.empty() || token[0] != '-') return false;
    if (token == "-") return true;
    bool has_separator = false;
    for (char ch : token) {
        if (ch != '-' && ch != '|' && ch != ',' && !std::isdigit(static_cast<unsigned char>(ch)))
            return false;
        if (ch == '|') has_separator = true;
    }
    return has_separator;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block combinatorics and exact verification engine for Ariki-Koike algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "plain key=value configuration file");

    std::vector<std::string> args;  // reversed, as CLI11's vector overload expects
    std::string rescued_mp;
    for (int i = argc - 1; i >= 1; --i) {
        std::string token = argv[i];
        if (looks_like_multipartition(token) && rescued_mp.empty())
            rescued_mp = std::move(token);
        else
            args.push_back(std::move(token));
    }

    // ---- weight ----
    auto* weight_cmd = app.add_subcommand("weight", "weight of a multipartition");
    weight_cmd->configurable();
    int64_t w_e = -1, w_r = -1;
    std::string w_a, w_mp;
    bool w_conj = false;
    weight_cmd->add_option("--e", w_e, "quantum characteristic")->required();
    weight_cmd->add_option("--a", w_a, "cyclotomic exponents, comma separated")
        ->required()
        ->join(',');
    weight_cmd->add_option("--r", w_r, "number of components (defaults to the length of --a)");
    weight_cmd->add_flag("--conjugate", w_conj, "conjugate the multipartition first");
    weight_cmd->add_option("multipartition", w_mp, "components joined by |, empty component '-'");

    // ---- blocks ----
    auto* blocks_cmd = app.add_subcommand("blocks", "group all r-partitions of n into blocks");
    blocks_cmd->configurable();
    int64_t b_e = -1, b_r = -1, b_n = -1;
    std::string b_a, b_out;
    blocks_cmd->add_option("--e", b_e)->required();
    blocks_cmd->add_option("--a", b_a)->required()->join(',');
    blocks_cmd->add_option("--n", b_n)->required();
    blocks_cmd->add_option("--r", b_r);
    blocks_cmd->add_option("--out", b_out, "write the JSON report here instead of stdout");

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "verify one weight-one block exactly");
    verify_cmd->configurable();
    int64_t v_p = -1, v_q = -1, v_e = -1, v_n = -1, v_cap = 1000;
    std::string v_a, v_content, v_out;
    verify_cmd->add_option("--p", v_p, "prime modulus")->required();
    verify_cmd->add_option("--q", v_q, "element of order e (smallest is chosen when absent)");
    verify_cmd->add_option("--e", v_e, "quantum characteristic");
    verify_cmd->add_option("--a", v_a)->required()->join(',');
    verify_cmd->add_option("--n", v_n)->required();
    verify_cmd->add_option("--content", v_content, "residue content of the block")
        ->required()
        ->join(',');
    verify_cmd->add_option("--cap", v_cap, "largest allowed algebra dimension");
    verify_cmd->add_option("--out", v_out);

    // ---- search ----
    auto* search_cmd = app.add_subcommand("search", "sweep parameters for weight-one blocks");
    search_cmd->configurable();
    int64_t s_r = 2, s_nmin = 1, s_nmax = 2;
    std::string s_e, s_out;
    search_cmd->add_option("--r", s_r);
    search_cmd->add_option("--n-min", s_nmin);
    search_cmd->add_option("--n-max", s_nmax)->required();
    search_cmd->add_option("--e", s_e, "quantum characteristics to sweep")->required()->join(',');
    search_cmd->add_option("--out", s_out);

    // ---- selftest ----
    auto* selftest_cmd = app.add_subcommand("selftest", "run the full verification suite");
    selftest_cmd->configurable();
    bool st_quick = false;
    std::string st_fault;
    selftest_cmd->add_flag("--quick", st_quick, "combinatorial checks only");
    selftest_cmd->add_option("--inject-fault", st_fault, "negative control (gram)")
        ->group("");  // hidden

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*weight_cmd) {
            if (w_mp.empty()) w_mp = rescued_mp;
            if (w_mp.empty()) throw parse_error("weight needs a multipartition argument");
            if (w_e < 2) throw parse_error("--e must be at least 2");
            std::vector<int64_t> w_alist = parse_int_csv(w_a, "--a");
            if (w_r >= 0 && static_cast<std::size_t>(w_r) != w_alist.size())
                throw parse_error("--r disagrees with the length of --a");
            ResidueParams params(static_cast<uint32_t>(w_e), w_alist);
            MultiPartition mp = MultiPartition::parse(w_mp, params.r);
            if (w_conj) mp = mp.conjugate();
            std::cout << weight(mp, params) << "\n";
        } else if (*blocks_cmd) {
            if (b_e < 2 || b_n < 0) throw parse_error("need --e >= 2 and --n >= 0");
            std::vector<int64_t> b_alist = parse_int_csv(b_a, "--a");
            if (b_r >= 0 && static_cast<std::size_t>(b_r) != b_alist.size())
                throw parse_error("--r disagrees with the length of --a");
            ResidueParams params(static_cast<uint32_t>(b_e), b_alist);
            auto blocks = partition_into_blocks(static_cast<uint32_t>(b_n), params);
            emit(blocks_report(static_cast<uint32_t>(b_n), params, blocks), b_out);
        } else if (*verify_cmd) {
            if (v_p < 2 || v_n < 1) throw parse_error("need --p prime and --n >= 1");
            FieldContext fc = resolve_field(static_cast<uint32_t>(v_p), v_q, v_e);
            AKParams params(fc, parse_int_csv(v_a, "--a"), static_cast<uint32_t>(v_n),
                            static_cast<uint32_t>(v_cap));
            ResidueContent target = parse_content(parse_int_csv(v_content, "--content"), fc.e);
            BlockVerdict verdict = verify_weight_one_block(params, target, true);
            emit(verdict_json(verdict), v_out);
            if (!verdict.pass()) {
                std::cerr << "theorem violation: a verification check failed; see the report\n";
                return 5;
            }
        } else if (*search_cmd) {
            if (s_r < 2 || s_nmax < s_nmin) throw parse_error("need --r >= 2 and a valid n range");
            std::vector<uint32_t> e_values;
            for (int64_t e : parse_int_csv(s_e, "--e")) {
                if (e < 2) throw parse_error("--e entries must be at least 2");
                e_values.push_back(static_cast<uint32_t>(e));
            }
            auto hits = search_weight_one(static_cast<uint32_t>(s_r),
                                          static_cast<uint32_t>(s_nmin),
                                          static_cast<uint32_t>(s_nmax), e_values);
            emit(search_report(hits), s_out);
        } else if (*selftest_cmd) {
            SelftestOptions options;
            options.quick = st_quick;
            options.inject_fault = st_fault;
            bool all_pass = true;
            for (const CheckResult& result : run_selftest(options)) {
                all_pass = all_pass && result.pass;
                char buffer[32];
                std::snprintf(buffer, sizeof buffer, "%7.2fs", result.seconds);
                std::cout << (result.pass ? "PASS" : "FAIL") << "  " << buffer << "  "
                          << result.name;
                if (!result.pass) std::cout << "  [" << result.detail << "]";
                std::cout << "\n";
            }
            if (!all_pass) {
                std::cerr << "selftest failed\n";
                return 5;
            }
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const theorem_violation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 5;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
