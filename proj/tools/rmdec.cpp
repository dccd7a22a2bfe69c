// Command-line front end: encode / decode / simulate / budget / plot.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rmdec/crc3.hpp"
#include "rmdec/rpa.hpp"
#include "rmdec/sim.hpp"
#include "rmdec/srpa.hpp"

namespace {

std::vector<std::uint8_t> parse_bits(const std::string& s) {
    std::vector<std::uint8_t> bits;
    for (char c : s) {
        if (c == '0') bits.push_back(0);
        else if (c == '1') bits.push_back(1);
        else if (c == ' ' || c == '_') continue;
        else throw CLI::ValidationError("bits", "expected a 0/1 string");
    }
    return bits;
}

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

std::vector<double> read_llr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("llr", "cannot open " + path);
    std::vector<double> llr;
    double v;
    while (in >> v) llr.push_back(v);
    return llr;
}

rmdec::DecoderSpec parse_decoder(const std::string& name, int k, int q) {
    rmdec::DecoderSpec spec;
    if (name == "full-rpa") {
        spec.kind = rmdec::DecoderSpec::Kind::FullRpa;
    } else if (name == "k-srpa") {
        spec.kind = rmdec::DecoderSpec::Kind::KSrpa;
        spec.k = k;
    } else if (name == "sparse") {
        spec.kind = rmdec::DecoderSpec::Kind::SparseRatio;
        spec.q = q;
    } else {
        throw CLI::ValidationError("decoder", "expected full-rpa, k-srpa, or sparse");
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reed-Muller RPA/SRPA decoding toolkit"};
    app.require_subcommand(1);

    // --- encode ---
    auto* enc = app.add_subcommand("encode", "Encode message bits into an RM codeword");
    int enc_m = 7, enc_r = 2;
    std::string enc_msg;
    bool enc_crc = false;
    enc->add_option("-m", enc_m, "log2 block length")->required();
    enc->add_option("-r", enc_r, "code order")->required();
    enc->add_option("--msg", enc_msg, "message bits (0/1 string)")->required();
    enc->add_flag("--crc", enc_crc, "treat input as payload, append CRC-3 before encoding");

    // --- decode ---
    auto* dec = app.add_subcommand("decode", "Decode an LLR vector read from a file");
    int dec_m = 7, dec_r = 2, dec_k = 2, dec_q = 0;
    std::string dec_llr, dec_name = "full-rpa";
    std::uint64_t dec_seed = 0;
    bool dec_msg_out = false, dec_parallel = false;
    dec->add_option("-m", dec_m, "log2 block length")->required();
    dec->add_option("-r", dec_r, "code order")->required();
    dec->add_option("--llr-file", dec_llr, "whitespace-separated LLR values")->required();
    dec->add_option("--decoder", dec_name, "full-rpa | k-srpa | sparse (default full-rpa)");
    dec->add_option("--k", dec_k, "decoder count for k-srpa");
    dec->add_option("--q", dec_q, "projections per iteration for sparse");
    dec->add_option("--seed", dec_seed, "seed for sparse plan sampling");
    dec->add_flag("--message", dec_msg_out, "also print the recovered message bits");
    dec->add_flag("--parallel", dec_parallel, "OpenMP over per-subspace decodes (full-rpa)");

    // --- simulate ---
    auto* sim = app.add_subcommand("simulate", "Run a Monte-Carlo BLER sweep from a config file");
    std::string sim_cfg_path, sim_output;
    std::uint64_t sim_seed = 0;
    int sim_workers = 0;
    sim->add_option("--config", sim_cfg_path, "simulation config file")->required();
    sim->add_option("--seed", sim_seed, "master RNG seed")->required();
    sim->add_option("--output", sim_output, "override csv output path");
    sim->add_option("--workers", sim_workers, "worker thread count");

    // --- budget ---
    auto* bud = app.add_subcommand("budget", "Predicted vs measured FHT counts");
    int bud_m = 7, bud_r = 2, bud_k = 2, bud_trials = 1;
    std::uint64_t bud_seed = 1;
    bud->add_option("-m", bud_m, "log2 block length")->required();
    bud->add_option("-r", bud_r, "code order (2 or 3)")->required();
    bud->add_option("--k", bud_k, "SRPA decoder count");
    bud->add_option("--seed", bud_seed, "seed for the instrumented decodes");
    bud->add_option("--trials", bud_trials, "instrumented decodes to average");

    // --- plot ---
    auto* plot = app.add_subcommand("plot", "Render a sweep csv as an svg BLER chart");
    std::string plot_in, plot_out = "bler.svg";
    plot->add_option("--input", plot_in, "csv produced by simulate")->required();
    plot->add_option("--output", plot_out, "svg output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enc) {
            const rmdec::RmCode code = rmdec::build_code(enc_m, enc_r);
            std::vector<std::uint8_t> msg = parse_bits(enc_msg);
            if (enc_crc) msg = rmdec::crc3::crc_append(msg);
            std::cout << bits_to_string(rmdec::encode(code, msg)) << "\n";
        } else if (*dec) {
            const rmdec::RmCode code = rmdec::build_code(dec_m, dec_r);
            const rmdec::LlrVector llr = read_llr_file(dec_llr);
            if (static_cast<int>(llr.size()) != code.n) {
                std::cerr << "error: expected " << code.n << " LLR values, got " << llr.size()
                          << "\n";
                return 1;
            }
            rmdec::BudgetReport budget;
            std::mt19937_64 rng(dec_seed);
            rmdec::CodewordBits out;
            const rmdec::DecoderSpec spec = parse_decoder(dec_name, dec_k, dec_q);
            if (spec.kind == rmdec::DecoderSpec::Kind::FullRpa) {
                rmdec::RpaConfig rc;
                rc.parallel = dec_parallel;
                out = rmdec::rpa_decode(code, llr, rc, budget);
            } else if (spec.kind == rmdec::DecoderSpec::Kind::KSrpa) {
                out = rmdec::srpa_multi_decode(code, llr, spec.srpa_config(dec_m, dec_r), budget,
                                               rng)
                          .codeword;
            } else {
                const rmdec::SrpaConfig sc = spec.srpa_config(dec_m, dec_r);
                const rmdec::SparsePlan plan = rmdec::sample_plan(
                    dec_m, sc.levels[0].projections, sc.levels[0].iters, rng);
                out = rmdec::srpa_single_decode(code, llr, plan, sc, budget, rng);
            }
            std::cout << bits_to_string(out) << "\n";
            if (dec_msg_out) {
                auto msg = rmdec::try_recover_message(code, out);
                if (msg) std::cout << "message: " << bits_to_string(*msg) << "\n";
                else std::cout << "message: (output is not a codeword)\n";
            }
            std::cerr << "fht_calls=" << budget.fht_calls << " projections=" << budget.projections
                      << " aggregations=" << budget.aggregations << "\n";
        } else if (*sim) {
            rmdec::SimConfig cfg = rmdec::parse_config_file(sim_cfg_path);
            cfg.master_seed = sim_seed;
            cfg.seed_set = true;
            if (!sim_output.empty()) cfg.output = sim_output;
            if (sim_workers > 0) cfg.workers = sim_workers;
            const rmdec::SweepResult res = rmdec::run_sweep(cfg);
            rmdec::write_csv(res, cfg.output);
            std::cout << rmdec::csv_header() << "\n" << rmdec::csv_rows(res);
            std::cerr << "wrote " << cfg.output << "\n";
        } else if (*bud) {
            const rmdec::RmCode code = rmdec::build_code(bud_m, bud_r);
            std::vector<rmdec::DecoderSpec> decoders(2);
            decoders[0].kind = rmdec::DecoderSpec::Kind::FullRpa;
            decoders[1].kind = rmdec::DecoderSpec::Kind::KSrpa;
            decoders[1].k = bud_k;
            decoders[1].selection = rmdec::Selection::MostLikely;
            const auto rows = rmdec::compare_budget(code, decoders, bud_seed, bud_trials);
            std::printf("%-12s %14s %14s %9s\n", "decoder", "predicted_fht", "measured_fht",
                        "savings");
            for (const auto& row : rows)
                std::printf("%-12s %14llu %14.1f %8d%%\n", row.decoder.c_str(),
                            static_cast<unsigned long long>(row.predicted_fht), row.measured_fht,
                            row.savings_pct);
        } else if (*plot) {
            rmdec::write_svg_from_csv(plot_in, plot_out);
            std::cerr << "wrote " << plot_out << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
