#pragma once

#include <string>
#include <vector>

#include "rmdec/channel.hpp"
#include "rmdec/rmcode.hpp"
#include "rmdec/srpa.hpp"

namespace rmdec {

struct DecoderSpec {
    enum class Kind { FullRpa, KSrpa, SparseRatio };
    Kind kind = Kind::FullRpa;
    int k = 2;                        // k-SRPA decoder count
    std::vector<LevelParams> levels;  // empty -> default_levels
    Selection selection = Selection::CrcThenMostLikely;
    bool soft_correlation = false;
    int q = 0;  // SparseRatio: projections kept per iteration

    std::string label() const;
    bool uses_crc() const;
    SrpaConfig srpa_config(int m, int r) const;
};

struct SimConfig {
    int m = 7;
    int r = 2;
    std::vector<DecoderSpec> decoders;
    ChannelKind channel = ChannelKind::AwgnBpsk;
    bool noiseless = false;
    std::vector<double> ebn0_db;
    std::uint64_t max_trials = 100000;
    std::uint64_t min_block_errors = 100;
    std::uint64_t master_seed = 0;
    bool seed_set = false;
    std::string output = "results.csv";
    enum class RateConvention { Auto, CodeRate, PayloadRate };
    RateConvention rate_convention = RateConvention::Auto;
    int workers = 0;  // 0: RMDEC_WORKERS env var, else OpenMP default
    double epsilon = 0.05;

    double rate_for(const RmCode& code, const DecoderSpec& dec) const;
};

// Key/value config with [section] headers; sections [code], [channel],
// [sim], and one [decoder] per decoder.  See README for the schema.
SimConfig parse_config_text(const std::string& text);
SimConfig parse_config_file(const std::string& path);
std::string config_echo(const SimConfig& cfg);

struct SweepPoint {
    std::string decoder;
    double ebn0_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t block_errors = 0;
    double bler = 0.0;
    double ci_low = 0.0;   // 95% Wilson interval
    double ci_high = 0.0;
    double mean_fht = 0.0;
    double mean_projections = 0.0;
    double mean_aggregations = 0.0;
    double wall_seconds = 0.0;
};

struct SweepResult {
    SimConfig config;
    std::vector<SweepPoint> points;
};

// One decode of one random transmission; deterministic given the seed.
struct TrialResult {
    bool block_error = false;
    BudgetReport budget;
};
TrialResult run_trial(const RmCode& code, const DecoderSpec& dec, const ChannelParams& ch,
                      double epsilon, std::uint64_t trial_seed);

SweepResult run_sweep(const SimConfig& cfg);

struct BudgetRow {
    std::string decoder;
    std::uint64_t predicted_fht = 0;
    double measured_fht = 0.0;
    int savings_pct = 0;  // vs full-RPA full rounds
};
std::vector<BudgetRow> compare_budget(const RmCode& code, const std::vector<DecoderSpec>& decoders,
                                      std::uint64_t seed, int trials = 1);

// Append results to a csv (header written when the file is new) and echo the
// effective config to <path>.cfg.
void write_csv(const SweepResult& res, const std::string& path);
std::string csv_header();
std::string csv_rows(const SweepResult& res);

// Log-scale BLER vs Eb/N0 chart, one polyline per decoder.
void write_svg_from_csv(const std::string& csv_path, const std::string& svg_path);

void wilson_interval(std::uint64_t errors, std::uint64_t trials, double& lo, double& hi);

}  // namespace rmdec
