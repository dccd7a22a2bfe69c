#include "rmdec/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rmdec/crc3.hpp"
#include "rmdec/rpa.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rmdec {

std::string DecoderSpec::label() const {
    switch (kind) {
        case Kind::FullRpa:
            return "full-rpa";
        case Kind::KSrpa:
            return std::to_string(k) + "-srpa";
        case Kind::SparseRatio:
            return "sparse-q" + std::to_string(q);
    }
    return "?";
}

bool DecoderSpec::uses_crc() const {
    return kind == Kind::KSrpa && selection == Selection::CrcThenMostLikely;
}

SrpaConfig DecoderSpec::srpa_config(int m, int r) const {
    SrpaConfig cfg;
    cfg.k = (kind == Kind::SparseRatio) ? 1 : k;
    cfg.levels = levels.empty() ? default_levels(m, r, cfg.k) : levels;
    if (kind == Kind::SparseRatio) {
        cfg.levels[0].projections = q;
        cfg.selection = Selection::MostLikely;
    } else {
        cfg.selection = selection;
    }
    cfg.soft_correlation = soft_correlation;
    return cfg;
}

double SimConfig::rate_for(const RmCode& code, const DecoderSpec& dec) const {
    switch (rate_convention) {
        case RateConvention::CodeRate:
            return static_cast<double>(code.k) / code.n;
        case RateConvention::PayloadRate:
            return static_cast<double>(code.k - crc3::kWidth) / code.n;
        case RateConvention::Auto:
            return dec.uses_crc() ? static_cast<double>(code.k - crc3::kWidth) / code.n
                                  : static_cast<double>(code.k) / code.n;
    }
    return static_cast<double>(code.k) / code.n;
}

// ---------------------------------------------------------------------------
// Config parsing: INI-style sections, `key = value`, comments with # or ;.

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_double_list(const std::string& v) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(v);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("config: bad boolean '" + v + "'");
}

[[noreturn]] void bad_key(const std::string& section, const std::string& key) {
    throw std::invalid_argument("config: unknown key '" + key + "' in [" + section + "]");
}

}  // namespace

SimConfig parse_config_text(const std::string& text) {
    SimConfig cfg;
    cfg.decoders.clear();
    std::string section;
    DecoderSpec* dec = nullptr;
    // Per-decoder level overrides collected first; defaults depend on (m,r)
    // which may appear later in the file.
    std::vector<std::map<std::string, int>> overrides;

    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        const auto cpos = line.find_first_of("#;");
        if (cpos != std::string::npos) line = line.substr(0, cpos);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw std::invalid_argument("config: malformed section: " + line);
            section = trim(line.substr(1, line.size() - 2));
            if (section == "decoder") {
                cfg.decoders.emplace_back();
                overrides.emplace_back();
                dec = &cfg.decoders.back();
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config: expected key = value: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (section == "code") {
            if (key == "m") cfg.m = std::stoi(val);
            else if (key == "r") cfg.r = std::stoi(val);
            else bad_key(section, key);
        } else if (section == "channel") {
            if (key == "kind") {
                if (val == "awgn-bpsk") cfg.channel = ChannelKind::AwgnBpsk;
                else if (val == "bsc") cfg.channel = ChannelKind::Bsc;
                else throw std::invalid_argument("config: unknown channel kind '" + val + "'");
            } else if (key == "noiseless") cfg.noiseless = parse_bool(val);
            else bad_key(section, key);
        } else if (section == "sim") {
            if (key == "ebn0_db") cfg.ebn0_db = parse_double_list(val);
            else if (key == "max_trials") cfg.max_trials = std::stoull(val);
            else if (key == "min_block_errors") cfg.min_block_errors = std::stoull(val);
            else if (key == "seed") { cfg.master_seed = std::stoull(val); cfg.seed_set = true; }
            else if (key == "output") cfg.output = val;
            else if (key == "workers") cfg.workers = std::stoi(val);
            else if (key == "epsilon") cfg.epsilon = std::stod(val);
            else if (key == "rate_convention") {
                if (val == "auto") cfg.rate_convention = SimConfig::RateConvention::Auto;
                else if (val == "code") cfg.rate_convention = SimConfig::RateConvention::CodeRate;
                else if (val == "payload") cfg.rate_convention = SimConfig::RateConvention::PayloadRate;
                else throw std::invalid_argument("config: unknown rate_convention '" + val + "'");
            } else bad_key(section, key);
        } else if (section == "decoder") {
            if (!dec) throw std::invalid_argument("config: key outside [decoder] section");
            if (key == "kind") {
                if (val == "full-rpa") dec->kind = DecoderSpec::Kind::FullRpa;
                else if (val == "k-srpa") dec->kind = DecoderSpec::Kind::KSrpa;
                else if (val == "sparse") dec->kind = DecoderSpec::Kind::SparseRatio;
                else throw std::invalid_argument("config: unknown decoder kind '" + val + "'");
            } else if (key == "k") dec->k = std::stoi(val);
            else if (key == "q") dec->q = std::stoi(val);
            else if (key == "selection") {
                if (val == "most-likely") dec->selection = Selection::MostLikely;
                else if (val == "crc") dec->selection = Selection::CrcThenMostLikely;
                else throw std::invalid_argument("config: unknown selection '" + val + "'");
            } else if (key == "soft_correlation") dec->soft_correlation = parse_bool(val);
            else if (key == "q0" || key == "t0" || key == "q1" || key == "t1" || key == "d1")
                overrides.back()[key] = std::stoi(val);
            else bad_key(section, key);
        } else {
            throw std::invalid_argument("config: key '" + key + "' outside any known section");
        }
    }

    for (std::size_t i = 0; i < cfg.decoders.size(); ++i) {
        DecoderSpec& d = cfg.decoders[i];
        if (overrides[i].empty() || d.kind == DecoderSpec::Kind::FullRpa) continue;
        auto levels = default_levels(cfg.m, cfg.r, d.k);
        for (const auto& [key, v] : overrides[i]) {
            if (key == "q0") levels[0].projections = v;
            else if (key == "t0") levels[0].iters = v;
            else if (levels.size() < 2)
                throw std::invalid_argument("config: level-1 override for an order-2 code");
            else if (key == "q1") levels[1].projections = v;
            else if (key == "t1") levels[1].iters = v;
            else if (key == "d1") levels[1].decoders = v;
        }
        d.levels = std::move(levels);
    }

    if (cfg.decoders.empty()) cfg.decoders.emplace_back();  // default full-rpa
    return cfg;
}

SimConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string config_echo(const SimConfig& cfg) {
    std::ostringstream os;
    os << "[code]\nm = " << cfg.m << "\nr = " << cfg.r << "\n";
    os << "[channel]\nkind = " << (cfg.channel == ChannelKind::AwgnBpsk ? "awgn-bpsk" : "bsc")
       << "\nnoiseless = " << (cfg.noiseless ? "true" : "false") << "\n";
    os << "[sim]\nebn0_db = ";
    for (std::size_t i = 0; i < cfg.ebn0_db.size(); ++i)
        os << (i ? ", " : "") << cfg.ebn0_db[i];
    os << "\nmax_trials = " << cfg.max_trials
       << "\nmin_block_errors = " << cfg.min_block_errors << "\nseed = " << cfg.master_seed
       << "\noutput = " << cfg.output << "\nepsilon = " << cfg.epsilon << "\nrate_convention = "
       << (cfg.rate_convention == SimConfig::RateConvention::Auto
               ? "auto"
               : cfg.rate_convention == SimConfig::RateConvention::CodeRate ? "code" : "payload")
       << "\n";
    for (const DecoderSpec& d : cfg.decoders) {
        os << "[decoder]\nkind = "
           << (d.kind == DecoderSpec::Kind::FullRpa
                   ? "full-rpa"
                   : d.kind == DecoderSpec::Kind::KSrpa ? "k-srpa" : "sparse")
           << "\n";
        if (d.kind == DecoderSpec::Kind::KSrpa) {
            os << "k = " << d.k << "\nselection = "
               << (d.selection == Selection::CrcThenMostLikely ? "crc" : "most-likely") << "\n";
        }
        if (d.kind == DecoderSpec::Kind::SparseRatio) os << "q = " << d.q << "\n";
        for (std::size_t i = 0; i < d.levels.size(); ++i) {
            os << "# level " << i << ": d = " << d.levels[i].decoders
               << ", t = " << d.levels[i].iters << ", q = " << d.levels[i].projections << "\n";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Monte-Carlo sweep

TrialResult run_trial(const RmCode& code, const DecoderSpec& dec, const ChannelParams& ch,
                      double epsilon, std::uint64_t trial_seed) {
    std::mt19937_64 rng(trial_seed);
    std::bernoulli_distribution coin(0.5);

    MessageBits msg;
    if (dec.uses_crc()) {
        std::vector<std::uint8_t> payload(code.k - crc3::kWidth);
        for (auto& b : payload) b = coin(rng) ? 1 : 0;
        msg = crc3::crc_append(payload);
    } else {
        msg.resize(code.k);
        for (auto& b : msg) b = coin(rng) ? 1 : 0;
    }
    const CodewordBits cw = encode(code, msg);
    const LlrVector llr = transmit(cw, ch, rng);

    TrialResult out;
    CodewordBits decoded;
    switch (dec.kind) {
        case DecoderSpec::Kind::FullRpa: {
            RpaConfig rc;
            rc.epsilon = epsilon;
            decoded = rpa_decode(code, llr, rc, out.budget);
            break;
        }
        case DecoderSpec::Kind::KSrpa: {
            decoded = srpa_multi_decode(code, llr, dec.srpa_config(code.m, code.r), out.budget, rng)
                          .codeword;
            break;
        }
        case DecoderSpec::Kind::SparseRatio: {
            const SrpaConfig sc = dec.srpa_config(code.m, code.r);
            const SparsePlan plan =
                sample_plan(code.m, sc.levels[0].projections, sc.levels[0].iters, rng);
            decoded = srpa_single_decode(code, llr, plan, sc, out.budget, rng);
            break;
        }
    }
    out.block_error = decoded != cw;
    return out;
}

void wilson_interval(std::uint64_t errors, std::uint64_t trials, double& lo, double& hi) {
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(errors) / n;
    const double denom = 1.0 + z * z / n;
    const double center = (p + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
    lo = errors == 0 ? 0.0 : std::max(0.0, center - half);
    hi = errors == trials ? 1.0 : std::min(1.0, center + half);
}

namespace {

int resolve_workers(int configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("RMDEC_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

}  // namespace

SweepResult run_sweep(const SimConfig& cfg) {
    const RmCode code = build_code(cfg.m, cfg.r);
    if (cfg.ebn0_db.empty()) throw std::invalid_argument("run_sweep: empty Eb/N0 list");
    if (cfg.max_trials < 1 || cfg.min_block_errors < 1)
        throw std::invalid_argument("run_sweep: stop rule bounds must be >= 1");
    for (const DecoderSpec& d : cfg.decoders) {
        if (d.kind != DecoderSpec::Kind::FullRpa && cfg.r < 2)
            throw std::invalid_argument("run_sweep: sparse decoding needs order >= 2");
        if (d.uses_crc() && code.k <= crc3::kWidth)
            throw std::invalid_argument("run_sweep: code dimension too small for CRC payload");
    }
    const int workers = resolve_workers(cfg.workers);

    SweepResult result;
    result.config = cfg;

    // Trials are keyed by (seed, global trial index) and evaluated in fixed
    // chunks; the stop rule is applied to the sequential prefix, so outcomes
    // do not depend on the worker count.
    constexpr std::uint64_t kChunk = 1024;

    for (const DecoderSpec& dec : cfg.decoders) {
        for (double ebn0 : cfg.ebn0_db) {
            ChannelParams ch;
            ch.kind = cfg.channel;
            ch.noiseless = cfg.noiseless;
            const double sigma = ebn0_to_sigma(ebn0, cfg.rate_for(code, dec));
            if (cfg.channel == ChannelKind::AwgnBpsk) {
                ch.sigma = sigma;
            } else {
                ch.p = std::clamp(qfunc(1.0 / sigma), 1e-12, 0.5 - 1e-12);
            }

            const auto t_start = std::chrono::steady_clock::now();
            SweepPoint pt;
            pt.decoder = dec.label();
            pt.ebn0_db = ebn0;
            std::uint64_t sum_fht = 0, sum_proj = 0, sum_agg = 0;
            bool stopped = false;
            std::vector<TrialResult> chunk;

            for (std::uint64_t base = 0; base < cfg.max_trials && !stopped; base += kChunk) {
                const std::uint64_t count = std::min(kChunk, cfg.max_trials - base);
                chunk.assign(count, TrialResult{});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
                for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
                    chunk[i] = run_trial(code, dec, ch, cfg.epsilon,
                                         substream_seed(cfg.master_seed, base + i));
                }
                for (std::uint64_t i = 0; i < count; ++i) {
                    ++pt.trials;
                    if (chunk[i].block_error) ++pt.block_errors;
                    sum_fht += chunk[i].budget.fht_calls;
                    sum_proj += chunk[i].budget.projections;
                    sum_agg += chunk[i].budget.aggregations;
                    if (pt.block_errors >= cfg.min_block_errors) {
                        stopped = true;
                        break;
                    }
                }
            }

            pt.bler = static_cast<double>(pt.block_errors) / static_cast<double>(pt.trials);
            wilson_interval(pt.block_errors, pt.trials, pt.ci_low, pt.ci_high);
            pt.mean_fht = static_cast<double>(sum_fht) / static_cast<double>(pt.trials);
            pt.mean_projections = static_cast<double>(sum_proj) / static_cast<double>(pt.trials);
            pt.mean_aggregations = static_cast<double>(sum_agg) / static_cast<double>(pt.trials);
            pt.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
            result.points.push_back(std::move(pt));
        }
    }
    return result;
}

std::vector<BudgetRow> compare_budget(const RmCode& code, const std::vector<DecoderSpec>& decoders,
                                      std::uint64_t seed, int trials) {
    const std::uint64_t full_rounds = budget_formula(code, nullptr).fht_calls;
    ChannelParams ch;
    ch.noiseless = true;

    std::vector<BudgetRow> rows;
    for (const DecoderSpec& dec : decoders) {
        BudgetRow row;
        row.decoder = dec.label();
        if (dec.kind == DecoderSpec::Kind::FullRpa) {
            row.predicted_fht = full_rounds;
        } else {
            const SrpaConfig sc = dec.srpa_config(code.m, code.r);
            row.predicted_fht = budget_formula(code, &sc).fht_calls;
        }

        std::uint64_t sum = 0;
        for (int t = 0; t < trials; ++t) {
            std::mt19937_64 rng(substream_seed(seed, t));
            std::bernoulli_distribution coin(0.5);
            MessageBits msg(code.k);
            for (auto& b : msg) b = coin(rng) ? 1 : 0;
            const LlrVector llr = transmit(encode(code, msg), ch, rng);
            BudgetReport budget;
            if (dec.kind == DecoderSpec::Kind::FullRpa) {
                RpaConfig rc;
                rc.early_stop = false;  // Full Rounds column
                rpa_decode(code, llr, rc, budget);
            } else if (dec.kind == DecoderSpec::Kind::KSrpa) {
                srpa_multi_decode(code, llr, dec.srpa_config(code.m, code.r), budget, rng);
            } else {
                const SrpaConfig sc = dec.srpa_config(code.m, code.r);
                const SparsePlan plan =
                    sample_plan(code.m, sc.levels[0].projections, sc.levels[0].iters, rng);
                srpa_single_decode(code, llr, plan, sc, budget, rng);
            }
            sum += budget.fht_calls;
        }
        row.measured_fht = static_cast<double>(sum) / trials;
        row.savings_pct = static_cast<int>(
            std::lround(100.0 * (1.0 - static_cast<double>(row.predicted_fht) / full_rounds)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Result output

std::string csv_header() {
    return "code_m,code_r,decoder,ebn0_db,trials,errors,bler,ci_low,ci_high,mean_fht,seed";
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

std::string csv_rows(const SweepResult& res) {
    std::ostringstream os;
    for (const SweepPoint& p : res.points) {
        os << res.config.m << ',' << res.config.r << ',' << p.decoder << ','
           << fmt_double(p.ebn0_db) << ',' << p.trials << ',' << p.block_errors << ','
           << fmt_double(p.bler) << ',' << fmt_double(p.ci_low) << ',' << fmt_double(p.ci_high)
           << ',' << fmt_double(p.mean_fht) << ',' << res.config.master_seed << '\n';
    }
    return os.str();
}

void write_csv(const SweepResult& res, const std::string& path) {
    if (res.points.empty()) throw std::invalid_argument("write_csv: empty sweep result");
    const bool need_header =
        !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    if (need_header) out << csv_header() << '\n';
    out << csv_rows(res);
    if (!out) throw std::runtime_error("write_csv: write failed for " + path);

    std::ofstream echo(path + ".cfg");
    if (echo) echo << config_echo(res.config);
}

void write_svg_from_csv(const std::string& csv_path, const std::string& svg_path) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("plot: cannot open " + csv_path);

    struct Pt {
        double x, y;
    };
    std::map<std::string, std::vector<Pt>> series;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) f.push_back(cell);
        if (f.size() < 11) throw std::runtime_error("plot: malformed csv row: " + line);
        const double bler = std::stod(f[6]);
        if (bler > 0.0) series[f[2]].push_back({std::stod(f[3]), std::log10(bler)});
    }
    if (series.empty()) throw std::runtime_error("plot: no plottable rows in " + csv_path);

    double xmin = 1e300, xmax = -1e300, ymin = 0.0;
    for (auto& [name, pts] : series) {
        std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.x < b.x; });
        for (const Pt& p : pts) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
        }
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    ymin = std::floor(ymin) - 0.2;

    const double W = 640, H = 480, ml = 60, mr = 20, mt = 20, mb = 50;
    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto sy = [&](double y) { return mt + (0.0 - y) / (0.0 - ymin) * (H - mt - mb); };
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    std::ofstream out(svg_path);
    if (!out) throw std::runtime_error("plot: cannot open " + svg_path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
        << H - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";
    for (int e = 0; e >= static_cast<int>(std::ceil(ymin)); --e) {
        out << "<text x=\"8\" y=\"" << sy(e) + 4 << "\" font-size=\"12\">1e" << e << "</text>\n"
            << "<line x1=\"" << ml - 4 << "\" y1=\"" << sy(e) << "\" x2=\"" << ml << "\" y2=\""
            << sy(e) << "\" stroke=\"black\"/>\n";
    }
    const int nxticks = 5;
    for (int i = 0; i <= nxticks; ++i) {
        const double x = xmin + (xmax - xmin) * i / nxticks;
        out << "<text x=\"" << sx(x) - 10 << "\" y=\"" << H - mb + 18 << "\" font-size=\"12\">"
            << fmt_double(std::round(x * 100) / 100) << "</text>\n";
    }
    out << "<text x=\"" << W / 2 - 30 << "\" y=\"" << H - 10
        << "\" font-size=\"13\">Eb/N0 [dB]</text>\n";
    out << "<text x=\"14\" y=\"" << mt - 4 << "\" font-size=\"13\">BLER</text>\n";

    int ci = 0;
    double legend_y = mt + 10;
    for (const auto& [name, pts] : series) {
        const char* color = colors[ci % 6];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const Pt& p : pts) out << sx(p.x) << ',' << sy(p.y) << ' ';
        out << "\"/>\n";
        for (const Pt& p : pts)
            out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
                << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << W - mr - 150 << "\" y=\"" << legend_y << "\" font-size=\"12\" fill=\""
            << color << "\">" << name << "</text>\n";
        legend_y += 16;
        ++ci;
    }
    out << "</svg>\n";
}

}  // namespace rmdec
