// Batch front end: line-oriented graphicality verdicts with pipeline traces,
// sequence generators, the pipeline-vs-full-check benchmark, and the
// exhaustive oracle cross-check.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degseq/bench.hpp"
#include "degseq/bounds.hpp"
#include "degseq/generators.hpp"
#include "degseq/line_io.hpp"
#include "degseq/oracle.hpp"
#include "degseq/sequence.hpp"

namespace {

using degseq::BoundOutcome;
using degseq::BoundVerdict;
using degseq::DegreeSequence;
using degseq::EgFailure;
using degseq::EgVerdict;
using degseq::NaReason;
using degseq::PipelineTrace;
using degseq::Stage;
using degseq::StageRecord;

constexpr std::array<Stage, degseq::kStageCount> kAllStages = {
    Stage::ParityCheck, Stage::DegreeRangeCheck, Stage::NearRegular,
    Stage::ZZBound,     Stage::CZBound,          Stage::ErdosGallai,
};

const char* reason_name(NaReason reason) {
    switch (reason) {
        case NaReason::ZeroMinDegree: return "zero-min-degree";
        case NaReason::DegreeRange: return "degree-range";
        case NaReason::RegularDenominator: return "regular-denominator";
        case NaReason::EmptySequence: return "empty-sequence";
        case NaReason::None: break;
    }
    return "none";
}

std::string stage_outcome_text(const StageRecord& record) {
    if (const auto* bound = std::get_if<BoundVerdict>(&record.result)) {
        switch (bound->outcome) {
            case BoundOutcome::Graphic: return "graphic";
            case BoundOutcome::Inconclusive: return "inconclusive";
            case BoundOutcome::NotApplicable:
                return std::string("not-applicable:") + reason_name(bound->reason);
        }
    }
    const auto& eg = std::get<EgVerdict>(record.result);
    if (eg.graphic) return "graphic";
    if (eg.failure == EgFailure::Parity) return "non-graphic:parity";
    return "non-graphic:k=" + std::to_string(eg.witness);
}

nlohmann::ordered_json trace_json(const PipelineTrace& trace) {
    nlohmann::ordered_json out;
    out["stripped_zeros"] = trace.stripped_zeros;
    auto& stages = out["stages"] = nlohmann::ordered_json::array();
    for (const StageRecord& record : trace.stage_results) {
        nlohmann::ordered_json entry;
        entry["stage"] = degseq::stage_name(record.stage);
        entry["outcome"] = stage_outcome_text(record);
        stages.push_back(std::move(entry));
    }
    return out;
}

std::string trace_tsv(const PipelineTrace& trace) {
    std::string out = "stripped=" + std::to_string(trace.stripped_zeros);
    for (const StageRecord& record : trace.stage_results) {
        out += ';';
        out += degseq::stage_name(record.stage);
        out += '=';
        out += stage_outcome_text(record);
    }
    return out;
}

int run_check(std::istream& in, const std::string& format, bool with_trace) {
    std::string line;
    int line_number = 0;
    bool had_error = false;
    while (std::getline(in, line)) {
        ++line_number;
        degseq::ParsedLine parsed = degseq::parse_degree_line(line);
        if (parsed.kind == degseq::ParsedLine::Kind::Blank) continue;
        if (parsed.kind == degseq::ParsedLine::Kind::Error) {
            std::cerr << "line " << line_number << ": " << parsed.error << '\n';
            had_error = true;
            continue;
        }
        DegreeSequence seq;
        try {
            seq = degseq::canonicalize(std::move(parsed.values));
        } catch (const degseq::NegativeDegree& e) {
            std::cerr << "line " << line_number << ": " << e.what() << '\n';
            had_error = true;
            continue;
        }
        const PipelineTrace trace = degseq::classify(seq);
        const char* verdict = trace.graphic ? "graphic" : "non-graphic";
        if (format == "json") {
            nlohmann::ordered_json obj;
            obj["verdict"] = verdict;
            obj["stage"] = degseq::stage_name(trace.deciding_stage);
            if (with_trace) obj["trace"] = trace_json(trace);
            std::cout << obj.dump() << '\n';
        } else {
            std::cout << verdict << '\t' << degseq::stage_name(trace.deciding_stage);
            if (with_trace) std::cout << '\t' << trace_tsv(trace);
            std::cout << '\n';
        }
    }
    return had_error ? 2 : 0;
}

int run_gen_sharpness(degseq::Degree alpha1) {
    const degseq::SharpnessInstance inst = degseq::sharpness_family(alpha1);
    std::cout << "base: " << degseq::to_string(inst.base) << '\n'
              << "increase-max: " << degseq::to_string(inst.increase_max) << '\n'
              << "decrease-length: " << degseq::to_string(inst.decrease_length) << '\n'
              << "decrease-min: " << degseq::to_string(inst.decrease_min) << '\n'
              << "increase-sum: " << degseq::to_string(inst.increase_sum) << '\n';
    return 0;
}

int run_gen_random(const std::string& stats_text, std::int64_t count, std::uint64_t seed) {
    const degseq::ParsedLine parsed = degseq::parse_degree_line(stats_text);
    if (parsed.kind != degseq::ParsedLine::Kind::Values || parsed.values.size() != 4) {
        std::cerr << "--stats expects four integers: max,min,length,sum\n";
        return 2;
    }
    const degseq::SequenceStats st{parsed.values[0], parsed.values[1], parsed.values[2],
                                   parsed.values[3]};
    for (std::int64_t i = 0; i < count; ++i) {
        std::cout << degseq::to_string(degseq::random_with_stats(st, seed + std::uint64_t(i)))
                  << '\n';
    }
    return 0;
}

std::optional<std::vector<DegreeSequence>> load_corpus(const std::string& path, bool& had_error) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << '\n';
        return std::nullopt;
    }
    std::vector<DegreeSequence> corpus;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        degseq::ParsedLine parsed = degseq::parse_degree_line(line);
        if (parsed.kind == degseq::ParsedLine::Kind::Blank) continue;
        if (parsed.kind == degseq::ParsedLine::Kind::Error) {
            std::cerr << "line " << line_number << ": " << parsed.error << '\n';
            had_error = true;
            continue;
        }
        try {
            corpus.push_back(degseq::canonicalize(std::move(parsed.values)));
        } catch (const degseq::NegativeDegree& e) {
            std::cerr << "line " << line_number << ": " << e.what() << '\n';
            had_error = true;
        }
    }
    return corpus;
}

int run_bench_cmd(const std::string& path, int repeat) {
    bool had_error = false;
    const auto corpus = load_corpus(path, had_error);
    if (!corpus) return 2;
    const degseq::BenchReport report = degseq::run_bench(*corpus, repeat);

    std::cout << "sequences: " << corpus->size() << " (repeat " << repeat << ", " << report.total
              << " runs)\n";
    std::cout << "agreement with full check: " << (report.agreement ? "yes" : "NO") << '\n';
    std::cout << std::left << std::setw(18) << "stage" << std::right << std::setw(10) << "decided"
              << std::setw(11) << "fraction" << std::setw(12) << "mean-ns" << '\n';
    nlohmann::ordered_json stages_json;
    for (const Stage stage : kAllStages) {
        const auto idx = static_cast<int>(stage);
        const std::int64_t decided = report.decided_by[idx];
        const double mean_ns = decided ? double(report.stage_ns[idx]) / double(decided) : 0.0;
        std::cout << std::left << std::setw(18) << degseq::stage_name(stage) << std::right
                  << std::setw(10) << decided << std::setw(11) << std::fixed
                  << std::setprecision(4) << report.fraction(stage) << std::setw(12)
                  << std::setprecision(0) << mean_ns << '\n';
        stages_json[degseq::stage_name(stage)] = {{"count", decided},
                                                  {"fraction", report.fraction(stage)},
                                                  {"cumulative_ns", report.stage_ns[idx]}};
    }
    std::cout << std::setprecision(1) << "classify mean ns/seq: " << report.classify_mean_ns()
              << '\n'
              << "baseline mean ns/seq: " << report.baseline_mean_ns() << '\n';

    nlohmann::ordered_json obj;
    obj["total"] = report.total;
    obj["repeat"] = report.repeat;
    obj["agreement"] = report.agreement;
    obj["classify_mean_ns"] = report.classify_mean_ns();
    obj["baseline_mean_ns"] = report.baseline_mean_ns();
    obj["stages"] = std::move(stages_json);
    std::cout << obj.dump() << '\n';

    if (!report.agreement) {
        std::cerr << "pipeline verdict disagreed with the full check\n";
        return 1;
    }
    return had_error ? 2 : 0;
}

int run_cross_check(std::int64_t n_max) {
    const degseq::CrossCheckReport report = degseq::cross_check(n_max);
    std::cout << "max length: " << report.max_length << '\n'
              << "sequences: " << report.sequences << '\n'
              << "graphic: " << report.graphic << '\n'
              << "disagreements: " << report.disagreements << '\n';
    for (const Stage stage : kAllStages) {
        std::cout << "decided by " << degseq::stage_name(stage) << ": "
                  << report.decided_by[static_cast<int>(stage)] << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-sequence graphicality toolkit"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "verdict per input line");
    std::string check_format = "tsv";
    bool check_trace = false;
    std::string check_file;
    check->add_option("--format", check_format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    check->add_flag("--trace", check_trace, "append the full pipeline trace");
    check->add_option("file", check_file, "input file (default: stdin)");

    auto* gen = app.add_subcommand("gen", "sequence generators");
    gen->require_subcommand(1);
    auto* sharp = gen->add_subcommand("sharpness", "boundary family and its perturbations");
    std::int64_t sharp_alpha1 = 0;
    sharp->add_option("--alpha1", sharp_alpha1, "largest degree of the family")->required();
    auto* rnd = gen->add_subcommand("random", "random sequences with pinned stats");
    std::string rnd_stats;
    std::int64_t rnd_count = 1;
    std::uint64_t rnd_seed = 0;
    rnd->add_option("--stats", rnd_stats, "max,min,length,sum")->required();
    rnd->add_option("--count", rnd_count, "sequences to emit")->check(CLI::NonNegativeNumber);
    rnd->add_option("--seed", rnd_seed, "base seed");

    auto* bench = app.add_subcommand("bench", "pipeline vs full-check benchmark");
    std::string bench_file;
    int bench_repeat = 1;
    bench->add_option("file", bench_file, "corpus file")->required();
    bench->add_option("--repeat", bench_repeat, "passes over the corpus")
        ->check(CLI::PositiveNumber);

    auto* oracle = app.add_subcommand("oracle", "constructive ground truth");
    oracle->require_subcommand(1);
    auto* cross = oracle->add_subcommand("cross-check", "exhaustive agreement sweep");
    std::int64_t cross_n_max = 0;
    cross->add_option("--n-max", cross_n_max, "largest sequence length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) {
            if (!check_file.empty() && check_file != "-") {
                std::ifstream in(check_file);
                if (!in) {
                    std::cerr << "cannot open " << check_file << '\n';
                    return 2;
                }
                return run_check(in, check_format, check_trace);
            }
            return run_check(std::cin, check_format, check_trace);
        }
        if (app.got_subcommand(gen)) {
            if (gen->got_subcommand(sharp)) return run_gen_sharpness(sharp_alpha1);
            return run_gen_random(rnd_stats, rnd_count, rnd_seed);
        }
        if (app.got_subcommand(bench)) return run_bench_cmd(bench_file, bench_repeat);
        if (app.got_subcommand(oracle)) return run_cross_check(cross_n_max);
    } catch (const degseq::OracleDisagreement& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 0;
}
