// Command-line front end for the proof toolkit: dataset generation,
// template-transformation augmentation, curriculum suites, validation,
// truth-table oracle queries, scoring, prompt emission.
//
// Exit codes: 0 ok, 1 usage, 2 input parse, 3 validation failure,
// 4 oracle variable limit.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbert/curriculum.hpp"
#include "hilbert/dataset.hpp"
#include "hilbert/formula.hpp"
#include "hilbert/generator.hpp"
#include "hilbert/kernel.hpp"
#include "hilbert/metrics.hpp"
#include "hilbert/oracle.hpp"
#include "hilbert/rng.hpp"
#include "hilbert/transform.hpp"

namespace {

using namespace hilbert;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInputParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitOracleLimit = 4;

// Anything wrong with user-supplied files (JSONL, config, DIMACS, candidate
// texts). Mapped to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

// "7,10,13" or "4:28:3" (inclusive, stride optional) or a mix of both.
std::vector<int> parse_int_list(const std::string& text) {
    auto to_int = [&](const std::string& tok) {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("bad integer '" + tok + "' in '" + text + "'");
        return v;
    };
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (tok.empty())
            continue;
        std::size_t c1 = tok.find(':');
        if (c1 == std::string::npos) {
            out.push_back(to_int(tok));
            continue;
        }
        std::size_t c2 = tok.find(':', c1 + 1);
        int lo = to_int(tok.substr(0, c1));
        int hi = to_int(tok.substr(c1 + 1, c2 == std::string::npos ? std::string::npos
                                                                   : c2 - c1 - 1));
        int stride = c2 == std::string::npos ? 1 : to_int(tok.substr(c2 + 1));
        if (stride <= 0 || lo > hi)
            throw std::invalid_argument("bad range '" + tok + "'");
        for (int v = lo; v <= hi; v += stride)
            out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("empty list '" + text + "'");
    return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        pos = comma + 1;
        if (!tok.empty())
            out.push_back(tok);
    }
    return out;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string padded(const char* prefix, int a, int b) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%02d-%04d", prefix, a, b);
    return buf;
}

WireProfile profile_from_name(const std::string& name) {
    if (name == "canonical")
        return WireProfile::Canonical;
    if (name == "compact")
        return WireProfile::Compact;
    throw std::invalid_argument("unknown profile '" + name + "'");
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t given) {
    if (seed_opt->count())
        return given;
    std::random_device rd;
    std::uint64_t drawn = (static_cast<std::uint64_t>(rd()) << 32) | rd();
    std::cerr << "no --seed given; drew " << drawn << " (stamped into provenance)\n";
    return drawn;
}

std::vector<DatasetRecord> load_records(const std::string& path) {
    try {
        return read_records(path);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

void emit_records(const std::string& out_path, const std::vector<DatasetRecord>& records) {
    if (out_path.empty())
        write_records(std::cout, records);
    else
        write_records(out_path, records);
    std::cerr << records.size() << " records -> " << (out_path.empty() ? "<stdout>" : out_path)
              << "\n";
}

std::set<std::string> exclusion_keys(const std::vector<std::string>& paths) {
    std::set<std::string> keys;
    for (const std::string& path : paths)
        for (const DatasetRecord& r : load_records(path))
            keys.insert(instance_key(r.instance));
    return keys;
}

// ---------------------------------------------------------------------------
// Config flag plumbing. Flags bind to a scratch config; resolve() starts from
// the config file (when given) and copies over only the flags actually set,
// so flags always win.
// ---------------------------------------------------------------------------

struct GenConfigCli {
    std::string config_path;
    GenConfig scratch;
    std::string pool_text;
    std::vector<std::pair<CLI::Option*, std::function<void(GenConfig&, const GenConfig&)>>> wired;
    CLI::Option* pool_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key=value generation config file");
        auto wire = [&](CLI::Option* opt, auto member) {
            wired.emplace_back(opt, [member](GenConfig& dst, const GenConfig& src) {
                dst.*member = src.*member;
            });
        };
        wire(cmd->add_option("--goal-height", scratch.goal_max_height,
                             "max height of random goals"),
             &GenConfig::goal_max_height);
        wire(cmd->add_option("--expansion-height", scratch.expansion_formula_max_height,
                             "max height of drawn antecedents"),
             &GenConfig::expansion_formula_max_height);
        wire(cmd->add_option("--branch-prob", scratch.branch_probability,
                             "branching probability of random formulas"),
             &GenConfig::branch_probability);
        wire(cmd->add_option("--p-stop", scratch.p_stop, "probability a node becomes an assumption"),
             &GenConfig::p_stop);
        wire(cmd->add_option("--p-expand", scratch.p_expand,
                             "probability a node grows a modus ponens"),
             &GenConfig::p_expand);
        wire(cmd->add_option("--p-axiom", scratch.p_axiom,
                             "probability a matching node closes as an axiom"),
             &GenConfig::p_axiom);
        wire(cmd->add_option("--target-steps", scratch.target_step_count,
                             "step budget for unconstrained growth"),
             &GenConfig::target_step_count);
        wire(cmd->add_option("--max-tree-height", scratch.max_tree_height,
                             "derivation tree height cap"),
             &GenConfig::max_tree_height);
        pool_opt = cmd->add_option("--var-pool", pool_text,
                                   "comma-separated variable names for generation");
    }

    GenConfig resolve() const {
        GenConfig cfg = config_path.empty() ? GenConfig{} : load_gen_config_checked(config_path);
        for (const auto& [opt, apply] : wired)
            if (opt->count())
                apply(cfg, scratch);
        if (pool_opt->count())
            cfg.variable_pool = parse_name_list(pool_text);
        cfg.check();
        return cfg;
    }

    static GenConfig load_gen_config_checked(const std::string& path) {
        try {
            return load_gen_config(path);
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
};

struct TransformConfigCli {
    std::string config_path;
    AugmentConfig scratch;
    std::string namespace_text;
    CLI::Option* share_opt = nullptr;
    CLI::Option* pool_opt = nullptr;
    CLI::Option* height_opt = nullptr;
    CLI::Option* branch_opt = nullptr;
    CLI::Option* namespace_opt = nullptr;
    bool with_share = true;

    void attach(CLI::App* cmd, bool share_flag) {
        with_share = share_flag;
        cmd->add_option("--transform-config", config_path,
                        "key=value transformation config file");
        if (share_flag)
            share_opt = cmd->add_option("--alpha", scratch.share,
                                        "fraction of items transformed");
        pool_opt = cmd->add_option("--pool", scratch.transform.target_pool_size,
                                   "max distinct variables per replacement pool");
        height_opt = cmd->add_option("--height", scratch.transform.max_replacement_height,
                                     "max replacement formula height");
        branch_opt = cmd->add_option("--replacement-branch",
                                     scratch.transform.branch_probability,
                                     "branching probability of replacement formulas");
        namespace_opt = cmd->add_option("--namespace", namespace_text,
                                        "comma-separated candidate replacement variables");
    }

    AugmentConfig resolve() const {
        AugmentConfig cfg;
        if (!config_path.empty()) {
            try {
                cfg = load_augment_config(config_path);
            } catch (const std::exception& e) {
                throw InputError(e.what());
            }
        }
        if (with_share && share_opt->count())
            cfg.share = scratch.share;
        if (pool_opt->count())
            cfg.transform.target_pool_size = scratch.transform.target_pool_size;
        if (height_opt->count())
            cfg.transform.max_replacement_height = scratch.transform.max_replacement_height;
        if (branch_opt->count())
            cfg.transform.branch_probability = scratch.transform.branch_probability;
        if (namespace_opt->count())
            cfg.transform.namespace_pool = parse_name_list(namespace_text);
        cfg.check();
        return cfg;
    }
};

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenCmd {
    std::string depths_text = "7,10,13";
    int per_depth = 0;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    std::string out_path;
    std::string prefix = "train-";
    std::string profile_name = "canonical";
    std::string dedup_name = "exact";
    int jobs = 1;
    double validation_frac = 0.0;
    double test_frac = 0.0;
    GenConfigCli cfg_cli;

    void attach(CLI::App* cmd) {
        cmd->add_option("--depths", depths_text, "target step counts, e.g. 7,10,13 or 4:28:3");
        cmd->add_option("--per-depth", per_depth, "instances per depth")->required();
        seed_opt = cmd->add_option("--seed", seed, "master seed (omit to draw one)");
        cmd->add_option("--out", out_path, "output JSONL path (default stdout)");
        cmd->add_option("--prefix", prefix, "record id prefix");
        cmd->add_option("--profile", profile_name, "proof wire shape")
            ->check(CLI::IsMember({"canonical", "compact"}));
        cmd->add_option("--dedup", dedup_name, "duplicate key: exact or alpha")
            ->check(CLI::IsMember({"exact", "alpha"}));
        cmd->add_option("--jobs", jobs, "worker threads (output independent of this)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--validation-frac", validation_frac, "validation split fraction");
        cmd->add_option("--test-frac", test_frac, "test split fraction");
        cfg_cli.attach(cmd);
    }

    int run() const {
        GenConfig cfg = cfg_cli.resolve();
        const WireProfile profile = profile_from_name(profile_name);
        const DedupMode mode =
            dedup_name == "alpha" ? DedupMode::AlphaRenaming : DedupMode::Exact;
        if (per_depth < 0)
            throw std::invalid_argument("--per-depth must be >= 0");
        const std::vector<int> depths = parse_int_list(depths_text);
        const std::uint64_t master = resolve_seed(seed_opt, seed);

        std::vector<int> work;
        work.reserve(depths.size() * static_cast<std::size_t>(per_depth));
        for (int d : depths)
            for (int i = 0; i < per_depth; ++i)
                work.push_back(d);

        // Item k, attempt a draws from a stream fixed by (master, k, a), so
        // results do not depend on scheduling.
        auto build = [&](std::size_t k, int attempt) {
            GenConfig item_cfg = cfg;
            item_cfg.rng_seed = RandomStream::derive_seed(
                master, (static_cast<std::uint64_t>(k) << 16) | static_cast<std::uint64_t>(attempt),
                stream_salt::generate);
            return generate_instance(work[k], item_cfg, profile);
        };

        std::vector<std::optional<std::pair<ReasoningInstance, Proof>>> drafts(work.size());
        const std::size_t njobs = std::min<std::size_t>(
            std::max(jobs, 1), std::max<std::size_t>(work.size(), 1));
        if (njobs <= 1) {
            for (std::size_t k = 0; k < work.size(); ++k)
                drafts[k] = build(k, 0);
        } else {
            std::vector<std::thread> workers;
            std::vector<std::exception_ptr> failures(njobs);
            for (std::size_t w = 0; w < njobs; ++w) {
                workers.emplace_back([&, w] {
                    try {
                        for (std::size_t k = w; k < drafts.size(); k += njobs)
                            drafts[k] = build(k, 0);
                    } catch (...) {
                        failures[w] = std::current_exception();
                    }
                });
            }
            for (std::thread& t : workers)
                t.join();
            for (const std::exception_ptr& failure : failures)
                if (failure)
                    std::rethrow_exception(failure);
        }

        // Collision resampling runs serially in item order; a redraw only
        // ever consults earlier items, so parallel drafting above cannot
        // change the outcome.
        const std::string digest = hex64(gen_config_digest(cfg));
        std::set<std::string> seen;
        std::vector<DatasetRecord> records;
        records.reserve(work.size());
        for (std::size_t k = 0; k < work.size(); ++k) {
            std::pair<ReasoningInstance, Proof> item = std::move(*drafts[k]);
            std::string key = dedup_key(item.first, mode);
            int attempt = 0;
            while (seen.count(key)) {
                if (++attempt >= kGenerateRetryBudget)
                    throw std::runtime_error("gen: item " + std::to_string(k) +
                                             " kept colliding after " +
                                             std::to_string(attempt) + " redraws");
                item = build(k, attempt);
                key = dedup_key(item.first, mode);
            }
            seen.insert(std::move(key));

            char idbuf[64];
            std::snprintf(idbuf, sizeof idbuf, "%s%06zu", prefix.c_str(), k);
            Provenance prov;
            prov.seed = master;
            prov.config_digest = digest;
            prov.trail = {"generate:depth=" + std::to_string(work[k]) +
                          ";profile=" + wire_profile_name(profile)};
            records.push_back(make_record(idbuf, item.first, item.second, Split::Train, prov));
        }

        if (validation_frac > 0.0 || test_frac > 0.0) {
            SplitFractions fractions;
            fractions.validation = validation_frac;
            fractions.test = test_frac;
            fractions.train = 1.0 - validation_frac - test_frac;
            records = dedupe_and_split(std::move(records), fractions, mode);
        }
        emit_records(out_path, records);
        return kExitOk;
    }
};

// ---------------------------------------------------------------------------
// augment
// ---------------------------------------------------------------------------

struct AugmentCmd {
    std::string in_path;
    std::string out_path;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    TransformConfigCli cfg_cli;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", in_path, "dataset JSONL to augment")->required();
        cmd->add_option("output", out_path, "output JSONL path (default stdout)");
        seed_opt = cmd->add_option("--seed", seed, "master seed (omit to draw one)");
        cfg_cli.attach(cmd, /*share_flag=*/true);
    }

    int run() const {
        const AugmentConfig cfg = cfg_cli.resolve();
        const std::uint64_t master = resolve_seed(seed_opt, seed);
        const std::vector<DatasetRecord> input = load_records(in_path);

        std::vector<std::pair<ReasoningInstance, Proof>> batch;
        batch.reserve(input.size());
        for (const DatasetRecord& r : input)
            batch.emplace_back(r.instance, record_proof(r));

        std::vector<AugmentedItem> augmented =
            augment_batch(batch, cfg.share, cfg.transform, master);

        std::vector<DatasetRecord> out;
        out.reserve(input.size());
        std::size_t transformed = 0;
        for (std::size_t i = 0; i < augmented.size(); ++i) {
            if (!augmented[i].transformed) {
                out.push_back(input[i]);
                continue;
            }
            ++transformed;
            AugmentedItem& item = augmented[i];
            item.instance.meta.seed =
                RandomStream::derive_seed(master, i, stream_salt::augment);
            Provenance prov = input[i].provenance;
            prov.seed = master;
            prov.trail.push_back("transform:of=" + input[i].instance.meta.id);
            out.push_back(make_record(input[i].instance.meta.id + "-t", item.instance,
                                      item.proof, input[i].split, prov));
        }
        std::cerr << transformed << " of " << input.size() << " items transformed\n";
        emit_records(out_path, out);
        return kExitOk;
    }
};

// ---------------------------------------------------------------------------
// curriculum depth / width
// ---------------------------------------------------------------------------

struct CurriculumDepthCmd {
    std::string depths_text = "4:28:3";
    int per_depth = 50;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    std::string out_path;
    std::string prefix = "depth-";
    std::vector<std::string> exclude_paths;
    bool lineage = true;
    GenConfigCli cfg_cli;

    void attach(CLI::App* cmd) {
        cmd->add_option("--depths", depths_text, "suite step counts, e.g. 4:28:3");
        cmd->add_option("--per-depth", per_depth, "instances per depth")
            ->check(CLI::PositiveNumber);
        seed_opt = cmd->add_option("--seed", seed, "master seed (omit to draw one)");
        cmd->add_option("--out", out_path, "output JSONL path (default stdout)");
        cmd->add_option("--prefix", prefix, "record id prefix");
        cmd->add_option("--exclude", exclude_paths,
                        "dataset JSONL whose instances must not reappear (repeatable)");
        cmd->add_flag("--lineage,!--fresh", lineage,
                      "reduce each depth from one shared deep proof (default) or "
                      "draw a fresh proof per cell");
        cfg_cli.attach(cmd);
    }

    int run() const {
        GenConfig cfg = cfg_cli.resolve();
        const std::vector<int> depths = parse_int_list(depths_text);
        const std::uint64_t master = resolve_seed(seed_opt, seed);
        const std::set<std::string> exclude = exclusion_keys(exclude_paths);

        std::vector<SuiteItem> suite =
            build_depth_suite(depths, per_depth, cfg, master, exclude, lineage);

        const std::string digest = hex64(gen_config_digest(cfg));
        std::map<int, int> counters;
        std::vector<DatasetRecord> records;
        records.reserve(suite.size());
        for (const SuiteItem& item : suite) {
            const int depth = item.instance.meta.depth_label;
            Provenance prov;
            prov.seed = master;
            prov.config_digest = digest;
            prov.trail = {"curriculum:depth=" + std::to_string(depth) +
                          ";mode=" + (lineage ? "lineage" : "fresh")};
            records.push_back(make_record(padded(prefix.c_str(), depth, counters[depth]++),
                                          item.instance, item.proof, Split::Test, prov));
        }
        emit_records(out_path, records);
        return kExitOk;
    }
};

struct CurriculumWidthCmd {
    std::string widths_text = "0:3";
    int per_width = 100;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    std::string out_path;
    std::string prefix = "width-";
    std::vector<std::string> exclude_paths;
    GenConfigCli cfg_cli;
    TransformConfigCli tcfg_cli;

    void attach(CLI::App* cmd) {
        cmd->add_option("--widths", widths_text, "replacement heights, e.g. 0:3");
        cmd->add_option("--per-width", per_width, "instances per width")
            ->check(CLI::PositiveNumber);
        seed_opt = cmd->add_option("--seed", seed, "master seed (omit to draw one)");
        cmd->add_option("--out", out_path, "output JSONL path (default stdout)");
        cmd->add_option("--prefix", prefix, "record id prefix");
        cmd->add_option("--exclude", exclude_paths,
                        "dataset JSONL whose instances must not reappear (repeatable)");
        cfg_cli.attach(cmd);
        tcfg_cli.attach(cmd, /*share_flag=*/false);
    }

    int run() const {
        GenConfig cfg = cfg_cli.resolve();
        const AugmentConfig tcfg = tcfg_cli.resolve();
        const std::vector<int> widths = parse_int_list(widths_text);
        const std::uint64_t master = resolve_seed(seed_opt, seed);
        const std::set<std::string> exclude = exclusion_keys(exclude_paths);

        std::vector<SuiteItem> suite =
            build_width_suite(widths, per_width, cfg, tcfg.transform, master, exclude);

        const std::string digest = hex64(gen_config_digest(cfg));
        std::map<int, int> counters;
        std::vector<DatasetRecord> records;
        records.reserve(suite.size());
        for (const SuiteItem& item : suite) {
            const int width = item.instance.meta.width_label;
            Provenance prov;
            prov.seed = master;
            prov.config_digest = digest;
            prov.trail = {"curriculum:width=" + std::to_string(width)};
            records.push_back(make_record(padded(prefix.c_str(), width, counters[width]++),
                                          item.instance, item.proof, Split::Test, prov));
        }
        emit_records(out_path, records);
        return kExitOk;
    }
};

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyCmd {
    std::string path;

    void attach(CLI::App* cmd) {
        cmd->add_option("dataset", path, "dataset JSONL to re-validate")->required();
    }

    int run() const {
        const std::vector<DatasetRecord> records = load_records(path);
        std::size_t failed = 0;
        for (const DatasetRecord& r : records) {
            Proof proof;
            try {
                proof = record_proof(r);
            } catch (const WireParseError& e) {
                ++failed;
                std::cerr << r.instance.meta.id << ": unparseable proof: " << e.what() << "\n";
                continue;
            }
            const std::vector<Violation> violations = validate(r.instance, proof);
            if (violations.empty())
                continue;
            ++failed;
            for (const Violation& v : violations)
                std::cerr << r.instance.meta.id << ": " << violation_kind_name(v.kind)
                          << " at step " << v.step + 1 << "\n";
        }
        std::cout << records.size() << " records, " << failed << " failed\n";
        return failed == 0 ? kExitOk : kExitValidation;
    }
};

// ---------------------------------------------------------------------------
// oracle entails / satisfy / cnf-reduce
// ---------------------------------------------------------------------------

struct OracleEntailsCmd {
    std::string goal_text;
    std::vector<std::string> assume_texts;
    std::string dataset_path;
    std::size_t limit = kDefaultVariableLimit;

    void attach(CLI::App* cmd) {
        auto* goal = cmd->add_option("--goal", goal_text, "goal formula");
        auto* dataset = cmd->add_option("--dataset", dataset_path,
                                        "check every record of a dataset JSONL instead");
        cmd->add_option("--assume", assume_texts, "assumption formula (repeatable)");
        cmd->add_option("--limit", limit, "distinct-variable cap for enumeration");
        goal->excludes(dataset);
    }

    int run() const {
        if (!dataset_path.empty()) {
            const std::vector<DatasetRecord> records = load_records(dataset_path);
            std::size_t refuted = 0;
            for (const DatasetRecord& r : records) {
                const bool yes = entails(r.instance.assumptions, r.instance.goal, limit);
                if (!yes)
                    ++refuted;
                std::cout << r.instance.meta.id << "\t"
                          << (yes ? "entailed" : "not-entailed") << "\n";
            }
            std::cerr << records.size() << " records, " << refuted << " not entailed\n";
            return refuted == 0 ? kExitOk : kExitValidation;
        }
        if (goal_text.empty())
            throw std::invalid_argument("oracle entails needs --goal or --dataset");
        std::vector<Formula> assumptions;
        assumptions.reserve(assume_texts.size());
        for (const std::string& text : assume_texts)
            assumptions.push_back(parse_formula(text));
        std::cout << (entails(assumptions, parse_formula(goal_text), limit) ? "entailed"
                                                                            : "not-entailed")
                  << "\n";
        return kExitOk;
    }
};

struct OracleSatisfyCmd {
    std::string formula_text;

    void attach(CLI::App* cmd) {
        cmd->add_option("--formula", formula_text, "formula to satisfy")->required();
    }

    int run() const {
        const Assignment assignment = satisfy(parse_formula(formula_text));
        for (const auto& [name, value] : assignment.values())
            std::cout << name << "=" << (value ? 1 : 0) << "\n";
        return kExitOk;
    }
};

struct OracleCnfReduceCmd {
    std::string in_path = "-";
    std::string out_path;
    std::string fresh = "FALSE_X";
    std::size_t limit = kDefaultVariableLimit;
    bool sat = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("dimacs", in_path, "DIMACS CNF file ('-' for stdin)");
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--fresh", fresh, "name of the shared fresh variable");
        cmd->add_option("--limit", limit, "distinct-variable cap for --sat");
        cmd->add_flag("--sat", sat,
                      "emit sat/unsat (decided through the reduction) instead of the instance");
    }

    int run() const {
        std::string text;
        if (in_path == "-")
            text.assign(std::istreambuf_iterator<char>(std::cin),
                        std::istreambuf_iterator<char>());
        else
            text = read_text_file(in_path);
        const CnfFormula cnf = parse_dimacs(text);

        std::string output;
        if (sat) {
            output = reduction_sat(cnf, fresh, limit) ? "sat\n" : "unsat\n";
        } else {
            ReasoningInstance instance{cnf_to_hilbert(cnf, fresh), Formula::var(fresh), {}};
            output = print_query(instance);
        }
        if (out_path.empty())
            std::cout << output;
        else
            write_text_file(out_path, output);
        return kExitOk;
    }
};

// ---------------------------------------------------------------------------
// score
// ---------------------------------------------------------------------------

struct ScoreCmd {
    std::string dataset_path;
    std::string candidates_path;
    std::string report_path;
    std::string curves_path;
    bool generalization = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--dataset", dataset_path, "suite JSONL with reference instances")
            ->required();
        cmd->add_option("--candidates", candidates_path,
                        "directory of <id>.txt answers, or a JSONL file of "
                        "{\"id\", \"answer\"} objects")
            ->required();
        cmd->add_option("--report", report_path, "report path (default stdout)");
        cmd->add_option("--curves", curves_path, "optional TSV accuracy-curve path");
        cmd->add_flag("--generalization", generalization,
                      "append paired original/transformed outcomes");
    }

    std::map<std::string, std::string> load_candidates(
        const std::vector<DatasetRecord>& records) const {
        std::map<std::string, std::string> candidates;
        if (std::filesystem::is_directory(candidates_path)) {
            for (const DatasetRecord& r : records) {
                const std::filesystem::path p =
                    std::filesystem::path(candidates_path) / (r.instance.meta.id + ".txt");
                if (std::filesystem::exists(p))
                    candidates[r.instance.meta.id] = read_text_file(p.string());
            }
            return candidates;
        }
        // JSONL: {"id": ..., "answer": "text"} or an array of answer lines.
        std::istringstream in(read_text_file(candidates_path));
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const nlohmann::json::exception& e) {
                throw InputError(candidates_path + ":" + std::to_string(line_no) + ": " +
                                 e.what());
            }
            if (!j.is_object() || !j.contains("id") || !j.contains("answer"))
                throw InputError(candidates_path + ":" + std::to_string(line_no) +
                                 ": expected an object with id and answer");
            std::string answer;
            if (j["answer"].is_array()) {
                for (const auto& part : j["answer"])
                    answer += part.get<std::string>() + "\n";
            } else {
                answer = j["answer"].get<std::string>();
            }
            candidates[j["id"].get<std::string>()] = std::move(answer);
        }
        return candidates;
    }

    int run() const {
        const std::vector<DatasetRecord> records = load_records(dataset_path);
        const ScoreReport report = score(records, load_candidates(records));

        std::string text = render_report(report);
        if (generalization)
            text += "\n" + render_generalization(generalization_report(records, report));
        if (report_path.empty())
            std::cout << text;
        else
            write_text_file(report_path, text);
        if (!curves_path.empty())
            write_text_file(curves_path, render_curve_tsv(report.by_depth, "depth") +
                                             render_curve_tsv(report.by_width, "width"));
        std::cerr << "overall " << report.overall.valid << "/" << report.overall.total << "\n";
        return kExitOk;
    }
};

// ---------------------------------------------------------------------------
// emit-prompts
// ---------------------------------------------------------------------------

struct EmitPromptsCmd {
    std::string dataset_path;
    std::string out_dir;

    void attach(CLI::App* cmd) {
        cmd->add_option("--dataset", dataset_path, "dataset JSONL")->required();
        cmd->add_option("--out", out_dir, "output directory")->required();
    }

    int run() const {
        const std::vector<DatasetRecord> records = load_records(dataset_path);
        std::filesystem::create_directories(out_dir);
        for (const DatasetRecord& r : records) {
            const std::filesystem::path base = std::filesystem::path(out_dir);
            write_text_file((base / (r.instance.meta.id + ".query.txt")).string(),
                            print_query(r.instance));
            std::string answer;
            for (const std::string& line : r.proof_lines)
                answer += line + "\n";
            write_text_file((base / (r.instance.meta.id + ".answer.txt")).string(), answer);
        }
        std::cerr << records.size() << " prompt pairs -> " << out_dir << "\n";
        return kExitOk;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic toolkit for Hilbert-style propositional proofs: generate, "
                 "transform, validate, reduce, score."};
    app.require_subcommand(1);

    GenCmd gen;
    gen.attach(app.add_subcommand("gen", "generate a dataset of proved instances"));

    AugmentCmd augment;
    augment.attach(app.add_subcommand("augment", "apply template transformations to a dataset"));

    CLI::App* curriculum =
        app.add_subcommand("curriculum", "derive depth/width evaluation suites");
    curriculum->require_subcommand(1);
    CurriculumDepthCmd curriculum_depth;
    curriculum_depth.attach(
        curriculum->add_subcommand("depth", "reduction-derived depth ladder"));
    CurriculumWidthCmd curriculum_width;
    curriculum_width.attach(
        curriculum->add_subcommand("width", "substitution-widened suite at fixed depth"));

    VerifyCmd verify;
    verify.attach(app.add_subcommand("verify", "re-validate every stored proof"));

    CLI::App* oracle = app.add_subcommand("oracle", "truth-table ground truth");
    oracle->require_subcommand(1);
    OracleEntailsCmd oracle_entails;
    oracle_entails.attach(oracle->add_subcommand("entails", "semantic entailment check"));
    OracleSatisfyCmd oracle_satisfy;
    oracle_satisfy.attach(
        oracle->add_subcommand("satisfy", "constructive satisfying assignment"));
    OracleCnfReduceCmd oracle_cnf;
    oracle_cnf.attach(
        oracle->add_subcommand("cnf-reduce", "encode a DIMACS CNF as a proof instance"));

    ScoreCmd score_cmd;
    score_cmd.attach(app.add_subcommand("score", "judge candidate answers against a suite"));

    EmitPromptsCmd emit_prompts;
    emit_prompts.attach(
        app.add_subcommand("emit-prompts", "write per-record query/answer text files"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("gen"))
            return gen.run();
        if (app.got_subcommand("augment"))
            return augment.run();
        if (app.got_subcommand("curriculum")) {
            if (curriculum->got_subcommand("depth"))
                return curriculum_depth.run();
            return curriculum_width.run();
        }
        if (app.got_subcommand("verify"))
            return verify.run();
        if (app.got_subcommand("oracle")) {
            if (oracle->got_subcommand("entails"))
                return oracle_entails.run();
            if (oracle->got_subcommand("satisfy"))
                return oracle_satisfy.run();
            return oracle_cnf.run();
        }
        if (app.got_subcommand("score"))
            return score_cmd.run();
        if (app.got_subcommand("emit-prompts"))
            return emit_prompts.run();
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const VariableLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOracleLimit;
    } catch (const FormulaParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputParse;
    } catch (const WireParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputParse;
    } catch (const DimacsParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputParse;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
