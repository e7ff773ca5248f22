// polynet: exact dimension, bounds and width search for polynomial networks.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polynet/algebra/prime_field.hpp"
#include "polynet/architecture.hpp"
#include "polynet/bounds/bounds.hpp"
#include "polynet/dimension/dimension.hpp"
#include "polynet/report/report.hpp"
#include "polynet/rng.hpp"
#include "polynet/search/search.hpp"
#include "polynet/version.hpp"

namespace {

using polynet::Architecture;
using polynet::report::Json;

enum ExitCode {
    kOk = 0,
    kFailure = 1,
    kBadConfig = 2,
    kResourceGuard = 3,
    kBudgetExceeded = 4,
    kTableMismatch = 5,
};

struct CommonOpts {
    std::string arch_text;
    int degree = 2;
    std::string method = "ff-stacked";
    int trials = 3;
    std::uint64_t seed = 0;
    bool seed_from_flag = false;
    std::string prime = "auto";
    std::string format = "text";
};

std::uint64_t env_seed() {
    if (const char* s = std::getenv("POLYNET_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0') return v;
        throw polynet::ConfigError("POLYNET_SEED is not a decimal integer");
    }
    return 0;
}

std::uint64_t effective_seed(const CommonOpts& o) { return o.seed_from_flag ? o.seed : env_seed(); }

polynet::dim::DimConfig make_dim_config(const CommonOpts& o, int degree) {
    polynet::dim::DimConfig cfg;
    const auto engine = polynet::dim::engine_from_name(o.method);
    if (!engine) throw polynet::ConfigError("unknown method: " + o.method);
    cfg.method = *engine;
    if (o.trials < 1) throw polynet::ConfigError("trials must be at least 1");
    cfg.trials = o.trials;
    cfg.seed = effective_seed(o);
    if (o.prime != "auto") {
        char* end = nullptr;
        const unsigned long long p = std::strtoull(o.prime.c_str(), &end, 10);
        if (!end || *end != '\0') throw polynet::ConfigError("prime must be 'auto' or an integer");
        polynet::algebra::PrimeField f(p); // validates primality and range
        if (p != 0 && static_cast<unsigned long long>(degree) % p == 0)
            throw polynet::ConfigError("prime divides the activation degree");
        cfg.prime = p;
    }
    return cfg;
}

std::string filling_name(polynet::dim::Filling f) {
    return f == polynet::dim::Filling::Proved ? "proved" : "probably-not";
}

Json trials_json(const std::vector<polynet::dim::TrialRecord>& trials) {
    Json arr = Json::array();
    for (const auto& t : trials) {
        Json j;
        j["seed"] = std::to_string(t.seed);
        j["prime"] = t.prime == 0 ? std::string("rational") : std::to_string(t.prime);
        j["rank"] = t.rank;
        arr.push_back(j);
    }
    return arr;
}

Json bounds_json(const polynet::bounds::BoundReport& rep) {
    Json j;
    j["ambient"] = rep.ambient;
    j["naive"] = rep.naive;
    if (rep.recursive_best) {
        j["recursive_best"] = *rep.recursive_best;
        j["recursive_splits"] = rep.recursive_splits;
    }
    if (rep.ah) {
        Json ah;
        ah["expected"] = rep.ah->expected;
        ah["exceptional"] = rep.ah->exceptional;
        if (rep.ah->corrected) ah["corrected"] = *rep.ah->corrected;
        j["alexander_hirschowitz"] = ah;
    }
    j["filling_guaranteed"] = rep.filling_guaranteed;
    j["bottleneck_layers"] = rep.bottlenecks;
    return j;
}

// dimension oracle for recursive bounds: same engine, derived seeds
polynet::bounds::DimOracle sub_dim_oracle(const polynet::dim::DimConfig& cfg) {
    return [cfg](const Architecture& sub) {
        polynet::dim::DimConfig c = cfg;
        c.seed = polynet::derive_seed(cfg.seed, std::hash<std::string>{}(sub.to_string()));
        c.prime.reset(); // sub-architectures draw their own primes
        c.early_exit_on_filling = true;
        return polynet::dim::dimension(sub, c).dim;
    };
}

void emit(const Json& envelope, const std::string& format, const std::string& text,
          const std::string& csv) {
    if (format == "json") {
        std::cout << envelope.dump(2) << "\n";
    } else if (format == "csv") {
        if (csv.empty())
            throw polynet::ConfigError("csv output is only available for table-shaped results");
        std::cout << csv;
    } else if (format == "text") {
        std::cout << text;
    } else {
        throw polynet::ConfigError("unknown format: " + format);
    }
}

int cmd_dim(const CommonOpts& o, bool verdict_only) {
    const auto t0 = std::chrono::steady_clock::now();
    const Architecture arch = polynet::parse_architecture(o.arch_text, o.degree);
    const auto cfg = make_dim_config(o, arch.degree);
    const auto est = polynet::dim::dimension(arch, cfg);
    const auto oracle = sub_dim_oracle(cfg);
    const auto brep = polynet::bounds::bound_report(arch, arch.h() >= 2 ? &oracle : nullptr);

    Json config;
    config["arch"] = arch.widths;
    config["degree"] = arch.degree;
    config["method"] = polynet::dim::engine_name(cfg.method);
    config["trials"] = cfg.trials;
    config["seed"] = std::to_string(cfg.seed);
    config["prime"] = cfg.prime ? std::to_string(*cfg.prime) : std::string("auto");

    Json payload;
    payload["dim"] = est.dim;
    payload["ambient"] = est.ambient;
    payload["filling"] = filling_name(est.is_filling);
    payload["bounds"] = bounds_json(brep);
    payload["trials"] = trials_json(est.trials);

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const Json env = polynet::report::make_envelope(verdict_only ? "filling" : "dim", config,
                                                    payload, ms);

    std::string text;
    text += "arch (" + arch.to_string() + ")  degree " + std::to_string(arch.degree) + "  seed " +
            std::to_string(cfg.seed) + "\n";
    text += "dim        " + std::to_string(est.dim) + "\n";
    text += "ambient    " + std::to_string(est.ambient) + "\n";
    text += "filling    " + filling_name(est.is_filling) + "\n";
    if (!verdict_only) {
        text += "naive      " + std::to_string(brep.naive) + "\n";
        if (brep.recursive_best)
            text += "recursive  " + std::to_string(*brep.recursive_best) + "\n";
        if (brep.ah) {
            text += "ah         expected " + std::to_string(brep.ah->expected);
            if (brep.ah->exceptional)
                text += " (exceptional, corrected " +
                        (brep.ah->corrected ? std::to_string(*brep.ah->corrected) : "?") + ")";
            text += "\n";
        }
        text += "guaranteed " + std::string(brep.filling_guaranteed ? "yes" : "no") + "\n";
        if (!brep.bottlenecks.empty()) {
            text += "bottleneck layers";
            for (int b : brep.bottlenecks) text += " " + std::to_string(b);
            text += "\n";
        }
        for (const auto& t : est.trials)
            text += "trial      seed=" + std::to_string(t.seed) + " " +
                    (t.prime ? "p=" + std::to_string(t.prime) : "rational") +
                    " rank=" + std::to_string(t.rank) + "\n";
    }
    emit(env, o.format, text, "");
    return kOk;
}

int cmd_bounds(const CommonOpts& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const Architecture arch = polynet::parse_architecture(o.arch_text, o.degree);
    const auto cfg = make_dim_config(o, arch.degree);
    const auto oracle = sub_dim_oracle(cfg);
    const auto brep = polynet::bounds::bound_report(arch, arch.h() >= 2 ? &oracle : nullptr);

    Json config;
    config["arch"] = arch.widths;
    config["degree"] = arch.degree;
    config["method"] = polynet::dim::engine_name(cfg.method);
    config["trials"] = cfg.trials;
    config["seed"] = std::to_string(cfg.seed);

    const Json payload = bounds_json(brep);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const Json env = polynet::report::make_envelope("bounds", config, payload, ms);

    std::string text;
    text += "arch (" + arch.to_string() + ")  degree " + std::to_string(arch.degree) + "  seed " +
            std::to_string(cfg.seed) + "\n";
    text += "ambient    " + std::to_string(brep.ambient) + "\n";
    text += "naive      " + std::to_string(brep.naive) + "\n";
    if (brep.recursive_best) {
        text += "recursive  " + std::to_string(*brep.recursive_best) + "  (splits";
        for (auto v : brep.recursive_splits) text += " " + std::to_string(v);
        text += ")\n";
    }
    if (brep.ah) {
        text += "ah         expected " + std::to_string(brep.ah->expected) +
                (brep.ah->exceptional ? " exceptional" : "") + "\n";
    }
    text += "guaranteed " + std::string(brep.filling_guaranteed ? "yes" : "no") + "\n";
    text += "bottleneck";
    if (brep.bottlenecks.empty())
        text += " none";
    else
        for (int b : brep.bottlenecks) text += " " + std::to_string(b);
    text += "\n";
    emit(env, o.format, text, "");
    return kOk;
}

int cmd_search(const CommonOpts& o, int depth, int d0, int dh, std::int64_t budget,
               const std::string& cap_text) {
    const auto t0 = std::chrono::steady_clock::now();
    polynet::search::SearchSpec spec;
    spec.h = depth;
    spec.d0 = d0;
    spec.dh = dh;
    spec.degree = o.degree;
    spec.budget = budget;
    spec.trials = o.trials;
    spec.seed = effective_seed(o);
    if (!cap_text.empty()) {
        const Architecture caps = polynet::parse_architecture(cap_text, 2);
        spec.width_cap = caps.widths;
    }
    const auto result = polynet::search::find_minimal_filling(spec);
    const auto violations = polynet::search::check_unimodality(result.architectures);

    Json config;
    config["depth"] = depth;
    config["d0"] = d0;
    config["dh"] = dh;
    config["degree"] = o.degree;
    config["trials"] = o.trials;
    config["budget"] = budget;
    config["seed"] = std::to_string(spec.seed);

    Json payload;
    payload["minimal_filling"] = result.architectures;
    payload["complete"] = result.complete;
    payload["oracle_calls"] = result.oracle_calls;
    payload["width_cap"] = result.width_cap;
    Json viol = Json::array();
    for (const auto& v : violations) {
        Json j;
        j["widths"] = v.widths;
        j["index"] = v.index;
        viol.push_back(j);
    }
    payload["unimodality_violations"] = viol;

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const Json env = polynet::report::make_envelope("search", config, payload, ms);

    std::string text;
    text += "search depth " + std::to_string(depth) + "  d0 " + std::to_string(d0) + "  dh " +
            std::to_string(dh) + "  degree " + std::to_string(o.degree) + "  seed " +
            std::to_string(spec.seed) + "\n";
    for (const auto& a : result.architectures) {
        text += "minimal (";
        for (std::size_t i = 0; i < a.size(); ++i) text += (i ? "," : "") + std::to_string(a[i]);
        text += ")\n";
    }
    if (result.architectures.empty()) text += "minimal set empty within caps\n";
    if (!result.complete) text += "WARNING: budget exceeded, results incomplete\n";
    text += "oracle calls " + std::to_string(result.oracle_calls) + "\n";
    for (const auto& v : violations)
        text += "unimodality violation at index " + std::to_string(v.index) + "\n";

    std::string csv = "widths\n";
    for (const auto& a : result.architectures) {
        csv += '"';
        for (std::size_t i = 0; i < a.size(); ++i) csv += (i ? "," : "") + std::to_string(a[i]);
        csv += "\"\n";
    }
    emit(env, o.format, text, csv);
    return result.complete ? kOk : kBudgetExceeded;
}

std::string widths_str(const std::vector<int>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

int cmd_reproduce(const CommonOpts& o, int table, bool extended, std::int64_t budget) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t seed = effective_seed(o);

    Json config;
    config["table"] = table;
    config["extended"] = extended;
    config["trials"] = o.trials;
    config["seed"] = std::to_string(seed);

    if (table == 2) {
        const auto engine = polynet::dim::engine_from_name(o.method);
        if (!engine) throw polynet::ConfigError("unknown method: " + o.method);
        config["method"] = o.method;
        const auto rep = polynet::search::reproduce_table2(seed, o.trials, *engine);
        Json payload;
        Json rows = Json::array();
        const auto& degrees = polynet::search::table2_degrees();
        for (std::size_t r = 0; r < rep.table.widths.size(); ++r) {
            Json row;
            row["widths"] = rep.table.widths[r];
            Json dims = Json::array(), expected = Json::array();
            for (std::size_t c = 0; c < degrees.size(); ++c) {
                dims.push_back(rep.table.cells[r][c].dim);
                expected.push_back(polynet::search::table2_expected()[r].expected[c]);
            }
            row["dims"] = dims;
            row["expected"] = expected;
            rows.push_back(row);
        }
        payload["rows"] = rows;
        payload["degrees"] = degrees;
        payload["mismatches"] = rep.mismatches;
        payload["ok"] = rep.ok;
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        const Json env = polynet::report::make_envelope("reproduce", config, payload, ms);

        std::string text = "dimension table (seed " + std::to_string(seed) + ")\n";
        std::string csv = "widths";
        for (int d : degrees) csv += ",r=" + std::to_string(d);
        csv += "\n";
        for (std::size_t r = 0; r < rep.table.widths.size(); ++r) {
            text += "(" + widths_str(rep.table.widths[r]) + ")";
            csv += "\"" + widths_str(rep.table.widths[r]) + "\"";
            for (std::size_t c = 0; c < degrees.size(); ++c) {
                text += "  " + std::to_string(rep.table.cells[r][c].dim);
                csv += "," + std::to_string(rep.table.cells[r][c].dim);
            }
            text += "\n";
            csv += "\n";
        }
        text += rep.ok ? "all cells match\n"
                       : std::to_string(rep.mismatches) + " cells mismatch\n";
        emit(env, o.format, text, csv);
        return rep.ok ? kOk : kTableMismatch;
    }

    if (table == 1) {
        config["budget"] = budget;
        const auto rep = polynet::search::reproduce_table1(seed, extended, budget, o.trials);
        Json payload;
        Json rows = Json::array();
        bool any_incomplete = false;
        for (const auto& row : rep.rows) {
            Json j;
            j["depth"] = row.depth;
            j["found"] = row.found.architectures;
            j["expected"] = row.expected;
            j["exact"] = row.exact;
            j["complete"] = row.found.complete;
            j["ok"] = row.ok;
            any_incomplete = any_incomplete || !row.found.complete;
            rows.push_back(j);
        }
        payload["rows"] = rows;
        payload["ok"] = rep.ok;
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        const Json env = polynet::report::make_envelope("reproduce", config, payload, ms);

        std::string text = "minimal filling widths (seed " + std::to_string(seed) + ")\n";
        std::string csv = "depth,widths\n";
        for (const auto& row : rep.rows) {
            text += "depth " + std::to_string(row.depth) + ":";
            for (const auto& a : row.found.architectures) {
                text += " (" + widths_str(a) + ")";
                csv += std::to_string(row.depth) + ",\"" + widths_str(a) + "\"\n";
            }
            text += row.ok ? "  [ok]\n" : "  [MISMATCH]\n";
        }
        text += rep.ok ? "all rows match\n" : "some rows mismatch\n";
        emit(env, o.format, text, csv);
        if (any_incomplete) return kBudgetExceeded;
        return rep.ok ? kOk : kTableMismatch;
    }

    throw polynet::ConfigError("table must be 1 or 2");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact expressivity measurements for polynomial networks"};
    app.set_version_flag("--version", polynet::kVersion);
    app.require_subcommand(1);

    CommonOpts opts;
    int depth = 3, d0 = 2, dh = 1;
    std::int64_t budget = 20000;
    std::string cap_text;
    int table = 1;
    bool extended = false;

    auto add_common = [&](CLI::App* sub, bool needs_arch) {
        if (needs_arch)
            sub->add_option("--arch", opts.arch_text, "comma-separated widths d0,...,dh")
                ->required();
        sub->add_option("--degree", opts.degree, "activation degree r");
        sub->add_option("--method", opts.method, "ff-stacked | ff-interp | symbolic");
        sub->add_option("--trials", opts.trials, "independent trials");
        auto* seed_opt = sub->add_option("--seed", opts.seed, "base seed (POLYNET_SEED overrides default)");
        seed_opt->each([&](const std::string&) { opts.seed_from_flag = true; });
        sub->add_option("--prime", opts.prime, "'auto' or an explicit prime in (2^20, 2^31)");
        sub->add_option("--format", opts.format, "text | json | csv");
    };

    CLI::App* dim_cmd = app.add_subcommand("dim", "dimension of the functional variety");
    add_common(dim_cmd, true);
    CLI::App* filling_cmd = app.add_subcommand("filling", "filling verdict only");
    add_common(filling_cmd, true);
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds");
    add_common(bounds_cmd, true);

    CLI::App* search_cmd = app.add_subcommand("search", "minimal filling width vectors");
    add_common(search_cmd, false);
    search_cmd->add_option("--depth", depth, "number of layers h")->required();
    search_cmd->add_option("--d0", d0, "input width");
    search_cmd->add_option("--dh", dh, "output width");
    search_cmd->add_option("--budget", budget, "max dimension-oracle calls");
    search_cmd->add_option("--cap", cap_text, "comma-separated internal width caps");

    CLI::App* repro_cmd = app.add_subcommand("reproduce", "regenerate the reference tables");
    add_common(repro_cmd, false);
    repro_cmd->add_option("--table", table, "1 (minimal widths) or 2 (dimension table)");
    repro_cmd->add_flag("--extended", extended, "include the expensive deep rows");
    repro_cmd->add_option("--budget", budget, "max oracle calls per row (table 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadConfig;
    }

    try {
        if (app.got_subcommand(dim_cmd)) return cmd_dim(opts, false);
        if (app.got_subcommand(filling_cmd)) return cmd_dim(opts, true);
        if (app.got_subcommand(bounds_cmd)) return cmd_bounds(opts);
        if (app.got_subcommand(search_cmd))
            return cmd_search(opts, depth, d0, dh, budget, cap_text);
        if (app.got_subcommand(repro_cmd)) return cmd_reproduce(opts, table, extended, budget);
    } catch (const polynet::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadConfig;
    } catch (const polynet::BadPrimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadConfig;
    } catch (const polynet::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const polynet::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kBadConfig;
}
