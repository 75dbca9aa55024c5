#include "cqorbits.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Engine {
    cq_engine* handle = nullptr;

    Engine() : handle(cq_engine_new()) {}
    ~Engine() { cq_engine_free(handle); }
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;
};

struct OwnedString {
    char* s = nullptr;

    ~OwnedString() { cq_string_free(s); }
};

int exit_for(cq_status status) {
    switch (status) {
        case CQ_OK: return kExitOk;
        case CQ_ERROR_INVALID_ARGUMENT:
        case CQ_ERROR_CUTOFF_EXCEEDED: return kExitUsage;
        default: return kExitCheckFailed;
    }
}

int report_error(const Engine& engine, cq_status status) {
    const char* message = cq_engine_last_error(engine.handle);
    std::cerr << "error: " << (message && *message ? message : cq_status_name(status)) << "\n";
    return exit_for(status);
}

struct CommonOpts {
    std::string format;
    unsigned cutoff_perm = 9;
    unsigned cutoff_boxes = 10;
    unsigned jobs = 0; // 0 = number of hardware threads
    std::string cache_path;
    std::string range;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const std::string& default_format) {
    opts.format = default_format;
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--cutoff-perm", opts.cutoff_perm,
                    "Bound on full permutation scans (must be >= 5)")
        ->capture_default_str();
    cmd->add_option("--cutoff-boxes", opts.cutoff_boxes,
                    "Bound on exhaustive tableau fillings (must be >= 5)")
        ->capture_default_str();
    cmd->add_option("--jobs", opts.jobs, "Worker threads (0 = all hardware threads)")
        ->capture_default_str();
}

// The documented examples all fit below size 5; smaller cutoffs would make
// parts of the standard command set unrunnable, so they are rejected up
// front as configuration errors.
bool validate_opts(const CommonOpts& opts) {
    if (opts.cutoff_perm < 5 || opts.cutoff_boxes < 5) {
        std::cerr << "error: cutoffs below 5 would refuse the documented example sizes\n";
        return false;
    }
    return true;
}

unsigned effective_jobs(const CommonOpts& opts) {
    if (opts.jobs > 0) return opts.jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

bool configure_engine(Engine& engine, const CommonOpts& opts) {
    return cq_engine_configure(engine.handle, "perm_cutoff", opts.cutoff_perm) == CQ_OK &&
           cq_engine_configure(engine.handle, "box_cutoff", opts.cutoff_boxes) == CQ_OK &&
           cq_engine_configure(engine.handle, "jobs", effective_jobs(opts)) == CQ_OK;
}

bool parse_range(const std::string& text, unsigned& lo, unsigned& hi) {
    const auto sep = text.find("..");
    if (sep == std::string::npos) return false;
    try {
        const unsigned long a = std::stoul(text.substr(0, sep));
        const unsigned long b = std::stoul(text.substr(sep + 2));
        if (a == 0 || b < a) return false;
        lo = static_cast<unsigned>(a);
        hi = static_cast<unsigned>(b);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string subset_text(const ordered_json& members) {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(members[i].get<unsigned>());
    }
    return s + "}";
}

// ---------------------------------------------------------------- count --

struct CountResult {
    unsigned n = 0;
    std::vector<std::pair<std::string, std::string>> values; // (method, value)
    bool agree = true;
};

ordered_json count_json(const CountResult& res, bool all_methods) {
    ordered_json doc;
    doc["n"] = res.n;
    if (all_methods) {
        ordered_json methods;
        for (const auto& [m, v] : res.values) methods[m] = v;
        doc["methods"] = std::move(methods);
        doc["agree"] = res.agree;
    } else {
        doc["method"] = res.values.front().first;
        doc["value"] = res.values.front().second;
    }
    return doc;
}

int run_count(const CommonOpts& opts, std::optional<unsigned> n_arg, const std::string& method) {
    std::vector<unsigned> ns;
    if (!opts.range.empty()) {
        unsigned lo = 0, hi = 0;
        if (!parse_range(opts.range, lo, hi)) {
            std::cerr << "error: --range expects LO..HI with 1 <= LO <= HI\n";
            return kExitUsage;
        }
        for (unsigned n = lo; n <= hi; ++n) ns.push_back(n);
    } else if (n_arg) {
        ns.push_back(*n_arg);
    } else {
        std::cerr << "error: count needs an n argument or --range\n";
        return kExitUsage;
    }

    Engine engine;
    if (!engine.handle || !configure_engine(engine, opts)) return kExitUsage;

    ordered_json cache = ordered_json::object();
    if (!opts.cache_path.empty()) {
        std::ifstream in(opts.cache_path);
        if (in) {
            try {
                cache = ordered_json::parse(in);
                if (!cache.is_object()) cache = ordered_json::object();
            } catch (const std::exception&) {
                std::cerr << "warning: ignoring unreadable cache file\n";
                cache = ordered_json::object();
            }
        }
    }
    bool cache_dirty = false;

    const bool all_methods = method == "all";
    std::vector<CountResult> results;
    for (unsigned n : ns) {
        std::vector<std::string> methods;
        if (all_methods) {
            methods = {"compositions", "skew", "hermite"};
            if (n <= opts.cutoff_perm) methods.push_back("descents");
        } else {
            methods = {method};
        }
        CountResult res;
        res.n = n;
        for (const std::string& m : methods) {
            const std::string key = m + ":" + std::to_string(n);
            std::string value;
            if (cache.contains(key) && cache[key].is_string()) {
                value = cache[key].get<std::string>();
                std::cerr << "# " << m << " n=" << n << ": cached\n";
            } else {
                OwnedString out;
                const auto t0 = std::chrono::steady_clock::now();
                const cq_status st = cq_count(engine.handle, n, m.c_str(), &out.s);
                if (st != CQ_OK) return report_error(engine, st);
                const double ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
                value = out.s;
                std::cerr << "# " << m << " n=" << n << ": " << ms << " ms\n";
                cache[key] = value;
                cache_dirty = true;
            }
            res.values.emplace_back(m, value);
        }
        for (const auto& [m, v] : res.values)
            if (v != res.values.front().second) res.agree = false;
        results.push_back(std::move(res));
    }

    if (!opts.cache_path.empty() && cache_dirty) {
        std::ofstream out(opts.cache_path);
        if (out)
            out << cache.dump() << "\n";
        else
            std::cerr << "warning: could not write cache file\n";
    }

    bool any_disagreement = false;
    for (const CountResult& res : results)
        if (!res.agree) any_disagreement = true;

    if (opts.format == "json") {
        if (results.size() == 1) {
            std::cout << count_json(results.front(), all_methods).dump() << "\n";
        } else {
            ordered_json arr = ordered_json::array();
            for (const CountResult& res : results) arr.push_back(count_json(res, all_methods));
            std::cout << arr.dump() << "\n";
        }
    } else if (opts.format == "csv") {
        std::cout << "n,method,value\n";
        for (const CountResult& res : results)
            for (const auto& [m, v] : res.values)
                std::cout << res.n << "," << csv_escape(m) << "," << csv_escape(v) << "\n";
    } else {
        for (const CountResult& res : results) {
            std::string line;
            if (res.agree) {
                line = res.values.front().second;
            } else {
                line = "disagreement:";
                for (const auto& [m, v] : res.values) line += " " + m + "=" + v;
            }
            if (results.size() > 1)
                std::cout << "n=" << res.n << " " << line << "\n";
            else
                std::cout << line << "\n";
        }
    }
    return any_disagreement ? kExitCheckFailed : kExitOk;
}

// ---------------------------------------------------------------- table --

int run_table(const CommonOpts& opts, unsigned n) {
    Engine engine;
    if (!engine.handle || !configure_engine(engine, opts)) return kExitUsage;
    OwnedString out;
    const cq_status st = cq_table_report(engine.handle, n, &out.s);
    if (st != CQ_OK) return report_error(engine, st);

    if (opts.format == "json") {
        std::cout << out.s << "\n";
        return kExitOk;
    }
    const ordered_json doc = ordered_json::parse(out.s);
    const bool audited = doc.contains("audit");
    if (opts.format == "csv") {
        std::cout << (audited ? "subset,polynomial,value_at_one,unimodal,published,matches\n"
                              : "subset,polynomial,value_at_one,unimodal\n");
        for (const auto& row : doc["rows"]) {
            std::cout << csv_escape(subset_text(row["subset"])) << ","
                      << csv_escape(row["polynomial"].get<std::string>()) << ","
                      << row["value_at_one"].get<std::string>() << ","
                      << (row["unimodal"].get<bool>() ? "true" : "false");
            if (audited)
                std::cout << "," << csv_escape(row["published"].get<std::string>()) << ","
                          << (row["matches"].get<bool>() ? "true" : "false");
            std::cout << "\n";
        }
        return kExitOk;
    }
    std::cout << "enumerator table n=" << doc["n"].get<unsigned>()
              << " (order: " << doc["order"].get<std::string>() << ")\n";
    for (const auto& row : doc["rows"]) {
        std::cout << subset_text(row["subset"]) << "\t" << row["polynomial"].get<std::string>()
                  << "\tB(1)=" << row["value_at_one"].get<std::string>()
                  << (row["unimodal"].get<bool>() ? "\tunimodal" : "\tNOT unimodal");
        if (audited && !row["matches"].get<bool>())
            std::cout << "\t[published: " << row["published"].get<std::string>() << "]";
        std::cout << "\n";
    }
    if (audited) {
        const auto& audit = doc["audit"];
        std::cout << "audit: " << audit["rows_matching"].get<unsigned>() << "/"
                  << audit["rows_total"].get<unsigned>() << " rows match the "
                  << audit["reference"].get<std::string>() << "\n";
        for (const auto& d : audit["discrepancies"])
            std::cout << "  " << subset_text(d["subset"]) << ": " << d["note"].get<std::string>()
                      << "\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- verify --

int run_verify(const CommonOpts& opts) {
    unsigned lo = 0, hi = 0;
    if (!opts.range.empty() && !parse_range(opts.range, lo, hi)) {
        std::cerr << "error: --range expects LO..HI with 1 <= LO <= HI\n";
        return kExitUsage;
    }
    Engine engine;
    if (!engine.handle || !configure_engine(engine, opts)) return kExitUsage;
    OwnedString out;
    const cq_status st = cq_verify_report(engine.handle, lo, hi, &out.s);
    if (st != CQ_OK) return report_error(engine, st);

    const ordered_json doc = ordered_json::parse(out.s);
    const bool passed = doc["overall"].get<std::string>() == "pass";
    if (opts.format == "json") {
        std::cout << out.s << "\n";
    } else if (opts.format == "csv") {
        std::cout << "name,range,status,detail,ms\n";
        for (const auto& c : doc["checks"])
            std::cout << csv_escape(c["name"].get<std::string>()) << ","
                      << csv_escape(c["range"].get<std::string>()) << ","
                      << c["status"].get<std::string>() << ","
                      << csv_escape(c["detail"].get<std::string>()) << ","
                      << c["ms"].get<double>() << "\n";
    } else {
        std::cout << "verification (range: " << doc["range"].get<std::string>() << ")\n";
        for (const auto& c : doc["checks"]) {
            std::cout << c["status"].get<std::string>() << "\t" << c["name"].get<std::string>();
            const std::string range = c["range"].get<std::string>();
            if (!range.empty()) std::cout << "  [" << range << "]";
            std::cout << "  (" << c["ms"].get<double>() << " ms)";
            const std::string detail = c["detail"].get<std::string>();
            if (!detail.empty()) std::cout << "  " << detail;
            std::cout << "\n";
        }
        std::cout << "overall: " << doc["overall"].get<std::string>() << " ("
                  << doc["total_ms"].get<double>() << " ms)\n";
    }
    return passed ? kExitOk : kExitCheckFailed;
}

// ----------------------------------------------------------- conjecture --

int run_conjecture(const CommonOpts& opts, unsigned n) {
    Engine engine;
    if (!engine.handle || !configure_engine(engine, opts)) return kExitUsage;
    OwnedString out;
    const cq_status st = cq_conjecture_report(engine.handle, n, &out.s);
    if (st != CQ_OK) return report_error(engine, st);

    if (opts.format == "json") {
        std::cout << out.s << "\n";
        return kExitOk;
    }
    const ordered_json doc = ordered_json::parse(out.s);
    if (opts.format == "csv") {
        std::cout << "subset,polynomial,unimodal\n";
        for (const auto& row : doc["rows"])
            std::cout << csv_escape(subset_text(row["subset"])) << ","
                      << csv_escape(row["polynomial"].get<std::string>()) << ","
                      << (row["unimodal"].get<bool>() ? "true" : "false") << "\n";
        return kExitOk;
    }
    if (doc["all_unimodal"].get<bool>()) {
        std::cout << "n=" << doc["n"].get<unsigned>() << ": all "
                  << doc["subsets_checked"].get<unsigned>() << " polynomials unimodal\n";
    } else {
        std::cout << "n=" << doc["n"].get<unsigned>() << ": counterexamples found\n";
        for (const auto& c : doc["counterexamples"])
            std::cout << "  " << subset_text(c["subset"]) << ": "
                      << c["polynomial"].get<std::string>() << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------- sequence --

int run_sequence(const CommonOpts& opts, const std::string& name, unsigned count) {
    Engine engine;
    if (!engine.handle || !configure_engine(engine, opts)) return kExitUsage;
    OwnedString out;
    const cq_status st = cq_sequence_report(engine.handle, name.c_str(), count, &out.s);
    if (st != CQ_OK) return report_error(engine, st);

    if (opts.format == "json") {
        std::cout << out.s << "\n";
        return kExitOk;
    }
    const ordered_json doc = ordered_json::parse(out.s);
    const unsigned start = doc["start_index"].get<unsigned>();
    if (opts.format == "csv") {
        std::cout << "index,term\n";
        unsigned idx = start;
        for (const auto& term : doc["terms"])
            std::cout << idx++ << "," << term.get<std::string>() << "\n";
        return kExitOk;
    }
    std::cout << "# " << doc["name"].get<std::string>() << ": "
              << doc["provenance"].get<std::string>() << "\n";
    unsigned idx = start;
    for (const auto& term : doc["terms"])
        std::cout << idx++ << "\t" << term.get<std::string>() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Borel-orbit enumeration on complete quadrics"};
    app.set_version_flag("--version", cq_version());
    app.require_subcommand(1);

    CommonOpts count_opts, table_opts, verify_opts, conjecture_opts, sequence_opts;

    auto* count_cmd = app.add_subcommand("count", "Orbit count for one n or a range of n");
    std::optional<unsigned> count_n;
    std::string count_method = "all";
    count_cmd->add_option("n", count_n, "Size parameter (>= 1)");
    count_cmd->add_option("--method", count_method, "Counting route")
        ->check(CLI::IsMember({"all", "compositions", "skew", "hermite", "descents"}))
        ->capture_default_str();
    add_common(count_cmd, count_opts, "text");
    count_cmd->add_option("--range", count_opts.range, "Compute for every n in LO..HI");
    count_cmd->add_option("--cache", count_opts.cache_path,
                          "JSON cache of previously computed values");

    auto* table_cmd = app.add_subcommand("table", "Enumerator polynomials for every subset");
    unsigned table_n = 0;
    table_cmd->add_option("n", table_n, "Size parameter (>= 1)")->required();
    add_common(table_cmd, table_opts, "text");

    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-verification suite");
    add_common(verify_cmd, verify_opts, "text");
    verify_cmd->add_option("--range", verify_opts.range,
                           "Clamp scan ranges to LO..HI (default: full ranges)");

    auto* conjecture_cmd =
        app.add_subcommand("conjecture", "Unimodality scan over every subset of [n-1]");
    unsigned conjecture_n = 0;
    conjecture_cmd->add_option("n", conjecture_n, "Size parameter (>= 1)")->required();
    add_common(conjecture_cmd, conjecture_opts, "text");

    auto* sequence_cmd = app.add_subcommand("sequence", "First terms of a named sequence");
    std::string sequence_name;
    unsigned sequence_count = 0;
    sequence_cmd
        ->add_option("name", sequence_name,
                     "borel_orbits | ordered_bell | involutions | fibonacci | "
                     "equivariant_orbits | special_subset_counts")
        ->required();
    sequence_cmd->add_option("count", sequence_count, "Number of terms (>= 1)")->required();
    add_common(sequence_cmd, sequence_opts, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (count_cmd->parsed()) {
        if (!validate_opts(count_opts)) return kExitUsage;
        return run_count(count_opts, count_n, count_method);
    }
    if (table_cmd->parsed()) {
        if (!validate_opts(table_opts)) return kExitUsage;
        return run_table(table_opts, table_n);
    }
    if (verify_cmd->parsed()) {
        if (!validate_opts(verify_opts)) return kExitUsage;
        return run_verify(verify_opts);
    }
    if (conjecture_cmd->parsed()) {
        if (!validate_opts(conjecture_opts)) return kExitUsage;
        return run_conjecture(conjecture_opts, conjecture_n);
    }
    if (sequence_cmd->parsed()) {
        if (!validate_opts(sequence_opts)) return kExitUsage;
        return run_sequence(sequence_opts, sequence_name, sequence_count);
    }
    return kExitUsage;
}
