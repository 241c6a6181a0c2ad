#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "codemetrics/cli.hpp"

namespace codemetrics {

namespace {

struct RawArgs {
    std::vector<std::string> roots;
    std::vector<std::string> reports;
    std::string format = "table";
    std::string out;
    std::string label;
    std::string ext;
    std::vector<std::string> excludes;
    std::string jobs = "1";
    std::string config;
    bool wmc_unit = false;
    bool per_file = false;
    bool per_class = false;
    bool per_function = false;
    bool quiet = false;
};

void output_options(CLI::App& cmd, RawArgs& raw) {
    cmd.add_option("--format", raw.format, "Output format: json, csv or table")->default_str("table");
    cmd.add_option("--out", raw.out, "Write the report to this path instead of standard output");
    cmd.add_flag("--quiet", raw.quiet, "Suppress warnings");
    cmd.add_option("--config", raw.config, "INI file with [caps], [weights] and [admission] sections");
}

unsigned resolve_jobs(const std::string& text) {
    if (text == "auto") {
        return std::max(1U, std::thread::hardware_concurrency());
    }
    unsigned long value = 0;
    std::size_t used = 0;
    try {
        value = std::stoul(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text.front() == '-' || value < 1 || value > 1024) {
        throw UsageError("--jobs expects a positive integer or 'auto', got '" + text + "'");
    }
    return static_cast<unsigned>(value);
}

std::string read_file(const std::filesystem::path& path, std::string_view what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + std::string(what) + " '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string default_label(const std::filesystem::path& root) {
    auto name = root.lexically_normal().filename().string();
    if (name.empty() || name == "." || name == "..") {
        name = std::filesystem::absolute(root).lexically_normal().filename().string();
    }
    return name.empty() ? "snapshot" : name;
}

void emit_diagnostics(const Diagnostics& diags, bool quiet, std::ostream& err) {
    for (const auto& d : diags) {
        if (quiet && d.severity == Severity::Warning) {
            continue;
        }
        err << format_diagnostic(d) << '\n';
    }
}

void write_output(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (!config.out) {
        out << text;
        out.flush();
        return;
    }
    std::ofstream file(*config.out, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file) {
        throw IoError("cannot write '" + config.out->string() + "'");
    }
}

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Diagnostics diags;
    const auto files = walk_and_admit(config, &diags);
    const auto walk_diagnostics = diags.size();
    ScanResult scan;
    try {
        scan = scan_corpus(files, config.jobs, &diags);
    } catch (...) {
        emit_diagnostics(diags, config.quiet, err);
        throw;
    }
    scan.diagnostic_count += walk_diagnostics;
    emit_diagnostics(diags, config.quiet, err);

    ReportOptions options;
    options.label = config.label.empty() ? default_label(config.roots.front()) : config.label;
    options.caps = config.caps;
    options.weights = config.weights;
    options.wmc = config.wmc_unit ? WmcWeighting::Unit : WmcWeighting::Complexity;
    options.config_fingerprint = config_fingerprint(config);
    options.per_file = config.per_file;
    options.per_class = config.per_class;
    options.per_function = config.per_function;
    const auto report = build_snapshot_report(scan, options);
    write_output(config, serialize(report, config.format), out);
    return 0;
}

int run_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto load = [](const std::filesystem::path& path) {
        const auto text = read_file(path, "report");
        try {
            return parse_report_json(text);
        } catch (const ReportFormatError& e) {
            throw IoError(path.string() + ": " + e.what());
        }
    };
    const auto before = load(config.before_report);
    const auto after = load(config.after_report);
    Diagnostics diags;
    const auto deltas = compare_snapshots(before, after, &diags);
    emit_diagnostics(diags, config.quiet, err);
    write_output(config, serialize(deltas, config.format), out);
    return 0;
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
    CLI::App app{"Static source-code metrics: size, complexity, CK object-oriented metrics and maintainability.",
                 "codemetrics"};
    app.require_subcommand(1);
    RawArgs raw;

    auto* analyze = app.add_subcommand("analyze", "Analyze one or more source trees");
    analyze->add_option("roots", raw.roots, "Source directories or files")->required();
    output_options(*analyze, raw);
    analyze->add_option("--label", raw.label, "Release label (default: name of the first root)");
    analyze->add_option("--ext", raw.ext, "Comma-separated extensions to admit (default .cc,.cpp,.cxx,.hh,.hpp,.h,.icc)");
    analyze->add_option("--exclude", raw.excludes, "Glob of relative paths to skip (repeatable)");
    analyze->add_flag("--wmc-unit", raw.wmc_unit, "Weight every method 1 in WMC");
    analyze->add_option("--jobs", raw.jobs, "Worker threads: a positive integer or 'auto'")->default_str("1");
    analyze->add_flag("--per-file", raw.per_file, "Include per-file detail");
    analyze->add_flag("--per-class", raw.per_class, "Include per-class detail");
    analyze->add_flag("--per-function", raw.per_function, "Include per-function detail");

    auto* compare = app.add_subcommand("compare", "Compare two json reports (before, after)");
    compare->add_option("reports", raw.reports, "Report files: before after")->required()->expected(2);
    output_options(*compare, raw);

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) {
        args.emplace_back(argv[i]);
    }
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        const auto* failing = analyze->parsed() ? analyze : compare->parsed() ? compare : &app;
        throw UsageError(std::string(e.what()) + "\n\n" + failing->help());
    }

    RunConfig config;
    config.mode = compare->parsed() ? Mode::Compare : Mode::Analyze;
    if (!raw.config.empty()) {
        config.config_path = raw.config;
        try {
            apply_config_text(read_file(raw.config, "config"), config);
        } catch (const ConfigError& e) {
            throw UsageError(raw.config + ": " + e.what());
        }
    }
    try {
        config.format = parse_format(raw.format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!raw.out.empty()) {
        config.out = raw.out;
    }
    config.quiet = raw.quiet;

    if (config.mode == Mode::Compare) {
        config.before_report = raw.reports.at(0);
        config.after_report = raw.reports.at(1);
        return config;
    }
    for (const auto& r : raw.roots) {
        config.roots.emplace_back(r);
    }
    config.label = raw.label;
    if (!raw.ext.empty()) {
        config.extensions = normalize_extensions(split_comma_list(raw.ext));
        if (config.extensions.empty()) {
            throw UsageError("--ext lists no extensions");
        }
    }
    if (!raw.excludes.empty()) {
        config.excludes = raw.excludes;
    }
    config.wmc_unit = raw.wmc_unit;
    config.jobs = resolve_jobs(raw.jobs);
    config.per_file = raw.per_file;
    config.per_class = raw.per_class;
    config.per_function = raw.per_function;
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return config.mode == Mode::Compare ? run_compare(config, out, err) : run_analyze(config, out, err);
    } catch (const IoError& e) {
        err << "codemetrics: error: " << e.what() << '\n';
        return 1;
    } catch (const AnalysisError& e) {
        err << "codemetrics: error: " << e.what() << '\n';
        return 1;
    } catch (const ConfigError& e) {
        err << "codemetrics: error: " << e.what() << '\n';
        return 2;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_args(argc, argv);
    } catch (const HelpRequested& e) {
        out << e.what();
        return 0;
    } catch (const UsageError& e) {
        std::string message = e.what();
        if (message.empty() || message.back() != '\n') {
            message += '\n';
        }
        err << "codemetrics: usage error: " << message;
        return 2;
    } catch (const IoError& e) {
        err << "codemetrics: error: " << e.what() << '\n';
        return 1;
    }
    return run(config, out, err);
}

}  // namespace codemetrics
