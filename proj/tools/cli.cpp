#include "cli.hpp"

#include "ifsx/document.hpp"
#include "ifsx/errors.hpp"
#include "ifsx/report.hpp"
#include "ifsx/svg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace ifsx::cli {

namespace {

constexpr std::uint64_t kDefaultBudget = 1'000'000;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("IFSX_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << content;
}

struct CommonFlags {
    std::string out;
    std::string format = "text";
    std::uint64_t budget = 0; // 0 = take the default at run time

    Budget to_budget() const {
        Budget b;
        b.max_nodes = budget > 0 ? budget : default_budget();
        return b;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_format = true) {
    cmd->add_option("--out", flags.out, "Write the result to this file instead of stdout");
    if (with_format)
        cmd->add_option("--format", flags.format, "Output format")
            ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--budget", flags.budget,
                    "Node budget for certified searches (default IFSX_BUDGET or 1000000)");
}

int exit_code_for_analysis(const AnalysisReport& r) { return r.certified ? 0 : 2; }

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"certified separation analysis for iterated function systems of similitudes"};
    app.require_subcommand(1);

    // analyze
    CommonFlags an_flags;
    std::string an_file;
    CLI::App* an = app.add_subcommand("analyze", "Full separation analysis of one system");
    an->add_option("file", an_file, "Input .ifs document")->required();
    add_common(an, an_flags);

    // gamma
    CommonFlags ga_flags;
    std::string ga_file;
    CLI::App* ga = app.add_subcommand("gamma", "Characteristic vector of one system");
    ga->add_option("file", ga_file, "Input .ifs document")->required();
    add_common(ga, ga_flags);

    // compare
    CommonFlags cp_flags;
    std::string cp_a, cp_b, cp_what = "gamma";
    CLI::App* cp = app.add_subcommand("compare", "Compare two systems");
    cp->add_option("a", cp_a, "First .ifs document")->required();
    cp->add_option("b", cp_b, "Second .ifs document")->required();
    cp->add_option("--what", cp_what, "Quantity to compare")
        ->check(CLI::IsMember({"gamma"}));
    add_common(cp, cp_flags);

    // compose
    CommonFlags co_flags;
    std::string co_a, co_b;
    CLI::App* co = app.add_subcommand("compose", "Compose two systems into one document");
    co->add_option("a", co_a, "Left .ifs document")->required();
    co->add_option("b", co_b, "Right .ifs document")->required();
    add_common(co, co_flags, /*with_format=*/false);

    // power
    CommonFlags pw_flags;
    std::string pw_file;
    int pw_k = 2;
    CLI::App* pw = app.add_subcommand("power", "k-fold composition of a system");
    pw->add_option("file", pw_file, "Input .ifs document")->required();
    pw->add_option("k", pw_k, "Exponent (k >= 1)")->required()->check(CLI::PositiveNumber);
    add_common(pw, pw_flags, /*with_format=*/false);

    // harness
    CommonFlags ha_flags;
    std::string ha_phi, ha_psi;
    bool ha_assume = false;
    CLI::App* ha = app.add_subcommand(
        "harness", "Run the full decomposition pipeline on a (left, right) pair");
    ha->add_option("--phi", ha_phi, "Left .ifs document (homogeneous, not strongly separated)")
        ->required();
    ha->add_option("--psi", ha_psi, "Right .ifs document (strongly separated)")->required();
    ha->add_flag("--assume-same-attractor", ha_assume,
                 "Skip the cross-attractor evidence gate");
    add_common(ha, ha_flags);

    // chain
    CommonFlags ch_flags;
    std::string ch_file;
    int ch_k = 3;
    CLI::App* ch = app.add_subcommand("chain", "Characteristic vectors of the first K powers");
    ch->add_option("file", ch_file, "Input .ifs document")->required();
    ch->add_option("K", ch_k, "Number of powers")->required()->check(CLI::PositiveNumber);
    add_common(ch, ch_flags);

    // render
    CommonFlags re_flags;
    std::string re_file;
    int re_depth = 4;
    CLI::App* re = app.add_subcommand("render", "Render the depth-k cylinder cover as SVG");
    re->add_option("file", re_file, "Input .ifs document")->required();
    re->add_option("--depth", re_depth, "Cylinder depth")->check(CLI::PositiveNumber);
    add_common(re, re_flags, /*with_format=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (an->parsed()) {
            const IfsSystem sys = load_document(an_file);
            const AnalysisReport r = analyze(sys, an_flags.to_budget());
            emit(an_flags.out, an_flags.format == "json" ? analysis_json(r) : analysis_text(r));
            return exit_code_for_analysis(r);
        }
        if (ga->parsed()) {
            const IfsSystem sys = load_document(ga_file);
            const AnalysisReport r = analyze(sys, ga_flags.to_budget());
            if (ga_flags.format == "json") {
                emit(ga_flags.out, analysis_json(r));
            } else {
                emit(ga_flags.out, "gamma: " + r.gamma.str() + "\ncertification: " +
                                       (r.certified ? "certified" : "provisional") + "\n");
            }
            return exit_code_for_analysis(r);
        }
        if (cp->parsed()) {
            const IfsSystem a = load_document(cp_a);
            const IfsSystem b = load_document(cp_b);
            const Budget budget = cp_flags.to_budget();
            const AnalysisReport ra = analyze(a, budget);
            const AnalysisReport rb = analyze(b, budget);
            const OrderResult ord = compare(ra.gamma, rb.gamma);
            emit(cp_flags.out, cp_flags.format == "json" ? order_json(ord) : order_text(ord));
            if (ord.kind == OrderKind::incomparable) return 2;
            return (ra.certified && rb.certified) ? 0 : 2;
        }
        if (co->parsed()) {
            const IfsSystem a = load_document(co_a);
            const IfsSystem b = load_document(co_b);
            emit(co_flags.out, serialize_document(ifs_compose(a, b)));
            return 0;
        }
        if (pw->parsed()) {
            const IfsSystem sys = load_document(pw_file);
            const std::uint64_t cap = pw_flags.budget > 0 ? pw_flags.budget : default_budget();
            emit(pw_flags.out, serialize_document(ifs_power(sys, pw_k, cap)));
            return 0;
        }
        if (ha->parsed()) {
            const IfsSystem phi = load_document(ha_phi);
            const IfsSystem psi = load_document(ha_psi);
            HarnessOptions opts;
            opts.assume_same_attractor = ha_assume;
            const HarnessReport r = contradiction_trace(phi, psi, ha_flags.to_budget(), opts);
            emit(ha_flags.out, ha_flags.format == "json" ? harness_json(r) : harness_text(r));
            return (r.status == HarnessStatus::trivially_consistent ||
                    r.status == HarnessStatus::contradiction_demonstrated)
                       ? 0
                       : 2;
        }
        if (ch->parsed()) {
            const IfsSystem sys = load_document(ch_file);
            const std::uint64_t cap = ch_flags.budget > 0 ? ch_flags.budget : default_budget();
            const PowerChain c = power_chain(sys, ch_k, ch_flags.to_budget(), cap);
            emit(ch_flags.out, ch_flags.format == "json" ? chain_json(c) : chain_text(c));
            return (c.all_strict && !c.provisional) ? 0 : 2;
        }
        if (re->parsed()) {
            const IfsSystem sys = load_document(re_file);
            const Budget budget = re_flags.to_budget();
            const AnalysisReport r = analyze(sys, budget);
            emit(re_flags.out, render_svg(sys, re_depth, r.partition, budget.max_nodes));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "error: budget exhausted: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int run(const std::vector<std::string>& args) {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("ifsx");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

} // namespace ifsx::cli
