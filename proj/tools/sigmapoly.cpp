// sigmapoly: sigma-polynomial computation, certification and sweeps.
//
// Exit codes: 0 clean, 1 violations found, 2 input error. Results go to
// stdout (or --out); progress goes to stderr.

#include "sigma/harness.hpp"
#include "sigma/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

constexpr int exit_clean = 0;
constexpr int exit_violations = 1;
constexpr int exit_input = 2;

std::string slurp(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return slurp(in);
}

/// Writes to a temporary sibling and renames, so a failed run never leaves a
/// partial file behind.
void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    const std::filesystem::path target(out_path);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text << '\n';
    }
    std::filesystem::rename(tmp, target);
}

/// graph6 unless the first token is a lone vertex count (edge-list format).
sigma::Graph parse_graph_text(const std::string& text)
{
    std::istringstream in(text);
    std::string first;
    std::getline(in, first);
    const bool edge_list = !first.empty() && first.find_first_not_of("0123456789 \t\r") == std::string::npos;
    return edge_list ? sigma::parse_edge_list(text) : sigma::parse_graph6(first);
}

sigma::IntPolynomial parse_coeffs(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return sigma::coeffs_from_json(nlohmann::json::parse(text));
    std::vector<std::string> digits;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto lo = token.find_first_not_of(" \t\r\n");
        const auto hi = token.find_last_not_of(" \t\r\n");
        if (lo == std::string::npos) throw std::invalid_argument("empty coefficient");
        digits.push_back(token.substr(lo, hi - lo + 1));
    }
    return sigma::from_decimal_strings(digits);
}

struct SourceFlags {
    std::vector<std::string> graph6_files;
    int max_n = 0;
    std::vector<std::string> filters;
    unsigned jobs = 1;
    bool strict = false;
    bool progress = false;
    unsigned agreement_rate = 64;
    std::string out;
    std::string quarantine;

    void attach(CLI::App* app, bool with_filters)
    {
        app->add_option("--graph6-file", graph6_files, "graph6 corpus, one graph per line (repeatable)");
        app->add_option("--max-n", max_n,
                        "without --graph6-file: enumerate orders 1..max-n (<= 7); with it: skip larger orders");
        if (with_filters) app->add_option("--filter-chi", filters, "chi filter such as '>=n-2', 'n-3' (repeatable)");
        app->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));
        app->add_flag("--strict", strict, "abort on the first malformed line");
        app->add_flag("--progress", progress, "report progress on stderr");
        app->add_option("--agreement-rate", agreement_rate, "check every method on every k-th graph (0 = off)");
        app->add_option("--out", out, "write the summary here instead of stdout");
        app->add_option("--quarantine", quarantine, "directory for nonreal counterexample artifacts");
    }

    sigma::ScanConfig config() const
    {
        sigma::ScanConfig c;
        for (const auto& f : graph6_files) c.graph6_files.emplace_back(f);
        if (graph6_files.empty()) {
            if (max_n < 1 || max_n > sigma::enumeration_max_order) {
                throw std::invalid_argument("internal enumeration needs --max-n in [1, 7] or a --graph6-file");
            }
            c.enumerate_up_to = max_n;
        } else if (max_n > 0) {
            c.max_order = max_n;
        }
        for (const auto& f : filters) c.filters.push_back(sigma::ChiFilter::parse(f));
        c.jobs = jobs;
        c.strict = strict;
        c.progress = progress;
        c.agreement_rate = agreement_rate;
        if (!quarantine.empty()) c.quarantine_dir = quarantine;
        return c;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"sigma-polynomials of graphs: exact computation and real-rootedness sweeps"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "sigma report for one graph (graph6 or edge list)");
    std::string graph_text;
    std::string graph_file;
    compute->add_option("--graph6", graph_text, "graph6 string");
    compute->add_option("--input", graph_file, "file holding a graph6 line or an edge list ('-' for stdin)");

    // certify
    auto* certify = app.add_subcommand("certify", "Sturm certificate for a coefficient list");
    std::string coeff_text;
    certify->add_option("coeffs", coeff_text, "'a0,a1,...' or a JSON array (read from stdin when omitted)");

    // scan / verify-brenti
    SourceFlags scan_flags;
    auto* scan_cmd = app.add_subcommand("scan", "sweep a corpus or the internal enumeration");
    scan_flags.attach(scan_cmd, true);
    SourceFlags brenti_flags;
    auto* brenti = app.add_subcommand("verify-brenti", "sweep graphs with chi >= n-3");
    brenti_flags.attach(brenti, false);

    // crosscheck
    auto* cross = app.add_subcommand("crosscheck", "cross-method sigma audit");
    sigma::CrosscheckConfig cross_config;
    std::string cross_out;
    cross->add_option("--max-n", cross_config.max_n, "largest random order (8..11)");
    cross->add_option("--samples", cross_config.samples, "random graphs");
    cross->add_option("--join-pairs", cross_config.join_pairs, "random pairs for the join identity");
    cross->add_option("--seed", cross_config.seed, "random seed");
    cross->add_option("--exhaustive-up-to", cross_config.exhaustive_up_to, "exhaustive labelled phase bound");
    cross->add_flag("--progress", cross_config.progress, "report progress on stderr");
    cross->add_option("--out", cross_out, "write the report here instead of stdout");

    // family
    auto* family = app.add_subcommand("family", "generate a family grid and verify every member");
    std::string spec_text;
    std::string spec_file;
    std::string family_out;
    unsigned family_jobs = 1;
    family->add_option("--spec", spec_text, "JSON grid specification");
    family->add_option("--spec-file", spec_file, "file holding the JSON grid specification");
    family->add_option("--jobs", family_jobs, "worker threads")->check(CLI::Range(1u, 1024u));
    family->add_option("--out", family_out, "write the NDJSON records here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_clean : exit_input;
    }

    try {
        if (*compute) {
            std::string text = graph_text;
            if (text.empty()) text = graph_file.empty() || graph_file == "-" ? slurp(std::cin) : read_file(graph_file);
            const sigma::SigmaReport r = sigma::make_report(parse_graph_text(text));
            nlohmann::json j = sigma::report_json(r);
            j["certificate"] = sigma::certificate_json(r.certificate);
            std::cout << j.dump() << '\n';
            return r.real_rooted && r.methods_agree ? exit_clean : exit_violations;
        }
        if (*certify) {
            const std::string text = coeff_text.empty() ? slurp(std::cin) : coeff_text;
            const sigma::RealRootCertificate cert = sigma::is_real_rooted(parse_coeffs(text));
            std::cout << sigma::certificate_json(cert).dump() << '\n';
            return cert.verdict ? exit_clean : exit_violations;
        }
        if (*scan_cmd || *brenti) {
            const SourceFlags& flags = *scan_cmd ? scan_flags : brenti_flags;
            sigma::ScanConfig config = flags.config();
            sigma::ScanSummary summary;
            if (*brenti) {
                const int cap = config.max_order.value_or(config.enumerate_up_to);
                summary = sigma::verify_brenti(cap > 0 ? cap : sigma::max_order, std::move(config));
            } else {
                summary = sigma::scan(config);
            }
            emit(sigma::summary_json(summary).dump(2), flags.out);
            return summary.clean() ? exit_clean : exit_violations;
        }
        if (*cross) {
            const sigma::CrosscheckReport report = sigma::crosscheck(cross_config);
            emit(sigma::crosscheck_json(report).dump(2), cross_out);
            return report.clean() ? exit_clean : exit_violations;
        }
        if (*family) {
            if (spec_text.empty() == spec_file.empty()) throw std::invalid_argument("give exactly one of --spec, --spec-file");
            const nlohmann::json spec = nlohmann::json::parse(spec_file.empty() ? spec_text : read_file(spec_file));
            const sigma::FamilySummary summary = sigma::family_sweep(spec, family_jobs);
            std::string lines;
            for (const auto& rec : summary.records) lines += sigma::family_record_json(rec).dump() + '\n';
            if (!lines.empty()) lines.pop_back();
            emit(lines, family_out);
            std::cerr << sigma::family_summary_json(summary).dump() << '\n';
            return summary.clean() ? exit_clean : exit_violations;
        }
    } catch (const sigma::ScanAborted& e) {
        std::cerr << "sigmapoly: aborted: " << e.what() << '\n';
        return exit_input;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "sigmapoly: bad JSON: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "sigmapoly: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
