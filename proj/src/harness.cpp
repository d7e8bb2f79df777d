#include "sigma/harness.hpp"

#include "sigma/canonical.hpp"
#include "sigma/families.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>

namespace sigma {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn)
{
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

constexpr std::size_t batch_size = 4096;


int edge_slots(int n) { return n * (n - 1) / 2; }

/// Labelled graph whose edges are the set bits of `mask`, slots ordered
/// (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_slots(int n, std::uint64_t mask)
{
    GraphBuilder b(n);
    int slot = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++slot) {
            if (mask >> slot & 1) b.add_edge(u, v);
        }
    }
    return b.build();
}

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

struct Item {
    std::string origin;
    std::string text;
    std::optional<Graph> graph;
};

struct Outcome {
    std::string error;
    std::string graph6;
    int n = 0;
    int chi = 0;
    std::vector<bool> accepted;
    bool examined = false;
    bool real_rooted = true;
    bool log_concave = true;
    bool agreement_checked = false;
    bool agree = true;
    IntPolynomial sigma;
    RealRootCertificate certificate;
};

Outcome evaluate(const Item& item, std::uint64_t ordinal, const ScanConfig& config)
{
    Outcome out;
    Graph g(0);
    if (item.graph) {
        g = *item.graph;
    } else {
        try {
            g = parse_graph6(item.text);
        } catch (const std::exception& e) {
            out.error = item.origin + ": " + e.what();
            return out;
        }
    }
    out.graph6 = to_graph6(g);
    out.n = g.order();
    if (config.max_order && out.n > *config.max_order) return out;
    out.chi = chromatic_number(g);
    out.examined = true;
    for (const auto& f : config.filters) {
        const bool ok = f.accepts(out.n, out.chi);
        out.accepted.push_back(ok);
        out.examined = out.examined && ok;
    }
    if (!out.examined) return out;

    const SigmaPolynomial s = sigma_cliquecover(g);
    out.sigma = s.poly();
    // chi is independent of sigma here, so the support is a cheap audit.
    bool consistent = s.support_lo() == out.chi;
    if (config.check_real_rooted) {
        out.certificate = is_real_rooted(s.poly());
        out.real_rooted = out.certificate.verdict;
    }
    if (config.check_log_concave) out.log_concave = is_log_concave(s.coeffs()).holds;
    if (config.agreement_rate != 0 && ordinal % config.agreement_rate == 0) {
        out.agreement_checked = true;
        consistent = consistent && methods_agree(g, s);
    }
    out.agree = consistent;
    if (!consistent) out.agreement_checked = true;
    return out;
}

/// Feeds the scan in input order: enumeration, then files, then in-memory
/// graphs. Each call returns at most batch_size items; empty means done.
class ItemSource {
public:
    explicit ItemSource(const ScanConfig& config) : config_(config) {}

    std::vector<Item> next()
    {
        std::vector<Item> batch;
        while (batch.size() < batch_size) {
            if (enum_n_ <= config_.enumerate_up_to) {
                if (!enum_loaded_) {
                    enum_graphs_ = enumerate_small(enum_n_);
                    enum_pos_ = 0;
                    enum_loaded_ = true;
                }
                if (enum_pos_ < enum_graphs_.size()) {
                    batch.push_back({"enum:" + std::to_string(enum_n_) + ":" + std::to_string(enum_pos_), {},
                                     enum_graphs_[enum_pos_]});
                    ++enum_pos_;
                    continue;
                }
                ++enum_n_;
                enum_loaded_ = false;
                continue;
            }
            if (file_index_ < config_.graph6_files.size()) {
                if (!in_.is_open()) {
                    const auto& path = config_.graph6_files[file_index_];
                    in_.open(path);
                    if (!in_) throw std::runtime_error("cannot read " + path.string());
                    line_no_ = 0;
                }
                std::string line;
                if (std::getline(in_, line)) {
                    ++line_no_;
                    if (!line.empty() && line.back() == '\r') line.pop_back();
                    if (line.empty()) continue;
                    batch.push_back({config_.graph6_files[file_index_].string() + ":" + std::to_string(line_no_),
                                     std::move(line), std::nullopt});
                    continue;
                }
                in_.close();
                ++file_index_;
                continue;
            }
            if (mem_pos_ < config_.graphs.size()) {
                batch.push_back({"graph:" + std::to_string(mem_pos_), {}, config_.graphs[mem_pos_]});
                ++mem_pos_;
                continue;
            }
            break;
        }
        return batch;
    }

private:
    const ScanConfig& config_;
    int enum_n_ = 1;
    bool enum_loaded_ = false;
    std::vector<Graph> enum_graphs_;
    std::size_t enum_pos_ = 0;
    std::size_t file_index_ = 0;
    std::ifstream in_;
    std::uint64_t line_no_ = 0;
    std::size_t mem_pos_ = 0;
};

void quarantine(const std::filesystem::path& dir, std::uint64_t k, const Outcome& o)
{
    std::filesystem::create_directories(dir);
    const nlohmann::json j{{"graph6", o.graph6},
                           {"n", o.n},
                           {"chi", o.chi},
                           {"sigma_coeffs", coeffs_json(o.sigma)},
                           {"certificate", certificate_json(o.certificate)}};
    std::ofstream out(dir / ("nonreal-" + std::to_string(k) + ".json"));
    out << j.dump(2) << '\n';
}

} // namespace

std::vector<SmallClass> enumerate_classes(int n)
{
    if (n < 0 || n > enumeration_max_order) {
        throw std::invalid_argument("enumerate_small: order must be in [0, 7]");
    }
    struct Seen {
        std::uint64_t first_mask;
        std::uint64_t count;
    };
    std::unordered_map<std::uint64_t, Seen> seen;
    const std::uint64_t total = std::uint64_t{1} << edge_slots(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const std::uint64_t code = canonical_code(graph_from_slots(n, mask));
        auto [it, fresh] = seen.try_emplace(code, Seen{mask, 0});
        ++it->second.count;
    }

    std::vector<SmallClass> classes;
    classes.reserve(seen.size());
    std::uint64_t orbit_sum = 0;
    for (const auto& [code, s] : seen) {
        const Graph g = graph_from_slots(n, s.first_mask);
        const CanonicalForm cf = canonical_form(g);
        SmallClass c{cf.relabelled(g), s.count, cf.automorphisms};
        if (c.labeled_count * c.automorphisms != factorial(n)) {
            throw std::logic_error("enumerate_small: orbit size disagrees with |Aut|");
        }
        orbit_sum += factorial(n) / c.automorphisms;
        classes.push_back(std::move(c));
    }
    if (orbit_sum != total) throw std::logic_error("enumerate_small: orbit sizes do not sum to 2^C(n,2)");
    std::sort(classes.begin(), classes.end(), [](const SmallClass& a, const SmallClass& b) {
        const int ea = a.representative.edge_count();
        const int eb = b.representative.edge_count();
        if (ea != eb) return ea < eb;
        return canonical_code(a.representative) < canonical_code(b.representative);
    });
    return classes;
}

std::vector<Graph> enumerate_small(int n)
{
    std::vector<Graph> out;
    for (auto& c : enumerate_classes(n)) out.push_back(std::move(c.representative));
    return out;
}

bool ChiFilter::accepts(int n, int chi) const
{
    const int bound = n - offset;
    switch (relation) {
    case Relation::at_least: return chi >= bound;
    case Relation::equal: return chi == bound;
    case Relation::at_most: return chi <= bound;
    }
    return false;
}

std::string ChiFilter::label() const
{
    std::string op = relation == Relation::at_least ? ">=" : relation == Relation::at_most ? "<=" : "=";
    std::string rhs = "n";
    if (offset > 0) rhs += "-" + std::to_string(offset);
    if (offset < 0) rhs += "+" + std::to_string(-offset);
    return "chi" + op + rhs;
}

ChiFilter ChiFilter::parse(std::string_view text)
{
    const std::string original(text);
    auto fail = [&]() -> ChiFilter { throw std::invalid_argument("bad chi filter '" + original + "'"); };
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.starts_with("chi")) text = trim(text.substr(3));
    ChiFilter f;
    if (text.starts_with(">=")) {
        f.relation = Relation::at_least;
        text.remove_prefix(2);
    } else if (text.starts_with("<=")) {
        f.relation = Relation::at_most;
        text.remove_prefix(2);
    } else if (text.starts_with("==")) {
        text.remove_prefix(2);
    } else if (text.starts_with("=")) {
        text.remove_prefix(1);
    }
    text = trim(text);
    if (!text.starts_with("n")) return fail();
    text = trim(text.substr(1));
    if (text.empty()) return f;
    const char sign = text.front();
    if (sign != '-' && sign != '+') return fail();
    text = trim(text.substr(1));
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return fail();
    }
    if (text.size() > 3) return fail();
    const int k = std::stoi(std::string(text));
    f.offset = sign == '-' ? k : -k;
    return f;
}

ScanSummary scan(const ScanConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    ScanSummary summary;
    for (const auto& f : config.filters) summary.per_filter[f.label()] = 0;

    ItemSource source(config);
    std::uint64_t ordinal = 0;
    for (auto batch = source.next(); !batch.empty(); batch = source.next()) {
        std::vector<Outcome> results(batch.size());
        const std::uint64_t base = ordinal;
        parallel_for(batch.size(), config.jobs,
                     [&](std::size_t i) { results[i] = evaluate(batch[i], base + i, config); });
        ordinal += batch.size();

        // Merge in input order.
        for (auto& o : results) {
            if (!o.error.empty()) {
                if (config.strict) throw ScanAborted(o.error);
                summary.malformed.push_back(o.error);
                continue;
            }
            ++summary.total;
            for (std::size_t k = 0; k < o.accepted.size(); ++k) {
                if (o.accepted[k]) ++summary.per_filter[config.filters[k].label()];
            }
            if (!o.examined) continue;
            ++summary.examined;
            const int deficit = o.n - o.chi;
            ++summary.examined_by_deficit[deficit];
            if (!o.real_rooted) {
                ++summary.nonreal;
                ++summary.nonreal_by_deficit[deficit];
                summary.nonreal_graphs.push_back(o.graph6);
                if (config.quarantine_dir) quarantine(*config.quarantine_dir, summary.nonreal, o);
            }
            if (!o.log_concave) {
                ++summary.log_concavity_violations;
                summary.log_concavity_violators.push_back(o.graph6);
                if (o.real_rooted) ++summary.newton_violations;
            }
            if (o.agreement_checked) ++summary.agreement_checks;
            if (!o.agree) {
                ++summary.disagreements;
                summary.disagreement_graphs.push_back(o.graph6);
            }
        }
        if (config.progress) {
            std::cerr << "scan: " << ordinal << " read, " << summary.examined << " examined, " << summary.nonreal
                      << " nonreal\n";
        }
    }
    summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

ScanSummary verify_brenti(int max_n, ScanConfig source)
{
    source.filters = {ChiFilter{ChiFilter::Relation::at_least, 3}};
    source.max_order = max_n;
    return scan(source);
}

namespace {

void audit_methods(const Graph& g, bool with_bruteforce, CrosscheckReport& report)
{
    std::vector<SigmaMethod> methods{SigmaMethod::cliquecover, SigmaMethod::recursive, SigmaMethod::chromatic};
    if (with_bruteforce) methods.insert(methods.begin(), SigmaMethod::bruteforce);
    const bool matching = is_triangle_free(complement(g));
    if (matching) {
        methods.push_back(SigmaMethod::matching);
        ++report.matching_checks;
    }
    std::vector<SigmaPolynomial> results;
    for (SigmaMethod m : methods) results.push_back(compute_sigma(g, m));
    const bool agree = std::all_of(results.begin(), results.end(), [&](const auto& s) { return s == results[0]; });
    if (agree) return;
    MethodMismatch mm;
    mm.graph6 = to_graph6(g);
    for (std::size_t i = 0; i < methods.size(); ++i) {
        mm.coeffs[std::string(method_name(methods[i]))] = to_decimal_strings(results[i].poly());
    }
    report.mismatches.push_back(std::move(mm));
}

Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution edge(p);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (edge(rng)) b.add_edge(u, v);
        }
    }
    return b.build();
}

} // namespace

CrosscheckReport crosscheck(const CrosscheckConfig& config)
{
    if (config.max_n > max_canonical_order || config.max_n < 8) {
        throw std::invalid_argument("crosscheck: max_n must be in [8, 11]");
    }
    if (config.exhaustive_up_to > 7) throw std::invalid_argument("crosscheck: exhaustive phase capped at order 7");
    CrosscheckReport report;

    for (int n = 0; n <= config.exhaustive_up_to; ++n) {
        const std::uint64_t total = std::uint64_t{1} << edge_slots(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            audit_methods(graph_from_slots(n, mask), true, report);
            ++report.exhaustive_graphs;
        }
        if (config.progress) std::cerr << "crosscheck: exhaustive order " << n << " done\n";
    }

    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> order(8, config.max_n);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    for (unsigned s = 0; s < config.samples; ++s) {
        const int n = order(rng);
        audit_methods(random_graph(rng, n, density(rng)), n <= bruteforce_max_order, report);
        ++report.random_graphs;
        if (config.progress && (s + 1) % 1000 == 0) std::cerr << "crosscheck: " << s + 1 << " random graphs\n";
    }

    // sigma(G v H) = sigma(G) sigma(H).
    std::uniform_int_distribution<int> part(0, 8);
    for (unsigned s = 0; s < config.join_pairs; ++s) {
        const Graph g = random_graph(rng, part(rng), density(rng));
        const Graph h = random_graph(rng, part(rng), density(rng));
        const IntPolynomial product = sigma_cliquecover(g).poly() * sigma_cliquecover(h).poly();
        ++report.join_checks;
        if (sigma_cliquecover(join(g, h)).poly() != product) ++report.join_violations;
    }
    return report;
}

namespace {

struct Range {
    int lo = 0;
    int hi = 0;
};

Range range_of(const nlohmann::json& ranges, const char* key, Range fallback)
{
    if (!ranges.contains(key)) return fallback;
    const auto& r = ranges.at(key);
    Range out;
    if (r.is_number_integer()) {
        out.lo = out.hi = r.get<int>();
    } else if (r.is_array() && r.size() == 2 && r[0].is_number_integer() && r[1].is_number_integer()) {
        out = {r[0].get<int>(), r[1].get<int>()};
    } else {
        throw std::invalid_argument(std::string("family: range '") + key + "' must be an integer or [lo, hi]");
    }
    if (out.lo > out.hi || out.lo < 0) throw std::invalid_argument(std::string("family: bad range '") + key + "'");
    return out;
}

FamilyRecord graph_record(std::string label, const Graph& g)
{
    FamilyRecord rec;
    rec.label = std::move(label);
    SigmaReport r = make_report(g, AgreementLevel::none);
    rec.sigma = r.sigma.poly();
    rec.real_rooted = r.real_rooted;
    rec.log_concave = r.log_concave;
    rec.chi_is_n_minus_3 = r.chi == r.n - 3;
    rec.chi_consistent = r.chi == r.sigma.support_lo();
    rec.report = std::move(r);
    return rec;
}

FamilyRecord closed_form_record(std::string label, const IntPolynomial& p)
{
    FamilyRecord rec;
    rec.label = std::move(label);
    rec.sigma = p;
    rec.real_rooted = is_real_rooted(p).verdict;
    rec.log_concave = is_log_concave(p.coeffs()).holds;
    return rec;
}

} // namespace

FamilySummary family_sweep(const nlohmann::json& spec, unsigned jobs)
{
    if (!spec.is_object() || !spec.contains("family") || !spec["family"].is_string()) {
        throw std::invalid_argument("family: spec needs a \"family\" string");
    }
    const std::string family = spec["family"].get<std::string>();
    const nlohmann::json ranges = spec.contains("ranges") ? spec["ranges"]
                                  : spec.contains("params") ? spec["params"]
                                                            : nlohmann::json::object();
    if (!ranges.is_object()) throw std::invalid_argument("family: ranges must be an object");

    std::vector<std::function<FamilyRecord()>> tasks;
    if (family == "pointcover") {
        const Range m1 = range_of(ranges, "m1", {0, 0});
        const Range m2 = range_of(ranges, "m2", {0, 0});
        const Range m3 = range_of(ranges, "m3", {0, 0});
        const Range r = range_of(ranges, "r", {0, 0});
        const Range j = range_of(ranges, "j", {1, 1});
        const Range k = range_of(ranges, "k", {1, 1});
        const Range t = range_of(ranges, "t", {0, 0});
        for (int a = m1.lo; a <= m1.hi; ++a)
        for (int b = m2.lo; b <= m2.hi; ++b)
        for (int c = m3.lo; c <= m3.hi; ++c)
        for (int d = r.lo; d <= r.hi; ++d)
        for (int e = j.lo; e <= j.hi; ++e)
        for (int f = k.lo; f <= k.hi; ++f)
        for (int s = t.lo; s <= t.hi; ++s) {
            const PointCoverParams p{a, b, c, d, e, f};
            tasks.emplace_back([p, s] {
                const std::string label = "pointcover m1=" + std::to_string(p.m1) + " m2=" + std::to_string(p.m2)
                                          + " m3=" + std::to_string(p.m3) + " r=" + std::to_string(p.r)
                                          + " j=" + std::to_string(p.j) + " k=" + std::to_string(p.k)
                                          + " t=" + std::to_string(s);
                const Graph g = join_with_clique(complement(pointcover_complement(p)), s);
                FamilyRecord rec = graph_record(label, g);
                if (p.j >= 1 && p.k >= 1) {
                    const IntPolynomial formula =
                        shift_by_power(sigma_pointcover_formula(p).poly(), static_cast<std::size_t>(s));
                    rec.formula_matches = formula == rec.sigma;
                }
                return rec;
            });
        }
    } else if (family == "f45") {
        const Range variant = range_of(ranges, "variant", {4, 5});
        const Range m = range_of(ranges, "m", {0, 10});
        for (int v = variant.lo; v <= variant.hi; ++v) {
            for (int mm = m.lo; mm <= m.hi; ++mm) {
                tasks.emplace_back([v, mm] {
                    const std::string label = "f45 variant=" + std::to_string(v) + " m=" + std::to_string(mm);
                    FamilyRecord rec = graph_record(label, f45_construction(v, mm));
                    // The C5 v K_m core factors as x^m sigma(C5).
                    const Graph core = join(Graph::cycle(5), Graph::complete(mm));
                    rec.formula_matches = sigma_cliquecover(core).poly()
                                          == shift_by_power(sigma_cliquecover(Graph::cycle(5)).poly(),
                                                            static_cast<std::size_t>(mm));
                    return rec;
                });
            }
        }
    } else if (family == "fclosed") {
        const Range variant = range_of(ranges, "variant", {2, 3});
        const Range m = range_of(ranges, "m", {0, 100});
        for (int v = variant.lo; v <= variant.hi; ++v) {
            for (int mm = m.lo; mm <= m.hi; ++mm) {
                tasks.emplace_back([v, mm] {
                    return closed_form_record("fclosed variant=" + std::to_string(v) + " m=" + std::to_string(mm),
                                              f_family_sigma(v, mm));
                });
            }
        }
    } else {
        throw std::invalid_argument("family: unknown family '" + family + "'");
    }

    FamilySummary summary;
    summary.records.resize(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t i) { summary.records[i] = tasks[i](); });
    for (const auto& rec : summary.records) {
        if (!rec.real_rooted) ++summary.nonreal;
        if (!rec.formula_matches) ++summary.formula_mismatches;
        if (rec.real_rooted && !rec.log_concave) ++summary.log_concavity_violations;
        if (rec.chi_is_n_minus_3) ++summary.chi_n_minus_3;
        if (!rec.chi_consistent) ++summary.chi_inconsistencies;
    }
    return summary;
}

nlohmann::json summary_json(const ScanSummary& s)
{
    auto by_deficit = [](const std::map<int, std::uint64_t>& m) {
        nlohmann::json j = nlohmann::json::object();
        for (auto [d, c] : m) j[std::to_string(d)] = c;
        return j;
    };
    return {{"total", s.total},
            {"examined", s.examined},
            {"per_filter", s.per_filter},
            {"examined_by_n_minus_chi", by_deficit(s.examined_by_deficit)},
            {"nonreal_by_n_minus_chi", by_deficit(s.nonreal_by_deficit)},
            {"nonreal", s.nonreal},
            {"nonreal_graphs", s.nonreal_graphs},
            {"log_concavity_violations", s.log_concavity_violations},
            {"log_concavity_violators", s.log_concavity_violators},
            {"newton_violations", s.newton_violations},
            {"agreement_checks", s.agreement_checks},
            {"disagreements", s.disagreements},
            {"disagreement_graphs", s.disagreement_graphs},
            {"malformed", s.malformed},
            {"wall_seconds", s.wall_seconds}};
}

nlohmann::json crosscheck_json(const CrosscheckReport& r)
{
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& m : r.mismatches) mismatches.push_back({{"graph6", m.graph6}, {"sigma_coeffs", m.coeffs}});
    return {{"exhaustive_graphs", r.exhaustive_graphs},
            {"random_graphs", r.random_graphs},
            {"matching_checks", r.matching_checks},
            {"join_checks", r.join_checks},
            {"join_violations", r.join_violations},
            {"mismatches", mismatches}};
}

nlohmann::json family_record_json(const FamilyRecord& r)
{
    nlohmann::json j = r.report ? report_json(*r.report) : nlohmann::json::object();
    j["label"] = r.label;
    j["sigma_coeffs"] = coeffs_json(r.sigma);
    j["real_rooted"] = r.real_rooted;
    j["log_concave"] = r.log_concave;
    j["formula_matches"] = r.formula_matches;
    if (r.report) {
        j["chi_is_n_minus_3"] = r.chi_is_n_minus_3;
        j["chi_consistent"] = r.chi_consistent;
    }
    return j;
}

nlohmann::json family_summary_json(const FamilySummary& s)
{
    return {{"records", s.records.size()},
            {"nonreal", s.nonreal},
            {"formula_mismatches", s.formula_mismatches},
            {"log_concavity_violations", s.log_concavity_violations},
            {"chi_n_minus_3", s.chi_n_minus_3},
            {"chi_inconsistencies", s.chi_inconsistencies}};
}

} // namespace sigma
