#ifndef SIGMA_HARNESS_HPP
#define SIGMA_HARNESS_HPP

#include "sigma/graph.hpp"
#include "sigma/report.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigma {

inline constexpr int enumeration_max_order = 7;

/// Runs fn(i) for i in [0, count) on `jobs` threads. Each index is claimed
/// by exactly one worker; callers store results by index. The first exception
/// thrown by fn is rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

struct SmallClass {
    Graph representative; // canonically relabelled
    std::uint64_t labeled_count = 0;
    std::uint64_t automorphisms = 0;
};

/// Every labelled graph on n vertices, grouped by canonical form. Classes are
/// ordered by edge count, then canonical code.
std::vector<SmallClass> enumerate_classes(int n);
std::vector<Graph> enumerate_small(int n);

/// chi(G) compared with n - offset.
struct ChiFilter {
    enum class Relation { at_least, equal, at_most };
    Relation relation = Relation::equal;
    int offset = 0;

    bool accepts(int n, int chi) const;
    std::string label() const;
    /// Accepts "n-3", "=n-3", ">=n-2", "<=n-4", "n".
    static ChiFilter parse(std::string_view text);
};

struct ScanConfig {
    /// Internal enumeration of orders 1..enumerate_up_to (0 for none).
    int enumerate_up_to = 0;
    std::vector<std::filesystem::path> graph6_files;
    /// In-memory graphs, scanned after the files.
    std::vector<Graph> graphs;

    std::vector<ChiFilter> filters;
    std::optional<int> max_order;

    bool check_real_rooted = true;
    bool check_log_concave = true;
    /// Every rate-th input graph gets a full method-agreement check; 0 = off.
    unsigned agreement_rate = 64;

    unsigned jobs = 1;
    bool strict = false;
    bool progress = false;
    std::optional<std::filesystem::path> quarantine_dir;
};

struct ScanSummary {
    std::uint64_t total = 0;
    std::uint64_t examined = 0;
    std::map<std::string, std::uint64_t> per_filter;
    /// Examined graphs keyed by n - chi.
    std::map<int, std::uint64_t> examined_by_deficit;
    std::map<int, std::uint64_t> nonreal_by_deficit;

    std::uint64_t nonreal = 0;
    std::vector<std::string> nonreal_graphs;
    std::uint64_t log_concavity_violations = 0;
    std::vector<std::string> log_concavity_violators;
    /// Real-rooted sigma that failed log-concavity.
    std::uint64_t newton_violations = 0;
    std::uint64_t agreement_checks = 0;
    std::uint64_t disagreements = 0;
    std::vector<std::string> disagreement_graphs;
    std::vector<std::string> malformed;
    double wall_seconds = 0;

    /// Log-concavity failures only count against nonreal-free sigma.
    bool clean() const { return nonreal == 0 && newton_violations == 0 && disagreements == 0 && malformed.empty(); }
};

/// Thrown by strict scans on the first malformed input line.
class ScanAborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ScanSummary scan(const ScanConfig& config);

/// Scan restricted to chi >= n - 3 and order <= max_n.
ScanSummary verify_brenti(int max_n, ScanConfig source);

struct MethodMismatch {
    std::string graph6;
    std::map<std::string, std::vector<std::string>> coeffs; // method -> sigma
};

struct CrosscheckConfig {
    int max_n = 11;
    unsigned samples = 10'000;
    unsigned join_pairs = 1'000;
    std::uint64_t seed = 20'240'101;
    int exhaustive_up_to = 6;
    bool progress = false;
};

struct CrosscheckReport {
    std::uint64_t exhaustive_graphs = 0;
    std::uint64_t random_graphs = 0;
    std::uint64_t matching_checks = 0;
    std::uint64_t join_checks = 0;
    std::uint64_t join_violations = 0;
    std::vector<MethodMismatch> mismatches;

    bool clean() const { return mismatches.empty() && join_violations == 0; }
};

CrosscheckReport crosscheck(const CrosscheckConfig& config);

/// Family grid specification, e.g.
///   {"family": "pointcover", "ranges": {"m1": [0,4], ..., "j": [1,4], "t": [0,3]}}
///   {"family": "f45", "ranges": {"variant": [4,5], "m": [0,10]}}
///   {"family": "fclosed", "ranges": {"variant": [2,3], "m": [0,100]}}
struct FamilyRecord {
    std::string label;
    std::optional<SigmaReport> report; // graph families
    IntPolynomial sigma;               // closed forms and graphs alike
    bool real_rooted = true;
    bool log_concave = true;
    /// Closed form equals the sigma computed from the graph (pointcover, f45).
    bool formula_matches = true;
    bool chi_is_n_minus_3 = false;
    /// chromatic_number agrees with the lowest nonzero sigma degree.
    bool chi_consistent = true;
};

struct FamilySummary {
    std::vector<FamilyRecord> records;
    std::uint64_t nonreal = 0;
    std::uint64_t formula_mismatches = 0;
    /// Real-rooted records that failed log-concavity.
    std::uint64_t log_concavity_violations = 0;
    std::uint64_t chi_n_minus_3 = 0;
    std::uint64_t chi_inconsistencies = 0;

    bool clean() const
    {
        return nonreal == 0 && formula_mismatches == 0 && log_concavity_violations == 0 && chi_inconsistencies == 0;
    }
};

FamilySummary family_sweep(const nlohmann::json& spec, unsigned jobs = 1);

nlohmann::json summary_json(const ScanSummary& s);
nlohmann::json crosscheck_json(const CrosscheckReport& r);
nlohmann::json family_record_json(const FamilyRecord& r);
nlohmann::json family_summary_json(const FamilySummary& s);

} // namespace sigma

#endif // SIGMA_HARNESS_HPP
