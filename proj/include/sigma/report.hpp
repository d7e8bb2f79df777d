#ifndef SIGMA_REPORT_HPP
#define SIGMA_REPORT_HPP

#include "sigma/graph.hpp"
#include "sigma/realroots.hpp"
#include "sigma/sigma_engine.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace sigma {

struct SigmaReport {
    std::string graph6;
    int n = 0;
    int edges = 0;
    int chi = 0;
    SigmaPolynomial sigma;
    bool methods_agree = true;
    bool real_rooted = true;
    bool log_concave = true;
    RealRootCertificate certificate;
};

enum class AgreementLevel {
    none,       // default method only
    all,        // every method applicable at this order
};

/// sigma by the clique-cover method, chi, the Sturm certificate and the
/// log-concavity test. With AgreementLevel::all the other methods run too
/// (brute force and chromatic only up to their order caps, matching only for
/// triangle-free complements).
SigmaReport make_report(const Graph& g, AgreementLevel level = AgreementLevel::all);

/// Whether every applicable method reproduces `reference`.
bool methods_agree(const Graph& g, const SigmaPolynomial& reference);

nlohmann::json certificate_json(const RealRootCertificate& cert);
nlohmann::json report_json(const SigmaReport& report);
nlohmann::json coeffs_json(const IntPolynomial& p);

/// Reads a JSON array of decimal strings (or integers) as coefficients.
IntPolynomial coeffs_from_json(const nlohmann::json& j);

} // namespace sigma

#endif // SIGMA_REPORT_HPP
