#include "sigma/report.hpp"

#include <stdexcept>

namespace sigma {

bool methods_agree(const Graph& g, const SigmaPolynomial& reference)
{
    std::vector<SigmaMethod> methods{SigmaMethod::cliquecover, SigmaMethod::recursive};
    if (g.order() <= bruteforce_max_order) {
        methods.push_back(SigmaMethod::bruteforce);
        methods.push_back(SigmaMethod::chromatic);
    }
    if (is_triangle_free(complement(g))) methods.push_back(SigmaMethod::matching);
    for (SigmaMethod m : methods) {
        if (!(compute_sigma(g, m) == reference)) return false;
    }
    return true;
}

SigmaReport make_report(const Graph& g, AgreementLevel level)
{
    SigmaReport r;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.edges = g.edge_count();
    r.chi = chromatic_number(g);
    r.sigma = sigma_cliquecover(g);
    if (level == AgreementLevel::all) r.methods_agree = methods_agree(g, r.sigma);
    r.certificate = is_real_rooted(r.sigma.poly());
    r.real_rooted = r.certificate.verdict;
    r.log_concave = is_log_concave(r.sigma.coeffs()).holds;
    return r;
}

nlohmann::json coeffs_json(const IntPolynomial& p)
{
    return nlohmann::json(to_decimal_strings(p));
}

IntPolynomial coeffs_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw std::invalid_argument("coefficients must be a JSON array");
    std::vector<std::string> digits;
    for (const auto& item : j) {
        if (item.is_string()) {
            digits.push_back(item.get<std::string>());
        } else if (item.is_number_integer()) {
            digits.push_back(std::to_string(item.get<long long>()));
        } else {
            throw std::invalid_argument("coefficient entries must be decimal strings or integers");
        }
    }
    return from_decimal_strings(digits);
}

nlohmann::json certificate_json(const RealRootCertificate& cert)
{
    nlohmann::json j;
    j["verdict"] = cert.verdict;
    j["degrees"] = cert.degrees;
    j["leading_signs"] = cert.leading_signs;
    if (cert.witness) {
        j["witness"] = {{"index", cert.witness->index},
                        {"kind", cert.witness->kind == WitnessKind::degree_gap ? "degree_gap" : "negative_leading"}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::json report_json(const SigmaReport& r)
{
    return {{"graph6", r.graph6},
            {"n", r.n},
            {"edges", r.edges},
            {"chi", r.chi},
            {"sigma_coeffs", coeffs_json(r.sigma.poly())},
            {"methods_agree", r.methods_agree},
            {"real_rooted", r.real_rooted},
            {"log_concave", r.log_concave}};
}

} // namespace sigma
