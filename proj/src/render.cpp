#include "k3ci/render.hpp"

#include <sstream>

namespace k3ci {

using nlohmann::json;

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "tex") return OutputFormat::Tex;
    throw std::invalid_argument("unknown format '" + s + "' (expected text|json|tex)");
}

namespace {

long long to_ll(const Integer& v) { return v.convert_to<long long>(); }

json matrix_to_json(const std::vector<std::vector<Integer>>& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_ll(v));
        out.push_back(r);
    }
    return out;
}

json check_to_json(const CheckResult& c) {
    return json{{"pass", c.pass}, {"reasons", c.reasons}};
}

json certificate_to_json(const Certificate& cert) {
    json mp = check_to_json(cert.mp_surjective);
    mp["factorizations"] = cert.mp_factorizations;
    return json{{"k3_condition", check_to_json(cert.k3_condition)},
                {"global_generation", check_to_json(cert.global_generation)},
                {"mp_surjective", mp},
                {"assumptions", cert.assumptions},
                {"pass", cert.pass()}};
}

std::string matrix_to_text(const std::vector<std::vector<Integer>>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace

json chow_class_to_json(const ChowClass& x) {
    json out = json::array();
    for (const auto& [e, c] : x.terms()) {
        out.push_back(json{{"exps", e},
                           {"numerator", boost::multiprecision::numerator(c).str()},
                           {"denominator", boost::multiprecision::denominator(c).str()}});
    }
    return out;
}

json family_to_json(const FamilySpec& family) {
    json bundle = json::array();
    for (const auto& s : family.bundle.summands) bundle.push_back(s.degs);
    return json{{"ambient", family.ambient.dims()},
                {"bundle", bundle},
                {"polarization", family.polarization.degs},
                {"case", case_label_name(family.label)},
                {"description", family.description}};
}

json report_to_json(const VerificationReport& report) {
    json h0n;
    h0n["total"] = to_ll(report.h0_normal.total);
    h0n["summands"] = json::array();
    for (const auto& [twist, chi] : report.h0_normal.summands) {
        h0n["summands"].push_back(json{{"twist", twist.degs},
                                       {"chi", to_ll(chi.chi)},
                                       {"reported_as_h0", chi.reported_as_h0},
                                       {"vanishing_assumed", chi.vanishing_assumed}});
    }
    json discrepancies = json::array();
    for (const auto& d : report.discrepancies) {
        discrepancies.push_back(json{{"paper_value", to_ll(d.paper_value)},
                                     {"computed_value", to_ll(d.computed_value)},
                                     {"location", d.location}});
    }
    json out = family_to_json(report.family);
    out["genus"] = to_ll(report.genus);
    out["degree"] = to_ll(report.degree);
    out["pairing"] = matrix_to_json(report.pairing.matrix);
    out["picard_lattice"] = matrix_to_json(report.picard_lattice);
    out["h0_normal"] = h0n;
    out["h0_tangent"] = to_ll(report.h0_tangent);
    out["moduli_dim"] = to_ll(report.moduli_dim);
    out["certificate"] = certificate_to_json(report.certificate);
    out["discrepancies"] = discrepancies;
    return out;
}

json reports_to_json(const std::vector<VerificationReport>& reports) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(report_to_json(r));
    return out;
}

std::string family_to_text(const FamilySpec& family) {
    std::ostringstream os;
    os << "case " << case_label_name(family.label) << ": P^" << family.ambient.dims()[0];
    for (std::size_t i = 1; i < family.ambient.dims().size(); ++i)
        os << " x P^" << family.ambient.dims()[i];
    os << ", E = O(" << family.bundle.summands[0].to_string() << ")";
    for (std::size_t i = 1; i < family.bundle.summands.size(); ++i)
        os << " + O(" << family.bundle.summands[i].to_string() << ")";
    os << ", L = O(" << family.polarization.to_string() << ")|_S";
    if (!family.description.empty()) os << "  [" << family.description << "]";
    return os.str();
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << family_to_text(report.family) << "\n";
    os << "  genus " << report.genus << ", degree " << report.degree << "\n";
    os << "  picard lattice " << matrix_to_text(report.picard_lattice) << "\n";
    os << "  h^0(N_{S/P}) = " << report.h0_normal.total << " (";
    for (std::size_t i = 0; i < report.h0_normal.summands.size(); ++i)
        os << (i ? " + " : "") << report.h0_normal.summands[i].second.chi;
    os << "), h^0(T_P|S) = " << report.h0_tangent << "\n";
    os << "  moduli dimension " << report.moduli_dim << "\n";
    os << "  certificate: " << (report.certificate.pass() ? "pass" : "FAIL");
    if (!report.certificate.pass()) {
        for (const auto* check :
             {&report.certificate.k3_condition, &report.certificate.global_generation,
              &report.certificate.mp_surjective})
            for (const auto& r : check->reasons) os << "\n    " << r;
    }
    os << "\n";
    for (const auto& d : report.discrepancies)
        os << "  DISCREPANCY at " << d.location << ": printed " << d.paper_value
           << ", computed " << d.computed_value << "\n";
    return os.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) os << report_to_text(r);
    os << "moduli dimension:";
    for (std::size_t i = 0; i < reports.size(); ++i)
        os << (i ? ", " : " ") << reports[i].moduli_dim;
    os << "\n";
    return os.str();
}

std::string reports_to_tex(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "\\begin{tabular}{llllllll}\n";
    os << "case & $n$ & $E$ & $2g-2$ & lattice & $h^0(N)$ & $h^0(T)$ & moduli \\\\\n\\hline\n";
    for (const auto& r : reports) {
        os << case_label_name(r.family.label) << " & " << r.family.ambient.dims()[1] << " & $";
        for (std::size_t i = 0; i < r.family.bundle.summands.size(); ++i)
            os << (i ? "\\oplus " : "") << "\\mathcal{O}(" << r.family.bundle.summands[i].to_string()
               << ")";
        os << "$ & " << r.degree << " & $\\begin{pmatrix}" << r.picard_lattice[0][0] << " & "
           << r.picard_lattice[0][1] << "\\\\ " << r.picard_lattice[1][0] << " & "
           << r.picard_lattice[1][1] << "\\end{pmatrix}$ & " << r.h0_normal.total << " & "
           << r.h0_tangent << " & " << r.moduli_dim << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace k3ci
