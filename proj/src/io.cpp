#include "circlemap/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace circlemap {

namespace {

using nlohmann::json;

BlaschkeProduct product_from_json(const json& j)
{
    double sigma_angle = 0.0;
    if (j.contains("sigma_angle"))
        sigma_angle = j.at("sigma_angle").get<double>();
    std::vector<cplx> zeros;
    if (j.contains("zeros")) {
        for (const auto& pair : j.at("zeros")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("zero entries must be [re, im] pairs");
            zeros.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
    }
    return BlaschkeProduct(sigma_angle, std::move(zeros));
}

json product_to_json(const BlaschkeProduct& b)
{
    json zeros = json::array();
    for (const cplx& z : b.zeros())
        zeros.push_back({z.real(), z.imag()});
    return {{"sigma_angle", b.sigma_angle()}, {"zeros", std::move(zeros)}};
}

} // namespace

std::string format_double(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

RationalCircleMap parse_map_json(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("map description is not valid JSON: ") + e.what());
    }
    try {
        RationalCircleMap f;
        if (!doc.contains("numerator"))
            throw ParseError("map description lacks a numerator");
        f.numerator = product_from_json(doc.at("numerator"));
        if (doc.contains("denominator"))
            f.denominator = product_from_json(doc.at("denominator"));
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed map description: ") + e.what());
    }
}

std::string map_to_json(const RationalCircleMap& f)
{
    json doc = {{"numerator", product_to_json(f.numerator)},
                {"denominator", product_to_json(f.denominator)}};
    return doc.dump(2) + "\n";
}

std::string report_to_json(const CriterionReport& r)
{
    // Non-finite margins (degree-mismatch sentinel) are quoted to keep the
    // document valid JSON.
    const std::string margin = std::isfinite(r.margin_lower_bound)
                                   ? format_double(r.margin_lower_bound)
                                   : '"' + format_double(r.margin_lower_bound) + '"';
    std::ostringstream out;
    out << "{\n";
    out << "  \"verdict\": \"" << to_string(r.verdict) << "\",\n";
    out << "  \"margin_lower_bound\": " << margin << ",\n";
    out << "  \"witness_angle\": " << format_double(r.witness_angle) << ",\n";
    out << "  \"grid_size\": " << r.grid_size << ",\n";
    out << "  \"lipschitz_bound\": " << format_double(r.lipschitz_bound) << "\n";
    out << "}\n";
    return out.str();
}

std::string report_to_delimited(const CriterionReport& r)
{
    std::ostringstream out;
    out << "verdict\tmargin_lower_bound\twitness_angle\tgrid_size\tlipschitz_bound\n";
    out << to_string(r.verdict) << '\t' << format_double(r.margin_lower_bound) << '\t'
        << format_double(r.witness_angle) << '\t' << r.grid_size << '\t'
        << format_double(r.lipschitz_bound) << '\n';
    return out.str();
}

std::string spectrum_to_delimited(const FourierSpectrum& sp)
{
    std::ostringstream out;
    out << "n\tre\tim\tabs\n";
    for (int n = -sp.window(); n <= sp.window(); ++n) {
        const cplx c = sp.at(n);
        out << n << '\t' << format_double(c.real()) << '\t' << format_double(c.imag())
            << '\t' << format_double(std::abs(c)) << '\n';
    }
    return out.str();
}

std::string curve_to_delimited(const SampledCircleMap& s)
{
    std::ostringstream out;
    out << "theta\tre\tim\n";
    for (int k = 0; k < s.size(); ++k) {
        const cplx v = s.values()[k];
        out << format_double(s.angle(k)) << '\t' << format_double(v.real()) << '\t'
            << format_double(v.imag()) << '\n';
    }
    return out.str();
}

std::string curve_to_delimited(const SampledCircleMap& s, const StarlikeProfile& p)
{
    std::ostringstream out;
    out << "theta\tre\tim\tradial\tangle\n";
    for (int k = 0; k < s.size(); ++k) {
        const double theta = s.angle(k);
        const cplx v = s.values()[k];
        out << format_double(theta) << '\t' << format_double(v.real()) << '\t'
            << format_double(v.imag()) << '\t' << format_double(p.radial(theta)) << '\t'
            << format_double(p.angle(theta)) << '\n';
    }
    return out.str();
}

SampledCircleMap parse_curve_delimited(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<cplx> values;
    bool header_skipped = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream row(line);
        if (!header_skipped) {
            header_skipped = true;
            // Allow tables without a header if the first token parses.
            double probe;
            std::istringstream probe_row(line);
            if (!(probe_row >> probe))
                continue;
        }
        double theta, re, im;
        if (!(row >> theta >> re >> im))
            throw ParseError("curve row needs at least theta, re, im columns");
        values.emplace_back(re, im);
    }
    if (values.empty())
        throw ParseError("curve table has no data rows");
    try {
        return SampledCircleMap(std::move(values));
    } catch (const DomainError& e) {
        throw ParseError(std::string("curve table is not a valid sample grid: ") + e.what());
    }
}

} // namespace circlemap
