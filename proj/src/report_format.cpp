#include "hypsum/report_format.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hypsum {

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "markdown") return OutputFormat::Markdown;
    if (name == "latex") return OutputFormat::Latex;
    return std::nullopt;
}

std::string format_value(const Value& v) {
    if (const auto* q = std::get_if<BigRational>(&v)) {
        return q->to_string();
    }
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << std::get<double>(v);
    std::string text = os.str();
    // Keep doubles distinguishable from integers.
    if (text.find_first_of(".eEin") == std::string::npos) {
        text += ".0";
    }
    return text;
}

Value parse_value(std::string_view text) {
    const bool floating = text.find_first_of(".eEin") != std::string_view::npos;
    if (!floating) {
        return BigRational::parse(text);
    }
    if (text == "inf" || text == "-inf" || text == "nan" || text == "-nan") {
        return std::stod(std::string(text));
    }
    std::istringstream is{std::string(text)};
    is.imbue(std::locale::classic());
    double d = 0.0;
    if (!(is >> d) || !is.eof()) {
        throw std::invalid_argument("malformed value '" + std::string(text) + "'");
    }
    return d;
}

namespace {

std::string opt_int(const std::optional<long>& v) { return v ? std::to_string(*v) : ""; }

std::string opt_alpha(const std::optional<BigRational>& v) { return v ? v->to_string() : ""; }

std::string emit_csv(const std::vector<VerificationReport>& reports) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : reports) {
        out += std::string(r.identity.name()) + ',' + opt_int(r.point.nu) + ',' +
               opt_int(r.point.i) + ',' + opt_alpha(r.point.alpha) + ',' + r.mode.to_string() +
               ',' + format_value(r.lhs) + ',' + format_value(r.rhs) + ',' +
               (r.matched ? "true" : "false") + '\n';
    }
    return out;
}

std::string emit_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json row;
        row["identity"] = std::string(r.identity.name());
        row["nu"] = r.point.nu ? nlohmann::ordered_json(*r.point.nu) : nullptr;
        row["i"] = r.point.i ? nlohmann::ordered_json(*r.point.i) : nullptr;
        row["alpha"] = r.point.alpha ? nlohmann::ordered_json(r.point.alpha->to_string()) : nullptr;
        row["mode"] = r.mode.to_string();
        row["lhs"] = format_value(r.lhs);
        row["rhs"] = format_value(r.rhs);
        row["matched"] = r.matched;
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + '\n';
}

std::string emit_markdown(const std::vector<VerificationReport>& reports) {
    std::string out =
        "| identity | nu | i | alpha | mode | lhs | rhs | matched |\n"
        "|---|---:|---:|---:|---|---:|---:|:---:|\n";
    for (const auto& r : reports) {
        out += "| " + std::string(r.identity.name()) + " | " + opt_int(r.point.nu) + " | " +
               opt_int(r.point.i) + " | " + opt_alpha(r.point.alpha) + " | " +
               r.mode.to_string() + " | " + format_value(r.lhs) + " | " + format_value(r.rhs) +
               " | " + (r.matched ? "yes" : "**no**") + " |\n";
    }
    return out;
}

std::string latex_rational(const BigRational& q) {
    if (q.is_integer()) {
        return q.to_string();
    }
    const BigInt num = q.numerator();
    const std::string sign = sgn(num) < 0 ? "-" : "";
    return sign + "\\frac{" + BigInt(abs(num)).get_str() + "}{" + q.denominator().get_str() + "}";
}

std::string latex_value(const Value& v) {
    if (const auto* q = std::get_if<BigRational>(&v)) {
        return "$" + latex_rational(*q) + "$";
    }
    return "$" + format_value(v) + "$";
}

std::string emit_latex(const std::vector<VerificationReport>& reports) {
    std::string out =
        "\\begin{tabular}{lrrrlrrc}\n"
        "\\hline\n"
        "identity & $\\nu$ & $i$ & $\\alpha$ & mode & LHS & RHS & matched \\\\\n"
        "\\hline\n";
    for (const auto& r : reports) {
        out += "\\texttt{" + std::string(r.identity.name()) + "} & " + opt_int(r.point.nu) +
               " & " + opt_int(r.point.i) + " & " +
               (r.point.alpha ? "$" + latex_rational(*r.point.alpha) + "$" : std::string()) +
               " & " + r.mode.to_string() + " & " + latex_value(r.lhs) + " & " +
               latex_value(r.rhs) + " & " + (r.matched ? "yes" : "no") + " \\\\\n";
    }
    out += "\\hline\n\\end{tabular}\n";
    return out;
}

}  // namespace

std::string emit_table(const std::vector<VerificationReport>& reports, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return emit_csv(reports);
        case OutputFormat::Json: return emit_json(reports);
        case OutputFormat::Markdown: return emit_markdown(reports);
        case OutputFormat::Latex: return emit_latex(reports);
    }
    return {};
}

}  // namespace hypsum
