#include "render.hpp"

#include <coxl2/error.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace coxl2::tool {

Format parse_format(const std::string& name)
{
    if (name == "human") return Format::human;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw InvalidArgument("unknown format '" + name + "' (human, json, csv)");
}

namespace {

std::string width_of_rounding(const Rational& r, int precision)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));
    Rational scaled = r * scale;
    if (scaled.get_den() == 1) return "0";
    return "1e-" + std::to_string(precision);
}

bool is_number(const Json& j) { return j.is_object() && j.contains("exact"); }
bool is_algebraic(const Json& j) { return j.is_object() && j.contains("polynomial") && j.contains("lo"); }
bool is_text(const Json& j) { return j.is_object() && j.contains("text"); }
bool is_table(const Json& j) { return j.is_object() && j.contains("columns") && j.contains("rows"); }

std::string scalar(const Json& j)
{
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
    if (j.is_null()) return "-";
    if (is_number(j)) {
        if (j["width"] == "0") return j["exact"].get<std::string>();
        return j["exact"].get<std::string>() + " ~ " + j["decimal"].get<std::string>();
    }
    if (is_algebraic(j)) return j["decimal"].get<std::string>() + " (root of " + j["polynomial"].get<std::string>() + ")";
    if (is_text(j)) return j["text"].get<std::string>();
    if (j.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar(j[i]);
        return s;
    }
    return j.dump();
}

std::string annotated(const Json& j)
{
    if (is_number(j) && j["width"] != "0")
        return j["exact"].get<std::string>() + "  (~" + j["decimal"].get<std::string>() + ", interval width " +
               j["width"].get<std::string>() + ")";
    if (is_algebraic(j))
        return j["decimal"].get<std::string>() + "  (root of " + j["polynomial"].get<std::string>() + " in [" +
               j["lo"].get<std::string>() + ", " + j["hi"].get<std::string>() + "], width " + j["width"].get<std::string>() +
               ")";
    return scalar(j);
}

bool is_leaf(const Json& j)
{
    if (!j.is_object() && !j.is_array()) return true;
    if (is_number(j) || is_algebraic(j) || is_text(j)) return true;
    if (j.is_array()) return std::all_of(j.begin(), j.end(), [](const Json& x) { return is_leaf(x) && !x.is_array(); });
    return false;
}

void human_table(const Json& t, const std::string& indent, std::ostream& out)
{
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header;
    for (const auto& c : t["columns"]) header.push_back(c.get<std::string>());
    cells.push_back(header);
    bool rounded = false;
    for (const auto& row : t["rows"]) {
        std::vector<std::string> r;
        for (const auto& c : row) {
            r.push_back(scalar(c));
            if ((is_number(c) && c["width"] != "0") || is_algebraic(c)) rounded = true;
        }
        cells.push_back(r);
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& r : cells)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    for (const auto& r : cells) {
        out << indent;
        for (std::size_t i = 0; i < r.size(); ++i) {
            out << r[i];
            if (i + 1 < r.size()) out << std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << '\n';
    }
    if (rounded && t.contains("precision"))
        out << indent << "(decimals are within 1e-" << t["precision"].get<int>() << " of the exact values)\n";
}

void human(const Json& j, const std::string& indent, std::ostream& out)
{
    for (const auto& [key, value] : j.items()) {
        if (key == "schema_version" || key == "precision") continue;
        if (is_table(value)) {
            out << indent << key << ":\n";
            human_table(value, indent + "  ", out);
        } else if (is_leaf(value)) {
            out << indent << key << ": " << annotated(value) << '\n';
        } else if (value.is_array()) {
            out << indent << key << ":\n";
            for (const auto& item : value) {
                if (is_leaf(item)) {
                    out << indent << "  - " << annotated(item) << '\n';
                } else {
                    out << indent << "  -\n";
                    human(item, indent + "    ", out);
                }
            }
        } else {
            out << indent << key << ":\n";
            human(value, indent + "  ", out);
        }
    }
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_exact(const Json& j)
{
    if (is_number(j)) return j["exact"].get<std::string>();
    if (is_algebraic(j)) return j["decimal"].get<std::string>();
    return scalar(j);
}

void csv_table(const Json& t, std::ostream& out)
{
    // numeric columns get a second, decimal column for plotting
    std::size_t ncols = t["columns"].size();
    std::vector<bool> numeric(ncols, false);
    for (const auto& row : t["rows"])
        for (std::size_t i = 0; i < ncols && i < row.size(); ++i)
            if (is_number(row[i])) numeric[i] = true;
    for (std::size_t i = 0; i < ncols; ++i) {
        std::string c = t["columns"][i].get<std::string>();
        out << (i ? "," : "") << csv_escape(c);
        if (numeric[i]) out << "," << csv_escape(c + "_decimal");
    }
    out << '\n';
    for (const auto& row : t["rows"]) {
        for (std::size_t i = 0; i < ncols; ++i) {
            const Json& c = i < row.size() ? row[i] : Json();
            out << (i ? "," : "") << csv_escape(csv_exact(c));
            if (numeric[i]) out << "," << (is_number(c) ? c["decimal"].get<std::string>() : "");
        }
        out << '\n';
    }
}

void csv_flat(const Json& j, const std::string& prefix, std::ostream& out)
{
    for (const auto& [key, value] : j.items()) {
        std::string path = prefix.empty() ? key : prefix + "." + key;
        if (is_number(value) || is_algebraic(value) || is_text(value) || !(value.is_object() || value.is_array())) {
            out << csv_escape(path) << "," << csv_escape(csv_exact(value)) << '\n';
        } else if (is_table(value)) {
            csv_flat(value["rows"], path, out);
        } else {
            csv_flat(value, path, out);
        }
    }
}

}  // namespace

Json encode(const Rational& r, int precision)
{
    return Json{{"exact", to_string(r)}, {"decimal", to_decimal(r, precision)}, {"width", width_of_rounding(r, precision)}};
}

Json encode(const AlgebraicNumber& x, int precision)
{
    if (x.is_rational()) return encode(x.lo(), precision);
    AlgebraicNumber y = x;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));
    y.refine(Rational(Integer(1), scale));
    return Json{{"polynomial", uni::to_string(y.polynomial())},
                {"lo", to_string(y.lo())},
                {"hi", to_string(y.hi())},
                {"decimal", y.decimal(precision)},
                {"width", to_string(y.width())}};
}

Json encode(const Polynomial& p, const std::vector<std::string>& names)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponents", e}, {"coefficient", to_string(c)}});
    return Json{{"text", p.to_string(names)}, {"terms", terms}};
}

Json encode(const RationalFunction& f, const std::vector<std::string>& names)
{
    // shown with a positive constant term in the denominator when it has one
    Polynomial num = f.numerator(), den = f.denominator();
    if (sgn(den.constant_term()) < 0) {
        num = -num;
        den = -den;
    }
    std::string text = den == Polynomial(den.nvars(), 1) ? num.to_string(names)
                                                          : "(" + num.to_string(names) + ")/(" + den.to_string(names) + ")";
    return Json{{"text", text}, {"numerator", encode(num, names)}, {"denominator", encode(den, names)}};
}

Json encode(const PiecewiseRational& f, int precision)
{
    Json pieces = Json::array();
    const auto& br = f.breakpoints();
    for (std::size_t i = 0; i < f.pieces().size(); ++i) {
        Json piece{{"from", i == 0 ? Json("0") : encode(br[i - 1], precision)},
                   {"to", i < br.size() ? encode(br[i], precision) : Json("inf")},
                   {"value", encode(f.pieces()[i], {"q"})}};
        pieces.push_back(piece);
    }
    return Json{{"text", f.to_string()}, {"pieces", pieces}};
}

Json encode(const RegionClass& rc, int precision)
{
    Json j{{"tag", to_string(rc.tag)}, {"q_in_closure_of_R", rc.closure_R}, {"q_inverse_in_closure_of_R", rc.closure_Rinv}};
    j["first_zero_along_q"] = rc.lambda_q ? encode(*rc.lambda_q, precision) : Json(nullptr);
    j["first_zero_along_q_inverse"] = rc.lambda_qinv ? encode(*rc.lambda_qinv, precision) : Json(nullptr);
    return j;
}

Json table(const std::vector<std::string>& columns)
{
    return Json{{"columns", columns}, {"rows", Json::array()}};
}

void render(const Json& report, Format format, std::ostream& out)
{
    switch (format) {
    case Format::json:
        out << report.dump(2) << '\n';
        break;
    case Format::human:
        human(report, "", out);
        break;
    case Format::csv: {
        const Json* t = nullptr;
        for (const auto& [key, value] : report.items())
            if (is_table(value)) {
                t = &value;
                break;
            }
        if (t)
            csv_table(*t, out);
        else
            csv_flat(report, "", out);
        break;
    }
    }
}

}  // namespace coxl2::tool
