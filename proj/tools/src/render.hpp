#pragma once

#include <coxl2/growth.hpp>
#include <coxl2/piecewise.hpp>
#include <coxl2/rational_function.hpp>
#include <coxl2/roots.hpp>

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace coxl2::tool {

using Json = nlohmann::ordered_json;

enum class Format { human, json, csv };

Format parse_format(const std::string& name);

// Encoders. Every number carries its exact value; decimals are display only
// and come with the width of the interval they stand for.
Json encode(const Rational& r, int precision);
Json encode(const AlgebraicNumber& x, int precision);
Json encode(const Polynomial& p, const std::vector<std::string>& names = {});
Json encode(const RationalFunction& f, const std::vector<std::string>& names = {});
Json encode(const PiecewiseRational& f, int precision);
Json encode(const RegionClass& rc, int precision);

/**
 * A table is {"columns": [...], "rows": [[...], ...]}; cells may be plain
 * strings, booleans or encoded numbers.
 */
Json table(const std::vector<std::string>& columns);

void render(const Json& report, Format format, std::ostream& out);

}  // namespace coxl2::tool
