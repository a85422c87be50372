#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbiqc/qseries.hpp"

namespace orbiqc::cli {

struct EmitRecord {
    Rat exponent;
    Rat coefficient;
    std::string series;
    std::string status;

    bool operator==(const EmitRecord&) const = default;
};

// One series worth of records plus the boundary below which it is exact.
struct SeriesBlock {
    std::string series;
    std::string status;
    Rat exact_below;
    std::vector<EmitRecord> records; // nonzero coefficients only
};

SeriesBlock make_block(const std::string& series, const std::string& status, const QSeries& s);

enum class Format { plain, csv, json };

std::optional<Format> parse_format(std::string_view text);

// plain: "# <series> status=<s> exact_below=<N>" then "exponent coefficient" lines.
// csv:   header exponent,coefficient,series,status,exact_below; a series with
//        no nonzero coefficient gets one row with empty exponent and coefficient.
// json:  {"series","status","exact_below","records":[...]} per block; several
//        blocks are wrapped in an array.
void emit(std::ostream& os, const std::vector<SeriesBlock>& blocks, Format format, bool as_list);

// Parse-back of the csv and json emissions into flat record lists.
// Throws std::invalid_argument on malformed input.
std::vector<EmitRecord> parse_csv(std::string_view text);
std::vector<EmitRecord> parse_json(std::string_view text);

} // namespace orbiqc::cli
