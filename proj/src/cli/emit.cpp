#include "orbiqc/cli/emit.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

namespace orbiqc::cli {

SeriesBlock make_block(const std::string& series, const std::string& status, const QSeries& s)
{
    SeriesBlock b{series, status, s.order(), {}};
    for (const auto& t : s.terms())
        b.records.push_back({t.exponent, t.coefficient, series, status});
    return b;
}

std::optional<Format> parse_format(std::string_view text)
{
    if (text == "plain")
        return Format::plain;
    if (text == "csv")
        return Format::csv;
    if (text == "json")
        return Format::json;
    return std::nullopt;
}

namespace {

nlohmann::ordered_json to_json(const SeriesBlock& b)
{
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& r : b.records)
        records.push_back({{"exponent", to_string(r.exponent)},
                           {"coefficient", to_string(r.coefficient)},
                           {"series", r.series},
                           {"status", r.status}});
    return {{"series", b.series}, {"status", b.status}, {"exact_below", to_string(b.exact_below)}, {"records", records}};
}

std::vector<std::string> split(std::string_view line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

} // namespace

void emit(std::ostream& os, const std::vector<SeriesBlock>& blocks, Format format, bool as_list)
{
    switch (format) {
    case Format::plain:
        for (const auto& b : blocks) {
            os << "# " << b.series << " status=" << b.status << " exact_below=" << to_string(b.exact_below) << "\n";
            for (const auto& r : b.records)
                os << to_string(r.exponent) << " " << to_string(r.coefficient) << "\n";
        }
        break;
    case Format::csv:
        os << "exponent,coefficient,series,status,exact_below\n";
        for (const auto& b : blocks) {
            std::string tail = "," + b.series + "," + b.status + "," + to_string(b.exact_below) + "\n";
            if (b.records.empty())
                os << "," << tail;
            for (const auto& r : b.records)
                os << to_string(r.exponent) << "," << to_string(r.coefficient) << tail;
        }
        break;
    case Format::json: {
        nlohmann::ordered_json doc;
        if (as_list) {
            doc = nlohmann::ordered_json::array();
            for (const auto& b : blocks)
                doc.push_back(to_json(b));
        } else {
            doc = to_json(blocks.at(0));
        }
        os << doc.dump(2) << "\n";
        break;
    }
    }
}

std::vector<EmitRecord> parse_csv(std::string_view text)
{
    std::vector<EmitRecord> out;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            if (line != "exponent,coefficient,series,status,exact_below")
                throw std::invalid_argument("unexpected csv header: " + line);
            header = false;
            continue;
        }
        if (line.empty())
            continue;
        auto f = split(line, ',');
        if (f.size() != 5)
            throw std::invalid_argument("csv row needs 5 fields: " + line);
        if (f[0].empty() && f[1].empty())
            continue; // placeholder row of an all-zero series
        out.push_back({parse_rat(f[0]), parse_rat(f[1]), f[2], f[3]});
    }
    return out;
}

std::vector<EmitRecord> parse_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed json: ") + e.what());
    }
    std::vector<EmitRecord> out;
    auto take = [&](const nlohmann::json& block) {
        for (const auto& r : block.at("records"))
            out.push_back({parse_rat(r.at("exponent").get<std::string>()),
                           parse_rat(r.at("coefficient").get<std::string>()), r.at("series").get<std::string>(),
                           r.at("status").get<std::string>()});
    };
    try {
        if (doc.is_array())
            for (const auto& b : doc)
                take(b);
        else
            take(doc);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("unexpected json layout: ") + e.what());
    }
    return out;
}

} // namespace orbiqc::cli
