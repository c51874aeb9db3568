#include "rr1/serialize.hpp"

#include "rr1/errors.hpp"
#include "rr1/util.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace rr1 {

using nlohmann::json;

namespace {

json grid_to_json(const GridSpec& g) {
    return json{{"re_min", g.re_min}, {"re_max", g.re_max}, {"im_min", g.im_min},
                {"im_max", g.im_max}, {"nx", g.nx},         {"ny", g.ny}};
}

GridSpec grid_from_json(const json& j) {
    GridSpec g;
    g.re_min = j.at("re_min").get<double>();
    g.re_max = j.at("re_max").get<double>();
    g.im_min = j.at("im_min").get<double>();
    g.im_max = j.at("im_max").get<double>();
    g.nx = j.at("nx").get<int>();
    g.ny = j.at("ny").get<int>();
    g.validate();
    return g;
}

json parse_or_throw(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what(), 0, 0);
    }
}

} // namespace

std::string field_to_json(const ScalarField& field) {
    json doc;
    doc["grid"] = grid_to_json(field.grid);
    doc["which"] = to_string(field.which);
    doc["values"] = field.values;
    json degen = json::array();
    for (auto [i, j] : field.degenerate) degen.push_back(json::array({i, j}));
    doc["degenerate"] = degen;
    return doc.dump() + "\n";
}

ScalarField field_from_json(const std::string& text) {
    json doc = parse_or_throw(text, "field JSON");
    ScalarField field;
    try {
        field.grid = grid_from_json(doc.at("grid"));
        field.which = field_kind_from_string(doc.at("which").get<std::string>());
        field.values = doc.at("values").get<std::vector<std::vector<double>>>();
        if (doc.contains("degenerate"))
            for (const auto& p : doc.at("degenerate"))
                field.degenerate.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("field JSON: ") + e.what(), 0, 0);
    }
    if (static_cast<int>(field.values.size()) != field.grid.ny)
        throw ParseError("field JSON: values row count does not match ny", 0, 0);
    for (const auto& row : field.values)
        if (static_cast<int>(row.size()) != field.grid.nx)
            throw ParseError("field JSON: values column count does not match nx", 0, 0);
    return field;
}

std::string field_to_csv(const ScalarField& field) {
    std::string out;
    for (int i = 0; i < field.grid.ny; ++i)
        for (int j = 0; j < field.grid.nx; ++j) {
            out += format_full(field.grid.re_at(j));
            out += ",";
            out += format_full(field.grid.im_at(i));
            out += ",";
            out += format_full(field.values[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            out += "\n";
        }
    return out;
}

namespace {

json contours_to_json_value(const ContourSet& contours) {
    json doc;
    doc["level"] = contours.level;
    json lines = json::array();
    for (const auto& line : contours.polylines) {
        json pts = json::array();
        for (const auto& p : line) pts.push_back(json::array({p[0], p[1]}));
        lines.push_back(std::move(pts));
    }
    doc["polylines"] = std::move(lines);
    return doc;
}

} // namespace

std::string contours_to_json(const ContourSet& contours) {
    return contours_to_json_value(contours).dump() + "\n";
}

std::string contour_list_to_json(const std::vector<ContourSet>& sets) {
    json doc = json::array();
    for (const auto& c : sets) doc.push_back(contours_to_json_value(c));
    return doc.dump() + "\n";
}

ContourSet contours_from_json(const std::string& text) {
    json doc = parse_or_throw(text, "contour JSON");
    ContourSet out;
    try {
        out.level = doc.at("level").get<double>();
        for (const auto& line : doc.at("polylines")) {
            std::vector<std::array<double, 2>> pts;
            for (const auto& p : line)
                pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
            out.polylines.push_back(std::move(pts));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("contour JSON: ") + e.what(), 0, 0);
    }
    return out;
}

std::string profile_to_json(const OrthogonalityProfile& profile) {
    json doc;
    doc["lambda"] = json::array({profile.lambda.real(), profile.lambda.imag()});
    doc["sigma_second"] = profile.sigma_second;
    doc["raw"] = profile.raw;
    doc["normalized"] = profile.normalized;
    return doc.dump() + "\n";
}

std::string splitting_to_json(const SplittingReport& report) {
    json doc;
    doc["z"] = json::array({report.z.real(), report.z.imag()});
    doc["winding"] = report.winding;
    doc["sizes"] = report.sizes;
    json sing3 = json::array();
    for (const auto& s : report.sing3) sing3.push_back(json::array({s[0], s[1], s[2]}));
    doc["sing3"] = std::move(sing3);
    doc["decay_rate"] = report.decay_rate;
    doc["floor"] = report.floor;
    return doc.dump() + "\n";
}

std::string relation_to_json(const std::vector<RelationDiskInfo>& disks) {
    json doc = json::array();
    for (const auto& d : disks) {
        json entry;
        entry["lambda"] = json::array({d.lambda.real(), d.lambda.imag()});
        entry["disk"] = {{"center", json::array({d.disk.center.real(), d.disk.center.imag()})},
                         {"radius", d.disk.radius}};
        entry["eps_forward_factor"] = d.eps_forward_factor;
        entry["eps_backward_factor"] = d.eps_backward_factor;
        doc.push_back(std::move(entry));
    }
    return doc.dump() + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace rr1
