#include "strongcliques/records.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace strongcliques {

RecordFormat record_format_from_string(const std::string& name) {
    if (name == "tsv") return RecordFormat::Tsv;
    if (name == "jsonl") return RecordFormat::JsonLines;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string vertex_set_to_string(const VertexSet& s) {
    if (s.empty()) return "-";
    std::ostringstream out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i];
    }
    return out.str();
}

VertexSet vertex_set_from_string(const std::string& text) {
    VertexSet out;
    if (text.empty() || text == "-") return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("bad vertex id: " + item);
        out.push_back(v);
    }
    return out;
}

std::string partition_to_string(const std::vector<VertexSet>& parts) {
    if (parts.empty()) return "-";
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << '|';
        out << vertex_set_to_string(parts[i]);
    }
    return out.str();
}

std::vector<VertexSet> partition_from_string(const std::string& text) {
    std::vector<VertexSet> out;
    if (text.empty() || text == "-") return out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, '|')) out.push_back(vertex_set_from_string(part));
    return out;
}

std::string certificate_to_string(const std::optional<Certificate>& cert) {
    if (!cert) return "-";
    return partition_to_string(cert->sets);
}

std::string format_record(const RunRecord& r, RecordFormat f) {
    if (f == RecordFormat::Tsv) {
        std::ostringstream out;
        out << r.instance << '\t' << r.problem << '\t' << r.answer << '\t'
            << r.method << '\t' << (r.certificate.empty() ? "-" : r.certificate)
            << '\t' << r.wall_ms;
        return out.str();
    }
    nlohmann::json j{{"instance", r.instance}, {"problem", r.problem},
                     {"answer", r.answer},     {"method", r.method},
                     {"certificate", r.certificate.empty() ? "-" : r.certificate},
                     {"wall_ms", r.wall_ms}};
    return j.dump();
}

RunRecord parse_record(const std::string& line, RecordFormat f) {
    RunRecord r;
    if (f == RecordFormat::Tsv) {
        std::istringstream in(line);
        std::string wall;
        if (!std::getline(in, r.instance, '\t') ||
            !std::getline(in, r.problem, '\t') ||
            !std::getline(in, r.answer, '\t') ||
            !std::getline(in, r.method, '\t') ||
            !std::getline(in, r.certificate, '\t') || !std::getline(in, wall))
            throw std::invalid_argument("tsv record with missing fields: " + line);
        r.wall_ms = std::stod(wall);
        return r;
    }
    nlohmann::json j = nlohmann::json::parse(line);
    r.instance = j.at("instance").get<std::string>();
    r.problem = j.at("problem").get<std::string>();
    r.answer = j.at("answer").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.certificate = j.at("certificate").get<std::string>();
    r.wall_ms = j.at("wall_ms").get<double>();
    return r;
}

}  // namespace strongcliques
