#pragma once

#include <string>
#include <vector>

#include "strongcliques/graph.hpp"
#include "strongcliques/solvers.hpp"

namespace strongcliques {

enum class RecordFormat { Tsv, JsonLines };

RecordFormat record_format_from_string(const std::string& name);

// One output line of the CLI: instance id, problem, answer, method,
// certificate and wall time. The certificate field uses "-" when absent.
struct RunRecord {
    std::string instance;
    std::string problem;
    std::string answer;
    std::string method;
    std::string certificate;
    double wall_ms = 0.0;
};

std::string format_record(const RunRecord& r, RecordFormat f);
RunRecord parse_record(const std::string& line, RecordFormat f);

// "1,2,3" (empty set prints as "-")
std::string vertex_set_to_string(const VertexSet& s);
VertexSet vertex_set_from_string(const std::string& text);

// "0,1|2,3"
std::string partition_to_string(const std::vector<VertexSet>& parts);
std::vector<VertexSet> partition_from_string(const std::string& text);

std::string certificate_to_string(const std::optional<Certificate>& cert);

}  // namespace strongcliques
