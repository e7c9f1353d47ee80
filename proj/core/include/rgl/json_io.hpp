#pragma once

#include <string>
#include <string_view>

#include "rgl/bounds.hpp"
#include "rgl/detectors.hpp"
#include "rgl/oracle.hpp"
#include "rgl/partition.hpp"
#include "rgl/witnesses.hpp"

namespace rgl {

// JSON documents, pretty-printed with two-space indent and a fixed key
// order so identical inputs give byte-identical text. Readers throw
// ParseError on malformed or incomplete documents.

std::string embedding_to_json(const Embedding& e);
Embedding embedding_from_json(std::string_view text);

/// Blue targets: pattern text, "connected(<h>)" or "K1+any(<f>)".
std::string format_blue_target(const BlueTarget& blue);
BlueTarget parse_blue_target(std::string_view text);

std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(std::string_view text);

std::string bound_to_json(const BoundResult& r);
std::string thresholds_to_json(const ThresholdParams& t);
std::string partition_to_json(const VertexPartition& p);
std::string stability_to_json(const StabilityReport& r);
std::string audit_to_json(const ProofAudit& a);
std::string search_to_json(const SearchOutcome& s);

}  // namespace rgl
