#pragma once

#include "json.hpp"

#include "hyperclique/extraction.hpp"

namespace hyperclique {

/// Certificate document: k, n, C, cliques, parents (root = -1), per-node A
/// and B, per-path S lists with U and W, and the named checks.
nlohmann::json certificate_to_json(const ExtractionResult& res, const CertificateReport& report);

/// Reads back everything but the checks. Throws InputError on malformed
/// documents.
ExtractionResult certificate_from_json(const nlohmann::json& doc);

nlohmann::json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const nlohmann::json& a);

}  // namespace hyperclique
