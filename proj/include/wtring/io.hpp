#pragma once

#include <string>

#include "json.hpp"
#include "wtring/classify.hpp"
#include "wtring/ideals.hpp"
#include "wtring/ring.hpp"
#include "wtring/structure.hpp"

namespace wtring {

using Json = nlohmann::ordered_json;

inline constexpr int kRingSchemaVersion = 1;

/// A ring as stored on disk, together with the construction spec that
/// produced it (null when unknown).
struct RingDocument {
  Ring ring;
  Json provenance;
};

/// Validates the schema, the table shapes and the ring axioms (exhaustively
/// up to order 64, sampled above with opts.seed).
RingDocument read_document(const Json& doc, const AxiomOptions& opts = {});
Ring read_ring(const Json& doc, const AxiomOptions& opts = {});

/// Keys in canonical order: schema, order, one, add, mul, labels, provenance.
/// labels and provenance are omitted when absent.
Json write_document(const RingDocument& doc);
Json write_ring(const Ring& r, const Json& provenance = nullptr);

/// One table row per line; byte-stable for identical documents.
std::string format_document(const Json& doc);

RingDocument load_ring_file(const std::string& path, const AxiomOptions& opts = {});
void save_ring_file(const std::string& path, const RingDocument& doc);

/// Builds a ring from a construction spec such as
/// {"kind":"product","factors":[{"kind":"zmod","n":4},{"kind":"zmod","n":4}]}.
/// Kinds: zmod, product, matrix, triangular, idealization, twisted,
/// presentation, subring, builtin.
Ring build_from_spec(const Json& spec);

Json element_json(const Ring& r, Elem x);
Json elements_json(const Ring& r, const std::vector<Elem>& xs);
Json elements_json(const Ring& r, const ElementSet& xs);

Json report_json(const ClassificationReport& rep, const Ring& r);
std::string report_table(const ClassificationReport& rep, const Ring& r);

/// radical, idempotents, tripotents, units, nilpotents, monolith.
Json invariants_json(const Ring& r);

Json split_json(const Char24Split& s, const Ring& r);
Json certificate_json(const StructureCertificate& c, const Ring& r);

}  // namespace wtring
