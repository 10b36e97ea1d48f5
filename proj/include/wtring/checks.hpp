#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wtring/io.hpp"
#include "wtring/ring.hpp"

namespace wtring {

enum class Status { Holds, Fails, NotApplicable };

std::string_view status_name(Status s);

struct Verdict {
  std::string check_id;
  std::vector<std::string> ring_ids;
  Status status = Status::Holds;
  Json certificate = Json::object();
  double elapsed_ms = 0;
};

/// Single: one ring. List: a family of rings. Global: no input, the check
/// builds its own rings.
enum class Arity { Single, List, Global };

struct CheckInfo {
  std::string id;
  std::string title;
  std::string statement;
  Arity arity;
  std::string notes;
};

const std::vector<CheckInfo>& list_checks();

/// Throws PreconditionError for an unknown id.
const CheckInfo& check_info(std::string_view id);

/// Throws PreconditionError for an unknown id or when the number of rings
/// does not fit the arity.
Verdict run_check(std::string_view id, const std::vector<NamedRing>& rings);

/// Families a list check is run on: every pair and triple (with
/// repetition) from {Z2, Z3, Z4, Z6, Z8}, then [R], [R, Z2], [R, Z3],
/// [R, Z4] for every given ring.
std::vector<std::vector<NamedRing>> product_families(const std::vector<NamedRing>& rings);

struct CorpusReport {
  std::vector<Verdict> verdicts;
  std::map<std::string, std::size_t> counts;  // status name -> count

  bool ok() const;
};

/// Every requested check against every ring (or family, or once for global
/// checks). An empty id list means all checks.
CorpusReport run_corpus(const std::vector<std::string>& ids,
                        const std::vector<NamedRing>& rings);

Json verdict_json(const Verdict& v, bool with_timing = false);

}  // namespace wtring
