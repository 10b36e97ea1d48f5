#include "wtring/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "wtring/constructors.hpp"
#include "wtring/corpus.hpp"
#include "wtring/error.hpp"

namespace wtring {

namespace {

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw MalformedInput(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::int64_t int_field(const Json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number_integer())
    throw MalformedInput(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<Elem> read_table(const Json& t, std::size_t n, const char* key) {
  if (!t.is_array() || t.size() != n)
    throw MalformedInput(std::string("table '") + key + "' must have " +
                         std::to_string(n) + " rows");
  std::vector<Elem> out;
  out.reserve(n * n);
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != n)
      throw MalformedInput(std::string("table '") + key + "' has a row of wrong length");
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
          static_cast<std::uint64_t>(v.get<std::int64_t>()) >= n)
        throw MalformedInput(std::string("table '") + key + "' has an entry out of range");
      out.push_back(v.get<Elem>());
    }
  }
  return out;
}

Json table_json(std::span<const Elem> t, std::size_t n) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(t[i * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

RingDocument read_document(const Json& doc, const AxiomOptions& opts) {
  if (!doc.is_object()) throw MalformedInput("ring document must be a JSON object");
  if (int_field(doc, "schema") != kRingSchemaVersion)
    throw MalformedInput("unsupported ring schema version " +
                         field(doc, "schema").dump());
  const auto order = int_field(doc, "order");
  if (order < 2) throw MalformedInput("ring order must be at least 2");
  const auto n = static_cast<std::size_t>(order);
  auto one = int_field(doc, "one");
  if (one < 0 || static_cast<std::size_t>(one) >= n)
    throw MalformedInput("unit index out of range");
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc.at("labels");
    if (!l.is_array() || l.size() != n)
      throw MalformedInput("labels must have one entry per element");
    for (const auto& s : l) {
      if (!s.is_string()) throw MalformedInput("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  Ring r(n, read_table(field(doc, "add"), n, "add"),
         read_table(field(doc, "mul"), n, "mul"), static_cast<Elem>(one),
         std::move(labels));
  require_valid(r, opts);
  return {std::move(r), doc.contains("provenance") ? doc.at("provenance") : Json()};
}

Ring read_ring(const Json& doc, const AxiomOptions& opts) {
  return read_document(doc, opts).ring;
}

Json write_document(const RingDocument& d) {
  const auto& r = d.ring;
  Json doc;
  doc["schema"] = kRingSchemaVersion;
  doc["order"] = r.order();
  doc["one"] = r.one();
  doc["add"] = table_json(r.add_table(), r.order());
  doc["mul"] = table_json(r.mul_table(), r.order());
  if (r.has_labels()) doc["labels"] = r.labels();
  if (!d.provenance.is_null()) doc["provenance"] = d.provenance;
  return doc;
}

Json write_ring(const Ring& r, const Json& provenance) {
  return write_document({r, provenance});
}

std::string format_document(const Json& doc) {
  std::ostringstream os;
  os << "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : doc.items()) {
    os << "  " << Json(key).dump() << ": ";
    if ((key == "add" || key == "mul") && value.is_array()) {
      os << "[\n";
      for (std::size_t row = 0; row < value.size(); ++row)
        os << "    " << value[row].dump() << (row + 1 < value.size() ? ",\n" : "\n");
      os << "  ]";
    } else {
      os << value.dump();
    }
    os << (++i < doc.size() ? ",\n" : "\n");
  }
  os << "}\n";
  return os.str();
}

RingDocument load_ring_file(const std::string& path, const AxiomOptions& opts) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open ring file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedInput("invalid JSON in " + path + ": " + e.what());
  }
  return read_document(doc, opts);
}

void save_ring_file(const std::string& path, const RingDocument& doc) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write ring file " + path);
  out << format_document(write_document(doc));
}

Ring build_from_spec(const Json& spec) {
  const auto& kind_v = field(spec, "kind");
  if (!kind_v.is_string()) throw MalformedInput("'kind' must be a string");
  const auto kind = kind_v.get<std::string>();

  auto int_list = [&](const char* key) {
    const auto& arr = field(spec, key);
    if (!arr.is_array()) throw MalformedInput(std::string("'") + key + "' must be an array");
    std::vector<std::int64_t> out;
    for (const auto& v : arr) {
      if (!v.is_number_integer())
        throw MalformedInput(std::string("'") + key + "' must contain integers");
      out.push_back(v.get<std::int64_t>());
    }
    return out;
  };
  auto string_list = [&](const char* key) {
    const auto& arr = field(spec, key);
    if (!arr.is_array()) throw MalformedInput(std::string("'") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& v : arr) {
      if (!v.is_string())
        throw MalformedInput(std::string("'") + key + "' must contain strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  auto small_int = [&](const char* key) {
    auto v = int_field(spec, key);
    if (v < -1000000 || v > 1000000)
      throw PreconditionError(std::string("'") + key + "' is out of range");
    return static_cast<int>(v);
  };

  if (kind == "zmod") return zmod(int_field(spec, "n"));
  if (kind == "product") {
    const auto& fs = field(spec, "factors");
    if (!fs.is_array() || fs.empty())
      throw MalformedInput("'factors' must be a nonempty array");
    std::vector<Ring> factors;
    for (const auto& f : fs) factors.push_back(build_from_spec(f));
    return direct_product(factors);
  }
  if (kind == "matrix") return matrix_ring(build_from_spec(field(spec, "base")), small_int("k"));
  if (kind == "triangular")
    return triangular_ring(build_from_spec(field(spec, "base")), small_int("k"));
  if (kind == "idealization") return idealization(small_int("k"), {int_list("N")});
  if (kind == "twisted") return twisted_product(small_int("k"));
  if (kind == "presentation") {
    auto d = int_field(spec, "degree_bound");
    if (d < 0 || d > 64) throw PreconditionError("'degree_bound' must lie in [0, 64]");
    return presentation_quotient(Presentation::parse(int_field(spec, "modulus"),
                                                     string_list("vars"),
                                                     string_list("relations"),
                                                     static_cast<unsigned>(d)));
  }
  if (kind == "subring") {
    Ring base = build_from_spec(field(spec, "base"));
    std::vector<Elem> gens;
    for (auto g : int_list("generators")) {
      if (g < 0) throw MalformedInput("generator index must be nonnegative");
      base.check_index(static_cast<Elem>(g));
      gens.push_back(static_cast<Elem>(g));
    }
    return subring_generated(base, ElementSet(gens)).ring;
  }
  if (kind == "builtin") {
    const auto& name = field(spec, "name");
    if (!name.is_string()) throw MalformedInput("'name' must be a string");
    return builtin_ring(name.get<std::string>()).ring;
  }
  throw MalformedInput("unknown construction kind '" + kind + "'");
}

Json element_json(const Ring& r, Elem x) {
  return Json{{"index", x}, {"label", r.label(x)}};
}

Json elements_json(const Ring& r, const std::vector<Elem>& xs) {
  Json arr = Json::array();
  for (auto x : xs) arr.push_back(element_json(r, x));
  return arr;
}

Json elements_json(const Ring& r, const ElementSet& xs) {
  return elements_json(r, xs.members());
}

Json report_json(const ClassificationReport& rep, const Ring& r) {
  Json out;
  out["ring"] = rep.ring_id;
  out["order"] = rep.order;
  out["characteristic"] = rep.characteristic;
  Json flags, witnesses;
  for (const auto& f : rep.flags) {
    flags[f.name] = f.value;
    if (!f.witness.empty()) witnesses[f.name] = elements_json(r, f.witness);
  }
  out["flags"] = std::move(flags);
  out["witnesses"] = witnesses.is_null() ? Json::object() : std::move(witnesses);
  if (rep.flag("sum_idem_trip")) {
    Json parts = Json::array();
    for (const auto& p : rep.idem_tripotent_parts)
      parts.push_back(Json::array({p->first, p->second}));
    out["idem_tripotent_parts"] = std::move(parts);
  }
  return out;
}

std::string report_table(const ClassificationReport& rep, const Ring& r) {
  std::ostringstream os;
  os << "ring: " << (rep.ring_id.empty() ? "-" : rep.ring_id)
     << "  order: " << rep.order << "  characteristic: " << rep.characteristic
     << "\n";
  os << std::left << std::setw(26) << "predicate" << std::setw(7) << "value"
     << "witness\n";
  for (const auto& f : rep.flags) {
    os << std::left << std::setw(26) << f.name << std::setw(7)
       << (f.value ? "true" : "false");
    for (std::size_t i = 0; i < f.witness.size(); ++i)
      os << (i ? " " : "") << r.label(f.witness[i]);
    os << "\n";
  }
  return os.str();
}

Json invariants_json(const Ring& r) {
  Json out;
  out["order"] = r.order();
  out["characteristic"] = characteristic(r);
  out["commutative"] = is_commutative(r);
  out["radical"] = elements_json(r, jacobson_radical(r).members());
  out["idempotents"] = elements_json(r, idempotents(r));
  out["tripotents"] = elements_json(r, tripotents(r));
  out["units"] = elements_json(r, units(r));
  out["nilpotents"] = elements_json(r, nilpotents(r));
  auto irr = subdirect_irreducibility(r);
  out["subdirectly_irreducible"] = irr.irreducible;
  out["monolith"] = irr.irreducible ? elements_json(r, irr.monolith.members()) : Json();
  Json minimal = Json::array();
  for (const auto& m : minimal_ideals(r)) minimal.push_back(elements_json(r, m.members()));
  out["minimal_ideals"] = std::move(minimal);
  return out;
}

Json split_json(const Char24Split& s, const Ring& r) {
  Json out;
  out["f"] = element_json(r, s.f);
  out["e"] = element_json(r, s.e);
  out["two_part_order"] = s.two_part ? s.two_part->ring.order() : 1;
  out["three_part_order"] = s.three_part ? s.three_part->ring.order() : 1;
  if (s.two_part) out["two_part"] = elements_json(r, s.two_part->inclusion);
  if (s.three_part) out["three_part"] = elements_json(r, s.three_part->inclusion);
  return out;
}

Json certificate_json(const StructureCertificate& c, const Ring& r) {
  Json out;
  out["split"] = split_json(c.split, r);
  out["char3_idempotent"] = c.split.three_part ? element_json(r, c.split.e) : Json();
  if (c.split.two_part) {
    const auto& part = *c.split.two_part;
    auto lift = [&](const Ideal& i) {
      std::vector<Elem> xs;
      for (auto x : i.members()) xs.push_back(part.inclusion[x]);
      return elements_json(r, xs);
    };
    out["radical"] = lift(c.radical);
    out["L"] = lift(c.complement);
    out["r0_order"] = c.r0_order;
    Json bools = Json::array();
    for (const auto& b : c.boolean_ideals) {
      bools.push_back(Json{{"x", element_json(r, part.inclusion[b.x])},
                           {"ideal", lift(b.ideal)}});
    }
    out["boolean_ideals"] = std::move(bools);
  }
  out["checks"] = Json{{"L_idempotent", c.complement_idempotent},
                       {"R0_idempotent_free", c.r0_idempotent_free},
                       {"R0_weakly_tripotent", c.r0_weakly_tripotent},
                       {"boolean_quotients", c.boolean_quotients},
                       {"embedding_checked", c.embedding_checked},
                       {"three_part_tripotent", c.three_part_tripotent}};
  out["orders"] = Json{{"R", r.order()},
                       {"two_part", c.two_part_order},
                       {"three_part", c.three_part_order}};
  out["valid"] = c.valid();
  return out;
}

}  // namespace wtring
