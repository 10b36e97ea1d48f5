#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wtring/checks.hpp"
#include "wtring/classify.hpp"
#include "wtring/corpus.hpp"
#include "wtring/error.hpp"
#include "wtring/io.hpp"
#include "wtring/structure.hpp"

using namespace wtring;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kValidation = 2;
constexpr int kCheckFailed = 3;

struct RingSource {
  std::string id;
  RingDocument doc;
};

RingSource load(const std::string& arg, const AxiomOptions& opts) {
  constexpr std::string_view prefix = "builtin:";
  if (arg.starts_with(prefix)) {
    auto named = builtin_ring(arg.substr(prefix.size()));
    return {named.name, {std::move(named.ring), Json{{"kind", "builtin"}, {"name", named.name}}}};
  }
  return {arg, load_ring_file(arg, opts)};
}

Json parse_spec(const std::string& arg) {
  std::string text = arg;
  if (arg.find('{') == std::string::npos) {
    std::ifstream in(arg);
    if (!in) throw MalformedInput("cannot open spec file " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid spec JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite rings: construction, classification and check verification"};
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t seed = AxiomOptions{}.seed;

  auto* construct = app.add_subcommand("construct", "Build a ring from a construction spec");
  std::string spec_arg, out_path;
  construct->add_option("--spec", spec_arg, "Spec file or inline JSON")->required();
  construct->add_option("-o,--output", out_path, "Output ring file (stdout if omitted)");
  construct->add_flag("--json", json, "Errors as JSON");

  auto* classify_cmd = app.add_subcommand("classify", "Evaluate the ring-class predicates");
  std::string ring_arg;
  classify_cmd->add_option("ring", ring_arg, "Ring file or builtin:NAME")->required();
  classify_cmd->add_flag("--json", json, "JSON output");

  auto* invariants_cmd = app.add_subcommand("invariants", "Radical, idempotents, units, ...");
  invariants_cmd->add_option("ring", ring_arg, "Ring file or builtin:NAME")->required();
  invariants_cmd->add_flag("--json", json, "Errors as JSON");

  auto* verify = app.add_subcommand("verify", "Run checks against rings");
  std::string check_arg = "all", verify_ring, corpus;
  bool timing = false;
  verify->add_option("--check", check_arg, "Check id (T01..T18) or all");
  auto* ring_opt = verify->add_option("--ring", verify_ring, "Ring file or builtin:NAME");
  verify->add_option("--corpus", corpus, "Corpus name")
      ->check(CLI::IsMember({"builtin"}))
      ->excludes(ring_opt);
  verify->add_option("--seed", seed, "Seed for sampled axiom checks on load");
  verify->add_flag("--json", json, "One JSON verdict per line");
  verify->add_flag("--timing", timing, "Include elapsed times");

  auto* decompose = app.add_subcommand("decompose", "Splitting and structure certificate");
  decompose->add_option("ring", ring_arg, "Ring file or builtin:NAME")->required();
  decompose->add_flag("--json", json, "Errors as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  AxiomOptions opts;
  opts.seed = seed;

  try {
    if (*construct) {
      Json spec = parse_spec(spec_arg);
      RingDocument doc{build_from_spec(spec), spec};
      if (out_path.empty())
        std::cout << format_document(write_document(doc));
      else
        save_ring_file(out_path, doc);
      return kOk;
    }

    if (*classify_cmd) {
      auto src = load(ring_arg, opts);
      auto rep = classify(src.doc.ring, src.id);
      if (json)
        std::cout << report_json(rep, src.doc.ring).dump() << "\n";
      else
        std::cout << report_table(rep, src.doc.ring);
      return kOk;
    }

    if (*invariants_cmd) {
      auto src = load(ring_arg, opts);
      std::cout << invariants_json(src.doc.ring).dump() << "\n";
      return kOk;
    }

    if (*decompose) {
      auto src = load(ring_arg, opts);
      const Ring& r = src.doc.ring;
      Json out{{"ring", src.id}};
      const auto n = characteristic(r);
      out["characteristic"] = n;
      out["split"] = 24 % n == 0 ? split_json(char24_split(r), r) : Json();
      if (is_commutative(r) && is_weakly_tripotent(r).holds)
        out["structure"] = certificate_json(wt_structure(r), r);
      else
        out["structure"] = nullptr;
      std::cout << out.dump() << "\n";
      return kOk;
    }

    if (*verify) {
      std::vector<std::string> ids;
      if (check_arg != "all") ids.push_back(std::string(check_info(check_arg).id));
      std::vector<NamedRing> rings;
      if (!verify_ring.empty()) {
        auto src = load(verify_ring, opts);
        rings.push_back({src.id, std::move(src.doc.ring)});
      } else {
        rings = builtin_corpus();
      }
      auto rep = run_corpus(ids, rings);
      for (const auto& v : rep.verdicts) {
        if (json) {
          std::cout << verdict_json(v, timing).dump() << "\n";
        } else {
          std::string names;
          for (const auto& n : v.ring_ids) names += (names.empty() ? "" : ",") + n;
          std::cout << v.check_id << "  " << (names.empty() ? "-" : names) << "  "
                    << status_name(v.status);
          if (timing) std::cout << "  " << v.elapsed_ms << " ms";
          std::cout << "\n";
        }
      }
      if (json) {
        std::cout << Json{{"summary", rep.counts}}.dump() << "\n";
      } else {
        std::cout << "holds " << rep.counts["holds"] << ", fails " << rep.counts["fails"]
                  << ", not_applicable " << rep.counts["not_applicable"] << "\n";
      }
      return rep.ok() ? kOk : kCheckFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (json) std::cerr << Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (json) std::cerr << Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return kValidation;
  }
  return kUsage;
}
