// metafusion: analyses and exhaustive verification sweeps for metacyclic
// 2-groups, their fusion data and block invariants.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "metafusion/automorphism.hpp"
#include "metafusion/block.hpp"
#include "metafusion/fusion.hpp"
#include "metafusion/perm_group.hpp"
#include "metafusion/report.hpp"

using namespace metafusion;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidInput = 2;

struct SweepCaps {
  long long lemma1 = 256;
  long long lemma2 = 128;
  long long theorem3 = 128;
  long long degrees = 256;
};

long long default_max_order(const std::string& check) {
  const SweepCaps caps;
  long long cap = 256;
  if (check == "lemma1") cap = caps.lemma1;
  else if (check == "lemma2") cap = caps.lemma2;
  else if (check == "theorem3") cap = caps.theorem3;
  else if (check == "degrees") cap = caps.degrees;

  if (const char* env = std::getenv("METAFUSION_MAX_ORDER")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 256)
      throw std::invalid_argument(
          "METAFUSION_MAX_ORDER must be an integer in [1, 256]");
    return std::min(v, cap);
  }
  return cap;
}

int emit_report(const SweepReport& report, bool json, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << report.to_tsv();
    std::cout << "wrote " << report.rows.size() << " rows to " << out_path << "\n";
    std::cout << "pass " << report.pass_count << ", fail " << report.fail_count << "\n";
  } else if (json) {
    std::cout << report.to_json_string() << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.ok() ? kExitOk : kExitVerificationFailure;
}

DefectGroupDescriptor descriptor_from(const std::string& params_text,
                                      const std::string& family_text,
                                      long long order) {
  if (!params_text.empty())
    return DefectGroupDescriptor::from_params(parse_params(params_text));
  if (family_text.empty())
    throw std::invalid_argument("give either --params or --family with --order");
  auto tag = family_tag_from_string(family_text);
  if (!tag) throw std::invalid_argument("unknown family \"" + family_text + "\"");
  if (order <= 0) throw std::invalid_argument("--order is required with --family");
  return DefectGroupDescriptor::from_family(*tag, order);
}

nlohmann::json invariants_json(const BlockInvariants& b) {
  nlohmann::json j;
  j["k"] = b.k;
  for (const auto& [i, ki] : b.heights) j["k" + std::to_string(i)] = ki;
  j["l"] = b.l;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metacyclic 2-group analyser: families, automorphisms, essential "
               "candidates, block invariants and verification sweeps"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string params_text, family_text, case_text, check, out_path, file_path,
      corpus_dir;
  long long order = 0;
  long long max_order = -1;
  bool json = false;

  auto* classify_cmd = app.add_subcommand("classify", "recognize the family of a presentation");
  classify_cmd->add_option("--params", params_text, "presentation m,n,r,s")->required();
  classify_cmd->add_flag("--json", json, "JSON output");

  auto* aut_cmd = app.add_subcommand("aut", "automorphism group order and odd part");
  aut_cmd->add_option("--params", params_text, "presentation m,n,r,s")->required();
  aut_cmd->add_flag("--json", json, "JSON output");

  auto* essential_cmd =
      app.add_subcommand("essential", "essential-candidate filter for every proper subgroup");
  essential_cmd->add_option("--params", params_text, "presentation m,n,r,s")->required();
  essential_cmd->add_flag("--json", json, "JSON output");
  essential_cmd->add_option("--out", out_path, "write rows as TSV");

  auto* verdict_cmd = app.add_subcommand("verdict", "nilpotency verdict for a presentation");
  verdict_cmd->add_option("--params", params_text, "presentation m,n,r,s")->required();
  verdict_cmd->add_flag("--json", json, "JSON output");

  auto* block_cmd = app.add_subcommand("block", "block invariants of a defect group");
  block_cmd->add_option("--params", params_text, "presentation m,n,r,s");
  block_cmd->add_option("--family", family_text, "family tag (dihedral, quaternion, ...)");
  block_cmd->add_option("--order", order, "group order (with --family)");
  block_cmd->add_option("--case", case_text, "fusion case; omit for the full table");
  block_cmd->add_flag("--json", json, "JSON output");

  auto* cases_cmd = app.add_subcommand("cases", "admissible fusion cases of a defect group");
  cases_cmd->add_option("--params", params_text, "presentation m,n,r,s");
  cases_cmd->add_option("--family", family_text, "family tag");
  cases_cmd->add_option("--order", order, "group order (with --family)");
  cases_cmd->add_flag("--json", json, "JSON output");

  auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive verification sweeps");
  sweep_cmd->add_option("--check", check, "lemma1 | lemma2 | theorem3 | degrees")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2", "theorem3", "degrees"}));
  sweep_cmd->add_option("--max-order", max_order, "sweep bound (default per check)");
  sweep_cmd->add_option("--out", out_path, "write the report as TSV");
  sweep_cmd->add_flag("--json", json, "JSON output");

  auto* witness_cmd =
      app.add_subcommand("witness", "2-nilpotency consistency of permutation groups");
  witness_cmd->add_option("--file", file_path, "one permutation-group JSON file");
  witness_cmd->add_option("--corpus", corpus_dir, "directory of *.json groups");
  witness_cmd->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (app.got_subcommand(classify_cmd)) {
      auto params = parse_params(params_text);
      if (auto bad = validate(params)) {
        std::cerr << "invalid params " << params.str() << ": " << *bad << "\n";
        return kExitInvalidInput;
      }
      auto fam = classify(build(params));
      if (json) {
        nlohmann::json j{{"params", params.str()},
                         {"family", to_string(fam->tag)},
                         {"order", fam->order}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << params.str() << ": " << to_string(fam->tag) << " of order "
                  << fam->order << "\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(aut_cmd)) {
      auto g = build_group(parse_params(params_text));
      auto aut = compute_aut(g);
      auto fam = classify(g.table);
      if (json) {
        nlohmann::json j{{"params", g.params.str()},
                         {"family", to_string(fam->tag)},
                         {"aut_order", aut.summary.order},
                         {"odd_part", aut.summary.odd_part},
                         {"is_2_group", aut.summary.is_2_group}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << g.params.str() << " (" << to_string(fam->tag) << "): |Aut| = "
                  << aut.summary.order << ", odd part " << aut.summary.odd_part
                  << (aut.summary.is_2_group ? " (2-group)" : "") << "\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(essential_cmd)) {
      auto params = parse_params(params_text);
      if (json) {
        // JSON variant carries the witness data behind each row
        auto g = build_group(params);
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& rep : essential_candidates(g.table)) {
          nlohmann::json r{
              {"params", params.str()},
              {"q_size", rep.subgroup.size()},
              {"q_shape", rep.shape ? to_string(rep.shape->tag) : "not-metacyclic"},
              {"q_members", rep.subgroup.members},
              {"q_generators", rep.subgroup.generators},
              {"centric_in_p", rep.centric_in_p},
              {"aut_order", rep.aut_order},
              {"aut_odd_part", rep.aut_odd_part},
              {"verdict", rep.candidate ? "candidate" : "eliminated"}};
          if (rep.reason) r["reason"] = to_string(*rep.reason);
          if (rep.action_faithful) r["action_faithful"] = *rep.action_faithful;
          rows.push_back(std::move(r));
        }
        std::cout << nlohmann::json{{"check", "essential"},
                                    {"params", params.str()},
                                    {"version", kVersion},
                                    {"rows", std::move(rows)}}
                         .dump(2)
                  << "\n";
        return kExitOk;
      }
      return emit_report(essential_report(params), false, out_path);
    }

    if (app.got_subcommand(verdict_cmd)) {
      auto v = nilpotency_verdict(build(parse_params(params_text)));
      if (json) {
        nlohmann::json j{{"verdict", to_string(v.tag)}};
        if (v.tag == VerdictTag::NotForced) j["reason"] = to_string(v.reason);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << to_string(v.tag);
        if (v.tag == VerdictTag::NotForced)
          std::cout << " (" << to_string(v.reason) << ")";
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(block_cmd)) {
      auto d = descriptor_from(params_text, family_text, order);
      if (case_text.empty()) {
        return emit_report(theorem4_table(d), json, out_path);
      }
      auto c = fusion_case_from_string(case_text);
      if (!c) throw std::invalid_argument("unknown fusion case \"" + case_text + "\"");
      auto b = block_invariants(d, *c);
      if (json) {
        std::cout << invariants_json(b).dump() << "\n";
      } else {
        std::cout << "k = " << b.k;
        for (const auto& [i, ki] : b.heights)
          std::cout << ", k" << i << " = " << ki;
        std::cout << ", l = " << b.l << "\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(cases_cmd)) {
      auto d = descriptor_from(params_text, family_text, order);
      auto fam = d.resolve_family();
      auto cases = admissible_cases(d);
      if (json) {
        nlohmann::json j{{"family", to_string(fam.tag)}, {"order", fam.order}};
        nlohmann::json arr = nlohmann::json::array();
        for (auto c : cases) arr.push_back(to_string(c));
        j["cases"] = std::move(arr);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << to_string(fam.tag) << " of order " << fam.order << ":";
        for (auto c : cases) std::cout << " " << to_string(c);
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (app.got_subcommand(sweep_cmd)) {
      const long long bound = max_order > 0 ? max_order : default_max_order(check);
      SweepReport report;
      if (check == "lemma1") report = lemma1_sweep(bound);
      else if (check == "lemma2") report = lemma2_sweep(bound);
      else if (check == "theorem3") report = theorem3_sweep(bound);
      else report = degrees_sweep(bound);
      return emit_report(report, json, out_path);
    }

    if (app.got_subcommand(witness_cmd)) {
      if (file_path.empty() == corpus_dir.empty())
        throw std::invalid_argument("give exactly one of --file or --corpus");
      auto report = file_path.empty() ? witness_corpus(corpus_dir)
                                      : witness_file(file_path);
      return emit_report(report, json, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitInvalidInput;
}
