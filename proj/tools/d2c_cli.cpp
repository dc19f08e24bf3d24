// Command-line front end: batch graph analysis (check), family constructors
// (family) and the extremal census (search). Graphs travel as graph6 lines,
// analysis results as JSON lines, search reports as a single JSON document.

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "d2c/analysis.hpp"
#include "d2c/canonical.hpp"
#include "d2c/certificate.hpp"
#include "d2c/enumerate.hpp"
#include "d2c/families.hpp"
#include "d2c/graph.hpp"

using json = nlohmann::ordered_json;

namespace {

struct LineResult {
  std::string out;
  bool parse_error = false;
  bool violation = false;
};

LineResult analyze_line(const std::string& line, long long lineno) {
  LineResult res;
  d2c::Graph g;
  try {
    g = d2c::parse_graph6(line);
  } catch (const std::exception& e) {
    json rec;
    rec["line"] = lineno;
    rec["error"] = e.what();
    res.out = rec.dump();
    res.parse_error = true;
    return res;
  }

  json rec;
  std::vector<std::string> violations;
  rec["graph6"] = d2c::to_graph6(g);
  rec["n"] = g.n;
  rec["m"] = g.edge_count();
  bool d2c_flag = d2c::is_d2c(g);
  bool bip = d2c::is_bipartite(g);
  std::vector<d2c::VertexPair> doms = d2c::dominating_edges(g);
  rec["d2c"] = d2c_flag;
  rec["bipartite"] = bip;
  rec["dominating_edge"] = !doms.empty();
  rec["partition"] = nullptr;
  rec["free"] = nullptr;
  rec["implied_bound"] = nullptr;

  if (d2c_flag && !doms.empty()) {
    try {
      d2c::PartitionUV part = d2c::partition_uv(g, doms[0].a, doms[0].b);
      rec["partition"] = {{"u", part.u},
                          {"v", part.v},
                          {"p_uv", std::popcount(part.p_uv)},
                          {"s_uv", std::popcount(part.s_uv)},
                          {"s_u", std::popcount(part.s_u)},
                          {"s_v", std::popcount(part.s_v)}};
      d2c::StructureReport sr = d2c::verify_structure(g, part);
      for (const std::string& v : sr.violations) violations.push_back(v);

      d2c::XYSplit split = d2c::build_xy(part);
      d2c::Assignment asg = d2c::build_assignment(g, split);
      rec["free"] = asg.free_nonedges.size();
      d2c::EdgeIdentityVerdict id = d2c::verify_edge_identity(g, split, asg);
      if (!id.holds()) violations.push_back("edge identity fails");

      if (part.p_uv == 0) {
        d2c::FOrientation o = d2c::build_f_orientation(g, part, asg);
        d2c::OrientationLemmaReport lr =
            d2c::verify_orientation_lemmas(g, part, asg, o);
        for (const std::string& v : lr.violations) violations.push_back(v);
        d2c::CertificateBound cb = d2c::certificate_bound(g, part.u, part.v);
        rec["implied_bound"] = cb.implied_bound;
        if (cb.implied_bound > static_cast<int>(asg.free_nonedges.size()))
          violations.push_back("implied bound exceeds free(f)");
      } else {
        d2c::PuvMatchingReport mr = d2c::verify_puv_matching(g, part, asg);
        for (const std::string& v : mr.violations) violations.push_back(v);
      }
    } catch (const std::logic_error& e) {
      violations.push_back(e.what());
    }
  }

  d2c::BoundVerdicts bv = d2c::bound_verdicts(g);
  rec["bounds"] = {{"murty_simon_ok", bv.murty_simon_ok},
                   {"murty_simon_equality", bv.murty_simon_equality},
                   {"strengthened_attained", bv.strengthened_attained},
                   {"theorem4_applicable", bv.theorem4_applicable},
                   {"theorem4_ok", bv.theorem4_ok}};
  if (d2c_flag && !bv.murty_simon_ok) violations.push_back("Murty-Simon bound fails");
  if (d2c_flag && !bv.theorem4_ok) violations.push_back("dominating-edge bound fails");

  rec["families"] = {{"c5plus", d2c::is_in_c5plus(g)},
                     {"tprime", d2c::is_in_tprime(g)}};
  rec["violations"] = violations;
  res.violation = !violations.empty();
  res.out = rec.dump();
  return res;
}

int cmd_check(std::istream& in, std::ostream& out) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }
  std::vector<LineResult> results(lines.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < lines.size(); ++i)
    results[i] = analyze_line(lines[i], static_cast<long long>(i) + 1);

  bool any_parse = false, any_violation = false;
  for (const LineResult& r : results) {
    out << r.out << "\n";
    any_parse |= r.parse_error;
    any_violation |= r.violation;
  }
  return any_parse ? 2 : any_violation ? 1 : 0;
}

json report_to_json(const d2c::SearchReport& r) {
  json j;
  j["n"] = r.n;
  j["counts"] = {
      {"total_graphs", r.counts.total_graphs},
      {"d2c", r.counts.d2c},
      {"d2c_nonbipartite", r.counts.d2c_nonbipartite},
      {"with_dominating_edge", r.counts.with_dominating_edge},
      {"attaining_murty_simon", r.counts.attaining_murty_simon},
      {"attaining_strengthened", r.counts.attaining_strengthened},
      {"exceptions_not_in_c5plus", r.counts.exceptions_not_in_c5plus}};
  j["witnesses"] = r.witnesses;
  j["shard"] = {{"prefix_depth", r.prefix_depth},
                {"root_count", r.root_count},
                {"roots_covered", r.roots_covered}};
  return j;
}

d2c::SearchReport report_from_json(const json& j) {
  d2c::SearchReport r;
  r.n = j.at("n");
  const json& c = j.at("counts");
  r.counts.total_graphs = c.at("total_graphs");
  r.counts.d2c = c.at("d2c");
  r.counts.d2c_nonbipartite = c.at("d2c_nonbipartite");
  r.counts.with_dominating_edge = c.at("with_dominating_edge");
  r.counts.attaining_murty_simon = c.at("attaining_murty_simon");
  r.counts.attaining_strengthened = c.at("attaining_strengthened");
  r.counts.exceptions_not_in_c5plus = c.at("exceptions_not_in_c5plus");
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.prefix_depth = j.at("shard").at("prefix_depth");
  r.root_count = j.at("shard").at("root_count");
  r.roots_covered = j.at("shard").at("roots_covered").get<std::vector<int>>();
  return r;
}

/// Sum of partial reports without the completeness check (a single CLI
/// shard covers only its slice of the roots).
d2c::SearchReport accumulate(const std::vector<d2c::SearchReport>& parts) {
  d2c::SearchReport out = parts.at(0);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out.counts += parts[i].counts;
    out.witnesses.insert(out.witnesses.end(), parts[i].witnesses.begin(),
                         parts[i].witnesses.end());
    out.roots_covered.insert(out.roots_covered.end(),
                             parts[i].roots_covered.begin(),
                             parts[i].roots_covered.end());
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  std::sort(out.roots_covered.begin(), out.roots_covered.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diameter-2-critical graph toolkit"};
  app.require_subcommand(1);

  // check ----------------------------------------------------------------
  auto* check = app.add_subcommand(
      "check", "analyze graph6 lines from stdin or a file, emit JSON lines");
  std::string check_input;
  check->add_option("input", check_input, "input file (default: stdin)");

  // family ---------------------------------------------------------------
  auto* family = app.add_subcommand(
      "family", "emit a named construction as graph6 "
                "(kab a b | c5plus s1 s2 s3 | t n | tprime n | conclusion s | h5)");
  std::string fam_name;
  std::vector<int> fam_params;
  bool fam_relaxed = false;
  family->add_option("name", fam_name)->required();
  family->add_option("params", fam_params);
  family->add_flag("--relaxed", fam_relaxed,
                   "c5plus only: skip the middle-class size condition");

  // search ---------------------------------------------------------------
  auto* search = app.add_subcommand(
      "search", "census of all graphs of order n (canonical augmentation)");
  int n = 0, shards = 1, shard_id = -1, depth = -1;
  std::string out_file, witness_file, checkpoint_dir;
  std::vector<std::string> merge_files;
  bool prune = false, parallel = false, resume = false;
  search->add_option("n", n, "graph order (1..11 practical)")->required();
  search->add_option("--shards", shards, "total number of shards");
  search->add_option("--shard", shard_id, "which shard to run (0-based)");
  search->add_option("--depth", depth, "augmentation prefix depth for sharding");
  search->add_option("--out", out_file, "write the JSON report here");
  search->add_option("--witnesses", witness_file, "write witness graph6 lines");
  search->add_option("--merge", merge_files, "merge shard report files instead");
  search->add_option("--checkpoint", checkpoint_dir,
                     "directory for per-subtree checkpoint files");
  search->add_flag("--resume", resume, "reuse existing checkpoint files");
  search->add_flag("--prune", prune,
                   "skip subtrees above the conjectured edge bound "
                   "(total_graphs then excludes the pruned classes)");
  search->add_flag("--parallel", parallel,
                   "process subtrees on OpenMP threads (OMP_NUM_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      if (check_input.empty()) return cmd_check(std::cin, std::cout);
      std::ifstream in(check_input);
      if (!in) {
        std::cerr << "cannot open " << check_input << "\n";
        return 2;
      }
      return cmd_check(in, std::cout);
    }

    if (family->parsed()) {
      auto need = [&](std::size_t k) {
        if (fam_params.size() != k)
          throw CLI::ValidationError("family",
                                     fam_name + " takes " + std::to_string(k) +
                                         " parameter(s)");
      };
      std::vector<d2c::Graph> out;
      if (fam_name == "kab") {
        need(2);
        out.push_back(d2c::complete_bipartite(fam_params[0], fam_params[1]));
      } else if (fam_name == "c5plus") {
        need(3);
        out.push_back(d2c::c5_expansion(
            {fam_params[0], fam_params[1], fam_params[2]}, fam_relaxed));
      } else if (fam_name == "t") {
        need(1);
        out.push_back(d2c::t_family(fam_params[0]));
      } else if (fam_name == "tprime") {
        need(1);
        out = d2c::tprime_members(fam_params[0]);
      } else if (fam_name == "conclusion") {
        need(1);
        out.push_back(d2c::conclusion_construction(fam_params[0]));
      } else if (fam_name == "h5") {
        need(0);
        out.push_back(d2c::h5());
      } else {
        throw CLI::ValidationError("family", "unknown family " + fam_name);
      }
      for (const d2c::Graph& g : out) std::cout << d2c::to_graph6(g) << "\n";
      return 0;
    }

    // search
    d2c::CensusOptions options;
    options.prune_edge_bound = prune;
    d2c::SearchReport report;

    if (!merge_files.empty()) {
      std::vector<d2c::SearchReport> parts;
      for (const std::string& f : merge_files) {
        std::ifstream in(f);
        if (!in) {
          std::cerr << "cannot open " << f << "\n";
          return 2;
        }
        parts.push_back(report_from_json(json::parse(in)));
      }
      report = d2c::merge(parts);
    } else if (shards == 1 && shard_id < 0 && checkpoint_dir.empty() &&
               depth < 0) {
      report = parallel ? d2c::census_parallel(n, options)
                        : d2c::census(n, options);
    } else {
      if (shards < 1 || shard_id >= shards) {
        std::cerr << "invalid --shards/--shard combination\n";
        return 2;
      }
      if (depth < 0) depth = std::min(4, n - 1);
      std::vector<d2c::ShardDescriptor> descs = d2c::shard(n, depth);
      std::vector<d2c::ShardDescriptor> mine;
      for (const d2c::ShardDescriptor& d : descs)
        if (shard_id < 0 || d.root_index % shards == shard_id)
          mine.push_back(d);

      std::vector<d2c::SearchReport> parts(mine.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
      for (std::size_t i = 0; i < mine.size(); ++i) {
        std::string cp;
        if (!checkpoint_dir.empty())
          cp = checkpoint_dir + "/shard_" + std::to_string(n) + "_" +
               std::to_string(depth) + "_" +
               std::to_string(mine[i].root_index) + ".json";
        if (resume && !cp.empty() && std::filesystem::exists(cp)) {
          std::ifstream in(cp);
          parts[i] = report_from_json(json::parse(in));
          continue;
        }
        parts[i] = d2c::census_shard(mine[i], options);
        if (!cp.empty()) {
          std::ofstream outf(cp);
          outf << report_to_json(parts[i]).dump(2) << "\n";
        }
      }
      report = shard_id < 0 ? d2c::merge(parts) : accumulate(parts);
    }

    json j = report_to_json(report);
    if (out_file.empty()) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::ofstream outf(out_file);
      outf << j.dump(2) << "\n";
    }
    if (!witness_file.empty()) {
      std::ofstream wf(witness_file);
      for (const std::string& w : report.witnesses) wf << w << "\n";
    }
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
