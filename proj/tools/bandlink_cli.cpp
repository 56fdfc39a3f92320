// Command-line front end over the bandlink library.
//
// Exit codes: 0 = yes/success, 1 = no, 2 = inconclusive, 64 = usage error,
// 65 = input/computation error (details as one JSON object on stderr).
// Every path argument accepts "-" for stdin/stdout. JSON output has sorted
// keys and a trailing newline so pipelines and golden files are byte-stable.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bandlink/bandlink.hpp"

namespace {

std::string read_all(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) bandlink::fail(bandlink::ErrorCode::ParseError, "cannot open input file: " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

void write_all(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) bandlink::fail(bandlink::ErrorCode::ParseError, "cannot open output file: " + path);
  f << data;
  if (!f) bandlink::fail(bandlink::ErrorCode::ParseError, "write failed: " + path);
}

std::string json_line(const nlohmann::json& j) { return j.dump() + "\n"; }

int exit_for(const bandlink::Verdict& v) {
  switch (v.status) {
    case bandlink::Status::Yes: return 0;
    case bandlink::Status::No: return 1;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Band-calculus toolkit: Milnor links, mu-bar invariants, Brunnian classification"};
  app.require_subcommand(1);

  int gen_n = 0;
  std::string gen_out = "-";
  CLI::App* gen = app.add_subcommand("gen-milnor", "Write the chord presentation of the n-component Milnor link");
  gen->add_option("n", gen_n, "component count")->required();
  gen->add_option("out", gen_out, "output path or - (default -)");

  std::string re_in = "-", re_out = "-";
  CLI::App* re = app.add_subcommand("realize", "Realize a chord presentation JSON as a PD diagram");
  re->add_option("in", re_in, "presentation JSON path or -");
  re->add_option("out", re_out, "PD output path or -");

  std::string inv_in = "-";
  int inv_len = 0;
  CLI::App* inv = app.add_subcommand("invariants", "Print the length-k mu-bar report of a PD diagram");
  inv->add_option("in", inv_in, "PD path or -");
  inv->add_option("--length", inv_len, "index length k")->required();

  std::string br_in = "-";
  std::int64_t br_budget = 10000;
  std::uint64_t br_seed = 0;
  CLI::App* br = app.add_subcommand("is-brunnian", "Decide whether every proper sublink is trivial");
  br->add_option("in", br_in, "PD path or -");
  br->add_option("--budget", br_budget, "simplification move budget (default 10000)");
  br->add_option("--seed", br_seed, "seed for exploratory move shuffling (default 0)");

  std::string cmp_a, cmp_b;
  std::int64_t cmp_budget = 10000;
  std::uint64_t cmp_seed = 0;
  CLI::App* cmp = app.add_subcommand("compare", "Decide C_n-equivalence of two Brunnian diagrams");
  cmp->add_option("a", cmp_a, "first PD path or -")->required();
  cmp->add_option("b", cmp_b, "second PD path or -")->required();
  cmp->add_option("--budget", cmp_budget, "simplification move budget (default 10000)");
  cmp->add_option("--seed", cmp_seed, "seed for exploratory move shuffling (default 0)");

  std::string c2_a, c2_b;
  CLI::App* c2 = app.add_subcommand("c2-compare", "Compare linking matrices (C_2 classification)");
  c2->add_option("a", c2_a, "first PD path or -")->required();
  c2->add_option("b", c2_b, "second PD path or -")->required();

  std::string simp_in = "-", simp_out = "-";
  std::int64_t simp_budget = 10000;
  std::uint64_t simp_seed = 0;
  CLI::App* simp = app.add_subcommand("simplify", "Reduce a PD diagram with Reidemeister moves");
  simp->add_option("in", simp_in, "PD path or -");
  simp->add_option("out", simp_out, "PD output path or -");
  simp->add_option("--budget", simp_budget, "move budget (default 10000)");
  simp->add_option("--seed", simp_seed, "seed for exploratory move shuffling (default 0)");

  std::string tr_in = "-", tr_out = "-";
  CLI::App* tr = app.add_subcommand("trivialize", "Emit the deletion certificate of a normal-form presentation");
  tr->add_option("in", tr_in, "presentation JSON path or -");
  tr->add_option("out", tr_out, "certificate output path or -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  try {
    if (gen->parsed()) {
      bandlink::BandSumPresentation p = bandlink::milnor_link(gen_n);
      write_all(gen_out, json_line(bandlink::presentation_to_json(p)));
      return 0;
    }
    if (re->parsed()) {
      bandlink::BandSumPresentation p = bandlink::presentation_from_string(read_all(re_in));
      write_all(re_out, bandlink::serialize_pd(bandlink::realize(p)));
      return 0;
    }
    if (inv->parsed()) {
      bandlink::LinkDiagram d = bandlink::parse_pd(read_all(inv_in));
      write_all("-", json_line(bandlink::mu_report_to_json(bandlink::mu_vector(d, inv_len))));
      return 0;
    }
    if (br->parsed()) {
      bandlink::LinkDiagram d = bandlink::parse_pd(read_all(br_in));
      bandlink::SimplifyOptions opts;
      opts.move_budget = br_budget;
      opts.seed = br_seed;
      bandlink::Verdict v = bandlink::is_brunnian(d, opts);
      write_all("-", json_line(bandlink::verdict_to_json(v)));
      return exit_for(v);
    }
    if (cmp->parsed()) {
      bandlink::LinkDiagram a = bandlink::parse_pd(read_all(cmp_a));
      bandlink::LinkDiagram b = bandlink::parse_pd(read_all(cmp_b));
      bandlink::SimplifyOptions opts;
      opts.move_budget = cmp_budget;
      opts.seed = cmp_seed;
      bandlink::Verdict v = bandlink::cn_equivalent(a, b, opts);
      write_all("-", json_line(bandlink::verdict_to_json(v)));
      return exit_for(v);
    }
    if (c2->parsed()) {
      bandlink::LinkDiagram a = bandlink::parse_pd(read_all(c2_a));
      bandlink::LinkDiagram b = bandlink::parse_pd(read_all(c2_b));
      bandlink::Verdict v = bandlink::c2_classify(a, b);
      write_all("-", json_line(bandlink::verdict_to_json(v)));
      return exit_for(v);
    }
    if (simp->parsed()) {
      bandlink::LinkDiagram d = bandlink::parse_pd(read_all(simp_in));
      bandlink::SimplifyOptions opts;
      opts.move_budget = simp_budget;
      opts.seed = simp_seed;
      bandlink::SimplifyResult res = bandlink::simplify(d, opts);
      write_all(simp_out, bandlink::serialize_pd(res.diagram));
      return res.verdict == bandlink::SimplifyVerdict::minimal_reached ? 0 : 2;
    }
    if (tr->parsed()) {
      bandlink::BandSumPresentation p = bandlink::presentation_from_string(read_all(tr_in));
      write_all(tr_out, json_line(bandlink::certificate_to_json(bandlink::trivialize(p))));
      return 0;
    }
    return 64;
  } catch (const bandlink::Error& err) {
    nlohmann::json j{{"code", bandlink::error_name(err.code())}, {"message", err.message()}};
    if (!err.payload().empty()) {
      nlohmann::json p = nlohmann::json::parse(err.payload(), nullptr, false);
      j["payload"] = p.is_discarded() ? nlohmann::json(err.payload()) : p;
    }
    std::cerr << j.dump() << "\n";
    return 65;
  } catch (const std::exception& ex) {
    nlohmann::json j{{"code", "InternalError"}, {"message", ex.what()}};
    std::cerr << j.dump() << "\n";
    return 65;
  }
}
