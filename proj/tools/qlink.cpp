#include "CLI11.hpp"
#include "json.hpp"

#include "qlink/oracle.hpp"
#include "qlink/tangle.hpp"
#include "qlink/thimble.hpp"
#include "qlink/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace qlink;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct OutputSink {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
  }
};

std::pair<int, int> parse_rank_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int r = std::stoi(text);
    return {r, r};
  }
  int lo = std::stoi(text.substr(0, dots));
  int hi = std::stoi(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty rank range " + text);
  return {lo, hi};
}

json laurent_json(const Laurent& p) { return json::parse(p.to_json()); }

json poly_out(const Laurent& p, const std::string& format) {
  if (format == "json") return laurent_json(p);
  return p.render();
}

int oracle_limit_from_env() {
  const char* env = std::getenv("QS_RECURSION_LIMIT");
  if (!env) return 16;
  return std::atoi(env);
}

int cmd_verify(char family, const std::string& ranks, const std::string& format,
               const std::string& out_path, const std::string& tamper) {
  auto [lo, hi] = parse_rank_range(ranks);
  json reports = json::array();
  bool all_pass = true;
  std::ostringstream text;
  for (int rank = lo; rank <= hi; ++rank) {
    MatrixSet ms = build_matrices(family_from_char(family), rank);
    if (tamper == "beta") {
      int m = ms.spec.m();
      ms.braid.set_entry(ms.braid.key(0, m), ms.braid.key(m - 1, 1), Laurent::zero());
    } else if (tamper == "fusion") {
      ms.fusion.zeta[0] = ms.fusion.zeta[0] * Laurent::parse("q");
    } else if (!tamper.empty()) {
      throw std::invalid_argument("unknown tamper target " + tamper);
    }
    VerifyReport rep = run_suite(ms);
    all_pass = all_pass && rep.all_pass();
    reports.push_back(json::parse(rep.to_json()));
    text << rep.spec_id << ":";
    for (const auto& c : rep.checks) {
      text << " " << c.name << "=" << (c.pass ? "pass" : "FAIL");
      if (!c.pass && !c.counterexample.empty()) text << "[" << c.counterexample << "]";
    }
    text << "\n";
  }
  OutputSink sink{out_path};
  sink.write(format == "json" ? reports.dump(2) : text.str());
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_invariant(char family, int rank, const std::optional<std::string>& braid, int strands,
                  const std::optional<std::string>& tape_path, const std::string& format,
                  const std::string& out_path) {
  if (braid.has_value() == tape_path.has_value())
    throw CLI::ValidationError("exactly one of --braid and --tape is required");
  MatrixSet ms = build_matrices(family_from_char(family), rank);
  json j;
  std::ostringstream text;
  if (braid) {
    BraidWord w = parse_braid(*braid, strands);
    Laurent raw = evaluate_tape(ms, closure_tape(w));
    Laurent norm = ms.spec.alpha().pow(-writhe(w)) * raw;
    j = {{"family", std::string(1, family)}, {"rank", rank},     {"braid", *braid},
         {"strands", strands},               {"writhe", writhe(w)}};
    j["raw"] = poly_out(raw, format);
    j["normalized"] = poly_out(norm, format);
    text << "raw: " << raw.render() << "\n"
         << "writhe: " << writhe(w) << "\n"
         << "normalized: " << norm.render() << "\n";
  } else {
    std::ifstream f(*tape_path);
    if (!f) throw std::runtime_error("cannot read tape file " + *tape_path);
    std::stringstream buf;
    buf << f.rdbuf();
    Tape tape = Tape::parse(buf.str());
    Laurent raw = evaluate_tape(ms, tape);
    j = {{"family", std::string(1, family)}, {"rank", rank}, {"tape", *tape_path}};
    j["raw"] = poly_out(raw, format);
    text << "raw: " << raw.render() << "\n";
  }
  OutputSink sink{out_path};
  sink.write(format == "json" ? j.dump(2) : text.str());
  return kExitOk;
}

int cmd_compare(char family, int rank, const std::string& braid, int strands,
                const std::string& format, const std::string& out_path) {
  MatrixSet ms = build_matrices(family_from_char(family), rank);
  BraidWord w = parse_braid(braid, strands);
  Laurent tensor = evaluate_tape(ms, closure_tape(w));
  OracleOptions opt;
  opt.crossing_limit = oracle_limit_from_env();
  Laurent oracle = kauffman_poly(braid_to_pd(w), SkeinParams::from_spec(ms.spec), opt);
  bool equal = tensor == oracle;
  json j = {{"family", std::string(1, family)},
            {"rank", rank},
            {"braid", braid},
            {"equal", equal}};
  j["tensor"] = poly_out(tensor, format);
  j["oracle"] = poly_out(oracle, format);
  std::ostringstream text;
  text << "tensor: " << tensor.render() << "\n"
       << "oracle: " << oracle.render() << "\n"
       << "verdict: " << (equal ? "equal" : "DIFFER") << "\n";
  OutputSink sink{out_path};
  sink.write(format == "json" ? j.dump(2) : text.str());
  return equal ? kExitOk : kExitVerifyFail;
}

int cmd_oracle(char family, int rank, const std::string& pd_arg, const std::string& format,
               const std::string& out_path) {
  std::string pd_text = pd_arg;
  if (!pd_arg.empty() && pd_arg[0] == '@') {
    std::ifstream f(pd_arg.substr(1));
    if (!f) throw std::runtime_error("cannot read PD file " + pd_arg.substr(1));
    std::stringstream buf;
    buf << f.rdbuf();
    pd_text = buf.str();
  }
  PlanarDiagram d = parse_pd(pd_text);
  AlgebraSpec spec = AlgebraSpec::make(family_from_char(family), rank);
  OracleOptions opt;
  opt.crossing_limit = oracle_limit_from_env();
  Laurent value = kauffman_poly(d, SkeinParams::from_spec(spec), opt);
  OutputSink sink{out_path};
  if (format == "json") {
    json j = {{"family", std::string(1, family)}, {"rank", rank}};
    j["value"] = laurent_json(value);
    sink.write(j.dump(2));
  } else {
    sink.write(value.render() + "\n");
  }
  return kExitOk;
}

int cmd_tabulate(char family, int rank, const std::string& input_path,
                 const std::string& out_path) {
  if (out_path.empty()) throw CLI::ValidationError("tabulate requires --out");
  std::ifstream in(input_path);
  if (!in) throw std::runtime_error("cannot read knot file " + input_path);

  // names already present for this (family, rank)
  std::set<std::string> seen;
  {
    std::ifstream existing(out_path);
    std::string line;
    while (std::getline(existing, line)) {
      if (line.empty()) continue;
      try {
        json j = json::parse(line);
        if (j.value("family", "") == std::string(1, family) && j.value("rank", -1) == rank)
          seen.insert(j.value("name", ""));
      } catch (const json::parse_error&) {
        // foreign lines are left alone
      }
    }
  }

  MatrixSet ms = build_matrices(family_from_char(family), rank);
  std::ofstream out(out_path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);

  std::string line;
  size_t lineno = 0, added = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string name, strands_s, word;
    if (!std::getline(ls, name, '\t') || !std::getline(ls, strands_s, '\t') ||
        !std::getline(ls, word)) {
      std::cerr << "warning: line " << lineno << ": expected name<TAB>strands<TAB>word\n";
      continue;
    }
    if (seen.count(name)) continue;
    try {
      BraidWord w = parse_braid(word, std::stoi(strands_s));
      Laurent raw = evaluate_tape(ms, closure_tape(w));
      Laurent norm = ms.spec.alpha().pow(-writhe(w)) * raw;
      json rec = {{"name", name},        {"family", std::string(1, family)},
                  {"rank", rank},        {"writhe", writhe(w)},
                  {"raw", raw.render()}, {"normalized", norm.render()}};
      out << rec.dump() << "\n";
      seen.insert(name);
      ++added;
    } catch (const std::exception& e) {
      std::cerr << "warning: line " << lineno << " (" << name << "): " << e.what() << "\n";
    }
  }
  std::cerr << "tabulated " << added << " new records\n";
  return kExitOk;
}

int cmd_thimble(double b, const std::string& a_list, bool locate, const std::string& out_path) {
  std::ostringstream out;
  if (locate) {
    double wall = locate_wall(b);
    out << "wall_at," << wall << "\n";
  }
  std::vector<double> a_values;
  std::stringstream ss(a_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) a_values.push_back(std::stod(tok));
  }
  if (!a_values.empty()) {
    out << "a,connected,jplus_sectors,jminus_sectors,max_im_drift\n";
    for (const ScanEntry& e : stokes_scan(a_values, b)) {
      out << e.a << "," << (e.connected ? 1 : 0) << "," << e.jplus[0].sector << "|"
          << e.jplus[1].sector << "," << e.jminus[0].sector << "|" << e.jminus[1].sector << ","
          << e.max_im_drift << "\n";
    }
  }
  OutputSink sink{out_path};
  sink.write(out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact braiding/fusion matrices, link invariants and the Kauffman oracle"};
  app.require_subcommand(1);

  std::string format = "text", out_path;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write output to this path");
  app.fallthrough();  // global flags may follow the subcommand

  // verify
  auto* verify = app.add_subcommand("verify", "run the exact identity suite");
  std::string v_family = "B", v_ranks = "1..3", v_tamper;
  verify->add_option("--family", v_family, "B, C or D")->required();
  verify->add_option("--ranks", v_ranks, "rank or range, e.g. 2 or 1..3")->required();
  verify->add_option("--tamper", v_tamper, "corrupt an entry first (test hook)");

  // invariant
  auto* invariant = app.add_subcommand("invariant", "evaluate <K> for a braid closure or tape");
  std::string i_family = "B";
  int i_rank = 1, i_strands = 1;
  std::optional<std::string> i_braid, i_tape;
  invariant->add_option("--family", i_family)->required();
  invariant->add_option("--rank", i_rank)->required();
  invariant->add_option("--braid", i_braid, "braid word, e.g. \"1 -2 1 -2\"");
  invariant->add_option("--strands", i_strands);
  invariant->add_option("--tape", i_tape, "path to a Morse-event tape file");

  // compare
  auto* compare = app.add_subcommand("compare", "tensor value vs skein oracle");
  std::string c_family = "B", c_braid;
  int c_rank = 1, c_strands = 2;
  compare->add_option("--family", c_family)->required();
  compare->add_option("--rank", c_rank)->required();
  compare->add_option("--braid", c_braid)->required();
  compare->add_option("--strands", c_strands)->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Kauffman polynomial of a PD code");
  std::string o_family = "B", o_pd;
  int o_rank = 1;
  oracle->add_option("--family", o_family)->required();
  oracle->add_option("--rank", o_rank)->required();
  oracle->add_option("--pd", o_pd, "PD JSON, or @file")->required();

  // tabulate
  auto* tabulate = app.add_subcommand("tabulate", "batch-evaluate a knot table into JSONL");
  std::string t_family = "B", t_input;
  int t_rank = 1;
  tabulate->add_option("--family", t_family)->required();
  tabulate->add_option("--rank", t_rank)->required();
  tabulate->add_option("--input", t_input, "name<TAB>strands<TAB>word per line")->required();

  // thimble
  auto* thimble = app.add_subcommand("thimble", "Airy-model Stokes scan");
  double th_b = 1.0;
  std::string th_a = "";
  bool th_locate = false;
  thimble->add_option("--b", th_b, "imaginary part of lambda (nonzero)");
  thimble->add_option("--a-list", th_a, "comma-separated a values to scan");
  thimble->add_flag("--locate-wall", th_locate, "bisect for the Stokes wall");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(v_family[0], v_ranks, format, out_path, v_tamper);
    if (invariant->parsed())
      return cmd_invariant(i_family[0], i_rank, i_braid, i_strands, i_tape, format, out_path);
    if (compare->parsed())
      return cmd_compare(c_family[0], c_rank, c_braid, c_strands, format, out_path);
    if (oracle->parsed()) return cmd_oracle(o_family[0], o_rank, o_pd, format, out_path);
    if (tabulate->parsed()) return cmd_tabulate(t_family[0], t_rank, t_input, out_path);
    if (thimble->parsed()) return cmd_thimble(th_b, th_a, th_locate, out_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const MalformedPD& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InconsistentEdges& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const GeneratorOutOfRange& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
