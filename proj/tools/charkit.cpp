// charkit: character tables, product decompositions and corpus verification.
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "charkit/character.hpp"
#include "charkit/error.hpp"
#include "charkit/io.hpp"
#include "charkit/orbits.hpp"
#include "charkit/product_lab.hpp"
#include "charkit/simd/kernels.hpp"
#include "charkit/verify.hpp"

namespace {

using namespace charkit;

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kBadInput = 2;

// "7" or "conj(7)"
std::size_t parse_character(const std::string& arg, const CharacterTable& t) {
  std::string body = arg;
  bool conj = false;
  if (body.rfind("conj(", 0) == 0 && body.size() > 6 && body.back() == ')') {
    conj = true;
    body = body.substr(5, body.size() - 6);
  }
  std::size_t pos = 0, idx = 0;
  try {
    idx = std::stoul(body, &pos);
  } catch (const std::exception&) {
    throw InputError("bad character index: " + arg);
  }
  if (pos != body.size() || idx >= t.size()) throw InputError("bad character index: " + arg);
  return conj ? t.conjugate_index(idx) : idx;
}

struct Args {
  std::string group, chi, psi, alpha, action, corpus = "builtin", theorems = "chains,coprime,supersolvable,lemmas,linear";
  std::string format = "jsonl", output;
  std::size_t max_order = 0, threads = 0;
};

int run_table(const Args& a) {
  const GroupPtr g = load_group(a.group);
  std::cout << table_to_json(character_table(g)).dump(2) << '\n';
  return kOk;
}

int run_decompose(const Args& a) {
  const GroupPtr g = load_group(a.group);
  const CharacterTable t = character_table(g);
  const std::size_t chi = parse_character(a.chi, t), psi = parse_character(a.psi, t);
  const Decomposition d = decompose(product(t[chi], t[psi]), t);
  Json j = decomposition_to_json(d, t);
  j["chi"] = chi;
  j["psi"] = psi;
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int run_chains(const Args& a) {
  Lab lab(load_group(a.group));
  const auto& t = lab.table();
  const std::size_t chi = parse_character(a.chi, t), psi = parse_character(a.psi, t);
  const std::size_t alpha = parse_character(a.alpha, t);
  if (!decompose(product(t[chi], t[psi]), t).contains(alpha))
    throw InputError("alpha is not a constituent of chi psi");
  Json j = chain_to_json(lab, build_chain(lab, chi, psi, alpha));
  j["chi"] = chi;
  j["psi"] = psi;
  j["alpha"] = alpha;
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int run_orbits(const Args& a) {
  std::cout << orbits_to_json(orbit_count(load_action_file(a.action))).dump(2) << '\n';
  return kOk;
}

int run_verify(const Args& a) {
  VerifyOptions opts;
  opts.corpus = a.corpus;
  opts.checks = parse_theorems(a.theorems);
  opts.max_order = a.max_order;
  opts.threads = a.threads;
  ReportFormat fmt = ReportFormat::JsonLines;
  if (a.format == "tsv")
    fmt = ReportFormat::Tsv;
  else if (a.format != "jsonl")
    throw InputError("unknown format: " + a.format);
  const VerifyReport report = run_verification(opts);
  bool ok = true;
  if (a.output.empty()) {
    ok = write_report(report, std::cout, fmt);
  } else {
    std::ofstream out(a.output);
    if (!out) throw InputError("cannot write " + a.output);
    ok = write_report(report, out, fmt);
  }
  if (!ok) {
    std::cerr << "counterexample: " << record_to_json(report.records[*report.first_failure]).dump() << '\n';
    return kCounterexample;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charkit: exact character tables and product-of-characters checks"};
  app.require_subcommand(1);
  Args a;
  std::string simd = "auto";
  app.add_option("--simd", simd, "Kernel set: auto, scalar or avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto* table = app.add_subcommand("table", "Print the character table of a group");
  table->add_option("group", a.group, "group.json or family spec")->required();

  auto* dec = app.add_subcommand("decompose", "Decompose chi psi into irreducibles");
  dec->add_option("group", a.group, "group.json or family spec")->required();
  dec->add_option("--chi", a.chi, "Index, or conj(index)")->required();
  dec->add_option("--psi", a.psi, "Index, or conj(index)")->required();

  auto* ver = app.add_subcommand("verify", "Check the product bounds over a corpus");
  ver->add_option("--corpus", a.corpus, "'builtin' or a directory of group files");
  ver->add_option("--theorems", a.theorems, "Comma list of chains, coprime, supersolvable, lemmas, linear");
  ver->add_option("--max-order", a.max_order, "Skip groups above this order");
  ver->add_option("--format", a.format, "jsonl or tsv");
  ver->add_option("--output,-o", a.output, "Report file (default stdout)");
  ver->add_option("--threads", a.threads, "Worker threads (0 = all cores)");

  auto* ch = app.add_subcommand("chains", "Print the descending chain for (chi, psi, alpha)");
  ch->add_option("group", a.group, "group.json or family spec")->required();
  ch->add_option("--chi", a.chi, "Index, or conj(index)")->required();
  ch->add_option("--psi", a.psi, "Index, or conj(index)")->required();
  ch->add_option("--alpha", a.alpha, "Constituent index")->required();

  auto* orb = app.add_subcommand("orbits", "Count orbits on nonzero vectors");
  orb->add_option("action", a.action, "action.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (simd != "auto" && !simd::set_active(simd == "avx2" ? simd::Isa::Avx2 : simd::Isa::Scalar)) {
      std::cerr << "error: " << simd << " kernels are not available on this machine\n";
      return kBadInput;
    }
    if (*table) return run_table(a);
    if (*dec) return run_decompose(a);
    if (*ver) return run_verify(a);
    if (*ch) return run_chains(a);
    if (*orb) return run_orbits(a);
  } catch (const TheoremViolation& e) {
    std::cerr << "counterexample: " << e.what() << '\n';
    return kCounterexample;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
