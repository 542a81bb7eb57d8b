// braidsplice-cli: JSON front end for the library.
// Exit codes: 0 success, 1 a check failed, 2 usage or input error,
// 3 incomplete factorization.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "braidsplice/golden.hpp"
#include "braidsplice/io.hpp"
#include "braidsplice/latticeiso.hpp"
#include "braidsplice/properties.hpp"
#include "braidsplice/richardson.hpp"
#include "braidsplice/symmat.hpp"

using namespace bsp;

namespace {

struct Options {
  int k = 0;
  std::string word, w, v, u, pool, json_in, out, check, src, tgt, dot;
  int r1 = 0, samples = 20, bound = 3, depth = 3, vertex = 0;
  std::uint64_t seed = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BraidWord braid(const Options& o) {
  if (o.k < 2) throw UsageError("--k must be at least 2");
  return BraidWord::parse(o.word, o.k);
}

Permutation perm(const std::string& s, int k, const char* flag) {
  if (s.empty()) throw UsageError(std::string(flag) + " is required");
  return Permutation::parse(s, k);
}

int emit(const Options& o, const Json& j, int code = 0) {
  std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
  }
  return code;
}

int report(const Options& o, const CheckReport& r, Json extra = Json::object()) {
  Json j = to_json(r);
  for (auto& [k, v] : extra.items()) j[k] = v;
  return emit(o, j, r.ok() ? 0 : 1);
}

int cmd_demazure(const Options& o) {
  Json j;
  j["delta"] = to_json(demazure_product(braid(o)));
  return emit(o, j);
}

int cmd_braid_matrix(const Options& o) {
  BraidWord b = braid(o);
  Json j;
  j["k"] = b.k();
  j["beta"] = b.letters();
  j["matrix"] = to_json(braid_word_matrix(b, var_range('z', 1, b.size())));
  return emit(o, j);
}

void write_dot(const std::string& file, const Quiver& q) {
  std::ofstream f(file);
  if (!f) throw UsageError("cannot write " + file);
  f << "digraph quiver {\n";
  for (int v : q.frozen()) f << "  " << v << " [color=blue];\n";
  for (auto& a : q.arrows())
    f << "  " << a[0] << " -> " << a[1] << (a[2] > 1 ? " [label=" + std::to_string(a[2]) + "]" : "") << ";\n";
  f << "}\n";
}

int cmd_dbs_seed(const Options& o) {
  Seed s = dbs_seed(braid(o));
  if (!o.dot.empty()) write_dot(o.dot, s.quiver);
  return emit(o, to_json(s));
}

int cmd_mutate(const Options& o) {
  if (o.json_in.empty()) throw UsageError("--json-in is required");
  Seed s = seed_from_json(read_json_file(o.json_in));
  if (o.vertex < 1 || o.vertex > s.quiver.n()) throw UsageError("--vertex out of range");
  return emit(o, to_json(mutate(s, o.vertex)));
}

int cmd_splice(const Options& o) {
  BraidWord b = braid(o);
  if (o.w.empty()) return emit(o, to_json(dbs_splice_forward(b, o.r1)));
  Permutation w = perm(o.w, o.k, "--w");
  auto [t1, t2] = braid_splice_targets(b, o.r1, w);
  Json j;
  j["beta"] = b.letters();
  j["r1"] = o.r1;
  j["w"] = to_json(w);
  j["target1"] = t1.letters();
  j["target2"] = t2.letters();
  CheckReport r = verify_braid_round_trips(b, o.r1, o.samples, o.seed);
  j["seed"] = o.seed;
  j["round_trips"] = to_json(r);
  return emit(o, j, r.ok() ? 0 : 1);
}

int cmd_verify(const Options& o) {
  Json extra;
  extra["seed"] = o.seed;
  extra["samples"] = o.samples;
  const std::string& c = o.check;
  if (c == "slide") return report(o, check_slide_identity(o.samples, o.seed), extra);
  if (c == "cauchy-binet") return report(o, check_cauchy_binet(o.samples, o.seed), extra);
  BraidWord b = braid(o);
  if (c == "transport") return report(o, verify_variable_transport(b, o.r1), extra);
  if (c == "exchange-ratios") return report(o, verify_exchange_ratios(b, o.r1), extra);
  if (c == "compat-diagrams") return report(o, verify_compat_diagrams(b, o.r1, o.samples, o.seed), extra);
  throw UsageError("unknown check " + c);
}

std::vector<Polynomial> read_pool(const std::string& file) {
  std::vector<Polynomial> out;
  if (file.empty()) return out;
  std::ifstream f(file);
  if (!f) throw UsageError("cannot read " + file);
  std::string line;
  int n = 0;
  while (std::getline(f, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    try {
      out.push_back(Polynomial::parse(line));
    } catch (const Error& e) {
      throw ParseError(file + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

int cmd_richardson(const Options& o) {
  int k = o.k;
  if (k < 2) throw UsageError("--k must be at least 2");
  Permutation v = perm(o.v, k, "--v"), w = perm(o.w, k, "--w");
  auto hints = read_pool(o.pool);
  SCount s = s_count(v, w, hints);
  Json j;
  j["s"] = s.s;
  if (s.complete)
    j["f"] = frozen_count_base(w) - frozen_count_base(v) + s.s;
  else
    j["f"] = nullptr;
  j["incomplete"] = !s.complete;
  j["f_e_w"] = frozen_count_base(w);
  j["f_e_v"] = frozen_count_base(v);
  Json minors = Json::array();
  for (auto& m : s.minors) {
    Json e;
    e["i"] = m.i;
    e["rows"] = m.rows;
    e["minor"] = m.minor.str();
    Json fs = Json::array();
    for (auto& f : m.factors) {
      const char* kind = f.kind == FactorKind::Principal ? "principal" : f.kind == FactorKind::New ? "new" : "INCOMPLETE";
      fs.push_back({{"factor", f.factor.str()}, {"exponent", f.exponent}, {"kind", kind}});
    }
    e["factors"] = fs;
    minors.push_back(e);
  }
  j["minors"] = minors;
  return emit(o, j, s.complete ? 0 : 3);
}

int cmd_witness(const Options& o) {
  if (o.src.empty() || o.tgt.empty()) throw UsageError("source and target files are required");
  ExtendedExchangeMatrix src = exchange_matrix_from_json(read_json_file(o.src));
  ExtendedExchangeMatrix tgt = exchange_matrix_from_json(read_json_file(o.tgt));
  WitnessSearch s = o.depth > 0 ? find_witness_up_to_mutation(src, tgt, o.bound, o.depth) : find_witness(src, tgt, o.bound);
  Json j;
  j["bound"] = s.bound;
  j["depth"] = o.depth;
  j["nodes"] = s.nodes;
  if (!s.witness) {
    j["found"] = false;
    j["reason"] = s.reason;
    return emit(o, j, 1);
  }
  ExtendedExchangeMatrix t = tgt;
  for (int c : s.mutations) t = mutate(t, c);
  j["found"] = true;
  j["mutations"] = s.mutations;
  j["witness"] = to_json(*s.witness);
  j["verified"] = verify_witness(*s.witness, src, t);
  Json vm;
  for (auto& [label, m] : variable_map_from_witness(*s.witness, src, t)) vm[std::to_string(label)] = m.str();
  j["variable_map"] = vm;
  return emit(o, j, j["verified"].get<bool>() ? 0 : 1);
}

int cmd_golden(const Options& o) {
  auto reports = run_golden();
  Json j = Json::array();
  bool ok = true;
  for (auto& r : reports) {
    ok &= r.ok();
    Json e = to_json(r);
    e["status"] = r.ok() ? "PASS" : "FAIL";
    j.push_back(e);
  }
  Json out;
  out["all_pass"] = ok;
  out["checks"] = j;
  return emit(o, out, ok ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid varieties: splicing, cluster seeds and witness search"};
  app.require_subcommand(1);
  Options o;

  auto braid_flags = [&](CLI::App* c, bool need_word = true) {
    auto* k = c->add_option("--k", o.k, "number of strands");
    auto* w = c->add_option("--word", o.word, "braid word, letters 1..k-1");
    if (need_word) {
      k->required();
      w->required();
    }
  };
  auto out_flag = [&](CLI::App* c) { c->add_option("--out", o.out, "write JSON here instead of stdout"); };

  auto* demazure = app.add_subcommand("demazure", "Demazure product of a braid word");
  braid_flags(demazure);
  auto* matrix = app.add_subcommand("braid-matrix", "symbolic braid matrix B_beta(z)");
  braid_flags(matrix);
  auto* seed = app.add_subcommand("dbs-seed", "quiver and cluster variables of the braid diagram");
  braid_flags(seed);
  seed->add_option("--dot", o.dot, "also write the quiver as a graph description");
  auto* mut = app.add_subcommand("mutate", "mutate a seed file at a vertex");
  mut->add_option("--json-in", o.json_in, "seed file")->required();
  mut->add_option("--vertex", o.vertex, "mutable vertex")->required();
  auto* splice = app.add_subcommand("splice", "splice a braid word after r1 letters");
  braid_flags(splice);
  splice->add_option("--r1", o.r1, "letters in the first factor")->required();
  splice->add_option("--w", o.w, "chart permutation; omit for the double Bott-Samelson splice");
  splice->add_option("--samples", o.samples, "round-trip samples");
  splice->add_option("--seed", o.seed, "random seed");
  auto* verify = app.add_subcommand("verify", "run a named check");
  verify->add_option("check", o.check, "transport | exchange-ratios | compat-diagrams | slide | cauchy-binet")
      ->required()
      ->check(CLI::IsMember({"transport", "exchange-ratios", "compat-diagrams", "slide", "cauchy-binet"}));
  braid_flags(verify, false);
  verify->add_option("--r1", o.r1, "letters in the first factor");
  verify->add_option("--samples", o.samples, "random instances");
  verify->add_option("--seed", o.seed, "random seed");
  auto* rich = app.add_subcommand("richardson", "frozen counts of an open Richardson variety");
  rich->add_option("--k", o.k, "size of the permutations")->required();
  rich->add_option("--v", o.v, "lower permutation")->required();
  rich->add_option("--w", o.w, "upper permutation")->required();
  rich->add_option("--pool", o.pool, "file of hint polynomials, one per line");
  auto* wit = app.add_subcommand("witness", "search for a quasi-isomorphism witness");
  wit->add_option("source", o.src, "source exchange matrix or quiver (JSON)")->required();
  wit->add_option("target", o.tgt, "target exchange matrix or quiver (JSON)")->required();
  wit->add_option("--bound", o.bound, "entry bound of the search box");
  wit->add_option("--depth", o.depth, "mutation depth for the target (0 = none)");
  auto* gold = app.add_subcommand("golden", "check the worked examples in fixtures/paper");
  for (auto* c : {demazure, matrix, seed, mut, splice, verify, rich, wit, gold}) out_flag(c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (demazure->parsed()) return cmd_demazure(o);
    if (matrix->parsed()) return cmd_braid_matrix(o);
    if (seed->parsed()) return cmd_dbs_seed(o);
    if (mut->parsed()) return cmd_mutate(o);
    if (splice->parsed()) return cmd_splice(o);
    if (verify->parsed()) return cmd_verify(o);
    if (rich->parsed()) return cmd_richardson(o);
    if (wit->parsed()) return cmd_witness(o);
    if (gold->parsed()) return cmd_golden(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PrincipalMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const FrozenVertex& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const IncompleteFactorization& e) {
    std::cerr << "incomplete: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
