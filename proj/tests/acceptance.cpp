// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>

#include "braidsplice/golden.hpp"
#include "braidsplice/latticeiso.hpp"
#include "braidsplice/properties.hpp"
#include "braidsplice/splice.hpp"

using namespace bsp;

namespace {

const char* kIntro = "3 3 2 2 1 3 2 1 1 3 2 1 2 3 2 1";
const int kIntroSplit = 9;

struct Outcome {
  int instances = 0;
  std::vector<std::string> failures;
  void add(const CheckReport& r) {
    instances += r.instances;
    for (auto& f : r.failures) failures.push_back(r.check + ": " + f);
  }
};

// braids for the transport criterion: k in {2, 3}, length 2..8
std::vector<BraidWord> random_braids(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BraidWord> out;
  for (int t = 0; t < count; ++t) {
    int k = 2 + static_cast<int>(rng() % 2);
    int len = 2 + static_cast<int>(rng() % 7);
    std::vector<int> l;
    for (int i = 0; i < len; ++i) l.push_back(1 + static_cast<int>(rng() % (k - 1)));
    out.emplace_back(k, l);
  }
  return out;
}

std::vector<BraidWord> transport_braids() { return random_braids(20, 2024); }

int failed = 0;

void criterion(int n, const char* what, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.failures.push_back(std::string("error: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) o.failures.push_back("took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
  bool ok = o.failures.empty();
  failed += !ok;
  std::printf("%s %2d %-34s instances=%-6d %.2fs\n", ok ? "PASS" : "FAIL", n, what, o.instances, s);
  for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::printf("     %s\n", o.failures[i].c_str());
  if (o.failures.size() > 10) std::printf("     ... %zu more\n", o.failures.size() - 10);
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "braid matrix", 1, [](Outcome& o) { o.add(golden_braid_matrix(load_fixture("long_example.json"))); });
  criterion(2, "cluster variables", 1,
            [](Outcome& o) { o.add(golden_cluster_variables(load_fixture("long_example.json"))); });
  criterion(3, "exchange matrices and witness", 10,
            [](Outcome& o) { o.add(golden_exchange_matrices(load_fixture("exchange_matrix_example.json"))); });
  criterion(4, "richardson counts", 1,
            [](Outcome& o) { o.add(golden_richardson(load_fixture("richardson_example.json"))); });
  criterion(5, "splice monomials, exchange ratios", 30,
            [](Outcome& o) { o.add(golden_splice_monomials(load_fixture("intro_splice.json"))); });
  criterion(6, "quiver and freezing", 1,
            [](Outcome& o) { o.add(golden_intro_quiver(load_fixture("intro_splice.json"))); });
  criterion(7, "strand tracing vs formula", 1,
            [](Outcome& o) { o.add(golden_computing_m(load_fixture("computing_m.json"))); });

  criterion(8, "symbolic property suite", 120, [](Outcome& o) {
    o.add(check_slide_identity(100, 81));
    o.add(check_cauchy_binet(100, 82));
    o.add(check_lu_reconstruction(100, 83));
    o.add(check_delta_closed_form(5));
    o.add(check_mutation_involution(100, 85));
    o.add(check_demazure_two_way(100, 86));
    CheckReport three = check_three_way(4);
    if (three.instances != 576) o.failures.push_back("three-way: expected 576 pairs");
    o.add(three);
  });

  criterion(9, "round trips and diagrams", 300, [](Outcome& o) {
    BraidWord intro = BraidWord::parse(kIntro, 4);
    o.add(verify_dbs_round_trips(intro, kIntroSplit, 100, 91));
    BraidWord small(3, {1, 2, 2, 1, 2});
    for (int r1 = 1; r1 < small.size(); ++r1) o.add(verify_dbs_round_trips(small, r1, 100, 92 + r1));
    BraidWord b8 = BraidWord::parse("1 2 1 1 2 1 2 1", 3);
    for (int r1 = 1; r1 < b8.size(); ++r1) o.add(verify_braid_round_trips(b8, r1, 100, 100 + r1));
    for (int r1 = 1; r1 < small.size(); ++r1) o.add(verify_compat_diagrams(small, r1, 100, 110 + r1));
    o.add(verify_compat_diagrams(intro, kIntroSplit, 20, 120));
  });

  criterion(10, "variable transport", 300, [](Outcome& o) {
    o.add(verify_variable_transport(BraidWord::parse(kIntro, 4), kIntroSplit));
    for (const auto& b : transport_braids())
      for (int r1 = 1; r1 < b.size(); ++r1) o.add(verify_variable_transport(b, r1));
  });

  criterion(11, "frozen bookkeeping and witnesses", 600, [](Outcome& o) {
    o.add(verify_product_witness(BraidWord::parse(kIntro, 4), kIntroSplit));
    for (const auto& b : transport_braids())
      for (int r1 = 1; r1 < b.size(); ++r1) o.add(verify_product_witness(b, r1));
  });

  std::printf("%s\n", failed ? "acceptance: FAIL" : "acceptance: PASS");
  return failed ? 1 : 0;
}
