#include "braidsplice/golden.hpp"

#include <set>

#include "braidsplice/latticeiso.hpp"
#include "braidsplice/richardson.hpp"
#include "braidsplice/symmat.hpp"

namespace bsp {

Json load_fixture(const std::string& name, const std::string& dir) { return read_json_file(dir + "/" + name); }

namespace {

BraidWord braid_of(const Json& fx) {
  return BraidWord(fx.at("k").get<int>(), fx.at("beta").get<std::vector<int>>());
}

RationalFunction rf(const Json& j) { return RationalFunction::parse(j.get<std::string>()); }

void expect(CheckReport& r, bool ok, const std::string& what) {
  ++r.instances;
  if (!ok) r.fail(what);
}

// runs f, turning library errors into a failure line
template <class F>
CheckReport guarded(const char* name, F f) {
  CheckReport r{name, 0, {}, {}};
  try {
    f(r);
  } catch (const std::exception& e) {
    r.fail(std::string("error: ") + e.what());
  }
  return r;
}

std::set<std::array<int, 3>> arrow_set(const Quiver& q) {
  auto a = q.arrows();
  return {a.begin(), a.end()};
}

// lower-left justified minor of size i
RationalFunction lower_left(const SymMatrix& m, int i) {
  int k = m.rows();
  return minor(m, interval(k - i + 1, k), interval(1, i));
}

}  // namespace

CheckReport golden_braid_matrix(const Json& fx) {
  return guarded("braid-matrix", [&](CheckReport& r) {
    BraidWord b = braid_of(fx).prefix(fx.at("r1").get<int>());
    SymMatrix m = braid_word_matrix(b, var_range('z', 1, b.size()));
    const Json& want = fx.at("matrix");
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        expect(r, m(i, j) == rf(want[i][j]), "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    expect(r, demazure_product(b) == Permutation(fx.at("demazure_of_prefix").get<std::vector<int>>()),
           "Demazure product of the prefix");
  });
}

CheckReport golden_cluster_variables(const Json& fx) {
  return guarded("cluster-variables", [&](CheckReport& r) {
    BraidWord b = braid_of(fx);
    int k = b.k();
    std::map<std::string, RationalFunction> named;
    for (auto& v : fx.at("cluster_variables")) {
      int p = v.at("crossing").get<int>();
      SymMatrix m = braid_word_matrix(b.prefix(p), var_range('z', 1, p));
      RationalFunction x = lower_left(m, b[p]);
      std::string name = v.at("name").get<std::string>();
      named.emplace(name, x);
      expect(r, x == rf(v.at("expr")), name + " at crossing " + std::to_string(p));
      r.data.push_back({name, x.str()});
    }
    int r1 = fx.at("r1").get<int>();
    SymMatrix m1 = braid_word_matrix(b.prefix(r1), var_range('z', 1, r1));
    const Json& chart = fx.at("chart_minors");
    for (int i = 1; i < k; ++i) {
      std::string name = chart[i - 1].get<std::string>();
      expect(r, named.count(name) && lower_left(m1, i) == named.at(name),
             "lower-left minor of size " + std::to_string(i) + " vs " + name);
    }
  });
}

CheckReport golden_exchange_matrices(const Json& fx) {
  return guarded("exchange-matrices", [&](CheckReport& r) {
    Quiver q = quiver_from_json(fx.at("quiver"), "$.quiver");
    ExtendedExchangeMatrix full = extended_exchange_matrix(q);
    expect(r, full.b == fx.at("exchange_matrix").get<IntMatrix>(), "extended exchange matrix");
    ExtendedExchangeMatrix open = extended_exchange_matrix(freeze(q, fx.at("freeze").get<std::vector<int>>()));
    ExtendedExchangeMatrix open_fx = exchange_matrix_from_json(fx.at("open"), "$.open");
    expect(r, open.b == open_fx.b && open.row_labels == open_fx.row_labels, "matrix after freezing");
    ExtendedExchangeMatrix prod = direct_sum(exchange_matrix_from_json(fx.at("factor1"), "$.factor1"),
                                             exchange_matrix_from_json(fx.at("factor2"), "$.factor2"));
    expect(r, prod.b == fx.at("product").get<IntMatrix>(), "product matrix");
    expect(r, really_full_rank(open.b) && really_full_rank(prod.b), "really full rank");

    const Json& w = fx.at("witness");
    WitnessMatrix stated = identity_witness(w.at("n").get<int>(), w.at("m").get<int>());
    IntMatrix Q = w.at("Q").get<IntMatrix>();
    for (int i = 0; i < stated.m; ++i)
      for (int j = 0; j < stated.m; ++j) stated.R[stated.n + i][stated.n + j] = Q[i][j];
    expect(r, abs(stated.det_Q()) == 1, "stated Q is unimodular");
    expect(r, verify_witness(stated, open, prod), "stated witness verifies");

    WitnessSearch s = find_witness(open, prod, fx.at("search_bound").get<int>());
    expect(r, s.witness && verify_witness(*s.witness, open, prod), "find_witness: " + s.reason);
    if (s.witness) {
      r.data.push_back({"det_Q", s.witness->det_Q().get_str()});
      r.data.push_back({"R", Json(s.witness->R).dump()});
    }
  });
}

CheckReport golden_richardson(const Json& fx) {
  return guarded("richardson", [&](CheckReport& r) {
    int k = fx.at("k").get<int>();
    Permutation v = Permutation::parse(fx.at("v").get<std::string>(), k);
    Permutation w = Permutation::parse(fx.at("w").get<std::string>(), k);
    Permutation e = Permutation::identity(k);
    SCount s = s_count(v, w);
    expect(r, s.complete, "factorization certified");
    expect(r, s.s == fx.at("s").get<int>(), "s = " + std::to_string(s.s));
    expect(r, frozen_count(v, w) == fx.at("f").get<int>(), "f(v, w)");
    expect(r, frozen_count(e, w) == fx.at("f_e_w").get<int>(), "f(e, w)");
    expect(r, frozen_count(e, v) == fx.at("f_e_v").get<int>(), "f(e, v)");
    const Json& nm = fx.at("new_minor");
    bool found = false;
    for (auto& m : s.minors)
      if (m.rows == nm.at("rows").get<std::vector<int>>()) found = m.minor == Polynomial::parse(nm.at("expr").get<std::string>());
    expect(r, found, "minor with the new factors");
    Seed seed = seed_from_json(fx.at("seed"), "$.seed");
    expect(r, mutate(seed, fx.at("mutate_at").get<int>()).var(fx.at("mutate_at").get<int>()) == rf(fx.at("mutated")),
           "mutation of the weave seed");
    r.data = {{"s", std::to_string(s.s)}, {"f", std::to_string(frozen_count(v, w))}};
  });
}

CheckReport golden_splice_monomials(const Json& fx) {
  return guarded("splice-monomials", [&](CheckReport& r) {
    BraidWord b = braid_of(fx);
    int r1 = fx.at("r1").get<int>();
    for (auto& [key, units] : fx.at("monomials").items()) {
      int l = std::stoi(key);
      LaurentMonomial want;
      for (int s : units.get<std::vector<int>>()) want.exps[make_var('u', s)] = -1;
      expect(r, splice_monomial(b, r1, l) == want, "m" + key + " (formula)");
      expect(r, splice_monomial_by_strands(b, r1, l) == want, "m" + key + " (strands)");
    }
    Quiver open = freeze(quiver_from_braid(b), fx.at("freeze").get<std::vector<int>>());
    Seed formal{open, {}};
    for (int j = 1; j <= open.n(); ++j) formal.x.push_back(RationalFunction::var(make_var('x', j)));
    std::vector<int> vertices;
    for (auto& [key, ratio] : fx.at("exchange_ratios").items()) {
      int v = std::stoi(key);
      vertices.push_back(v);
      expect(r, exchange_ratio(formal, v) == rf(ratio), "open exchange ratio at " + key);
    }
    CheckReport er = verify_exchange_ratios(b, r1, vertices);
    r.instances += er.instances;
    for (auto& f : er.failures) r.fail(f);
  });
}

CheckReport golden_intro_quiver(const Json& fx) {
  return guarded("intro-quiver", [&](CheckReport& r) {
    BraidWord b = braid_of(fx);
    int r1 = fx.at("r1").get<int>();
    Quiver q = quiver_from_braid(b);
    Quiver want = quiver_from_json(fx.at("quiver"), "$.quiver");
    expect(r, arrow_set(q) == arrow_set(want), "arrow set");
    expect(r, q.frozen() == want.frozen(), "frozen vertices");
    Quiver open = freeze(q, fx.at("freeze").get<std::vector<int>>());
    expect(r, mutable_part_is_union(open, {{quiver_from_braid(b.prefix(r1)), 0}, {quiver_from_braid(b.suffix_from(r1)), r1}}),
           "mutable part splits into the two factors");
  });
}

CheckReport golden_computing_m(const Json& fx) {
  return guarded("computing-m", [&](CheckReport& r) {
    BraidWord b = braid_of(fx);
    int r1 = fx.at("r1").get<int>(), l = fx.at("l").get<int>();
    LaurentMonomial want;
    for (int s : fx.at("units").get<std::vector<int>>()) want.exps[make_var('u', s)] = -1;
    expect(r, splice_monomial(b, r1, l) == want, "formula");
    expect(r, splice_monomial_by_strands(b, r1, l) == want, "strand tracing");
  });
}

CheckReport golden_quasi_cluster(const Json& fx) {
  return guarded("quasi-cluster", [&](CheckReport& r) {
    ExtendedExchangeMatrix src = exchange_matrix_from_json(fx.at("source"), "$.source");
    ExtendedExchangeMatrix tgt = exchange_matrix_from_json(fx.at("target"), "$.target");
    WitnessMatrix stated = witness_from_json(fx.at("witness"), "$.witness");
    expect(r, verify_witness(stated, src, tgt), "stated witness verifies");
    auto phi = variable_map_from_witness(stated, src, tgt);
    for (auto& [key, img] : fx.at("variable_map").items())
      expect(r, phi.at(std::stoi(key)).to_rf() == rf(img), "image of y" + key);
    WitnessSearch s = find_witness(src, tgt);
    expect(r, s.witness && verify_witness(*s.witness, src, tgt), "find_witness: " + s.reason);
  });
}

std::vector<CheckReport> run_golden(const std::string& dir) {
  std::vector<CheckReport> out;
  auto with = [&](const char* file, auto f) {
    try {
      out.push_back(f(load_fixture(file, dir)));
    } catch (const std::exception& e) {
      CheckReport r{file, 1, {}, {}};
      r.fail(e.what());
      out.push_back(r);
    }
  };
  with("long_example.json", golden_braid_matrix);
  with("long_example.json", golden_cluster_variables);
  with("exchange_matrix_example.json", golden_exchange_matrices);
  with("richardson_example.json", golden_richardson);
  with("intro_splice.json", golden_splice_monomials);
  with("intro_splice.json", golden_intro_quiver);
  with("computing_m.json", golden_computing_m);
  with("quasi_cluster.json", golden_quasi_cluster);
  return out;
}

}  // namespace bsp
