#include "braidsplice/io.hpp"

#include <fstream>
#include <sstream>

namespace bsp {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Point& p) {
  Json a = Json::array();
  for (auto& r : p) a.push_back(r.str());
  return a;
}

Json to_json(const SymMatrix& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    a.push_back(row);
  }
  return a;
}

Json to_json(const Permutation& w) {
  Json a = Json::array();
  for (int i = 1; i <= w.k(); ++i) a.push_back(w(i));
  return a;
}

Json to_json(const Quiver& q) {
  Json j;
  j["n"] = q.n();
  j["frozen"] = q.frozen();
  Json arrows = Json::array();
  for (auto& a : q.arrows()) arrows.push_back({a[0], a[1], a[2]});
  j["arrows"] = arrows;
  return j;
}

Json to_json(const Seed& s) {
  Json j;
  j["quiver"] = to_json(s.quiver);
  Json v = Json::array();
  for (auto& x : s.x) v.push_back(x.str());
  j["variables"] = v;
  return j;
}

Json to_json(const ExtendedExchangeMatrix& e) {
  Json j;
  j["row_labels"] = e.row_labels;
  j["n_mutable"] = e.n_mutable();
  j["matrix"] = e.b;
  return j;
}

Json to_json(const WitnessMatrix& w) {
  Json j;
  j["n"] = w.n;
  j["m"] = w.m;
  j["R"] = w.R;
  j["det_Q"] = w.det_Q().get_str();
  return j;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["instances"] = r.instances;
  j["failures"] = r.failures;
  Json w = Json::object();
  for (auto& [k, v] : r.data) w[k] = v;
  j["witness"] = w;
  return j;
}

Json to_json(const SpliceWitness& w) {
  Json j;
  j["beta"] = w.beta.letters();
  j["k"] = w.beta.k();
  j["r1"] = w.r1;
  if (w.w) j["w"] = to_json(*w.w);
  j["L1"] = to_json(w.L1);
  j["U1"] = to_json(w.U1);
  j["U1_out"] = to_json(w.U1_out);
  Json z = Json::array();
  for (auto& f : w.zprime) z.push_back(f.str());
  j["zprime"] = z;
  return j;
}

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing key \"") + key + "\"");
  return *it;
}

long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long>();
}

std::vector<long> int_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

IntMatrix int_matrix(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of rows");
  IntMatrix out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_array(j[i], path + "[" + std::to_string(i) + "]"));
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].size() != out[0].size()) bad(path + "[" + std::to_string(i) + "]", "ragged row");
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(path, "expected a rational as \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Quiver quiver_from_json(const Json& j, const std::string& path) {
  long n = as_int(field(j, "n", path), path + ".n");
  if (n < 0) bad(path + ".n", "negative vertex count");
  Quiver q(static_cast<int>(n));
  auto in_range = [&](long v, const std::string& p) {
    if (v < 1 || v > n) bad(p, "vertex " + std::to_string(v) + " out of range");
  };
  if (j.contains("frozen")) {
    auto f = int_array(j["frozen"], path + ".frozen");
    for (std::size_t i = 0; i < f.size(); ++i) {
      in_range(f[i], path + ".frozen[" + std::to_string(i) + "]");
      q.set_frozen(static_cast<int>(f[i]));
    }
  }
  const Json& arrows = field(j, "arrows", path);
  if (!arrows.is_array()) bad(path + ".arrows", "expected an array");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    std::string p = path + ".arrows[" + std::to_string(i) + "]";
    auto a = int_array(arrows[i], p);
    if (a.size() != 2 && a.size() != 3) bad(p, "expected [source, target] or [source, target, multiplicity]");
    in_range(a[0], p + "[0]");
    in_range(a[1], p + "[1]");
    if (a[0] == a[1]) bad(p, "loops are not allowed");
    q.add_arrows(static_cast<int>(a[0]), static_cast<int>(a[1]), a.size() == 3 ? static_cast<int>(a[2]) : 1);
  }
  return q;
}

Seed seed_from_json(const Json& j, const std::string& path) {
  Seed s{quiver_from_json(field(j, "quiver", path), path + ".quiver"), {}};
  if (!j.contains("variables")) {
    for (int v = 1; v <= s.quiver.n(); ++v) s.x.push_back(RationalFunction::var(make_var('x', v)));
    return s;
  }
  const Json& vars = j["variables"];
  if (!vars.is_array() || static_cast<int>(vars.size()) != s.quiver.n())
    bad(path + ".variables", "expected one expression per vertex");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string p = path + ".variables[" + std::to_string(i) + "]";
    if (!vars[i].is_string()) bad(p, "expected an expression string");
    try {
      s.x.push_back(RationalFunction::parse(vars[i].get<std::string>()));
    } catch (const Error& e) {
      bad(p, e.what());
    }
  }
  return s;
}

ExtendedExchangeMatrix exchange_matrix_from_json(const Json& j, const std::string& path) {
  // a quiver is accepted in place of a matrix
  if (j.is_object() && j.contains("arrows")) return extended_exchange_matrix(quiver_from_json(j, path));
  ExtendedExchangeMatrix e;
  e.b = int_matrix(field(j, "matrix", path), path + ".matrix");
  long n = e.b.empty() ? 0 : static_cast<long>(e.b[0].size());
  if (j.contains("n_mutable") && as_int(j["n_mutable"], path + ".n_mutable") != n)
    bad(path + ".n_mutable", "does not match the column count");
  if (static_cast<long>(e.b.size()) < n) bad(path + ".matrix", "fewer rows than columns");
  if (j.contains("row_labels")) {
    auto l = int_array(j["row_labels"], path + ".row_labels");
    if (l.size() != e.b.size()) bad(path + ".row_labels", "one label per row required");
    e.row_labels.assign(l.begin(), l.end());
  } else {
    for (std::size_t i = 0; i < e.b.size(); ++i) e.row_labels.push_back(static_cast<int>(i + 1));
  }
  e.col_labels.assign(e.row_labels.begin(), e.row_labels.begin() + n);
  return e;
}

WitnessMatrix witness_from_json(const Json& j, const std::string& path) {
  WitnessMatrix w;
  w.n = static_cast<int>(as_int(field(j, "n", path), path + ".n"));
  w.m = static_cast<int>(as_int(field(j, "m", path), path + ".m"));
  w.R = int_matrix(field(j, "R", path), path + ".R");
  if (static_cast<int>(w.R.size()) != w.n + w.m) bad(path + ".R", "expected n + m rows");
  return w;
}

Json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(file + ": " + e.what());
  }
}

}  // namespace bsp
