#include "hopfforge/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hopfforge {

using json = nlohmann::json;

namespace {

json scalar_json(const CycScalar& c, const CyclotomicField& f) { return c.to_strings(f); }

CycScalar scalar_from(const json& j, const CyclotomicField& f) {
  if (!j.is_array()) throw ParseError("coefficient must be an array of rationals");
  std::vector<std::string> s;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("coefficient entries must be strings");
    s.push_back(x.get<std::string>());
  }
  CycScalar c = CycScalar::from_strings(f, s);
  if (c.to_strings(f) != s) throw ParseError("coefficient not in reduced form");
  return c;
}

int int_from(const json& j, int lo, int hi, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  long v = j.get<long>();
  if (v < lo || v >= hi) throw ParseError(std::string(what) + " out of range: " + std::to_string(v));
  return static_cast<int>(v);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return a;
}

void check_schema(const json& j, const std::string& want) {
  const json& s = field(j, "schema");
  if (!s.is_string() || s.get<std::string>() != want)
    throw ParseError("expected schema " + want);
}

// [[i, c]...]
json vec_json(const SVec& v, const CyclotomicField& f) {
  json a = json::array();
  for (const auto& [i, c] : v) a.push_back({i, scalar_json(c, f)});
  return a;
}

SVec vec_from(const json& a, int dim, const CyclotomicField& f) {
  if (!a.is_array()) throw ParseError("vector must be an array");
  std::vector<SVec::Entry> e;
  int last = -1;
  for (const auto& x : a) {
    if (!x.is_array() || x.size() != 2) throw ParseError("vector entry must be [index, coefficient]");
    int i = int_from(x[0], 0, dim, "index");
    if (i <= last) throw ParseError("vector entries not sorted");
    last = i;
    e.emplace_back(i, scalar_from(x[1], f));
  }
  return SVec::from_entries(std::move(e));
}

// rows[r] split as pairs (p / inner, p % inner): [[r, a, b, c]...]
json rows_json(const std::vector<SVec>& rows, int inner, const CyclotomicField& f, bool split) {
  json a = json::array();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [p, c] : rows[r]) {
      if (split)
        a.push_back({static_cast<int>(r), p / inner, p % inner, scalar_json(c, f)});
      else
        a.push_back({static_cast<int>(r), p, scalar_json(c, f)});
    }
  return a;
}

std::vector<SVec> rows_from(const json& a, int nrows, int inner, int outer, const CyclotomicField& f, bool split) {
  if (!a.is_array()) throw ParseError("sparse table must be an array");
  std::vector<std::vector<SVec::Entry>> e(nrows);
  std::vector<long> last(nrows, -1);
  long prev_row = -1;
  for (const auto& x : a) {
    const std::size_t want = split ? 4 : 3;
    if (!x.is_array() || x.size() != want) throw ParseError("malformed sparse entry");
    int r = int_from(x[0], 0, nrows, "row");
    long p;
    if (split) {
      int u = int_from(x[1], 0, outer, "index");
      int v = int_from(x[2], 0, inner, "index");
      p = static_cast<long>(u) * inner + v;
    } else {
      p = int_from(x[1], 0, outer, "index");
    }
    if (r < prev_row || (r == prev_row && p <= last[r])) throw ParseError("sparse entries not sorted");
    prev_row = r;
    last[r] = p;
    e[r].emplace_back(static_cast<int>(p), scalar_from(x[split ? 3 : 2], f));
  }
  std::vector<SVec> out(nrows);
  for (int r = 0; r < nrows; ++r) out[r] = SVec::from_entries(std::move(e[r]));
  return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::vector<std::string> labels_from(const json& a, int dim) {
  if (!a.is_array() || static_cast<int>(a.size()) != dim) throw ParseError("labels must have one entry per basis element");
  std::vector<std::string> out;
  for (const auto& x : a) {
    if (!x.is_string()) throw ParseError("labels must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

json hopf_json(const HopfData& A) {
  const CyclotomicField& f = A.field();
  json j;
  j["m"] = A.m;
  j["dim"] = A.dim;
  j["basis_labels"] = A.labels;
  // mult: [i, j, k, c] with e_i e_j = sum c e_k
  json mult = json::array();
  for (int i = 0; i < A.dim; ++i)
    for (int k = 0; k < A.dim; ++k)
      for (const auto& [p, c] : A.mul_basis(i, k)) mult.push_back({i, k, p, scalar_json(c, f)});
  j["mult"] = mult;
  j["unit"] = vec_json(A.unit, f);
  j["comult"] = rows_json(A.comult, A.dim, f, true);
  j["counit"] = vec_json(A.counit, f);
  j["antipode"] = rows_json(A.antipode, A.dim, f, false);
  j["grading"] = A.grading ? json(*A.grading) : json(nullptr);
  return j;
}

HopfData hopf_from(const json& j) {
  HopfData A;
  A.m = int_from(field(j, "m"), 1, 1 << 16, "m");
  A.dim = int_from(field(j, "dim"), 1, 1 << 12, "dim");
  const CyclotomicField& f = CyclotomicField::get(A.m);
  A.labels = labels_from(field(j, "basis_labels"), A.dim);
  const int n = A.dim;
  A.mult.assign(static_cast<std::size_t>(n) * n, SVec());
  {
    const json& a = array_field(j, "mult");
    std::vector<std::vector<SVec::Entry>> e(static_cast<std::size_t>(n) * n);
    long prev = -1;
    for (const auto& x : a) {
      if (!x.is_array() || x.size() != 4) throw ParseError("malformed mult entry");
      long r = static_cast<long>(int_from(x[0], 0, n, "index")) * n + int_from(x[1], 0, n, "index");
      int k = int_from(x[2], 0, n, "index");
      long key = r * n + k;
      if (key <= prev) throw ParseError("mult entries not sorted");
      prev = key;
      e[r].emplace_back(k, scalar_from(x[3], f));
    }
    for (std::size_t r = 0; r < e.size(); ++r) A.mult[r] = SVec::from_entries(std::move(e[r]));
  }
  A.unit = vec_from(field(j, "unit"), n, f);
  A.comult = rows_from(array_field(j, "comult"), n, n, n, f, true);
  A.counit = vec_from(field(j, "counit"), n, f);
  A.antipode = rows_from(array_field(j, "antipode"), n, n, n, f, false);
  const json& g = field(j, "grading");
  if (!g.is_null()) {
    if (!g.is_array() || static_cast<int>(g.size()) != n) throw ParseError("grading must list one degree per basis element");
    std::vector<int> deg;
    for (const auto& x : g) deg.push_back(int_from(x, -(1 << 20), 1 << 20, "degree"));
    A.grading = deg;
  }
  return A;
}

json yd_json(const YDModule& M) {
  const CyclotomicField& f = M.F->g.field();
  json j;
  j["m"] = M.F->g.m;
  j["basis"] = M.basis == HBasis::Theta ? "theta" : "phi";
  j["dim"] = M.dim;
  j["labels"] = M.labels;
  // action: [h, v, w, c] with e_h . v = sum c w
  json act = json::array();
  for (int h = 0; h < M.hdim(); ++h)
    for (int v = 0; v < M.dim; ++v)
      for (const auto& [w, c] : M.act(h, v)) act.push_back({h, v, w, scalar_json(c, f)});
  j["action"] = act;
  // coaction: [v, h, w, c] with lambda(v) = sum c e_h (x) w
  j["coaction"] = rows_json(M.coaction, M.dim, f, true);
  j["degrees"] = M.degrees;
  return j;
}

YDModule yd_from(const json& j) {
  int m = int_from(field(j, "m"), 4, 1 << 12, "m");
  GroupDatum g = GroupDatum::make(m, true);
  YDModule M;
  M.F = function_algebra(g);
  const json& b = field(j, "basis");
  if (b == "theta") M.basis = HBasis::Theta;
  else if (b == "phi") M.basis = HBasis::Phi;
  else throw ParseError("basis must be theta or phi");
  M.dim = int_from(field(j, "dim"), 0, 1 << 12, "dim");
  M.labels = labels_from(field(j, "labels"), M.dim);
  const int hd = M.hdim();
  const CyclotomicField& f = g.field();
  M.action.assign(static_cast<std::size_t>(hd) * M.dim, SVec());
  {
    std::vector<std::vector<SVec::Entry>> e(M.action.size());
    long prev = -1;
    for (const auto& x : array_field(j, "action")) {
      if (!x.is_array() || x.size() != 4) throw ParseError("malformed action entry");
      long r = static_cast<long>(int_from(x[0], 0, hd, "index")) * M.dim + int_from(x[1], 0, M.dim, "index");
      int w = int_from(x[2], 0, M.dim, "index");
      long key = r * M.dim + w;
      if (key <= prev) throw ParseError("action entries not sorted");
      prev = key;
      e[r].emplace_back(w, scalar_from(x[3], f));
    }
    for (std::size_t r = 0; r < e.size(); ++r) M.action[r] = SVec::from_entries(std::move(e[r]));
  }
  M.coaction = rows_from(array_field(j, "coaction"), M.dim, M.dim, hd, f, true);
  const json& d = array_field(j, "degrees");
  if (static_cast<int>(d.size()) != M.dim) throw ParseError("degrees must list one entry per basis element");
  for (const auto& x : d) M.degrees.push_back(int_from(x, -(1 << 20), 1 << 20, "degree"));
  return M;
}

json lifting_json(const LiftingData& d) {
  const CyclotomicField& f = CyclotomicField::get(d.m);
  json j;
  j["schema"] = "liftingdata/v1";
  j["kind"] = std::string(1, family_char(d.kind));
  j["m"] = d.m;
  json I = json::array();
  for (auto [i, k] : d.I.pairs) I.push_back({i, k});
  j["I"] = I;
  j["L"] = d.L.ells;
  json z = json::array();
  for (const auto& [k, c] : d.zeta) z.push_back({k[0], k[1], k[2], scalar_json(c, f)});
  j["zeta"] = z;
  auto pairs = [&](const std::map<std::pair<int, int>, CycScalar>& m) {
    json a = json::array();
    for (const auto& [k, c] : m) a.push_back({k.first, k.second, scalar_json(c, f)});
    return a;
  };
  j["mu"] = pairs(d.mu);
  j["nu"] = pairs(d.nu);
  j["tau"] = pairs(d.tau);
  return j;
}

LiftingData lifting_from(const json& j) {
  check_schema(j, "liftingdata/v1");
  LiftingData d;
  const json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>().size() != 1) throw ParseError("kind must be A, B or C");
  try {
    d.kind = family_from_char(k.get<std::string>()[0]);
  } catch (const InvalidLiftingData& e) {
    throw ParseError(e.what());
  }
  d.m = int_from(field(j, "m"), 4, 1 << 12, "m");
  const CyclotomicField& f = CyclotomicField::get(d.m);
  for (const auto& x : array_field(j, "I")) {
    if (!x.is_array() || x.size() != 2) throw ParseError("I entries must be [i, k]");
    d.I.pairs.emplace_back(int_from(x[0], -(1 << 20), 1 << 20, "i"), int_from(x[1], -(1 << 20), 1 << 20, "k"));
  }
  for (const auto& x : array_field(j, "L")) d.L.ells.push_back(int_from(x, -(1 << 20), 1 << 20, "l"));
  for (const auto& x : array_field(j, "zeta")) {
    if (!x.is_array() || x.size() != 4) throw ParseError("zeta entries must be [i, k, q, coeff]");
    std::array<int, 3> key{int_from(x[0], 0, d.m, "i"), int_from(x[1], 0, d.m, "k"), int_from(x[2], 0, d.m, "q")};
    if (!d.zeta.emplace(key, scalar_from(x[3], f)).second) throw ParseError("duplicate zeta key");
  }
  auto pairs = [&](const char* name, std::map<std::pair<int, int>, CycScalar>& m) {
    for (const auto& x : array_field(j, name)) {
      if (!x.is_array() || x.size() != 3) throw ParseError(std::string(name) + " entries must be [l, t, coeff]");
      std::pair<int, int> key{int_from(x[0], 0, d.m, "l"), int_from(x[1], 0, d.m, "t")};
      if (!m.emplace(key, scalar_from(x[2], f)).second) throw ParseError(std::string("duplicate ") + name + " key");
    }
  };
  pairs("mu", d.mu);
  pairs("nu", d.nu);
  pairs("tau", d.tau);
  return d;
}

}  // namespace

std::string schema_of(const std::string& text) {
  json j = parse(text);
  const json& s = field(j, "schema");
  if (!s.is_string()) throw ParseError("schema must be a string");
  return s.get<std::string>();
}

std::string hopfdata_to_json(const HopfData& A, const std::string& construction, const LiftingData* lifting) {
  json j = hopf_json(A);
  j["schema"] = "hopfdata/v1";
  if (!construction.empty()) j["construction"] = construction;
  if (lifting) j["lifting"] = lifting_json(*lifting);
  return dump(j);
}

HopfDocument hopfdata_from_json(const std::string& text) {
  json j = parse(text);
  try {
    check_schema(j, "hopfdata/v1");
    HopfDocument doc;
    doc.A = hopf_from(j);
    if (j.contains("construction")) {
      if (!j["construction"].is_string()) throw ParseError("construction must be a string");
      doc.construction = j["construction"].get<std::string>();
    }
    if (j.contains("lifting")) doc.lifting = lifting_from(j["lifting"]);
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string ydmodule_to_json(const YDModule& M) {
  json j = yd_json(M);
  j["schema"] = "ydmodule/v1";
  return dump(j);
}

YDModule ydmodule_from_json(const std::string& text) {
  json j = parse(text);
  try {
    check_schema(j, "ydmodule/v1");
    return yd_from(j);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string nichols_to_json(const NicholsData& B) {
  const CyclotomicField& f = B.M.F->g.field();
  json j;
  j["schema"] = "nichols/v1";
  j["module"] = yd_json(B.M);
  j["dim"] = B.dim;
  json q = json::array();
  for (int a = 0; a < B.d; ++a)
    for (int b = 0; b < B.d; ++b) q.push_back({a, b, scalar_json(B.q[static_cast<std::size_t>(a) * B.d + b], f)});
  j["braiding"] = q;
  j["algebra"] = hopf_json(B.algebra);
  json r = json::array();
  for (const auto& v : B.relations.basis()) r.push_back(vec_json(v, f));
  j["relations"] = r;
  return dump(j);
}

NicholsData nichols_from_json(const std::string& text) {
  json j = parse(text);
  try {
    check_schema(j, "nichols/v1");
    YDModule M = yd_from(field(j, "module"));
    NicholsData B = build_nichols(M);
    HopfData stored = hopf_from(field(j, "algebra"));
    if (stored.mult != B.algebra.mult || stored.comult != B.algebra.comult || stored.antipode != B.algebra.antipode ||
        int_from(field(j, "dim"), 0, 1 << 20, "dim") != B.dim)
      throw ParseError("stored Nichols structure does not match the module");
    const CyclotomicField& f = M.F->g.field();
    std::vector<SVec> rel;
    for (const auto& v : array_field(j, "relations")) rel.push_back(vec_from(v, B.d * B.d, f));
    if (Subspace::span(B.d * B.d, rel) != B.relations) throw ParseError("stored relations do not match the module");
    return B;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string lifting_to_json(const LiftingData& d) { return dump(lifting_json(d)); }

LiftingData lifting_from_json(const std::string& text) {
  json j = parse(text);
  try {
    return lifting_from(j);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("write failed for " + path);
}

}  // namespace hopfforge
