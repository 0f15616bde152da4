#include "filiform/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace filiform::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

int int_field(const json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<int>();
}

}  // namespace

json to_json(const Q& q) { return q.to_string(); }

Q rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Q(j.get<long>());
  bad("rational must be a \"num/den\" string or an integer");
}

json to_json(const LieAlgebra<Q>& g) {
  json br = json::array();
  for (const auto& [ab, v] : g.table()) {
    json targets = json::array();
    for (const auto& [k, c] : v) targets.push_back(json::array({k + 1, to_json(c)}));
    br.push_back(json::array({ab.first + 1, ab.second + 1, targets}));
  }
  json out{{"dim", g.dim()}, {"brackets", br}};
  if (g.weights()) out["weights"] = *g.weights();
  return out;
}

LieAlgebra<Q> algebra_from_json(const json& j) {
  if (!j.is_object()) bad("algebra document must be a JSON object");
  if (!j.contains("dim")) bad("missing \"dim\"");
  const int n = int_field(j["dim"], "dim");
  if (n < 1 || n > 32) bad("dim must lie in 1..32");
  LieAlgebra<Q> g(n);
  auto index = [&](const json& x, const std::string& what) {
    int i = int_field(x, what);
    if (i < 1 || i > n) bad(what + " index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    return i;
  };
  std::set<std::pair<int, int>> seen;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) bad("\"brackets\" must be an array");
    for (const auto& b : j["brackets"]) {
      if (!b.is_array() || b.size() != 3 || !b[2].is_array()) bad("bracket entry must be [i, j, [[k, c], ...]]");
      int i = index(b[0], "bracket"), jj = index(b[1], "bracket");
      if (i == jj) bad("bracket [e" + std::to_string(i) + ", e" + std::to_string(i) + "] listed");
      if (!seen.insert({std::min(i, jj), std::max(i, jj)}).second)
        bad("bracket [e" + std::to_string(i) + ", e" + std::to_string(jj) + "] listed twice");
      for (const auto& t : b[2]) {
        if (!t.is_array() || t.size() != 2) bad("bracket target must be [k, c]");
        g.add(i, jj, index(t[0], "target"), rational_from_json(t[1]));
      }
    }
  }
  if (j.contains("weights") && !j["weights"].is_null()) {
    if (!j["weights"].is_array()) bad("\"weights\" must be an array");
    std::vector<int> w;
    for (const auto& x : j["weights"]) w.push_back(int_field(x, "weight"));
    if (static_cast<int>(w.size()) != n) bad("weight list length differs from dim");
    g.set_weights(w);
  }
  return g;
}

json to_json(const Form<Q>& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) out.push_back(json::array({m.indices(), to_json(c)}));
  return out;
}

Form<Q> form_from_json(const json& j, int degree) {
  if (!j.is_array()) bad("form must be an array of [[i1, ..., ip], c]");
  Form<Q> f(degree);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array()) bad("form term must be [[i1, ..., ip], c]");
    std::vector<int> idx;
    for (const auto& x : t[0]) idx.push_back(int_field(x, "form index"));
    if (static_cast<int>(idx.size()) != degree) bad("form term of the wrong degree");
    f += Form<Q>::monomial(idx, rational_from_json(t[1]));
  }
  return f;
}

std::string form_text(const Form<Q>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    Q a = c.sign() < 0 ? -c : c;
    out += out.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    if (!a.is_one() || m.indices().empty()) out += a.pretty() + (m.indices().empty() ? "" : " ");
    std::string mono;
    for (int i : m.indices()) mono += (mono.empty() ? "e" : "^e") + std::to_string(i);
    out += mono;
  }
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::string render(const json& j) { return j.dump(2); }

LieAlgebra<Q> read_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json(parse(ss.str()));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace filiform::io
