#include "lgkit/model.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace lgkit {

int ModelSpec::max_degree() const { return *std::max_element(degrees.begin(), degrees.end()); }
int ModelSpec::min_degree() const { return *std::min_element(degrees.begin(), degrees.end()); }

Rational parse_rational(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("coefficient \"" + s + "\" is not an exact rational num/den");
  if (num[0] == '+') num = num.substr(1);
  Rational q;
  q.get_num() = Integer(num);
  q.get_den() = Integer(den);
  if (q.get_den() == 0) throw InputError("coefficient \"" + s + "\" has zero denominator");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string monomial_text(const std::vector<int>& exps, char var) {
  std::string out;
  for (size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += var + std::to_string(j + 1);
    if (exps[j] > 1) out += "^" + std::to_string(exps[j]);
  }
  return out.empty() ? "1" : out;
}

ModelSpec make_model(int n, int r, std::vector<int> degrees, std::vector<int> weights,
                     std::vector<std::vector<Term>> polys) {
  if (n < 1) throw InputError("n must be a positive integer");
  if (r < 1) throw InputError("r must be a positive integer");
  if (static_cast<int>(degrees.size()) != r)
    throw InputError("degrees has length " + std::to_string(degrees.size()) + ", expected r = " +
                     std::to_string(r));
  if (weights.empty()) weights.assign(n, 1);
  if (static_cast<int>(weights.size()) != n)
    throw InputError("weights has length " + std::to_string(weights.size()) + ", expected n = " +
                     std::to_string(n));
  if (static_cast<int>(polys.size()) != r)
    throw InputError("expected " + std::to_string(r) + " polynomials, got " +
                     std::to_string(polys.size()));
  for (int d : degrees)
    if (d < 1) throw InputError("degrees must be positive");
  for (int w : weights)
    if (w < 1) throw InputError("weights must be positive");

  ModelSpec spec;
  spec.n = n;
  spec.r = r;
  spec.degrees = degrees;
  spec.weights = weights;
  for (int i = 0; i < r; ++i) {
    std::map<std::vector<int>, Rational, std::greater<>> merged;
    for (const Term& t : polys[i]) {
      if (static_cast<int>(t.exps.size()) != n)
        throw InputError("polynomial " + std::to_string(i + 1) + " has a monomial with " +
                         std::to_string(t.exps.size()) + " exponents, expected " +
                         std::to_string(n));
      int deg = 0;
      for (int j = 0; j < n; ++j) {
        if (t.exps[j] < 0) throw InputError("negative exponent in polynomial " + std::to_string(i + 1));
        deg += t.exps[j] * weights[j];
      }
      if (deg != degrees[i])
        throw InputError("polynomial " + std::to_string(i + 1) + ": monomial " +
                         monomial_text(t.exps, 'x') + " has degree " + std::to_string(deg) +
                         " != " + std::to_string(degrees[i]));
      merged[t.exps] += t.coeff;
    }
    std::vector<Term> canon;
    for (auto& [e, c] : merged)
      if (c != 0) canon.push_back({c, e});
    if (canon.empty()) throw InputError("polynomial " + std::to_string(i + 1) + " is zero");
    spec.polys.push_back(std::move(canon));
  }
  int sd = std::accumulate(degrees.begin(), degrees.end(), 0);
  int sw = std::accumulate(weights.begin(), weights.end(), 0);
  spec.calabi_yau = sd == sw;
  spec.smooth_chart = std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
  spec.elliptic = spec.max_degree() <= 2 * spec.min_degree() - 1;
  return spec;
}

namespace {

std::vector<int> int_list(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw InputError(std::string("field '") + field + "' must be a list of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string("field '") + field + "' must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

ModelSpec parse_model(const std::string& document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("model document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("model document must be an object");
  for (const char* f : {"n", "r", "degrees", "polynomials"})
    if (!j.contains(f)) throw InputError(std::string("missing field '") + f + "'");
  if (!j["n"].is_number_integer() || !j["r"].is_number_integer())
    throw InputError("n and r must be integers");
  int n = j["n"].get<int>();
  int r = j["r"].get<int>();
  std::vector<int> degrees = int_list(j["degrees"], "degrees");
  std::vector<int> weights;
  if (j.contains("weights")) weights = int_list(j["weights"], "weights");
  if (!j["polynomials"].is_array()) throw InputError("field 'polynomials' must be a list");
  std::vector<std::vector<Term>> polys;
  for (const auto& pj : j["polynomials"]) {
    if (!pj.is_array()) throw InputError("each polynomial must be a list of terms");
    std::vector<Term> terms;
    for (const auto& tj : pj) {
      if (!tj.is_object() || !tj.contains("coeff") || !tj.contains("exps"))
        throw InputError("each term needs 'coeff' and 'exps'");
      if (!tj["coeff"].is_string())
        throw InputError("coefficients must be rational strings \"num/den\", got " + tj["coeff"].dump());
      terms.push_back({parse_rational(tj["coeff"].get<std::string>()), int_list(tj["exps"], "exps")});
    }
    polys.push_back(std::move(terms));
  }
  return make_model(n, r, degrees, weights, polys);
}

ModelSpec load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string serialize_model(const ModelSpec& spec) {
  nlohmann::ordered_json j;
  j["n"] = spec.n;
  j["r"] = spec.r;
  j["degrees"] = spec.degrees;
  j["weights"] = spec.weights;
  nlohmann::ordered_json polys = nlohmann::ordered_json::array();
  for (const auto& p : spec.polys) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : p) {
      nlohmann::ordered_json tj;
      tj["coeff"] = format_rational(t.coeff);
      tj["exps"] = t.exps;
      terms.push_back(tj);
    }
    polys.push_back(terms);
  }
  j["polynomials"] = polys;
  return j.dump(2);
}

namespace {

std::vector<Term> fermat(int n, int d) {
  std::vector<Term> terms;
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(n, 0);
    e[j] = d;
    terms.push_back({Rational(1), e});
  }
  return terms;
}

}  // namespace

ModelSpec fermat_cubic() { return make_model(3, 1, {3}, {}, {fermat(3, 3)}); }

ModelSpec quadric_pair() {
  std::vector<Term> w2;
  for (int j = 0; j < 4; ++j) {
    std::vector<int> e(4, 0);
    e[j] = 2;
    w2.push_back({Rational(j + 1), e});
  }
  return make_model(4, 2, {2, 2}, {}, {fermat(4, 2), w2});
}

ModelSpec fermat_quintic() { return make_model(5, 1, {5}, {}, {fermat(5, 5)}); }

const char* to_string(Smoothness s) {
  switch (s) {
    case Smoothness::likely_smooth: return "likely-smooth";
    case Smoothness::not_smooth: return "not-smooth";
    case Smoothness::inconclusive: return "inconclusive";
  }
  return "?";
}

int stabilization_window(const ModelSpec& spec) { return spec.max_degree() + 1; }

}  // namespace lgkit
