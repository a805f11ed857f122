#include "slicecalc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace slicecalc {

using nlohmann::json;

namespace {

json quaternion_to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("quaternion entries must be [w,x,y,z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json real_matrix_to_json(const RealMatrix& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix real_matrix_from_json(const json& j, int m) {
  if (!j.is_array() || static_cast<int>(j.size()) != m) throw ParseError("bad matrix row count");
  RealMatrix M(m, m);
  for (int i = 0; i < m; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_array() ||
        static_cast<int>(j[static_cast<std::size_t>(i)].size()) != m) {
      throw ParseError("bad matrix column count");
    }
    for (int k = 0; k < m; ++k) {
      M(i, k) = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<double>();
    }
  }
  return M;
}

}  // namespace

LoadedOperator parse_operator(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("operator file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind")) throw ParseError("operator file needs a kind");
  std::string kind = doc["kind"].get<std::string>();
  if (!doc.contains("m") || !doc["m"].is_number_integer()) {
    throw ParseError("operator file needs an integer size m");
  }
  int m = doc["m"].get<int>();
  if (m < 1 || m > 64) throw ParseError("operator size m out of range [1, 64]");

  if (kind == "quaternion-matrix") {
    const auto& e = doc.at("entries");
    if (!e.is_array() || static_cast<int>(e.size()) != m) throw ParseError("bad entry row count");
    QMatrix A(m);
    for (int i = 0; i < m; ++i) {
      const auto& row = e[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != m) {
        throw ParseError("bad entry column count");
      }
      for (int j = 0; j < m; ++j) {
        A(i, j) = quaternion_from_json(row[static_cast<std::size_t>(j)]);
      }
    }
    return A;
  }
  if (kind == "paravector") {
    if (!doc.contains("n")) throw ParseError("paravector operator needs n");
    int n = doc["n"].get<int>();
    const auto& e = doc.at("entries");
    if (!e.is_array() || static_cast<int>(e.size()) != n + 1) {
      throw ParseError("paravector operator needs n+1 component matrices");
    }
    std::vector<RealMatrix> comps;
    comps.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
      comps.push_back(real_matrix_from_json(e[static_cast<std::size_t>(j)], m));
    }
    return ParavectorOperator(n, std::move(comps));
  }
  throw ParseError("unknown operator kind '" + kind + "'");
}

LoadedOperator load_operator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open operator file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_operator(ss.str());
}

std::string serialize_operator(const QMatrix& A) {
  json doc;
  doc["schema_version"] = 1;
  doc["kind"] = "quaternion-matrix";
  doc["m"] = A.size();
  json rows = json::array();
  for (int i = 0; i < A.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < A.size(); ++j) row.push_back(quaternion_to_json(A(i, j)));
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string serialize_operator(const ParavectorOperator& T) {
  json doc;
  doc["schema_version"] = 1;
  doc["kind"] = "paravector";
  doc["m"] = T.base_size();
  doc["n"] = T.clifford_dim();
  json comps = json::array();
  for (int j = 0; j <= T.clifford_dim(); ++j) comps.push_back(real_matrix_to_json(T.component(j)));
  doc["entries"] = std::move(comps);
  return doc.dump(2) + "\n";
}

void save_operator(const std::string& path, const LoadedOperator& op) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  if (std::holds_alternative<QMatrix>(op)) {
    out << serialize_operator(std::get<QMatrix>(op));
  } else {
    out << serialize_operator(std::get<ParavectorOperator>(op));
  }
}

namespace {

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit SpecParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      throw ParseError("function spec: expected '" + std::string(1, c) + "' at position " +
                       std::to_string(pos));
    }
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
    }
    if (start == pos) throw ParseError("function spec: expected a name at position " +
                                       std::to_string(pos));
    return s.substr(start, pos - start);
  }

  double number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' ||
                              s[pos] == '-' || s[pos] == '+' || s[pos] == 'e' || s[pos] == 'E')) {
      ++pos;
    }
    try {
      std::size_t used = 0;
      double v = std::stod(s.substr(start, pos - start), &used);
      if (used != pos - start) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ParseError("function spec: bad number at position " + std::to_string(start));
    }
  }

  std::vector<double> real_list() {
    expect('[');
    std::vector<double> out;
    if (eat(']')) return out;
    out.push_back(number());
    while (eat(',')) out.push_back(number());
    expect(']');
    return out;
  }

  std::vector<Quaternion> quat_list() {
    expect('[');
    std::vector<Quaternion> out;
    if (eat(']')) return out;
    do {
      auto q = real_list();
      if (q.size() != 4) throw ParseError("quaternion coefficients must be [w,x,y,z]");
      out.push_back({q[0], q[1], q[2], q[3]});
    } while (eat(','));
    expect(']');
    return out;
  }

  void end() {
    skip_ws();
    if (pos != s.size()) {
      throw ParseError("function spec: trailing input at position " + std::to_string(pos));
    }
  }
};

}  // namespace

SliceFunction parse_function_spec(const std::string& text) {
  SpecParser p(text);
  std::string name = p.ident();

  Side prefix_side = Side::Intrinsic;
  bool has_prefix = false;
  if ((name == "left" || name == "right") && p.eat(':')) {
    prefix_side = name == "left" ? Side::Left : Side::Right;
    has_prefix = true;
    name = p.ident();
  }

  auto finish = [&](SliceFunction f) {
    p.end();
    return f;
  };

  if (name == "one") return finish(catalog::one());
  if (name == "exp_neg") return finish(catalog::exp_neg());
  if (name == "pow") {
    p.expect('(');
    double m = p.number();
    p.expect(')');
    if (m != std::floor(m) || m < 0) throw ParseError("pow needs a nonnegative integer");
    return finish(catalog::pow(static_cast<int>(m)));
  }
  if (name == "psi") {
    p.expect('(');
    double k = p.number();
    p.expect(')');
    if (k != std::floor(k) || k < 1) throw ParseError("psi needs a positive integer");
    return finish(catalog::psi(static_cast<int>(k)));
  }
  if (name == "frac_pow") {
    p.expect('(');
    double a = p.number();
    p.expect(')');
    return finish(catalog::frac_pow(a));
  }
  if (name == "poly") {
    p.expect('(');
    p.skip_ws();
    if (p.pos < p.s.size() && p.pos + 1 < p.s.size() && p.s[p.pos] == '[' &&
        p.s[p.pos + 1] == '[') {
      auto coeffs = p.quat_list();
      p.expect(')');
      if (!has_prefix) throw ParseError("quaternionic poly needs a left:/right: prefix");
      return finish(catalog::poly_quat(coeffs, prefix_side));
    }
    auto coeffs = p.real_list();
    p.expect(')');
    return finish(catalog::poly_real(coeffs));
  }
  if (name == "poly_left" || name == "poly_right") {
    p.expect('(');
    auto coeffs = p.quat_list();
    p.expect(')');
    return finish(catalog::poly_quat(coeffs, name == "poly_left" ? Side::Left : Side::Right));
  }
  if (name == "rational") {
    p.expect('(');
    auto num = p.real_list();
    p.expect(',');
    auto den = p.real_list();
    p.expect(')');
    return finish(catalog::rational(num, den));
  }
  throw ParseError("unknown function '" + name + "'");
}

std::string format_quaternion(const Quaternion& q, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << "[" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << "]";
  return os.str();
}

}  // namespace slicecalc
