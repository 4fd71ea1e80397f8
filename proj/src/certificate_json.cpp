#include "markovl2/certificate_json.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace markovl2 {

namespace {

using json = nlohmann::ordered_json;

json poly_to_array(const AlphaPoly& p, Basis basis) {
  AlphaPoly q = p.is_zero() ? p : p.shifted_to(basis);
  json arr = json::array();
  if (q.is_zero()) return arr;
  for (int i = 0; i <= q.degree(); ++i) arr.push_back(to_string(q.coeff(i)));
  return arr;
}

AlphaPoly poly_from_array(const json& arr, Basis basis) {
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& v : arr) coeffs.push_back(parse_rational(v.get<std::string>()));
  if (coeffs.empty()) return AlphaPoly();
  return AlphaPoly(std::move(coeffs), basis);
}

json matrix_to_array(const CoeffMatrix& m) {
  json arr = json::array();
  for (const auto& row : m.rows)
    for (const Int& v : row) arr.push_back(v.get_str());
  return arr;
}

CoeffMatrix matrix_from_array(const json& arr, int k, int d) {
  CoeffMatrix m;
  m.k = k;
  m.d = d;
  size_t rows = static_cast<size_t>(2 * k - 1);
  size_t cols = static_cast<size_t>(d + 1);
  if (arr.size() != rows * cols)
    throw std::runtime_error("certificate_from_json: matrix size does not match k and d");
  m.rows.assign(rows, std::vector<Int>(cols));
  size_t idx = 0;
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.rows[i][j] = Int(arr[idx++].get<std::string>(), 10);
  return m;
}

const char* verdict_name(Positivity v) {
  switch (v) {
    case Positivity::proven_nonnegative: return "proven_nonnegative";
    case Positivity::negative_somewhere: return "negative_somewhere";
    case Positivity::zero_polynomial: return "zero_polynomial";
  }
  throw std::logic_error("verdict_name: unknown verdict");
}

Positivity verdict_from_name(const std::string& s) {
  if (s == "proven_nonnegative") return Positivity::proven_nonnegative;
  if (s == "negative_somewhere") return Positivity::negative_somewhere;
  if (s == "zero_polynomial") return Positivity::zero_polynomial;
  throw std::runtime_error("certificate_from_json: unknown verdict '" + s + "'");
}

}  // namespace

std::string certificate_to_json(const BoundCertificate& cert) {
  json j;
  j["k"] = cert.k;
  j["side"] = to_string(cert.side);
  j["c"] = json{{"num", poly_to_array(cert.c.num(), Basis::alpha)},
                {"den", poly_to_array(cert.c.den(), Basis::alpha)}};
  j["sigma"] = to_string(cert.sigma);
  j["sigma_promoted"] = cert.sigma_promoted;
  j["base"] = cert.base;
  j["d"] = cert.d;
  j["M"] = matrix_to_array(cert.M);
  j["Lambda"] = matrix_to_array(cert.Lambda);
  json res = json::array();
  for (const ResidualRow& r : cert.residual_rows)
    res.push_back(json{{"row", r.row},
                       {"poly", poly_to_array(r.poly_t, Basis::alpha_plus_one)},
                       {"verdict", verdict_name(r.verdict)}});
  j["residual_rows"] = res;
  json bnd = json::array();
  for (const BoundaryCheck& b : cert.boundary_checks)
    bnd.push_back(json{{"n", b.n},
                       {"poly", poly_to_array(b.poly_t, Basis::alpha_plus_one)},
                       {"verdict", verdict_name(b.verdict)}});
  j["boundary_checks"] = bnd;
  j["status"] = cert.certified ? "certified" : "failed";
  if (!cert.certified) j["failure_reason"] = cert.failure_reason;
  return j.dump(2) + "\n";
}

BoundCertificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  BoundCertificate cert;
  cert.k = j.at("k").get<int>();
  cert.side = side_from_string(j.at("side").get<std::string>());
  AlphaPoly num = poly_from_array(j.at("c").at("num"), Basis::alpha);
  AlphaPoly den = poly_from_array(j.at("c").at("den"), Basis::alpha);
  cert.c = AlphaFunction(num, den);
  cert.sigma = parse_rational(j.at("sigma").get<std::string>());
  cert.sigma_promoted = j.value("sigma_promoted", false);
  cert.base = j.at("base").get<int>();
  cert.d = j.at("d").get<int>();
  cert.M = matrix_from_array(j.at("M"), cert.k, cert.d);
  cert.Lambda = matrix_from_array(j.at("Lambda"), cert.k, cert.d);
  for (const auto& r : j.at("residual_rows")) {
    ResidualRow rr;
    rr.row = r.at("row").get<int>();
    rr.poly_t = poly_from_array(r.at("poly"), Basis::alpha_plus_one);
    rr.verdict = verdict_from_name(r.at("verdict").get<std::string>());
    cert.residual_rows.push_back(std::move(rr));
  }
  for (const auto& b : j.at("boundary_checks")) {
    BoundaryCheck bc;
    bc.n = b.at("n").get<int>();
    bc.poly_t = poly_from_array(b.at("poly"), Basis::alpha_plus_one);
    bc.verdict = verdict_from_name(b.at("verdict").get<std::string>());
    cert.boundary_checks.push_back(std::move(bc));
  }
  cert.certified = j.at("status").get<std::string>() == "certified";
  cert.failure_reason = j.value("failure_reason", "");
  return cert;
}

void write_certificate(const BoundCertificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_certificate: cannot open '" + path + "'");
  out << certificate_to_json(cert);
  if (!out) throw std::runtime_error("write_certificate: write failed for '" + path + "'");
}

BoundCertificate read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_certificate: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return certificate_from_json(ss.str());
}

}  // namespace markovl2
