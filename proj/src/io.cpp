#include "tensorval/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tensorval {

Json to_json(const SymTensor& t) {
  Json out = Json::array();
  const auto& mons = t.monomials();
  const auto coeffs = t.coefficients();
  for (int i = 0; i < t.size(); ++i) out.push_back(Json::array({mons[i].exponents(), coeffs[i]}));
  return out;
}

SymTensor symtensor_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("tensor JSON must be a nonempty list of terms");
  const auto first = j.at(0).at(0).get<std::vector<int>>();
  int rank = 0;
  for (int e : first) rank += e;
  SymTensor t(static_cast<int>(first.size()), rank);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("tensor term must be [exponents, value]");
    const MultiIndex m(term.at(0).get<std::vector<int>>());
    if (m.size() != t.dim() || m.degree() != rank) throw std::invalid_argument("tensor term has the wrong shape");
    t.set_coefficient(m, term.at(1).get<double>());
  }
  return t;
}

Json to_json(const ExactScalar& x) {
  auto term_json = [](const ExactScalar::Term& t) {
    return Json{{"num", boost::multiprecision::numerator(t.q).str()},
                {"den", boost::multiprecision::denominator(t.q).str()},
                {"piHalfPow", t.pi_half_pow}};
  };
  Json out;
  if (x.is_monomial()) {
    out = x.is_zero() ? Json{{"num", "0"}, {"den", "1"}, {"piHalfPow", 0}} : term_json(x.terms().front());
  } else {
    out["terms"] = Json::array();
    for (const auto& t : x.terms()) out["terms"].push_back(term_json(t));
  }
  out["value"] = x.to_double();
  return out;
}

Json to_json(const Estimate& e) {
  return Json{{"mean", to_json(e.mean)},
              {"stderr", to_json(e.std_error)},
              {"samples", e.samples},
              {"seed", e.seed},
              {"windowVolume", e.window_volume}};
}

Estimate estimate_from_json(const Json& j) {
  Estimate e;
  e.mean = symtensor_from_json(j.at("mean"));
  e.std_error = symtensor_from_json(j.at("stderr"));
  e.samples = j.at("samples").get<std::int64_t>();
  e.seed = j.at("seed").get<std::uint64_t>();
  e.window_volume = j.at("windowVolume").get<double>();
  return e;
}

std::string estimate_to_csv(const Estimate& e, const std::string& label) {
  std::ostringstream os;
  os.precision(17);
  os << "label,exponents,mean,stderr\n";
  const auto& mons = e.mean.monomials();
  for (int i = 0; i < e.mean.size(); ++i) {
    os << label << ',';
    for (int t = 0; t < mons[i].size(); ++t) os << (t ? " " : "") << mons[i][t];
    os << ',' << e.mean.coefficients()[i] << ',' << e.std_error.coefficients()[i] << '\n';
  }
  return os.str();
}

Json to_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_std(v, p.ambient_dim()));
  return Json{{"dim", p.ambient_dim()}, {"vertices", verts}};
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw std::invalid_argument("polytope JSON needs \"dim\" and \"vertices\"");
  const int dim = j.at("dim").get<int>();
  return Polytope::from_points(dim, j.at("vertices").get<std::vector<std::vector<double>>>());
}

Polytope polytope_from_off(std::istream& in) {
  // Comments start with '#'; the header keyword may share a line with the counts.
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("OFF: empty file");
  std::istringstream header(lines[0]);
  std::string word;
  header >> word;
  std::size_t next = 1;
  if (word.size() < 3 || word.substr(word.size() - 3) != "OFF") throw std::invalid_argument("OFF: missing header");
  long nv = -1;
  if (!(header >> nv)) {
    if (next >= lines.size()) throw std::invalid_argument("OFF: missing counts");
    std::istringstream counts(lines[next++]);
    if (!(counts >> nv)) throw std::invalid_argument("OFF: bad counts line");
  }
  if (nv < 1 || next + static_cast<std::size_t>(nv) > lines.size())
    throw std::invalid_argument("OFF: vertex count does not match the file");
  std::vector<std::vector<double>> pts;
  int dim = 0;
  for (long i = 0; i < nv; ++i) {
    std::istringstream row(lines[next + i]);
    std::vector<double> p;
    for (double x; row >> x;) p.push_back(x);
    if (i == 0) dim = static_cast<int>(p.size());
    if (static_cast<int>(p.size()) != dim || (dim != 2 && dim != 3))
      throw std::invalid_argument("OFF: vertices must have 2 or 3 coordinates");
    pts.push_back(std::move(p));
  }
  return Polytope::from_points(dim, pts);
}

Polytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open polytope file " + path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".off") return polytope_from_off(in);
  return polytope_from_json(Json::parse(in));
}

}  // namespace tensorval
