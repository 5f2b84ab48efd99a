#include "gz/json_io.hpp"

#include <fstream>

namespace gz {

namespace {

Json complex_out(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_in(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument(std::string(what) + ": complex value must be [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

int int_field(const Json& j, const char* key, const char* what) {
  const Json& f = field(j, key, what);
  if (!f.is_number_integer() || f.get<long long>() < 0) {
    throw std::invalid_argument(std::string(what) + ": field '" + key +
                                "' must be a nonnegative integer");
  }
  return f.get<int>();
}

}  // namespace

Json to_json(Complex z) { return complex_out(z); }

Json to_json(const CMatrix& x) {
  Json entries = Json::array();
  for (int i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < x.cols(); ++j) row.push_back(complex_out(x(i, j)));
    entries.push_back(row);
  }
  return Json{{"n", x.rows()}, {"entries", entries}};
}

Json to_json(const MonicPoly& p) {
  Json coeffs = Json::array();
  for (Complex c : p.coeffs) coeffs.push_back(complex_out(c));
  return Json{{"degree", p.degree}, {"coeffs", coeffs}};
}

Json to_json(const GZCoord& c) {
  Json values = Json::array();
  for (Complex v : c.values) values.push_back(complex_out(v));
  return Json{{"n", c.n}, {"values", values}};
}

Json to_json(const SpectrumTower& t) {
  Json levels = Json::array();
  for (const auto& lv : t.levels) {
    Json level = Json::array();
    for (Complex z : lv) level.push_back(complex_out(z));
    levels.push_back(level);
  }
  return Json{{"n", t.n}, {"levels", levels}};
}

Json to_json(const GroupWord& w) {
  Json levels = Json::array();
  for (const auto& lv : w.levels) {
    Json level = Json::array();
    for (Complex t : lv) level.push_back(complex_out(t));
    levels.push_back(level);
  }
  return Json{{"levels", levels}};
}

Json to_json(const DiscreteMeasure& mu) {
  return Json{{"nodes", mu.nodes}, {"weights", mu.weights}};
}

Complex complex_from_json(const Json& j) { return complex_in(j, "complex"); }

CMatrix matrix_from_json(const Json& j) {
  const int n = int_field(j, "n", "matrix");
  const Json& entries = field(j, "entries", "matrix");
  if (n < 1 || !entries.is_array() || static_cast<int>(entries.size()) != n) {
    throw std::invalid_argument("matrix: need n positive rows");
  }
  CMatrix x(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("matrix: ragged entries");
    }
    for (int jj = 0; jj < n; ++jj) x(i, jj) = complex_in(row[jj], "matrix");
  }
  return x;
}

MonicPoly poly_from_json(const Json& j) {
  MonicPoly p;
  p.degree = int_field(j, "degree", "polynomial");
  const Json& coeffs = field(j, "coeffs", "polynomial");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != p.degree) {
    throw std::invalid_argument("polynomial: coefficient count must equal degree");
  }
  for (const auto& c : coeffs) p.coeffs.push_back(complex_in(c, "polynomial"));
  return p;
}

GZCoord coord_from_json(const Json& j) {
  GZCoord c;
  c.n = int_field(j, "n", "coordinates");
  const Json& values = field(j, "values", "coordinates");
  if (c.n < 1 || !values.is_array() ||
      static_cast<int>(values.size()) != d(c.n)) {
    throw std::invalid_argument("coordinates: need n(n+1)/2 values");
  }
  for (const auto& v : values) c.values.push_back(complex_in(v, "coordinates"));
  return c;
}

SpectrumTower tower_from_json(const Json& j) {
  SpectrumTower t;
  t.n = int_field(j, "n", "tower");
  const Json& levels = field(j, "levels", "tower");
  if (t.n < 1 || !levels.is_array() || static_cast<int>(levels.size()) != t.n) {
    throw std::invalid_argument("tower: need n levels");
  }
  for (int m = 1; m <= t.n; ++m) {
    const Json& lv = levels[m - 1];
    if (!lv.is_array() || static_cast<int>(lv.size()) != m) {
      throw std::invalid_argument("tower: level m must hold m values");
    }
    std::vector<Complex> vals;
    for (const auto& z : lv) vals.push_back(complex_in(z, "tower"));
    t.levels.push_back(vals);
  }
  return t;
}

GroupWord word_from_json(const Json& j) {
  const Json& levels = field(j, "levels", "word");
  if (!levels.is_array()) throw std::invalid_argument("word: levels must be an array");
  GroupWord w;
  w.n = static_cast<int>(levels.size()) + 1;
  for (int m = 1; m < w.n; ++m) {
    const Json& lv = levels[m - 1];
    if (!lv.is_array() || static_cast<int>(lv.size()) != m) {
      throw std::invalid_argument("word: level m must hold m times");
    }
    std::vector<Complex> times;
    for (const auto& t : lv) times.push_back(complex_in(t, "word"));
    w.levels.push_back(times);
  }
  return w;
}

DiscreteMeasure measure_from_json(const Json& j) {
  const Json& nodes = field(j, "nodes", "measure");
  const Json& weights = field(j, "weights", "measure");
  if (!nodes.is_array() || !weights.is_array() || nodes.size() != weights.size()) {
    throw std::invalid_argument("measure: nodes and weights must be arrays of equal length");
  }
  DiscreteMeasure mu;
  for (const auto& t : nodes) {
    if (!t.is_number()) throw std::invalid_argument("measure: nodes must be numbers");
    mu.nodes.push_back(t.get<double>());
  }
  for (const auto& w : weights) {
    if (!w.is_number()) throw std::invalid_argument("measure: weights must be numbers");
    mu.weights.push_back(w.get<double>());
  }
  validate(mu);
  return mu;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

Complex parse_complex(const std::string& s) {
  std::size_t comma = s.find(',');
  try {
    if (comma == std::string::npos) {
      std::size_t used = 0;
      double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument("");
      return Complex(re, 0.0);
    }
    std::size_t used = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument("");
    double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument("");
    return Complex(re, im);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse complex scalar '" + s +
                                "', expected re or re,im");
  }
}

}  // namespace gz
