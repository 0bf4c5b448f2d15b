#include "homalg/algebra_file.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace homalg {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw FileError(origin + ": " + what);
}

Rational scalar_at(const json& j, const std::string& origin, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(origin, where + ": " + e.what());
    }
  }
  fail(origin, where + ": expected an integer or a \"p/q\" string");
}

const json& field(const json& j, const std::string& origin, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) fail(origin, "missing field \"" + key + "\"");
  return *it;
}

Matrix parse_matrix(const json& j, int d, const std::string& origin,
                    const std::string& where) {
  if (!j.is_array() || int(j.size()) != d) {
    fail(origin, where + ": expected " + std::to_string(d) + " rows");
  }
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    const json& row = j[i];
    if (!row.is_array() || int(row.size()) != d) {
      fail(origin, where + "[" + std::to_string(i) + "]: expected " +
                       std::to_string(d) + " entries");
    }
    for (int k = 0; k < d; ++k) {
      m.at(i, k) = scalar_at(row[k], origin,
                             where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
  }
  return m;
}

DenseTensor parse_product(const json& j, int d, const std::string& origin,
                          const std::string& where) {
  if (!j.is_array() || int(j.size()) != d) {
    fail(origin, where + ": expected " + std::to_string(d) + " rows");
  }
  DenseTensor t(map_shape(d, 2));
  for (int i = 0; i < d; ++i) {
    const json& row = j[i];
    if (!row.is_array() || int(row.size()) != d) {
      fail(origin, where + "[" + std::to_string(i) + "]: expected " +
                       std::to_string(d) + " entries");
    }
    for (int k = 0; k < d; ++k) {
      const json& cell = row[k];
      const std::string cell_where =
          where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      if (!cell.is_array() || int(cell.size()) != d) {
        fail(origin, cell_where + ": expected " + std::to_string(d) + " coefficients");
      }
      for (int o = 0; o < d; ++o) {
        t.at({i, k, o}) = scalar_at(cell[o], origin,
                                    cell_where + "[" + std::to_string(o) + "]");
      }
    }
  }
  return t;
}

std::string name_or(const json& j, const std::string& origin, const std::string& fallback) {
  auto it = j.find("name");
  if (it == j.end()) return fallback;
  if (!it->is_string()) fail(origin, "field \"name\": expected a string");
  return it->get<std::string>();
}

int dim_of(const json& j, const std::string& origin) {
  const json& d = field(j, origin, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 64) {
    fail(origin, "field \"dim\": expected an integer in 1..64");
  }
  return d.get<int>();
}

json scalar_json(const Rational& r) {
  const std::string s = r.str();
  if (s.find('/') == std::string::npos) {
    try {
      return json(std::stoll(s));
    } catch (const std::exception&) {
      // falls through to the string form for out-of-range numerators
    }
  }
  return json(s);
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json product_json(const DenseTensor& t) {
  const int d = t.shape()[0];
  json rows = json::array();
  for (int i = 0; i < d; ++i) {
    json row = json::array();
    for (int k = 0; k < d; ++k) {
      json cell = json::array();
      for (int o = 0; o < d; ++o) cell.push_back(scalar_json(t.at({i, k, o})));
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

LoadedAlgebra load_algebra_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be an object");

  const json& kind = field(j, origin, "kind");
  if (!kind.is_string()) fail(origin, "field \"kind\": expected a string");
  const std::string k = kind.get<std::string>();
  const int d = dim_of(j, origin);
  Matrix alpha = parse_matrix(field(j, origin, "alpha"), d, origin, "alpha");

  if (k == "hom-associative") {
    DenseTensor mu = parse_product(field(j, origin, "mu"), d, origin, "mu");
    return make_algebra(d, std::move(mu), std::move(alpha), name_or(j, origin, origin));
  }
  if (k == "hom-dialgebra") {
    DenseTensor left = parse_product(field(j, origin, "dashv"), d, origin, "dashv");
    DenseTensor right = parse_product(field(j, origin, "vdash"), d, origin, "vdash");
    return make_dialgebra(d, std::move(left), std::move(right), std::move(alpha),
                          name_or(j, origin, origin));
  }
  fail(origin, "field \"kind\": expected \"hom-associative\" or \"hom-dialgebra\", got \"" + k + "\"");
}

LoadedAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_algebra_text(buf.str(), std::filesystem::path(path).stem().string());
}

std::string serialize(const HomAssociativeAlgebra& a) {
  json j;
  j["kind"] = "hom-associative";
  j["name"] = a.name;
  j["dim"] = a.dim;
  j["alpha"] = matrix_json(a.alpha);
  j["mu"] = product_json(a.mu);
  return j.dump(2) + "\n";
}

std::string serialize(const HomDialgebra& d) {
  json j;
  j["kind"] = "hom-dialgebra";
  j["name"] = d.name;
  j["dim"] = d.dim;
  j["alpha"] = matrix_json(d.alpha);
  j["dashv"] = product_json(d.left);
  j["vdash"] = product_json(d.right);
  return j.dump(2) + "\n";
}

std::string serialize(const LoadedAlgebra& any) {
  if (const auto* a = std::get_if<AlgebraPtr>(&any)) return serialize(**a);
  return serialize(**std::get_if<DialgebraPtr>(&any));
}

}  // namespace homalg
