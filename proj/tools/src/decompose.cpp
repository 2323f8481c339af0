#include <istream>
#include <sstream>

#include "hyperherm/report.hpp"

namespace hyperherm::report {

namespace {

Json matrix_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

BilinearForm<Rational> read_form(std::istream& in, std::size_t n) {
  if (n == 0) throw UsageError("n must be positive");
  const std::size_t d = 4 * n;
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Rational> row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.push_back(Rational::parse(tok));
      } catch (const std::invalid_argument& e) {
        throw UsageError("row " + std::to_string(rows.size() + 1) + ": " + e.what());
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.size() != d) throw UsageError("expected " + std::to_string(d) + " rows, got " + std::to_string(rows.size()));
  BilinearForm<Rational> f{n, Matrix<Rational>(d)};
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d)
      throw UsageError("row " + std::to_string(i + 1) + ": expected " + std::to_string(d) + " entries, got " +
                       std::to_string(rows[i].size()));
    for (std::size_t j = 0; j < d; ++j) f.gram(i, j) = rows[i][j];
  }
  return f;
}

Json decompose(const BilinearForm<Rational>& form) {
  const auto h = standard_structure<Rational>(form.n);
  Json doc;
  doc["n"] = form.n;
  doc["input"] = matrix_json(form.gram);
  doc["input_class"] = hermitian_type(form, h).label();
  Json parts = Json::array();
  Matrix<Rational> sum(form.gram.size());
  for (int a = 0; a < 4; ++a) {
    const auto p = project(form, h, a);
    sum = sum + p.gram;
    const auto verdict = hermitian_type(p, h);
    parts.push_back({{"alpha", a},
                     {"zero", p.gram.is_zero()},
                     {"in_class", static_cast<bool>(verdict.in_class[a])},
                     {"class", verdict.label()},
                     {"matrix", matrix_json(p.gram)}});
  }
  doc["projections"] = std::move(parts);
  doc["reconstruction_exact"] = sum == form.gram;
  return doc;
}

std::string render_decompose_text(const Json& doc) {
  std::ostringstream os;
  auto print_matrix = [&](const Json& rows) {
    for (const auto& row : rows) {
      os << "   ";
      for (const auto& v : row) os << " " << v.get<std::string>();
      os << "\n";
    }
  };
  os << "n = " << doc["n"].get<std::size_t>() << ", input class " << doc["input_class"].get<std::string>() << "\n";
  print_matrix(doc["input"]);
  for (const auto& p : doc["projections"]) {
    os << "\nPi_" << p["alpha"].get<int>() << " f  (" << p["class"].get<std::string>()
       << (p["in_class"].get<bool>() ? ", in B" + std::to_string(p["alpha"].get<int>()) : ", NOT in class") << ")\n";
    if (p["zero"].get<bool>()) os << "    0\n";
    else print_matrix(p["matrix"]);
  }
  os << "\nreconstruction sum Pi_a f = f: " << (doc["reconstruction_exact"].get<bool>() ? "exact" : "FAILED") << "\n";
  return os.str();
}

}  // namespace hyperherm::report
