#include "zakharov/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zakharov/errors.hpp"

namespace zakharov::csv {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void write_preamble(std::ofstream& out, const Params& params, const char* header) {
  out << kMagic << '\n' << "# params:";
  for (const auto& [key, value] : params) out << ' ' << key << '=' << value;
  out << '\n' << header << '\n';
}

void write_row(std::ofstream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_value(v);
    first = false;
  }
  out << '\n';
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

const std::string* find_param(const Params& params, const std::string& key) {
  for (const auto& [k, v] : params) {
    if (k == key) return &v;
  }
  return nullptr;
}

}  // namespace

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

Table read_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    throw IoError(path.string() + ": missing '" + kMagic + "' line");
  }
  Table table;
  if (!std::getline(in, line) || line.rfind("# params:", 0) != 0) {
    throw IoError(path.string() + ": missing '# params:' line");
  }
  std::stringstream ss(line.substr(9));
  std::string token;
  while (ss >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw IoError(path.string() + ": bad parameter " + token);
    table.params.emplace_back(token.substr(0, eq), token.substr(eq + 1));
  }
  if (!std::getline(in, line)) throw IoError(path.string() + ": missing header row");
  table.columns = split(line, ',');
  std::size_t lineno = 3;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) {
      // strtod rather than stod: subnormals set ERANGE but are valid.
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw IoError(path.string() + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
      row.push_back(v);
    }
    if (row.size() != table.columns.size()) {
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": wrong column count");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_convergence(const ConvergenceRecord& record, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_preamble(out, record.params, kConvergenceHeader);
  for (const auto& r : record.rows) {
    write_row(out, {r.tau, r.err_E, r.err_u, r.err_uprime, r.err_composite});
  }
  finish(out, path);
}

ConvergenceRecord read_convergence(const std::filesystem::path& path) {
  Table table = read_table(path);
  if (table.columns != split(kConvergenceHeader, ',')) {
    throw IoError(path.string() + ": not a convergence table");
  }
  ConvergenceRecord record;
  record.params = table.params;
  if (const auto* v = find_param(table.params, "scheme")) record.scheme = parse_method(*v);
  if (const auto* v = find_param(table.params, "problem")) record.problem = parse_problem(*v);
  if (const auto* v = find_param(table.params, "s")) record.s_index = std::stod(*v);
  if (const auto* v = find_param(table.params, "T")) record.T = std::stod(*v);
  for (const auto& row : table.rows) {
    record.rows.push_back(ConvergenceRow{row[0], row[1], row[2], row[3], row[4]});
  }
  return record;
}

void write_run(const RunRecord& record, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_preamble(out, record.params, kRunHeader);
  for (const auto& r : record.rows) {
    write_row(out, {r.t, r.l2_E, r.hamiltonian, r.dev_l2, r.dev_H, r.mean_u, r.mean_uprime});
  }
  finish(out, path);
}

void write_snapshot(const FieldTriple& state, const Params& params,
                    const std::filesystem::path& path) {
  const Field E = to_physical(state.E);
  const Field u = to_physical(state.u);
  const Field up = to_physical(state.uprime);
  auto out = open_out(path);
  write_preamble(out, params, kSnapshotHeader);
  for (std::size_t j = 0; j < E.size(); ++j) {
    write_row(out, {E.grid().point(j), E[j].real(), E[j].imag(), u[j].real(), up[j].real(),
                    std::abs(E[j])});
  }
  finish(out, path);
}

FieldTriple read_snapshot(const std::filesystem::path& path) {
  Table table = read_table(path);
  if (table.columns != split(kSnapshotHeader, ',')) {
    throw IoError(path.string() + ": not a snapshot table");
  }
  const std::size_t K = table.rows.size();
  if (K < 2) throw IoError(path.string() + ": snapshot has fewer than two points");
  double L = static_cast<double>(K) * (table.rows[1][0] - table.rows[0][0]);
  if (const auto* v = find_param(table.params, "L")) L = std::stod(*v);
  GridPtr grid;
  try {
    grid = make_grid(L, K);
  } catch (const std::invalid_argument& e) {
    throw IoError(path.string() + ": " + e.what());
  }
  std::vector<Complex> E(K), u(K), up(K);
  for (std::size_t j = 0; j < K; ++j) {
    const auto& r = table.rows[j];
    E[j] = Complex(r[1], r[2]);
    u[j] = r[3];
    up[j] = r[4];
  }
  return {Field(grid, std::move(E), Representation::physical),
          Field(grid, std::move(u), Representation::physical),
          Field(grid, std::move(up), Representation::physical)};
}

}  // namespace zakharov::csv
