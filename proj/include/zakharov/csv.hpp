#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "zakharov/harness.hpp"

namespace zakharov::csv {

// Files start with "# zakharov-trig v1", then "# params: key=value ...",
// then the header row. Values are written with 17 significant digits.
inline constexpr const char* kMagic = "# zakharov-trig v1";
inline constexpr const char* kConvergenceHeader = "tau,err_E,err_u,err_uprime,err_composite";
inline constexpr const char* kRunHeader = "t,l2_E,hamiltonian,dev_l2,dev_H,mean_u,mean_uprime";
inline constexpr const char* kSnapshotHeader = "x,Re_E,Im_E,u,uprime,abs_E";

std::string format_value(double v);

/// Parsed file: metadata, header columns and numeric rows.
struct Table {
  Params params;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

Table read_table(const std::filesystem::path& path);

void write_convergence(const ConvergenceRecord& record, const std::filesystem::path& path);
ConvergenceRecord read_convergence(const std::filesystem::path& path);

void write_run(const RunRecord& record, const std::filesystem::path& path);

void write_snapshot(const FieldTriple& state, const Params& params,
                    const std::filesystem::path& path);
/// Rebuilds (E, u, u') from a snapshot file. The grid length is taken from
/// the L parameter when present, otherwise from the x spacing.
FieldTriple read_snapshot(const std::filesystem::path& path);

}  // namespace zakharov::csv
