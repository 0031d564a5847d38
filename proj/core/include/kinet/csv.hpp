#ifndef KINET_CSV_HPP
#define KINET_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "kinet/distribution.hpp"

namespace kinet {

/// Full round-trip decimal form of a double (17 significant digits).
std::string format_double(double v);

/// Distribution snapshot: header "vx,vy,vz,f", one row per grid cell in
/// lexicographic (i,j,k) order.
void write_snapshot_csv(std::ostream& os, const DistributionFunction& f);
void write_snapshot_csv(const std::string& path, const DistributionFunction& f);

/// Reads a snapshot previously written by write_snapshot_csv; the grid
/// geometry must be supplied (the file stores cell centers and values).
DistributionFunction read_snapshot_csv(std::istream& is, const VelocityGrid& grid);
DistributionFunction read_snapshot_csv(const std::string& path, const VelocityGrid& grid);

/// Generic numeric table with a comma-separated header line.
void write_table_csv(const std::string& path, const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows);

}  // namespace kinet

#endif
