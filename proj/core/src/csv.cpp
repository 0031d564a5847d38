#include "kinet/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kinet/errors.hpp"

namespace kinet {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_snapshot_csv(std::ostream& os, const DistributionFunction& f) {
    os << "vx,vy,vz,f\n";
    for (std::size_t idx = 0; idx < f.grid.size(); ++idx) {
        const Vec3 c = f.grid.center(idx);
        os << format_double(c.x) << ',' << format_double(c.y) << ',' << format_double(c.z) << ','
           << format_double(f[idx]) << '\n';
    }
}

void write_snapshot_csv(const std::string& path, const DistributionFunction& f) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open for writing: " + path);
    write_snapshot_csv(os, f);
}

DistributionFunction read_snapshot_csv(std::istream& is, const VelocityGrid& grid) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("vx,vy,vz,f", 0) != 0)
        throw ConfigError("snapshot csv: missing vx,vy,vz,f header");
    DistributionFunction f(grid);
    std::size_t idx = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (idx >= grid.size()) throw ConfigError("snapshot csv: more rows than grid cells");
        double vx, vy, vz, val;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &vx, &vy, &vz, &val) != 4)
            throw ConfigError("snapshot csv: malformed row: " + line);
        f[idx++] = val;
    }
    if (idx != grid.size()) throw ConfigError("snapshot csv: fewer rows than grid cells");
    return f;
}

DistributionFunction read_snapshot_csv(const std::string& path, const VelocityGrid& grid) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open for reading: " + path);
    return read_snapshot_csv(is, grid);
}

void write_table_csv(const std::string& path, const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open for writing: " + path);
    for (std::size_t c = 0; c < columns.size(); ++c)
        os << columns[c] << (c + 1 < columns.size() ? ',' : '\n');
    for (const auto& row : rows) {
        if (row.size() != columns.size()) throw ParameterError("write_table_csv: ragged row");
        for (std::size_t c = 0; c < row.size(); ++c)
            os << format_double(row[c]) << (c + 1 < row.size() ? ',' : '\n');
    }
}

}  // namespace kinet
