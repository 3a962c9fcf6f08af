#include "wigner/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wigner {

namespace {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Metadata with_grid_entries(const WignerField& field, const Metadata& extra) {
    const auto& g = field.grid;
    Metadata all;
    all.emplace_back("x_min", format_value(g.x_min));
    all.emplace_back("x_max", format_value(g.x_max));
    all.emplace_back("nx", std::to_string(g.nx));
    all.emplace_back("p_min", format_value(g.p_min));
    all.emplace_back("p_max", format_value(g.p_max));
    all.emplace_back("np", std::to_string(g.np));
    all.emplace_back("time", field.timestamp ? format_value(*field.timestamp)
                                             : std::string("stationary"));
    all.insert(all.end(), extra.begin(), extra.end());
    return all;
}

}  // namespace

void write_field_csv(const WignerField& field, const std::filesystem::path& path,
                     const Metadata& metadata) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (const auto& [key, value] : with_grid_entries(field, metadata)) {
        out << "# " << key << "=" << value << "\n";
    }
    out << "x,p,value\n";
    const Eigen::VectorXd xs = field.grid.x_nodes();
    const Eigen::VectorXd ps = field.grid.p_nodes();
    for (Eigen::Index i = 0; i < field.grid.nx; ++i) {
        for (Eigen::Index j = 0; j < field.grid.np; ++j) {
            out << format_value(xs[i]) << ',' << format_value(ps[j]) << ','
                << format_value(field.values(i, j)) << '\n';
        }
    }
    if (!out) throw IoError("write failed for " + path.string());
}

WignerField read_field_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    Metadata meta;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] != '#') break;  // header row reached
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(1, eq - 1);
        key.erase(0, key.find_first_not_of(' '));
        meta.emplace_back(key, line.substr(eq + 1));
    }
    const auto lookup = [&](const std::string& key) -> std::string {
        for (const auto& [k, v] : meta) {
            if (k == key) return v;
        }
        throw IoError("missing metadata key " + key + " in " + path.string());
    };
    PhaseSpaceGrid grid = make_grid(std::stod(lookup("x_min")), std::stod(lookup("x_max")),
                                    std::stoll(lookup("nx")), std::stod(lookup("p_min")),
                                    std::stod(lookup("p_max")), std::stoll(lookup("np")));
    WignerField field{grid, Eigen::MatrixXd(grid.nx, grid.np), std::nullopt};
    const std::string stamp = lookup("time");
    if (stamp != "stationary") field.timestamp = std::stod(stamp);

    for (Eigen::Index i = 0; i < grid.nx; ++i) {
        for (Eigen::Index j = 0; j < grid.np; ++j) {
            if (!std::getline(in, line)) throw IoError("truncated field in " + path.string());
            const auto c1 = line.find(',');
            const auto c2 = line.find(',', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos) {
                throw IoError("malformed row in " + path.string());
            }
            field.values(i, j) = std::stod(line.substr(c2 + 1));
        }
    }
    return field;
}

void write_pgm_pair(const WignerField& field, const std::filesystem::path& positive_path,
                    const std::filesystem::path& negative_path, const Metadata& metadata) {
    const auto write_one = [&](const std::filesystem::path& path, bool positive) {
        double extreme = 0.0;
        for (Eigen::Index i = 0; i < field.grid.nx; ++i) {
            for (Eigen::Index j = 0; j < field.grid.np; ++j) {
                const double v = positive ? field.values(i, j) : -field.values(i, j);
                extreme = std::max(extreme, v);
            }
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open " + path.string() + " for writing");
        out << "P5\n";
        for (const auto& [key, value] : with_grid_entries(field, metadata)) {
            out << "# " << key << "=" << value << "\n";
        }
        out << "# part=" << (positive ? "positive" : "negative") << "\n";
        out << field.grid.nx << " " << field.grid.np << "\n255\n";
        std::string row(static_cast<size_t>(field.grid.nx), '\0');
        for (Eigen::Index j = field.grid.np - 1; j >= 0; --j) {  // p_max at the top
            for (Eigen::Index i = 0; i < field.grid.nx; ++i) {
                const double v = positive ? field.values(i, j) : -field.values(i, j);
                const double scaled = (extreme > 0.0 && v > 0.0) ? 255.0 * v / extreme : 0.0;
                row[static_cast<size_t>(i)] =
                    static_cast<char>(static_cast<unsigned char>(std::lround(scaled)));
            }
            out.write(row.data(), static_cast<std::streamsize>(row.size()));
        }
        if (!out) throw IoError("write failed for " + path.string());
    };
    write_one(positive_path, true);
    write_one(negative_path, false);
}

}  // namespace wigner
