#include "minkgeo/csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minkgeo {

std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        bool bad = false;
        while (std::getline(ss, cell, ',')) {
            try {
                size_t used = 0;
                double v = std::stod(cell, &used);
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used])))
                    ++used;
                if (used != cell.size()) throw std::invalid_argument("trailing junk");
                row.push_back(v);
            } catch (const std::exception&) {
                bad = true;
                break;
            }
        }
        if (bad) {
            if (first) {  // header row
                first = false;
                continue;
            }
            throw std::invalid_argument("malformed CSV row in " + path + ": " + line);
        }
        if (!row.empty()) rows.push_back(std::move(row));
        first = false;
    }
    return rows;
}

}  // namespace minkgeo
