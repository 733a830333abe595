// Loaders for the transcribed table fixtures.
#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk3::testing {

inline std::string fixture_path(const std::string& name) { return std::string(HK3_FIXTURES) + "/" + name; }

inline std::vector<std::vector<std::string>> read_tsv(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("cannot open fixture " + name);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, '\t')) cols.push_back(c);
        rows.push_back(cols);
    }
    return rows;
}

// "2,2,1,3" -> {1,2,2,3}
inline std::vector<long> parse_ks(const std::string& s) {
    std::vector<long> ks;
    std::stringstream ss(s);
    std::string t;
    while (std::getline(ss, t, ',')) ks.push_back(std::stol(t));
    std::sort(ks.begin(), ks.end());
    return ks;
}

}  // namespace hk3::testing
