#pragma once

#include "qjensen/numeric.hpp"
#include "qjensen/wright.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <random>

namespace qjensen {

inline std::string real_str(const Real& x, unsigned digits = 30) {
    return x.str(digits, std::ios_base::scientific);
}

// write via temp file + rename so readers never observe a partial file
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    fs::create_directories(dir);
    fs::path tmp = dir / (path.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os << content;
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

// profiles serialize with full-precision decimal strings; plain JSON numbers
// are also accepted on input
inline nlohmann::json profile_to_json(const WrightProfile& pr) {
    nlohmann::json j;
    j["A"] = real_str(pr.A, 70);
    j["B"] = real_str(pr.B, 70);
    j["K"] = pr.K;
    nlohmann::json alphas = nlohmann::json::array();
    for (const auto& a : pr.alphas) alphas.push_back(real_str(a, 70));
    j["alphas"] = alphas;
    j["kappa"] = real_str(pr.kappa, 70);
    j["M"] = real_str(pr.M, 70);
    return j;
}

inline Real real_from_json(const nlohmann::json& v) {
    if (v.is_string()) return Real(v.get<std::string>());
    if (v.is_number_integer()) return Real(v.get<long long>());
    return Real(v.get<double>());
}

inline WrightProfile profile_from_json(const nlohmann::json& j) {
    WrightProfile pr;
    pr.A = real_from_json(j.at("A"));
    pr.B = real_from_json(j.at("B"));
    pr.K = j.at("K").get<long>();
    pr.alphas.clear();
    for (const auto& a : j.at("alphas")) pr.alphas.push_back(real_from_json(a));
    pr.kappa = real_from_json(j.at("kappa"));
    pr.M = real_from_json(j.at("M"));
    pr.validate();
    return pr;
}

} // namespace qjensen
