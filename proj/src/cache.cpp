#include "turan/cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "turan/version.hpp"

namespace turan {

namespace {

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// scans the JSONL file; returns the entry for `key` if any
std::optional<nlohmann::json> scan_for_key(const std::string& path, const std::string& key) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json entry;
        try {
            entry = nlohmann::json::parse(line);
            if (entry.at("key").get<std::string>() == key) return entry;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "warning: skipping corrupt cache line " << lineno << " in " << path
                      << ": " << e.what() << "\n";
        }
    }
    return std::nullopt;
}

}  // namespace

CertificateCache::CertificateCache(std::string path) : path_(std::move(path)) {}

std::optional<Certificate> CertificateCache::lookup(const std::string& key,
                                                    bool require_optimal) const {
    auto entry = scan_for_key(path_, key);
    if (!entry) return std::nullopt;
    try {
        if (entry->at("toolkit_version").get<std::string>() != kToolkitVersion) {
            return std::nullopt;
        }
        Certificate cert = Certificate::from_json(entry->at("value"));
        if (require_optimal && !cert.optimal) return std::nullopt;
        return cert;
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring unusable cache entry for " << key << ": " << e.what()
                  << "\n";
        return std::nullopt;
    }
}

void CertificateCache::store(const std::string& key, const Certificate& cert) {
    if (scan_for_key(path_, key)) return;  // append-only, keys unique
    nlohmann::json entry;
    entry["key"] = key;
    entry["value"] = cert.to_json();
    entry["created_at"] = utc_timestamp();
    entry["toolkit_version"] = kToolkitVersion;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path_);
    out << entry.dump() << "\n";
}

}
