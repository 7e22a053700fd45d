#pragma once

// Append-only JSON-lines certificate cache. One entry per line:
//   {"key": "T:6:5:3", "value": {...certificate...},
//    "created_at": "2026-01-01T00:00:00Z", "toolkit_version": "0.1.0"}
// Corrupt lines are skipped with a warning; keys are unique per file.

#include <optional>
#include <string>

#include "turan/solver.hpp"

namespace turan {

class CertificateCache {
public:
    explicit CertificateCache(std::string path);

    // Returns the cached certificate for the key if it is version-compatible
    // and, when `require_optimal`, proven optimal. Budget-limited entries are
    // never returned to a caller that asked for proven optimality.
    std::optional<Certificate> lookup(const std::string& key, bool require_optimal) const;

    // Appends the entry unless the key is already present.
    void store(const std::string& key, const Certificate& cert);

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}
