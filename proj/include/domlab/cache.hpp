#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "domlab/version.hpp"

namespace domlab {

/// Append-only JSON-lines result cache. Records are keyed by (canonical
/// hash, invariant, k, engine version); a hit returns the stored line
/// byte-identically. Corrupt lines are skipped with a warning. The file
/// path comes from $DOMLAB_CACHE, defaulting to .domlab-cache.jsonl.
class ResultCache {
public:
    explicit ResultCache(std::string path = default_path()) : path_(std::move(path)) {}

    static std::string default_path() {
        if (const char* env = std::getenv("DOMLAB_CACHE")) return env;
        return ".domlab-cache.jsonl";
    }

    const std::string& path() const { return path_; }

    /// Serialized record line for a key, if present. Later records win
    /// (the file is append-only).
    std::optional<std::string> lookup(const std::string& hash, const std::string& invariant,
                                      const nlohmann::json& k) const {
        std::ifstream in(path_);
        if (!in) return std::nullopt;
        std::optional<std::string> found;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
            if (rec.is_discarded() || !rec.is_object()) {
                std::cerr << "warning: skipping corrupt cache line " << lineno << " in " << path_
                          << "\n";
                continue;
            }
            if (rec.value("hash", "") != hash) continue;
            if (rec.value("invariant", "") != invariant) continue;
            if (rec.value("engine_version", "") != kEngineVersion) continue;
            if (rec.contains("k") ? rec["k"] != k : !k.is_null()) continue;
            found = line;
        }
        return found;
    }

    void append(const std::string& record_line) const {
        std::ofstream out(path_, std::ios::app);
        if (!out) {
            std::cerr << "warning: cannot write cache file " << path_ << "\n";
            return;
        }
        out << record_line << '\n';
    }

private:
    std::string path_;
};

}  // namespace domlab
