#pragma once

#include <string>
#include <utility>
#include <vector>

namespace addiso {

/// Line-oriented key/value report: one `key: value` pair per line, emitted in
/// insertion order. Machine output is byte-deterministic and re-parses to an
/// equal report.
struct Report {
    std::vector<std::pair<std::string, std::string>> kv;

    void add(std::string key, std::string value) { kv.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, const char* value) { kv.emplace_back(std::move(key), std::string(value)); }
    void add(std::string key, uint64_t value) { kv.emplace_back(std::move(key), std::to_string(value)); }
    void add(std::string key, bool value) { kv.emplace_back(std::move(key), value ? "yes" : "no"); }

    std::string to_text() const;
    static Report parse(const std::string& text);

    friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace addiso
