#pragma once

#include <string>
#include <vector>

namespace homlie {

// Structured text report: one "key: value" line per item in insertion
// order, findings as dedicated lines. Rendering is deterministic.
class Report {
  public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, bool value);
    void add(const std::string& key, long value);
    void finding(const std::string& text);
    bool has_findings() const { return !findings_.empty(); }
    std::string render() const;

  private:
    std::vector<std::pair<std::string, std::string>> items_;
    std::vector<std::string> findings_;
};

// FNV-1a 64-bit content digest, hex-rendered; used to echo input identities.
std::string digest(const std::string& content);

} // namespace homlie
