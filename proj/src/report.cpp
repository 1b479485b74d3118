#include "homlie/report.hpp"

#include <cstdint>
#include <sstream>

namespace homlie {

void Report::add(const std::string& key, const std::string& value) {
    items_.push_back({key, value});
}

void Report::add(const std::string& key, bool value) {
    items_.push_back({key, value ? "true" : "false"});
}

void Report::add(const std::string& key, long value) {
    items_.push_back({key, std::to_string(value)});
}

void Report::finding(const std::string& text) { findings_.push_back(text); }

std::string Report::render() const {
    std::ostringstream out;
    for (const auto& [k, v] : items_) out << k << ": " << v << "\n";
    for (const auto& f : findings_) out << "finding: " << f << "\n";
    return out.str();
}

std::string digest(const std::string& content) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

} // namespace homlie
