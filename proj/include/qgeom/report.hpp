// Line-oriented report records: `kind key=value key=value ...`.
// Values containing whitespace, quotes or '=' are double-quoted.
#pragma once

#include "qgeom/error.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qgeom {

inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

/// "fnv1a:<hex>" of a file's bytes.
inline std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::FileNotFound, path);
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return "fnv1a:" + hex64(fnv1a(bytes));
}

class Record {
public:
    explicit Record(std::string kind) : kind_(std::move(kind)) {}

    Record& add(const std::string& key, const std::string& value) {
        fields_.emplace_back(key, value);
        return *this;
    }
    Record& add(const std::string& key, const char* value) { return add(key, std::string(value)); }
    Record& add(const std::string& key, long long value) { return add(key, std::to_string(value)); }
    Record& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
    Record& add(const std::string& key, bool value) { return add(key, std::string(value ? "true" : "false")); }

    std::string str() const {
        std::string out = kind_;
        for (const auto& [k, v] : fields_) out += " " + k + "=" + quote(v);
        return out;
    }

private:
    static std::string quote(const std::string& v) {
        const bool plain = !v.empty() && v.find_first_of(" \t\n\"=") == std::string::npos;
        if (plain) return v;
        std::string q = "\"";
        for (char c : v) {
            if (c == '"' || c == '\\') q += '\\';
            if (c == '\n') {
                q += "\\n";
                continue;
            }
            q += c;
        }
        return q + "\"";
    }

    std::string kind_;
    std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace qgeom
