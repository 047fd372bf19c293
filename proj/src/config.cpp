#include "edgedepth/config.hpp"
#include "edgedepth/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace edgedepth {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1])))
        --end;
    return s.substr(begin, end - begin);
}

} // namespace

Config Config::parse(const std::string& text) {
    Config config;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ParseError("config line " + std::to_string(lineno) + ": empty key");
        config.file_values_[key] = value;
    }
    return config;
}

Config Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void Config::set(const std::string& key, const std::string& value) { overrides_[key] = value; }

std::optional<std::string> Config::raw(const std::string& key) const {
    if (auto it = overrides_.find(key); it != overrides_.end())
        return it->second;
    std::string env_key = "EDGEDEPTH_";
    for (char c : key)
        env_key += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (const char* env = std::getenv(env_key.c_str()))
        return std::string(env);
    if (auto it = file_values_.find(key); it != file_values_.end())
        return it->second;
    return std::nullopt;
}

long Config::get_long(const std::string& key, long fallback) const {
    auto value = raw(key);
    if (!value)
        return fallback;
    try {
        std::size_t pos = 0;
        long parsed = std::stol(*value, &pos);
        if (pos != value->size())
            throw ParseError("");
        return parsed;
    } catch (const std::exception&) {
        throw ParseError("config: key '" + key + "' is not an integer: '" + *value + "'");
    }
}

int Config::get_int(const std::string& key, int fallback) const {
    return static_cast<int>(get_long(key, fallback));
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    return raw(key).value_or(fallback);
}

} // namespace edgedepth
