#ifndef EDGEDEPTH_CONFIG_HPP
#define EDGEDEPTH_CONFIG_HPP

#include <map>
#include <optional>
#include <string>

namespace edgedepth {

/// Flat key = value configuration.  Lookup order: explicit overrides,
/// then EDGEDEPTH_<KEY> environment variables, then the parsed file,
/// then the built-in default.
class Config {
public:
    Config() = default;

    // "key = value" lines; '#' starts a comment; blank lines ignored
    static Config parse(const std::string& text);
    static Config load_file(const std::string& path);

    void set(const std::string& key, const std::string& value);
    std::optional<std::string> raw(const std::string& key) const;

    long get_long(const std::string& key, long fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;

private:
    std::map<std::string, std::string> file_values_;
    std::map<std::string, std::string> overrides_;
};

} // namespace edgedepth

#endif
