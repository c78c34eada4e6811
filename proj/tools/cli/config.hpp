#pragma once

// Run configuration: per-subcommand JSON defaults, overlaid by a config file and
// then by repeatable `--set key=value` flags. Keys are dotted paths into the
// document ("grid.nx"). Unknown keys are rejected so typos do not pass silently.

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace exocalc::cli {

using nlohmann::json;

class Config
{
  public:
    explicit Config(json defaults);

    /// Overlay a JSON document read from `path`.
    void merge_file(const std::string& path);
    /// Overlay an in-memory document; same checks as merge_file.
    void merge(const json& doc);
    /// "a.b=value"; value is parsed as JSON when possible, else taken as a string.
    void apply_set(const std::string& assignment);

    double number(const std::string& key) const;
    std::int64_t integer(const std::string& key) const;
    std::uint64_t seed(const std::string& key = "seed") const;
    bool boolean(const std::string& key) const;
    std::string string(const std::string& key) const;
    bool is_null(const std::string& key) const;

    /// A number list; a scalar gives one entry, {"min","max","count"} a closed linspace.
    /// Empty sweeps are returned as such; callers decide whether that is an error.
    std::vector<double> sweep(const std::string& key) const;
    /// A fixed-length list of numbers, e.g. a four-vector.
    std::vector<double> vector(const std::string& key, std::size_t length) const;
    /// A list of fixed-length lists.
    std::vector<std::vector<double>> points(const std::string& key, std::size_t length) const;

    const json& at(const std::string& key) const;
    const json& document() const { return doc_; }

  private:
    json doc_;
    json defaults_;
};

/// Double that is finite, else ConfigError naming the key.
double finite(const json& v, const std::string& key);

} // namespace exocalc::cli
