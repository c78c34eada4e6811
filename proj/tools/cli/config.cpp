#include "cli/config.hpp"

#include "exocalc/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace exocalc::cli {

namespace {

std::vector<std::string> split_key(const std::string& key)
{
    std::vector<std::string> parts;
    std::stringstream ss(key);
    std::string p;
    while (std::getline(ss, p, '.')) {
        if (p.empty())
            throw ConfigError("empty component in key '" + key + "'");
        parts.push_back(p);
    }
    if (parts.empty())
        throw ConfigError("empty key");
    return parts;
}

// Every key of `doc` must exist in `ref`; recursion stops where `ref` holds a non-object.
void check_known(const json& doc, const json& ref, const std::string& prefix)
{
    if (!doc.is_object())
        throw ConfigError(prefix.empty() ? "config must be a JSON object" : "'" + prefix + "' must be an object");
    for (const auto& [k, v] : doc.items()) {
        const std::string path = prefix.empty() ? k : prefix + "." + k;
        if (!ref.contains(k))
            throw ConfigError("unknown config key '" + path + "'");
        if (ref[k].is_object() && v.is_object())
            check_known(v, ref[k], path);
    }
}

// Like a JSON merge patch, except that null is stored rather than deleting the key.
void overlay(json& target, const json& patch)
{
    for (const auto& [k, v] : patch.items()) {
        if (v.is_object() && target.contains(k) && target[k].is_object())
            overlay(target[k], v);
        else
            target[k] = v;
    }
}

} // namespace

double finite(const json& v, const std::string& key)
{
    if (!v.is_number())
        throw ConfigError("'" + key + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw ConfigError("'" + key + "' must be finite");
    return d;
}

Config::Config(json defaults) : doc_(defaults), defaults_(std::move(defaults)) {}

void Config::merge(const json& doc)
{
    check_known(doc, defaults_, "");
    overlay(doc_, doc);
}

void Config::merge_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed JSON in '" + path + "': " + e.what());
    }
    merge(doc);
}

void Config::apply_set(const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("--set expects key=value, got '" + assignment + "'");
    const auto parts = split_key(assignment.substr(0, eq));
    const std::string raw = assignment.substr(eq + 1);
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded())
        value = raw;

    const json* ref = &defaults_;
    json* node = &doc_;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        if (!ref->is_object() || !ref->contains(p))
            throw ConfigError("unknown config key '" + assignment.substr(0, eq) + "'");
        ref = &(*ref)[p];
        if (i + 1 == parts.size())
            (*node)[p] = value;
        else {
            if (!(*node)[p].is_object())
                throw ConfigError("'" + p + "' is not an object");
            node = &(*node)[p];
        }
    }
}

const json& Config::at(const std::string& key) const
{
    const json* node = &doc_;
    for (const auto& p : split_key(key)) {
        if (!node->is_object() || !node->contains(p))
            throw ConfigError("missing config key '" + key + "'");
        node = &(*node)[p];
    }
    return *node;
}

double Config::number(const std::string& key) const { return finite(at(key), key); }

std::int64_t Config::integer(const std::string& key) const
{
    const json& v = at(key);
    if (!v.is_number_integer())
        throw ConfigError("'" + key + "' must be an integer");
    return v.get<std::int64_t>();
}

std::uint64_t Config::seed(const std::string& key) const
{
    const json& v = at(key);
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw ConfigError("'" + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

bool Config::boolean(const std::string& key) const
{
    const json& v = at(key);
    if (!v.is_boolean())
        throw ConfigError("'" + key + "' must be true or false");
    return v.get<bool>();
}

std::string Config::string(const std::string& key) const
{
    const json& v = at(key);
    if (!v.is_string())
        throw ConfigError("'" + key + "' must be a string");
    return v.get<std::string>();
}

bool Config::is_null(const std::string& key) const { return at(key).is_null(); }

std::vector<double> Config::sweep(const std::string& key) const
{
    const json& v = at(key);
    if (v.is_number())
        return {finite(v, key)};
    if (v.is_array()) {
        std::vector<double> out;
        for (const auto& e : v)
            out.push_back(finite(e, key));
        return out;
    }
    if (v.is_object()) {
        for (const char* k : {"min", "max", "count"})
            if (!v.contains(k))
                throw ConfigError("sweep '" + key + "' needs min, max and count");
        for (const auto& [k, _] : v.items())
            if (k != "min" && k != "max" && k != "count")
                throw ConfigError("unknown sweep field '" + key + "." + k + "'");
        const double lo = finite(v["min"], key + ".min"), hi = finite(v["max"], key + ".max");
        if (!v["count"].is_number_integer() || v["count"].get<std::int64_t>() < 0)
            throw ConfigError("'" + key + ".count' must be a non-negative integer");
        const auto n = v["count"].get<std::int64_t>();
        std::vector<double> out;
        for (std::int64_t i = 0; i < n; ++i)
            out.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
        return out;
    }
    throw ConfigError("'" + key + "' must be a number, a list or {min, max, count}");
}

std::vector<double> Config::vector(const std::string& key, std::size_t length) const
{
    const json& v = at(key);
    if (!v.is_array() || v.size() != length)
        throw ConfigError("'" + key + "' must be a list of " + std::to_string(length) + " numbers");
    std::vector<double> out;
    for (const auto& e : v)
        out.push_back(finite(e, key));
    return out;
}

std::vector<std::vector<double>> Config::points(const std::string& key, std::size_t length) const
{
    const json& v = at(key);
    if (!v.is_array())
        throw ConfigError("'" + key + "' must be a list");
    std::vector<std::vector<double>> out;
    for (const auto& row : v) {
        if (!row.is_array() || row.size() != length)
            throw ConfigError("each entry of '" + key + "' must have " + std::to_string(length) + " numbers");
        std::vector<double> r;
        for (const auto& e : row)
            r.push_back(finite(e, key));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace exocalc::cli
