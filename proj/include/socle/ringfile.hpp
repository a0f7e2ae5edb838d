#pragma once

// INI-style ring-description files: characteristic, variables, relations,
// named ideals, run options, and optional expectations for corpus checking.
// Unknown keys are rejected so that typos fail loudly instead of silently
// changing the computation.

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ring.hpp"

namespace socle {

struct RingFileOptions {
    std::optional<std::uint32_t> max_n;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> depth_lo;
    std::optional<std::uint32_t> depth_hi;
    std::optional<std::uint32_t> trials;
};

struct RingFile {
    std::uint32_t characteristic = 0;
    std::vector<std::string> vars;
    std::vector<std::string> relations;
    std::vector<std::pair<std::string, std::vector<std::string>>> ideals;
    RingFileOptions options;
    std::map<std::string, std::string> expect; // validated by the corpus checker
    std::string source_path;

    std::shared_ptr<const RingDescriptor> ring() const {
        return std::make_shared<RingDescriptor>(RingDescriptor::parse(
            static_cast<fp_t>(characteristic), vars, relations));
    }

    const std::vector<std::string>* find_ideal(const std::string& name) const {
        for (const auto& [n, gens] : ideals)
            if (n == name) return &gens;
        return nullptr;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

inline std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw input_error("ring file: key '" + key + "' needs an integer, got '" +
                          value + "'");
    }
}

} // namespace detail

inline RingFile parse_ring_file_text(std::istream& in, const std::string& path = "") {
    RingFile rf;
    rf.source_path = path;
    enum class Section { top, ideal, options, expect };
    Section section = Section::top;
    std::string line;
    std::size_t lineno = 0;
    bool saw_char = false, saw_vars = false;
    auto fail = [&](const std::string& msg) -> void {
        throw input_error("ring file " + (path.empty() ? "<memory>" : path) + ":" +
                          std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            std::string name = detail::trim(line.substr(1, line.size() - 2));
            if (name == "options") {
                section = Section::options;
            } else if (name == "expect") {
                section = Section::expect;
            } else if (name.rfind("ideal ", 0) == 0) {
                std::string id = detail::trim(name.substr(6));
                if (id.empty()) fail("ideal section needs a name");
                if (rf.find_ideal(id)) fail("duplicate ideal '" + id + "'");
                rf.ideals.emplace_back(id, std::vector<std::string>{});
                section = Section::ideal;
            } else {
                fail("unknown section [" + name + "]");
            }
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        switch (section) {
        case Section::top:
            if (key == "char") {
                rf.characteristic =
                    static_cast<std::uint32_t>(detail::parse_uint(key, value));
                saw_char = true;
            } else if (key == "vars") {
                rf.vars = detail::split_list(value, ',');
                saw_vars = true;
            } else if (key == "relations") {
                rf.relations = detail::split_list(value, ';');
            } else {
                fail("unknown top-level key '" + key + "'");
            }
            break;
        case Section::ideal:
            if (key == "gens")
                rf.ideals.back().second = detail::split_list(value, ';');
            else
                fail("unknown ideal key '" + key + "'");
            break;
        case Section::options:
            if (key == "max-n")
                rf.options.max_n = static_cast<std::uint32_t>(detail::parse_uint(key, value));
            else if (key == "seed")
                rf.options.seed = detail::parse_uint(key, value);
            else if (key == "trials")
                rf.options.trials =
                    static_cast<std::uint32_t>(detail::parse_uint(key, value));
            else if (key == "depth") {
                auto dots = value.find("..");
                if (dots == std::string::npos) {
                    rf.options.depth_lo = rf.options.depth_hi =
                        static_cast<std::uint32_t>(detail::parse_uint(key, value));
                } else {
                    rf.options.depth_lo = static_cast<std::uint32_t>(
                        detail::parse_uint(key, detail::trim(value.substr(0, dots))));
                    rf.options.depth_hi = static_cast<std::uint32_t>(
                        detail::parse_uint(key, detail::trim(value.substr(dots + 2))));
                }
            } else {
                fail("unknown option '" + key + "'");
            }
            break;
        case Section::expect:
            if (rf.expect.count(key)) fail("duplicate expectation '" + key + "'");
            rf.expect[key] = value;
            break;
        }
    }
    if (!saw_char) throw input_error("ring file " + path + ": missing 'char'");
    if (!saw_vars) throw input_error("ring file " + path + ": missing 'vars'");
    if (rf.characteristic < 2)
        throw input_error("ring file " + path + ": 'char' must be a prime >= 2");
    return rf;
}

inline RingFile parse_ring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open ring file: " + path);
    return parse_ring_file_text(in, path);
}

} // namespace socle
