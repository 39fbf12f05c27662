#include <istream>
#include <stdexcept>
#include <string>

#include "dicke2p/cli.hpp"

namespace dicke2p::cli {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(number) + ": expected key = value");
        std::string key = trim(text.substr(0, eq));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        if (key.empty())
            throw std::runtime_error("config line " + std::to_string(number) + ": empty key");
        out[key] = trim(text.substr(eq + 1));
    }
    return out;
}

std::vector<std::string> apply_config(const std::vector<std::string>& args,
                                      const std::map<std::string, std::string>& config) {
    if (args.empty()) return args;
    std::vector<std::string> out{args.front()};
    for (const auto& [key, value] : config) out.push_back("--" + key + "=" + value);
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

}  // namespace dicke2p::cli
