#include "vodsim/util.hpp"

#include <charconv>
#include <cstring>

namespace vodsim {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        // trim
        std::size_t b = tok.find_first_not_of(" \t\r");
        std::size_t e = tok.find_last_not_of(" \t\r");
        if (b == std::string::npos) {
            if (!(pos == 0 && comma == text.size()))
                throw ConfigError("empty field in numeric list: '" + text + "'");
            break;
        }
        tok = tok.substr(b, e - b + 1);
        double v;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ConfigError("bad number '" + tok + "' in list");
        out.push_back(v);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    return mix64(mix64(seed + 0x9e3779b97f4a7c15ull * tag) ^ mix64(index + 1));
}

}  // namespace vodsim
