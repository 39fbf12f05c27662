#include "dicke2p/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace dicke2p {

unsigned thread_budget() {
    if (const char* env = std::getenv("DICKE2P_THREADS")) {
        const std::string_view text(env);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace dicke2p
