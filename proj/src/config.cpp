#include "floorlog/config.hpp"

#include <cstdlib>
#include <string>

namespace floorlog {

long long summation_budget() {
    static const long long budget = [] {
        const char* env = std::getenv("FLOORLOG_BUDGET");
        if (env != nullptr) {
            try {
                long long v = std::stoll(env);
                if (v > 0) return v;
            } catch (...) {
            }
        }
        return 1LL << 24;
    }();
    return budget;
}

} // namespace floorlog
