#include "foliage/parallel.hpp"

#include <cstdlib>
#include <string>

namespace foliage {

int default_threads() {
    if (const char* env = std::getenv("FOLIAGE_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t > 0) return t;
        } catch (...) {
        }
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

}  // namespace foliage
