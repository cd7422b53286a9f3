#include "pcakit/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace pcakit::kern {
namespace {

const Table& pick() {
    if (const char* env = std::getenv("PCAKIT_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return scalar_table();
        if (std::strcmp(env, "avx2") == 0) {
            if (const Table* t = avx2_table()) return *t;
            return scalar_table();
        }
        if (std::strcmp(env, "neon") == 0) {
            if (const Table* t = neon_table()) return *t;
            return scalar_table();
        }
        return scalar_table();
    }
    if (const Table* t = avx2_table()) return *t;
    if (const Table* t = neon_table()) return *t;
    return scalar_table();
}

}  // namespace

const Table& active() {
    static const Table& chosen = pick();
    return chosen;
}

}  // namespace pcakit::kern
