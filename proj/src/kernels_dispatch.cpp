#include <cstdlib>

#include "inkseg/kernels.hpp"

namespace inkseg::kernels {

#if defined(INKSEG_HAVE_AVX2)
namespace avx2 {
void relation_row(const double*, const double*, std::size_t, std::size_t, double*);
void distance_row(const double*, const double*, std::size_t, std::size_t, double*);
void chord_cosines(const double*, const double*, std::size_t, std::size_t, double*);
}  // namespace avx2
#endif

const KernelTable* avx2_table() {
#if defined(INKSEG_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2");
    static const KernelTable t{"avx2", &avx2::relation_row, &avx2::distance_row,
                               &avx2::chord_cosines};
    return supported ? &t : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable& chosen = [&]() -> const KernelTable& {
        const char* force = std::getenv("INKSEG_FORCE_SCALAR");
        if (force && *force && *force != '0') return scalar_table();
        if (const KernelTable* t = avx2_table()) return *t;
        return scalar_table();
    }();
    return chosen;
}

void relation_row(const StrokeSoA& s, std::size_t n, std::span<double> out) {
    if (s.size() < 2 || n + 1 >= s.size() || out.size() + 1 < s.size()) {
        throw InkError("relation_row: anchor or output size out of range");
    }
    active().relation_row(s.x.data(), s.y.data(), s.size(), n, out.data());
}

void distance_row(const StrokeSoA& s, std::size_t n, std::span<double> out) {
    if (n >= s.size() || out.size() < s.size()) {
        throw InkError("distance_row: anchor or output size out of range");
    }
    active().distance_row(s.x.data(), s.y.data(), s.size(), n, out.data());
}

void chord_cosines(const StrokeSoA& s, std::size_t m, std::span<double> out) {
    if (out.size() < s.size()) throw InkError("chord_cosines: output too small");
    active().chord_cosines(s.x.data(), s.y.data(), s.size(), m, out.data());
}

}  // namespace inkseg::kernels
