#include <doctest.h>

#include <cstring>

#include "inkseg/geometry.hpp"
#include "inkseg/kernels.hpp"
#include "inkseg/rng.hpp"
#include "helpers.hpp"

using namespace inkseg;

namespace {

Stroke random_walk(Rng& rng, std::size_t n) {
    Stroke s;
    Point p{0.5, 0.5};
    double heading = rng.uniform(0, 6.3);
    for (std::size_t i = 0; i < n; ++i) {
        s.points.push_back(p);
        heading += rng.uniform(-0.6, 0.6);
        p = p + 0.01 * Point{std::cos(heading), std::sin(heading)};
    }
    return s;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar relation row agrees with the geometry definition") {
    Rng rng(3);
    const Stroke s = random_walk(rng, 40);
    const kernels::StrokeSoA soa(s);
    std::vector<double> row(s.size() - 1);
    for (std::size_t a = 0; a + 2 < s.size(); ++a) {
        kernels::scalar::relation_row(soa.x.data(), soa.y.data(), soa.size(), a, row.data());
        for (std::size_t q = 0; q < row.size(); ++q) {
            if (q == a) {
                CHECK(row[q] == 0.0);
                continue;
            }
            CHECK(row[q] == doctest::Approx(direction_relation(s, a + 1, q + 1)).epsilon(1e-12));
        }
    }
}

TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
    const kernels::KernelTable* simd = kernels::avx2_table();
    if (simd == nullptr) {
        MESSAGE("AVX2 not available; nothing to compare");
        return;
    }
    const kernels::KernelTable& ref = kernels::scalar_table();
    Rng rng(17);
    // Sizes around the vector width exercise every tail length.
    for (std::size_t n : {3u, 4u, 5u, 6u, 7u, 8u, 9u, 13u, 31u, 64u, 97u, 250u}) {
        for (int rep = 0; rep < 4; ++rep) {
            const Stroke s = random_walk(rng, n);
            const kernels::StrokeSoA soa(s);
            for (std::size_t a = 0; a + 2 < n; ++a) {
                std::vector<double> r1(n - 1, -7.0), r2(n - 1, -7.0);
                ref.relation_row(soa.x.data(), soa.y.data(), n, a, r1.data());
                simd->relation_row(soa.x.data(), soa.y.data(), n, a, r2.data());
                CHECK(same_bits(r1, r2));
            }
            for (std::size_t a = 0; a < n; ++a) {
                std::vector<double> d1(n), d2(n);
                ref.distance_row(soa.x.data(), soa.y.data(), n, a, d1.data());
                simd->distance_row(soa.x.data(), soa.y.data(), n, a, d2.data());
                CHECK(same_bits(d1, d2));
            }
            for (std::size_t m = 1; 2 * m < n; ++m) {
                std::vector<double> c1(n, -7.0), c2(n, -7.0);
                ref.chord_cosines(soa.x.data(), soa.y.data(), n, m, c1.data());
                simd->chord_cosines(soa.x.data(), soa.y.data(), n, m, c2.data());
                CHECK(same_bits(c1, c2));
            }
        }
    }
}

TEST_CASE("chord cosines leave the band edges alone") {
    const Stroke s = test::line({0, 0}, {1, 0}, 10);
    const kernels::StrokeSoA soa(s);
    std::vector<double> out(10, -7.0);
    kernels::scalar::chord_cosines(soa.x.data(), soa.y.data(), 10, 3, out.data());
    for (std::size_t l = 0; l < 10; ++l) CHECK(out[l] == (l >= 3 && l <= 6 ? doctest::Approx(1.0) : doctest::Approx(-7.0)));
}
