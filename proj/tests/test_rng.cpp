#include <doctest.h>

#include <cmath>
#include <vector>

#include "codedloc/rng.hpp"

using codedloc::Rng;

TEST_CASE("identical seeds give identical streams") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("derive does not depend on parent draw position") {
    Rng a(7);
    Rng b(7);
    b.next_u64();
    b.next_u64();
    Rng ca = a.derive(3, 5);
    Rng cb = b.derive(3, 5);
    for (int i = 0; i < 20; ++i) CHECK(ca.next_u64() == cb.next_u64());
}

TEST_CASE("sibling streams differ") {
    Rng root(1);
    Rng a = root.derive(0);
    Rng b = root.derive(1);
    int same = 0;
    for (int i = 0; i < 64; ++i) same += a.next_u64() == b.next_u64();
    CHECK(same == 0);
}

TEST_CASE("uniform lies in [0,1) with mean 1/2") {
    Rng rng(9);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("normal has zero mean, unit variance") {
    Rng rng(11);
    double sum = 0.0, sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double z = rng.normal();
        sum += z;
        sq += z * z;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sq / n - 1.0) < 0.02);
}

TEST_CASE("rayleigh second moment is 2*scale^2") {
    Rng rng(13);
    double scale = std::sqrt(0.5);  // E[h^2] = 1
    double sq = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double h = rng.rayleigh(scale);
        REQUIRE(h >= 0.0);
        sq += h * h;
    }
    CHECK(sq / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("uniform_below stays in range and is roughly uniform") {
    Rng rng(17);
    std::vector<int> counts(7, 0);
    const int n = 70000;
    for (int i = 0; i < n; ++i) {
        auto v = rng.uniform_below(7);
        REQUIRE(v < 7);
        ++counts[v];
    }
    for (int c : counts) CHECK(std::abs(c - n / 7) < 600);
}
