#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "deltahall/quiver.hpp"

using namespace deltahall;

namespace {

const Quiver a2{2, {{0, 1}}};
const Quiver isolated{2, {}};
const Quiver kronecker{2, {{0, 1}, {0, 1}}};

K0Class k0(std::vector<long long> e) { return K0Class(std::move(e)); }

}  // namespace

TEST_CASE("construction rejects bad quivers") {
    CHECK_THROWS_AS(Quiver(2, {{0, 0}}), config_error);
    CHECK_THROWS_AS(Quiver(2, {{0, 2}}), config_error);
    CHECK_THROWS_AS(Quiver(0, {}), config_error);
}

TEST_CASE("cartan matrix") {
    auto c = a2.cartan_matrix();
    CHECK(c[0][0] == 2);
    CHECK(c[0][1] == -1);
    CHECK(c[1][0] == -1);

    CHECK(isolated.cartan_matrix()[0][1] == 0);
    CHECK(kronecker.cartan_matrix()[0][1] == -2);
}

TEST_CASE("oriented cycles") {
    CHECK(!a2.has_oriented_cycle());
    CHECK(!kronecker.has_oriented_cycle());
    CHECK(Quiver(2, {{0, 1}, {1, 0}}).has_oriented_cycle());
    CHECK(Quiver(3, {{0, 1}, {1, 2}, {2, 0}}).has_oriented_cycle());
}

TEST_CASE("euler form on unit classes") {
    CHECK(euler_form(a2, k0({1, 0}), k0({0, 1})) == -1);
    CHECK(euler_form(a2, k0({0, 1}), k0({1, 0})) == 0);
    CHECK(euler_form(a2, k0({1, 0}), k0({1, 0})) == 1);
    CHECK(euler_form(a2, k0({0, 1}), k0({0, 1})) == 1);
    CHECK_THROWS_AS(euler_form(a2, k0({1}), k0({0, 1})),
                    std::invalid_argument);
}

TEST_CASE("symmetric form equals cartan contraction") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> entry(-5, 5);
    for (const Quiver* qv : {&a2, &isolated, &kronecker}) {
        auto c = qv->cartan_matrix();
        int n = qv->vertex_count();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(sym_form(*qv, K0Class::unit(n, i),
                               K0Class::unit(n, j)) == c[i][j]);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<long long> d(n), e(n);
            for (auto& v : d) v = entry(rng);
            for (auto& v : e) v = entry(rng);
            K0Class x(d), y(e);
            CHECK(sym_form(*qv, x, y) == sym_form(*qv, y, x));
            long long via_cartan = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    via_cartan += d[i] * c[i][j] * e[j];
            CHECK(sym_form(*qv, x, y) == via_cartan);
        }
    }
}

TEST_CASE("euler form bilinearity") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long long> entry(-4, 4);
    int n = 2;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long long> a(n), b(n), c(n);
        for (auto& v : a) v = entry(rng);
        for (auto& v : b) v = entry(rng);
        for (auto& v : c) v = entry(rng);
        K0Class x(a), y(b), z(c);
        CHECK(euler_form(a2, x + y, z) ==
              euler_form(a2, x, z) + euler_form(a2, y, z));
        CHECK(euler_form(a2, x, y + z) ==
              euler_form(a2, x, y) + euler_form(a2, x, z));
    }
}

TEST_CASE("half shift") {
    DimVector s({1}), s2({2}), z({0});
    CHECK(half_shift(s, s, s2) == K0Class::zero(1));
    CHECK(half_shift(s, s, z) == K0Class::unit(1, 0));

    DimVector s1({1, 0}), sv2({0, 1}), p1({1, 1});
    CHECK(half_shift(s1, sv2, p1) == K0Class::zero(2));

    CHECK_THROWS_AS(half_shift(s, z, z), std::logic_error);
}

TEST_CASE("half K0 classes") {
    HalfK0Class h = HalfK0Class::half_of(k0({1, 0}));
    CHECK(!h.is_integral());
    CHECK_THROWS_AS(h.to_k0(), std::logic_error);
    CHECK((h + h).is_integral());
    CHECK((h + h).to_k0() == k0({1, 0}));
    CHECK(HalfK0Class::of(k0({2, -1})).to_k0() == k0({2, -1}));
}

TEST_CASE("dim vectors") {
    DimVector d({1, 2});
    CHECK(d.total() == 3);
    CHECK((d + DimVector({2, 0})) == DimVector({3, 2}));
    CHECK(d.dominates(DimVector({1, 1})));
    CHECK(!d.dominates(DimVector({2, 0})));
    CHECK_THROWS_AS(DimVector({-1, 0}), std::invalid_argument);
}
