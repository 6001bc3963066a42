#include "arthur/errors.hpp"
#include "arthur/lfactors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace arthur;

namespace {

RootDatum datum(Family f, int n) { return build_root_datum({f, n}); }
QMonomial qp(std::int64_t k, std::int64_t m = 1) { return QMonomial::q_power(Rational(k, m)); }

// Factor by factor, written independently of inverse_vanishes_at:
// 1 - zeta q^{a-s} = 0 for formal q > 1 iff zeta = 1 and a = s.
bool brute_vanishes(const std::vector<QMonomial>& eig, const Rational& s)
{
    bool any = false;
    for (const auto& e : eig) {
        bool unit_is_one = e.unit().numerator() == 0;
        bool exponent_hits = (e.exponent() - s).numerator() == 0;
        any = any || (unit_is_one && exponent_hits);
    }
    return any;
}

} // namespace

TEST_CASE("grade_nilradical")
{
    auto a2 = datum(Family::A, 2);
    CHECK(grade_nilradical(a2, LeviSubset::all(2)).empty());
    auto g = grade_nilradical(a2, LeviSubset{});
    REQUIRE(g.levels.size() == 2);
    CHECK(g.levels[1] == std::vector<Root>{Root({1, 0}), Root({0, 1})});
    CHECK(g.levels[2] == std::vector<Root>{Root({1, 1})});
    auto g1 = grade_nilradical(a2, LeviSubset({0}));
    REQUIRE(g1.levels.size() == 1);
    CHECK(g1.levels[1] == std::vector<Root>{Root({0, 1}), Root({1, 1})});
}

TEST_CASE("grading covers the nilradical exactly once")
{
    for (auto spec : {CartanSpec{Family::B, 3}, CartanSpec{Family::D, 4}, CartanSpec{Family::G, 2}}) {
        auto d = build_root_datum(spec);
        for (int mask = 0; mask < (1 << d.rank()); ++mask) {
            std::vector<int> th;
            for (int i = 0; i < d.rank(); ++i)
                if (mask & (1 << i))
                    th.push_back(i);
            LeviSubset theta(th);
            auto g = grade_nilradical(d, theta);
            auto all = g.all_roots();
            auto nil = levi_and_nilradical(d, theta).nilradical_roots;
            std::sort(all.begin(), all.end());
            std::sort(nil.begin(), nil.end());
            CHECK(all == nil);
            for (const auto& [level, roots] : g.levels)
                CHECK(level >= 1);
        }
    }
}

TEST_CASE("l_factor")
{
    auto a1 = datum(Family::A, 1);
    auto empty = l_factor(grade_nilradical(a1, LeviSubset::all(1)), UnramifiedParameter::trivial(a1), Orientation::R);
    CHECK(empty.dimension() == 0);

    UnramifiedParameter p(a1, {qp(1)});
    auto g = grade_nilradical(a1, LeviSubset{});
    CHECK(l_factor(g, p, Orientation::RTilde).eigenvalues == std::vector<QMonomial>{qp(1)});
    CHECK(l_factor(g, p, Orientation::R).eigenvalues == std::vector<QMonomial>{qp(-1)});

    auto a2 = datum(Family::A, 2);
    UnramifiedParameter p2(a2, {qp(1, 2), qp(1, 2)});
    auto l2 = l_factor(grade_nilradical(a2, LeviSubset{}), p2, Orientation::RTilde);
    auto eig = l2.eigenvalues;
    std::sort(eig.begin(), eig.end(), [](const QMonomial& x, const QMonomial& y) { return x.exponent() < y.exponent(); });
    CHECK(eig == std::vector<QMonomial>{qp(1, 2), qp(1, 2), qp(1)});

    auto b2 = datum(Family::B, 2);
    CHECK_THROWS_AS(l_factor(grade_nilradical(b2, LeviSubset{}), p, Orientation::R), ValidationError);
}

TEST_CASE("l_factor is the product of its levels")
{
    auto d = datum(Family::C, 3);
    UnramifiedParameter p(d, {QMonomial(Rational(1, 4), 1), qp(1, 2), QMonomial(Rational(1, 2), Rational(3, 2))});
    for (auto theta : {LeviSubset{}, LeviSubset({1}), LeviSubset({0, 2})}) {
        auto g = grade_nilradical(d, theta);
        auto whole = l_factor(g, p, Orientation::RTilde);
        std::vector<QMonomial> joined;
        for (const auto& [level, roots] : g.levels) {
            auto part = l_factor_level(g, level, p, Orientation::RTilde);
            joined.insert(joined.end(), part.eigenvalues.begin(), part.eigenvalues.end());
        }
        CHECK(joined == whole.eigenvalues);
    }
}

TEST_CASE("inverse_vanishes_at")
{
    LocalLFactor q1{{qp(1)}, {Root({1})}, Orientation::RTilde};
    auto v = inverse_vanishes_at(q1, 1);
    CHECK(v.vanishes);
    CHECK(v.witnesses == std::vector<std::size_t>{0});

    LocalLFactor tempered{{QMonomial::root_of_unity(Rational(1, 3)), QMonomial::root_of_unity(Rational(1, 2))},
                          {Root({1, 0}), Root({0, 1})},
                          Orientation::RTilde};
    CHECK(!inverse_vanishes_at(tempered, 1).vanishes);

    LocalLFactor minus_q{{QMonomial(Rational(1, 2), 1)}, {Root({1})}, Orientation::RTilde};
    CHECK(!inverse_vanishes_at(minus_q, 1).vanishes);
}

TEST_CASE("inverse_vanishes_at matches the factor-by-factor check")
{
    std::vector<QMonomial> pool;
    for (auto u : {Rational(0), Rational(1, 4), Rational(1, 2)})
        for (auto a : {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(3, 2)})
            pool.emplace_back(u, a);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
            LocalLFactor l{{pool[i], pool[j]}, {Root({1, 0}), Root({0, 1})}, Orientation::R};
            for (auto s : {Rational(-1), Rational(0), Rational(1, 2), Rational(1)})
                CHECK(inverse_vanishes_at(l, s).vanishes == brute_vanishes(l.eigenvalues, s));
        }
}

TEST_CASE("pole_locations")
{
    LocalLFactor tempered{{QMonomial::root_of_unity(Rational(1, 3))}, {Root({1})}, Orientation::R};
    CHECK(pole_locations(tempered).empty());
    LocalLFactor q1{{qp(1)}, {Root({1})}, Orientation::R};
    CHECK(pole_locations(q1) == std::vector<Rational>{1});
    LocalLFactor halves{{qp(1, 2), qp(1, 2)}, {Root({1, 0}), Root({0, 1})}, Orientation::R};
    CHECK(pole_locations(halves) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("local_coefficient_ratio in rank one")
{
    auto a1 = datum(Family::A, 1);
    // exponent s0 in coroot coordinates evaluates a1 to q^{2 s0}
    auto at = [&](Rational s0) { return UnramifiedParameter(a1, {QMonomial::q_power(s0 * 2)}); };
    CHECK(local_coefficient_ratio(a1, LeviSubset{}, at(Rational(1, 4))).verdict == RatioClass::Nonzero);
    auto st = local_coefficient_ratio(a1, LeviSubset{}, at(Rational(1, 2)));
    CHECK(st.verdict == RatioClass::Zero);
    CHECK(st.denominator_vanishing.witnesses == std::vector<std::size_t>{0});
    CHECK(local_coefficient_ratio(a1, LeviSubset::all(1), UnramifiedParameter::trivial(a1)).verdict ==
          RatioClass::Nonzero);
    CHECK_THROWS_AS(local_coefficient_ratio(a1, LeviSubset{}, UnramifiedParameter::trivial(a1)), ValidationError);
    CHECK_THROWS_AS(local_coefficient_ratio(a1, LeviSubset{}, at(Rational(-1, 2))), ValidationError);
}
