#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hmp/arith.hpp"
#include "hmp/errors.hpp"
#include "hmp/matrix.hpp"
#include "hmp/periodic.hpp"
#include "hmp/spectral.hpp"

using namespace hmp;

namespace {

std::vector<unsigned long> up_to(unsigned long n, unsigned long skip = 0) {
    std::vector<unsigned long> v;
    for (unsigned long k = 1; k <= n; ++k)
        if (k != skip) v.push_back(k);
    return v;
}

}  // namespace

TEST_CASE("coset system shape") {
    const IntMatrix d{{-2}};
    const CosetSystem s2 = reidemeister_classes(d, 2);
    CHECK(s2.class_count == 3);  // |det(1 - 4)|
    CHECK(s2.diag == std::vector<Int>{Int(3)});
    CHECK(s2.boost_levels == std::vector<unsigned long>{1});
    CHECK(s2.labels().size() == 3);

    const CosetSystem s6 = reidemeister_classes(d, 6);
    CHECK(s6.class_count == 63);
    CHECK(s6.boost_levels == std::vector<unsigned long>{1, 2, 3});
    CHECK(s6.boost_image_sizes == std::vector<Int>{Int(3), Int(3), Int(9)});
    CHECK(s6.boost_matrices[2].str() == "[[-7]]");
    CHECK(s6.labels().size() == 63);

    const CosetSystem r1 = reidemeister_classes(IntMatrix{{0, -1}, {1, 0}}, 1);
    CHECK(r1.class_count == 2);  // det(I - D) = 2
    CHECK(r1.boost_levels.empty());
}

TEST_CASE("coset system failure modes") {
    // D^4 = I for the quarter turn, so level 4 is singular
    CHECK_THROWS_AS(reidemeister_classes(IntMatrix{{0, -1}, {1, 0}}, 4), singular_level_error);
    CHECK_THROWS_AS(reidemeister_classes(IntMatrix{{-2}}, 6, Int(50)), oracle_bound_error);
    CHECK_NOTHROW(reidemeister_classes(IntMatrix{{-2}}, 6, Int(63)));
}

TEST_CASE("label round trip") {
    for (const IntMatrix& d :
         {IntMatrix{{-2}}, IntMatrix{{3, 1}, {1, 2}}, IntMatrix{{-1, 1}, {0, 2}}}) {
        const unsigned long k = d.rows() == 1 ? 6 : 3;
        const CosetSystem sys = reidemeister_classes(d, k);
        const auto all = sys.labels();
        CHECK(Int(static_cast<long>(all.size())) == sys.class_count);
        for (const auto& label : all) CHECK(sys.reduce(sys.rep_vector(label)) == label);
        const auto reps = sys.representatives();
        REQUIRE(reps.size() == all.size());
        for (std::size_t i = 0; i < reps.size(); ++i) CHECK(sys.reduce(reps[i]) == all[i]);
    }
}

TEST_CASE("boost membership") {
    const CosetSystem sys = reidemeister_classes(IntMatrix{{-2}}, 6);
    CHECK(boost_member(sys, 3, {Int(7)}));    // B_3 = [-7]
    CHECK(!boost_member(sys, 3, {Int(1)}));
    CHECK(boost_member(sys, 2, {Int(-21)}));  // B_2 = [21]
    CHECK(!boost_member(sys, 2, {Int(14)}));
    CHECK(boost_member(sys, 1, {Int(42)}));   // B_1 = [-21]
    CHECK_THROWS_AS(boost_member(sys, 4, {Int(0)}), schema_error);
    CHECK_THROWS_AS(boost_member(sys, 6, {Int(0)}), schema_error);
}

TEST_CASE("boost factorization ties the levels together") {
    std::mt19937_64 gen(24601);
    auto rnd = [&] { return Int(-3 + static_cast<long>(gen() % 7)); };
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix d(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) d(i, j) = rnd();
        for (unsigned long k = 2; k <= 6; ++k) {
            const IntMatrix lk = IntMatrix::identity(2) - mat_pow(d, k);
            for (unsigned long l : proper_divisors(k)) {
                const IntMatrix ll = IntMatrix::identity(2) - mat_pow(d, l);
                const IntMatrix bl = geometric_sum_matrix(d, k, l);
                CHECK(bl * ll == lk);
                CHECK(det(bl) * det(ll) == det(lk));
                ++checked;
            }
        }
    }
    CHECK(checked > 400);
}

TEST_CASE("level results frozen") {
    const LevelResult expanding = np_level(IntMatrix{{2}}, 2);
    CHECK(expanding.status == LevelStatus::ok);
    CHECK(expanding.class_count == 3);
    CHECK(expanding.covered == 1);
    CHECK(expanding.np_nonzero);

    const LevelResult flipped = np_level(IntMatrix{{-2}}, 2);
    CHECK(flipped.class_count == 3);
    CHECK(flipped.covered == 3);  // B_1 = [-1] is onto
    CHECK(!flipped.np_nonzero);

    const LevelResult six = np_level(IntMatrix{{-2}}, 6);
    CHECK(six.class_count == 63);
    CHECK(six.covered == 9);  // |im B_2| + |im B_3| - |intersection| = 3 + 9 - 3
    CHECK(six.np_nonzero);

    const LevelResult base = np_level(IntMatrix{{-2}}, 1);
    CHECK(base.covered == 0);
    CHECK(base.np_nonzero);

    const LevelResult sing = np_level(IntMatrix{{0, -1}, {1, 0}}, 4);
    CHECK(sing.status == LevelStatus::singular);
    CHECK(sing.class_count == 0);
    CHECK(!sing.np_nonzero);

    CHECK(np_nonzero(IntMatrix{{-2}}, 6));
    CHECK(!np_nonzero(IntMatrix{{-2}}, 2));
}

TEST_CASE("minimal period sets frozen") {
    CHECK(hper_enumerate(IntMatrix{{2}}, 30) == up_to(30));
    CHECK(hper_enumerate(IntMatrix{{-2}}, 30) == up_to(30, 2));
}

TEST_CASE("covered count matches brute-force coset enumeration") {
    const IntMatrix pool[] = {IntMatrix{{-2}}, IntMatrix{{2}}, IntMatrix{{3, 1}, {1, 2}},
                              IntMatrix{{-1, 1}, {0, 2}}};
    int enumerated = 0;
    for (const IntMatrix& d : pool) {
        for (unsigned long k = 1; k <= 10; ++k) {
            const LevelResult fast = np_level(d, k);
            if (fast.status == LevelStatus::singular) continue;
            if (fast.class_count > 2000) continue;
            const CosetSystem sys = reidemeister_classes(d, k);
            Int covered = 0;
            for (const auto& rep : sys.representatives()) {
                bool hit = false;
                for (unsigned long l : sys.boost_levels)
                    if (boost_member(sys, l, rep)) {
                        hit = true;
                        break;
                    }
                if (hit) covered += 1;
            }
            CHECK(covered == fast.covered);
            CHECK((covered < fast.class_count) == fast.np_nonzero);
            ++enumerated;
        }
    }
    CHECK(enumerated >= 20);
}

TEST_CASE("parallel level sweep is deterministic") {
    const IntMatrix d{{3, 1}, {1, 2}};
    const auto serial = hper_levels(d, 12, 1);
    const auto parallel = hper_levels(d, 12, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].k == parallel[i].k);
        CHECK(serial[i].status == parallel[i].status);
        CHECK(serial[i].class_count == parallel[i].class_count);
        CHECK(serial[i].covered == parallel[i].covered);
        CHECK(serial[i].np_nonzero == parallel[i].np_nonzero);
    }
    CHECK(hper_enumerate(d, 12, 1) == hper_enumerate(d, 12, 3));
}

TEST_CASE("boost index predicate") {
    CHECK(boost_index_nontrivial(IntMatrix{{2}}, 2, 1));    // 3 / 1
    CHECK(!boost_index_nontrivial(IntMatrix{{-2}}, 2, 1));  // 3 / 3
    CHECK(boost_index_nontrivial(IntMatrix{{-2}}, 6, 2));   // 63 / 3
    CHECK(boost_index_nontrivial(IntMatrix{{-2}}, 6, 3));   // 63 / 9
    CHECK_THROWS_AS(boost_index_nontrivial(IntMatrix{{2}}, 4, 3), schema_error);
    CHECK_THROWS_AS(boost_index_nontrivial(IntMatrix{{2}}, 4, 4), schema_error);
    CHECK_THROWS_AS(boost_index_nontrivial(IntMatrix{{2}}, 4, 0), schema_error);
    // level 2 of diag(-1, 2) is singular
    CHECK_THROWS_AS(boost_index_nontrivial(IntMatrix{{-1, 0}, {0, 2}}, 4, 2),
                    singular_level_error);
}

TEST_CASE("class count domination") {
    CHECK(class_count_dominates(IntMatrix{{2}}, 6));    // 63 > 1 + 3 + 7
    CHECK(!class_count_dominates(IntMatrix{{-2}}, 2));  // 3 > 3 fails
    CHECK(!class_count_dominates(IntMatrix{{-1, 0}, {0, 2}}, 2));  // singular level
    CHECK(class_count_dominates(IntMatrix{{2}}, 1));    // empty sum, 1 > 0
}

TEST_CASE("empirical thresholds frozen") {
    CHECK(empirical_threshold(IntMatrix{{2}}, 50, ThresholdKind::boost_index) == 1);
    CHECK(empirical_threshold(IntMatrix{{2}}, 50, ThresholdKind::domination) == 1);
    const IntMatrix mixed{{-1, 0}, {0, 2}};
    CHECK(empirical_threshold(mixed, 50, ThresholdKind::boost_index) == 2);
    CHECK(empirical_threshold(mixed, 50, ThresholdKind::domination) == 2);
    // conditions (1)/(2) are prerequisites
    CHECK_THROWS_AS(empirical_threshold(IntMatrix{{1}}, 50, ThresholdKind::boost_index),
                    schema_error);
    CHECK_THROWS_AS(
        empirical_threshold(IntMatrix{{0, -1}, {1, 0}}, 50, ThresholdKind::domination),
        schema_error);
}

TEST_CASE("guaranteed periods") {
    const SpectralReport ok = check_conditions(IntMatrix{{2}});
    CHECK(period_guaranteed(ok, 2, 1));
    CHECK(period_guaranteed(ok, 2, 3));
    CHECK(!period_guaranteed(ok, 2, 6));
    CHECK(period_guaranteed(ok, 2, 35));
    CHECK(!period_guaranteed(ok, 4, 9));
    CHECK(period_guaranteed(ok, 4, 121));
    const SpectralReport bad = check_conditions(IntMatrix{{1}});
    CHECK_THROWS_AS(period_guaranteed(bad, 2, 3), schema_error);
}

TEST_CASE("level result json") {
    const Json ok = level_result_to_json(np_level(IntMatrix{{-2}}, 6));
    CHECK(ok["k"].get<unsigned long>() == 6);
    CHECK(ok["status"].get<std::string>() == "ok");
    CHECK(ok["class_count"].get<long>() == 63);
    CHECK(ok["covered"].get<long>() == 9);
    CHECK(ok["np_nonzero"].get<bool>());
    const Json sing = level_result_to_json(np_level(IntMatrix{{0, -1}, {1, 0}}, 4));
    CHECK(sing["status"].get<std::string>() == "singular");
    CHECK(!sing["np_nonzero"].get<bool>());
}
